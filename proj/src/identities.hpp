#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "growth.hpp"
#include "set_partition.hpp"
#include "tableaux.hpp"

namespace vt {

// Rows bottom-to-top: n rows of length n+k, then n+k-1 down to n.
cell_arrangement staircase_arrangement(int n, int k);

// Single conversion site between the triangular region (rows/columns
// n+1..n+k of the staircase) and global coordinates. A successor pair
// (a, b), a < b, sits at the region's row b counted from the top and
// column a counted from the left.
cell delta_pair_to_global(int n, int k, std::pair<int, int> pair);
std::pair<int, int> global_to_delta_pair(int n, int k, const cell& x);

// Boundary split (3.1a)-(3.1c): growing prefix of n+1 labels, the middle
// vacillating tableau of length k, shrinking suffix of n+1 labels.
struct boundary_decomposition {
    std::vector<partition> prefix;
    vacillating_tableau middle;
    std::vector<partition> suffix;
};

boundary_decomposition decompose_boundary(int n, int k, const boundary_word& word);
boundary_word compose_boundary(int n, int k, const boundary_decomposition& d);

// ---- identity (1.1): sequences in [n]^k <-> (SYT, vactab to (n)) ----

filling seq_to_filling_11(int n, int k, const std::vector<int>& seq);
std::vector<int> filling_to_seq_11(const filling& f);
std::pair<syt_chain, vacillating_tableau> filling_to_pair_11(const filling& f);
std::pair<syt_chain, vacillating_tableau> seq_to_pair_11(int n, int k,
                                                         const std::vector<int>& seq);
std::vector<int> pair_to_seq_11(int n, int k, const syt_chain& t,
                                const vacillating_tableau& v);

// ---- identity (1.4): same with vactabs ending at any mu of n ----

filling seq_to_filling_14(int n, int k, const partition& mu, const std::vector<int>& seq);
std::pair<syt_chain, vacillating_tableau> seq_to_pair_14(int n, int k, const partition& mu,
                                                         const std::vector<int>& seq);
std::vector<int> pair_to_seq_14(int n, int k, const partition& mu, const syt_chain& t,
                                const vacillating_tableau& v);

// ---- identity (1.3): set partitions with <= n blocks <-> vactabs (n)->(n) ----

filling sp_to_filling_13(int n, int k, const set_partition& pi);
vacillating_tableau sp_to_vactab_13(int n, int k, const set_partition& pi);
set_partition vactab_to_sp_13(int n, int k, const vacillating_tableau& v);

// ---- identity (1.5): set partitions with n-1 or n blocks <-> vactabs (n)->(1^n) ----
// The boundary naturally reads (1^n) -> (n); the public map returns the
// reversal so the endpoints match m_(n)^(1^n)(k).

filling sp_to_filling_15(int n, int k, const set_partition& pi);
vacillating_tableau sp_to_vactab_15(int n, int k, const set_partition& pi);
set_partition vactab_to_sp_15(int n, int k, const vacillating_tableau& v);

// ---- identity (1.6): fillings with the non-extending chain properties ----

std::vector<filling> enumerate_fillings_16(int n, int k);

// which_case 1: crosses at (1,2), (2,1) plus a diagonal; pi has 1..n-2
// blocks; a = b = 1. which_case 2: diagonal from (2,2); pi has 1..n-1
// blocks; a (resp. b) is the 1-based rank of the column-1 (row-1) special
// cross among the free triangle rows (columns). which_case 3: empty
// bottom square; pi has n blocks; a, b are those ranks minus one (rank 1
// would extend the chain), so both lie in 1..n-1.
struct classification_16 {
    int which_case = 0;
    set_partition pi;
    int a = 1;
    int b = 1;
};

classification_16 classify_16(const filling& f);
filling encode_16(int n, int k, const classification_16& c);
vacillating_tableau filling_to_vactab_16(const filling& f);
filling vactab_to_filling_16(int n, int k, const vacillating_tableau& v);

// ---- Theorem 3: limiting truncated middles ----

// Middle of the (1.1) pipeline with every entry truncated (first part
// dropped). Steps may repeat a shape, so the result is a plain sequence.
// Requires n >= max over t of seq[t] + t - 1.
std::vector<partition> limiting_vactab(int k, const std::vector<int>& seq, int n);

// ---- identity verification ----

struct identity_report {
    std::string id;
    int n = 0;
    int k = 0;
    std::optional<partition> mu;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool ok = false;
    std::string detail;  // one line, e.g. "41 = 41 ok"
};

// Computes both sides independently (closed/Stirling side vs enumeration
// side). For 1.4 without mu, all mu of n are checked and the values
// reported are the sums over mu.
identity_report verify_identity(const std::string& id, int n, int k,
                                const std::optional<partition>& mu = std::nullopt);

}  // namespace vt
