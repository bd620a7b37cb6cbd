#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partition.hpp"

namespace vt {

// Standard Young tableau as its saturated growth chain empty = l0 c l1 c
// ... c ln, one cell added per step.
struct syt_chain {
    std::vector<partition> chain;

    const partition& shape() const { return chain.back(); }
    bool operator==(const syt_chain&) const = default;
    auto operator<=>(const syt_chain&) const = default;
};

// Alternating shrink/grow sequence l0 > l1 < l2 > ... < l2K, one cell
// changed per step; 2K+1 entries.
struct vacillating_tableau {
    std::vector<partition> seq;

    int length() const { return static_cast<int>(seq.size()) / 2; }
    const partition& from() const { return seq.front(); }
    const partition& to() const { return seq.back(); }
    bool operator==(const vacillating_tableau&) const = default;
    auto operator<=>(const vacillating_tableau&) const = default;
};

void validate_syt_chain(const syt_chain& t);            // errc::bad_shape
void validate_vactab(const vacillating_tableau& v);     // errc::bad_shape

// All saturated chains from empty to lambda, ordered lexicographically by
// the sequence of growth rows; the count is f^lambda.
std::vector<syt_chain> enumerate_syt(const partition& lambda);
std::uint64_t count_syt(const partition& lambda);

// Row-wise entry grid: entry i sits in the row grown at step i.
std::vector<std::vector<int>> syt_to_tableau(const syt_chain& t);
syt_chain tableau_to_syt(const std::vector<std::vector<int>>& rows);

// All vacillating tableaux lambda -> mu of length k, ordered
// lexicographically by the sequence of edited rows; the count is
// m^lambda_mu(k). Requires size(lambda) == size(mu).
std::vector<vacillating_tableau> enumerate_vactab(const partition& lambda, const partition& mu,
                                                  int k);
std::uint64_t count_vactab(const partition& lambda, const partition& mu, int k);

vacillating_tableau reverse_vactab(const vacillating_tableau& v);

// Cuts a length-2k tableau (n) -> (n) halfway; both halves run from (n) to
// the common middle shape, the second one reversed.
std::pair<vacillating_tableau, vacillating_tableau> split_vactab(const vacillating_tableau& v);
vacillating_tableau glue_vactab(const vacillating_tableau& first,
                                const vacillating_tableau& second);

// "321>32<42>41<51>5<6": compact partition strings joined alternately by
// '>' and '<'.
std::string format_vactab(const vacillating_tableau& v);
vacillating_tableau parse_vactab(const std::string& text);

std::string format_syt(const syt_chain& t);  // "1 2 3/4 5/6"
syt_chain parse_syt(const std::string& text);

}  // namespace vt
