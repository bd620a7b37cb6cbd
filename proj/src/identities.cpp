#include "identities.hpp"

#include <algorithm>
#include <set>

namespace vt {

cell_arrangement staircase_arrangement(int n, int k) {
    if (n < 1 || k < 0) raise(errc::bad_params, "need n >= 1 and k >= 0");
    std::vector<int> rows(static_cast<size_t>(n), n + k);
    for (int j = 1; j <= k; ++j) rows.push_back(n + k - j);
    return cell_arrangement(std::move(rows));
}

cell delta_pair_to_global(int n, int k, std::pair<int, int> pair) {
    auto [a, b] = pair;
    if (a < 1 || a >= b || b > k) raise(errc::bad_params, "need 1 <= a < b <= k");
    return {n + k + 1 - b, n + a};
}

std::pair<int, int> global_to_delta_pair(int n, int k, const cell& x) {
    int a = x.col - n;
    int b = n + k + 1 - x.row;
    if (a < 1 || a >= b || b > k) raise(errc::bad_params, "cell is not in the triangular region");
    return {a, b};
}

namespace {

std::pair<int, int> staircase_dims(const cell_arrangement& arr) {
    int rows = arr.rows();
    int n = arr.row_length(rows);
    int k = rows - n;
    if (k < 0 || !(arr == staircase_arrangement(n, k)))
        raise(errc::bad_shape, "not a staircase arrangement");
    return {n, k};
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Column of the unique cross in `row`; 0 when the row is empty.
int cross_col(const filling& f, int row) {
    for (const cell& x : f.crosses())
        if (x.row == row) return x.col;
    return 0;
}

int cross_row(const filling& f, int col) {
    for (const cell& x : f.crosses())
        if (x.col == col) return x.row;
    return 0;
}

void require_one_per_row_and_col(const filling& f, int n, int k, errc code) {
    if (static_cast<int>(f.crosses().size()) != n + k)
        raise(code, "need exactly one cross in each row and column");
}

// Cols of the crosses in rows lo..hi must strictly increase (NE-chain).
bool rows_form_ne_chain(const filling& f, int lo, int hi) {
    int prev = 0;
    for (int r = lo; r <= hi; ++r) {
        int c = cross_col(f, r);
        if (c == 0 || c <= prev) return false;
        prev = c;
    }
    return true;
}

bool cols_form_ne_chain(const filling& f, int lo, int hi) {
    int prev = 0;
    for (int c = lo; c <= hi; ++c) {
        int r = cross_row(f, c);
        if (r == 0 || r <= prev) return false;
        prev = r;
    }
    return true;
}

bool cols_form_se_chain(const filling& f, int lo, int hi) {
    int prev = 1 << 30;
    for (int c = lo; c <= hi; ++c) {
        int r = cross_row(f, c);
        if (r == 0 || r >= prev) return false;
        prev = r;
    }
    return true;
}

// (n) > (n-1) > ... > empty, and more generally mu unfilled one cell at a
// time from the last nonempty row upward.
std::vector<partition> descending_suffix(const partition& mu) {
    std::vector<partition> out{mu};
    partition cur = mu;
    while (!cur.empty()) {
        cur = remove_cell(cur, cur.rows());
        out.push_back(cur);
    }
    return out;
}

std::vector<partition> prefix_13(int n) {
    std::vector<partition> out{partition()};
    for (int j = 1; j <= n; ++j) out.push_back(partition::single_row(j));
    return out;
}

std::vector<partition> prefix_15(int n) {
    std::vector<partition> out{partition()};
    for (int j = 1; j <= n; ++j) out.push_back(partition::single_col(j));
    return out;
}

std::vector<partition> prefix_16(int n) {
    std::vector<partition> out{partition(), partition({1})};
    for (int j = 1; j <= n - 1; ++j) out.push_back(partition({j, 1}));
    return out;
}

std::vector<partition> suffix_16(int n) {
    std::vector<partition> out;
    for (int j = n - 1; j >= 1; --j) out.push_back(partition({j, 1}));
    out.push_back(partition({1}));
    out.push_back(partition());
    return out;
}

}  // namespace

boundary_decomposition decompose_boundary(int n, int k, const boundary_word& word) {
    if (static_cast<int>(word.labels.size()) != 2 * (n + k) + 1)
        raise(errc::invalid_boundary, "boundary has the wrong number of labels");
    boundary_decomposition d;
    d.prefix.assign(word.labels.begin(), word.labels.begin() + n + 1);
    d.middle.seq.assign(word.labels.begin() + n, word.labels.begin() + n + 2 * k + 1);
    d.suffix.assign(word.labels.begin() + n + 2 * k, word.labels.end());
    for (int i = 0; i < n; ++i)
        if (d.prefix[i + 1].size() != d.prefix[i].size() + 1 ||
            !diff_by_one(d.prefix[i], d.prefix[i + 1]))
            raise(errc::property_violation, "prefix must grow by one cell per step");
    for (int i = 0; i < n; ++i)
        if (d.suffix[i + 1].size() + 1 != d.suffix[i].size() ||
            !diff_by_one(d.suffix[i], d.suffix[i + 1]))
            raise(errc::property_violation, "suffix must shrink by one cell per step");
    validate_vactab(d.middle);
    return d;
}

boundary_word compose_boundary(int n, int k, const boundary_decomposition& d) {
    if (static_cast<int>(d.prefix.size()) != n + 1 ||
        static_cast<int>(d.suffix.size()) != n + 1 || d.middle.length() != k)
        raise(errc::invalid_boundary, "decomposition pieces have the wrong lengths");
    if (d.prefix.back() != d.middle.from() || d.middle.to() != d.suffix.front())
        raise(errc::invalid_boundary, "decomposition pieces do not join");
    boundary_word w;
    w.labels = d.prefix;
    w.labels.insert(w.labels.end(), d.middle.seq.begin() + 1, d.middle.seq.end());
    w.labels.insert(w.labels.end(), d.suffix.begin() + 1, d.suffix.end());
    w.steps = boundary_steps(staircase_arrangement(n, k));
    return w;
}

// ---- (1.1) ----

namespace {

void validate_family_11(const filling& f, int n, int k) {
    require_one_per_row_and_col(f, n, k, errc::property_violation);
    if (!rows_form_ne_chain(f, 1, n))
        raise(errc::property_violation, "bottom rows must form a NE-chain");
}

// Ranks of the top-k-row crosses among the still-unoccupied columns,
// reading top row first.
std::vector<int> read_top_sequence(const filling& f, int n, int k) {
    std::set<int> used;
    std::vector<int> seq;
    for (int t = 1; t <= k; ++t) {
        int row = n + k + 1 - t;
        int col = cross_col(f, row);
        if (col == 0) raise(errc::property_violation, "missing cross in a staircase row");
        int rank = 0;
        for (int c = 1; c <= col; ++c)
            if (!used.count(c)) ++rank;
        seq.push_back(rank);
        used.insert(col);
    }
    return seq;
}

}  // namespace

filling seq_to_filling_11(int n, int k, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != k) raise(errc::bad_params, "need k sequence entries");
    std::vector<cell> crosses;
    std::set<int> used;
    for (int t = 1; t <= k; ++t) {
        int v = seq[static_cast<size_t>(t) - 1];
        if (v < 1 || v > n)
            raise(errc::out_of_range, "sequence entries must lie in 1.." + std::to_string(n));
        int len = n + t - 1;
        int col = 0, rank = 0;
        for (int c = 1; c <= len && col == 0; ++c)
            if (!used.count(c) && ++rank == v) col = c;
        used.insert(col);
        crosses.push_back({n + k + 1 - t, col});
    }
    int row = 1;
    for (int col = 1; col <= n + k; ++col)
        if (!used.count(col)) crosses.push_back({row++, col});
    return filling(staircase_arrangement(n, k), std::move(crosses));
}

std::vector<int> filling_to_seq_11(const filling& f) {
    auto [n, k] = staircase_dims(f.arrangement());
    validate_family_11(f, n, k);
    return read_top_sequence(f, n, k);
}

std::pair<syt_chain, vacillating_tableau> filling_to_pair_11(const filling& f) {
    auto [n, k] = staircase_dims(f.arrangement());
    validate_family_11(f, n, k);
    boundary_decomposition d = decompose_boundary(n, k, read_boundary(forward_growth(f)));
    if (d.suffix != descending_suffix(partition::single_row(n)))
        raise(errc::property_violation, "boundary suffix is not the forced single-row descent");
    return {syt_chain{d.prefix}, d.middle};
}

std::pair<syt_chain, vacillating_tableau> seq_to_pair_11(int n, int k,
                                                         const std::vector<int>& seq) {
    return filling_to_pair_11(seq_to_filling_11(n, k, seq));
}

std::vector<int> pair_to_seq_11(int n, int k, const syt_chain& t, const vacillating_tableau& v) {
    validate_syt_chain(t);
    validate_vactab(v);
    if (t.shape().size() != n || v.from() != t.shape() || v.length() != k ||
        v.to() != partition::single_row(n))
        raise(errc::shape_mismatch, "pair does not match a (1.1) boundary");
    boundary_decomposition d{t.chain, v, descending_suffix(partition::single_row(n))};
    filling f = backward_growth(staircase_arrangement(n, k), compose_boundary(n, k, d));
    return read_top_sequence(f, n, k);
}

// ---- (1.4) ----

filling seq_to_filling_14(int n, int k, const partition& mu, const std::vector<int>& seq) {
    if (mu.size() != n) raise(errc::bad_shape, "mu must be a partition of n");
    if (static_cast<int>(seq.size()) != k) raise(errc::bad_params, "need k sequence entries");
    filling base = seq_to_filling_11(n, k, seq);
    std::vector<cell> crosses;
    std::vector<int> remaining;
    for (const cell& x : base.crosses()) {
        if (x.row > n)
            crosses.push_back(x);
        else
            remaining.push_back(x.col);
    }
    std::sort(remaining.begin(), remaining.end());
    // Segment s takes the largest still-free columns: its NE-chain sits
    // strictly right of every later (higher) segment.
    int row_start = 1;
    size_t pos = remaining.size();
    for (int s = 1; s <= mu.rows(); ++s) {
        int cnt = mu.part(s);
        pos -= static_cast<size_t>(cnt);
        for (int i = 0; i < cnt; ++i)
            crosses.push_back({row_start + i, remaining[pos + static_cast<size_t>(i)]});
        row_start += cnt;
    }
    return filling(staircase_arrangement(n, k), std::move(crosses));
}

std::pair<syt_chain, vacillating_tableau> seq_to_pair_14(int n, int k, const partition& mu,
                                                         const std::vector<int>& seq) {
    filling f = seq_to_filling_14(n, k, mu, seq);
    boundary_decomposition d = decompose_boundary(n, k, read_boundary(forward_growth(f)));
    if (d.suffix != descending_suffix(mu))
        raise(errc::property_violation, "boundary suffix is not the forced mu descent");
    return {syt_chain{d.prefix}, d.middle};
}

std::vector<int> pair_to_seq_14(int n, int k, const partition& mu, const syt_chain& t,
                                const vacillating_tableau& v) {
    validate_syt_chain(t);
    validate_vactab(v);
    if (mu.size() != n) raise(errc::bad_shape, "mu must be a partition of n");
    if (t.shape().size() != n || v.from() != t.shape() || v.length() != k || v.to() != mu)
        raise(errc::shape_mismatch, "pair does not match a (1.4) boundary");
    boundary_decomposition d{t.chain, v, descending_suffix(mu)};
    filling f = backward_growth(staircase_arrangement(n, k), compose_boundary(n, k, d));
    return read_top_sequence(f, n, k);
}

// ---- (1.3) ----

filling sp_to_filling_13(int n, int k, const set_partition& pi) {
    if (pi.ground_size() != k) raise(errc::bad_params, "pi must partition {1..k}");
    int l = pi.block_count();
    if (l > n) raise(errc::too_many_blocks, "pi may have at most n blocks");
    std::vector<cell> crosses;
    for (int i = 1; i <= n - l; ++i) crosses.push_back({i, i});
    std::set<int> delta_rows, delta_cols;
    for (auto pr : to_delta_filling(pi).crosses) {
        cell x = delta_pair_to_global(n, k, pr);
        delta_rows.insert(x.row);
        delta_cols.insert(x.col);
        crosses.push_back(x);
    }
    std::vector<int> free_rows, free_cols;
    for (int r = n + 1; r <= n + k; ++r)
        if (!delta_rows.count(r)) free_rows.push_back(r);
    for (int c = n + 1; c <= n + k; ++c)
        if (!delta_cols.count(c)) free_cols.push_back(c);
    for (size_t i = 0; i < free_rows.size(); ++i)
        crosses.push_back({free_rows[i], n - l + 1 + static_cast<int>(i)});
    for (size_t i = 0; i < free_cols.size(); ++i)
        crosses.push_back({n - l + 1 + static_cast<int>(i), free_cols[i]});
    return filling(staircase_arrangement(n, k), std::move(crosses));
}

vacillating_tableau sp_to_vactab_13(int n, int k, const set_partition& pi) {
    filling f = sp_to_filling_13(n, k, pi);
    boundary_decomposition d = decompose_boundary(n, k, read_boundary(forward_growth(f)));
    if (d.prefix != prefix_13(n) || d.suffix != descending_suffix(partition::single_row(n)))
        raise(errc::rule_violation, "forced boundary ends violated");
    return d.middle;
}

set_partition vactab_to_sp_13(int n, int k, const vacillating_tableau& v) {
    validate_vactab(v);
    partition nrow = partition::single_row(n);
    if (v.from() != nrow || v.to() != nrow || v.length() != k)
        raise(errc::bad_endpoints, "need a vacillating tableau (n) -> (n) of length k");
    boundary_decomposition d{prefix_13(n), v, descending_suffix(nrow)};
    filling f = backward_growth(staircase_arrangement(n, k), compose_boundary(n, k, d));
    require_one_per_row_and_col(f, n, k, errc::rule_violation);
    if (!rows_form_ne_chain(f, 1, n) || !cols_form_ne_chain(f, 1, n))
        raise(errc::rule_violation, "reconstruction violates the chain properties");
    delta_filling delta;
    delta.size = k;
    for (const cell& x : f.crosses())
        if (x.row > n && x.col > n) delta.crosses.push_back(global_to_delta_pair(n, k, x));
    return from_delta_filling(delta);
}

// ---- (1.5) ----

filling sp_to_filling_15(int n, int k, const set_partition& pi) {
    if (pi.ground_size() != k) raise(errc::bad_params, "pi must partition {1..k}");
    int l = pi.block_count();
    if (l != n && l != n - 1)
        raise(errc::wrong_block_count, "pi must have n-1 or n blocks");
    std::vector<cell> crosses;
    if (l == n - 1) crosses.push_back({1, n});
    std::set<int> delta_rows, delta_cols;
    for (auto pr : to_delta_filling(pi).crosses) {
        cell x = delta_pair_to_global(n, k, pr);
        delta_rows.insert(x.row);
        delta_cols.insert(x.col);
        crosses.push_back(x);
    }
    std::vector<int> free_rows, free_cols;
    for (int r = n + 1; r <= n + k; ++r)
        if (!delta_rows.count(r)) free_rows.push_back(r);
    for (int c = n + 1; c <= n + k; ++c)
        if (!delta_cols.count(c)) free_cols.push_back(c);
    // Columns 1..l top-down (SE-chain), rows n-l+1..n left-right (NE-chain).
    for (size_t i = 0; i < free_rows.size(); ++i)
        crosses.push_back({free_rows[free_rows.size() - 1 - i], 1 + static_cast<int>(i)});
    for (size_t i = 0; i < free_cols.size(); ++i)
        crosses.push_back({n - l + 1 + static_cast<int>(i), free_cols[i]});
    return filling(staircase_arrangement(n, k), std::move(crosses));
}

vacillating_tableau sp_to_vactab_15(int n, int k, const set_partition& pi) {
    filling f = sp_to_filling_15(n, k, pi);
    boundary_decomposition d = decompose_boundary(n, k, read_boundary(forward_growth(f)));
    if (d.prefix != prefix_15(n) || d.suffix != descending_suffix(partition::single_row(n)))
        raise(errc::rule_violation, "forced boundary ends violated");
    return reverse_vactab(d.middle);
}

set_partition vactab_to_sp_15(int n, int k, const vacillating_tableau& v) {
    validate_vactab(v);
    if (v.from() != partition::single_row(n) || v.to() != partition::single_col(n) ||
        v.length() != k)
        raise(errc::bad_endpoints, "need a vacillating tableau (n) -> (1^n) of length k");
    boundary_decomposition d{prefix_15(n), reverse_vactab(v),
                             descending_suffix(partition::single_row(n))};
    filling f = backward_growth(staircase_arrangement(n, k), compose_boundary(n, k, d));
    require_one_per_row_and_col(f, n, k, errc::rule_violation);
    if (!rows_form_ne_chain(f, 1, n) || !cols_form_se_chain(f, 1, n))
        raise(errc::rule_violation, "reconstruction violates the chain properties");
    delta_filling delta;
    delta.size = k;
    for (const cell& x : f.crosses())
        if (x.row > n && x.col > n) delta.crosses.push_back(global_to_delta_pair(n, k, x));
    return from_delta_filling(delta);
}

// ---- (1.6) ----

namespace {

bool in_family_16(const filling& f, int n, int k) {
    if (static_cast<int>(f.crosses().size()) != n + k) return false;
    if (!rows_form_ne_chain(f, 2, n) || !cols_form_ne_chain(f, 2, n)) return false;
    // The row-1 and column-1 crosses must not extend those chains.
    if (cross_col(f, 1) < cross_col(f, 2)) return false;
    if (cross_row(f, 1) < cross_row(f, 2)) return false;
    return true;
}

}  // namespace

std::vector<filling> enumerate_fillings_16(int n, int k) {
    if (n < 2) raise(errc::bad_params, "need n >= 2");
    cell_arrangement arr = staircase_arrangement(n, k);
    std::vector<filling> out;
    std::vector<int> col_of(static_cast<size_t>(n + k) + 1, 0);
    std::vector<bool> used(static_cast<size_t>(n + k) + 1, false);
    auto rec = [&](auto&& self, int row) -> void {
        if (row > n + k) {
            std::vector<cell> crosses;
            for (int r = 1; r <= n + k; ++r) crosses.push_back({r, col_of[r]});
            filling f(arr, std::move(crosses));
            if (in_family_16(f, n, k)) out.push_back(std::move(f));
            return;
        }
        for (int c = 1; c <= arr.row_length(row); ++c) {
            if (used[c]) continue;
            used[c] = true;
            col_of[row] = c;
            self(self, row + 1);
            used[c] = false;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(),
              [](const filling& x, const filling& y) { return x.crosses() < y.crosses(); });
    return out;
}

classification_16 classify_16(const filling& f) {
    auto [n, k] = staircase_dims(f.arrangement());
    if (n < 2 || !in_family_16(f, n, k)) raise(errc::not_in_family, "filling violates the family");
    std::set<cell> square;
    for (const cell& x : f.crosses())
        if (x.row <= n && x.col <= n) square.insert(x);

    int which = 0, l = 0;
    if (square.count({1, 2}) && square.count({2, 1})) {
        which = 1;
        l = n - 2 - static_cast<int>(square.size() - 2);
        if (l < 1 || l > n - 2) raise(errc::not_in_family, "bad diagonal run");
        for (int i = 3; i <= n - l; ++i)
            if (!square.count({i, i})) raise(errc::not_in_family, "bad diagonal run");
    } else if (!square.empty()) {
        which = 2;
        l = n - static_cast<int>(square.size());
        if (l < 1 || l > n - 1) raise(errc::not_in_family, "bad diagonal run");
        for (int i = 2; i <= n - l + 1; ++i)
            if (!square.count({i, i})) raise(errc::not_in_family, "bad diagonal run");
    } else {
        which = 3;
        l = n;
    }

    delta_filling delta;
    delta.size = k;
    std::set<int> delta_rows, delta_cols;
    for (const cell& x : f.crosses())
        if (x.row > n && x.col > n) {
            delta.crosses.push_back(global_to_delta_pair(n, k, x));
            delta_rows.insert(x.row);
            delta_cols.insert(x.col);
        }
    set_partition pi = from_delta_filling(delta);
    if (pi.block_count() != l) raise(errc::not_in_family, "block count does not match the case");

    int a = 1, b = 1;
    if (which >= 2) {
        std::vector<int> free_rows, free_cols;
        for (int r = n + 1; r <= n + k; ++r)
            if (!delta_rows.count(r)) free_rows.push_back(r);
        for (int c = n + 1; c <= n + k; ++c)
            if (!delta_cols.count(c)) free_cols.push_back(c);
        auto rank_of = [](const std::vector<int>& xs, int v) {
            auto it = std::find(xs.begin(), xs.end(), v);
            return it == xs.end() ? 0 : static_cast<int>(it - xs.begin()) + 1;
        };
        int a_rank = rank_of(free_rows, cross_row(f, 1));
        int b_rank = rank_of(free_cols, cross_col(f, 1));
        if (a_rank == 0 || b_rank == 0)
            raise(errc::not_in_family, "special crosses not in the free triangle lines");
        if (which == 2) {
            a = a_rank;
            b = b_rank;
        } else {
            if (a_rank < 2 || b_rank < 2)
                raise(errc::not_in_family, "special cross would extend a chain");
            a = a_rank - 1;
            b = b_rank - 1;
        }
    }
    classification_16 c{which, pi, a, b};
    if (!(encode_16(n, k, c) == f)) raise(errc::not_in_family, "cross placement off pattern");
    return c;
}

filling encode_16(int n, int k, const classification_16& c) {
    if (n < 2) raise(errc::bad_params, "need n >= 2");
    if (c.pi.ground_size() != k) raise(errc::bad_params, "pi must partition {1..k}");
    int l = c.pi.block_count();
    std::vector<cell> crosses;
    std::set<int> delta_rows, delta_cols;
    for (auto pr : to_delta_filling(c.pi).crosses) {
        cell x = delta_pair_to_global(n, k, pr);
        delta_rows.insert(x.row);
        delta_cols.insert(x.col);
        crosses.push_back(x);
    }
    std::vector<int> free_rows, free_cols;
    for (int r = n + 1; r <= n + k; ++r)
        if (!delta_rows.count(r)) free_rows.push_back(r);
    for (int c2 = n + 1; c2 <= n + k; ++c2)
        if (!delta_cols.count(c2)) free_cols.push_back(c2);

    auto place_run = [&crosses](const std::vector<int>& lines, int first_col, bool rows_to_cols) {
        for (size_t i = 0; i < lines.size(); ++i) {
            int other = first_col + static_cast<int>(i);
            if (rows_to_cols)
                crosses.push_back({lines[i], other});
            else
                crosses.push_back({other, lines[i]});
        }
    };

    switch (c.which_case) {
        case 1: {
            if (l < 1 || l > n - 2 || c.a != 1 || c.b != 1)
                raise(errc::bad_params, "case 1 needs 1 <= blocks <= n-2 and a = b = 1");
            crosses.push_back({1, 2});
            crosses.push_back({2, 1});
            for (int i = 3; i <= n - l; ++i) crosses.push_back({i, i});
            place_run(free_rows, n - l + 1, true);
            place_run(free_cols, n - l + 1, false);
            break;
        }
        case 2: {
            if (l < 1 || l > n - 1 || c.a < 1 || c.a > l || c.b < 1 || c.b > l)
                raise(errc::bad_params, "case 2 needs 1 <= blocks <= n-1 and a, b in 1..blocks");
            for (int i = 2; i <= n - l + 1; ++i) crosses.push_back({i, i});
            std::vector<int> chain_rows = free_rows, chain_cols = free_cols;
            int special_row = chain_rows[static_cast<size_t>(c.a) - 1];
            chain_rows.erase(chain_rows.begin() + (c.a - 1));
            int special_col = chain_cols[static_cast<size_t>(c.b) - 1];
            chain_cols.erase(chain_cols.begin() + (c.b - 1));
            crosses.push_back({special_row, 1});
            crosses.push_back({1, special_col});
            place_run(chain_rows, n - l + 2, true);
            place_run(chain_cols, n - l + 2, false);
            break;
        }
        case 3: {
            if (l != n || c.a < 1 || c.a > n - 1 || c.b < 1 || c.b > n - 1)
                raise(errc::bad_params, "case 3 needs n blocks and a, b in 1..n-1");
            std::vector<int> chain_rows = free_rows, chain_cols = free_cols;
            int special_row = chain_rows[static_cast<size_t>(c.a)];
            chain_rows.erase(chain_rows.begin() + c.a);
            int special_col = chain_cols[static_cast<size_t>(c.b)];
            chain_cols.erase(chain_cols.begin() + c.b);
            crosses.push_back({special_row, 1});
            crosses.push_back({1, special_col});
            place_run(chain_rows, 2, true);
            place_run(chain_cols, 2, false);
            break;
        }
        default:
            raise(errc::bad_params, "case must be 1, 2, or 3");
    }
    filling f(staircase_arrangement(n, k), std::move(crosses));
    if (!in_family_16(f, n, k)) raise(errc::rule_violation, "encoded filling left the family");
    return f;
}

vacillating_tableau filling_to_vactab_16(const filling& f) {
    auto [n, k] = staircase_dims(f.arrangement());
    if (!in_family_16(f, n, k)) raise(errc::not_in_family, "filling violates the family");
    boundary_decomposition d = decompose_boundary(n, k, read_boundary(forward_growth(f)));
    if (d.prefix != prefix_16(n) || d.suffix != suffix_16(n))
        raise(errc::rule_violation, "forced boundary ends violated");
    return d.middle;
}

filling vactab_to_filling_16(int n, int k, const vacillating_tableau& v) {
    if (n < 2) raise(errc::bad_params, "need n >= 2");
    validate_vactab(v);
    partition corner({n - 1, 1});
    if (v.from() != corner || v.to() != corner || v.length() != k)
        raise(errc::bad_endpoints, "need a vacillating tableau (n-1,1) -> (n-1,1) of length k");
    boundary_decomposition d{prefix_16(n), v, suffix_16(n)};
    filling f = backward_growth(staircase_arrangement(n, k), compose_boundary(n, k, d));
    if (!in_family_16(f, n, k)) raise(errc::rule_violation, "reconstruction left the family");
    return f;
}

// ---- Theorem 3 ----

std::vector<partition> limiting_vactab(int k, const std::vector<int>& seq, int n) {
    if (static_cast<int>(seq.size()) != k) raise(errc::bad_params, "need k sequence entries");
    int need = 1;
    for (int t = 1; t <= k; ++t) need = std::max(need, seq[static_cast<size_t>(t) - 1] + t - 1);
    if (n < need)
        raise(errc::n_too_small, "need n >= " + std::to_string(need) + " for the limit");
    vacillating_tableau v = seq_to_pair_11(n, k, seq).second;
    std::vector<partition> out;
    for (const partition& p : v.seq) {
        std::vector<int> parts(p.parts().begin() + (p.empty() ? 0 : 1), p.parts().end());
        out.push_back(partition(std::move(parts)));
    }
    return out;
}

// ---- identity verification ----

namespace {

std::uint64_t independent_bell(int m) {
    // Enumeration below the point where listing all partitions is silly.
    if (m >= 1 && m <= 10) return enumerate_set_partitions(m).size();
    return bell(m);
}

std::string render_detail(std::uint64_t lhs, std::uint64_t rhs, bool ok) {
    return std::to_string(lhs) + (ok ? " = " : " != ") + std::to_string(rhs) +
           (ok ? " ok" : " mismatch");
}

}  // namespace

identity_report verify_identity(const std::string& id, int n, int k,
                                const std::optional<partition>& mu) {
    if (n < 1 || k < 1) raise(errc::bad_params, "need n >= 1 and k >= 1");
    identity_report rep;
    rep.id = id;
    rep.n = n;
    rep.k = k;
    rep.mu = mu;
    if (mu && id != "1.4") raise(errc::bad_params, "--mu only applies to identity 1.4");

    if (id == "1.1") {
        rep.lhs = ipow(static_cast<std::uint64_t>(n), k);
        rep.rhs = 0;
        for (const partition& lam : partitions_of(n))
            rep.rhs += count_syt(lam) * count_vactab(lam, partition::single_row(n), k);
    } else if (id == "1.2") {
        if (n < 2 * k) raise(errc::bad_params, "identity 1.2 requires n >= 2k");
        std::uint64_t bell_side = independent_bell(2 * k);
        std::uint64_t middle = 0;
        for (const partition& lam : partitions_of(n)) {
            std::uint64_t m = count_vactab(lam, partition::single_row(n), k);
            middle += m * m;
        }
        rep.rhs = count_vactab(partition::single_row(n), partition::single_row(n), 2 * k);
        // The split pairing realises the middle sum tableau by tableau.
        std::uint64_t paired = 0;
        for (const auto& v :
             enumerate_vactab(partition::single_row(n), partition::single_row(n), 2 * k)) {
            auto [first, second] = split_vactab(v);
            if (first.to() == second.to() && glue_vactab(first, second) == v) ++paired;
        }
        rep.lhs = bell_side;
        rep.ok = bell_side == middle && middle == rep.rhs && paired == rep.rhs;
        rep.detail = std::to_string(bell_side) + (rep.ok ? " = " : " / ") +
                     std::to_string(middle) + (rep.ok ? " = " : " / ") + std::to_string(rep.rhs) +
                     (rep.ok ? " ok" : " mismatch");
        return rep;
    } else if (id == "1.3") {
        rep.lhs = 0;
        for (int l = 1; l <= std::min(n, k); ++l) rep.lhs += stirling(k, l);
        rep.rhs = count_vactab(partition::single_row(n), partition::single_row(n), k);
    } else if (id == "1.4") {
        rep.lhs = 0;
        rep.rhs = 0;
        bool all_ok = true;
        std::vector<partition> mus;
        if (mu) {
            if (mu->size() != n) raise(errc::bad_params, "mu must be a partition of n");
            mus.push_back(*mu);
        } else {
            mus = partitions_of(n);
        }
        for (const partition& m : mus) {
            std::uint64_t lhs = ipow(static_cast<std::uint64_t>(n), k);
            std::uint64_t rhs = 0;
            for (const partition& lam : partitions_of(n))
                rhs += count_syt(lam) * count_vactab(lam, m, k);
            rep.lhs += lhs;
            rep.rhs += rhs;
            all_ok = all_ok && lhs == rhs;
        }
        rep.ok = all_ok;
        rep.detail = render_detail(rep.lhs, rep.rhs, rep.ok);
        if (!mu) rep.detail += " (all mu of n)";
        return rep;
    } else if (id == "1.5") {
        rep.lhs = 0;
        if (n <= k) rep.lhs += stirling(k, n);
        if (n - 1 <= k) rep.lhs += stirling(k, n - 1);
        rep.rhs = count_vactab(partition::single_row(n), partition::single_col(n), k);
    } else if (id == "1.6") {
        if (n < 2) raise(errc::bad_params, "identity 1.6 requires n >= 2");
        rep.lhs = 0;
        for (int l = 1; l <= std::min(n - 2, k); ++l) rep.lhs += stirling(k, l);
        for (int l = 1; l <= std::min(n - 1, k); ++l)
            rep.lhs += static_cast<std::uint64_t>(l) * l * stirling(k, l);
        if (n <= k) rep.lhs += static_cast<std::uint64_t>(n - 1) * (n - 1) * stirling(k, n);
        partition corner({n - 1, 1});
        rep.rhs = count_vactab(corner, corner, k);
    } else {
        raise(errc::bad_params, "unknown identity '" + id + "'");
    }
    rep.ok = rep.lhs == rep.rhs;
    rep.detail = render_detail(rep.lhs, rep.rhs, rep.ok);
    return rep;
}

}  // namespace vt
