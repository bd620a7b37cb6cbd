#include "tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vt {

void validate_syt_chain(const syt_chain& t) {
    if (t.chain.empty() || !t.chain.front().empty())
        raise(errc::bad_shape, "chain must start at the empty partition");
    for (size_t i = 0; i + 1 < t.chain.size(); ++i) {
        auto row = diff_by_one(t.chain[i], t.chain[i + 1]);
        if (!row || t.chain[i + 1].size() != t.chain[i].size() + 1)
            raise(errc::bad_shape, "chain must add exactly one cell per step");
    }
}

void validate_vactab(const vacillating_tableau& v) {
    if (v.seq.empty() || v.seq.size() % 2 == 0)
        raise(errc::bad_shape, "vacillating tableau needs 2K+1 entries");
    for (size_t i = 0; i + 1 < v.seq.size(); ++i) {
        int want = i % 2 == 0 ? -1 : +1;
        if (v.seq[i + 1].size() - v.seq[i].size() != want || !diff_by_one(v.seq[i], v.seq[i + 1]))
            raise(errc::bad_shape, "steps must alternately remove and add one cell");
    }
}

std::vector<syt_chain> enumerate_syt(const partition& lambda) {
    std::vector<syt_chain> out;
    std::vector<partition> chain{partition()};
    auto rec = [&](auto&& self) -> void {
        const partition& cur = chain.back();
        if (cur == lambda) {
            if (cur.size() == lambda.size()) out.push_back({chain});
            return;
        }
        for (int row = 1; row <= cur.rows() + 1; ++row) {
            if (row > 1 && cur.part(row - 1) <= cur.part(row)) continue;
            if (cur.part(row) + 1 > lambda.part(row)) continue;
            chain.push_back(add_cell(cur, row));
            self(self);
            chain.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::uint64_t count_syt(const partition& lambda) {
    return enumerate_syt(lambda).size();
}

std::vector<std::vector<int>> syt_to_tableau(const syt_chain& t) {
    validate_syt_chain(t);
    std::vector<std::vector<int>> rows(static_cast<size_t>(t.shape().rows()));
    for (size_t i = 0; i + 1 < t.chain.size(); ++i) {
        int row = *diff_by_one(t.chain[i], t.chain[i + 1]);
        rows[static_cast<size_t>(row) - 1].push_back(static_cast<int>(i) + 1);
    }
    return rows;
}

syt_chain tableau_to_syt(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int entry : rows[r]) {
            if (entry < 1 || entry > n || row_of[static_cast<size_t>(entry)] != 0)
                raise(errc::bad_shape, "tableau entries must be 1..n without repeats");
            row_of[static_cast<size_t>(entry)] = static_cast<int>(r) + 1;
        }
    syt_chain t;
    t.chain.push_back(partition());
    for (int i = 1; i <= n; ++i) t.chain.push_back(add_cell(t.chain.back(), row_of[i]));
    validate_syt_chain(t);
    return t;
}

std::vector<vacillating_tableau> enumerate_vactab(const partition& lambda, const partition& mu,
                                                  int k) {
    if (lambda.size() != mu.size())
        raise(errc::size_mismatch, "endpoints must have equal size");
    if (k < 0) raise(errc::bad_params, "length must be nonnegative");
    std::vector<vacillating_tableau> out;
    std::vector<partition> seq{lambda};
    auto rec = [&](auto&& self, int step) -> void {
        if (step == 2 * k) {
            if (seq.back() == mu) out.push_back({seq});
            return;
        }
        const partition& cur = seq.back();
        if (step % 2 == 0) {
            for (int row = 1; row <= cur.rows(); ++row) {
                if (cur.part(row) <= cur.part(row + 1)) continue;
                seq.push_back(remove_cell(cur, row));
                self(self, step + 1);
                seq.pop_back();
            }
        } else {
            for (int row = 1; row <= cur.rows() + 1; ++row) {
                if (row > 1 && cur.part(row - 1) <= cur.part(row)) continue;
                seq.push_back(add_cell(cur, row));
                self(self, step + 1);
                seq.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

std::uint64_t count_vactab(const partition& lambda, const partition& mu, int k) {
    if (lambda.size() != mu.size())
        raise(errc::size_mismatch, "endpoints must have equal size");
    if (k < 0) raise(errc::bad_params, "length must be nonnegative");
    std::map<std::pair<partition, int>, std::uint64_t> memo;
    auto rec = [&](auto&& self, const partition& cur, int step) -> std::uint64_t {
        if (step == 2 * k) return cur == mu ? 1 : 0;
        auto key = std::make_pair(cur, step);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t total = 0;
        if (step % 2 == 0) {
            for (int row = 1; row <= cur.rows(); ++row) {
                if (cur.part(row) <= cur.part(row + 1)) continue;
                total += self(self, remove_cell(cur, row), step + 1);
            }
        } else {
            for (int row = 1; row <= cur.rows() + 1; ++row) {
                if (row > 1 && cur.part(row - 1) <= cur.part(row)) continue;
                total += self(self, add_cell(cur, row), step + 1);
            }
        }
        memo[key] = total;
        return total;
    };
    return rec(rec, lambda, 0);
}

vacillating_tableau reverse_vactab(const vacillating_tableau& v) {
    validate_vactab(v);
    vacillating_tableau out = v;
    std::reverse(out.seq.begin(), out.seq.end());
    return out;
}

std::pair<vacillating_tableau, vacillating_tableau> split_vactab(const vacillating_tableau& v) {
    validate_vactab(v);
    if (v.length() % 2 != 0) raise(errc::bad_endpoints, "length must be even");
    const partition& n_row = v.from();
    if (n_row.rows() > 1 || v.to() != n_row)
        raise(errc::bad_endpoints, "both endpoints must equal (n)");
    size_t half = static_cast<size_t>(v.length());
    vacillating_tableau first{std::vector<partition>(v.seq.begin(), v.seq.begin() + half + 1)};
    vacillating_tableau second{std::vector<partition>(v.seq.begin() + half, v.seq.end())};
    return {first, reverse_vactab(second)};
}

vacillating_tableau glue_vactab(const vacillating_tableau& first,
                                const vacillating_tableau& second) {
    validate_vactab(first);
    validate_vactab(second);
    if (first.to() != second.to() || first.from() != second.from())
        raise(errc::bad_endpoints, "halves must share both endpoints");
    vacillating_tableau out = first;
    vacillating_tableau rev = reverse_vactab(second);
    out.seq.insert(out.seq.end(), rev.seq.begin() + 1, rev.seq.end());
    validate_vactab(out);
    return out;
}

std::string format_vactab(const vacillating_tableau& v) {
    std::string out;
    for (size_t i = 0; i < v.seq.size(); ++i) {
        if (i > 0) out += i % 2 == 1 ? '>' : '<';
        out += format_partition_compact(v.seq[i]);
    }
    return out;
}

vacillating_tableau parse_vactab(const std::string& text) {
    vacillating_tableau v;
    std::string token;
    size_t expected = 0;
    for (char ch : text) {
        if (ch == '>' || ch == '<') {
            char want = expected % 2 == 0 ? '>' : '<';
            if (ch != want) raise(errc::parse_error, "separators must alternate > and <");
            ++expected;
            v.seq.push_back(parse_partition(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    v.seq.push_back(parse_partition(token));
    validate_vactab(v);
    return v;
}

std::string format_syt(const syt_chain& t) {
    auto rows = syt_to_tableau(t);
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) out += '/';
        for (size_t i = 0; i < rows[r].size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(rows[r][i]);
        }
    }
    return out;
}

syt_chain parse_syt(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        rows.back().push_back(std::stoi(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == '/') {
            flush();
            rows.emplace_back();
        } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            token += ch;
        } else {
            raise(errc::parse_error, "bad tableau character");
        }
    }
    flush();
    if (!rows.empty() && rows.back().empty()) rows.pop_back();
    try {
        return tableau_to_syt(rows);
    } catch (const error&) {
        raise(errc::parse_error, "rows do not form a standard tableau");
    }
}

}  // namespace vt
