#include "set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace vt {

set_partition::set_partition(int ground_size, std::vector<std::vector<int>> blocks)
    : k_(ground_size), blocks_(std::move(blocks)) {
    if (k_ < 0) raise(errc::bad_params, "ground size must be nonnegative");
    std::vector<bool> seen(static_cast<size_t>(k_) + 1, false);
    size_t covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) raise(errc::bad_params, "empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > k_ || seen[x]) raise(errc::bad_params, "blocks must partition {1..k}");
            seen[x] = true;
            ++covered;
        }
    }
    if (covered != static_cast<size_t>(k_)) raise(errc::bad_params, "blocks must cover {1..k}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<set_partition> enumerate_set_partitions(int k, int blocks) {
    if (k < 1) raise(errc::bad_params, "k must be positive");
    std::vector<set_partition> out;
    std::vector<int> rgs(static_cast<size_t>(k));  // rgs[i] = block index of element i+1
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == k) {
            if (blocks >= 0 && used != blocks) return;
            std::vector<std::vector<int>> bl(static_cast<size_t>(used));
            for (int e = 0; e < k; ++e) bl[rgs[e]].push_back(e + 1);
            out.emplace_back(k, std::move(bl));
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::uint64_t stirling(int k, int l) {
    if (k < 0 || l < 0 || l > k) raise(errc::bad_params, "need 0 <= l <= k");
    if (l == 0) return k == 0 ? 1 : 0;
    std::vector<std::uint64_t> row(static_cast<size_t>(l) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= k; ++i) {
        for (int j = std::min(i, l); j >= 1; --j)
            row[j] = static_cast<std::uint64_t>(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[l];
}

std::uint64_t bell(int m) {
    if (m < 0) raise(errc::bad_params, "m must be nonnegative");
    std::uint64_t total = 0;
    for (int l = 0; l <= m; ++l) total += stirling(m, l);
    return total;
}

delta_filling to_delta_filling(const set_partition& pi) {
    delta_filling d;
    d.size = pi.ground_size();
    for (const auto& block : pi.blocks())
        for (size_t i = 0; i + 1 < block.size(); ++i)
            d.crosses.emplace_back(block[i], block[i + 1]);
    std::sort(d.crosses.begin(), d.crosses.end());
    return d;
}

set_partition from_delta_filling(const delta_filling& d) {
    std::vector<int> next(static_cast<size_t>(d.size) + 1, 0);
    std::vector<bool> has_pred(static_cast<size_t>(d.size) + 1, false);
    for (auto [i, j] : d.crosses) {
        if (i < 1 || j <= i || j > d.size) raise(errc::bad_params, "delta cross out of range");
        if (next[i] != 0 || has_pred[j]) raise(errc::bad_params, "duplicate delta row or column");
        next[i] = j;
        has_pred[j] = true;
    }
    std::vector<std::vector<int>> blocks;
    for (int start = 1; start <= d.size; ++start) {
        if (has_pred[start]) continue;
        std::vector<int> block;
        for (int x = start; x != 0; x = next[x]) block.push_back(x);
        blocks.push_back(std::move(block));
    }
    return set_partition(d.size, std::move(blocks));
}

std::string format_set_partition(const set_partition& pi) {
    std::string out;
    for (size_t b = 0; b < pi.blocks().size(); ++b) {
        if (b > 0) out += " | ";
        const auto& block = pi.blocks()[b];
        for (size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

set_partition parse_set_partition(const std::string& text, int ground_size) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int max_elem = 0;
    std::string tok;
    auto flush_tok = [&] {
        if (tok.empty()) return;
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                raise(errc::parse_error, "bad element '" + tok + "'");
        int v = std::stoi(tok);
        max_elem = std::max(max_elem, v);
        cur.push_back(v);
        tok.clear();
    };
    auto flush_block = [&] {
        flush_tok();
        if (cur.empty()) raise(errc::parse_error, "empty block in set partition");
        blocks.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '|')
            flush_block();
        else if (std::isspace(static_cast<unsigned char>(ch)))
            flush_tok();
        else
            tok += ch;
    }
    flush_block();
    int k = ground_size >= 0 ? ground_size : max_elem;
    try {
        return set_partition(k, std::move(blocks));
    } catch (const error&) {
        raise(errc::parse_error, "blocks do not partition {1.." + std::to_string(k) + "}");
    }
}

}  // namespace vt
