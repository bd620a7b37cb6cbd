#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace vt {

// Set partition of {1..k}; blocks are kept canonical: each block sorted,
// blocks ordered by their minimum.
class set_partition {
public:
    set_partition(int ground_size, std::vector<std::vector<int>> blocks);

    int ground_size() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    bool operator==(const set_partition&) const = default;

private:
    int k_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Crosses of the triangular region, stored as the successor pairs (i, j),
// i < j, of elements consecutive within a block.
struct delta_filling {
    int size = 0;  // ground size k
    std::vector<std::pair<int, int>> crosses;
};

// All set partitions of {1..k}, restricted-growth-string order; when
// `blocks` is given, only those with exactly that many blocks.
std::vector<set_partition> enumerate_set_partitions(int k, int blocks = -1);

std::uint64_t stirling(int k, int l);
std::uint64_t bell(int m);

delta_filling to_delta_filling(const set_partition& pi);
set_partition from_delta_filling(const delta_filling& d);

std::string format_set_partition(const set_partition& pi);  // "1 2 3 | 4 6 | 5"
set_partition parse_set_partition(const std::string& text, int ground_size = -1);

}  // namespace vt
