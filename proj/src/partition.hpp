#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace vt {

// Integer partition: weakly decreasing positive parts; trailing zeros are
// never stored, so equality is structural.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts);

    static partition single_row(int n);  // (n), or empty for n = 0
    static partition single_col(int n);  // (1^n)

    const std::vector<int>& parts() const { return parts_; }
    int part(int row) const;  // 1-based; 0 beyond the last row
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const partition&) const = default;
    auto operator<=>(const partition&) const = default;

private:
    std::vector<int> parts_;
};

bool contains(const partition& mu, const partition& nu);        // nu subset of mu
partition unite(const partition& mu, const partition& nu);      // componentwise max
partition intersect(const partition& mu, const partition& nu);  // componentwise min
partition conjugate(const partition& lambda);

partition add_cell(const partition& lambda, int row);     // errc::invalid_corner
partition remove_cell(const partition& lambda, int row);  // errc::invalid_corner

// The row where b equals a plus or minus exactly one cell, if there is one.
std::optional<int> diff_by_one(const partition& a, const partition& b);

// Accepts the canonical comma form ("3,2,1"), the compact digit form ("321",
// parts <= 9 only), or "-" for the empty partition.
partition parse_partition(const std::string& text);
std::string format_partition(const partition& p);          // comma form; "-" for empty
std::string format_partition_compact(const partition& p);  // digit form when all parts <= 9

std::vector<partition> partitions_of(int n);  // all partitions of n, sorted

}  // namespace vt
