#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace vt {

// Coordinates are 1-based with origin at bottom-left; rows are counted
// upward. Corner lattice points use the same axes with 0-based offsets.
struct cell {
    int row = 0;
    int col = 0;
    bool operator==(const cell&) const = default;
    auto operator<=>(const cell&) const = default;
};

// Left- and bottom-justified region; walking the top-right boundary moves
// only right or down, i.e. row lengths weakly decrease bottom-to-top.
class cell_arrangement {
public:
    cell_arrangement() = default;
    explicit cell_arrangement(std::vector<int> row_lengths);

    int rows() const { return static_cast<int>(row_lengths_.size()); }
    int row_length(int row) const;  // 1-based; 0 above the top row
    int width() const { return row_length(1); }
    bool contains(int row, int col) const;

    bool operator==(const cell_arrangement&) const = default;

private:
    std::vector<int> row_lengths_;
};

// Cross placement with at most one cross per row and per column.
class filling {
public:
    filling() = default;
    filling(cell_arrangement arrangement, std::vector<cell> crosses);

    const cell_arrangement& arrangement() const { return arrangement_; }
    const std::vector<cell>& crosses() const { return crosses_; }  // sorted by row
    bool cross_at(int row, int col) const;

    bool operator==(const filling&) const = default;

private:
    cell_arrangement arrangement_;
    std::vector<cell> crosses_;
};

enum class step_dir { horizontal, vertical };

// Labels along the top-right boundary, read from the top-left corner to the
// bottom-right corner; steps[i] joins labels[i] and labels[i+1].
struct boundary_word {
    std::vector<partition> labels;
    std::vector<step_dir> steps;

    bool operator==(const boundary_word&) const = default;
};

class growth_diagram {
public:
    const filling& get_filling() const { return filling_; }
    const cell_arrangement& arrangement() const { return filling_.arrangement(); }
    // Corner label at lattice point (r, c), r = 0..rows, c = 0..corner extent.
    const partition& label(int r, int c) const;
    int corner_extent(int r) const;

private:
    friend growth_diagram forward_growth(const filling& f);
    filling filling_;
    std::vector<std::vector<partition>> labels_;
};

// Local rules on one cell; rho = bottom-left, nu = top-left, mu =
// bottom-right, result = top-right.
partition local_forward(const partition& rho, const partition& nu, const partition& mu,
                        bool has_cross);
// Inverse: from top-right, top-left, bottom-right recover (bottom-left, cross).
std::pair<partition, bool> local_backward(const partition& lambda, const partition& nu,
                                          const partition& mu);

growth_diagram forward_growth(const filling& f);
boundary_word read_boundary(const growth_diagram& d);
filling backward_growth(const cell_arrangement& arrangement, const boundary_word& word);

// Step pattern the arrangement's boundary walk follows.
std::vector<step_dir> boundary_steps(const cell_arrangement& arrangement);

// Chain-statistic oracle (independent of the local rules): the corner label
// as prescribed by the maximal unions of NE-chains in the rectangle below
// and to the left of corner (r, c).
partition greene_shape(const filling& f, int r, int c);
int ne_chain_stat(const filling& f, int r, int c, int j);
int se_chain_stat(const filling& f, int r, int c, int j);

std::string render_ascii(const growth_diagram& d);

// Compact form "-<1>-" style when every step is strict ('<' horizontal
// grow, '>' vertical shrink); general form uses "h"/"v" markers with "="
// appended on flat steps.
std::string format_boundary_word(const boundary_word& w);
boundary_word parse_boundary_word(const std::string& text);

// {"rows": [lengths bottom-to-top], "crosses": [[row, col], ...]} with an
// optional "boundary" string kept for comparison harnesses.
filling filling_from_json(const std::string& json_text);
std::string filling_to_json(const filling& f);
std::string json_boundary_note(const std::string& json_text);  // "" when absent

}  // namespace vt
