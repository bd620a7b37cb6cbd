#include "growth.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace vt {

cell_arrangement::cell_arrangement(std::vector<int> row_lengths)
    : row_lengths_(std::move(row_lengths)) {
    for (size_t i = 0; i < row_lengths_.size(); ++i) {
        if (row_lengths_[i] <= 0)
            raise(errc::bad_shape, "row lengths must be positive");
        if (i + 1 < row_lengths_.size() && row_lengths_[i] < row_lengths_[i + 1])
            raise(errc::bad_shape, "row lengths must weakly decrease bottom-to-top");
    }
}

int cell_arrangement::row_length(int row) const {
    return (row >= 1 && row <= rows()) ? row_lengths_[row - 1] : 0;
}

bool cell_arrangement::contains(int row, int col) const {
    return row >= 1 && col >= 1 && col <= row_length(row);
}

filling::filling(cell_arrangement arrangement, std::vector<cell> crosses)
    : arrangement_(std::move(arrangement)), crosses_(std::move(crosses)) {
    std::sort(crosses_.begin(), crosses_.end());
    std::set<int> rows_used, cols_used;
    for (const cell& x : crosses_) {
        if (!arrangement_.contains(x.row, x.col))
            raise(errc::bad_shape, "cross outside the arrangement");
        if (!rows_used.insert(x.row).second || !cols_used.insert(x.col).second)
            raise(errc::bad_shape, "more than one cross in a row or column");
    }
}

bool filling::cross_at(int row, int col) const {
    return std::binary_search(crosses_.begin(), crosses_.end(), cell{row, col});
}

const partition& growth_diagram::label(int r, int c) const {
    return labels_.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
}

int growth_diagram::corner_extent(int r) const {
    return static_cast<int>(labels_.at(static_cast<size_t>(r)).size()) - 1;
}

namespace {

// nu and mu must each equal rho or exceed it by exactly one cell.
void check_forward_inputs(const partition& rho, const partition& nu, const partition& mu) {
    for (const partition* p : {&nu, &mu}) {
        if (*p == rho) continue;
        if (!contains(*p, rho) || p->size() != rho.size() + 1 || !diff_by_one(rho, *p))
            raise(errc::rule_violation, "corner labels do not differ by one cell");
    }
}

}  // namespace

partition local_forward(const partition& rho, const partition& nu, const partition& mu,
                        bool has_cross) {
    check_forward_inputs(rho, nu, mu);
    if (has_cross) {
        if (!(rho == mu && rho == nu))
            raise(errc::rule_violation, "cross requires equal corner labels");
        return add_cell(rho, 1);                        // (F6)
    }
    if (rho == mu && rho == nu) return rho;             // (F1)
    if (rho == mu) return nu;                           // (F2)
    if (rho == nu) return mu;                           // (F3)
    if (mu != nu) return unite(mu, nu);                 // (F4)
    int k = *diff_by_one(rho, mu);                      // (F5)
    return add_cell(mu, k + 1);
}

std::pair<partition, bool> local_backward(const partition& lambda, const partition& nu,
                                          const partition& mu) {
    for (const partition* p : {&nu, &mu}) {
        if (*p == lambda) continue;
        if (!contains(lambda, *p) || p->size() + 1 != lambda.size() || !diff_by_one(lambda, *p))
            raise(errc::rule_violation, "corner labels do not differ by one cell");
    }
    if (lambda == mu && lambda == nu) return {lambda, false};      // (B1)
    if (lambda == mu) return {nu, false};                          // (B2)
    if (lambda == nu) return {mu, false};                          // (B3)
    if (mu != nu) return {intersect(mu, nu), false};               // (B4)
    int k = *diff_by_one(mu, lambda);
    if (k == 1) return {mu, true};                                 // (B6)
    return {remove_cell(mu, k - 1), false};                        // (B5)
}

growth_diagram forward_growth(const filling& f) {
    const cell_arrangement& arr = f.arrangement();
    int rows = arr.rows();
    growth_diagram d;
    d.filling_ = f;
    d.labels_.resize(static_cast<size_t>(rows) + 1);
    d.labels_[0].assign(static_cast<size_t>(arr.width()) + 1, partition());
    for (int r = 1; r <= rows; ++r) {
        d.labels_[r].resize(static_cast<size_t>(arr.row_length(r)) + 1);
        d.labels_[r][0] = partition();
        for (int c = 1; c <= arr.row_length(r); ++c)
            d.labels_[r][c] = local_forward(d.labels_[r - 1][c - 1], d.labels_[r][c - 1],
                                            d.labels_[r - 1][c], f.cross_at(r, c));
    }
    return d;
}

std::vector<step_dir> boundary_steps(const cell_arrangement& arrangement) {
    std::vector<step_dir> steps;
    int rows = arrangement.rows();
    steps.insert(steps.end(), static_cast<size_t>(arrangement.row_length(rows)),
                 step_dir::horizontal);
    for (int r = rows - 1; r >= 0; --r) {
        steps.push_back(step_dir::vertical);
        int here = r >= 1 ? arrangement.row_length(r) : arrangement.width();
        int above = arrangement.row_length(r + 1);
        steps.insert(steps.end(), static_cast<size_t>(here - above), step_dir::horizontal);
    }
    return steps;
}

boundary_word read_boundary(const growth_diagram& d) {
    const cell_arrangement& arr = d.arrangement();
    boundary_word w;
    w.steps = boundary_steps(arr);
    int r = arr.rows(), c = 0;
    w.labels.push_back(d.label(r, c));
    for (step_dir s : w.steps) {
        if (s == step_dir::horizontal)
            ++c;
        else
            --r;
        w.labels.push_back(d.label(r, c));
    }
    return w;
}

namespace {

void validate_boundary(const cell_arrangement& arrangement, const boundary_word& word) {
    if (word.steps != boundary_steps(arrangement))
        raise(errc::invalid_boundary, "boundary steps do not match the arrangement");
    if (word.labels.size() != word.steps.size() + 1)
        raise(errc::invalid_boundary, "label/step count mismatch");
    if (!word.labels.front().empty() || !word.labels.back().empty())
        raise(errc::invalid_boundary, "boundary must start and end with the empty partition");
    for (size_t i = 0; i < word.steps.size(); ++i) {
        const partition& a = word.labels[i];
        const partition& b = word.labels[i + 1];
        bool grow = word.steps[i] == step_dir::horizontal;
        const partition& small = grow ? a : b;
        const partition& big = grow ? b : a;
        if (!contains(big, small) || big.size() - small.size() > 1)
            raise(errc::invalid_boundary, grow ? "horizontal step must grow by at most one cell"
                                               : "vertical step must shrink by at most one cell");
    }
}

}  // namespace

filling backward_growth(const cell_arrangement& arrangement, const boundary_word& word) {
    validate_boundary(arrangement, word);
    int rows = arrangement.rows();
    std::vector<std::vector<partition>> labels(static_cast<size_t>(rows) + 1);
    labels[0].resize(static_cast<size_t>(arrangement.width()) + 1);
    for (int r = 1; r <= rows; ++r)
        labels[r].resize(static_cast<size_t>(arrangement.row_length(r)) + 1);

    {
        int r = rows, c = 0;
        size_t i = 0;
        labels[r][c] = word.labels[i++];
        for (step_dir s : word.steps) {
            if (s == step_dir::horizontal)
                ++c;
            else
                --r;
            labels[r][c] = word.labels[i++];
        }
    }

    std::vector<cell> crosses;
    for (int r = rows; r >= 1; --r) {
        for (int c = arrangement.row_length(r); c >= 1; --c) {
            auto [rho, cross] = local_backward(labels[r][c], labels[r][c - 1], labels[r - 1][c]);
            labels[r - 1][c - 1] = rho;
            if (cross) crosses.push_back({r, c});
        }
    }
    for (int r = 0; r <= rows; ++r)
        if (!labels[r][0].empty())
            raise(errc::invalid_boundary, "reconstruction leaves a non-empty left boundary");
    for (int c = 0; c <= arrangement.width(); ++c)
        if (!labels[0][c].empty())
            raise(errc::invalid_boundary, "reconstruction leaves a non-empty bottom boundary");
    return filling(arrangement, std::move(crosses));
}

namespace {

// Maximum total size of a union of j vertex-disjoint chains among `points`,
// where `before(a, b)` says a may precede b in a chain. Small min-cost
// max-flow on the chain DAG; independent of the growth rules.
int max_chain_union(const std::vector<cell>& points, int j,
                    bool (*before)(const cell&, const cell&)) {
    int m = static_cast<int>(points.size());
    if (m == 0 || j <= 0) return 0;
    // Nodes: 0 = source, 1 = gate, 2+2i / 3+2i = split pair for point i,
    // 2+2m = sink.
    int n_nodes = 2 * m + 3;
    struct edge {
        int to, cap, cost, flow = 0;
    };
    std::vector<edge> edges;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_nodes));
    auto add_edge = [&](int a, int b, int cap, int cost) {
        adj[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, cap, cost});
        adj[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, 0, -cost});
    };
    int source = 0, gate = 1, sink = 2 + 2 * m;
    add_edge(source, gate, j, 0);
    for (int i = 0; i < m; ++i) {
        add_edge(gate, 2 + 2 * i, 1, 0);
        add_edge(2 + 2 * i, 3 + 2 * i, 1, -1);
        add_edge(3 + 2 * i, sink, 1, 0);
        for (int k = 0; k < m; ++k)
            if (before(points[i], points[k])) add_edge(3 + 2 * i, 2 + 2 * k, 1, 0);
    }
    int covered = 0;
    const int inf = 1 << 28;
    for (;;) {
        std::vector<int> dist(static_cast<size_t>(n_nodes), inf);
        std::vector<int> via(static_cast<size_t>(n_nodes), -1);
        dist[source] = 0;
        for (int round = 0; round < n_nodes; ++round) {
            bool changed = false;
            for (int v = 0; v < n_nodes; ++v) {
                if (dist[v] == inf) continue;
                for (int id : adj[v]) {
                    const edge& e = edges[id];
                    if (e.flow < e.cap && dist[v] + e.cost < dist[e.to]) {
                        dist[e.to] = dist[v] + e.cost;
                        via[e.to] = id;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (dist[sink] >= 0) break;  // further chains add no coverage
        for (int v = sink; v != source; v = edges[via[v] ^ 1].to) {
            edges[via[v]].flow += 1;
            edges[via[v] ^ 1].flow -= 1;
        }
        covered += -dist[sink];
    }
    return covered;
}

bool ne_before(const cell& a, const cell& b) { return a.row < b.row && a.col < b.col; }
bool se_before(const cell& a, const cell& b) { return a.row > b.row && a.col < b.col; }

std::vector<cell> region_crosses(const filling& f, int r, int c) {
    std::vector<cell> pts;
    for (const cell& x : f.crosses())
        if (x.row <= r && x.col <= c) pts.push_back(x);
    return pts;
}

}  // namespace

int ne_chain_stat(const filling& f, int r, int c, int j) {
    return max_chain_union(region_crosses(f, r, c), j, ne_before);
}

int se_chain_stat(const filling& f, int r, int c, int j) {
    return max_chain_union(region_crosses(f, r, c), j, se_before);
}

partition greene_shape(const filling& f, int r, int c) {
    std::vector<cell> pts = region_crosses(f, r, c);
    int height = max_chain_union(pts, static_cast<int>(pts.size()), se_before);
    std::vector<int> parts;
    int prev = 0;
    for (int j = 1; j <= height; ++j) {
        int total = max_chain_union(pts, j, ne_before);
        parts.push_back(total - prev);
        prev = total;
    }
    return partition(std::move(parts));
}

std::string render_ascii(const growth_diagram& d) {
    const cell_arrangement& arr = d.arrangement();
    int rows = arr.rows();
    size_t label_width = 1;
    for (int r = 0; r <= rows; ++r)
        for (int c = 0; c <= d.corner_extent(r); ++c)
            label_width = std::max(label_width, format_partition_compact(d.label(r, c)).size());
    size_t pitch = label_width + 3;
    std::string out;
    for (int r = rows; r >= 0; --r) {
        std::string line;
        for (int c = 0; c <= d.corner_extent(r); ++c) {
            std::string lab = format_partition_compact(d.label(r, c));
            line.resize(static_cast<size_t>(c) * pitch, ' ');
            line += lab;
        }
        out += line;
        out += '\n';
        if (r == 0) break;
        line.clear();
        for (int c = 1; c <= arr.row_length(r); ++c) {
            if (!d.get_filling().cross_at(r, c)) continue;
            size_t at = static_cast<size_t>(c - 1) * pitch + label_width + 1;
            if (line.size() < at + 1) line.resize(at + 1, ' ');
            line[at] = 'X';
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string format_boundary_word(const boundary_word& w) {
    bool all_strict = true;
    for (size_t i = 0; i < w.steps.size(); ++i)
        if (w.labels[i].size() == w.labels[i + 1].size()) all_strict = false;
    std::string out;
    for (size_t i = 0; i < w.labels.size(); ++i) {
        if (i > 0) {
            if (all_strict)
                out += w.steps[i - 1] == step_dir::horizontal ? '<' : '>';
            else {
                out += w.steps[i - 1] == step_dir::horizontal ? 'h' : 'v';
                if (w.labels[i - 1].size() == w.labels[i].size()) out += '=';
            }
        }
        out += format_partition_compact(w.labels[i]);
    }
    return out;
}

boundary_word parse_boundary_word(const std::string& text) {
    boundary_word w;
    std::string token;
    auto flush = [&] {
        if (token.empty()) raise(errc::parse_error, "missing partition in boundary word");
        w.labels.push_back(parse_partition(token));
        token.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '<' || ch == '>') {
            flush();
            w.steps.push_back(ch == '<' ? step_dir::horizontal : step_dir::vertical);
        } else if (ch == 'h' || ch == 'v') {
            flush();
            w.steps.push_back(ch == 'h' ? step_dir::horizontal : step_dir::vertical);
            if (i + 1 < text.size() && text[i + 1] == '=') ++i;
        } else {
            token += ch;
        }
    }
    flush();
    if (w.labels.size() != w.steps.size() + 1)
        raise(errc::parse_error, "boundary word label/step mismatch");
    return w;
}

filling filling_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("bad JSON: ") + e.what());
    }
    try {
        std::vector<int> rows = j.at("rows").get<std::vector<int>>();
        std::vector<cell> crosses;
        for (const auto& pair : j.value("crosses", nlohmann::json::array())) {
            if (!pair.is_array() || pair.size() != 2)
                raise(errc::parse_error, "crosses must be [row, col] pairs");
            crosses.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return filling(cell_arrangement(std::move(rows)), std::move(crosses));
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("bad filling JSON: ") + e.what());
    }
}

std::string filling_to_json(const filling& f) {
    nlohmann::json j;
    std::vector<int> rows;
    for (int r = 1; r <= f.arrangement().rows(); ++r) rows.push_back(f.arrangement().row_length(r));
    j["rows"] = rows;
    auto crosses = nlohmann::json::array();
    for (const cell& x : f.crosses()) crosses.push_back({x.row, x.col});
    j["crosses"] = crosses;
    return j.dump();
}

std::string json_boundary_note(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception&) {
        return "";
    }
    return j.value("boundary", "");
}

}  // namespace vt
