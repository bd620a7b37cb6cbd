#include "partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace vt {

const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::invalid_corner: return "InvalidCorner";
        case errc::rule_violation: return "RuleViolation";
        case errc::invalid_boundary: return "InvalidBoundary";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::bad_endpoints: return "BadEndpoints";
        case errc::too_many_blocks: return "TooManyBlocks";
        case errc::wrong_block_count: return "WrongBlockCount";
        case errc::out_of_range: return "OutOfRange";
        case errc::bad_shape: return "BadShape";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::property_violation: return "PropertyViolation";
        case errc::not_in_family: return "NotInFamily";
        case errc::n_too_small: return "NTooSmall";
        case errc::bad_params: return "BadParams";
    }
    return "UnknownError";
}

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            raise(errc::parse_error, "parts must be weakly decreasing positive integers");
    }
}

partition partition::single_row(int n) {
    return n > 0 ? partition({n}) : partition();
}

partition partition::single_col(int n) {
    return partition(std::vector<int>(static_cast<size_t>(std::max(n, 0)), 1));
}

int partition::part(int row) const {
    return (row >= 1 && row <= rows()) ? parts_[row - 1] : 0;
}

int partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool contains(const partition& mu, const partition& nu) {
    if (nu.rows() > mu.rows()) return false;
    for (int i = 1; i <= nu.rows(); ++i)
        if (nu.part(i) > mu.part(i)) return false;
    return true;
}

partition unite(const partition& mu, const partition& nu) {
    std::vector<int> parts;
    int rows = std::max(mu.rows(), nu.rows());
    parts.reserve(rows);
    for (int i = 1; i <= rows; ++i) parts.push_back(std::max(mu.part(i), nu.part(i)));
    return partition(std::move(parts));
}

partition intersect(const partition& mu, const partition& nu) {
    std::vector<int> parts;
    int rows = std::min(mu.rows(), nu.rows());
    parts.reserve(rows);
    for (int i = 1; i <= rows; ++i) parts.push_back(std::min(mu.part(i), nu.part(i)));
    return partition(std::move(parts));
}

partition conjugate(const partition& lambda) {
    std::vector<int> parts;
    parts.reserve(lambda.part(1));
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= lambda.rows(); ++i)
            if (lambda.part(i) >= j) ++count;
        parts.push_back(count);
    }
    return partition(std::move(parts));
}

partition add_cell(const partition& lambda, int row) {
    if (row < 1 || row > lambda.rows() + 1 ||
        (row > 1 && lambda.part(row - 1) <= lambda.part(row)))
        raise(errc::invalid_corner, "row " + std::to_string(row) + " cannot grow");
    std::vector<int> parts = lambda.parts();
    if (row == lambda.rows() + 1)
        parts.push_back(1);
    else
        ++parts[row - 1];
    return partition(std::move(parts));
}

partition remove_cell(const partition& lambda, int row) {
    if (row < 1 || row > lambda.rows() || lambda.part(row) <= lambda.part(row + 1))
        raise(errc::invalid_corner, "row " + std::to_string(row) + " has no removable cell");
    std::vector<int> parts = lambda.parts();
    --parts[row - 1];
    return partition(std::move(parts));
}

std::optional<int> diff_by_one(const partition& a, const partition& b) {
    int rows = std::max(a.rows(), b.rows());
    std::optional<int> found;
    for (int i = 1; i <= rows; ++i) {
        int d = b.part(i) - a.part(i);
        if (d == 0) continue;
        if (d != 1 && d != -1) return std::nullopt;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

namespace {

int parse_int(const std::string& tok) {
    if (tok.empty() || tok.size() > 9 || tok[0] == '0') raise(errc::parse_error, "bad part '" + tok + "'");
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            raise(errc::parse_error, "bad part '" + tok + "'");
    return std::stoi(tok);
}

}  // namespace

partition parse_partition(const std::string& text) {
    if (text == "-") return partition();
    if (text.empty()) raise(errc::parse_error, "empty partition text");
    if (text.find(',') != std::string::npos) {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            parts.push_back(parse_int(text.substr(pos, next - pos)));
            pos = next + 1;
        }
        return partition(std::move(parts));
    }
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            raise(errc::parse_error, "bad partition text '" + text + "'");
    if (text.size() == 1) return partition({parse_int(text)});
    // Compact digit form; strings it cannot express (a 0 digit or increasing
    // digits) fall back to a single part, keeping parse(format(p)) = p for
    // single parts >= 10.
    bool compact = true;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '0' || (i > 0 && text[i] > text[i - 1])) {
            compact = false;
            break;
        }
    }
    if (compact) {
        std::vector<int> parts;
        for (char ch : text) parts.push_back(ch - '0');
        return partition(std::move(parts));
    }
    return partition({parse_int(text)});
}

std::string format_partition(const partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 1; i <= p.rows(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

std::string format_partition_compact(const partition& p) {
    if (p.empty()) return "-";
    if (p.part(1) > 9) return format_partition(p);
    std::string out;
    for (int v : p.parts()) out += static_cast<char>('0' + v);
    return out;
}

std::vector<partition> partitions_of(int n) {
    std::vector<partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::max(n, 1));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vt
