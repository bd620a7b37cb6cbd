#pragma once

#include <stdexcept>
#include <string>

namespace vt {

enum class errc {
    parse_error,
    invalid_corner,
    rule_violation,
    invalid_boundary,
    size_mismatch,
    bad_endpoints,
    too_many_blocks,
    wrong_block_count,
    out_of_range,
    bad_shape,
    shape_mismatch,
    property_violation,
    not_in_family,
    n_too_small,
    bad_params,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace vt
