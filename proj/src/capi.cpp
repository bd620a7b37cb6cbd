#include "vactab/vactab.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "appendix_data.hpp"
#include "identities.hpp"

namespace {

thread_local std::string g_last_error;

vt_status status_of(vt::errc code) {
    switch (code) {
        case vt::errc::parse_error:
            return VT_ERR_PARSE;
        case vt::errc::rule_violation:
        case vt::errc::invalid_boundary:
        case vt::errc::property_violation:
        case vt::errc::not_in_family:
            return VT_ERR_RULE;
        default:
            return VT_ERR_INVALID;
    }
}

template <typename F>
vt_status wrap(F&& f) {
    try {
        f();
        return VT_OK;
    } catch (const vt::error& e) {
        g_last_error = std::string(vt::errc_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VT_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string need(const char* s, const char* what) {
    if (s == nullptr) vt::raise(vt::errc::bad_params, std::string(what) + " must not be null");
    return s;
}

nlohmann::json partition_json(const vt::partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json vactab_json(const vt::vacillating_tableau& v) {
    auto arr = nlohmann::json::array();
    for (const auto& p : v.seq) arr.push_back(partition_json(p));
    return arr;
}

nlohmann::json syt_json(const vt::syt_chain& t) {
    return nlohmann::json(vt::syt_to_tableau(t));
}

nlohmann::json sp_json(const vt::set_partition& pi) {
    return nlohmann::json(pi.blocks());
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) vt::raise(vt::errc::parse_error, "empty entry in integer list");
        out.push_back(std::stoi(tok));
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (std::isdigit(static_cast<unsigned char>(ch)))
            tok += ch;
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            vt::raise(vt::errc::parse_error, "bad character in integer list");
        else if (!tok.empty())
            flush();
    }
    if (!tok.empty()) flush();
    return out;
}

std::string format_csv_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::pair<std::string, std::string> split_two_lines(const std::string& input) {
    size_t nl = input.find('\n');
    if (nl == std::string::npos)
        vt::raise(vt::errc::parse_error, "expected two newline-separated values");
    return {input.substr(0, nl), input.substr(nl + 1)};
}

}  // namespace

struct vt_list {
    std::vector<std::string> items;
};

extern "C" {

const char* vt_version(void) { return "1.0.0"; }

const char* vt_last_error(void) { return g_last_error.c_str(); }

void vt_string_free(char* s) { ::free(s); }

size_t vt_list_size(const vt_list* l) { return l ? l->items.size() : 0; }

const char* vt_list_get(const vt_list* l, size_t i) {
    return (l && i < l->items.size()) ? l->items[i].c_str() : nullptr;
}

void vt_list_free(vt_list* l) { delete l; }

vt_status vt_partition_normalize(const char* text, char** out) {
    return wrap([&] {
        *out = dup_string(vt::format_partition(vt::parse_partition(need(text, "text"))));
    });
}

vt_status vt_partition_unite(const char* a, const char* b, char** out) {
    return wrap([&] {
        *out = dup_string(vt::format_partition(
            vt::unite(vt::parse_partition(need(a, "a")), vt::parse_partition(need(b, "b")))));
    });
}

vt_status vt_partition_intersect(const char* a, const char* b, char** out) {
    return wrap([&] {
        *out = dup_string(vt::format_partition(
            vt::intersect(vt::parse_partition(need(a, "a")), vt::parse_partition(need(b, "b")))));
    });
}

vt_status vt_partition_conjugate(const char* a, char** out) {
    return wrap([&] {
        *out = dup_string(vt::format_partition(vt::conjugate(vt::parse_partition(need(a, "a")))));
    });
}

vt_status vt_partition_contains(const char* a, const char* b, int* out) {
    return wrap([&] {
        *out = vt::contains(vt::parse_partition(need(a, "a")), vt::parse_partition(need(b, "b")))
                   ? 1
                   : 0;
    });
}

vt_status vt_count_vactab(const char* from, const char* to, int k, uint64_t* out) {
    return wrap([&] {
        *out = vt::count_vactab(vt::parse_partition(need(from, "from")),
                                vt::parse_partition(need(to, "to")), k);
    });
}

vt_status vt_count_syt(const char* shape, uint64_t* out) {
    return wrap([&] { *out = vt::count_syt(vt::parse_partition(need(shape, "shape"))); });
}

vt_status vt_stirling(int k, int l, uint64_t* out) {
    return wrap([&] { *out = vt::stirling(k, l); });
}

vt_status vt_bell(int m, uint64_t* out) {
    return wrap([&] { *out = vt::bell(m); });
}

vt_status vt_enum_vactab(const char* from, const char* to, int k, int as_json, vt_list** out) {
    return wrap([&] {
        auto items = vt::enumerate_vactab(vt::parse_partition(need(from, "from")),
                                          vt::parse_partition(need(to, "to")), k);
        auto* l = new vt_list;
        for (const auto& v : items)
            l->items.push_back(as_json ? vactab_json(v).dump() : vt::format_vactab(v));
        *out = l;
    });
}

vt_status vt_enum_syt(const char* shape, int as_json, vt_list** out) {
    return wrap([&] {
        auto items = vt::enumerate_syt(vt::parse_partition(need(shape, "shape")));
        auto* l = new vt_list;
        for (const auto& t : items)
            l->items.push_back(as_json ? syt_json(t).dump() : vt::format_syt(t));
        *out = l;
    });
}

vt_status vt_enum_set_partitions(int k, int blocks, int as_json, vt_list** out) {
    return wrap([&] {
        auto items = vt::enumerate_set_partitions(k, blocks);
        auto* l = new vt_list;
        for (const auto& pi : items)
            l->items.push_back(as_json ? sp_json(pi).dump() : vt::format_set_partition(pi));
        *out = l;
    });
}

vt_status vt_map(const char* id, int n, int k, const char* mu, const char* input, int as_json,
                 char** out) {
    return wrap([&] {
        std::string which = need(id, "id");
        std::string in = need(input, "input");
        std::string payload;
        if (which == "1.1" || which == "1.4") {
            auto seq = parse_csv_ints(in);
            auto pair = which == "1.1"
                            ? vt::seq_to_pair_11(n, k, seq)
                            : vt::seq_to_pair_14(n, k, vt::parse_partition(need(mu, "mu")), seq);
            if (as_json) {
                nlohmann::json j{{"syt", syt_json(pair.first)}, {"vactab", vactab_json(pair.second)}};
                payload = j.dump();
            } else {
                payload = vt::format_syt(pair.first) + "\n" + vt::format_vactab(pair.second);
            }
        } else if (which == "1.3" || which == "1.5") {
            auto pi = vt::parse_set_partition(in, k);
            auto v = which == "1.3" ? vt::sp_to_vactab_13(n, k, pi) : vt::sp_to_vactab_15(n, k, pi);
            payload = as_json ? vactab_json(v).dump() : vt::format_vactab(v);
        } else if (which == "1.2") {
            auto v = vt::parse_vactab(in);
            if (v.length() != 2 * k)
                vt::raise(vt::errc::bad_endpoints, "input must have length 2k");
            auto halves = vt::split_vactab(v);
            if (as_json) {
                payload = nlohmann::json{vactab_json(halves.first), vactab_json(halves.second)}.dump();
            } else {
                payload = vt::format_vactab(halves.first) + "\n" + vt::format_vactab(halves.second);
            }
        } else if (which == "1.6") {
            auto f = vt::filling_from_json(in);
            auto v = vt::filling_to_vactab_16(f);
            payload = as_json ? vactab_json(v).dump() : vt::format_vactab(v);
        } else {
            vt::raise(vt::errc::bad_params, "unknown identity '" + which + "'");
        }
        *out = dup_string(payload);
    });
}

vt_status vt_unmap(const char* id, int n, int k, const char* mu, const char* input, int as_json,
                   char** out) {
    return wrap([&] {
        std::string which = need(id, "id");
        std::string in = need(input, "input");
        std::string payload;
        if (which == "1.1" || which == "1.4") {
            auto [syt_text, vactab_text] = split_two_lines(in);
            auto t = vt::parse_syt(syt_text);
            auto v = vt::parse_vactab(vactab_text);
            auto seq = which == "1.1"
                           ? vt::pair_to_seq_11(n, k, t, v)
                           : vt::pair_to_seq_14(n, k, vt::parse_partition(need(mu, "mu")), t, v);
            payload = as_json ? nlohmann::json(seq).dump() : format_csv_ints(seq);
        } else if (which == "1.3" || which == "1.5") {
            auto v = vt::parse_vactab(in);
            auto pi = which == "1.3" ? vt::vactab_to_sp_13(n, k, v) : vt::vactab_to_sp_15(n, k, v);
            payload = as_json ? sp_json(pi).dump() : vt::format_set_partition(pi);
        } else if (which == "1.2") {
            auto [first_text, second_text] = split_two_lines(in);
            auto glued = vt::glue_vactab(vt::parse_vactab(first_text), vt::parse_vactab(second_text));
            payload = as_json ? vactab_json(glued).dump() : vt::format_vactab(glued);
        } else if (which == "1.6") {
            auto v = vt::parse_vactab(in);
            payload = vt::filling_to_json(vt::vactab_to_filling_16(n, k, v));
        } else {
            vt::raise(vt::errc::bad_params, "unknown identity '" + which + "'");
        }
        *out = dup_string(payload);
    });
}

vt_status vt_verify(const char* id, int n, int k, const char* mu, uint64_t* lhs, uint64_t* rhs,
                    int* ok, char** detail) {
    return wrap([&] {
        std::optional<vt::partition> mu_val;
        if (mu != nullptr && *mu != '\0') mu_val = vt::parse_partition(mu);
        auto rep = vt::verify_identity(need(id, "id"), n, k, mu_val);
        if (lhs) *lhs = rep.lhs;
        if (rhs) *rhs = rep.rhs;
        if (ok) *ok = rep.ok ? 1 : 0;
        if (detail) *detail = dup_string(rep.detail);
    });
}

vt_status vt_appendix(char which, char** out) {
    return wrap([&] {
        vt::partition from, to;
        int k = 0;
        switch (which) {
            case 'A':
                from = to = vt::partition({3});
                k = 5;
                break;
            case 'B':
                from = vt::partition({3});
                to = vt::partition({1, 1, 1});
                k = 5;
                break;
            case 'C':
                from = to = vt::partition({2, 1});
                k = 3;
                break;
            default:
                vt::raise(vt::errc::bad_params, "appendix must be A, B, or C");
        }
        auto items = vt::enumerate_vactab(from, to, k);
        std::set<vt::vacillating_tableau> computed(items.begin(), items.end());
        std::set<vt::vacillating_tableau> transcribed;
        for (const char* line : vt::appendix_listing(which))
            transcribed.insert(vt::parse_vactab(line));
        if (computed != transcribed)
            throw std::runtime_error("enumeration disagrees with the transcribed listing");
        std::string payload;
        for (const auto& v : items) {
            payload += vt::format_vactab(v);
            payload += '\n';
        }
        payload += "total " + std::to_string(items.size());
        *out = dup_string(payload);
    });
}

vt_status vt_growth_roundtrip(const char* json, int* ok, char** report) {
    return wrap([&] {
        std::string text = need(json, "json");
        vt::filling f = vt::filling_from_json(text);
        vt::growth_diagram d = vt::forward_growth(f);
        std::string log;
        bool good = true;
        auto note = [&](const std::string& line) {
            good = false;
            if (!log.empty()) log += '\n';
            log += line;
        };
        for (int r = 0; r <= f.arrangement().rows() && good; ++r) {
            for (int c = 0; c <= d.corner_extent(r) && good; ++c) {
                vt::partition oracle = vt::greene_shape(f, r, c);
                if (d.label(r, c) != oracle) {
                    note("corner (" + std::to_string(r) + "," + std::to_string(c) +
                         "): label " + vt::format_partition(d.label(r, c)) + " vs oracle " +
                         vt::format_partition(oracle));
                    break;
                }
                vt::partition conj = vt::conjugate(oracle);
                int sum = 0;
                for (int j = 1; j <= conj.rows(); ++j) {
                    sum += conj.part(j);
                    if (vt::se_chain_stat(f, r, c, j) != sum) {
                        note("corner (" + std::to_string(r) + "," + std::to_string(c) +
                             "): SE-chain statistic disagrees with the conjugate");
                        break;
                    }
                }
            }
        }
        vt::boundary_word w = vt::read_boundary(d);
        if (good && !(vt::backward_growth(f.arrangement(), w) == f))
            note("backward reconstruction does not return the filling");
        std::string expected = vt::json_boundary_note(text);
        if (good && !expected.empty() && vt::format_boundary_word(w) != expected)
            note("boundary " + vt::format_boundary_word(w) + " differs from expected " + expected);
        std::string payload = good ? "ok" : "mismatch";
        payload += "\nboundary " + vt::format_boundary_word(w);
        if (!log.empty()) payload += "\n" + log;
        if (ok) *ok = good ? 1 : 0;
        if (report) *report = dup_string(payload);
    });
}

vt_status vt_growth_render(const char* json, char** out) {
    return wrap([&] {
        vt::filling f = vt::filling_from_json(need(json, "json"));
        *out = dup_string(vt::render_ascii(vt::forward_growth(f)));
    });
}

vt_status vt_limiting_vactab(int k, const char* seq, int n, char** out) {
    return wrap([&] {
        auto entries = vt::limiting_vactab(k, parse_csv_ints(need(seq, "seq")), n);
        std::string payload;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i > 0) payload += ' ';
            payload += vt::format_partition_compact(entries[i]);
        }
        *out = dup_string(payload);
    });
}

}  // extern "C"
