// Command-line front end; all combinatorics goes through the C API.

#include <vactab/vactab.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct options {
    std::string verb;
    std::string id, mu, seq, from, to;
    std::string format = "text";
    int n = -1, k = -1;
    std::vector<std::string> positionals;
};

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

int api_error() {
    std::fprintf(stderr, "error: %s\n", vt_last_error());
    return 2;
}

void print_owned(char* s) {
    std::fputs(s, stdout);
    std::fputc('\n', stdout);
    vt_string_free(s);
}

bool parse_int(const std::string& text, int& out) {
    try {
        size_t pos = 0;
        out = std::stoi(text, &pos);
        return pos == text.size();
    } catch (...) {
        return false;
    }
}

int parse_args(int argc, char** argv, options& opt) {
    if (argc < 2) return usage_error("usage: vactab <enum|verify|map|unmap|growth|appendix> ...");
    opt.verb = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        auto take_value = [&](std::string& slot) -> int {
            if (i + 1 >= argc) return usage_error(arg + " needs a value");
            slot = argv[++i];
            return 0;
        };
        int rc = 0;
        if (arg == "--id")
            rc = take_value(opt.id);
        else if (arg == "--mu")
            rc = take_value(opt.mu);
        else if (arg == "--seq")
            rc = take_value(opt.seq);
        else if (arg == "--from")
            rc = take_value(opt.from);
        else if (arg == "--to")
            rc = take_value(opt.to);
        else if (arg == "--format")
            rc = take_value(opt.format);
        else if (arg == "--n" || arg == "--k") {
            std::string value;
            rc = take_value(value);
            if (rc == 0 && !parse_int(value, arg == "--n" ? opt.n : opt.k))
                rc = usage_error(arg + " needs an integer");
        } else if (arg.rfind("--", 0) == 0) {
            rc = usage_error("unknown flag " + arg);
        } else {
            opt.positionals.push_back(arg);
        }
        if (rc != 0) return rc;
    }
    if (opt.format != "text" && opt.format != "json")
        return usage_error("--format must be text or json");
    return 0;
}

int print_list(vt_list* list, bool as_json) {
    if (as_json) {
        std::string out = "[";
        for (size_t i = 0; i < vt_list_size(list); ++i) {
            if (i > 0) out += ",";
            out += vt_list_get(list, i);
        }
        out += "]";
        std::puts(out.c_str());
    } else {
        size_t count = vt_list_size(list);
        for (size_t i = 0; i < count; ++i) std::puts(vt_list_get(list, i));
        std::printf("total %zu\n", count);
    }
    vt_list_free(list);
    return 0;
}

int run_enum(const options& opt) {
    bool as_json = opt.format == "json";
    vt_list* list = nullptr;
    if (!opt.from.empty() || !opt.to.empty()) {
        if (opt.from.empty() || opt.to.empty() || opt.k < 0)
            return usage_error("enum needs --from, --to and --k for vacillating tableaux");
        if (vt_enum_vactab(opt.from.c_str(), opt.to.c_str(), opt.k, as_json, &list) != VT_OK)
            return api_error();
    } else if (!opt.mu.empty()) {
        if (vt_enum_syt(opt.mu.c_str(), as_json, &list) != VT_OK) return api_error();
    } else if (opt.k >= 0) {
        if (vt_enum_set_partitions(opt.k, -1, as_json, &list) != VT_OK) return api_error();
    } else {
        return usage_error("enum needs --from/--to/--k, --mu, or --k");
    }
    return print_list(list, as_json);
}

int run_verify(const options& opt) {
    if (opt.id.empty() || opt.n < 0 || opt.k < 0)
        return usage_error("verify needs --id, --n and --k");
    uint64_t lhs = 0, rhs = 0;
    int ok = 0;
    char* detail = nullptr;
    if (vt_verify(opt.id.c_str(), opt.n, opt.k, opt.mu.empty() ? nullptr : opt.mu.c_str(), &lhs,
                  &rhs, &ok, &detail) != VT_OK)
        return api_error();
    if (opt.format == "json") {
        std::printf("{\"id\":\"%s\",\"n\":%d,\"k\":%d,\"lhs\":%llu,\"rhs\":%llu,\"ok\":%s}\n",
                    opt.id.c_str(), opt.n, opt.k, static_cast<unsigned long long>(lhs),
                    static_cast<unsigned long long>(rhs), ok ? "true" : "false");
        vt_string_free(detail);
    } else {
        print_owned(detail);
    }
    return ok ? 0 : 1;
}

// The (1.6) filling argument may be inline JSON or a file holding it.
int load_payload(const std::string& arg, std::string& out) {
    if (!arg.empty() && arg[0] == '{') {
        out = arg;
        return 0;
    }
    std::ifstream in(arg);
    if (!in) return usage_error("cannot read file " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return 0;
}

int run_map(const options& opt, bool backward) {
    if (opt.id.empty() || opt.n < 0 || opt.k < 0)
        return usage_error("map/unmap need --id, --n and --k");
    std::string input;
    if (!backward && (opt.id == "1.1" || opt.id == "1.4")) {
        if (opt.seq.empty()) return usage_error("map --id " + opt.id + " needs --seq");
        input = opt.seq;
    } else if (backward && (opt.id == "1.1" || opt.id == "1.4" || opt.id == "1.2")) {
        if (opt.positionals.size() != 2)
            return usage_error("unmap --id " + opt.id + " needs two arguments");
        input = opt.positionals[0] + "\n" + opt.positionals[1];
    } else {
        if (opt.positionals.size() != 1)
            return usage_error((backward ? "unmap" : "map") + std::string(" --id ") + opt.id +
                               " needs one argument");
        if (!backward && opt.id == "1.6") {
            if (load_payload(opt.positionals[0], input) != 0) return 2;
        } else {
            input = opt.positionals[0];
        }
    }
    bool as_json = opt.format == "json";
    char* out = nullptr;
    vt_status rc = backward ? vt_unmap(opt.id.c_str(), opt.n, opt.k,
                                       opt.mu.empty() ? nullptr : opt.mu.c_str(), input.c_str(),
                                       as_json, &out)
                            : vt_map(opt.id.c_str(), opt.n, opt.k,
                                     opt.mu.empty() ? nullptr : opt.mu.c_str(), input.c_str(),
                                     as_json, &out);
    if (rc != VT_OK) return api_error();
    print_owned(out);
    return 0;
}

int run_growth(const options& opt) {
    if (opt.positionals.size() != 1) return usage_error("growth needs a filling JSON file");
    std::string json;
    if (load_payload(opt.positionals[0], json) != 0) return 2;
    if (opt.format == "text") {
        char* art = nullptr;
        if (vt_growth_render(json.c_str(), &art) != VT_OK) return api_error();
        std::fputs(art, stdout);
        vt_string_free(art);
    }
    int ok = 0;
    char* report = nullptr;
    if (vt_growth_roundtrip(json.c_str(), &ok, &report) != VT_OK) return api_error();
    print_owned(report);
    return ok ? 0 : 1;
}

int run_appendix(const options& opt) {
    if (opt.positionals.size() != 1 || opt.positionals[0].size() != 1)
        return usage_error("appendix needs A, B, or C");
    char* out = nullptr;
    if (vt_appendix(opt.positionals[0][0], &out) != VT_OK) return api_error();
    print_owned(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    options opt;
    int rc = parse_args(argc, argv, opt);
    if (rc != 0) return rc;
    if (opt.verb == "enum") return run_enum(opt);
    if (opt.verb == "verify") return run_verify(opt);
    if (opt.verb == "map") return run_map(opt, false);
    if (opt.verb == "unmap") return run_map(opt, true);
    if (opt.verb == "growth") return run_growth(opt);
    if (opt.verb == "appendix") return run_appendix(opt);
    return usage_error("unknown verb '" + opt.verb + "'");
}
