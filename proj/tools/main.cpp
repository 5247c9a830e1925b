// gallai: command-line front end over the C API.
//
// Exit codes: 0 ok, 2 usage / parse / not-Gallai, 3 verification failure or
// reference mismatch, 4 size guard.

#include <gallai/gallai.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitSize = 4;
constexpr int kExitInternal = 1;

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(gallai_status s) {
    switch (s) {
        case GALLAI_OK: return kExitOk;
        case GALLAI_E_UNSUPPORTED_SIZE: return kExitSize;
        case GALLAI_E_INVALID_ARGUMENT:
        case GALLAI_E_NOT_GALLAI:
        case GALLAI_E_PARSE: return kExitUsage;
        default: return kExitInternal;
    }
}

void check(gallai_status s) {
    if (s != GALLAI_OK) throw Failure{exit_code_for(s), std::string(gallai_status_name(s)) + ": " + gallai_last_error()};
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void csv_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << csv_field(fields[i]);
    std::cout << '\n';
}

// Milliseconds with three decimals, the same value in CSV and JSON.
double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

json envelope(const std::string& command, json parameters, json results) {
    json body;
    body["timestamp"] = timestamp();
    body["parameters"] = std::move(parameters);
    body["results"] = std::move(results);
    json out;
    out[command] = std::move(body);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// RAII over the opaque handles.
struct Coloring {
    gallai_coloring* p = nullptr;
    Coloring() = default;
    Coloring(const Coloring&) = delete;
    Coloring& operator=(const Coloring&) = delete;
    ~Coloring() { gallai_coloring_free(p); }
};

std::string format_of(const gallai_coloring* phi) {
    size_t needed = 0;
    gallai_coloring_format(phi, nullptr, 0, &needed);
    std::string buf(needed, '\0');
    check(gallai_coloring_format(phi, buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    return buf;
}

std::string colors_of(const gallai_coloring* phi) {
    const std::string text = format_of(phi);
    return text.substr(text.find('\n') + 1);
}

struct ColoringSource {
    std::string path;
    std::string inline_text;
};

// --inline takes the file text; a literal backslash-n also separates the
// two lines so the shell form "3\nrrr" works without $'...'.
std::string read_source(const ColoringSource& src) {
    if (!src.path.empty() && !src.inline_text.empty()) throw Failure{kExitUsage, "give either --coloring or --inline"};
    if (!src.inline_text.empty()) {
        std::string text = src.inline_text;
        for (std::size_t pos; (pos = text.find("\\n")) != std::string::npos;) text.replace(pos, 2, "\n");
        return text;
    }
    if (src.path.empty()) throw Failure{kExitUsage, "a coloring is required (--coloring <path> or --inline <text>)"};
    std::ifstream in(src.path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot read " + src.path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void load(const ColoringSource& src, Coloring& out) {
    const std::string text = read_source(src);
    const gallai_status s = gallai_coloring_parse(text.data(), text.size(), &out.p, nullptr);
    if (s == GALLAI_E_PARSE)
        throw Failure{kExitUsage, "parse error: " + std::string(gallai_last_error())};
    check(s);
}

std::string colors_used_string(unsigned mask) {
    std::string s;
    const char* names = "rgb";
    for (int c = 0; c < 3; ++c)
        if (mask & (1 << c)) s += names[c];
    return s;
}

std::string witness_string(const gallai_class_info& info) {
    std::string s;
    if (info.witness_vertex >= 0) s = "v" + std::to_string(info.witness_vertex);
    for (int i = 0; i < info.witness_edges; ++i) {
        if (!s.empty()) s += ' ';
        s += std::to_string(info.edge_lo[i]) + "-" + std::to_string(info.edge_hi[i]);
    }
    return s;
}

json class_json(const gallai_class_info& info) {
    json j;
    j["kind"] = gallai_kind_name(info.kind);
    j["colors_used"] = info.colors_used;
    j["special"] = info.kind != GALLAI_NON_SPECIAL;
    j["witness_vertex"] = info.witness_vertex >= 0 ? json(info.witness_vertex) : json(nullptr);
    json edges = json::array();
    for (int i = 0; i < info.witness_edges; ++i) edges.push_back({info.edge_lo[i], info.edge_hi[i]});
    j["witness_edges"] = edges;
    return j;
}

// ---- count -------------------------------------------------------------------

struct CountArgs {
    int n = 0;
    int threads = 1;
    bool deep = false;
    std::string format = "csv";
};

void heartbeat(uint64_t done, uint64_t total, void* user) {
    auto* last = static_cast<std::chrono::steady_clock::time_point*>(user);
    const auto now = std::chrono::steady_clock::now();
    if (done != total && now - *last < std::chrono::seconds(2)) return;
    *last = now;
    std::fprintf(stderr, "progress %llu/%llu subproblems\n", static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
}

int cmd_count(const CountArgs& a) {
    if (a.n > 8) throw Failure{kExitSize, "count supports n <= 8"};
    if (a.n == 8 && !a.deep) throw Failure{kExitSize, "n = 8 takes minutes; pass --deep to run it"};
    if (a.n < 2) throw Failure{kExitUsage, "count needs n >= 2"};

    auto last = std::chrono::steady_clock::now();
    gallai_counts r{};
    check(gallai_count(a.n, a.threads, a.n >= 8 ? heartbeat : nullptr, &last, &r));

    const gallai_counts_row* ref = nullptr;
    const size_t ref_rows = gallai_reference_counts(&ref);
    std::optional<bool> matches;
    for (size_t i = 0; i < ref_rows; ++i)
        if (ref[i].n == a.n)
            matches = ref[i].c1 == r.c1 && ref[i].c2 == r.c2 && ref[i].c3 == r.c3 && ref[i].c == r.c;

    const std::string match_text = matches ? (*matches ? "yes" : "no") : "n/a";
    if (a.format == "json") {
        json res{{"n", r.n}, {"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"c", r.c},
                 {"elapsed_ms", round3(r.elapsed_ms)}, {"workers", r.workers},
                 {"matches_reference", matches ? json(*matches) : json(nullptr)}};
        emit(envelope("count", {{"n", a.n}, {"threads", a.threads}, {"deep", a.deep}}, res));
    } else {
        csv_row({"n", "c1", "c2", "c3", "c", "elapsed_ms", "workers", "matches_reference"});
        csv_row({std::to_string(r.n), std::to_string(r.c1), std::to_string(r.c2), std::to_string(r.c3),
                 std::to_string(r.c), fixed3(r.elapsed_ms), std::to_string(r.workers), match_text});
    }
    if (matches && !*matches) {
        std::cerr << "count for n = " << a.n << " differs from the reference table\n";
        return kExitVerify;
    }
    return kExitOk;
}

// ---- extend / classify ---------------------------------------------------------

struct ColoringArgs {
    ColoringSource src;
    bool list = false;
    std::string format = "csv";
};

void print_star(const char* star, void*) { std::cout << star << '\n'; }

int cmd_extend(const ColoringArgs& a) {
    Coloring phi;
    load(a.src, phi);
    gallai_extension_count w{};
    check(gallai_count_extensions(phi.p, &w));
    gallai_class_info info{};
    check(gallai_coloring_classify(phi.p, &info));
    const int n = gallai_coloring_vertex_count(phi.p);

    if (a.list) {
        check(gallai_list_extensions(phi.p, print_star, nullptr));
        std::cerr << "w = " << w.total << " (" << w.all_three_colors << " using all three colors), "
                  << gallai_kind_name(info.kind) << '\n';
        return kExitOk;
    }
    if (a.format == "json") {
        json res{{"n", n}, {"coloring", colors_of(phi.p)}, {"w", w.total}, {"w_all_three", w.all_three_colors},
                 {"class", class_json(info)}};
        emit(envelope("extend", {{"n", n}}, res));
    } else {
        csv_row({"n", "coloring", "w", "w_all_three", "kind", "colors_used", "witness"});
        csv_row({std::to_string(n), colors_of(phi.p), std::to_string(w.total), std::to_string(w.all_three_colors),
                 gallai_kind_name(info.kind), std::to_string(info.colors_used), witness_string(info)});
    }
    return kExitOk;
}

int cmd_classify(const ColoringArgs& a) {
    Coloring phi;
    load(a.src, phi);
    int ok = 0;
    check(gallai_coloring_is_gallai(phi.p, &ok));
    const int n = gallai_coloring_vertex_count(phi.p);
    if (!ok) throw Failure{kExitUsage, "not-gallai: the coloring contains a rainbow triangle"};
    gallai_class_info info{};
    check(gallai_coloring_classify(phi.p, &info));
    unsigned mask = 0;
    check(gallai_coloring_colors_used(phi.p, &mask));
    std::optional<uint64_t> code;
    if (n <= 8) {
        uint64_t c = 0;
        check(gallai_coloring_canonical_code(phi.p, &c));
        code = c;
    }
    if (a.format == "json") {
        json res = class_json(info);
        res["n"] = n;
        res["coloring"] = colors_of(phi.p);
        res["colors"] = colors_used_string(mask);
        res["canonical_code"] = code ? json(*code) : json(nullptr);
        emit(envelope("classify", {{"n", n}}, res));
    } else {
        csv_row({"n", "coloring", "kind", "special", "colors_used", "colors", "witness", "canonical_code"});
        csv_row({std::to_string(n), colors_of(phi.p), gallai_kind_name(info.kind),
                 info.kind != GALLAI_NON_SPECIAL ? "yes" : "no", std::to_string(info.colors_used),
                 colors_used_string(mask), witness_string(info), code ? std::to_string(*code) : ""});
    }
    return kExitOk;
}

// ---- classes ---------------------------------------------------------------------

struct ClassesArgs {
    int n = 0;
    int colors = 0;
    bool special = false;
    bool non_special = false;
    bool no_mono_vertex = false;
    std::string format = "csv";
};

int cmd_classes(const ClassesArgs& a) {
    if (a.n > 6) throw Failure{kExitSize, "classes supports n <= 6"};
    gallai_class_filter f{a.colors, -1, a.no_mono_vertex ? 0 : -1};
    if (a.special) f.special = 1;
    if (a.non_special) f.special = 0;

    gallai_catalog* raw = nullptr;
    check(gallai_catalog_build(a.n, &f, &raw));
    std::unique_ptr<gallai_catalog, void (*)(gallai_catalog*)> catalog(raw, gallai_catalog_free);

    const size_t size = gallai_catalog_size(catalog.get());
    json entries = json::array();
    if (a.format != "json") csv_row({"index", "n", "coloring", "kind", "colors_used", "witness", "orbit_size", "canonical_code"});
    for (size_t i = 0; i < size; ++i) {
        uint64_t code = 0, orbit = 0;
        gallai_class_info info{};
        check(gallai_catalog_entry(catalog.get(), i, &code, &orbit, &info));
        const std::string colors = colors_of(gallai_catalog_coloring(catalog.get(), i));
        if (a.format == "json") {
            json e = class_json(info);
            e["coloring"] = colors;
            e["orbit_size"] = orbit;
            e["canonical_code"] = code;
            entries.push_back(std::move(e));
        } else {
            csv_row({std::to_string(i), std::to_string(a.n), colors, gallai_kind_name(info.kind),
                     std::to_string(info.colors_used), witness_string(info), std::to_string(orbit),
                     std::to_string(code)});
        }
    }
    if (a.format == "json") {
        json params{{"n", a.n},
                    {"colors", a.colors ? json(a.colors) : json(nullptr)},
                    {"special", f.special < 0 ? json(nullptr) : json(f.special == 1)},
                    {"no_mono_vertex", a.no_mono_vertex}};
        emit(envelope("classes", params, {{"count", size}, {"classes", entries}}));
    }
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------------

struct BoundsArgs {
    int max_n = 8;
    std::optional<int> exact_up_to;
    int threads = 1;
    bool deep = false;
    std::string format = "csv";
};

int cmd_bounds(const BoundsArgs& a) {
    if (a.max_n < 2) throw Failure{kExitUsage, "--max-n must be at least 2"};
    const int exact_to = a.exact_up_to.value_or(std::min(a.max_n, 7));
    if (exact_to > 8) throw Failure{kExitSize, "exact counts are available only up to n = 8"};
    if (exact_to == 8 && !a.deep) throw Failure{kExitSize, "exact count for n = 8 takes minutes; pass --deep"};

    std::vector<gallai_counts> exact;
    for (int n = 2; n <= std::min(exact_to, a.max_n); ++n) {
        gallai_counts r{};
        auto last = std::chrono::steady_clock::now();
        check(gallai_count(n, a.threads, n >= 8 ? heartbeat : nullptr, &last, &r));
        exact.push_back(r);
    }
    gallai_bound_table* raw = nullptr;
    check(gallai_bound_table_build(a.max_n, exact.data(), exact.size(), &raw));
    std::unique_ptr<gallai_bound_table, void (*)(gallai_bound_table*)> table(raw, gallai_bound_table_free);

    const gallai_bounds_row* ref = nullptr;
    const size_t ref_rows = gallai_reference_bounds(&ref);
    bool mismatch = false;

    static const char* const kNames[] = {"exact_c", "lower", "upper", "f", "k", "ratio_upper_over_c",
                                         "ratio_c_over_lower"};
    json rows = json::array();
    if (a.format != "json") csv_row({"n", "exact_c", "lower", "upper", "f", "k", "ratio_upper_over_c", "ratio_c_over_lower"});
    for (size_t i = 0; i < gallai_bound_table_rows(table.get()); ++i) {
        const int n = gallai_bound_table_n(table.get(), i);
        std::vector<std::string> fields{std::to_string(n)};
        for (int f = 0; f <= GALLAI_BOUND_RATIO_C_OVER_LOWER; ++f) fields.emplace_back(gallai_bound_table_field(table.get(), i, f));

        for (size_t r = 0; r < ref_rows; ++r) {
            if (ref[r].n != n) continue;
            mismatch |= fields[2] != std::to_string(ref[r].lower) || fields[3] != std::to_string(ref[r].upper);
            if (!fields[1].empty())
                mismatch |= fields[1] != std::to_string(ref[r].c) || fields[6] != ref[r].ratio_upper_over_c ||
                            fields[7] != ref[r].ratio_c_over_lower;
        }
        if (a.format == "json") {
            // Big integers are written as decimal strings.
            json row{{"n", n}};
            for (int f = 0; f < 7; ++f)
                row[kNames[f]] = fields[f + 1].empty() ? json(nullptr) : json(fields[f + 1]);
            rows.push_back(std::move(row));
        } else {
            csv_row(fields);
        }
    }
    if (a.format == "json")
        emit(envelope("bounds", {{"max_n", a.max_n}, {"exact_up_to", exact_to}}, {{"rows", rows}}));
    if (mismatch) {
        std::cerr << "bound table differs from the reference table\n";
        return kExitVerify;
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------------

struct VerifyArgs {
    bool deep = false;
    int threads = 1;
    std::string golden;
    std::string format = "csv";
};

// Reference counts override: a JSON array of {n, c1, c2, c3, c} objects.
std::vector<gallai_counts_row> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::vector<gallai_counts_row> rows;
    try {
        for (const auto& r : json::parse(in))
            rows.push_back({r.at("n").get<int>(), r.at("c1").get<uint64_t>(), r.at("c2").get<uint64_t>(),
                            r.at("c3").get<uint64_t>(), r.at("c").get<uint64_t>()});
    } catch (const json::exception& e) {
        throw Failure{kExitUsage, path + ": " + e.what()};
    }
    return rows;
}

struct VerifyState {
    const VerifyArgs* args;
    json checks = json::array();
    int passed = 0;
    int total = 0;
};

void on_check(int criterion, const char* name, int passed, const char* detail, void* user) {
    auto* st = static_cast<VerifyState*>(user);
    ++st->total;
    st->passed += passed ? 1 : 0;
    if (st->args->format == "json") {
        st->checks.push_back({{"criterion", criterion}, {"check", name}, {"passed", passed != 0}, {"detail", detail}});
    } else {
        csv_row({passed ? "PASS" : "FAIL", std::to_string(criterion), name, detail});
        std::cout.flush();
    }
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<gallai_counts_row> golden;
    if (!a.golden.empty()) golden = load_golden(a.golden);
    VerifyState st{&a};
    if (a.format != "json") csv_row({"status", "criterion", "check", "detail"});
    int all = 0;
    check(gallai_verify(a.deep, a.threads, a.golden.empty() ? nullptr : golden.data(), golden.size(), on_check, &st, &all));
    if (a.format == "json")
        emit(envelope("verify", {{"deep", a.deep}, {"threads", a.threads}},
                      {{"all_passed", all != 0}, {"passed", st.passed}, {"total", st.total}, {"checks", st.checks}}));
    std::cerr << st.passed << "/" << st.total << " checks passed\n";
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and verification of Gallai 3-colorings of complete graphs"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};

    CountArgs count;
    auto* c = app.add_subcommand("count", "count labeled Gallai colorings of K_n by colors used");
    c->add_option("--n", count.n, "number of vertices (2..8)")->required();
    c->add_option("--threads", count.threads, "worker threads")->check(CLI::Range(1, 256));
    c->add_option("--format", count.format)->check(CLI::IsMember(formats));
    c->add_flag("--deep", count.deep, "allow n = 8");

    ColoringArgs ext;
    auto* e = app.add_subcommand("extend", "count one-vertex Gallai extensions of a coloring");
    e->add_option("--coloring", ext.src.path, "coloring file");
    e->add_option("--inline", ext.src.inline_text, "coloring text, e.g. '3\\nrrr'");
    e->add_flag("--list", ext.list, "print every extension star");
    e->add_option("--format", ext.format)->check(CLI::IsMember(formats));

    ColoringArgs cls;
    auto* k = app.add_subcommand("classify", "classify a Gallai coloring");
    k->add_option("--coloring", cls.src.path, "coloring file");
    k->add_option("--inline", cls.src.inline_text, "coloring text");
    k->add_option("--format", cls.format)->check(CLI::IsMember(formats));

    ClassesArgs classes;
    auto* l = app.add_subcommand("classes", "list isomorphism classes of Gallai colorings of K_n");
    l->add_option("--n", classes.n, "number of vertices (2..6)")->required();
    l->add_option("--colors", classes.colors, "exact number of colors used")->check(CLI::Range(1, 3));
    auto* sp = l->add_flag("--special", classes.special, "special classes only");
    auto* ns = l->add_flag("--non-special", classes.non_special, "non-special classes only");
    sp->excludes(ns);
    l->add_flag("--no-mono-vertex", classes.no_mono_vertex, "classes without a monochromatic vertex");
    l->add_option("--format", classes.format)->check(CLI::IsMember(formats));

    BoundsArgs bounds;
    auto* b = app.add_subcommand("bounds", "lower/upper bounds and majorant recursion against exact counts");
    b->add_option("--max-n", bounds.max_n, "last row");
    b->add_option("--exact-up-to", bounds.exact_up_to, "compute exact counts up to this n (default min(max-n, 7))");
    b->add_option("--threads", bounds.threads)->check(CLI::Range(1, 256));
    b->add_flag("--deep", bounds.deep, "allow the exact count at n = 8");
    b->add_option("--format", bounds.format)->check(CLI::IsMember(formats));

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "run every computational check against the reference values");
    v->add_flag("--deep", verify.deep, "include the exhaustive count at n = 8");
    v->add_option("--threads", verify.threads)->check(CLI::Range(1, 256));
    v->add_option("--golden", verify.golden, "JSON file replacing the reference counts");
    v->add_option("--format", verify.format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (*c) return cmd_count(count);
        if (*e) return cmd_extend(ext);
        if (*k) return cmd_classify(cls);
        if (*l) return cmd_classes(classes);
        if (*b) return cmd_bounds(bounds);
        if (*v) return cmd_verify(verify);
    } catch (const Failure& f) {
        std::cerr << "gallai: " << f.message << '\n';
        return f.code;
    }
    return kExitUsage;
}
