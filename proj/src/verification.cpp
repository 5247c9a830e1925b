#include "gallai/verification.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gallai/bounds.hpp"
#include "gallai/coloring.hpp"
#include "gallai/enumerator.hpp"
#include "gallai/extensions.hpp"
#include "gallai/reference_colorings.hpp"
#include "gallai/walk.hpp"

namespace gallai {

namespace {

class Recorder {
public:
    explicit Recorder(const VerifyOptions& opts) : opts_(opts) {}

    void add(int criterion, std::string name, bool passed, std::string detail) {
        CheckResult r{criterion, std::move(name), passed, std::move(detail)};
        if (opts_.on_result) opts_.on_result(r);
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    const VerifyOptions& opts_;
    std::vector<CheckResult> results_;
};

std::string counts_string(const CountsRecord& r) {
    std::ostringstream os;
    os << "(" << r.c1 << ", " << r.c2 << ", " << r.c3 << ", " << r.c << ")";
    return os.str();
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

std::vector<SpecialShape> special_shapes(int colors) {
    std::vector<SpecialShape> out;
    for (Color base : kAllColors)
        for (Color accent : kAllColors)
            for (Color second : kAllColors) {
                if (colors == 1 && accent == base && second == base)
                    out.push_back({ColoringKind::Monochromatic, base, base, base});
                if (colors == 2 && accent != base && second == base) {
                    out.push_back({ColoringKind::TwoColorVertexSpecial, base, accent, second});
                    out.push_back({ColoringKind::TwoColorEdgeSpecial, base, accent, second});
                }
                if (colors == 3 && base != accent && base != second && accent != second) {
                    out.push_back({ColoringKind::ThreeColorVertexSpecial, base, accent, second});
                    out.push_back({ColoringKind::ThreeColorEdgeSpecial, base, accent, second});
                }
            }
    return out;
}

std::vector<CanonicalCode> special_codes(int n, int colors) {
    std::set<CanonicalCode> codes;
    for (const auto& s : special_shapes(colors)) codes.insert(canonical_code(make_special(n, s)));
    return {codes.begin(), codes.end()};
}

void check_counts(Recorder& rec, const VerifyOptions& opts) {
    const int max_n = opts.deep ? 8 : 7;
    for (int n = 2; n <= max_n; ++n) {
        const CountsRecord got = count_gallai(n, opts.threads);
        const auto want = golden::counts_for(n, opts.counts);
        const bool ok = want && got.c1 == want->c1 && got.c2 == want->c2 && got.c3 == want->c3 &&
                        got.c == want->c;
        std::string detail = "n=" + std::to_string(n) + " computed " + counts_string(got);
        if (want && !ok) {
            detail += " expected (" + std::to_string(want->c1) + ", " + std::to_string(want->c2) + ", " +
                      std::to_string(want->c3) + ", " + std::to_string(want->c) + ")";
        }
        if (!want) detail += " no reference row";
        rec.add(1, "exact counts", ok, detail);
    }
}

void check_extension_sum(Recorder& rec) {
    for (int n = 3; n <= 6; ++n) {
        const CountsRecord direct = count_gallai(n);
        const CountsRecord summed = count_gallai_by_extension(n);
        rec.add(2, "sum of extensions over K_{n-1}", direct.same_counts(summed),
                "n=" + std::to_string(n) + " direct " + counts_string(direct) + " summed " +
                    counts_string(summed));
    }
}

void check_special_formulas(Recorder& rec) {
    struct Family {
        int colors;
        int first_n;
        std::uint64_t (*formula)(int);
        const char* name;
    };
    const Family families[] = {
        {1, 2, [](int n) { return pow2(n + 1) - 1; }, "monochromatic: w = 2^(n+1) - 1"},
        {2, 3, [](int n) { return 3 * pow2(n - 1) + 1; }, "2-color special: w = 3*2^(n-1) + 1"},
        {3, 4, [](int n) { return pow2(n) + 3; }, "3-color special: w = 2^n + 3"},
    };
    for (const auto& fam : families) {
        bool ok = true;
        std::string failure;
        for (int n = fam.first_n; n <= 10; ++n)
            for (const auto& shape : special_shapes(fam.colors)) {
                const std::uint64_t w = count_extensions(make_special(n, shape)).total;
                if (w != fam.formula(n)) {
                    ok = false;
                    failure = " first failure n=" + std::to_string(n) + " " +
                              std::string(kind_name(shape.kind)) + " w=" + std::to_string(w);
                }
            }
        rec.add(3, fam.name, ok, "n=" + std::to_string(fam.first_n) + "..10, all color choices" + failure);
    }
}

void check_small_cases(Recorder& rec) {
    const auto k4 = reference::non_special_two_colored_k4();
    const std::uint64_t want_k4[] = {23, 21, 23};
    for (int i = 0; i < 3; ++i) {
        const auto w = count_extensions(k4[i]).total;
        rec.add(4, "non-special 2-colored K_4", w == want_k4[i],
                std::string("type ") + "abc"[i] + " w=" + std::to_string(w) + " expected " +
                    std::to_string(want_k4[i]));
    }
    {
        const auto w = count_extensions(reference::red_triangle_k5()).total;
        rec.add(4, "red triangle in blue K_5", w == 45, "w=" + std::to_string(w) + " expected 45");
    }
    {
        const auto w = count_extensions(reference::matching_k6()).total;
        rec.add(4, "two-color matching in K_6", w == 53, "w=" + std::to_string(w) + " expected 53");
    }
    {
        std::uint64_t worst = 0, scanned = 0;
        for_each_gallai(5, [&](const EdgeColoring& phi, ColorSet used) {
            if (color_count(used) != 3) return;
            if (is_special(classify(phi).kind) || monochromatic_vertices(phi).empty()) return;
            ++scanned;
            worst = std::max(worst, count_extensions(phi).total);
        });
        rec.add(4, "non-special 3-colored K_5 with a monochromatic vertex", worst <= 31,
                std::to_string(scanned) + " colorings, max w=" + std::to_string(worst) + " (bound 31)");
    }
    const auto k5 = reference::non_special_three_colored_k5();
    for (int i = 0; i < 5; ++i) {
        const auto w = count_extensions(k5[i]).total;
        const auto want = reference::kNonSpecialK5Extensions[i];
        rec.add(4, "non-special 3-colored K_5 without a monochromatic vertex", w == want,
                std::string("type ") + "ABCDE"[i] + " w=" + std::to_string(w) + " expected " +
                    std::to_string(want));
    }
}

void check_extremal(Recorder& rec) {
    for (int colors = 2; colors <= 3; ++colors) {
        for (int n = colors == 2 ? 4 : 5; n <= 6; ++n) {
            const std::uint64_t want = colors == 2 ? 3 * pow2(n - 1) + 1 : pow2(n) + 3;
            const ClassMaximum got = max_extensions_by_class(n, colors);
            const bool ok = got.max_total == want && got.witnesses == special_codes(n, colors);
            rec.add(5, colors == 2 ? "2-color extremal colorings are special" : "3-color extremal colorings are special",
                    ok,
                    "n=" + std::to_string(n) + " max w=" + std::to_string(got.max_total) + " expected " +
                        std::to_string(want) + ", " + std::to_string(got.witnesses.size()) +
                        " extremal classes");
        }
    }
}

void check_doubling(Recorder& rec) {
    for (int n = 2; n <= 4; ++n) {
        bool ok = true;
        std::uint64_t checked = 0;
        for_each_gallai(n, [&](const EdgeColoring& phi, ColorSet) {
            ok = verify_doubling(phi).holds && ok;
            ++checked;
        });
        rec.add(6, "doubling bound w(phi') <= 2 w(phi) + 1", ok,
                "all " + std::to_string(checked) + " Gallai colorings of K_" + std::to_string(n));
    }
    {
        std::mt19937_64 rng(0x6a11a1u);
        int sampled = 0;
        bool ok = true;
        while (sampled < 1000) {
            EdgeColoring phi(5);
            for (int e = 0; e < phi.size(); ++e) phi.set(e, static_cast<Color>(rng() % 3));
            if (!is_gallai(phi)) continue;
            ++sampled;
            ok = verify_doubling(phi).holds && ok;
        }
        rec.add(6, "doubling bound w(phi') <= 2 w(phi) + 1", ok, "1000 sampled Gallai colorings of K_5");
    }
    {
        bool ok = true;
        for (int n = 2; n <= 10; ++n) {
            const auto w = count_extensions(EdgeColoring(n)).total;
            const auto w_next = count_extensions(EdgeColoring(n + 1)).total;
            ok = ok && w_next == 2 * w + 1;
        }
        rec.add(6, "doubling bound is attained", ok, "monochromatic K_n -> K_{n+1}, n=2..10");
    }
}

void check_catalogs(Recorder& rec) {
    struct Case {
        int n;
        ClassFilter filter;
        std::size_t want;
        const char* what;
    };
    const Case cases[] = {
        {4, {2, false, std::nullopt}, 3, "non-special 2-colorings of K_4"},
        {4, {3, std::nullopt, std::nullopt}, 2, "3-colorings of K_4"},
        {5, {3, false, false}, 5, "non-special 3-colorings of K_5 without a monochromatic vertex"},
    };
    for (const auto& c : cases) {
        const auto classes = enumerate_classes(c.n, c.filter);
        rec.add(7, "isomorphism classes", classes.size() == c.want,
                std::string(c.what) + ": " + std::to_string(classes.size()) + " classes, expected " +
                    std::to_string(c.want));
    }
    {
        const auto k3 = enumerate_classes(3, {2, std::nullopt, std::nullopt});
        const bool ok = !k3.empty() && std::all_of(k3.begin(), k3.end(), [](const auto& e) {
            return is_special(e.cls.kind);
        });
        rec.add(7, "every 2-coloring of K_3 is special", ok, std::to_string(k3.size()) + " classes");
    }
    {
        const auto k4 = enumerate_classes(4, {3, std::nullopt, std::nullopt});
        const bool ok = !k4.empty() && std::all_of(k4.begin(), k4.end(), [](const auto& e) {
            return is_special(e.cls.kind);
        });
        rec.add(7, "every 3-colored Gallai K_4 is special", ok, std::to_string(k4.size()) + " classes");
    }
}

void check_retaining_vertex(Recorder& rec) {
    const std::pair<int, int> cases[] = {{4, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 3}};
    for (auto [n, k] : cases) {
        const auto r = verify_color_retaining_vertex(n, k);
        rec.add(8, "a vertex can be deleted keeping all k colors", r.holds,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + ", " +
                    std::to_string(r.colorings_checked) + " colorings");
    }
}

void check_bounds(Recorder& rec) {
    std::map<int, std::uint64_t> exact;
    for (const auto& row : golden::bounds_table()) exact[row.n] = row.c;
    const auto rows = bound_table(8, exact);

    bool columns = true, ratios = true, sandwich = true;
    for (const auto& ref : golden::bounds_table()) {
        const auto& row = rows[ref.n - 2];
        columns = columns && row.lower == ref.lower && row.upper == ref.upper;
        ratios = ratios && row.ratio_upper_over_c == ref.ratio_upper_over_c &&
                 row.ratio_c_over_lower == ref.ratio_c_over_lower;
        sandwich = sandwich && row.lower <= *row.exact_c && *row.exact_c <= row.upper;
    }
    rec.add(9, "lower and upper bound columns", columns, "n=2..8");
    rec.add(9, "truncated ratio strings", ratios, "n=2..8");
    rec.add(9, "lower <= c(n) <= upper", sandwich, "n=2..8");

    bool claim = true, dominance = true, chain = true;
    for (const auto& ref : golden::counts_table()) {
        const BigCount c3 = ref.c3;
        const int n = ref.n;
        claim = claim && c3 <= 7 * BigCount(n) * two_pow_pairs(n);
        dominance = dominance && c3 <= f_recursion(n);
        if (n >= 4) {
            const auto it = c3_recurrence_bound(n);
            chain = chain && c3 <= it.tight && it.tight <= it.loose && it.loose <= f_recursion(n);
        }
    }
    rec.add(9, "c3(n) <= 7n 2^(n choose 2)", claim, "n=2..8");
    rec.add(9, "c3(n) <= f(n)", dominance, "n=2..8");
    rec.add(9, "c3(n) <= tight iterate <= loose iterate <= f(n)", chain, "n=4..8");

    bool step = true, f_small = true;
    for (int n = 4; n <= 64; ++n) {
        step = step && induction_step_holds(n);
        f_small = f_small && f_recursion(n) <= 7 * BigCount(n) * two_pow_pairs(n);
    }
    rec.add(9, "upper bound induction step", step, "exact arithmetic, n=4..64");
    rec.add(9, "f(n) <= 7n 2^(n choose 2)", f_small, "n=4..64");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Recorder rec(options);
    check_counts(rec, options);
    check_extension_sum(rec);
    check_special_formulas(rec);
    check_small_cases(rec);
    check_extremal(rec);
    check_doubling(rec);
    check_catalogs(rec);
    check_retaining_vertex(rec);
    check_bounds(rec);
    return rec.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace gallai
