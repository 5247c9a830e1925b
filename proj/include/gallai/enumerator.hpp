#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

// Exact numbers of labeled Gallai colorings of K_n by colors used.
struct CountsRecord {
    int n = 0;
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;
    std::uint64_t c = 0;
    double elapsed_ms = 0.0;
    int workers = 1;

    // Equality on the counts only.
    bool same_counts(const CountsRecord& o) const noexcept {
        return n == o.n && c1 == o.c1 && c2 == o.c2 && c3 == o.c3 && c == o.c;
    }
};

inline constexpr int kMaxCountVertices = 8;

// Called after each finished subproblem with (done, total). May be called
// from worker threads, but never concurrently.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

// Exhaustive count for 2 <= n <= 8. The first min(6, n(n-1)/2) edges are
// expanded into independent subproblems shared by `threads` workers; the
// result does not depend on the number of workers.
CountsRecord count_gallai(int n, int threads = 1, const ProgressFn& progress = {});

// Independent route for 3 <= n <= 7: sums w(phi) over all Gallai colorings
// of K_{n-1}, splitting by the colors used by phi plus its new star.
CountsRecord count_gallai_by_extension(int n);

struct ClassFilter {
    std::optional<int> colors_used;
    std::optional<bool> special;
    std::optional<bool> has_monochromatic_vertex;

    bool accepts(const EdgeColoring& phi, const ColoringClass& cls) const;
};

struct CatalogEntry {
    CanonicalCode code;
    EdgeColoring representative;  // decode_canonical(code)
    ColoringClass cls;
    std::uint64_t orbit_size = 0;  // labeled colorings in the class
};

inline constexpr int kMaxCatalogVertices = 6;

// One entry per isomorphism class of Gallai colorings of K_n passing the
// filter, sorted by canonical code. 2 <= n <= 6.
std::vector<CatalogEntry> enumerate_classes(int n, const ClassFilter& filter = {});

struct RetainingVertexCheck {
    bool holds = true;
    std::uint64_t colorings_checked = 0;
    std::optional<EdgeColoring> counterexample;
};

// For every coloring of K_n (Gallai or not) using exactly k colors, looks for
// a vertex whose deletion keeps all k colors. Requires k in {1,2,3} and
// max(4, 2k-1) <= n <= 6.
RetainingVertexCheck verify_color_retaining_vertex(int n, int k);

}  // namespace gallai
