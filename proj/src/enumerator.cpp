#include "gallai/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gallai/errors.hpp"
#include "gallai/extensions.hpp"
#include "gallai/walk.hpp"

namespace gallai {

namespace {

constexpr int kSplitEdges = 6;

// DFS state after a prefix of edges has been colored.
struct Subproblem {
    std::uint32_t by_color[kMaxVertices][3]{};
    ColorSet used = 0;
};

struct LeafCounter {
    int n = 0;
    std::uint32_t by_color[kMaxVertices][3]{};
    std::array<std::uint64_t, 8> leaves{};  // indexed by colors used

    void run(int j, int i, ColorSet used) {
        const unsigned bad = detail::forbidden_colors(by_color[j], by_color[i]);
        if (j == n - 1 && i == n - 2) {
            for (int c = 0; c < 3; ++c)
                if (!(bad & (1u << c))) ++leaves[used | (1u << c)];
            return;
        }
        const int next_j = (i + 1 == j) ? j + 1 : j;
        const int next_i = (i + 1 == j) ? 0 : i + 1;
        const std::uint32_t bit = 1u << i;
        for (int c = 0; c < 3; ++c) {
            if (bad & (1u << c)) continue;
            by_color[j][c] |= bit;
            run(next_j, next_i, used | (1u << c));
            by_color[j][c] &= ~bit;
        }
    }
};

// Expands the first `depth` edges, keeping only Gallai prefixes.
void expand_prefixes(int depth, int e, Subproblem& cur, std::vector<Subproblem>& out) {
    if (e == depth) {
        out.push_back(cur);
        return;
    }
    const Edge ed = edge_at(e);
    const unsigned bad = detail::forbidden_colors(cur.by_color[ed.hi], cur.by_color[ed.lo]);
    const ColorSet saved = cur.used;
    for (int c = 0; c < 3; ++c) {
        if (bad & (1u << c)) continue;
        cur.by_color[ed.hi][c] |= 1u << ed.lo;
        cur.used = saved | (1u << c);
        expand_prefixes(depth, e + 1, cur, out);
        cur.by_color[ed.hi][c] &= ~(1u << ed.lo);
    }
    cur.used = saved;
}

CountsRecord to_record(int n, const std::array<std::uint64_t, 8>& by_used) {
    CountsRecord r;
    r.n = n;
    for (ColorSet s = 1; s < 8; ++s) {
        switch (color_count(s)) {
            case 1: r.c1 += by_used[s]; break;
            case 2: r.c2 += by_used[s]; break;
            default: r.c3 += by_used[s]; break;
        }
    }
    r.c = r.c1 + r.c2 + r.c3;
    return r;
}

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CountsRecord count_gallai(int n, int threads, const ProgressFn& progress) {
    if (n < 2) throw InvalidArgument("count_gallai needs n >= 2, got " + std::to_string(n));
    if (n > kMaxCountVertices)
        throw UnsupportedSize("count_gallai supports n <= 8, got " + std::to_string(n));
    if (threads < 1) throw InvalidArgument("threads must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const int m = edge_count(n);
    const int depth = std::min(kSplitEdges, m);

    std::vector<Subproblem> tasks;
    Subproblem root;
    expand_prefixes(depth, 0, root, tasks);

    const int workers = std::clamp(threads, 1, static_cast<int>(tasks.size()));
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;
    std::vector<std::array<std::uint64_t, 8>> partial(workers);

    auto work = [&](int id) {
        LeafCounter counter;
        counter.n = n;
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            const Subproblem& sp = tasks[t];
            if (depth == m) {
                ++partial[id][sp.used];
            } else {
                std::memcpy(counter.by_color, sp.by_color, sizeof counter.by_color);
                const Edge ed = edge_at(depth);
                counter.run(ed.hi, ed.lo, sp.used);
            }
            const std::uint64_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(finished, tasks.size());
            }
        }
        for (ColorSet s = 0; s < 8; ++s) partial[id][s] += counter.leaves[s];
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }

    std::array<std::uint64_t, 8> total{};
    for (const auto& p : partial)
        for (ColorSet s = 0; s < 8; ++s) total[s] += p[s];
    CountsRecord r = to_record(n, total);
    r.workers = workers;
    r.elapsed_ms = millis_since(start);
    return r;
}

CountsRecord count_gallai_by_extension(int n) {
    if (n < 3 || n > 7)
        throw UnsupportedSize("count_gallai_by_extension supports 3 <= n <= 7, got " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    std::array<std::uint64_t, 8> by_used{};
    for_each_gallai(n - 1, [&](const EdgeColoring& phi, ColorSet used) {
        const ExtensionCount w = count_extensions(phi);
        for (ColorSet s = 0; s < 8; ++s) by_used[used | s] += w.by_star_colors[s];
    });
    CountsRecord r = to_record(n, by_used);
    r.elapsed_ms = millis_since(start);
    return r;
}

bool ClassFilter::accepts(const EdgeColoring& phi, const ColoringClass& cls) const {
    if (colors_used && cls.colors_used != *colors_used) return false;
    if (special && is_special(cls.kind) != *special) return false;
    if (has_monochromatic_vertex && monochromatic_vertices(phi).empty() == *has_monochromatic_vertex)
        return false;
    return true;
}

std::vector<CatalogEntry> enumerate_classes(int n, const ClassFilter& filter) {
    if (n < 2) throw InvalidArgument("enumerate_classes needs n >= 2");
    if (n > kMaxCatalogVertices)
        throw UnsupportedSize("enumerate_classes stores whole catalogs and is limited to n <= 6");

    // Every member of an orbit is marked the first time the orbit is met, so
    // the relabeling group is only walked once per class.
    std::unordered_set<std::uint64_t> seen;
    std::vector<CatalogEntry> out;
    for_each_gallai(n, [&](const EdgeColoring& phi, ColorSet) {
        if (seen.count(phi.words()[0])) return;
        const ColoringClass cls = classify(phi);
        std::uint64_t orbit = 0;
        for_each_relabeling(phi, [&](const EdgeColoring& img) {
            if (seen.insert(img.words()[0]).second) ++orbit;
        });
        if (!filter.accepts(phi, cls)) return;
        const CanonicalCode code = canonical_code(phi);
        EdgeColoring rep = decode_canonical(code);
        out.push_back({code, rep, classify(rep), orbit});
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    return out;
}

RetainingVertexCheck verify_color_retaining_vertex(int n, int k) {
    if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3");
    if (n < std::max(4, 2 * k - 1))
        throw InvalidArgument("the color-retaining vertex property needs n >= max(4, 2k - 1)");
    if (n > kMaxCatalogVertices) throw UnsupportedSize("exhaustive check limited to n <= 6");

    const int m = edge_count(n);
    std::array<std::uint64_t, kMaxVertices> incident{};
    for (int e = 0; e < m; ++e) {
        const Edge ed = edge_at(e);
        incident[ed.lo] |= std::uint64_t{1} << e;
        incident[ed.hi] |= std::uint64_t{1} << e;
    }

    RetainingVertexCheck out;
    // Base-3 odometer over all 3^m colorings, tracking one edge mask per color.
    std::array<int, edge_count(kMaxCatalogVertices)> digit{};
    std::array<std::uint64_t, 3> mask{(std::uint64_t{1} << m) - 1, 0, 0};
    while (true) {
        int present = 0;
        for (int c = 0; c < 3; ++c) present += mask[c] != 0;
        if (present == k) {
            ++out.colorings_checked;
            bool found = false;
            for (int v = 0; v < n && !found; ++v) {
                found = true;
                for (int c = 0; c < 3; ++c)
                    if (mask[c] && !(mask[c] & ~incident[v])) found = false;
            }
            if (!found) {
                out.holds = false;
                EdgeColoring phi(n);
                for (int e = 0; e < m; ++e) phi.set(e, static_cast<Color>(digit[e]));
                out.counterexample = phi;
                return out;
            }
        }
        int e = 0;
        while (e < m && digit[e] == 2) {
            digit[e] = 0;
            mask[2] &= ~(std::uint64_t{1} << e);
            mask[0] |= std::uint64_t{1} << e;
            ++e;
        }
        if (e == m) break;
        mask[digit[e]] &= ~(std::uint64_t{1} << e);
        ++digit[e];
        mask[digit[e]] |= std::uint64_t{1} << e;
    }
    return out;
}

}  // namespace gallai
