#include "gallai/extensions.hpp"

#include <algorithm>
#include <limits>

#include "gallai/errors.hpp"
#include "gallai/walk.hpp"

namespace gallai {

std::string StarColoring::to_string() const {
    std::string out(n, '?');
    for (int v = 0; v < n; ++v) out[v] = to_char(colors[v]);
    return out;
}

bool StarColoring::monochromatic() const noexcept {
    return std::all_of(colors.begin(), colors.begin() + n, [&](Color c) { return c == colors[0]; });
}

bool operator==(const StarColoring& a, const StarColoring& b) noexcept {
    return a.n == b.n && std::equal(a.colors.begin(), a.colors.begin() + a.n, b.colors.begin());
}

EdgeColoring extend(const EdgeColoring& phi, const StarColoring& star) {
    const int n = phi.vertex_count();
    if (star.n != n) throw InvalidArgument("star size does not match the coloring");
    if (n + 1 > kMaxVertices) throw UnsupportedSize("extension would exceed 12 vertices");
    EdgeColoring out(n + 1);
    for (int e = 0; e < phi.size(); ++e) out.set(e, phi.at(e));
    // Edges into the new vertex n are the last n indices.
    for (int v = 0; v < n; ++v) out.set(edge_count(n) + v, star.colors[v]);
    return out;
}

namespace {

void require_gallai(const EdgeColoring& phi) {
    if (!is_gallai(phi)) throw NotGallai("extension counting requires a Gallai coloring");
}

ExtensionCount count_unchecked(const EdgeColoring& phi) {
    ExtensionCount out;
    for_each_star(phi, [&](const auto&, ColorSet star_used) { ++out.by_star_colors[star_used]; });
    const ColorSet base = colors_used(phi);
    for (ColorSet s = 0; s < 8; ++s) {
        out.total += out.by_star_colors[s];
        if ((base | s) == 7u) out.all_three_colors += out.by_star_colors[s];
    }
    return out;
}

}  // namespace

ExtensionCount count_extensions(const EdgeColoring& phi) {
    require_gallai(phi);
    return count_unchecked(phi);
}

std::vector<StarColoring> list_extensions(const EdgeColoring& phi) {
    require_gallai(phi);
    if (phi.vertex_count() > kMaxListedVertices) throw UnsupportedSize("listing guard exceeded");
    std::vector<StarColoring> out;
    const int n = phi.vertex_count();
    for_each_star(phi, [&](const std::array<Color, kMaxVertices>& colors, ColorSet) {
        out.push_back(StarColoring{n, colors});
    });
    return out;
}

DoublingCheck verify_doubling(const EdgeColoring& phi) {
    require_gallai(phi);
    const int n = phi.vertex_count();
    if (n + 1 > kMaxVertices) throw UnsupportedSize("verify_doubling requires n <= 11");

    DoublingCheck out;
    out.base_total = count_unchecked(phi).total;
    const std::uint64_t limit = 2 * out.base_total + 1;
    for_each_star(phi, [&](const std::array<Color, kMaxVertices>& colors, ColorSet) {
        const StarColoring star{n, colors};
        const std::uint64_t w = count_unchecked(extend(phi, star)).total;
        ++out.extensions_checked;
        if (out.extensions_checked == 1 || w > out.worst_total) {
            out.worst_total = w;
            out.worst_star = star;
        }
        if (w > limit) out.holds = false;
    });
    return out;
}

namespace {

void check_class_args(int n, int colors) {
    if (colors < 1 || colors > 3) throw InvalidArgument("color class must be 1, 2 or 3");
    if (n < 2) throw InvalidArgument("class scans need n >= 2");
    if (n > kMaxClassScanVertices) throw UnsupportedSize("class scans are exhaustive and limited to n <= 6");
}

}  // namespace

ClassMaximum max_extensions_by_class(int n, int colors) {
    check_class_args(n, colors);
    ClassMaximum out;
    std::vector<EdgeColoring> best;
    for_each_gallai(n, [&](const EdgeColoring& phi, ColorSet used) {
        if (color_count(used) != colors) return;
        ++out.colorings_scanned;
        const std::uint64_t w = count_unchecked(phi).total;
        if (w > out.max_total) {
            out.max_total = w;
            best.clear();
        }
        if (w == out.max_total) best.push_back(phi);
    });
    for (const auto& phi : best) out.witnesses.push_back(canonical_code(phi));
    std::sort(out.witnesses.begin(), out.witnesses.end());
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
    return out;
}

std::uint64_t max_all_color_extensions_by_class(int n, int colors) {
    check_class_args(n, colors);
    std::uint64_t best = 0;
    for_each_gallai(n, [&](const EdgeColoring& phi, ColorSet used) {
        if (color_count(used) != colors) return;
        best = std::max(best, count_unchecked(phi).all_three_colors);
    });
    return best;
}

}  // namespace gallai
