#include "gallai/coloring.hpp"

#include <bit>
#include <charconv>

#include "gallai/errors.hpp"

namespace gallai {

char to_char(Color c) noexcept {
    switch (c) {
        case Color::Red: return 'r';
        case Color::Green: return 'g';
        case Color::Blue: return 'b';
    }
    return '?';
}

Color color_from_char(char ch) {
    switch (ch) {
        case 'r': return Color::Red;
        case 'g': return Color::Green;
        case 'b': return Color::Blue;
        default: throw InvalidArgument(std::string("not a color character: '") + ch + "'");
    }
}

std::string_view color_name(Color c) noexcept {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

int color_count(ColorSet s) noexcept { return std::popcount(s & 7u); }

int edge_index(int i, int j, int n) {
    if (n < 1 || n > kMaxVertices || i < 0 || j >= n || i >= j)
        throw InvalidArgument("edge_index requires 0 <= i < j < n <= 12, got (" + std::to_string(i) +
                              ", " + std::to_string(j) + ", " + std::to_string(n) + ")");
    return j * (j - 1) / 2 + i;
}

Edge edge_at(int index) noexcept {
    int j = 1;
    while ((j + 1) * j / 2 <= index) ++j;
    return {index - j * (j - 1) / 2, j};
}

EdgeColoring::EdgeColoring(int n) : EdgeColoring(n, Color::Red) {}

EdgeColoring::EdgeColoring(int n, Color fill) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 1 || n > kMaxVertices)
        throw InvalidArgument("vertex count must be in [1, 12], got " + std::to_string(n));
    for (int e = 0; e < edge_count(n); ++e) set(e, fill);
}

Color EdgeColoring::color(int u, int v) const {
    if (u > v) std::swap(u, v);
    return at(edge_index(u, v, n_));
}

void EdgeColoring::set_color(int u, int v, Color c) {
    if (u > v) std::swap(u, v);
    set(edge_index(u, v, n_), c);
}

EdgeColoring coloring_from_string(int n, std::string_view colors) {
    EdgeColoring phi(n);
    if (static_cast<int>(colors.size()) != phi.size())
        throw InvalidArgument("expected " + std::to_string(phi.size()) + " edge colors, got " +
                              std::to_string(colors.size()));
    for (int e = 0; e < phi.size(); ++e) phi.set(e, color_from_char(colors[e]));
    return phi;
}

std::string colors_string(const EdgeColoring& phi) {
    std::string out(phi.size(), '?');
    for (int e = 0; e < phi.size(); ++e) out[e] = to_char(phi.at(e));
    return out;
}

ColorMasks color_masks(const EdgeColoring& phi) {
    ColorMasks m;
    m.n = phi.vertex_count();
    for (int e = 0; e < phi.size(); ++e) {
        const Edge ed = edge_at(e);
        const int c = code_of(phi.at(e));
        m.by_color[ed.lo][c] |= 1u << ed.hi;
        m.by_color[ed.hi][c] |= 1u << ed.lo;
    }
    return m;
}

namespace {

void check_vertex(const EdgeColoring& phi, int v) {
    if (v < 0 || v >= phi.vertex_count())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n = " +
                              std::to_string(phi.vertex_count()));
}

bool rainbow(Color a, Color b, Color c) noexcept {
    return (bit_of(a) | bit_of(b) | bit_of(c)) == 7u;
}

}  // namespace

bool is_rainbow_triangle(const EdgeColoring& phi, int i, int j, int k) {
    check_vertex(phi, i);
    check_vertex(phi, j);
    check_vertex(phi, k);
    if (i == j || i == k || j == k) throw InvalidArgument("triangle vertices must be distinct");
    return rainbow(phi.color(i, j), phi.color(i, k), phi.color(j, k));
}

std::optional<std::array<int, 3>> find_rainbow_triangle(const EdgeColoring& phi) {
    const ColorMasks m = color_masks(phi);
    // Triangle a < b < c is rainbow iff c sees a and b in the two colors
    // other than phi(a, b).
    for (int b = 1; b < m.n; ++b) {
        for (int a = 0; a < b; ++a) {
            const int ab = code_of(phi.at(b * (b - 1) / 2 + a));
            const int x = (ab + 1) % 3;
            const int y = (ab + 2) % 3;
            const std::uint32_t later = ~((2u << b) - 1);
            const std::uint32_t hits = later & ((m.by_color[a][x] & m.by_color[b][y]) |
                                                (m.by_color[a][y] & m.by_color[b][x]));
            if (hits) return std::array<int, 3>{a, b, std::countr_zero(hits)};
        }
    }
    return std::nullopt;
}

bool is_gallai(const EdgeColoring& phi) { return !find_rainbow_triangle(phi).has_value(); }

ColorSet colors_used(const EdgeColoring& phi) noexcept {
    ColorSet s = 0;
    for (int e = 0; e < phi.size() && s != 7u; ++e) s |= bit_of(phi.at(e));
    return s;
}

std::vector<MonochromaticVertex> monochromatic_vertices(const EdgeColoring& phi) {
    std::vector<MonochromaticVertex> out;
    const int n = phi.vertex_count();
    if (n < 2) return out;
    const ColorMasks m = color_masks(phi);
    const std::uint32_t all = (1u << n) - 1;
    for (int v = 0; v < n; ++v) {
        const std::uint32_t others = all & ~(1u << v);
        for (Color c : kAllColors)
            if (m.by_color[v][code_of(c)] == others) out.push_back({v, c});
    }
    return out;
}

std::string_view kind_name(ColoringKind k) noexcept {
    switch (k) {
        case ColoringKind::Monochromatic: return "Monochromatic";
        case ColoringKind::TwoColorVertexSpecial: return "TwoColorVertexSpecial";
        case ColoringKind::TwoColorEdgeSpecial: return "TwoColorEdgeSpecial";
        case ColoringKind::ThreeColorVertexSpecial: return "ThreeColorVertexSpecial";
        case ColoringKind::ThreeColorEdgeSpecial: return "ThreeColorEdgeSpecial";
        case ColoringKind::NonSpecial: return "NonSpecial";
    }
    return "?";
}

bool is_special(ColoringKind k) noexcept { return k != ColoringKind::NonSpecial; }

namespace {

struct ColorTally {
    std::array<int, 3> count{};
    std::array<int, 3> some_edge{-1, -1, -1};
};

ColorTally tally(const EdgeColoring& phi) {
    ColorTally t;
    for (int e = 0; e < phi.size(); ++e) {
        const int c = code_of(phi.at(e));
        ++t.count[c];
        t.some_edge[c] = e;
    }
    return t;
}

bool adjacent(Edge a, Edge b) noexcept {
    return a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi;
}

// Lone edge of a 2-colored coloring whose other edges all share one color.
std::optional<Edge> lone_edge(const EdgeColoring& phi) {
    const ColorTally t = tally(phi);
    if (color_count(colors_used(phi)) != 2) return std::nullopt;
    for (int c = 0; c < 3; ++c)
        if (t.count[c] == 1) return edge_at(t.some_edge[c]);
    return std::nullopt;
}

std::optional<ColoringClass> two_color_special(const EdgeColoring& phi) {
    if (auto e = lone_edge(phi))
        return ColoringClass{ColoringKind::TwoColorEdgeSpecial, 2, {std::nullopt, {*e}}};

    const int n = phi.vertex_count();
    if (n < 3) return std::nullopt;
    const ColorMasks m = color_masks(phi);
    for (const auto& mv : monochromatic_vertices(phi)) {
        // No edge away from v may reuse v's color.
        bool rest_uniform = true;
        for (int u = 0; u < n && rest_uniform; ++u) {
            if (u == mv.vertex) continue;
            if (m.by_color[u][code_of(mv.color)] & ~(1u << mv.vertex)) rest_uniform = false;
        }
        if (rest_uniform)
            return ColoringClass{ColoringKind::TwoColorVertexSpecial, 2, {mv.vertex, {}}};
    }
    return std::nullopt;
}

std::optional<ColoringClass> three_color_special(const EdgeColoring& phi) {
    const int n = phi.vertex_count();
    const ColorTally t = tally(phi);

    for (int base = 0; base < 3; ++base) {
        const int c1 = (base + 1) % 3;
        const int c2 = (base + 2) % 3;
        if (t.count[c1] == 1 && t.count[c2] == 1) {
            Edge e1 = edge_at(t.some_edge[c1]);
            Edge e2 = edge_at(t.some_edge[c2]);
            if (!adjacent(e1, e2)) {
                if (t.some_edge[c2] < t.some_edge[c1]) std::swap(e1, e2);
                return ColoringClass{ColoringKind::ThreeColorEdgeSpecial, 3, {std::nullopt, {e1, e2}}};
            }
        }
    }

    if (n < 4) return std::nullopt;
    for (const auto& mv : monochromatic_vertices(phi)) {
        const EdgeColoring rest = restrict_coloring(phi, mv.vertex);
        if (colors_used(rest) & bit_of(mv.color)) continue;
        if (auto e = lone_edge(rest)) {
            auto lift = [&](int x) { return x >= mv.vertex ? x + 1 : x; };
            return ColoringClass{ColoringKind::ThreeColorVertexSpecial, 3,
                                 {mv.vertex, {Edge{lift(e->lo), lift(e->hi)}}}};
        }
    }
    return std::nullopt;
}

}  // namespace

ColoringClass classify(const EdgeColoring& phi) {
    if (auto tri = find_rainbow_triangle(phi))
        throw NotGallai("coloring has a rainbow triangle on vertices " + std::to_string((*tri)[0]) +
                        ", " + std::to_string((*tri)[1]) + ", " + std::to_string((*tri)[2]));
    const int k = color_count(colors_used(phi));
    std::optional<ColoringClass> special;
    if (k <= 1)
        special = ColoringClass{ColoringKind::Monochromatic, k, {}};
    else if (k == 2)
        special = two_color_special(phi);
    else
        special = three_color_special(phi);
    if (special) return *special;
    return ColoringClass{ColoringKind::NonSpecial, k, {}};
}

EdgeColoring restrict_coloring(const EdgeColoring& phi, int v) {
    const int n = phi.vertex_count();
    if (n < 3) throw InvalidArgument("cannot delete a vertex from K_" + std::to_string(n));
    check_vertex(phi, v);
    EdgeColoring out(n - 1);
    for (int j = 1; j < n - 1; ++j)
        for (int i = 0; i < j; ++i) {
            const int oi = i >= v ? i + 1 : i;
            const int oj = j >= v ? j + 1 : j;
            out.set(j * (j - 1) / 2 + i, phi.at(oj * (oj - 1) / 2 + oi));
        }
    return out;
}

CanonicalCode canonical_code(const EdgeColoring& phi) {
    const int n = phi.vertex_count();
    if (n > kMaxCanonicalVertices)
        throw UnsupportedSize("canonical_code supports n <= 8, got " + std::to_string(n));
    const int m = edge_count(n);

    // For a fixed vertex relabeling, the lexicographically smallest color
    // relabeling renames colors in order of first appearance.
    std::array<int, kMaxCanonicalVertices> perm{};
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::array<int, 3> rename{-1, -1, -1};
        int next = 0;
        std::uint64_t code = 0;
        bool pruned = false;
        for (int e = 0; e < m; ++e) {
            const Edge ed = edge_at(e);
            int pi = perm[ed.lo], pj = perm[ed.hi];
            if (pi > pj) std::swap(pi, pj);
            const int c = code_of(phi.at(pj * (pj - 1) / 2 + pi));
            if (rename[c] < 0) rename[c] = next++;
            code = (code << 2) | static_cast<std::uint64_t>(rename[c]);
            // Prefix already larger than the best complete code.
            if ((code << (2 * (m - 1 - e))) > best) {
                pruned = true;
                break;
            }
        }
        if (!pruned && code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return {n, best};
}

EdgeColoring decode_canonical(const CanonicalCode& code) {
    if (code.n < 1 || code.n > kMaxCanonicalVertices)
        throw InvalidArgument("canonical code vertex count out of range");
    EdgeColoring phi(code.n);
    const int m = edge_count(code.n);
    for (int e = 0; e < m; ++e) {
        const auto c = (code.value >> (2 * (m - 1 - e))) & 3u;
        if (c > 2) throw InvalidArgument("canonical code contains an invalid color");
        phi.set(e, static_cast<Color>(c));
    }
    return phi;
}

EdgeColoring make_special(int n, const SpecialShape& shape) {
    const auto require = [](bool ok, const char* what) {
        if (!ok) throw InvalidArgument(what);
    };
    switch (shape.kind) {
        case ColoringKind::Monochromatic:
            require(n >= 2, "monochromatic coloring needs n >= 2");
            return EdgeColoring(n, shape.base);
        case ColoringKind::TwoColorVertexSpecial: {
            require(n >= 3, "2-color special colorings need n >= 3");
            require(shape.accent != shape.base, "star color must differ from the base color");
            EdgeColoring phi(n, shape.base);
            for (int u = 1; u < n; ++u) phi.set_color(0, u, shape.accent);
            return phi;
        }
        case ColoringKind::TwoColorEdgeSpecial: {
            require(n >= 3, "2-color special colorings need n >= 3");
            require(shape.accent != shape.base, "lone edge color must differ from the base color");
            EdgeColoring phi(n, shape.base);
            phi.set_color(0, 1, shape.accent);
            return phi;
        }
        case ColoringKind::ThreeColorVertexSpecial:
        case ColoringKind::ThreeColorEdgeSpecial: {
            require(n >= 4, "3-color special colorings need n >= 4");
            require(shape.base != shape.accent && shape.base != shape.second &&
                        shape.accent != shape.second,
                    "3-color special colorings need three distinct colors");
            EdgeColoring phi(n, shape.base);
            if (shape.kind == ColoringKind::ThreeColorVertexSpecial) {
                for (int u = 1; u < n; ++u) phi.set_color(0, u, shape.accent);
                phi.set_color(1, 2, shape.second);
            } else {
                phi.set_color(0, 1, shape.accent);
                phi.set_color(2, 3, shape.second);
            }
            return phi;
        }
        case ColoringKind::NonSpecial:
            break;
    }
    throw InvalidArgument("make_special cannot build a non-special coloring");
}

EdgeColoring parse_coloring(std::string_view text) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError(text.size(), "missing newline after vertex count");
    const std::string_view head = text.substr(0, nl);
    if (head.empty()) throw ParseError(0, "missing vertex count");
    if (head.size() > 1 && head[0] == '0') throw ParseError(0, "leading zero in vertex count");
    int n = 0;
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc{} || ptr != head.data() + head.size())
        throw ParseError(static_cast<std::size_t>(ptr - head.data()), "vertex count is not a decimal integer");
    if (n < 1 || n > kMaxVertices)
        throw ParseError(0, "vertex count " + std::to_string(n) + " outside [1, 12]");

    std::string_view body = text.substr(nl + 1);
    if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
    const std::size_t body_start = nl + 1;
    const auto m = static_cast<std::size_t>(edge_count(n));

    EdgeColoring phi(n);
    for (std::size_t e = 0; e < body.size(); ++e) {
        const char ch = body[e];
        if (ch != 'r' && ch != 'g' && ch != 'b')
            throw ParseError(body_start + e, std::string("unexpected character '") +
                                                 (ch == '\n' ? std::string("\\n") : std::string(1, ch)) + "'");
        if (e >= m) break;
        phi.set(static_cast<int>(e), color_from_char(ch));
    }
    if (body.size() != m)
        throw ParseError(body_start + std::min(body.size(), m),
                         "expected " + std::to_string(m) + " edge colors, got " + std::to_string(body.size()));
    return phi;
}

std::string format_coloring(const EdgeColoring& phi) {
    return std::to_string(phi.vertex_count()) + "\n" + colors_string(phi);
}

}  // namespace gallai
