#pragma once

// Edge 3-colorings of complete graphs and the predicates used throughout the
// library: rainbow checks, the special/non-special taxonomy, vertex deletion,
// canonical forms under vertex and color relabeling, and the text format.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gallai {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> kAllColors{Color::Red, Color::Green, Color::Blue};

constexpr int code_of(Color c) noexcept { return static_cast<int>(c); }
constexpr unsigned bit_of(Color c) noexcept { return 1u << code_of(c); }

char to_char(Color c) noexcept;
// Throws InvalidArgument for anything other than 'r', 'g', 'b'.
Color color_from_char(char ch);
std::string_view color_name(Color c) noexcept;

// Set of colors as a 3-bit mask, bit k set when color code k is present.
using ColorSet = unsigned;
int color_count(ColorSet s) noexcept;

inline constexpr int kMaxVertices = 12;

constexpr int edge_count(int n) noexcept { return n * (n - 1) / 2; }

// Index of edge {i, j}, i < j, in canonical order: all edges into vertex 1,
// then into vertex 2, and so on. Throws InvalidArgument unless 0 <= i < j < n.
int edge_index(int i, int j, int n);

struct Edge {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Inverse of edge_index.
Edge edge_at(int index) noexcept;

// A coloring of E(K_n), 1 <= n <= 12. Colors are packed two bits per edge,
// little-endian by edge index, so 132 bits always fit in three words.
class EdgeColoring {
public:
    using Words = std::array<std::uint64_t, 3>;

    // All edges red.
    explicit EdgeColoring(int n);
    EdgeColoring(int n, Color fill);

    int vertex_count() const noexcept { return n_; }
    int size() const noexcept { return edge_count(n_); }

    Color at(int edge) const noexcept {
        return static_cast<Color>((words_[edge >> 5] >> ((edge & 31) * 2)) & 3u);
    }
    void set(int edge, Color c) noexcept {
        auto& w = words_[edge >> 5];
        const int shift = (edge & 31) * 2;
        w = (w & ~(std::uint64_t{3} << shift)) | (static_cast<std::uint64_t>(code_of(c)) << shift);
    }

    // Color of edge {u, v} for any u != v; bounds-checked.
    Color color(int u, int v) const;
    void set_color(int u, int v, Color c);

    const Words& words() const noexcept { return words_; }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::uint8_t n_;
    Words words_{};
};

// Builds a coloring from a string over {r,g,b} in canonical edge order.
EdgeColoring coloring_from_string(int n, std::string_view colors);
std::string colors_string(const EdgeColoring& phi);

// Per-vertex neighbourhood masks: by_color[v][c] has bit u set when u != v
// and edge {u, v} has color c. Used by the hot loops.
struct ColorMasks {
    int n = 0;
    std::array<std::array<std::uint32_t, 3>, kMaxVertices> by_color{};
};
ColorMasks color_masks(const EdgeColoring& phi);

bool is_rainbow_triangle(const EdgeColoring& phi, int i, int j, int k);
bool is_gallai(const EdgeColoring& phi);
// First rainbow triangle in lexicographic vertex order, if any.
std::optional<std::array<int, 3>> find_rainbow_triangle(const EdgeColoring& phi);

ColorSet colors_used(const EdgeColoring& phi) noexcept;

struct MonochromaticVertex {
    int vertex;
    Color color;
    friend bool operator==(const MonochromaticVertex&, const MonochromaticVertex&) = default;
};
std::vector<MonochromaticVertex> monochromatic_vertices(const EdgeColoring& phi);

enum class ColoringKind : std::uint8_t {
    Monochromatic,
    TwoColorVertexSpecial,
    TwoColorEdgeSpecial,
    ThreeColorVertexSpecial,
    ThreeColorEdgeSpecial,
    NonSpecial,
};

std::string_view kind_name(ColoringKind k) noexcept;
bool is_special(ColoringKind k) noexcept;

// Identifies what makes a coloring special: the monochromatic vertex of a
// vertex-special coloring and/or its exceptional edge(s).
struct Witness {
    std::optional<int> vertex;
    std::vector<Edge> edges;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct ColoringClass {
    ColoringKind kind = ColoringKind::NonSpecial;
    int colors_used = 0;
    Witness witness;
};

// Throws NotGallai for colorings with a rainbow triangle. On K_3 a 2-colored
// coloring is both vertex- and edge-special; it is reported as edge-special.
ColoringClass classify(const EdgeColoring& phi);

// phi with vertex v deleted; remaining vertices keep their relative order.
// Throws InvalidArgument when n < 3 or v is out of range.
EdgeColoring restrict_coloring(const EdgeColoring& phi, int v);

// Canonical form under all n! vertex permutations and 3! color permutations:
// the lexicographically smallest color sequence, packed with edge 0 in the
// most significant position. Supported for n <= 8.
struct CanonicalCode {
    int n = 0;
    std::uint64_t value = 0;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr int kMaxCanonicalVertices = 8;

CanonicalCode canonical_code(const EdgeColoring& phi);
// The coloring whose color sequence is the code itself.
EdgeColoring decode_canonical(const CanonicalCode& code);

// Visits every image of phi under vertex and color relabeling (n! * 6 calls,
// duplicates included). Supported for n <= 8.
template <class Fn>
void for_each_relabeling(const EdgeColoring& phi, Fn&& fn);

// Requested shape for make_special. `base` colors all the ordinary edges;
// `accent` is the star color of a vertex-special coloring or the first
// exceptional edge; `second` is the lone edge of a 3-color vertex-special
// coloring or the second exceptional edge of a 3-color edge-special one.
struct SpecialShape {
    ColoringKind kind = ColoringKind::Monochromatic;
    Color base = Color::Red;
    Color accent = Color::Red;
    Color second = Color::Red;
};

// Special vertex at index 0, exceptional edges at the first feasible
// positions in canonical order. Throws InvalidArgument when infeasible.
EdgeColoring make_special(int n, const SpecialShape& shape);

// Text format: decimal n, LF, then n(n-1)/2 characters over {r,g,b}.
// A single trailing LF is accepted on input; output never has one.
EdgeColoring parse_coloring(std::string_view text);
std::string format_coloring(const EdgeColoring& phi);

}  // namespace gallai

#include "gallai/detail/relabel.hpp"
