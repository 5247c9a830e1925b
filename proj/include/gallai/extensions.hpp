#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

// w(phi): how many ways the edges from a new vertex can be colored so that
// the coloring of K_{n+1} stays Gallai.
struct ExtensionCount {
    std::uint64_t total = 0;
    // Extensions whose union with phi uses all three colors.
    std::uint64_t all_three_colors = 0;
    // Extensions grouped by the set of colors on the new star (ColorSet index).
    std::array<std::uint64_t, 8> by_star_colors{};
};

// Colors of the edges from the new vertex to vertices 0..n-1.
struct StarColoring {
    int n = 0;
    std::array<Color, kMaxVertices> colors{};

    std::string to_string() const;
    bool monochromatic() const noexcept;
    friend bool operator==(const StarColoring& a, const StarColoring& b) noexcept;
};

// phi plus a new vertex n joined according to `star`. Requires n + 1 <= 12.
EdgeColoring extend(const EdgeColoring& phi, const StarColoring& star);

// Throws NotGallai.
ExtensionCount count_extensions(const EdgeColoring& phi);

inline constexpr int kMaxListedVertices = 20;

// Valid stars in lexicographic color order. Throws NotGallai.
std::vector<StarColoring> list_extensions(const EdgeColoring& phi);

struct DoublingCheck {
    bool holds = true;
    std::uint64_t base_total = 0;      // w(phi)
    std::uint64_t worst_total = 0;     // max w(phi') over extensions phi'
    StarColoring worst_star;           // star producing that phi'
    std::uint64_t extensions_checked = 0;
};

// Checks w(phi') <= 2 w(phi) + 1 for every extension phi' of phi, streaming
// the extensions one at a time. Requires n <= 11.
DoublingCheck verify_doubling(const EdgeColoring& phi);

inline constexpr int kMaxClassScanVertices = 6;

struct ClassMaximum {
    std::uint64_t max_total = 0;
    // Canonical codes of the colorings attaining max_total, sorted, unique.
    std::vector<CanonicalCode> witnesses;
    std::uint64_t colorings_scanned = 0;
};

// Maximum of w over all Gallai colorings of K_n using exactly `colors`
// colors. Exhaustive; n <= 6.
ClassMaximum max_extensions_by_class(int n, int colors);

// Maximum over the same class of the number of extensions that use all three
// colors overall. Exhaustive; n <= 6.
std::uint64_t max_all_color_extensions_by_class(int n, int colors);

}  // namespace gallai
