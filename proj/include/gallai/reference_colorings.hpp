#pragma once

// Small named colorings whose extension counts are known in closed form.
// Vertex labels follow the usual drawings: x_1..x_k map to 0..k-1.

#include <array>
#include <initializer_list>
#include <utility>

#include "gallai/coloring.hpp"

namespace gallai::reference {

struct ColoredEdges {
    Color color;
    std::initializer_list<std::pair<int, int>> edges;
};

// `base` on every edge not listed.
EdgeColoring from_edges(int n, Color base, std::initializer_list<ColoredEdges> groups);

// The three non-special 2-colorings of K_4: a blue triangle with a blue
// vertex and a red path of length 2; complementary red and blue paths of
// length 3; a red perfect matching in a blue 4-cycle. w = 23, 21, 23.
std::array<EdgeColoring, 3> non_special_two_colored_k4();

// The two special 3-colorings of K_4: blue star at vertex 0 with a green
// edge among the rest; a blue and a green disjoint edge in a red K_4.
std::array<EdgeColoring, 2> special_three_colored_k4();

// Red triangle on {0,1,2}, everything else blue. w = 45.
EdgeColoring red_triangle_k5();

// Blue matching {01, 23} and green edge 45 in a red K_6. w = 53.
EdgeColoring matching_k6();

// Non-special 3-colorings of K_5 without a monochromatic vertex, types
// A through E. w = 25, 29, 25, 29, 31.
std::array<EdgeColoring, 5> non_special_three_colored_k5();
inline constexpr std::array<std::uint64_t, 5> kNonSpecialK5Extensions{25, 29, 25, 29, 31};

}  // namespace gallai::reference
