#pragma once

#include <algorithm>
#include <array>
#include <numeric>

#include "gallai/errors.hpp"

namespace gallai {

namespace detail {

inline constexpr std::array<std::array<Color, 3>, 6> kColorPermutations{{
    {Color::Red, Color::Green, Color::Blue},
    {Color::Red, Color::Blue, Color::Green},
    {Color::Green, Color::Red, Color::Blue},
    {Color::Green, Color::Blue, Color::Red},
    {Color::Blue, Color::Red, Color::Green},
    {Color::Blue, Color::Green, Color::Red},
}};

}  // namespace detail

template <class Fn>
void for_each_relabeling(const EdgeColoring& phi, Fn&& fn) {
    const int n = phi.vertex_count();
    if (n > kMaxCanonicalVertices)
        throw UnsupportedSize("relabeling enumeration supports n <= 8");
    const int m = edge_count(n);

    std::array<int, kMaxCanonicalVertices> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::array<Color, edge_count(kMaxCanonicalVertices)> seq{};
    EdgeColoring image(n);
    do {
        // image(a, b) = phi(perm[a], perm[b])
        for (int e = 0; e < m; ++e) {
            const Edge ed = edge_at(e);
            seq[e] = phi.color(perm[ed.lo], perm[ed.hi]);
        }
        for (const auto& cp : detail::kColorPermutations) {
            for (int e = 0; e < m; ++e) image.set(e, cp[code_of(seq[e])]);
            fn(static_cast<const EdgeColoring&>(image));
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
}

}  // namespace gallai
