#pragma once

// Depth-first generation of Gallai colorings and Gallai star extensions.
// Both walks assign edges in canonical order and reject a color as soon as it
// closes a rainbow triangle whose other two edges are already colored.

#include <cstdint>

#include "gallai/coloring.hpp"

namespace gallai {

namespace detail {

// Colors x for which some earlier w has {star[w], phi(w, v)} equal to the two
// colors other than x. `star[c]` holds the vertices w already joined to the
// new vertex with color c; `seen[c]` holds the w with phi(w, v) = c.
inline unsigned forbidden_colors(const std::uint32_t* star, const std::uint32_t* seen) noexcept {
    unsigned out = 0;
    if ((star[1] & seen[2]) | (star[2] & seen[1])) out |= 1u;
    if ((star[0] & seen[2]) | (star[2] & seen[0])) out |= 2u;
    if ((star[0] & seen[1]) | (star[1] & seen[0])) out |= 4u;
    return out;
}

template <class Fn>
struct GallaiWalker {
    int n;
    Fn& fn;
    EdgeColoring phi;
    // by_color[v][c]: vertices u < v with phi(u, v) = c.
    std::uint32_t by_color[kMaxVertices][3]{};

    void run(int j, int i, ColorSet used) {
        if (j == n) {
            fn(static_cast<const EdgeColoring&>(phi), used);
            return;
        }
        const int next_j = (i + 1 == j) ? j + 1 : j;
        const int next_i = (i + 1 == j) ? 0 : i + 1;
        const unsigned bad = forbidden_colors(by_color[j], by_color[i]);
        const int e = j * (j - 1) / 2 + i;
        for (int c = 0; c < 3; ++c) {
            if (bad & (1u << c)) continue;
            phi.set(e, static_cast<Color>(c));
            by_color[j][c] |= 1u << i;
            run(next_j, next_i, used | (1u << c));
            by_color[j][c] &= ~(1u << i);
        }
    }
};

template <class Fn>
struct StarWalker {
    int n;
    Fn& fn;
    const ColorMasks& masks;
    std::array<Color, kMaxVertices> colors{};
    std::uint32_t star[3]{};

    void run(int v, ColorSet used) {
        if (v == n) {
            fn(static_cast<const std::array<Color, kMaxVertices>&>(colors), used);
            return;
        }
        // Only w < v are in `star`, so later neighbours are ignored.
        const unsigned bad = forbidden_colors(star, masks.by_color[v].data());
        for (int c = 0; c < 3; ++c) {
            if (bad & (1u << c)) continue;
            colors[v] = static_cast<Color>(c);
            star[c] |= 1u << v;
            run(v + 1, used | (1u << c));
            star[c] &= ~(1u << v);
        }
    }
};

}  // namespace detail

// Calls fn(coloring, colors_used) for every Gallai coloring of K_n, in
// lexicographic order of the canonical color sequence.
template <class Fn>
void for_each_gallai(int n, Fn&& fn) {
    detail::GallaiWalker<Fn> w{n, fn, EdgeColoring(n)};
    if (n == 1) {
        fn(static_cast<const EdgeColoring&>(w.phi), ColorSet{0});
        return;
    }
    w.run(1, 0, 0);
}

// Calls fn(star_colors, star_colors_used) for every coloring of the edges
// from a new vertex to K_n that keeps phi Gallai, in lexicographic order.
// phi itself is assumed Gallai.
template <class Fn>
void for_each_star(const EdgeColoring& phi, Fn&& fn) {
    const ColorMasks masks = color_masks(phi);
    detail::StarWalker<Fn> w{phi.vertex_count(), fn, masks};
    w.run(0, 0);
}

}  // namespace gallai
