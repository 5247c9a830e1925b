#include "gallai/reference_colorings.hpp"

namespace gallai::reference {

namespace {
constexpr Color R = Color::Red;
constexpr Color G = Color::Green;
constexpr Color B = Color::Blue;
}  // namespace

EdgeColoring from_edges(int n, Color base, std::initializer_list<ColoredEdges> groups) {
    EdgeColoring phi(n, base);
    for (const auto& g : groups)
        for (auto [u, v] : g.edges) phi.set_color(u, v, g.color);
    return phi;
}

std::array<EdgeColoring, 3> non_special_two_colored_k4() {
    return {
        from_edges(4, R, {{B, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}}}),
        from_edges(4, R, {{B, {{0, 2}, {0, 3}, {1, 3}}}}),
        from_edges(4, R, {{B, {{1, 3}, {1, 2}, {0, 2}, {0, 3}}}}),
    };
}

std::array<EdgeColoring, 2> special_three_colored_k4() {
    return {
        from_edges(4, R, {{B, {{0, 1}, {0, 2}, {0, 3}}}, {G, {{2, 3}}}}),
        from_edges(4, R, {{B, {{0, 3}}}, {G, {{1, 2}}}}),
    };
}

EdgeColoring red_triangle_k5() { return from_edges(5, B, {{R, {{0, 1}, {0, 2}, {1, 2}}}}); }

EdgeColoring matching_k6() { return from_edges(6, R, {{B, {{0, 1}, {2, 3}}}, {G, {{4, 5}}}}); }

std::array<EdgeColoring, 5> non_special_three_colored_k5() {
    return {
        // A
        from_edges(5, R, {{B, {{0, 4}, {0, 3}, {1, 2}, {1, 3}, {1, 4}}}, {G, {{3, 4}}}}),
        // B
        from_edges(5, R, {{B, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}}, {G, {{3, 4}}}}),
        // C
        from_edges(5, R, {{B, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}}, {G, {{0, 1}, {3, 4}}}}),
        // D
        from_edges(5, R, {{B, {{2, 3}, {2, 4}}}, {G, {{0, 1}}}}),
        // E
        from_edges(5, R, {{B, {{2, 3}, {3, 4}, {2, 4}}}, {G, {{0, 1}}}}),
    };
}

}  // namespace gallai::reference
