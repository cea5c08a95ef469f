// Lifts the known triangle-free colorings and checks that the lifted
// triple colorings avoid both a red P_{n+2} and every blue member of J_n.

#include <cstdio>

#include <ramsey/construct.hpp>
#include <ramsey/detect.hpp>

using namespace ramsey;

int main()
{
    struct Case
    {
        const char* name;
        PairColoring chi;
        int n;
    };
    const Case cases[] = {
        {"pentagon", pentagon_coloring(), 2},
        {"gf16", gf16_coloring(), 3},
        {"schur14", schur_coloring({{1, 4, 10, 13}, {2, 3, 11, 12}, {5, 6, 7, 8, 9}}), 3},
        {"pentagon x pentagon", product_coloring(pentagon_coloring(), pentagon_coloring()), 4},
    };

    std::printf("%-20s %3s %2s %9s %10s %11s\n", "coloring", "N", "n", "triangle", "max alpha", "blue member");
    for (const auto& c : cases)
    {
        const auto lifted = lift(c.chi);
        const bool triangle = has_mono_clique(c.chi, 3).has_value();
        const int alpha = longest_red_path(lifted).max_alpha;
        const bool member = find_blue_jump_member(lifted, c.n).has_value();
        std::printf("%-20s %3d %2d %9s %10d %11s\n", c.name, c.chi.vertex_count(), c.n, triangle ? "yes" : "no", alpha,
                    member ? "yes" : "no");
        if (!triangle && alpha <= c.n && !member)
            std::printf("  => R(P_%d, J_%d) > %d\n", c.n + 2, c.n, c.chi.vertex_count());
    }
}
