// Brackets a few small ordered Ramsey numbers by exhaustive search.

#include <cstdio>

#include <ramsey/search.hpp>

using namespace ramsey;

int main()
{
    struct Case
    {
        OrderedTripleSystem red;
        BlueSpec blue;
        int nmax;
    };
    const Case cases[] = {
        {monotone_path(4), monotone_path(4), 8},
        {monotone_path(3), JumpsSelector{1}, 5},
        {monotone_path(4), JumpsSelector{2}, 6},
        {monotone_path(4), power_path(5, 4), 7},
    };
    for (const auto& c : cases)
    {
        const auto result = bracket(c.red, c.blue, c.nmax, {.workers = 2});
        std::printf("red %-10s blue %-10s ", describe(c.red).c_str(), describe(c.blue).c_str());
        if (result.status == Status::Unsat)
            std::printf("R = %d\n", result.largest_sat + 1);
        else
            std::printf("R > %d (%s at N=%d)\n", result.largest_sat, to_string(result.status),
                        result.levels.back().N);
    }
}
