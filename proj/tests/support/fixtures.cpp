#include "support/fixtures.hpp"

namespace fixtures {

using radiant::RayMatrix;

RayMatrix matrix(const std::vector<std::vector<long>>& rows)
{
    return radiant::validate_ray_matrix(rows, rows.at(0).size());
}

RayMatrix p123() { return matrix({{3, 2, 1}}); }

RayMatrix f1_p1() { return matrix({{1, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }

RayMatrix projective_space(std::size_t n) { return matrix({std::vector<long>(n, 1)}); }

RayMatrix incomparable_columns() { return matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}); }

RayMatrix row_2_1() { return matrix({{2, 1}}); }

RayMatrix random_matrix(std::mt19937& rng, std::size_t max_n, std::size_t max_rows, long max_entry)
{
    std::uniform_int_distribution<std::size_t> dn(1, max_n);
    std::uniform_int_distribution<std::size_t> dr(1, max_rows);
    std::uniform_int_distribution<long> de(0, max_entry);
    for (;;) {
        const std::size_t n = dn(rng);
        const std::size_t rows = dr(rng);
        std::vector<std::vector<radiant::Integer>> raw(rows, std::vector<radiant::Integer>(n));
        for (auto& r : raw)
            for (auto& x : r)
                x = de(rng);
        if (radiant::check_ray_matrix(raw, n).empty())
            return radiant::validate_ray_matrix(raw, n);
    }
}

std::vector<RayMatrix> random_batch(std::size_t count, unsigned seed, std::size_t max_n, std::size_t max_rows,
                                    long max_entry)
{
    std::mt19937 rng(seed);
    std::vector<RayMatrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_matrix(rng, max_n, max_rows, max_entry));
    return out;
}

std::vector<RayMatrix> named_fixtures()
{
    std::vector<RayMatrix> out{p123(), f1_p1(), incomparable_columns(), row_2_1(), matrix({{1}}),
                               matrix({{1, 0}, {0, 1}})};
    for (std::size_t n = 2; n <= 4; ++n)
        out.push_back(projective_space(n));
    return out;
}

} // namespace fixtures
