#pragma once

#include <radiant/fan.hpp>

#include <random>
#include <vector>

namespace fixtures {

radiant::RayMatrix matrix(const std::vector<std::vector<long>>& rows);

/// Weighted projective space P(1,2,3).
radiant::RayMatrix p123();
/// F_1 x P^1.
radiant::RayMatrix f1_p1();
/// P^n: a single all-ones row.
radiant::RayMatrix projective_space(std::size_t n);
/// Three pairwise incomparable columns: all-ones minus identity, plus an all-ones row.
radiant::RayMatrix incomparable_columns();
/// The single row (2, 1).
radiant::RayMatrix row_2_1();

/// A uniformly drawn valid ray matrix with 1 <= n <= max_n,
/// 1 <= rows <= max_rows and entries in [0, max_entry].
radiant::RayMatrix random_matrix(std::mt19937& rng, std::size_t max_n, std::size_t max_rows, long max_entry);

/// The fixed-seed batch of random matrices shared by oracle tests.
std::vector<radiant::RayMatrix> random_batch(std::size_t count, unsigned seed, std::size_t max_n,
                                             std::size_t max_rows, long max_entry);

std::vector<radiant::RayMatrix> named_fixtures();

} // namespace fixtures
