#include <doctest.h>

#include "support/fixtures.hpp"

#include <radiant/fan.hpp>
#include <radiant/roots.hpp>

#include <algorithm>
#include <random>

using namespace radiant;
using K = RayMatrixViolationKind;

TEST_CASE("valid ray matrices pass validation")
{
    CHECK_NOTHROW(validate_ray_matrix(std::vector<std::vector<long>>{{1, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 3));
    CHECK_NOTHROW(validate_ray_matrix(std::vector<std::vector<long>>{{3, 2, 1}}, 3));
}

TEST_CASE("validation reports every violation")
{
    try {
        validate_ray_matrix(std::vector<std::vector<long>>{{1, 0}, {1, 0}}, 2);
        FAIL("expected an error");
    } catch (const RayMatrixError& e) {
        CHECK(e.has(K::duplicate_rows));
        CHECK(e.has(K::zero_column));
        CHECK(e.violations().size() == 2);
    }
    auto vs = check_ray_matrix({{0, 0}, {-1, 2}, {2, 4}}, 2);
    std::vector<K> kinds;
    for (auto& v : vs)
        kinds.push_back(v.kind);
    CHECK(kinds == std::vector<K>{K::zero_row, K::negative_entry, K::non_primitive_row});
    CHECK(check_ray_matrix({{1, 2, 3}, {1}}, 3).front().kind == K::width_mismatch);
    CHECK(check_ray_matrix({}, 2).front().kind == K::no_rows);
}

TEST_CASE("bilateralize finds the standard witness for P^2")
{
    auto rl = make_ray_list({{1, 0}, {0, 1}, {-1, -1}}, 2);
    auto b = bilateralize(rl);
    REQUIRE(b);
    CHECK(b->basis_indices == std::vector<std::size_t>{0, 1});
    CHECK(b->matrix == fixtures::matrix({{1, 1}}));
    CHECK(verify_bilateralization(rl, *b));
}

TEST_CASE("ray lists are normalized and checked")
{
    auto rl = make_ray_list({{2, 0}, {0, 3}, {-1, -1}}, 2);
    CHECK(rl.rays[0] == IntVector{1, 0});
    CHECK_THROWS_AS(make_ray_list({{1, 0}, {2, 0}}, 2), InputError);
    CHECK_THROWS_AS(make_ray_list({{0, 0}}, 2), InputError);
}

TEST_CASE("rays confined to a half-plane are rejected as incomplete")
{
    // The cones spanned by these rays miss the open lower-right region.
    auto rl = make_ray_list({{1, 0}, {0, 1}, {-1, 2}}, 2);
    CHECK_FALSE(is_complete_planar(rl));
    CHECK_THROWS_AS(bilateralize(rl), InputError);
    BilateralOptions lenient;
    lenient.check_planar_completeness = false;
    CHECK_FALSE(bilateralize(rl, lenient));
}

TEST_CASE("degenerate ray sets are rejected")
{
    CHECK_THROWS_WITH_AS(bilateralize(make_ray_list({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}, 3)),
                         doctest::Contains("degenerate ray set"), InputError);
}

TEST_CASE("the six-ray surface with all self-intersections 1 is not bilateral")
{
    // Rays of the blow-up of P^2 at three torus-fixed points.
    auto rl = make_ray_list({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}, 2);
    CHECK(is_complete_planar(rl));
    CHECK_FALSE(bilateralize(rl));
}

TEST_CASE("bilateralize chooses the lexicographically first subset")
{
    // Hirzebruch F_1 in a shuffled order: subsets {0,1} and {0,2} fail, {0,3} works.
    auto rl = make_ray_list({{-1, 1}, {0, -1}, {1, 0}, {0, 1}}, 2);
    auto b = bilateralize(rl);
    REQUIRE(b);
    CHECK(verify_bilateralization(rl, *b));
    CHECK(b->basis_indices.front() == 0);
}

TEST_CASE("the subset cap is enforced")
{
    BilateralOptions tight;
    tight.max_subsets = 2;
    auto rl = make_ray_list({{1, 0}, {0, 1}, {-1, -1}}, 2);
    CHECK_THROWS_AS(bilateralize(rl, tight), DomainError);
}

TEST_CASE("unshuffled rays recover the ray matrix exactly")
{
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        RayMatrix a = fixtures::random_matrix(rng, 4, 3, 3);
        auto b = bilateralize(rays_of(a));
        REQUIRE(b);
        CHECK(b->matrix == a);
    }
}

TEST_CASE("round trip from shuffled random ray matrices")
{
    std::mt19937 rng(2024);
    for (int t = 0; t < 60; ++t) {
        RayMatrix a = fixtures::random_matrix(rng, 4, 3, 3);
        RayList rl = rays_of(a);
        std::shuffle(rl.rays.begin(), rl.rays.end(), rng);
        auto b = bilateralize(rl);
        REQUIRE(b);
        CHECK(verify_bilateralization(rl, *b));
        CHECK(b->matrix.rows() == a.rows());
        // Any bilateral witness yields the same root count.
        CHECK(demazure_roots(b->matrix).all_roots.size() == demazure_roots(a).all_roots.size());
    }
}
