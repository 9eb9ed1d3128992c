#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <radiant/groups.hpp>
#include <radiant/liealg.hpp>

#include <random>

using namespace radiant;

namespace {

RootSet set_of(const RootSystem& sys, std::initializer_list<IntVector> roots) { return sys.make_set(roots); }

RootSet restrict_to_ray(const RootSystem& sys, const RootSet& s, std::size_t i)
{
    RootSet out(sys.size());
    for (auto id : sys.on_ray(i))
        if (s.contains(id))
            out.insert(id);
    return out;
}

} // namespace

TEST_CASE("saturation check with witness")
{
    auto p2 = RootSystem::from_matrix(fixtures::projective_space(2));
    auto c = is_saturated(p2, set_of(p2, {{-1, 1}, {0, -1}}));
    CHECK_FALSE(c.saturated);
    REQUIRE(c.witness);
    CHECK(p2.root((*c.witness)[2]) == IntVector{-1, 0});

    auto p = RootSystem::from_matrix(fixtures::p123());
    CHECK(is_saturated(p, p.basics()).saturated);
    auto bad = is_saturated(p, set_of(p, {{-1, 0, 0}, {-1, 1, 0}, {0, -1, 0}, {0, -1, 1}, {0, 0, -1}}));
    CHECK_FALSE(bad.saturated);
    CHECK(p.root((*bad.witness)[2]) == IntVector{-1, 0, 1});
}

TEST_CASE("saturation closure")
{
    auto p2 = RootSystem::from_matrix(fixtures::projective_space(2));
    CHECK(saturation_closure(p2, set_of(p2, {{-1, 1}, {0, -1}})) == set_of(p2, {{-1, 1}, {0, -1}, {-1, 0}}));
    auto p = RootSystem::from_matrix(fixtures::p123());
    auto m = set_of(p, {{-1, 1, 1}, {0, -1, 1}, {0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
    auto expected = m;
    for (auto id : set_of(p, {{-1, 1, 0}, {-1, 0, 1}, {-1, 0, 2}}).ids())
        expected.insert(id);
    CHECK(saturation_closure(p, m) == expected);
    CHECK(saturation_closure(p, p.full()) == p.full());
}

TEST_CASE("open orbit criterion")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    CHECK(has_open_orbit(p, p.basics()));
    CHECK(has_open_orbit(p, p.full()));
    auto m = p.full();
    m.erase(p.basic(0));
    CHECK_FALSE(has_open_orbit(p, m));
}

TEST_CASE("enumeration for P(1,2,3)")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    auto r = enumerate_open_orbit_subgroups(p);
    CHECK(r.subgroups.size() == 27);
    CHECK(r.histogram == std::map<std::size_t, std::size_t>{{3, 1}, {4, 3}, {5, 4}, {6, 6}, {7, 5}, {8, 5}, {9, 2}, {10, 1}});
    std::map<std::size_t, std::size_t> by_m2;
    for (const auto& s : r.subgroups)
        ++by_m2[restrict_to_ray(p, s, 1).size()];
    CHECK(by_m2 == std::map<std::size_t, std::size_t>{{1, 11}, {2, 9}, {3, 7}});
    CHECK(r.subgroups.front() == p.basics());
    CHECK(r.subgroups.back() == p.full());
}

TEST_CASE("enumeration for small fans")
{
    auto p1 = RootSystem::from_matrix(fixtures::matrix({{1}}));
    CHECK(enumerate_open_orbit_subgroups(p1).subgroups.size() == 1);
    auto f = RootSystem::from_matrix(fixtures::f1_p1());
    auto r = enumerate_open_orbit_subgroups(f);
    CHECK(r.histogram == std::map<std::size_t, std::size_t>{{3, 1}, {4, 1}});
}

TEST_CASE("enumeration cap returns the partial listing")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    try {
        enumerate_open_orbit_subgroups(p, EnumerationOptions{5});
        FAIL("expected the cap to trigger");
    } catch (const EnumerationCapExceeded& e) {
        CHECK(e.partial().subgroups.size() == 5);
    }
}

TEST_CASE("enumeration equals brute-force subset filtering")
{
    std::mt19937 rng(17);
    std::size_t checked = 0;
    for (int t = 0; t < 60; ++t) {
        auto sys = RootSystem::from_matrix(fixtures::random_matrix(rng, 4, 3, 3));
        if (sys.size() - sys.n() > 12)
            continue;
        ++checked;
        auto r = enumerate_open_orbit_subgroups(sys);
        CHECK(r.subgroups == oracle::brute_force_open_orbit_sets(sys));
        // U_max is the unique inclusion-maximal element.
        CHECK(r.subgroups.back() == sys.full());
        for (const auto& s : r.subgroups)
            CHECK(s.subset_of(sys.full()));
    }
    CHECK(checked > 30);
}

TEST_CASE("U_max shapes")
{
    auto p = umax_shape(RootSystem::from_matrix(fixtures::p123()));
    CHECK(p.shape.to_string() == "(G_a ⋉ G_a^3) ⋉ G_a^6");
    CHECK(p.shape.dimension() == 10);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto s = umax_shape(RootSystem::from_matrix(fixtures::projective_space(n)));
        CHECK(s.shape.is_block(n + 1, n));
    }
    CHECK(umax_shape(RootSystem::from_matrix(fixtures::projective_space(3))).shape.to_string() == "U_4");
    auto f = umax_shape(RootSystem::from_matrix(fixtures::f1_p1()));
    CHECK(f.shape.to_string() == "(G_a ⋉ G_a) ⋉ G_a^2");
    CHECK(f.per_ray.to_string() == "(G_a ⋉ G_a) ⋉ G_a^2");
    auto blocks = umax_shape(RootSystem::from_matrix(fixtures::matrix({{1, 1, 1}, {1, 1, 0}})));
    CHECK(blocks.shape.to_string() == "G_a ⋉ U_{4,2}");
}

TEST_CASE("U_ss shapes")
{
    auto pn = uss_shape(RootSystem::from_matrix(fixtures::projective_space(3)));
    CHECK(pn.shape.to_string() == "U_4");
    CHECK(pn.simple_components == 1);
    auto p = uss_shape(RootSystem::from_matrix(fixtures::p123()));
    CHECK(p.shape.to_string() == "U_1 x U_1 x U_2");
    CHECK(p.simple_components == 1);
    auto f = uss_shape(RootSystem::from_matrix(fixtures::f1_p1()));
    CHECK(f.shape.to_string() == "U_1 x U_2 x U_2");
    CHECK(f.simple_components == 2);
}

TEST_CASE("center of U_max")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    CHECK(center(p, p.full()).indices == std::vector<std::size_t>{0});
    CHECK(center(p, p.basics()).indices == std::vector<std::size_t>{0, 1, 2});
    auto f = RootSystem::from_matrix(fixtures::f1_p1());
    CHECK(center(f, f.full()).indices == std::vector<std::size_t>{0, 2});
    auto m = p.full();
    m.erase(p.basic(1));
    CHECK_THROWS_AS(center(p, m), DomainError);
}

TEST_CASE("root graph of P(1,2,3)")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    RootGraph g(p, p.full());
    CHECK(g.arrows().size() == 24);
    CHECK(g.inner_count() == 12);
    CHECK(g.longest_path() == 4);
    auto arrow = [&](IntVector a, IntVector b) { return g.has_arrow(*p.find(a), *p.find(b)); };
    CHECK(arrow({0, -1, 1}, {0, -1, 0}));
    CHECK(arrow({-1, 1, 1}, {-1, 0, 3}));
    CHECK(arrow({0, 0, -1}, {-1, 1, 0}));
    CHECK(arrow({0, -1, 2}, {-1, 0, 3}));
    CHECK_FALSE(arrow({-1, 0, 0}, {-1, 0, 1}));

    auto derived = set_of(p, {{-1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {-1, 0, 2}, {-1, 0, 3}, {0, -1, 0}, {0, -1, 1}});
    CHECK(g.up(1) == derived);
    RootGraph h(p, derived);
    CHECK(h.arrows().size() == 4);
    CHECK(h.inner_count() == 2);
    CHECK(RootGraph(p, p.basics()).arrows().empty());
}

TEST_CASE("series of P(1,2,3)")
{
    auto p = RootSystem::from_matrix(fixtures::p123());
    auto s = series_report(p, p.full());
    CHECK(s.nilpotency_class == 5);
    CHECK(s.derived_length == 3);
    CHECK(s.lower.front() == p.full());
    CHECK(s.lower.back().empty());
    CHECK(s.upper.front().empty());
    CHECK(s.upper.back() == p.full());
    CHECK(s.derived[2] == set_of(p, {{-1, 0, 0}, {-1, 0, 1}}));
    CHECK(s.center_indices == std::vector<std::size_t>{0});

    auto c = series_report(p, p.basics());
    CHECK(c.nilpotency_class == 1);
    CHECK(c.derived_length == 1);
}

TEST_CASE("series of the single row (2,1)")
{
    auto sys = RootSystem::from_matrix(fixtures::row_2_1());
    auto s = series_report(sys, sys.full());
    REQUIRE(s.longest_path == 2);
    CHECK(s.lower[1] == set_of(sys, {{-1, 0}, {-1, 1}}));
    // The path -q2 -> -q1+q2 -> -q1 has length 2, so -q2 is not in the
    // second upper term.
    CHECK(s.upper[2] == set_of(sys, {{-1, 0}, {-1, 1}}));
    auto lie = lie_series(BracketTable(sys), sys.full());
    CHECK(lie.upper == s.upper);
    CHECK(lie.lower == s.lower);
}

TEST_CASE("variety types and P^1 splitting")
{
    auto inc = RootSystem::from_matrix(fixtures::incomparable_columns());
    CHECK(variety_type(inc) == VarietyType::type_I);
    auto sp = split_projective_lines(inc);
    CHECK(sp.b == 0);
    REQUIRE(sp.remainder);
    CHECK(*sp.remainder == inc.matrix());

    auto p = RootSystem::from_matrix(fixtures::p123());
    CHECK(variety_type(p) == VarietyType::type_II);
    CHECK_THROWS_AS(split_projective_lines(p), DomainError);

    auto p1p1 = RootSystem::from_matrix(fixtures::matrix({{1, 0}, {0, 1}}));
    CHECK(variety_type(p1p1) == VarietyType::type_I);
    auto s2 = split_projective_lines(p1p1);
    CHECK(s2.b == 2);
    CHECK_FALSE(s2.remainder);

    auto mixed = RootSystem::from_matrix(fixtures::matrix({{1, 0}, {0, 1}, {1, 1}}));
    CHECK(variety_type(mixed) == VarietyType::type_I);
    CHECK(split_projective_lines(mixed).b == 0);

    auto prod = RootSystem::from_matrix(fixtures::matrix({{1, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}}));
    auto s3 = split_projective_lines(prod);
    CHECK(s3.b == 1);
    REQUIRE(s3.remainder);
    CHECK(*s3.remainder == fixtures::incomparable_columns());
    CHECK(split_projective_lines(RootSystem(*s3.remainder)).b == 0);
}

TEST_CASE("P^1 x P^1 x P^1 type")
{
    auto sys = RootSystem::from_matrix(fixtures::matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(variety_type(sys) == VarietyType::type_I);
    CHECK(split_projective_lines(sys).b == 3);
}
