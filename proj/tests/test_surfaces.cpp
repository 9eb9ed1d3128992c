#include <doctest.h>

#include <radiant/errors.hpp>
#include <radiant/surfaces.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace radiant;

namespace {

// Every valid sequence of length m with entries in [-bound, bound], by
// exhaustive scan, reduced to dihedral representatives.
std::set<SurfaceSequence> brute_force_sequences(std::size_t m, long bound)
{
    std::set<SurfaceSequence> out;
    SurfaceSequence s(m, -bound);
    while (true) {
        if (is_valid_sequence(s))
            out.insert(canonical_sequence(s));
        std::size_t i = 0;
        while (i < m && s[i] == bound)
            s[i++] = -bound;
        if (i == m)
            break;
        ++s[i];
    }
    return out;
}

bool bounded(const SurfaceSequence& s, long bound)
{
    return std::all_of(s.begin(), s.end(), [bound](long c) { return c >= -bound && c <= bound; });
}

} // namespace

TEST_CASE("rays of P^2 and Hirzebruch surfaces")
{
    const auto p2 = sequence_to_rays({-1, -1, -1});
    CHECK(p2.rays == std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}});
    for (long q = 0; q <= 4; ++q) {
        const auto f = sequence_to_rays({0, q, 0, -q});
        CHECK(f.rays == std::vector<IntVector>{{1, 0}, {0, 1}, {-1, q}, {0, -1}});
    }
}

TEST_CASE("invalid sequences")
{
    CHECK_THROWS_AS(sequence_to_rays({0, 0, 0}), InputError);
    CHECK_THROWS_AS(sequence_to_rays({-1, -1}), InputError);
    CHECK_THROWS_AS(sequence_to_rays({-1, -1, -1, -1, -1, -1}), InputError);
    CHECK_FALSE(is_valid_sequence({0, 0, 0}));
    CHECK(is_valid_sequence({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("radiance criterion")
{
    CHECK(is_radiant_sequence({-1, -1, -1}));
    for (long q = 0; q <= 4; ++q)
        CHECK(is_radiant_sequence({0, q, 0, -q}));
    CHECK_FALSE(is_radiant_sequence({1, 1, 1, 1, 1, 1}));
    CHECK(is_radiant_sequence({0, 1, 1, 1, 1, 1, 0}));
}

TEST_CASE("blow-ups")
{
    CHECK(blow_up({-1, -1, -1}, 0) == SurfaceSequence{0, 1, 0, -1});
    CHECK(blow_up({0, 1, 0, -1}, 1) == SurfaceSequence{0, 2, 1, 1, -1});
    CHECK(blow_up({0, 1, 0, -1}, 3) == SurfaceSequence{1, 1, 0, 0, 1});

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        SurfaceSequence s{-1, -1, -1};
        for (int step = 0; step < 5; ++step) {
            const std::size_t pos = rng() % s.size();
            const auto t = blow_up(s, pos);
            CHECK(is_valid_sequence(t));
            CHECK(t.size() == s.size() + 1);
            CHECK(std::accumulate(t.begin(), t.end(), 0L) == std::accumulate(s.begin(), s.end(), 0L) + 3);
            CHECK(blow_down(t, pos + 1) == s);
            s = t;
        }
    }
    CHECK_THROWS_AS(blow_down({-1, -1, -1}, 0), InputError);
    CHECK_THROWS_AS(blow_down({0, 1, 0, -1}, 0), InputError);
}

TEST_CASE("enumeration for small m")
{
    CHECK(enumerate_smooth_surfaces(3) == std::vector<SurfaceSequence>{{-1, -1, -1}});
    for (const auto& s : enumerate_smooth_surfaces(5))
        CHECK(is_radiant_sequence(s));
    const auto six = enumerate_smooth_surfaces(6);
    CHECK(std::find(six.begin(), six.end(), SurfaceSequence{1, 1, 1, 1, 1, 1}) != six.end());
}

TEST_CASE("enumeration matches the exhaustive scan")
{
    const long bound = 3;
    const auto listed = enumerate_smooth_surfaces(5, {.max_q = bound + 2});
    for (std::size_t m = 3; m <= 5; ++m) {
        std::set<SurfaceSequence> from_enum;
        for (const auto& s : listed)
            if (s.size() == m && bounded(s, bound))
                from_enum.insert(s);
        CHECK(from_enum == brute_force_sequences(m, bound));
    }
}

TEST_CASE("enumeration does not depend on the cap beyond the seeds")
{
    const auto a = enumerate_smooth_surfaces(6, {.max_q = 2});
    const auto b = enumerate_smooth_surfaces(6, {.max_q = 4});
    for (const auto& s : a)
        CHECK(std::find(b.begin(), b.end(), s) != b.end());
    CHECK_THROWS_AS(enumerate_smooth_surfaces(6, {.max_q = 2, .max_results = 5}), DomainError);
}

TEST_CASE("radiance agrees with bilateralization")
{
    for (const auto& s : enumerate_smooth_surfaces(7, {.max_q = 5}))
        CHECK(is_radiant_sequence(s) == bilateralize(sequence_to_rays(s)).has_value());
}

TEST_CASE("report for P^2")
{
    const auto r = surface_report({-1, -1, -1});
    CHECK(r.d == 1u);
    CHECK(r.umax.shape.to_string() == "U_3");
    CHECK(r.nilpotency_class == 2);
    CHECK(r.subgroups.subgroups.size() == 2);
    CHECK(r.picard_number == 1);
}

TEST_CASE("report for Hirzebruch surfaces")
{
    const auto f0 = surface_report({0, 0, 0, 0});
    CHECK_FALSE(f0.d);
    CHECK(f0.type == VarietyType::type_I);
    CHECK(f0.subgroups.subgroups.size() == 1);
    for (long q = 1; q <= 5; ++q) {
        const auto r = surface_report({0, q, 0, -q});
        CHECK(r.d == static_cast<std::size_t>(q));
        CHECK(r.nilpotency_class == static_cast<std::size_t>(q + 1));
        CHECK(r.subgroups.subgroups.size() == static_cast<std::size_t>(q + 1));
    }
}

TEST_CASE("report rejects non-radiant surfaces")
{
    CHECK_THROWS_AS(surface_report({1, 1, 1, 1, 1, 1}), DomainError);
}

TEST_CASE("closed forms hold on every radiant surface up to m = 7")
{
    for (const auto& s : enumerate_smooth_surfaces(7, {.max_q = 4}))
        if (is_radiant_sequence(s))
            CHECK_NOTHROW(surface_report(s));
}
