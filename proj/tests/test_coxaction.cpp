#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <radiant/coxaction.hpp>
#include <radiant/errors.hpp>
#include <radiant/groups.hpp>
#include <radiant/liealg.hpp>

#include <random>

using namespace radiant;

namespace {

Polynomial param(const RootSystem& sys, std::size_t k) { return Polynomial::variable(sys.m() + 2, sys.m() + k); }

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::vector<long> longs(const IntVector& v) { return v.to_longs(); }

std::vector<Rational> random_point(std::mt19937& rng, std::size_t m)
{
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> x;
    for (std::size_t i = 0; i < m; ++i)
        x.push_back(q(d(rng), 1 + (d(rng) + 5)));
    return x;
}

// Evaluates an automorphism with parameters fixed at a point of Q^m.
std::vector<Rational> apply(const PolyAutomorphism& g, const std::vector<Rational>& params,
                            const std::vector<Rational>& x)
{
    std::vector<Rational> all(x);
    all.insert(all.end(), params.begin(), params.end());
    std::vector<Rational> out;
    for (std::size_t i = 0; i < g.m(); ++i) {
        Polynomial p = g.image(i).evaluate(0, all);
        out.push_back(p.coefficient(Exponents(g.nvars(), 0)));
    }
    return out;
}

} // namespace

TEST_CASE("theta of roots on P^2")
{
    auto sys = RootSystem::from_matrix(fixtures::projective_space(2));
    CHECK(theta(sys, *sys.find(IntVector{-1, 1})) == Exponents{0, 1, 0});
    CHECK(theta(sys, *sys.find(IntVector{-1, 0})) == Exponents{0, 0, 1});
    CHECK(theta(sys, *sys.find(IntVector{0, -1})) == Exponents{0, 0, 1});
}

TEST_CASE("root automorphisms are one-parameter subgroups")
{
    for (const auto& a : fixtures::named_fixtures()) {
        auto sys = RootSystem::from_matrix(a);
        const auto s = param(sys, 0), t = param(sys, 1);
        for (RootId e = 0; e < sys.size(); ++e) {
            const auto sum = compose(root_automorphism(sys, e, s, 2), root_automorphism(sys, e, t, 2));
            CHECK(sum == root_automorphism(sys, e, s + t, 2));
            const auto id = compose(root_automorphism(sys, e, s, 2), root_automorphism(sys, e, -s, 2));
            CHECK(id == PolyAutomorphism::identity(sys.m(), 2));
            CHECK(is_triangular(sys, root_automorphism(sys, e, s, 2)));
        }
    }
}

TEST_CASE("composition agrees with the point-map oracle")
{
    std::mt19937 rng(11);
    for (const auto& a : fixtures::named_fixtures()) {
        auto sys = RootSystem::from_matrix(a);
        const auto rays = oracle::explicit_rays(sys.matrix());
        std::uniform_int_distribution<std::size_t> pick(0, sys.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const RootId e = pick(rng), f = pick(rng);
            const std::vector<Rational> ps{q(trial - 7, 3), q(5 - trial, 2)};
            const auto g = compose(root_automorphism(sys, e, param(sys, 0), 2),
                                   root_automorphism(sys, f, param(sys, 1), 2));
            const auto x = random_point(rng, sys.m());
            const auto want = oracle::apply_root(rays, longs(sys.root(e)), ps[0],
                                                 oracle::apply_root(rays, longs(sys.root(f)), ps[1], x));
            CHECK(apply(g, ps, x) == want);
        }
    }
}

TEST_CASE("conjugation on P^2")
{
    auto sys = RootSystem::from_matrix(fixtures::projective_space(2));
    const RootId e = *sys.find(IntVector{-1, 1}), f = *sys.find(IntVector{0, -1});
    const auto c = verify_conjugation(sys, e, f);
    CHECK(c.holds);
    CHECK(c.d == 1);
    CHECK_THROWS_AS(verify_conjugation(sys, f, e), InputError);
}

TEST_CASE("conjugation with d = 2 on P(1,2,3)")
{
    auto sys = RootSystem::from_matrix(fixtures::p123());
    const RootId e = *sys.find(IntVector{-1, 0, 2}), f = *sys.find(IntVector{0, 0, -1});
    const auto c = verify_conjugation(sys, e, f);
    CHECK(c.d == 2);
    CHECK(c.holds);
    const RootId e2 = *sys.find(IntVector{-1, 1, 1}), f2 = *sys.find(IntVector{0, -1, 1});
    CHECK(verify_conjugation(sys, e2, f2).holds);
}

TEST_CASE("conjugation holds for every pair on later rays")
{
    for (const auto& a : fixtures::named_fixtures()) {
        auto sys = RootSystem::from_matrix(a);
        for (RootId e = 0; e < sys.size(); ++e)
            for (RootId f = 0; f < sys.size(); ++f) {
                if (sys.ray_of(e) >= sys.ray_of(f))
                    continue;
                CHECK(verify_conjugation(sys, e, f).holds);
                CHECK(verify_conjugation_at(sys, e, f, Rational(3, 7), Rational(-2)));
            }
    }
}

TEST_CASE("commutator first order matches the bracket")
{
    auto check_all = [](const RootSystem& sys) {
        const BracketTable table(sys);
        for (RootId e = 0; e < sys.size(); ++e)
            for (RootId f = 0; f < sys.size(); ++f) {
                const auto c = commutator_first_order(sys, e, f);
                CHECK(c.only_that_term);
                const auto& b = table.at(e, f);
                CHECK(c.coefficient == (b ? Rational(b->coefficient) : Rational(0)));
            }
    };
    for (const auto& a : fixtures::named_fixtures())
        check_all(RootSystem::from_matrix(a));
    for (const auto& a : fixtures::random_batch(15, 5, 3, 2, 2))
        check_all(RootSystem::from_matrix(a));
}

TEST_CASE("support of products stays inside a saturated set")
{
    auto sys = RootSystem::from_matrix(fixtures::projective_space(2));
    const auto full = sys.full();
    const auto g = product({root_automorphism(sys, 1, param(sys, 0), 2), root_automorphism(sys, 2, param(sys, 1), 2)});
    CHECK(supported_on(sys, g, full));
    CHECK_FALSE(supported_on(sys, g, sys.basics()));
}

TEST_CASE("matrix embedding of P^n")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto sys = RootSystem::from_matrix(fixtures::projective_space(n));
        const auto c = matrix_embedding_check(sys, 0);
        CHECK_MESSAGE(c.holds, c.failure);
        CHECK(c.k == n + 1);
        CHECK(c.l == n);
    }
}

TEST_CASE("matrix embedding of F_1 x P^1")
{
    auto sys = RootSystem::from_matrix(fixtures::f1_p1());
    for (std::size_t s = 0; s + 1 < sys.cuts().size(); ++s) {
        const auto c = matrix_embedding_check(sys, s);
        CHECK_MESSAGE(c.holds, c.failure);
        CHECK(c.generators == c.l * (c.l - 1) / 2 + c.l * (c.k - c.l));
    }
}

TEST_CASE("matrix embedding on every class of random fans")
{
    for (const auto& a : fixtures::random_batch(25, 9, 4, 3, 2)) {
        auto sys = RootSystem::from_matrix(a);
        for (std::size_t s = 0; s + 1 < sys.cuts().size(); ++s)
            CHECK_MESSAGE(matrix_embedding_check(sys, s).holds, matrix_embedding_check(sys, s).failure);
    }
}

TEST_CASE("degree cap")
{
    auto sys = RootSystem::from_matrix(fixtures::p123());
    const RootId e = *sys.find(IntVector{-1, 0, 3});
    CHECK_THROWS_AS(compose(root_automorphism(sys, e, param(sys, 0), 2), root_automorphism(sys, e, param(sys, 1), 2), 2),
                    DomainError);
}

TEST_CASE("identity cases")
{
    auto sys = RootSystem::from_matrix(fixtures::f1_p1());
    const auto g = root_automorphism(sys, 1, param(sys, 0), 2);
    CHECK(compose(PolyAutomorphism::identity(sys.m(), 2), g) == g);
    CHECK(root_automorphism(sys, 1, Polynomial(sys.m() + 2), 2) == PolyAutomorphism::identity(sys.m(), 2));
}

TEST_CASE("basic roots shift by a monomial in the non-basis coordinates")
{
    auto sys = RootSystem::from_matrix(fixtures::p123());
    const std::size_t nv = sys.m() + 2;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        Exponents ex(nv, 0);
        ex[3] = static_cast<std::uint32_t>(sys.matrix().at(0, i).get_ui());
        const auto u = root_automorphism(sys, sys.basic(i), param(sys, 0), 2);
        CHECK(u.image(i) == Polynomial::variable(nv, i) + param(sys, 0) * Polynomial::monomial(nv, ex));
    }
}

TEST_CASE("conjugation at a point on P(1,2,3)")
{
    auto sys = RootSystem::from_matrix(fixtures::p123());
    const RootId e = *sys.find(IntVector{-1, 1, 1}), f = *sys.find(IntVector{0, -1, 1});
    CHECK(verify_conjugation_at(sys, e, f, 1, 1));
    CHECK(verify_conjugation_at(sys, e, f, -3, 5));
}

TEST_CASE("commuting pairs conjugate trivially")
{
    for (const auto& a : fixtures::named_fixtures()) {
        auto sys = RootSystem::from_matrix(a);
        for (RootId e = 0; e < sys.size(); ++e)
            for (RootId f = 0; f < sys.size(); ++f) {
                if (sys.ray_of(e) >= sys.ray_of(f) || sys.pairing(e, sys.ray_of(f)) != 0)
                    continue;
                const auto c = verify_conjugation(sys, e, f);
                CHECK(c.holds);
                CHECK(c.lhs == root_automorphism(sys, e, param(sys, 0), 2));
            }
    }
}

TEST_CASE("surface conjugation formula on Hirzebruch surfaces")
{
    for (long q = 1; q <= 4; ++q) {
        // F_q in canonical coordinates: rows (1, 0) and (q, 1).
        auto sys = RootSystem::from_matrix(fixtures::matrix({{1, 0}, {q, 1}}));
        const auto a = param(sys, 0), a2 = param(sys, 1);
        const RootId f = *sys.find(IntVector{0, -1});
        for (long k = 0; k <= q; ++k) {
            const RootId e = *sys.find(IntVector{-1, k});
            std::vector<PolyAutomorphism> factors;
            for (long j = 0; j <= k; ++j) {
                Polynomial c = a;
                for (long t = 0; t < k - j; ++t)
                    c = c * a2;
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
                factors.push_back(root_automorphism(sys, IntVector{-1, j}, Rational(binom) * c, 2));
            }
            const auto lhs = product(
                {root_automorphism(sys, f, -a2, 2), root_automorphism(sys, e, a, 2), root_automorphism(sys, f, a2, 2)});
            CHECK(lhs == product(factors));
            CHECK(verify_conjugation(sys, e, f).holds);
        }
    }
}

TEST_CASE("products inside a saturated set stay supported on it")
{
    std::mt19937 rng(41);
    for (const auto& a : fixtures::named_fixtures()) {
        auto sys = RootSystem::from_matrix(a);
        for (const auto& m : enumerate_open_orbit_subgroups(sys).subgroups) {
            const auto ids = m.ids();
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<PolyAutomorphism> factors;
                const std::size_t len = 1 + rng() % 4;
                for (std::size_t k = 0; k < len; ++k)
                    factors.push_back(root_automorphism(sys, ids[rng() % ids.size()],
                                                        Polynomial::constant(sys.m(), Rational(int(rng() % 7) - 3)), 0));
                const auto g = product(factors);
                CHECK(supported_on(sys, g, m));
                CHECK(is_triangular(sys, g));
            }
        }
    }
}
