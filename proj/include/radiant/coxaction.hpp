#pragma once

#include "radiant/polynomial.hpp"
#include "radiant/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radiant {

/// Default bound on the total degree of any intermediate polynomial.
inline constexpr std::uint32_t default_degree_cap = 64;

/// An endomorphism of Q[x_1..x_m, t_1..t_p] fixing the parameters t and
/// sending x_i to images[i]. Parameters stand for symbolic group arguments.
class PolyAutomorphism {
public:
    PolyAutomorphism(std::size_t m, std::size_t params);
    static PolyAutomorphism identity(std::size_t m, std::size_t params) { return PolyAutomorphism(m, params); }

    std::size_t m() const noexcept { return m_; }
    std::size_t params() const noexcept { return params_; }
    std::size_t nvars() const noexcept { return m_ + params_; }
    const Polynomial& image(std::size_t i) const { return images_[i]; }
    void set_image(std::size_t i, Polynomial p);
    const std::vector<Polynomial>& images() const noexcept { return images_; }

    /// Parameter t_k as a polynomial in the full variable set.
    Polynomial parameter(std::size_t k) const { return Polynomial::variable(nvars(), m_ + k); }
    Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }

    std::string to_string() const;

    friend bool operator==(const PolyAutomorphism& a, const PolyAutomorphism& b)
    {
        return a.m_ == b.m_ && a.params_ == b.params_ && a.images_ == b.images_;
    }

private:
    std::size_t m_;
    std::size_t params_;
    std::vector<Polynomial> images_;
};

/// Substitution composition: result image i is g.image(i) with every x_j
/// replaced by h.image(j). Group products g h correspond to compose(g, h).
PolyAutomorphism compose(const PolyAutomorphism& g, const PolyAutomorphism& h,
                         std::uint32_t degree_cap = default_degree_cap);

/// compose(f_1, compose(f_2, ...)).
PolyAutomorphism product(const std::vector<PolyAutomorphism>& factors, std::uint32_t degree_cap = default_degree_cap);

/// Cox exponent vector theta(e): <e, p_s> at every ray s except the ray of e, where it is 0.
Exponents theta(const RootSystem& sys, RootId e);

/// u_e(alpha): x_l -> x_l + alpha x^theta(e) for the ray l of e, other
/// coordinates fixed. alpha is a polynomial in the parameters only.
PolyAutomorphism root_automorphism(const RootSystem& sys, RootId e, const Polynomial& alpha, std::size_t params);
PolyAutomorphism root_automorphism(const RootSystem& sys, const IntVector& e, const Polynomial& alpha,
                                   std::size_t params);

/// Every image of x_i differs from x_i only by monomials in x_j (j > i, j <= n)
/// and the non-basis variables.
bool is_triangular(const RootSystem& sys, const PolyAutomorphism& g);

/// Every non-identity monomial in the image of x_l has exponent theta(f)
/// for some f in m on ray l; non-basis coordinates are fixed.
bool supported_on(const RootSystem& sys, const PolyAutomorphism& g, const RootSet& m);

struct ConjugationCheck {
    bool holds = false;
    Integer d;
    /// u_{e'}(-a') u_e(a) u_{e'}(a').
    PolyAutomorphism lhs;
    /// prod_k u_{e+ke'}(C(d,k) a a'^k).
    PolyAutomorphism rhs;
    std::string failure;
};

/// Checks the normalization formula for e in R_i^+, e' in R_j^+, j > i, as a
/// polynomial identity in symbolic a, a'.
ConjugationCheck verify_conjugation(const RootSystem& sys, RootId e, RootId e2,
                                    std::uint32_t degree_cap = default_degree_cap);

/// Same identity at rational values of a and a'.
bool verify_conjugation_at(const RootSystem& sys, RootId e, RootId e2, const Rational& a, const Rational& a2,
                           std::uint32_t degree_cap = default_degree_cap);

struct CommutatorTerm {
    /// Coefficient of s t x^theta(e+e') in the image of the ray of e+e'.
    Rational coefficient;
    /// True iff the commutator has no other term of degree (1,1) in (s,t).
    bool only_that_term = true;
};

/// Expands u_{e'}(t)^-1 u_e(s)^-1 u_{e'}(t) u_e(s) and reads off its s t part.
CommutatorTerm commutator_first_order(const RootSystem& sys, RootId e, RootId e2,
                                      std::uint32_t degree_cap = default_degree_cap);

/// Unitriangular k x k matrix with polynomial entries.
class UniTriMatrix {
public:
    UniTriMatrix(std::size_t k, std::size_t nvars);

    std::size_t k() const noexcept { return k_; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * k_ + c]; }
    void set(std::size_t r, std::size_t c, Polynomial p);
    /// Unitriangular with all nonzero off-diagonal entries in the first l rows.
    bool in_block(std::size_t l) const;

    friend UniTriMatrix operator*(const UniTriMatrix& a, const UniTriMatrix& b);
    friend bool operator==(const UniTriMatrix&, const UniTriMatrix&) = default;

private:
    std::size_t k_;
    std::size_t nvars_;
    std::vector<Polynomial> entries_;
};

struct EmbeddingCheck {
    bool holds = false;
    std::size_t k = 0;
    std::size_t l = 0;
    /// Number of root generators, which must equal dim U_{k,l}.
    std::size_t generators = 0;
    std::string failure;
};

/// Builds the matrix model of U(C_s) for class s (0-based) and checks, on
/// every ordered generator pair, that composing root automorphisms matches
/// multiplying their matrices, symbolically in both parameters.
EmbeddingCheck matrix_embedding_check(const RootSystem& sys, std::size_t class_index,
                                      std::uint32_t degree_cap = default_degree_cap);

} // namespace radiant
