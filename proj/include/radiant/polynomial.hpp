#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace radiant {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(std::size_t nvars, Exponents exps, const Rational& c = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; 0 for the zero polynomial.
    std::uint32_t degree() const;
    /// Total degree in the variables [first, last).
    std::uint32_t degree_in(std::size_t first, std::size_t last) const;
    Rational coefficient(const Exponents& exps) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Replaces variable v by images[v] for v < images.size(); the remaining
    /// variables are kept. Throws DomainError when an intermediate total
    /// degree exceeds degree_cap.
    Polynomial substitute(const std::vector<Polynomial>& images, std::uint32_t degree_cap) const;

    /// Same polynomial with the variables [first, last) set to the given values.
    Polynomial evaluate(std::size_t first, const std::vector<Rational>& values) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Exponents& exps, const Rational& c);

    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace radiant
