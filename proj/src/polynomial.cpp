#include "radiant/polynomial.hpp"

#include "radiant/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace radiant {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    return monomial(nvars, Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars)
        throw InputError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents exps, const Rational& c)
{
    if (exps.size() != nvars)
        throw InputError("exponent vector length mismatch");
    Polynomial p(nvars);
    p.add_term(exps, c);
    return p;
}

std::uint32_t Polynomial::degree() const
{
    return degree_in(0, nvars_);
}

std::uint32_t Polynomial::degree_in(std::size_t first, std::size_t last) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin() + static_cast<long>(first), e.begin() + static_cast<long>(last),
                                        std::uint32_t{0}));
    return d;
}

Rational Polynomial::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.nvars_ != nvars_)
        throw InputError("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.nvars_ != nvars_)
        throw InputError("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars_ != b.nvars_)
        throw InputError("polynomial variable count mismatch");
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, std::uint32_t degree_cap) const
{
    if (images.size() > nvars_)
        throw InputError("too many substitution images");
    for (const auto& img : images)
        if (img.nvars_ != nvars_)
            throw InputError("substitution image has the wrong variable count");
    auto check = [degree_cap](const Polynomial& p) {
        if (p.degree() > degree_cap)
            throw DomainError("polynomial degree exceeds the cap of " + std::to_string(degree_cap));
    };
    // powers[v][k] = images[v]^k, grown on demand.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, std::uint32_t k) -> const Polynomial& {
        auto& ps = powers[v];
        if (ps.empty())
            ps.push_back(constant(nvars_, 1));
        while (ps.size() <= k) {
            ps.push_back(ps.back() * images[v]);
            check(ps.back());
        }
        return ps[k];
    };
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest(nvars_, 0);
        for (std::size_t v = images.size(); v < nvars_; ++v)
            rest[v] = e[v];
        Polynomial term = monomial(nvars_, std::move(rest), c);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (e[v] > 0) {
                term = term * power(v, e[v]);
                check(term);
            }
        out += term;
    }
    return out;
}

Polynomial Polynomial::evaluate(std::size_t first, const std::vector<Rational>& values) const
{
    if (first + values.size() > nvars_)
        throw InputError("evaluation range out of bounds");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational k = c;
        Exponents rest = e;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::uint32_t p = 0; p < e[first + i]; ++p)
                k *= values[i];
            rest[first + i] = 0;
        }
        out.add_term(rest, k);
    }
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit_monomial = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || unit_monomial)
            os << a.get_str();
        bool need_star = a != 1 && !unit_monomial;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                os << '*';
            os << (v < names.size() ? names[v] : "v" + std::to_string(v));
            if (e[v] > 1)
                os << '^' << e[v];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace radiant
