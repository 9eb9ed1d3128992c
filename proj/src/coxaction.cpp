#include "radiant/coxaction.hpp"

#include "radiant/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace radiant {

PolyAutomorphism::PolyAutomorphism(std::size_t m, std::size_t params) : m_(m), params_(params)
{
    images_.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        images_.push_back(Polynomial::variable(m + params, i));
}

void PolyAutomorphism::set_image(std::size_t i, Polynomial p)
{
    if (p.nvars() != nvars())
        throw InputError("image polynomial has the wrong number of variables");
    images_.at(i) = std::move(p);
}

std::string PolyAutomorphism::to_string() const
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m_; ++i)
        names.push_back("x" + std::to_string(i + 1));
    for (std::size_t k = 0; k < params_; ++k)
        names.push_back("t" + std::to_string(k + 1));
    std::ostringstream os;
    for (std::size_t i = 0; i < m_; ++i) {
        if (i)
            os << ", ";
        os << names[i] << " -> " << images_[i].to_string(names);
    }
    return os.str();
}

PolyAutomorphism compose(const PolyAutomorphism& g, const PolyAutomorphism& h, std::uint32_t degree_cap)
{
    if (g.m() != h.m() || g.params() != h.params())
        throw InputError("composing automorphisms of different rings");
    PolyAutomorphism out(g.m(), g.params());
    for (std::size_t i = 0; i < g.m(); ++i)
        out.set_image(i, g.image(i).substitute(h.images(), degree_cap));
    return out;
}

PolyAutomorphism product(const std::vector<PolyAutomorphism>& factors, std::uint32_t degree_cap)
{
    if (factors.empty())
        throw InputError("empty product");
    PolyAutomorphism acc = factors.back();
    for (std::size_t k = factors.size() - 1; k-- > 0;)
        acc = compose(factors[k], acc, degree_cap);
    return acc;
}

Exponents theta(const RootSystem& sys, RootId e)
{
    Exponents ex(sys.m(), 0);
    const std::size_t ray = sys.ray_of(e);
    for (std::size_t s = 0; s < sys.m(); ++s) {
        if (s == ray)
            continue;
        const Integer& p = sys.pairing(e, s);
        if (p < 0 || !p.fits_uint_p())
            throw InvariantViolation("root " + sys.label(e) + " has a bad pairing with ray " + std::to_string(s + 1));
        ex[s] = static_cast<std::uint32_t>(p.get_ui());
    }
    return ex;
}

namespace {

Exponents widen(const Exponents& ex, std::size_t nvars)
{
    Exponents w(ex);
    w.resize(nvars, 0);
    return w;
}

Polynomial power(const Polynomial& p, Integer k)
{
    Polynomial r = Polynomial::constant(p.nvars(), 1);
    for (; k > 0; --k)
        r = r * p;
    return r;
}

Exponents x_part(const Exponents& ex, std::size_t m)
{
    return Exponents(ex.begin(), ex.begin() + static_cast<long>(m));
}

} // namespace

PolyAutomorphism root_automorphism(const RootSystem& sys, RootId e, const Polynomial& alpha, std::size_t params)
{
    const std::size_t nv = sys.m() + params;
    if (alpha.nvars() != nv)
        throw InputError("root parameter has the wrong number of variables");
    if (alpha.degree_in(0, sys.m()) != 0)
        throw InputError("root parameter must not involve the Cox variables");
    PolyAutomorphism u(sys.m(), params);
    const std::size_t l = sys.ray_of(e);
    u.set_image(l, Polynomial::variable(nv, l) + alpha * Polynomial::monomial(nv, widen(theta(sys, e), nv)));
    return u;
}

PolyAutomorphism root_automorphism(const RootSystem& sys, const IntVector& e, const Polynomial& alpha,
                                   std::size_t params)
{
    auto id = sys.find(e);
    if (!id)
        throw InputError(to_string(e) + " is not a positive root");
    return root_automorphism(sys, *id, alpha, params);
}

bool is_triangular(const RootSystem& sys, const PolyAutomorphism& g)
{
    const std::size_t n = sys.n();
    for (std::size_t i = 0; i < g.m(); ++i) {
        const Polynomial rest = g.image(i) - Polynomial::variable(g.nvars(), i);
        if (i >= n) {
            if (!rest.is_zero())
                return false;
            continue;
        }
        for (const auto& [ex, c] : rest.terms())
            for (std::size_t t = 0; t <= i; ++t)
                if (ex[t] != 0)
                    return false;
    }
    return true;
}

bool supported_on(const RootSystem& sys, const PolyAutomorphism& g, const RootSet& m)
{
    std::vector<std::set<Exponents>> allowed(sys.n());
    for (RootId id : m.ids())
        allowed[sys.ray_of(id)].insert(theta(sys, id));
    for (std::size_t l = 0; l < g.m(); ++l) {
        const Polynomial rest = g.image(l) - Polynomial::variable(g.nvars(), l);
        if (l >= sys.n()) {
            if (!rest.is_zero())
                return false;
            continue;
        }
        for (const auto& [ex, c] : rest.terms())
            if (!allowed[l].contains(x_part(ex, g.m())))
                return false;
    }
    return true;
}

namespace {

struct ConjugationSides {
    Integer d;
    PolyAutomorphism lhs;
    PolyAutomorphism rhs;
    std::string failure;
};

ConjugationSides conjugation_sides(const RootSystem& sys, RootId e, RootId e2, const Polynomial& a,
                                   const Polynomial& a2, std::size_t params, std::uint32_t cap)
{
    const std::size_t i = sys.ray_of(e), j = sys.ray_of(e2);
    if (i >= j)
        throw InputError("conjugation formula needs the second root on a later ray");
    const Integer d = sys.pairing(e, j);
    PolyAutomorphism lhs = product({root_automorphism(sys, e2, -a2, params), root_automorphism(sys, e, a, params),
                                    root_automorphism(sys, e2, a2, params)},
                                   cap);
    std::vector<PolyAutomorphism> factors;
    std::string failure;
    IntVector v = sys.root(e);
    for (Integer k = 0; k <= d; ++k, v += sys.root(e2)) {
        auto id = sys.find(v);
        if (!id) {
            failure = root_label(v) + " is not a positive root";
            break;
        }
        Integer binom;
        mpz_bin_ui(binom.get_mpz_t(), d.get_mpz_t(), k.get_ui());
        factors.push_back(root_automorphism(sys, *id, Rational(binom) * a * power(a2, k), params));
    }
    PolyAutomorphism rhs = failure.empty() ? product(factors, cap) : PolyAutomorphism(sys.m(), params);
    return {d, std::move(lhs), std::move(rhs), std::move(failure)};
}

} // namespace

ConjugationCheck verify_conjugation(const RootSystem& sys, RootId e, RootId e2, std::uint32_t degree_cap)
{
    const std::size_t nv = sys.m() + 2;
    auto s = conjugation_sides(sys, e, e2, Polynomial::variable(nv, sys.m()), Polynomial::variable(nv, sys.m() + 1),
                               2, degree_cap);
    ConjugationCheck out{false, s.d, std::move(s.lhs), std::move(s.rhs), std::move(s.failure)};
    if (out.failure.empty()) {
        out.holds = out.lhs == out.rhs;
        if (!out.holds)
            out.failure = "lhs " + out.lhs.to_string() + " differs from rhs " + out.rhs.to_string();
    }
    return out;
}

bool verify_conjugation_at(const RootSystem& sys, RootId e, RootId e2, const Rational& a, const Rational& a2,
                           std::uint32_t degree_cap)
{
    const std::size_t nv = sys.m();
    auto s = conjugation_sides(sys, e, e2, Polynomial::constant(nv, a), Polynomial::constant(nv, a2), 0, degree_cap);
    return s.failure.empty() && s.lhs == s.rhs;
}

CommutatorTerm commutator_first_order(const RootSystem& sys, RootId e, RootId e2, std::uint32_t degree_cap)
{
    const std::size_t m = sys.m(), nv = m + 2;
    const Polynomial s = Polynomial::variable(nv, m), t = Polynomial::variable(nv, m + 1);
    const PolyAutomorphism c = product({root_automorphism(sys, e2, -t, 2), root_automorphism(sys, e, -s, 2),
                                        root_automorphism(sys, e2, t, 2), root_automorphism(sys, e, s, 2)},
                                       degree_cap);
    const auto sum = sys.sum(e, e2);
    std::optional<Exponents> target;
    if (sum)
        target = theta(sys, *sum);
    CommutatorTerm out;
    for (std::size_t l = 0; l < m; ++l) {
        for (const auto& [ex, coef] : c.image(l).terms()) {
            if (ex[m] != 1 || ex[m + 1] != 1)
                continue;
            if (sum && sys.ray_of(*sum) == l && x_part(ex, m) == *target)
                out.coefficient += coef;
            else
                out.only_that_term = false;
        }
    }
    return out;
}

UniTriMatrix::UniTriMatrix(std::size_t k, std::size_t nvars) : k_(k), nvars_(nvars), entries_(k * k, Polynomial(nvars))
{
    for (std::size_t i = 0; i < k; ++i)
        entries_[i * k + i] = Polynomial::constant(nvars, 1);
}

void UniTriMatrix::set(std::size_t r, std::size_t c, Polynomial p)
{
    if (r >= c)
        throw InputError("only strictly upper entries of a unitriangular matrix can be set");
    if (p.nvars() != nvars_)
        throw InputError("matrix entry has the wrong number of variables");
    entries_.at(r * k_ + c) = std::move(p);
}

bool UniTriMatrix::in_block(std::size_t l) const
{
    for (std::size_t r = 0; r < k_; ++r)
        for (std::size_t c = 0; c < k_; ++c) {
            const auto& p = at(r, c);
            if (r == c) {
                if (p != Polynomial::constant(nvars_, 1))
                    return false;
            } else if (!p.is_zero() && (r > c || r >= l)) {
                return false;
            }
        }
    return true;
}

UniTriMatrix operator*(const UniTriMatrix& a, const UniTriMatrix& b)
{
    if (a.k_ != b.k_ || a.nvars_ != b.nvars_)
        throw InputError("matrix shape mismatch");
    UniTriMatrix out(a.k_, a.nvars_);
    for (std::size_t r = 0; r < a.k_; ++r)
        for (std::size_t c = 0; c < a.k_; ++c) {
            Polynomial s(a.nvars_);
            for (std::size_t t = 0; t < a.k_; ++t)
                s += a.at(r, t) * b.at(t, c);
            out.entries_[r * a.k_ + c] = std::move(s);
        }
    return out;
}

namespace {

struct BlockModel {
    std::size_t c = 0;
    std::size_t l = 0;
    std::size_t k = 0;
    std::vector<Exponents> basis;
    /// Matrix position of each generator.
    std::map<RootId, std::pair<std::size_t, std::size_t>> position;
};

BlockModel block_model(const RootSystem& sys, std::size_t s)
{
    BlockModel b;
    b.c = sys.cuts()[s];
    b.l = sys.cuts()[s + 1] - b.c;
    const std::size_t m = sys.m();
    for (std::size_t r = 0; r < b.l; ++r) {
        Exponents ex(m, 0);
        ex[b.c + r] = 1;
        b.basis.push_back(std::move(ex));
    }
    auto in_class = [&](std::size_t j) { return j >= b.c && j < b.c + b.l; };
    std::map<Exponents, std::size_t> mu;
    for (RootId id : sys.on_ray(b.c)) {
        const auto& e = sys.root(id);
        bool elementary_in_class = false;
        for (std::size_t j = b.c + 1; j < b.c + b.l; ++j)
            if (e == -IntVector::unit(sys.n(), b.c) + IntVector::unit(sys.n(), j))
                elementary_in_class = true;
        if (elementary_in_class)
            continue;
        mu.emplace(theta(sys, id), b.basis.size());
        b.basis.push_back(theta(sys, id));
    }
    b.k = b.basis.size();
    for (std::size_t i = b.c; i < b.c + b.l; ++i) {
        for (RootId id : sys.on_ray(i)) {
            const auto& e = sys.root(id);
            std::optional<std::size_t> col;
            for (std::size_t j = i + 1; j < b.c + b.l && !col; ++j)
                if (e == -IntVector::unit(sys.n(), i) + IntVector::unit(sys.n(), j))
                    col = j - b.c;
            if (!col) {
                auto it = mu.find(theta(sys, id));
                if (it == mu.end())
                    throw InvariantViolation("root " + sys.label(id) + " has no partner on the class leader");
                for (std::size_t j = 0; j < sys.n(); ++j)
                    if (j != i && in_class(j) && e[j] != 0)
                        throw InvariantViolation("root " + sys.label(id) + " mixes class coordinates");
                col = it->second;
            }
            b.position.emplace(id, std::make_pair(i - b.c, *col));
        }
    }
    return b;
}

// The matrix of g on the span of the block basis, or nothing when some image
// leaves that span.
std::optional<UniTriMatrix> readout(const BlockModel& b, const PolyAutomorphism& g)
{
    const std::size_t m = g.m(), nv = g.nvars();
    UniTriMatrix out(b.k, nv);
    std::vector<Polynomial> row(b.k, Polynomial(nv));
    for (std::size_t r = 0; r < b.l; ++r) {
        std::fill(row.begin(), row.end(), Polynomial(nv));
        for (const auto& [ex, coef] : g.image(b.c + r).terms()) {
            auto it = std::find(b.basis.begin(), b.basis.end(), x_part(ex, m));
            if (it == b.basis.end())
                return std::nullopt;
            Exponents pe(nv, 0);
            std::copy(ex.begin() + static_cast<long>(m), ex.end(), pe.begin() + static_cast<long>(m));
            row[static_cast<std::size_t>(it - b.basis.begin())] += Polynomial::monomial(nv, pe, coef);
        }
        for (std::size_t c = 0; c < b.k; ++c) {
            if (c == r) {
                if (row[c] != Polynomial::constant(nv, 1))
                    return std::nullopt;
            } else if (!row[c].is_zero()) {
                if (c < r)
                    return std::nullopt;
                out.set(r, c, row[c]);
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if ((i < b.c || i >= b.c + b.l) && g.image(i) != Polynomial::variable(nv, i))
            return std::nullopt;
    return out;
}

} // namespace

EmbeddingCheck matrix_embedding_check(const RootSystem& sys, std::size_t class_index, std::uint32_t degree_cap)
{
    if (class_index + 1 >= sys.cuts().size())
        throw InputError("class index out of range");
    const BlockModel b = block_model(sys, class_index);
    EmbeddingCheck out;
    out.k = b.k;
    out.l = b.l;
    out.generators = b.position.size();
    const std::size_t dim = b.l * (b.l - 1) / 2 + b.l * (b.k - b.l);
    if (out.generators != dim) {
        out.failure = std::to_string(out.generators) + " generators for a block of dimension " + std::to_string(dim);
        return out;
    }
    std::set<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& [id, pos] : b.position)
        cells.insert(pos);
    if (cells.size() != dim) {
        out.failure = "two generators share a matrix entry";
        return out;
    }

    const std::size_t nv = sys.m() + 2;
    const Polynomial a = Polynomial::variable(nv, sys.m()), a2 = Polynomial::variable(nv, sys.m() + 1);
    auto phi = [&](RootId id, const Polynomial& p) {
        UniTriMatrix mat(b.k, nv);
        const auto [r, c] = b.position.at(id);
        mat.set(r, c, p);
        return mat;
    };
    for (const auto& [x, px] : b.position) {
        for (const auto& [y, py] : b.position) {
            const auto g = compose(root_automorphism(sys, x, a, 2), root_automorphism(sys, y, a2, 2), degree_cap);
            const auto got = readout(b, g);
            const UniTriMatrix want = phi(x, a) * phi(y, a2);
            if (!got || !got->in_block(b.l) || !(*got == want)) {
                out.failure = "product of " + sys.label(x) + " and " + sys.label(y) + " does not match its matrix";
                return out;
            }
        }
    }
    out.holds = true;
    return out;
}

} // namespace radiant
