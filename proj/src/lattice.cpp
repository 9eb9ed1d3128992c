#include "radiant/lattice.hpp"

#include "radiant/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace radiant {

IntVector::IntVector(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
}

IntVector IntVector::unit(std::size_t n, std::size_t i)
{
    IntVector v(n);
    v[i] = 1;
    return v;
}

bool IntVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

bool IntVector::is_nonnegative() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x >= 0; });
}

bool IntVector::is_nonpositive() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x <= 0; });
}

IntVector& IntVector::operator+=(const IntVector& other)
{
    if (other.size() != size())
        throw InputError("vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

IntVector& IntVector::operator-=(const IntVector& other)
{
    if (other.size() != size())
        throw InputError("vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

IntVector& IntVector::operator*=(const Integer& s)
{
    for (auto& c : coords_)
        c *= s;
    return *this;
}

IntVector IntVector::operator-() const
{
    IntVector r(*this);
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

bool operator<(const IntVector& a, const IntVector& b)
{
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                        b.coords_.begin(), b.coords_.end());
}

bool IntVector::dominates(const IntVector& other) const
{
    if (other.size() != size())
        throw InputError("vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (coords_[i] < other.coords_[i])
            return false;
    return true;
}

std::vector<long> IntVector::to_longs() const
{
    std::vector<long> out;
    out.reserve(size());
    for (const auto& c : coords_) {
        if (!c.fits_slong_p())
            throw InputError("integer out of machine range: " + c.get_str());
        out.push_back(c.get_si());
    }
    return out;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw InputError("vector length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& c : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntVector primitive_normalize(const IntVector& v)
{
    Integer g = content(v);
    if (g == 0)
        throw InputError("zero ray");
    IntVector r(v);
    for (std::size_t i = 0; i < r.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

namespace {

std::vector<std::vector<Integer>> to_rows(std::span<const IntVector> rows)
{
    std::vector<std::vector<Integer>> a;
    a.reserve(rows.size());
    for (const auto& r : rows)
        a.push_back(r.coords());
    return a;
}

// Fraction-free elimination in place; returns the rank and leaves the
// Bareiss determinant (up to sign) of the leading block in `last_pivot`.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, Integer& last_pivot, int& sign)
{
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

} // namespace

Integer determinant(std::span<const IntVector> rows)
{
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw InputError("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    auto a = to_rows(rows);
    Integer pivot;
    int sign = 1;
    if (bareiss(a, n, pivot, sign) < n)
        return 0;
    return sign * pivot;
}

std::size_t rank(std::span<const IntVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw InputError("rank of a ragged matrix");
    auto a = to_rows(rows);
    Integer pivot;
    int sign = 1;
    return bareiss(a, cols, pivot, sign);
}

bool is_unimodular_basis(std::span<const IntVector> vectors)
{
    const std::size_t n = vectors.size();
    for (const auto& v : vectors)
        if (v.size() != n)
            throw InputError("basis must consist of n vectors of length n");
    if (n == 0)
        throw InputError("empty basis");
    Integer d = determinant(vectors);
    return d == 1 || d == -1;
}

Basis::Basis(std::vector<IntVector> vectors) : vectors_(std::move(vectors))
{
    if (!is_unimodular_basis(vectors_))
        throw InputError("vectors do not form a unimodular basis");
    det_ = determinant(vectors_);
}

Basis Basis::standard(std::size_t n)
{
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(IntVector::unit(n, i));
    return Basis(std::move(vs));
}

IntVector coords_in_basis(const IntVector& v, const Basis& b)
{
    const std::size_t n = b.rank();
    if (v.size() != n)
        throw InputError("vector length does not match basis rank");
    // Cramer's rule on the matrix with columns b_j; det(rows) = det(columns).
    IntVector c(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<IntVector> rows(b.vectors());
        rows[j] = v;
        Integer d = determinant(rows);
        mpz_divexact(c[j].get_mpz_t(), d.get_mpz_t(), b.det().get_mpz_t());
    }
    return c;
}

std::string to_string(const IntVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

} // namespace radiant
