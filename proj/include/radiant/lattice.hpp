#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace radiant {

using Integer = mpz_class;

/// A vector of a rank-n lattice (N or its dual M), stored with exact integers.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : coords_(n, 0) {}
    explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<long> coords);

    static IntVector unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_nonpositive() const;

    IntVector& operator+=(const IntVector& other);
    IntVector& operator-=(const IntVector& other);
    IntVector& operator*=(const Integer& s);

    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    friend IntVector operator*(const Integer& s, IntVector a) { return a *= s; }
    IntVector operator-() const;

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
    // Lexicographic.
    friend bool operator<(const IntVector& a, const IntVector& b);

    /// Entrywise comparison a >= b.
    bool dominates(const IntVector& other) const;

    std::vector<long> to_longs() const;

private:
    std::vector<Integer> coords_;
};

Integer dot(const IntVector& a, const IntVector& b);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);

/// Divides v by the gcd of its entries. Throws InputError("zero ray") for v = 0.
IntVector primitive_normalize(const IntVector& v);

/// Exact determinant of a square matrix given by rows (fraction-free Bareiss).
Integer determinant(std::span<const IntVector> rows);

/// Rank over Q of the matrix whose rows are given.
std::size_t rank(std::span<const IntVector> rows);

/// True iff the n vectors of length n have determinant +1 or -1.
/// Throws InputError when the vectors do not form a square matrix.
bool is_unimodular_basis(std::span<const IntVector> vectors);

/// A lattice basis: n vectors of length n with determinant +-1.
class Basis {
public:
    /// Throws InputError unless the vectors form a unimodular basis.
    explicit Basis(std::vector<IntVector> vectors);

    std::size_t rank() const noexcept { return vectors_.size(); }
    const IntVector& operator[](std::size_t j) const { return vectors_[j]; }
    const std::vector<IntVector>& vectors() const noexcept { return vectors_; }
    const Integer& det() const noexcept { return det_; }

    static Basis standard(std::size_t n);

private:
    std::vector<IntVector> vectors_;
    Integer det_;
};

/// The unique integer vector c with v = sum_j c_j b_j.
IntVector coords_in_basis(const IntVector& v, const Basis& b);

std::string to_string(const IntVector& v);

} // namespace radiant
