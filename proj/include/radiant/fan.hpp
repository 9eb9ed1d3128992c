#pragma once

#include "radiant/errors.hpp"
#include "radiant/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radiant {

/// The (m-n) x n ray matrix of a bilateral fan. Row k holds the negated
/// coordinates of the non-basis ray p_{n+k+1} in the basis p_1..p_n.
///
/// Invariants: rows are nonzero, non-negative, primitive and pairwise
/// distinct; no column is identically zero. Only validate_ray_matrix and
/// the other checked factories in this library construct one.
class RayMatrix {
public:
    std::size_t n() const noexcept { return n_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    /// Total number of rays m = n + rows().
    std::size_t m() const noexcept { return n_ + rows_.size(); }

    const IntVector& row(std::size_t k) const { return rows_[k]; }
    const std::vector<IntVector>& row_vectors() const noexcept { return rows_; }
    const Integer& at(std::size_t k, std::size_t j) const { return rows_[k][j]; }
    IntVector column(std::size_t j) const;

    /// Coordinates of the ray generator p_l (0-based) in the basis p_1..p_n.
    IntVector ray(std::size_t l) const;

    /// Same matrix with columns reordered: result column i is column perm[i].
    RayMatrix permute_columns(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const RayMatrix& a, const RayMatrix& b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    friend RayMatrix validate_ray_matrix(const std::vector<std::vector<Integer>>& raw, std::size_t n);
    RayMatrix(std::size_t n, std::vector<IntVector> rows) : n_(n), rows_(std::move(rows)) {}

    std::size_t n_ = 0;
    std::vector<IntVector> rows_;
};

enum class RayMatrixViolationKind {
    bad_rank,
    width_mismatch,
    no_rows,
    zero_row,
    negative_entry,
    non_primitive_row,
    duplicate_rows,
    zero_column,
};

std::string to_string(RayMatrixViolationKind kind);

struct RayMatrixViolation {
    RayMatrixViolationKind kind;
    std::string detail;
};

/// Thrown by validate_ray_matrix; carries every violation found.
class RayMatrixError : public InputError {
public:
    explicit RayMatrixError(std::vector<RayMatrixViolation> violations);
    const std::vector<RayMatrixViolation>& violations() const noexcept { return violations_; }
    bool has(RayMatrixViolationKind kind) const;

private:
    std::vector<RayMatrixViolation> violations_;
};

/// All invariant violations of a candidate ray matrix (empty when valid).
std::vector<RayMatrixViolation> check_ray_matrix(const std::vector<std::vector<Integer>>& raw, std::size_t n);

/// Checked construction; throws RayMatrixError listing every violation.
RayMatrix validate_ray_matrix(const std::vector<std::vector<Integer>>& raw, std::size_t n);
RayMatrix validate_ray_matrix(const std::vector<std::vector<long>>& raw, std::size_t n);

/// Primitive ray generators of a fan in N = Z^n.
struct RayList {
    std::size_t n = 0;
    std::vector<IntVector> rays;
};

/// Normalizes every generator to its primitive vector and checks that the
/// rays are nonzero, of length n and pairwise distinct.
RayList make_ray_list(const std::vector<IntVector>& generators, std::size_t n);

/// A witness that a ray list is bilateral.
struct Bilateralization {
    /// Indices (0-based, increasing) of the rays forming the lattice basis.
    std::vector<std::size_t> basis_indices;
    /// Bilateral ordering of the rays: entry k is the input index of ray p_{k+1}.
    std::vector<std::size_t> permutation;
    RayMatrix matrix;
};

struct BilateralOptions {
    /// Upper bound on the number of n-subsets examined.
    std::uint64_t max_subsets = 2'000'000;
    /// For n = 2, reject ray sets whose cones cannot cover the plane.
    bool check_planar_completeness = true;
};

/// True iff the rank-2 rays leave no angular gap of pi or more.
bool is_complete_planar(const RayList& rl);

/// Searches index n-subsets in lexicographic order for a unimodular basis with
/// every other ray in the closed negative orthant. Returns the first witness,
/// or nothing when the fan is not bilateral.
///
/// Radiance conclusions assume the rays come from a complete fan; this is
/// checked only for n = 2.
std::optional<Bilateralization> bilateralize(const RayList& rl, const BilateralOptions& options = {});

/// Re-checks every Bilateralization invariant against the ray list.
bool verify_bilateralization(const RayList& rl, const Bilateralization& b);

/// Rays {e_1, ..., e_n, -rows} realizing a ray matrix.
RayList rays_of(const RayMatrix& a);

} // namespace radiant
