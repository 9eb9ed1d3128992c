#pragma once

#include "radiant/fan.hpp"
#include "radiant/lattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radiant {

enum class RootKind { basic, elementary, special, detached };
enum class RootParity { semisimple, unipotent };

std::string to_string(RootKind kind);
std::string to_string(RootParity parity);

/// A Demazure root e in M, written in the dual basis q_1..q_n, together
/// with the (0-based) index of the unique ray on which it takes the value -1.
struct DemazureRoot {
    IntVector e;
    std::size_t ray = 0;
    RootKind kind = RootKind::basic;
    RootParity parity = RootParity::unipotent;
};

/// <e, p_l> for the ray p_l (0-based) of the fan with ray matrix a.
Integer pairing(const IntVector& e, std::size_t l, const RayMatrix& a);

/// The ray index l with <e,p_l> = -1 and <e,p_s> >= 0 elsewhere, if any.
std::optional<std::size_t> root_ray(const IntVector& e, const RayMatrix& a);

/// Column dominance: geq[i][j] iff column v_i >= v_j entrywise.
struct ColumnPreorder {
    std::vector<std::vector<bool>> geq;
    /// Classes of equal columns, each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> classes;

    bool strictly_above(std::size_t i, std::size_t j) const { return geq[i][j] && !geq[j][i]; }
    bool equivalent(std::size_t i, std::size_t j) const { return geq[i][j] && geq[j][i]; }
    bool comparable(std::size_t i, std::size_t j) const { return geq[i][j] || geq[j][i]; }
};

ColumnPreorder column_preorder(const RayMatrix& a);

/// True iff equal columns are consecutive and no column is strictly
/// dominated by a later one.
bool satisfies_segment_condition(const RayMatrix& a);

struct CanonicalForm {
    /// Canonical column i is input column permutation[i].
    std::vector<std::size_t> permutation;
    RayMatrix matrix;
    /// 0 = c_0 < c_1 < ... < c_r = n: class s occupies columns [c_{s-1}, c_s).
    std::vector<std::size_t> cuts;
};

/// Reorders columns so that classes become ⪰-non-increasing segments.
/// Among undominated classes the one holding the smallest input column is
/// placed first, so matrices already in segment order are left unchanged.
CanonicalForm canonical_reorder(const RayMatrix& a);

struct RootSystemReport {
    std::vector<DemazureRoot> all_roots;
    /// per_ray[l] lists R_{l+1}, sorted lexicographically.
    std::vector<std::vector<IntVector>> per_ray;
    /// positive[i] lists R_{i+1}^+, sorted lexicographically.
    std::vector<std::vector<IntVector>> positive;
};

/// All Demazure roots of the fan, classified. Works in the coordinates of a;
/// the positive part is meaningful only when a is canonical.
RootSystemReport demazure_roots(const RayMatrix& a);

/// Roots of R_i (i < n) supported on q_i and indices above i.
/// Throws InputError unless a satisfies the segment condition.
std::vector<std::vector<IntVector>> positive_roots(const RayMatrix& a);

using RootId = std::size_t;

/// A subset of the positive roots of a fixed RootSystem, as a bitmap over ids.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::size_t universe) : bits_(universe, false) {}
    RootSet(std::size_t universe, const std::vector<RootId>& ids);

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(RootId id) const { return bits_[id]; }
    void insert(RootId id) { bits_[id] = true; }
    void erase(RootId id) { bits_[id] = false; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<RootId> ids() const;
    bool subset_of(const RootSet& other) const;

    friend bool operator==(const RootSet& a, const RootSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const RootSet& a, const RootSet& b) { return !(a == b); }
    /// Size first, then the ascending id lists lexicographically.
    friend bool operator<(const RootSet& a, const RootSet& b);

private:
    std::vector<bool> bits_;
};

/// The positive roots of a canonical ray matrix with id-based lookups.
/// Ids follow the lexicographic order of root vectors, which groups them by
/// ray index (R_1^+ first) and puts the basic root -q_i first within R_i^+.
class RootSystem {
public:
    /// Canonicalizes a and keeps the column permutation.
    static RootSystem from_matrix(const RayMatrix& a);
    /// Requires a to satisfy the segment condition.
    explicit RootSystem(const RayMatrix& canonical);

    const RayMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }
    const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }
    const ColumnPreorder& preorder() const noexcept { return preorder_; }
    const RootSystemReport& report() const noexcept { return report_; }

    std::size_t n() const noexcept { return matrix_.n(); }
    std::size_t m() const noexcept { return matrix_.m(); }
    std::size_t size() const noexcept { return roots_.size(); }

    const IntVector& root(RootId id) const { return roots_[id]; }
    /// 0-based index i with id in R_{i+1}^+.
    std::size_t ray_of(RootId id) const { return ray_[id]; }
    const std::vector<RootId>& on_ray(std::size_t i) const { return by_ray_[i]; }
    RootId basic(std::size_t i) const { return by_ray_[i].front(); }
    std::optional<RootId> find(const IntVector& e) const;
    bool is_semisimple(RootId id) const { return semisimple_[id]; }
    bool is_basic(RootId id) const { return basic(ray_[id]) == id; }

    /// <root(id), p_l>.
    const Integer& pairing(RootId id, std::size_t l) const { return pairings_[id][l]; }
    /// The positive root a + b, when a + b is a root.
    std::optional<RootId> sum(RootId a, RootId b) const { return sums_[a * roots_.size() + b]; }

    RootSet full() const;
    RootSet basics() const;
    RootSet make_set(const std::vector<IntVector>& roots) const;

    std::string label(RootId id) const;

private:
    RootSystem(const RayMatrix& canonical, std::vector<std::size_t> permutation);

    RayMatrix matrix_;
    std::vector<std::size_t> permutation_;
    std::vector<std::size_t> cuts_;
    ColumnPreorder preorder_;
    RootSystemReport report_;
    std::vector<IntVector> roots_;
    std::map<IntVector, RootId> index_;
    std::vector<std::size_t> ray_;
    std::vector<std::vector<RootId>> by_ray_;
    std::vector<bool> semisimple_;
    std::vector<std::vector<Integer>> pairings_;
    std::vector<std::optional<RootId>> sums_;
};

/// Human-readable form of a root, e.g. "-q1+2q3".
std::string root_label(const IntVector& e);

} // namespace radiant
