#pragma once

#include "radiant/errors.hpp"
#include "radiant/roots.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radiant {

struct SaturationCheck {
    bool saturated = true;
    /// (a, b, a + b) with a in M_i, b in M_j, j > i, and a + b a root outside M.
    std::optional<std::array<RootId, 3>> witness;
};

SaturationCheck is_saturated(const RootSystem& sys, const RootSet& m);

/// Smallest saturated superset of m. Saturation is closure under adding
/// roots of higher rays, so the intersection of saturated sets is saturated
/// and the fixpoint below is well defined.
RootSet saturation_closure(const RootSystem& sys, RootSet m);

/// True iff m contains every basic root -q_i.
bool has_open_orbit(const RootSystem& sys, const RootSet& m);

struct EnumerationOptions {
    std::size_t max_results = 1'000'000;
};

struct EnumerationResult {
    /// Sorted by (dimension, ascending id list).
    std::vector<RootSet> subgroups;
    /// dimension -> number of subgroups.
    std::map<std::size_t, std::size_t> histogram;
};

/// Raised when the enumeration exceeds max_results; carries what was found.
class EnumerationCapExceeded : public DomainError {
public:
    EnumerationCapExceeded(std::size_t cap, EnumerationResult partial);
    const EnumerationResult& partial() const noexcept { return partial_; }

private:
    EnumerationResult partial_;
};

/// Root sets of all regular unipotent subgroups acting with an open orbit,
/// built ray by ray from n down to 1.
EnumerationResult enumerate_open_orbit_subgroups(const RootSystem& sys, const EnumerationOptions& options = {});

/// Abstract group built from triangular blocks.
class GroupShape {
public:
    enum class Kind { trivial, abelian, block, semidirect, direct };

    static GroupShape trivial();
    /// G_a^d; d = 0 gives the trivial group.
    static GroupShape abelian(std::size_t d);
    /// U_{k,l}: unitriangular k x k matrices vanishing outside the first l
    /// rows above the diagonal. U_{k,1} is returned as G_a^{k-1}.
    static GroupShape block(std::size_t k, std::size_t l);
    /// The full unitriangular group U_k = U_{k,k-1}; U_1 is trivial.
    static GroupShape unitriangular(std::size_t k);
    /// acting ⋉ normal.
    static GroupShape semidirect(GroupShape acting, GroupShape normal);
    static GroupShape direct(std::vector<GroupShape> factors);

    Kind kind() const noexcept { return kind_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t l() const noexcept { return l_; }
    const std::vector<GroupShape>& factors() const noexcept { return factors_; }

    std::size_t dimension() const;
    /// True iff this is U_{k,l} up to the G_a^{k-1} normalization.
    bool is_block(std::size_t k, std::size_t l) const;
    std::string to_string() const;

    friend bool operator==(const GroupShape&, const GroupShape&) = default;

private:
    Kind kind_ = Kind::trivial;
    std::size_t k_ = 0;
    std::size_t l_ = 0;
    std::vector<GroupShape> factors_;
};

struct UmaxShape {
    /// Nested semidirect product over the classes C_r, ..., C_1.
    GroupShape shape;
    /// The same nesting with one abelian factor G_a^{|R_i^+|} per ray.
    GroupShape per_ray;
    /// Block sizes k_s and l_s per class.
    std::vector<std::size_t> k;
    std::vector<std::size_t> l;
};

UmaxShape umax_shape(const RootSystem& sys);

struct UssShape {
    /// Direct product of the class components.
    GroupShape shape;
    std::vector<GroupShape> components;
    /// Number of simple components of the semisimple part of Aut(X).
    std::size_t simple_components = 0;
    /// Semisimple positive roots.
    RootSet roots;
};

UssShape uss_shape(const RootSystem& sys);

struct CenterReport {
    /// C(U) as 0-based indices.
    std::vector<std::size_t> indices;
    /// {-q_i : i in C(U)}.
    RootSet roots;
};

/// Center of U(m); throws DomainError unless m has an open orbit.
CenterReport center(const RootSystem& sys, const RootSet& m);

/// Smallest member of every ⪰-maximal class.
std::vector<std::size_t> maximal_class_minima(const RootSystem& sys);

struct Arrow {
    RootId from = 0;
    RootId to = 0;
    /// to - from, an element of the vertex set.
    RootId label = 0;
    /// Source and target lie on the same ray.
    bool inner = false;
};

/// The graph on m with an arrow a -> a + e for every e in m.
class RootGraph {
public:
    RootGraph(const RootSystem& sys, const RootSet& m);

    const RootSet& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t inner_count() const;

    /// Longest path in the whole graph (number of arrows).
    std::size_t longest_path() const;
    std::size_t longest_ending_at(RootId v) const { return ending_[v]; }
    std::size_t longest_starting_at(RootId v) const { return starting_[v]; }
    /// Longest path ending at v that uses inner arrows only.
    std::size_t longest_inner_ending_at(RootId v) const { return inner_ending_[v]; }

    /// Vertices reached by a path of length k.
    RootSet up(std::size_t k) const;
    /// Vertices from which every path has length less than k.
    RootSet down(std::size_t k) const;

    bool has_arrow(RootId a, RootId b) const;

private:
    RootSet vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> ending_;
    std::vector<std::size_t> starting_;
    std::vector<std::size_t> inner_ending_;
};

struct SeriesReport {
    std::vector<RootSet> lower;
    std::vector<RootSet> upper;
    std::vector<RootSet> derived;
    std::size_t longest_path = 0;
    std::size_t nilpotency_class = 0;
    std::size_t derived_length = 0;
    /// C(U) when m has an open orbit.
    std::optional<std::vector<std::size_t>> center_indices;
};

SeriesReport series_report(const RootSystem& sys, const RootSet& m);

enum class VarietyType { type_I, type_II };
std::string to_string(VarietyType t);

/// Type I iff U_max is commutative, i.e. the graph on R^+ has no arrow.
VarietyType variety_type(const RootSystem& sys);

struct ProjectiveLineSplit {
    /// Number of P^1 factors.
    std::size_t b = 0;
    /// Canonical columns (0-based) split off as P^1 factors.
    std::vector<std::size_t> columns;
    /// Ray matrix of the remaining factor Y; empty when Y is a point.
    std::optional<RayMatrix> remainder;
};

/// Splits X = (P^1)^b x Y for a Type I variety; throws DomainError for Type II.
ProjectiveLineSplit split_projective_lines(const RootSystem& sys);

} // namespace radiant
