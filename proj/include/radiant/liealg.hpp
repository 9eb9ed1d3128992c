#pragma once

#include "radiant/roots.hpp"

#include <array>
#include <optional>
#include <vector>

namespace radiant {

/// [d_a, d_b] = coefficient * d_result.
struct BracketTerm {
    Integer coefficient;
    RootId result = 0;
};

/// Bracket of two positive root derivations. For a in R_i^+, b in R_j^+ with
/// i < j and d = <a, p_j> > 0 it is -d * d_{a+b}; it vanishes when d = 0 or
/// i = j, and the case i > j follows by antisymmetry.
std::optional<BracketTerm> bracket(const RootSystem& sys, RootId a, RootId b);

/// Vector form; throws InputError unless both vectors are positive roots.
std::optional<std::pair<Integer, IntVector>> bracket(const RootSystem& sys, const IntVector& a, const IntVector& b);

/// Structure constants of the Lie algebra spanned by all positive roots.
class BracketTable {
public:
    explicit BracketTable(const RootSystem& sys);

    const RootSystem& system() const noexcept { return *sys_; }
    const std::optional<BracketTerm>& at(RootId a, RootId b) const { return table_[a * sys_->size() + b]; }

private:
    const RootSystem* sys_;
    std::vector<std::optional<BracketTerm>> table_;
};

/// A triple of roots in m violating the Jacobi identity, if any.
std::optional<std::array<RootId, 3>> jacobi_violation(const BracketTable& table, const RootSet& m);

/// A bracket [a, b] of roots in m whose result leaves m, if any.
std::optional<std::array<RootId, 3>> closure_violation(const BracketTable& table, const RootSet& m);

struct LieCenter {
    /// Roots e of m with [d_e, d_f] = 0 for every f in m.
    RootSet center;
    /// Dimension of the solution space of the linear system for the center.
    std::size_t kernel_dimension = 0;
};

/// Center of the Lie algebra spanned by m, by exact linear algebra.
LieCenter lie_center(const BracketTable& table, const RootSet& m);

struct LieSeries {
    /// m = L_0 > L_1 > ... > empty.
    std::vector<RootSet> lower;
    /// empty = Z_0 < Z_1 < ... < m.
    std::vector<RootSet> upper;
    /// m = D_0 > D_1 > ... > empty.
    std::vector<RootSet> derived;
};

/// Lower central, upper central and derived series of span(m), each term
/// returned as the set of roots whose derivations span it.
LieSeries lie_series(const BracketTable& table, const RootSet& m);

} // namespace radiant
