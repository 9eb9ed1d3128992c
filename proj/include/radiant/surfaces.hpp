#pragma once

#include "radiant/fan.hpp"
#include "radiant/groups.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace radiant {

/// Self-intersection numbers (c_1, ..., c_m) of a smooth complete toric
/// surface, read cyclically: p_{s-1} + p_{s+1} = c_s p_s.
using SurfaceSequence = std::vector<long>;

/// Runs the recursion from p_1 = (1,0), p_2 = (0,1). Throws InputError when
/// m < 3, the rays fail to close up, repeat, or wind around the origin more
/// than once.
RayList sequence_to_rays(const SurfaceSequence& seq);

/// True iff sequence_to_rays accepts seq.
bool is_valid_sequence(const SurfaceSequence& seq);

/// Some cyclically adjacent pair c_s, c_{s+1} is non-positive.
bool is_radiant_sequence(const SurfaceSequence& seq);

/// Blows up the fixed point between p_s and p_{s+1} (0-based s, cyclic):
/// (..., c_s + 1, 1, c_{s+1} + 1, ...).
SurfaceSequence blow_up(const SurfaceSequence& seq, std::size_t s);

/// Inverse of blow_up at a (-1)-curve: removes c_s = 1 and lowers both
/// neighbours. Throws InputError unless c_s = 1 and m > 3.
SurfaceSequence blow_down(const SurfaceSequence& seq, std::size_t s);

/// Lexicographically least rotation or reflection.
SurfaceSequence canonical_sequence(const SurfaceSequence& seq);

struct SurfaceEnumerationOptions {
    /// Hirzebruch seeds (0,q,0,-q) use q = 0..max_q; nothing means q <= max_m.
    std::optional<long> max_q;
    std::size_t max_results = 1'000'000;
};

/// All sequences with m <= max_m reachable by blow-ups from P^2 and the
/// Hirzebruch seeds, one canonical representative each, sorted by (m, seq).
/// Throws DomainError when more than max_results would be produced.
std::vector<SurfaceSequence> enumerate_smooth_surfaces(std::size_t max_m, const SurfaceEnumerationOptions& options = {});

struct SurfaceReport {
    SurfaceSequence sequence;
    RayList rays;
    Bilateralization bilateral;
    std::size_t picard_number = 0;
    /// Largest d with a_{k1} >= d a_{k2} for all k in canonical coordinates;
    /// absent when the two columns are incomparable.
    std::optional<std::size_t> d{};
    VarietyType type = VarietyType::type_I;
    UmaxShape umax{};
    std::size_t nilpotency_class = 0;
    EnumerationResult subgroups{};
};

/// Delegates to the fan, root and group computations and checks the results
/// against the closed forms: U_max = G_a ⋉ G_a^{d+1} of class d + 1 with
/// d + 1 open-orbit subgroups. Throws DomainError for non-radiant input.
SurfaceReport surface_report(const SurfaceSequence& seq);

std::string to_string(const SurfaceSequence& seq);

} // namespace radiant
