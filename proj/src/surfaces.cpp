#include "radiant/surfaces.hpp"

#include "radiant/errors.hpp"
#include "radiant/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace radiant {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const IntVector& v)
{
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
}

Integer cross(const IntVector& a, const IntVector& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

bool angle_before(const IntVector& a, const IntVector& b)
{
    const int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

} // namespace

RayList sequence_to_rays(const SurfaceSequence& seq)
{
    const std::size_t m = seq.size();
    if (m < 3)
        throw InputError("surface sequence needs at least 3 entries");
    std::vector<IntVector> p{IntVector{1, 0}, IntVector{0, 1}};
    for (std::size_t s = 1; s <= m; ++s)
        p.push_back(Integer(seq[s % m]) * p[s] - p[s - 1]);
    if (p[m] != p[0] || p[m + 1] != p[1])
        throw InputError("surface sequence " + to_string(seq) + " does not close up");
    p.resize(m);
    // Every step turns counterclockwise by less than pi since det(p_s, p_{s+1}) = 1,
    // so the winding number counts passages through angle zero.
    std::size_t wraps = 0;
    for (std::size_t s = 0; s < m; ++s) {
        const auto& a = p[s];
        const auto& b = p[(s + 1) % m];
        if (cross(a, b) != 1)
            throw InvariantViolation("consecutive surface rays are not a positive basis");
        if (!angle_before(a, b))
            ++wraps;
    }
    if (wraps != 1)
        throw InputError("surface sequence " + to_string(seq) + " winds " + std::to_string(wraps)
                         + " times around the origin");
    std::set<IntVector> seen(p.begin(), p.end());
    if (seen.size() != m)
        throw InputError("surface sequence " + to_string(seq) + " repeats a ray");
    return make_ray_list(p, 2);
}

bool is_valid_sequence(const SurfaceSequence& seq)
{
    if (seq.size() < 3)
        return false;
    // Blow-ups add 3 to the sum and 1 to m, starting from P^2 or F_q.
    const long sum = std::accumulate(seq.begin(), seq.end(), 0L);
    if (sum != 3 * static_cast<long>(seq.size()) - 12)
        return false;
    try {
        sequence_to_rays(seq);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

bool is_radiant_sequence(const SurfaceSequence& seq)
{
    const std::size_t m = seq.size();
    for (std::size_t s = 0; s < m; ++s)
        if (seq[s] <= 0 && seq[(s + 1) % m] <= 0)
            return true;
    return false;
}

SurfaceSequence blow_up(const SurfaceSequence& seq, std::size_t s)
{
    const std::size_t m = seq.size();
    if (s >= m)
        throw InputError("blow-up position out of range");
    SurfaceSequence out(seq);
    out[s] += 1;
    out[(s + 1) % m] += 1;
    out.insert(out.begin() + static_cast<long>(s) + 1, 1);
    return out;
}

SurfaceSequence blow_down(const SurfaceSequence& seq, std::size_t s)
{
    const std::size_t m = seq.size();
    if (s >= m)
        throw InputError("blow-down position out of range");
    if (m <= 3)
        throw InputError("cannot blow down a surface with 3 rays");
    if (seq[s] != 1)
        throw InputError("blow-down needs c_s = 1");
    SurfaceSequence out(seq);
    out[(s + m - 1) % m] -= 1;
    out[(s + 1) % m] -= 1;
    out.erase(out.begin() + static_cast<long>(s));
    return out;
}

SurfaceSequence canonical_sequence(const SurfaceSequence& seq)
{
    SurfaceSequence best = seq;
    SurfaceSequence cur = seq;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < cur.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            best = std::min(best, cur);
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

std::vector<SurfaceSequence> enumerate_smooth_surfaces(std::size_t max_m, const SurfaceEnumerationOptions& options)
{
    if (max_m < 3)
        throw InputError("surface enumeration needs max_m >= 3");
    const long max_q = options.max_q.value_or(static_cast<long>(max_m));
    if (max_q < 0)
        throw InputError("max_q must be non-negative");

    std::set<SurfaceSequence> found;
    auto add = [&](const SurfaceSequence& s) {
        if (!found.insert(canonical_sequence(s)).second)
            return;
        if (found.size() > options.max_results)
            throw DomainError("surface enumeration exceeded the cap of " + std::to_string(options.max_results));
    };
    add({-1, -1, -1});
    if (max_m >= 4)
        for (long q = 0; q <= max_q; ++q)
            add({0, q, 0, -q});
    for (std::size_t m = 3; m < max_m; ++m) {
        std::vector<SurfaceSequence> level;
        for (const auto& s : found)
            if (s.size() == m)
                level.push_back(s);
        for (const auto& s : level)
            for (std::size_t pos = 0; pos < m; ++pos)
                add(blow_up(s, pos));
    }
    std::vector<SurfaceSequence> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const SurfaceSequence& a, const SurfaceSequence& b) { return a.size() < b.size(); });
    for (const auto& s : out)
        if (!is_valid_sequence(s))
            throw InvariantViolation("enumerated surface sequence " + to_string(s) + " is invalid");
    return out;
}

SurfaceReport surface_report(const SurfaceSequence& seq)
{
    RayList rays = sequence_to_rays(seq);
    if (!is_radiant_sequence(seq))
        throw DomainError("surface " + to_string(seq) + " is not radiant");
    auto bil = bilateralize(rays);
    if (!bil)
        throw InvariantViolation("radiant surface " + to_string(seq) + " has no bilateral basis");
    SurfaceReport rep{.sequence = seq, .rays = std::move(rays), .bilateral = std::move(*bil),
                      .picard_number = seq.size() - 2};

    const RootSystem sys = RootSystem::from_matrix(rep.bilateral.matrix);
    const RayMatrix& a = sys.matrix();
    if (sys.preorder().comparable(0, 1)) {
        std::optional<Integer> d;
        for (std::size_t k = 0; k < a.rows(); ++k) {
            if (a.at(k, 1) == 0)
                continue;
            Integer q = a.at(k, 0) / a.at(k, 1);
            if (!d || q < *d)
                d = q;
        }
        if (!d || !d->fits_ulong_p())
            throw InvariantViolation("surface ray matrix has no finite d");
        rep.d = d->get_ui();
    }
    rep.type = variety_type(sys);
    rep.umax = umax_shape(sys);
    rep.nilpotency_class = series_report(sys, sys.full()).nilpotency_class;
    rep.subgroups = enumerate_open_orbit_subgroups(sys);

    const std::string where = "surface " + to_string(seq) + ": ";
    if (rep.d) {
        const std::size_t d = *rep.d;
        if (rep.umax.per_ray != GroupShape::semidirect(GroupShape::abelian(1), GroupShape::abelian(d + 1)))
            throw InvariantViolation(where + "U_max is " + rep.umax.per_ray.to_string());
        if (rep.nilpotency_class != d + 1)
            throw InvariantViolation(where + "nilpotency class " + std::to_string(rep.nilpotency_class));
        if (rep.subgroups.subgroups.size() != d + 1)
            throw InvariantViolation(where + std::to_string(rep.subgroups.subgroups.size()) + " subgroups");
        if (rep.type != VarietyType::type_II)
            throw InvariantViolation(where + "comparable columns but commutative U_max");
    } else if (rep.type != VarietyType::type_I || rep.subgroups.subgroups.size() != 1) {
        throw InvariantViolation(where + "incomparable columns but non-commutative U_max");
    }
    return rep;
}

std::string to_string(const SurfaceSequence& seq)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < seq.size(); ++i)
        os << (i ? "," : "") << seq[i];
    os << ')';
    return os.str();
}

} // namespace radiant
