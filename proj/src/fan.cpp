#include "radiant/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace radiant {

IntVector RayMatrix::column(std::size_t j) const
{
    IntVector c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k)
        c[k] = rows_[k][j];
    return c;
}

IntVector RayMatrix::ray(std::size_t l) const
{
    if (l < n_)
        return IntVector::unit(n_, l);
    return -rows_.at(l - n_);
}

RayMatrix RayMatrix::permute_columns(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != n_)
        throw InputError("column permutation has wrong length");
    std::vector<IntVector> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) {
        IntVector p(n_);
        for (std::size_t i = 0; i < n_; ++i)
            p[i] = r[perm[i]];
        rows.push_back(std::move(p));
    }
    return RayMatrix(n_, std::move(rows));
}

std::string to_string(RayMatrixViolationKind kind)
{
    switch (kind) {
    case RayMatrixViolationKind::bad_rank: return "bad-rank";
    case RayMatrixViolationKind::width_mismatch: return "width-mismatch";
    case RayMatrixViolationKind::no_rows: return "no-rows";
    case RayMatrixViolationKind::zero_row: return "zero-row";
    case RayMatrixViolationKind::negative_entry: return "negative-entry";
    case RayMatrixViolationKind::non_primitive_row: return "non-primitive-row";
    case RayMatrixViolationKind::duplicate_rows: return "duplicate-rows";
    case RayMatrixViolationKind::zero_column: return "zero-column";
    }
    return "unknown";
}

namespace {

std::string describe(const std::vector<RayMatrixViolation>& vs)
{
    std::ostringstream os;
    os << "invalid ray matrix:";
    for (const auto& v : vs)
        os << ' ' << to_string(v.kind) << " (" << v.detail << ");";
    return os.str();
}

} // namespace

RayMatrixError::RayMatrixError(std::vector<RayMatrixViolation> violations)
    : InputError(describe(violations)), violations_(std::move(violations))
{
}

bool RayMatrixError::has(RayMatrixViolationKind kind) const
{
    return std::any_of(violations_.begin(), violations_.end(),
                       [kind](const RayMatrixViolation& v) { return v.kind == kind; });
}

std::vector<RayMatrixViolation> check_ray_matrix(const std::vector<std::vector<Integer>>& raw, std::size_t n)
{
    using K = RayMatrixViolationKind;
    std::vector<RayMatrixViolation> out;
    if (n == 0) {
        out.push_back({K::bad_rank, "n must be positive"});
        return out;
    }
    if (raw.empty()) {
        out.push_back({K::no_rows, "a complete fan needs at least one non-basis ray"});
        return out;
    }
    bool ragged = false;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k].size() != n) {
            out.push_back({K::width_mismatch, "row " + std::to_string(k + 1) + " has "
                                                  + std::to_string(raw[k].size()) + " entries, expected "
                                                  + std::to_string(n)});
            ragged = true;
        }
    }
    if (ragged)
        return out;

    std::set<IntVector> seen;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        IntVector row(raw[k]);
        const std::string where = "row " + std::to_string(k + 1);
        if (row.is_zero()) {
            out.push_back({K::zero_row, where});
        } else {
            if (!row.is_nonnegative())
                out.push_back({K::negative_entry, where});
            if (content(row) != 1)
                out.push_back({K::non_primitive_row, where + " has entry gcd " + content(row).get_str()});
        }
        if (!seen.insert(row).second)
            out.push_back({K::duplicate_rows, where + " repeats an earlier row"});
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = std::all_of(raw.begin(), raw.end(), [j](const auto& r) { return r[j] == 0; });
        if (zero)
            out.push_back({K::zero_column, "column " + std::to_string(j + 1)});
    }
    return out;
}

RayMatrix validate_ray_matrix(const std::vector<std::vector<Integer>>& raw, std::size_t n)
{
    auto violations = check_ray_matrix(raw, n);
    if (!violations.empty())
        throw RayMatrixError(std::move(violations));
    std::vector<IntVector> rows;
    rows.reserve(raw.size());
    for (const auto& r : raw)
        rows.emplace_back(r);
    return RayMatrix(n, std::move(rows));
}

RayMatrix validate_ray_matrix(const std::vector<std::vector<long>>& raw, std::size_t n)
{
    std::vector<std::vector<Integer>> big;
    big.reserve(raw.size());
    for (const auto& r : raw)
        big.emplace_back(r.begin(), r.end());
    return validate_ray_matrix(big, n);
}

RayList make_ray_list(const std::vector<IntVector>& generators, std::size_t n)
{
    if (n == 0)
        throw InputError("lattice rank must be positive");
    RayList rl{n, {}};
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != n)
            throw InputError("ray " + std::to_string(i + 1) + " does not have length " + std::to_string(n));
        IntVector p = primitive_normalize(generators[i]);
        if (!seen.insert(p).second)
            throw InputError("duplicate ray " + to_string(p));
        rl.rays.push_back(std::move(p));
    }
    return rl;
}

namespace {

// Half-plane index for exact angular sorting: 0 for angle in [0, pi), 1 otherwise.
int half(const IntVector& v)
{
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
}

Integer cross(const IntVector& a, const IntVector& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t m)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < m - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Integer binomial(std::size_t m, std::size_t k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

} // namespace

bool is_complete_planar(const RayList& rl)
{
    if (rl.n != 2)
        throw InputError("planar completeness check needs rank 2");
    if (rl.rays.size() < 3)
        return false;
    std::vector<IntVector> sorted = rl.rays;
    std::sort(sorted.begin(), sorted.end(), [](const IntVector& a, const IntVector& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        return cross(a, b) > 0;
    });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& a = sorted[i];
        const auto& b = sorted[(i + 1) % sorted.size()];
        if (cross(a, b) <= 0)
            return false;
    }
    return true;
}

std::optional<Bilateralization> bilateralize(const RayList& rl, const BilateralOptions& options)
{
    const std::size_t n = rl.n;
    const std::size_t m = rl.rays.size();
    for (const auto& r : rl.rays)
        if (r.size() != n)
            throw InputError("ray length does not match rank");
    if (m < n || rank(rl.rays) < n)
        throw InputError("degenerate ray set: rays do not span the lattice");
    if (n == 2 && options.check_planar_completeness && !is_complete_planar(rl))
        throw InputError("incomplete fan: the rays leave an angular gap of at least pi");
    if (binomial(m, n) > Integer(std::to_string(options.max_subsets)))
        throw DomainError("bilateral search would examine C(" + std::to_string(m) + "," + std::to_string(n)
                          + ") subsets, above the cap of " + std::to_string(options.max_subsets));
    if (m == n)
        throw InputError("incomplete fan: n rays cannot form a complete fan");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<IntVector> vs;
        for (auto i : idx)
            vs.push_back(rl.rays[i]);
        if (!is_unimodular_basis(vs))
            continue;
        Basis basis(std::move(vs));
        std::vector<bool> in_basis(m, false);
        for (auto i : idx)
            in_basis[i] = true;

        std::vector<std::vector<Integer>> rows;
        std::vector<std::size_t> order(idx.begin(), idx.end());
        bool ok = true;
        for (std::size_t l = 0; l < m && ok; ++l) {
            if (in_basis[l])
                continue;
            IntVector c = coords_in_basis(rl.rays[l], basis);
            if (!c.is_nonpositive()) {
                ok = false;
                break;
            }
            rows.push_back((-c).coords());
            order.push_back(l);
        }
        if (!ok)
            continue;
        auto violations = check_ray_matrix(rows, n);
        if (!violations.empty()) {
            // Rows are automatically nonzero, primitive and distinct here, so
            // only a zero column can appear: all rays then lie in a half-space.
            throw InputError("incomplete fan: every ray lies in a closed half-space");
        }
        return Bilateralization{idx, std::move(order), validate_ray_matrix(rows, n)};
    } while (next_combination(idx, m));
    return std::nullopt;
}

bool verify_bilateralization(const RayList& rl, const Bilateralization& b)
{
    const std::size_t n = rl.n;
    const std::size_t m = rl.rays.size();
    if (b.basis_indices.size() != n || b.permutation.size() != m || b.matrix.n() != n || b.matrix.m() != m)
        return false;
    std::vector<std::size_t> sorted = b.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < m; ++i)
        if (sorted[i] != i)
            return false;
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < n; ++i) {
        if (b.permutation[i] != b.basis_indices[i])
            return false;
        vs.push_back(rl.rays[b.basis_indices[i]]);
    }
    if (!is_unimodular_basis(vs))
        return false;
    // p_k = -sum_j a_kj p_j for every non-basis ray.
    for (std::size_t k = n; k < m; ++k) {
        IntVector sum(n);
        for (std::size_t j = 0; j < n; ++j)
            sum += b.matrix.at(k - n, j) * vs[j];
        if (-sum != rl.rays[b.permutation[k]])
            return false;
        if (!b.matrix.row(k - n).is_nonnegative())
            return false;
    }
    return true;
}

RayList rays_of(const RayMatrix& a)
{
    RayList rl{a.n(), {}};
    for (std::size_t l = 0; l < a.m(); ++l)
        rl.rays.push_back(a.ray(l));
    return rl;
}

} // namespace radiant
