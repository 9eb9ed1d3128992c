#include "radiant/roots.hpp"

#include <algorithm>
#include <sstream>

namespace radiant {

std::string to_string(RootKind kind)
{
    switch (kind) {
    case RootKind::basic: return "basic";
    case RootKind::elementary: return "elementary";
    case RootKind::special: return "special";
    case RootKind::detached: return "detached";
    }
    return "unknown";
}

std::string to_string(RootParity parity)
{
    return parity == RootParity::semisimple ? "semisimple" : "unipotent";
}

Integer pairing(const IntVector& e, std::size_t l, const RayMatrix& a)
{
    if (l < a.n())
        return e[l];
    return -dot(a.row(l - a.n()), e);
}

std::optional<std::size_t> root_ray(const IntVector& e, const RayMatrix& a)
{
    std::optional<std::size_t> ray;
    for (std::size_t l = 0; l < a.m(); ++l) {
        Integer p = pairing(e, l, a);
        if (p == -1 && !ray)
            ray = l;
        else if (p < 0)
            return std::nullopt;
    }
    return ray;
}

ColumnPreorder column_preorder(const RayMatrix& a)
{
    const std::size_t n = a.n();
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(a.column(j));
    ColumnPreorder po;
    po.geq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            po.geq[i][j] = cols[i].dominates(cols[j]);
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (placed[i])
            continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = i; j < n; ++j) {
            if (!placed[j] && po.equivalent(i, j)) {
                cls.push_back(j);
                placed[j] = true;
            }
        }
        po.classes.push_back(std::move(cls));
    }
    return po;
}

bool satisfies_segment_condition(const RayMatrix& a)
{
    const auto po = column_preorder(a);
    const std::size_t n = a.n();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (po.strictly_above(j, i))
                return false;
            if (po.equivalent(i, j))
                for (std::size_t k = i + 1; k < j; ++k)
                    if (!po.equivalent(i, k))
                        return false;
        }
    }
    return true;
}

CanonicalForm canonical_reorder(const RayMatrix& a)
{
    const auto po = column_preorder(a);
    const std::size_t r = po.classes.size();
    std::vector<bool> done(r, false);
    std::vector<std::size_t> perm;
    std::vector<std::size_t> cuts{0};
    for (std::size_t step = 0; step < r; ++step) {
        // Classes are ordered by smallest member, so the first undominated
        // class found is the tie-break winner.
        std::size_t pick = r;
        for (std::size_t s = 0; s < r && pick == r; ++s) {
            if (done[s])
                continue;
            bool dominated = false;
            for (std::size_t t = 0; t < r && !dominated; ++t)
                if (!done[t] && t != s && po.strictly_above(po.classes[t][0], po.classes[s][0]))
                    dominated = true;
            if (!dominated)
                pick = s;
        }
        if (pick == r)
            throw InvariantViolation("column preorder has a cycle");
        done[pick] = true;
        perm.insert(perm.end(), po.classes[pick].begin(), po.classes[pick].end());
        cuts.push_back(perm.size());
    }
    return CanonicalForm{perm, a.permute_columns(perm), std::move(cuts)};
}

namespace {

// Appends every e = -q_i + sum_{j != i} b_j q_j with v_i - sum b_j v_j >= 0.
void collect_ray_roots(const RayMatrix& a, std::size_t i, std::size_t j, IntVector& e,
                       std::vector<Integer>& residual, std::vector<IntVector>& out)
{
    const std::size_t n = a.n();
    if (j == n) {
        out.push_back(e);
        return;
    }
    if (j == i) {
        collect_ray_roots(a, i, j + 1, e, residual, out);
        return;
    }
    Integer bound = -1;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const Integer& c = a.at(k, j);
        if (c > 0) {
            Integer q = residual[k] / c;
            if (bound < 0 || q < bound)
                bound = q;
        }
    }
    for (Integer b = 0; b <= bound; ++b) {
        e[j] = b;
        collect_ray_roots(a, i, j + 1, e, residual, out);
        for (std::size_t k = 0; k < a.rows(); ++k)
            residual[k] -= a.at(k, j);
    }
    for (std::size_t k = 0; k < a.rows(); ++k)
        residual[k] += (bound + 1) * a.at(k, j);
    e[j] = 0;
}

RootKind classify(const IntVector& e, std::size_t ray, std::size_t n)
{
    if (ray >= n)
        return RootKind::detached;
    std::size_t nonzero = 0;
    bool unit_rest = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == ray || e[j] == 0)
            continue;
        ++nonzero;
        if (e[j] != 1)
            unit_rest = false;
    }
    if (nonzero == 0)
        return RootKind::basic;
    if (nonzero == 1 && unit_rest)
        return RootKind::elementary;
    return RootKind::special;
}

} // namespace

RootSystemReport demazure_roots(const RayMatrix& a)
{
    const std::size_t n = a.n();
    RootSystemReport rep;
    rep.per_ray.assign(a.m(), {});
    rep.positive.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = -1;
        std::vector<Integer> residual = a.column(i).coords();
        collect_ray_roots(a, i, 0, e, residual, rep.per_ray[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IntVector col = a.column(i);
        if (col.size() > 0 && std::count(col.begin(), col.end(), 0) == static_cast<long>(col.size() - 1)) {
            auto k = static_cast<std::size_t>(std::find(col.begin(), col.end(), 1) - col.begin());
            if (k < col.size())
                rep.per_ray[n + k].push_back(IntVector::unit(n, i));
        }
    }
    for (std::size_t l = 0; l < a.m(); ++l) {
        auto& list = rep.per_ray[l];
        std::sort(list.begin(), list.end());
        for (const auto& e : list) {
            if (root_ray(e, a) != l)
                throw InvariantViolation("enumerated vector " + to_string(e) + " is not a root of ray "
                                         + std::to_string(l + 1));
            DemazureRoot r;
            r.e = e;
            r.ray = l;
            r.kind = classify(e, l, n);
            r.parity = root_ray(-e, a) ? RootParity::semisimple : RootParity::unipotent;
            rep.all_roots.push_back(std::move(r));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& e : rep.per_ray[i])
            if (std::all_of(e.begin(), e.begin() + static_cast<long>(i), [](const Integer& x) { return x == 0; }))
                rep.positive[i].push_back(e);
    return rep;
}

std::vector<std::vector<IntVector>> positive_roots(const RayMatrix& a)
{
    if (!satisfies_segment_condition(a))
        throw InputError("ray matrix columns are not in canonical segment order");
    return demazure_roots(a).positive;
}

RootSet::RootSet(std::size_t universe, const std::vector<RootId>& ids) : bits_(universe, false)
{
    for (auto id : ids) {
        if (id >= universe)
            throw InputError("root id out of range");
        bits_[id] = true;
    }
}

std::size_t RootSet::size() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<RootId> RootSet::ids() const
{
    std::vector<RootId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            out.push_back(i);
    return out;
}

bool RootSet::subset_of(const RootSet& other) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i])
            return false;
    return true;
}

bool operator<(const RootSet& a, const RootSet& b)
{
    const auto sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    const auto ia = a.ids(), ib = b.ids();
    return ia < ib;
}

RootSystem RootSystem::from_matrix(const RayMatrix& a)
{
    auto cf = canonical_reorder(a);
    return RootSystem(cf.matrix, std::move(cf.permutation));
}

RootSystem::RootSystem(const RayMatrix& canonical) : RootSystem(canonical, {})
{
}

RootSystem::RootSystem(const RayMatrix& canonical, std::vector<std::size_t> permutation)
    : matrix_(canonical), permutation_(std::move(permutation))
{
    if (!satisfies_segment_condition(matrix_))
        throw InputError("ray matrix columns are not in canonical segment order");
    const std::size_t n = matrix_.n();
    if (permutation_.empty())
        for (std::size_t i = 0; i < n; ++i)
            permutation_.push_back(i);
    preorder_ = column_preorder(matrix_);
    cuts_.push_back(0);
    for (const auto& cls : preorder_.classes)
        cuts_.push_back(cuts_.back() + cls.size());
    report_ = demazure_roots(matrix_);

    by_ray_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : report_.positive[i]) {
            const RootId id = roots_.size();
            roots_.push_back(e);
            ray_.push_back(i);
            by_ray_[i].push_back(id);
            index_.emplace(e, id);
            semisimple_.push_back(root_ray(-e, matrix_).has_value());
            std::vector<Integer> ps;
            for (std::size_t l = 0; l < matrix_.m(); ++l)
                ps.push_back(radiant::pairing(e, l, matrix_));
            pairings_.push_back(std::move(ps));
        }
        if (by_ray_[i].empty() || roots_[by_ray_[i].front()] != -IntVector::unit(n, i))
            throw InvariantViolation("basic root missing from its ray");
    }
    const std::size_t N = roots_.size();
    sums_.assign(N * N, std::nullopt);
    for (RootId x = 0; x < N; ++x)
        for (RootId y = 0; y < N; ++y)
            sums_[x * N + y] = find(roots_[x] + roots_[y]);
}

std::optional<RootId> RootSystem::find(const IntVector& e) const
{
    auto it = index_.find(e);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

RootSet RootSystem::full() const
{
    RootSet s(size());
    for (RootId id = 0; id < size(); ++id)
        s.insert(id);
    return s;
}

RootSet RootSystem::basics() const
{
    RootSet s(size());
    for (std::size_t i = 0; i < n(); ++i)
        s.insert(basic(i));
    return s;
}

RootSet RootSystem::make_set(const std::vector<IntVector>& roots) const
{
    RootSet s(size());
    for (const auto& e : roots) {
        auto id = find(e);
        if (!id)
            throw InputError(to_string(e) + " is not a positive root");
        s.insert(*id);
    }
    return s;
}

std::string RootSystem::label(RootId id) const
{
    return root_label(roots_[id]);
}

std::string root_label(const IntVector& e)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
        const Integer& c = e[j];
        if (c == 0)
            continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (abs(c) != 1)
            os << Integer(abs(c)).get_str();
        os << 'q' << (j + 1);
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

} // namespace radiant
