#include "radiant/groups.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace radiant {

SaturationCheck is_saturated(const RootSystem& sys, const RootSet& m)
{
    if (m.universe() != sys.size())
        throw InputError("root set does not belong to this root system");
    const auto ids = m.ids();
    for (auto a : ids)
        for (auto b : ids) {
            if (sys.ray_of(b) <= sys.ray_of(a))
                continue;
            auto s = sys.sum(a, b);
            if (s && !m.contains(*s))
                return SaturationCheck{false, std::array<RootId, 3>{a, b, *s}};
        }
    return {};
}

RootSet saturation_closure(const RootSystem& sys, RootSet m)
{
    for (;;) {
        auto check = is_saturated(sys, m);
        if (check.saturated)
            return m;
        m.insert((*check.witness)[2]);
    }
}

bool has_open_orbit(const RootSystem& sys, const RootSet& m)
{
    for (std::size_t i = 0; i < sys.n(); ++i)
        if (!m.contains(sys.basic(i)))
            return false;
    return true;
}

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t cap, EnumerationResult partial)
    : DomainError("enumeration stopped after " + std::to_string(cap) + " subgroups (result cap reached)"),
      partial_(std::move(partial))
{
}

namespace {

class Enumerator {
public:
    struct CapReached {};

    Enumerator(const RootSystem& sys, std::size_t cap) : sys_(sys), cap_(cap) {}

    void run() { level(sys_.n(), RootSet(sys_.size())); }
    std::vector<RootSet>& found() { return found_; }

private:
    // Chooses M_{i-1} given the union w of the sets already chosen above it.
    void level(std::size_t i, const RootSet& w)
    {
        if (i == 0) {
            if (found_.size() == cap_)
                throw CapReached{};
            found_.push_back(w);
            return;
        }
        const auto& ray = sys_.on_ray(i - 1);
        const std::size_t k = ray.size();
        // reach[x][y]: y = x + (sum of roots of w), within this ray.
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (std::size_t x = 0; x < k; ++x) {
            reach[x][x] = true;
            for (auto b : w.ids())
                if (auto s = sys_.sum(ray[x], b))
                    for (std::size_t y = 0; y < k; ++y)
                        if (ray[y] == *s)
                            reach[x][y] = true;
        }
        for (std::size_t z = 0; z < k; ++z)
            for (std::size_t x = 0; x < k; ++x)
                if (reach[x][z])
                    for (std::size_t y = 0; y < k; ++y)
                        if (reach[z][y])
                            reach[x][y] = true;

        std::vector<int> state(k, 0); // 1 included, -1 excluded
        for (std::size_t y = 0; y < k; ++y)
            if (reach[0][y])
                state[y] = 1;
        branch(i, w, ray, reach, state);
    }

    void branch(std::size_t i, const RootSet& w, const std::vector<RootId>& ray,
                const std::vector<std::vector<bool>>& reach, std::vector<int>& state)
    {
        const std::size_t k = ray.size();
        std::size_t x = 0;
        while (x < k && state[x] != 0)
            ++x;
        if (x == k) {
            RootSet next = w;
            for (std::size_t y = 0; y < k; ++y)
                if (state[y] == 1)
                    next.insert(ray[y]);
            level(i - 1, next);
            return;
        }
        std::vector<int> saved = state;
        for (std::size_t y = 0; y < k; ++y)
            if (reach[x][y])
                state[y] = 1;
        branch(i, w, ray, reach, state);
        state = saved;
        for (std::size_t y = 0; y < k; ++y)
            if (reach[y][x])
                state[y] = -1;
        branch(i, w, ray, reach, state);
        state = saved;
    }

    const RootSystem& sys_;
    std::size_t cap_;
    std::vector<RootSet> found_;
};

EnumerationResult finish(std::vector<RootSet> sets)
{
    EnumerationResult r;
    std::sort(sets.begin(), sets.end());
    for (const auto& s : sets)
        ++r.histogram[s.size()];
    r.subgroups = std::move(sets);
    return r;
}

} // namespace

EnumerationResult enumerate_open_orbit_subgroups(const RootSystem& sys, const EnumerationOptions& options)
{
    Enumerator e(sys, options.max_results);
    try {
        e.run();
    } catch (const Enumerator::CapReached&) {
        throw EnumerationCapExceeded(options.max_results, finish(std::move(e.found())));
    }
    return finish(std::move(e.found()));
}

GroupShape GroupShape::trivial() { return GroupShape{}; }

GroupShape GroupShape::abelian(std::size_t d)
{
    if (d == 0)
        return trivial();
    GroupShape g;
    g.kind_ = Kind::abelian;
    g.k_ = d;
    return g;
}

GroupShape GroupShape::block(std::size_t k, std::size_t l)
{
    if (l == 0 || l >= k)
        throw InputError("U_{k,l} needs k > l >= 1");
    if (l == 1)
        return abelian(k - 1);
    GroupShape g;
    g.kind_ = Kind::block;
    g.k_ = k;
    g.l_ = l;
    return g;
}

GroupShape GroupShape::unitriangular(std::size_t k)
{
    if (k <= 1)
        return trivial();
    return block(k, k - 1);
}

GroupShape GroupShape::semidirect(GroupShape acting, GroupShape normal)
{
    if (acting.kind_ == Kind::trivial)
        return normal;
    if (normal.kind_ == Kind::trivial)
        return acting;
    GroupShape g;
    g.kind_ = Kind::semidirect;
    g.factors_ = {std::move(acting), std::move(normal)};
    return g;
}

GroupShape GroupShape::direct(std::vector<GroupShape> factors)
{
    GroupShape g;
    g.kind_ = Kind::direct;
    g.factors_ = std::move(factors);
    return g;
}

std::size_t GroupShape::dimension() const
{
    switch (kind_) {
    case Kind::trivial: return 0;
    case Kind::abelian: return k_;
    case Kind::block: return l_ * k_ - l_ * (l_ + 1) / 2;
    case Kind::semidirect:
    case Kind::direct: {
        std::size_t d = 0;
        for (const auto& f : factors_)
            d += f.dimension();
        return d;
    }
    }
    return 0;
}

bool GroupShape::is_block(std::size_t k, std::size_t l) const
{
    if (l == 0 || l >= k)
        return false;
    return *this == block(k, l);
}

std::string GroupShape::to_string() const
{
    auto wrapped = [](const GroupShape& g) {
        const bool compound = g.kind_ == Kind::semidirect || g.kind_ == Kind::direct;
        return compound ? "(" + g.to_string() + ")" : g.to_string();
    };
    switch (kind_) {
    case Kind::trivial: return "1";
    case Kind::abelian: return k_ == 1 ? "G_a" : "G_a^" + std::to_string(k_);
    case Kind::block:
        if (l_ + 1 == k_)
            return "U_" + std::to_string(k_);
        return "U_{" + std::to_string(k_) + "," + std::to_string(l_) + "}";
    case Kind::semidirect: return wrapped(factors_[0]) + " ⋉ " + wrapped(factors_[1]);
    case Kind::direct: {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                s += " x ";
            const auto& f = factors_[i];
            s += f.kind_ == Kind::trivial ? "U_1" : (f.kind_ == Kind::abelian && f.k_ == 1 ? "U_2" : wrapped(f));
        }
        return s;
    }
    }
    return "?";
}

namespace {

GroupShape nest(std::vector<GroupShape> parts)
{
    // parts[s] belongs to class s; the last class acts outermost.
    GroupShape g = parts.back();
    for (std::size_t s = parts.size() - 1; s-- > 0;)
        g = GroupShape::semidirect(std::move(g), std::move(parts[s]));
    return g;
}

} // namespace

UmaxShape umax_shape(const RootSystem& sys)
{
    const auto& cuts = sys.cuts();
    UmaxShape out;
    std::vector<GroupShape> parts;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const std::size_t first = cuts[s];
        const std::size_t k = sys.on_ray(first).size() + 1;
        const std::size_t l = cuts[s + 1] - cuts[s];
        GroupShape block = GroupShape::block(k, l);
        std::size_t roots = 0;
        for (std::size_t i = cuts[s]; i < cuts[s + 1]; ++i)
            roots += sys.on_ray(i).size();
        if (block.dimension() != roots)
            throw InvariantViolation("class block dimension differs from its number of positive roots");
        out.k.push_back(k);
        out.l.push_back(l);
        parts.push_back(std::move(block));
    }
    out.shape = nest(std::move(parts));
    std::vector<GroupShape> rays;
    for (std::size_t i = 0; i < sys.n(); ++i)
        rays.push_back(GroupShape::abelian(sys.on_ray(i).size()));
    out.per_ray = nest(std::move(rays));
    return out;
}

UssShape uss_shape(const RootSystem& sys)
{
    const auto& cuts = sys.cuts();
    const auto& rep = sys.report();
    const auto umax = umax_shape(sys);
    UssShape out;
    out.roots = RootSet(sys.size());
    for (RootId id = 0; id < sys.size(); ++id)
        if (sys.is_semisimple(id))
            out.roots.insert(id);
    std::size_t dim = 0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        bool all_semisimple = true;
        for (std::size_t i = cuts[s]; i < cuts[s + 1]; ++i)
            for (const auto& e : rep.per_ray[i])
                if (!root_ray(-e, sys.matrix()))
                    all_semisimple = false;
        GroupShape c = GroupShape::unitriangular(all_semisimple ? umax.k[s] : umax.l[s]);
        const std::size_t size = cuts[s + 1] - cuts[s];
        const bool basic_semisimple = sys.is_semisimple(sys.basic(cuts[s]));
        if (size >= 2 || basic_semisimple)
            ++out.simple_components;
        if ((c.kind() != GroupShape::Kind::trivial) != (size >= 2 || basic_semisimple))
            throw InvariantViolation("simple component count disagrees with the class components");
        dim += c.dimension();
        out.components.push_back(std::move(c));
    }
    if (dim != out.roots.size())
        throw InvariantViolation("U_ss dimension differs from the number of semisimple positive roots");
    out.shape = GroupShape::direct(out.components);
    return out;
}

std::vector<std::size_t> maximal_class_minima(const RootSystem& sys)
{
    const auto& po = sys.preorder();
    std::vector<std::size_t> out;
    for (const auto& cls : po.classes) {
        bool maximal = true;
        for (const auto& other : po.classes)
            if (po.strictly_above(other[0], cls[0]))
                maximal = false;
        if (maximal)
            out.push_back(cls[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CenterReport center(const RootSystem& sys, const RootSet& m)
{
    if (!has_open_orbit(sys, m))
        throw DomainError("center formula needs a subgroup with an open orbit; use lie_center for other root sets");
    CenterReport out{{}, RootSet(sys.size())};
    const auto ids = m.ids();
    for (std::size_t i = 0; i < sys.n(); ++i) {
        bool central = std::all_of(ids.begin(), ids.end(), [&](RootId e) { return sys.pairing(e, i) <= 0; });
        if (central) {
            out.indices.push_back(i);
            out.roots.insert(sys.basic(i));
        }
    }
    if (m == sys.full() && out.indices != maximal_class_minima(sys))
        throw InvariantViolation("center of U_max differs from the minima of the maximal classes");
    return out;
}

RootGraph::RootGraph(const RootSystem& sys, const RootSet& m) : vertices_(m)
{
    const std::size_t u = sys.size();
    out_.assign(u, {});
    const auto ids = m.ids();
    for (auto a : ids)
        for (auto e : ids)
            if (auto b = sys.sum(a, e); b && m.contains(*b)) {
                out_[a].push_back(arrows_.size());
                arrows_.push_back(Arrow{a, *b, e, sys.ray_of(a) == sys.ray_of(*b)});
            }

    // Depth-first topological order; meeting a vertex still on the stack means a cycle.
    std::vector<int> mark(u, 0);
    std::vector<RootId> topo;
    std::function<void(RootId)> visit = [&](RootId v) {
        if (mark[v] == 1)
            throw InvariantViolation("root graph has a cycle");
        if (mark[v] == 2)
            return;
        mark[v] = 1;
        for (auto ai : out_[v])
            visit(arrows_[ai].to);
        mark[v] = 2;
        topo.push_back(v);
    };
    for (auto v : ids)
        visit(v);
    std::reverse(topo.begin(), topo.end());

    ending_.assign(u, 0);
    inner_ending_.assign(u, 0);
    starting_.assign(u, 0);
    for (auto v : topo)
        for (auto ai : out_[v]) {
            const auto& a = arrows_[ai];
            ending_[a.to] = std::max(ending_[a.to], ending_[v] + 1);
            if (a.inner)
                inner_ending_[a.to] = std::max(inner_ending_[a.to], inner_ending_[v] + 1);
        }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (auto ai : out_[*it])
            starting_[*it] = std::max(starting_[*it], starting_[arrows_[ai].to] + 1);
}

std::size_t RootGraph::inner_count() const
{
    return static_cast<std::size_t>(
        std::count_if(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.inner; }));
}

std::size_t RootGraph::longest_path() const
{
    std::size_t l = 0;
    for (auto v : vertices_.ids())
        l = std::max(l, ending_[v]);
    return l;
}

RootSet RootGraph::up(std::size_t k) const
{
    RootSet s(vertices_.universe());
    for (auto v : vertices_.ids())
        if (ending_[v] >= k)
            s.insert(v);
    return s;
}

RootSet RootGraph::down(std::size_t k) const
{
    RootSet s(vertices_.universe());
    for (auto v : vertices_.ids())
        if (starting_[v] < k)
            s.insert(v);
    return s;
}

bool RootGraph::has_arrow(RootId a, RootId b) const
{
    if (a >= out_.size())
        return false;
    return std::any_of(out_[a].begin(), out_[a].end(), [&](std::size_t ai) { return arrows_[ai].to == b; });
}

SeriesReport series_report(const RootSystem& sys, const RootSet& m)
{
    if (!is_saturated(sys, m).saturated)
        throw InputError("series need a saturated root set");
    SeriesReport r;
    RootGraph g(sys, m);
    r.longest_path = g.longest_path();
    r.nilpotency_class = r.longest_path + 1;
    for (std::size_t k = 0; k <= r.longest_path + 1; ++k) {
        r.lower.push_back(g.up(k));
        r.upper.push_back(g.down(k));
    }
    r.derived.push_back(m);
    while (!r.derived.back().empty()) {
        RootGraph h(sys, r.derived.back());
        r.derived.push_back(h.up(1));
    }
    r.derived_length = r.derived.size() - 1;
    if (has_open_orbit(sys, m))
        r.center_indices = center(sys, m).indices;
    return r;
}

std::string to_string(VarietyType t)
{
    return t == VarietyType::type_I ? "I" : "II";
}

VarietyType variety_type(const RootSystem& sys)
{
    return RootGraph(sys, sys.full()).arrows().empty() ? VarietyType::type_I : VarietyType::type_II;
}

ProjectiveLineSplit split_projective_lines(const RootSystem& sys)
{
    if (variety_type(sys) != VarietyType::type_I)
        throw DomainError("splitting off P^1 factors needs a Type I variety");
    const RayMatrix& a = sys.matrix();
    ProjectiveLineSplit out;
    std::vector<bool> drop_row(a.rows(), false), drop_col(a.n(), false);
    for (std::size_t i = 0; i < a.n(); ++i) {
        const IntVector col = a.column(i);
        std::size_t nonzero = 0, at = 0;
        for (std::size_t k = 0; k < col.size(); ++k)
            if (col[k] != 0) {
                ++nonzero;
                at = k;
            }
        if (nonzero != 1 || col[at] != 1)
            continue;
        const IntVector& row = a.row(at);
        if (std::count_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; }) != 1)
            continue;
        out.columns.push_back(i);
        drop_col[i] = true;
        drop_row[at] = true;
    }
    out.b = out.columns.size();
    if (out.b == a.n())
        return out;
    std::vector<std::vector<Integer>> rows;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (drop_row[k])
            continue;
        std::vector<Integer> r;
        for (std::size_t j = 0; j < a.n(); ++j)
            if (!drop_col[j])
                r.push_back(a.at(k, j));
        rows.push_back(std::move(r));
    }
    out.remainder = validate_ray_matrix(rows, a.n() - out.b);
    return out;
}

} // namespace radiant
