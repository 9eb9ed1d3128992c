#include "radiant/liealg.hpp"

#include "radiant/errors.hpp"

#include <map>

namespace radiant {

std::optional<BracketTerm> bracket(const RootSystem& sys, RootId a, RootId b)
{
    const std::size_t i = sys.ray_of(a);
    const std::size_t j = sys.ray_of(b);
    if (i == j)
        return std::nullopt;
    const bool forward = i < j;
    const Integer& d = forward ? sys.pairing(a, j) : sys.pairing(b, i);
    if (d == 0)
        return std::nullopt;
    auto s = sys.sum(a, b);
    if (!s)
        throw InvariantViolation("bracket of " + sys.label(a) + " and " + sys.label(b) + " is not a positive root");
    return BracketTerm{forward ? Integer(-d) : d, *s};
}

std::optional<std::pair<Integer, IntVector>> bracket(const RootSystem& sys, const IntVector& a, const IntVector& b)
{
    auto ia = sys.find(a);
    auto ib = sys.find(b);
    if (!ia || !ib)
        throw InputError("bracket arguments must be positive roots");
    auto t = bracket(sys, *ia, *ib);
    if (!t)
        return std::nullopt;
    return std::make_pair(t->coefficient, sys.root(t->result));
}

BracketTable::BracketTable(const RootSystem& sys) : sys_(&sys)
{
    const std::size_t n = sys.size();
    table_.resize(n * n);
    for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b)
            table_[a * n + b] = bracket(sys, a, b);
}

namespace {

using Combination = std::map<RootId, Integer>;

void add_scaled(Combination& acc, const Combination& x, const Integer& s)
{
    for (const auto& [id, c] : x) {
        Integer& slot = acc[id];
        slot += s * c;
        if (slot == 0)
            acc.erase(id);
    }
}

Combination bracket_with(const BracketTable& t, const Combination& x, RootId b)
{
    Combination out;
    for (const auto& [id, c] : x) {
        const auto& term = t.at(id, b);
        if (term)
            add_scaled(out, Combination{{term->result, term->coefficient}}, c);
    }
    return out;
}

Combination basis(RootId id) { return Combination{{id, 1}}; }

} // namespace

std::optional<std::array<RootId, 3>> jacobi_violation(const BracketTable& table, const RootSet& m)
{
    const auto ids = m.ids();
    for (auto a : ids)
        for (auto b : ids)
            for (auto c : ids) {
                Combination sum;
                add_scaled(sum, bracket_with(table, bracket_with(table, basis(a), b), c), 1);
                add_scaled(sum, bracket_with(table, bracket_with(table, basis(b), c), a), 1);
                add_scaled(sum, bracket_with(table, bracket_with(table, basis(c), a), b), 1);
                if (!sum.empty())
                    return std::array<RootId, 3>{a, b, c};
            }
    return std::nullopt;
}

std::optional<std::array<RootId, 3>> closure_violation(const BracketTable& table, const RootSet& m)
{
    const auto ids = m.ids();
    for (auto a : ids)
        for (auto b : ids) {
            const auto& t = table.at(a, b);
            if (t && !m.contains(t->result))
                return std::array<RootId, 3>{a, b, t->result};
        }
    return std::nullopt;
}

namespace {

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            mpq_class f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

LieCenter lie_center(const BracketTable& table, const RootSet& m)
{
    const auto ids = m.ids();
    LieCenter out{RootSet(m.universe()), 0};
    for (auto e : ids) {
        bool central = true;
        for (auto f : ids)
            if (table.at(e, f)) {
                central = false;
                break;
            }
        if (central)
            out.center.insert(e);
    }
    // Unknown c_e per root e; one equation per (f, result) pair, collecting
    // the coefficient of d_result in [sum c_e d_e, d_f].
    std::map<std::pair<RootId, RootId>, std::vector<mpq_class>> eqs;
    for (std::size_t col = 0; col < ids.size(); ++col)
        for (auto f : ids) {
            const auto& t = table.at(ids[col], f);
            if (!t)
                continue;
            auto& row = eqs[{f, t->result}];
            row.resize(ids.size());
            row[col] += mpq_class(t->coefficient);
        }
    std::vector<std::vector<mpq_class>> rows;
    for (auto& [key, row] : eqs)
        rows.push_back(std::move(row));
    out.kernel_dimension = ids.size() - rational_rank(std::move(rows), ids.size());
    return out;
}

LieSeries lie_series(const BracketTable& table, const RootSet& m)
{
    if (closure_violation(table, m))
        throw InputError("root set is not closed under brackets");
    const auto ids = m.ids();
    const std::size_t universe = m.universe();
    LieSeries s;

    auto brackets_of = [&](const RootSet& left, const RootSet& right) {
        RootSet out(universe);
        for (auto a : left.ids())
            for (auto b : right.ids())
                if (const auto& t = table.at(a, b))
                    out.insert(t->result);
        return out;
    };

    s.lower.push_back(m);
    while (!s.lower.back().empty()) {
        RootSet next = brackets_of(m, s.lower.back());
        if (next == s.lower.back())
            throw InvariantViolation("lower central series does not terminate");
        s.lower.push_back(std::move(next));
    }

    s.upper.push_back(RootSet(universe));
    while (s.upper.back() != m) {
        const RootSet& z = s.upper.back();
        RootSet next(universe);
        for (auto e : ids) {
            bool ok = true;
            for (auto f : ids) {
                const auto& t = table.at(e, f);
                if (t && !z.contains(t->result)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                next.insert(e);
        }
        if (next == z)
            throw InvariantViolation("upper central series does not terminate");
        s.upper.push_back(std::move(next));
    }

    s.derived.push_back(m);
    while (!s.derived.back().empty()) {
        RootSet next = brackets_of(s.derived.back(), s.derived.back());
        if (next == s.derived.back())
            throw InvariantViolation("derived series does not terminate");
        s.derived.push_back(std::move(next));
    }
    return s;
}

} // namespace radiant
