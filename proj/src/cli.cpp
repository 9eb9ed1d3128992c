#include "radiant/cli.hpp"

#include "radiant/coxaction.hpp"
#include "radiant/errors.hpp"
#include "radiant/liealg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace radiant::cli {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int schema_version = 1;

Integer parse_integer(const std::string& token)
{
    std::string t = token;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    Integer v;
    if (t.empty() || v.set_str(t, 10) != 0)
        throw InputError("not an integer: '" + token + "'");
    return v;
}

std::vector<std::string> tokens(const std::string& text, const std::string& separators)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (separators.find(ch) != std::string::npos) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

} // namespace

std::vector<std::vector<Integer>> parse_rows(const std::string& text)
{
    std::vector<std::vector<Integer>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos)
            end = text.size();
        std::vector<Integer> row;
        for (const auto& t : tokens(text.substr(start, end - start), " \t,"))
            row.push_back(parse_integer(t));
        if (row.empty())
            throw InputError("empty row in '" + text + "'");
        rows.push_back(std::move(row));
        start = end + 1;
    }
    return rows;
}

SurfaceSequence parse_sequence(const std::string& text)
{
    SurfaceSequence seq;
    for (const auto& t : tokens(text, " \t,")) {
        long v = 0;
        const char* first = t.data() + (t[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size())
            throw InputError("not a sequence entry: '" + t + "'");
        seq.push_back(v);
    }
    if (seq.empty())
        throw InputError("empty sequence");
    return seq;
}

std::string emit_dot(const RootSystem& sys, const RootGraph& graph)
{
    std::ostringstream os;
    os << "digraph roots {\n  node [shape=box];\n";
    for (RootId v : graph.vertices().ids())
        os << "  r" << v << " [label=\"" << to_string(sys.root(v)) << "\"];\n";
    for (const auto& a : graph.arrows())
        os << "  r" << a.from << " -> r" << a.to << " [style=" << (a.inner ? "dashed" : "dotted") << "];\n";
    os << "}\n";
    return os.str();
}

namespace {

struct Options {
    std::optional<std::string> ray_matrix;
    std::optional<std::string> rays;
    std::optional<std::string> sequence;
    std::optional<std::string> input;
    std::string format = "json";
    std::size_t max_results = EnumerationOptions{}.max_results;
    std::optional<long> max_q;
    std::optional<std::size_t> max_m;
    bool histogram = false;
};

struct FanInput {
    std::optional<std::vector<std::vector<Integer>>> ray_matrix;
    std::optional<std::vector<std::vector<Integer>>> rays;
    std::optional<std::size_t> n;
    std::optional<SurfaceSequence> sequence;
};

ordered integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

ordered vector_json(const IntVector& v)
{
    ordered a = ordered::array();
    for (const auto& c : v)
        a.push_back(integer_json(c));
    return a;
}

ordered matrix_json(const RayMatrix& a)
{
    ordered rows = ordered::array();
    for (const auto& r : a.row_vectors())
        rows.push_back(vector_json(r));
    return rows;
}

ordered one_based(const std::vector<std::size_t>& v)
{
    ordered a = ordered::array();
    for (auto x : v)
        a.push_back(x + 1);
    return a;
}

ordered labels(const RootSystem& sys, const RootSet& s)
{
    ordered a = ordered::array();
    for (RootId id : s.ids())
        a.push_back(sys.label(id));
    return a;
}

std::vector<std::vector<Integer>> json_rows(const json& j, const char* key)
{
    if (!j.is_array())
        throw InputError(std::string("'") + key + "' must be an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw InputError(std::string("'") + key + "' rows must be arrays");
        std::vector<Integer> row;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                throw InputError(std::string("'") + key + "' entries must be integers");
            row.push_back(x.is_number_unsigned() ? Integer(std::to_string(x.get<std::uint64_t>()))
                                                 : Integer(std::to_string(x.get<std::int64_t>())));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FanInput read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("input file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("input document must be a JSON object");
    FanInput fi;
    int sources = 0;
    for (const auto& [key, value] : doc.items()) {
        if (key == "n") {
            if (!value.is_number_integer() || value.get<long long>() <= 0)
                throw InputError("'n' must be a positive integer");
            fi.n = value.get<std::size_t>();
        } else if (key == "ray_matrix") {
            fi.ray_matrix = json_rows(value, "ray_matrix");
            ++sources;
        } else if (key == "rays") {
            fi.rays = json_rows(value, "rays");
            ++sources;
        } else if (key == "sequence") {
            if (!value.is_array())
                throw InputError("'sequence' must be an array of integers");
            SurfaceSequence s;
            for (const auto& x : value) {
                if (!x.is_number_integer())
                    throw InputError("'sequence' entries must be integers");
                s.push_back(x.get<long>());
            }
            fi.sequence = std::move(s);
            ++sources;
        } else if (key != "schema_version") {
            throw InputError("unknown input key '" + key + "'");
        }
    }
    if (sources != 1)
        throw InputError("input document needs exactly one of 'ray_matrix', 'rays', 'sequence'");
    if ((fi.ray_matrix || fi.rays) && !fi.n)
        throw InputError("input document needs 'n' alongside its rows");
    return fi;
}

FanInput read_input(const Options& o)
{
    const int sources = (o.ray_matrix ? 1 : 0) + (o.rays ? 1 : 0) + (o.sequence ? 1 : 0) + (o.input ? 1 : 0);
    if (sources != 1)
        throw InputError("give exactly one of --ray-matrix, --rays, --sequence, --input");
    if (o.input)
        return read_document(*o.input);
    FanInput fi;
    if (o.ray_matrix) {
        fi.ray_matrix = parse_rows(*o.ray_matrix);
        fi.n = fi.ray_matrix->front().size();
    } else if (o.rays) {
        fi.rays = parse_rows(*o.rays);
        fi.n = fi.rays->front().size();
    } else {
        fi.sequence = parse_sequence(*o.sequence);
    }
    return fi;
}

RayList ray_list_of(const FanInput& fi)
{
    if (fi.sequence)
        return sequence_to_rays(*fi.sequence);
    if (fi.ray_matrix)
        return rays_of(validate_ray_matrix(*fi.ray_matrix, *fi.n));
    std::vector<IntVector> gens;
    for (const auto& r : *fi.rays) {
        if (r.size() != *fi.n)
            throw InputError("every ray needs " + std::to_string(*fi.n) + " coordinates");
        gens.emplace_back(r);
    }
    return make_ray_list(gens, *fi.n);
}

struct Analysis {
    RootSystem sys;
    ordered context;
};

// Root system of the input together with the coordinate bookkeeping every
// report carries.
Analysis analyse(const FanInput& fi)
{
    ordered ctx = ordered::object();
    std::optional<RayMatrix> a;
    if (fi.ray_matrix) {
        a = validate_ray_matrix(*fi.ray_matrix, *fi.n);
    } else {
        const RayList rl = ray_list_of(fi);
        auto b = bilateralize(rl);
        if (!b)
            throw DomainError("not radiant: no n rays form a basis with all other rays in its negative orthant");
        ctx["bilateral_basis"] = one_based(b->basis_indices);
        ctx["bilateral_ray_order"] = one_based(b->permutation);
        a = b->matrix;
    }
    RootSystem sys = RootSystem::from_matrix(*a);
    ctx["n"] = sys.n();
    ctx["m"] = sys.m();
    ctx["input_ray_matrix"] = matrix_json(*a);
    ctx["column_permutation"] = one_based(sys.permutation());
    ctx["ray_matrix"] = matrix_json(sys.matrix());
    ordered classes = ordered::array();
    for (std::size_t s = 0; s + 1 < sys.cuts().size(); ++s) {
        std::vector<std::size_t> cls;
        for (std::size_t i = sys.cuts()[s]; i < sys.cuts()[s + 1]; ++i)
            cls.push_back(i);
        classes.push_back(one_based(cls));
    }
    ctx["classes"] = std::move(classes);
    return {std::move(sys), std::move(ctx)};
}

ordered header(const std::string& command)
{
    ordered j = ordered::object();
    j["schema_version"] = schema_version;
    j["command"] = command;
    return j;
}

void merge(ordered& into, const ordered& from)
{
    for (const auto& [k, v] : from.items())
        into[k] = v;
}

std::string scalar_text(const ordered& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_flat(const ordered& v)
{
    if (!v.is_array())
        return false;
    for (const auto& x : v)
        if (x.is_structured())
            return false;
    return true;
}

void write_table(std::ostream& os, const ordered& j, const std::string& indent)
{
    for (const auto& [k, v] : j.items()) {
        if (!v.is_structured()) {
            os << indent << k << ": " << scalar_text(v) << '\n';
        } else if (is_flat(v)) {
            os << indent << k << ":";
            for (const auto& x : v)
                os << ' ' << scalar_text(x);
            os << '\n';
        } else if (v.is_object()) {
            os << indent << k << ":\n";
            write_table(os, v, indent + "  ");
        } else {
            os << indent << k << ":\n";
            for (const auto& x : v) {
                if (is_flat(x)) {
                    os << indent << " ";
                    for (const auto& y : x)
                        os << ' ' << scalar_text(y);
                    os << '\n';
                } else if (x.is_object()) {
                    write_table(os, x, indent + "  ");
                    os << indent << "  --\n";
                } else {
                    os << indent << "  " << scalar_text(x) << '\n';
                }
            }
        }
    }
}

void emit(std::ostream& os, const Options& o, const ordered& j)
{
    if (o.format == "table")
        write_table(os, j, "");
    else
        os << j.dump(2) << '\n';
}

void require_no_dot(const Options& o, const std::string& command)
{
    if (o.format == "dot")
        throw InputError("--format dot is available for roots and series only, not " + command);
}

ordered root_json(const DemazureRoot& r)
{
    ordered j = ordered::object();
    j["ray"] = r.ray + 1;
    j["e"] = vector_json(r.e);
    j["label"] = root_label(r.e);
    j["kind"] = to_string(r.kind);
    j["parity"] = to_string(r.parity);
    return j;
}

int cmd_roots(const Options& o, std::ostream& out)
{
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    if (o.format == "dot") {
        out << emit_dot(sys, RootGraph(sys, sys.full()));
        return 0;
    }
    ordered j = header("roots");
    merge(j, an.context);
    const auto& rep = sys.report();
    ordered all = ordered::array();
    std::size_t semisimple = 0, detached = 0;
    for (const auto& r : rep.all_roots) {
        all.push_back(root_json(r));
        semisimple += r.parity == RootParity::semisimple;
        detached += r.kind == RootKind::detached;
    }
    j["root_count"] = rep.all_roots.size();
    j["semisimple_count"] = semisimple;
    j["detached_count"] = detached;
    j["roots"] = std::move(all);
    ordered pos = ordered::array();
    for (std::size_t i = 0; i < sys.n(); ++i) {
        ordered entry = ordered::object();
        entry["ray"] = i + 1;
        ordered ls = ordered::array();
        for (RootId id : sys.on_ray(i))
            ls.push_back(sys.label(id));
        entry["roots"] = std::move(ls);
        pos.push_back(std::move(entry));
    }
    j["positive_count"] = sys.size();
    j["positive"] = std::move(pos);
    emit(out, o, j);
    return 0;
}

int cmd_umax(const Options& o, std::ostream& out)
{
    require_no_dot(o, "umax");
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    ordered j = header("umax");
    merge(j, an.context);
    const auto u = umax_shape(sys);
    j["shape"] = u.shape.to_string();
    j["per_ray"] = u.per_ray.to_string();
    j["dimension"] = u.shape.dimension();
    ordered blocks = ordered::array();
    for (std::size_t s = 0; s < u.k.size(); ++s) {
        ordered b = ordered::object();
        b["class"] = j["classes"][s];
        b["k"] = u.k[s];
        b["l"] = u.l[s];
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    j["type"] = to_string(variety_type(sys));
    const auto ss = uss_shape(sys);
    ordered uss = ordered::object();
    uss["shape"] = ss.shape.to_string();
    uss["simple_components"] = ss.simple_components;
    uss["roots"] = labels(sys, ss.roots);
    j["uss"] = std::move(uss);
    emit(out, o, j);
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    require_no_dot(o, "enumerate");
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    const auto res = enumerate_open_orbit_subgroups(sys, {.max_results = o.max_results});
    ordered j = header("enumerate");
    merge(j, an.context);
    j["count"] = res.subgroups.size();
    if (o.histogram) {
        ordered h = ordered::object();
        for (const auto& [dim, count] : res.histogram)
            h[std::to_string(dim)] = count;
        j["histogram"] = std::move(h);
    }
    ordered subs = ordered::array();
    for (const auto& s : res.subgroups)
        subs.push_back(labels(sys, s));
    j["subgroups"] = std::move(subs);
    emit(out, o, j);
    return 0;
}

ordered series_json(const RootSystem& sys, const std::vector<RootSet>& series)
{
    ordered a = ordered::array();
    for (const auto& s : series)
        a.push_back(labels(sys, s));
    return a;
}

int cmd_series(const Options& o, std::ostream& out)
{
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    const RootGraph g(sys, sys.full());
    if (o.format == "dot") {
        out << emit_dot(sys, g);
        return 0;
    }
    const auto r = series_report(sys, sys.full());
    ordered j = header("series");
    merge(j, an.context);
    j["arrows"] = g.arrows().size();
    j["inner_arrows"] = g.inner_count();
    j["longest_path"] = r.longest_path;
    j["nilpotency_class"] = r.nilpotency_class;
    j["derived_length"] = r.derived_length;
    j["lower"] = series_json(sys, r.lower);
    j["upper"] = series_json(sys, r.upper);
    j["derived"] = series_json(sys, r.derived);
    if (r.center_indices)
        j["center"] = one_based(*r.center_indices);
    emit(out, o, j);
    return 0;
}

int cmd_center(const Options& o, std::ostream& out)
{
    require_no_dot(o, "center");
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    const auto c = center(sys, sys.full());
    ordered j = header("center");
    merge(j, an.context);
    j["center"] = one_based(c.indices);
    j["roots"] = labels(sys, c.roots);
    emit(out, o, j);
    return 0;
}

int cmd_type(const Options& o, std::ostream& out)
{
    require_no_dot(o, "type");
    auto an = analyse(read_input(o));
    ordered j = header("type");
    merge(j, an.context);
    j["type"] = to_string(variety_type(an.sys));
    j["commutative"] = variety_type(an.sys) == VarietyType::type_I;
    emit(out, o, j);
    return 0;
}

int cmd_split(const Options& o, std::ostream& out)
{
    require_no_dot(o, "split");
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    const auto s = split_projective_lines(sys);
    ordered j = header("split");
    merge(j, an.context);
    j["b"] = s.b;
    j["columns"] = one_based(s.columns);
    std::vector<std::size_t> input_cols;
    for (auto c : s.columns)
        input_cols.push_back(sys.permutation()[c]);
    j["input_columns"] = one_based(input_cols);
    j["remainder"] = s.remainder ? matrix_json(*s.remainder) : ordered(nullptr);
    emit(out, o, j);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    require_no_dot(o, "verify");
    auto an = analyse(read_input(o));
    const RootSystem& sys = an.sys;
    const BracketTable table(sys);
    std::size_t conj_pairs = 0, conj_ok = 0, conj_skipped = 0, comm_pairs = 0, comm_ok = 0;
    ordered failures = ordered::array();
    for (RootId e = 0; e < sys.size(); ++e) {
        for (RootId f = 0; f < sys.size(); ++f) {
            const auto c = commutator_first_order(sys, e, f);
            const auto& b = table.at(e, f);
            ++comm_pairs;
            if (c.only_that_term && c.coefficient == (b ? Rational(b->coefficient) : Rational(0)))
                ++comm_ok;
            else
                failures.push_back("commutator of " + sys.label(e) + " and " + sys.label(f));
            if (sys.ray_of(e) >= sys.ray_of(f))
                continue;
            if (sys.pairing(e, sys.ray_of(f)) > 4) {
                ++conj_skipped;
                continue;
            }
            ++conj_pairs;
            if (verify_conjugation(sys, e, f).holds)
                ++conj_ok;
            else
                failures.push_back("conjugation of " + sys.label(e) + " by " + sys.label(f));
        }
    }
    ordered emb = ordered::array();
    bool emb_ok = true;
    for (std::size_t s = 0; s + 1 < sys.cuts().size(); ++s) {
        const auto c = matrix_embedding_check(sys, s);
        ordered x = ordered::object();
        x["class"] = s + 1;
        x["k"] = c.k;
        x["l"] = c.l;
        x["generators"] = c.generators;
        x["holds"] = c.holds;
        if (!c.holds) {
            emb_ok = false;
            failures.push_back("embedding of class " + std::to_string(s + 1) + ": " + c.failure);
        }
        emb.push_back(std::move(x));
    }
    const bool jacobi = !jacobi_violation(table, sys.full());
    if (!jacobi)
        failures.push_back("Jacobi identity");
    const bool ok = conj_ok == conj_pairs && comm_ok == comm_pairs && emb_ok && jacobi;

    ordered j = header("verify");
    merge(j, an.context);
    j["conjugation"] = {{"pairs", conj_pairs}, {"passed", conj_ok}, {"skipped_d_above_4", conj_skipped}};
    j["commutator"] = {{"pairs", comm_pairs}, {"passed", comm_ok}};
    j["embedding"] = std::move(emb);
    j["jacobi"] = jacobi;
    j["ok"] = ok;
    j["failures"] = std::move(failures);
    emit(out, o, j);
    return ok ? 0 : 1;
}

int cmd_surface(const Options& o, std::ostream& out, std::ostream& err)
{
    require_no_dot(o, "surface");
    if (o.max_m) {
        if (o.ray_matrix || o.rays || o.sequence || o.input)
            throw InputError("--max-m enumerates surfaces and takes no fan input");
        const auto list = enumerate_smooth_surfaces(*o.max_m, {.max_q = o.max_q, .max_results = o.max_results});
        ordered j = header("surface");
        j["max_m"] = *o.max_m;
        j["max_q"] = o.max_q.value_or(static_cast<long>(*o.max_m));
        j["count"] = list.size();
        ordered ss = ordered::array();
        for (const auto& s : list) {
            ordered x = ordered::object();
            x["sequence"] = s;
            x["m"] = s.size();
            x["radiant"] = is_radiant_sequence(s);
            ss.push_back(std::move(x));
        }
        j["surfaces"] = std::move(ss);
        emit(out, o, j);
        return 0;
    }
    const FanInput fi = read_input(o);
    if (!fi.sequence)
        throw InputError("surface needs --sequence, an input document with 'sequence', or --max-m");
    const SurfaceSequence& seq = *fi.sequence;
    const RayList rl = sequence_to_rays(seq);
    ordered j = header("surface");
    j["sequence"] = seq;
    ordered rays = ordered::array();
    for (const auto& r : rl.rays)
        rays.push_back(vector_json(r));
    j["rays"] = std::move(rays);
    j["picard_number"] = seq.size() - 2;
    if (!is_radiant_sequence(seq)) {
        j["radiant"] = false;
        emit(out, o, j);
        err << "surface " << to_string(seq) << " is not radiant\n";
        return 1;
    }
    const auto rep = surface_report(seq);
    const RootSystem sys = RootSystem::from_matrix(rep.bilateral.matrix);
    j["radiant"] = true;
    j["bilateral_basis"] = one_based(rep.bilateral.basis_indices);
    j["bilateral_ray_order"] = one_based(rep.bilateral.permutation);
    j["column_permutation"] = one_based(sys.permutation());
    j["ray_matrix"] = matrix_json(sys.matrix());
    j["d"] = rep.d ? ordered(*rep.d) : ordered(nullptr);
    j["type"] = to_string(rep.type);
    j["umax"] = rep.umax.per_ray.to_string();
    j["nilpotency_class"] = rep.nilpotency_class;
    j["subgroup_count"] = rep.subgroups.subgroups.size();
    ordered subs = ordered::array();
    for (const auto& s : rep.subgroups.subgroups)
        subs.push_back(labels(sys, s));
    j["subgroups"] = std::move(subs);
    emit(out, o, j);
    return 0;
}

int cmd_bilateral(const Options& o, std::ostream& out, std::ostream& err)
{
    require_no_dot(o, "bilateral");
    const FanInput fi = read_input(o);
    const RayList rl = ray_list_of(fi);
    ordered j = header("bilateral");
    j["n"] = rl.n;
    ordered rays = ordered::array();
    for (const auto& r : rl.rays)
        rays.push_back(vector_json(r));
    j["rays"] = std::move(rays);
    const auto b = bilateralize(rl);
    j["bilateral"] = b.has_value();
    if (!b) {
        emit(out, o, j);
        err << "not radiant: the fan has no bilateral basis\n";
        return 1;
    }
    j["basis"] = one_based(b->basis_indices);
    j["ray_order"] = one_based(b->permutation);
    j["ray_matrix"] = matrix_json(b->matrix);
    emit(out, o, j);
    return 0;
}

void add_input_options(CLI::App* sub, Options& o)
{
    sub->add_option("--ray-matrix", o.ray_matrix, "ray matrix rows, e.g. \"1 1 0; 1 0 0; 0 0 1\"");
    sub->add_option("--rays", o.rays, "ray generators as rows, e.g. \"1 0; 0 1; -1 -1\"");
    sub->add_option("--sequence", o.sequence, "surface self-intersection sequence, e.g. \"0,1,0,-1\"");
    sub->add_option("--input", o.input, "JSON fan document");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table", "dot"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Unipotent automorphism structure of radiant toric varieties"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"roots", "Demazure roots and positive roots"},
        {"umax", "shape of the maximal unipotent subgroup"},
        {"enumerate", "regular unipotent subgroups with an open orbit"},
        {"series", "central and derived series of U_max"},
        {"center", "center of U_max"},
        {"type", "Type I (commutative U_max) or Type II"},
        {"split", "split off projective line factors of a Type I variety"},
        {"verify", "check the Cox-ring model against the root combinatorics"},
        {"surface", "smooth toric surface report or enumeration"},
        {"bilateral", "search for a bilateral ray ordering"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_input_options(sub, o);
        if (name == "enumerate" || name == "surface")
            sub->add_option("--max-results", o.max_results, "result cap");
        if (name == "enumerate")
            sub->add_flag("--histogram", o.histogram, "include the dimension histogram");
        if (name == "surface") {
            sub->add_option("--max-m", o.max_m, "enumerate surfaces with at most this many rays");
            sub->add_option("--max-q", o.max_q, "largest Hirzebruch seed parameter (default max-m)");
        }
    }

    std::vector<const char*> argv{"radiant"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "roots")
            return cmd_roots(o, out);
        if (cmd == "umax")
            return cmd_umax(o, out);
        if (cmd == "enumerate")
            return cmd_enumerate(o, out);
        if (cmd == "series")
            return cmd_series(o, out);
        if (cmd == "center")
            return cmd_center(o, out);
        if (cmd == "type")
            return cmd_type(o, out);
        if (cmd == "split")
            return cmd_split(o, out);
        if (cmd == "verify")
            return cmd_verify(o, out);
        if (cmd == "surface")
            return cmd_surface(o, out, err);
        return cmd_bilateral(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace radiant::cli
