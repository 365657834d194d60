#include <lierealise/catalog.hpp>
#include <lierealise/cli.hpp>
#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>
#include <lierealise/io.hpp>
#include <lierealise/jets.hpp>
#include <lierealise/realise.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

namespace lierealise {

namespace {

struct Options {
    std::string input;
    std::string entry;
    std::string params;
    std::string format = "text";
    std::vector<std::string> complement;
    std::string ode;
    std::string field;
    std::string var;
    int degree = 6;
    int ansatz_degree = 3;
    int order = 2;
};

int checked_degree(int d)
{
    if (d < 1) {
        throw Error(errc::invalid_argument, "--degree must be at least 1");
    }
    if (const char *cap = std::getenv("LIEREALISE_MAX_DEGREE")) {
        const int limit = std::atoi(cap);
        if (limit > 0 && d > limit) {
            throw Error(errc::degree_limit, "degree " + std::to_string(d) + " exceeds LIEREALISE_MAX_DEGREE=" +
                                                std::to_string(limit));
        }
    }
    return d;
}

bool json_output(const Options &o)
{
    if (o.format != "text" && o.format != "json") {
        throw Error(errc::invalid_argument, "--format is text or json");
    }
    return o.format == "json";
}

std::string vector_text(const LieAlgebra &a, const Vector &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        Rational c = v[i];
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        out += (c == 1 ? "" : to_string(c) + "*") + a.name(i);
    }
    return out.empty() ? "0" : out;
}

std::string vectors_text(const LieAlgebra &a, const std::vector<Vector> &vs)
{
    std::string out = "<";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? ", " : "") + vector_text(a, vs[i]);
    }
    return out + ">";
}

// Lie's notation: p, q, r for the partials along x, y, z.
std::string field_text(const TruncatedVectorField &X, const std::vector<std::string> &names)
{
    const bool lie = names == default_variable_names(names.size()) && names.size() <= 3;
    std::string out;
    for (std::size_t i = 0; i < X.n_vars(); ++i) {
        const auto &c = X.coefficient(i);
        if (c.is_zero()) {
            continue;
        }
        const std::string sym = lie ? std::string(1, "pqr"[i]) : "d/d" + names[i];
        std::string s = to_string(c, names);
        bool negative = false;
        if (c.terms().size() == 1 && s.front() == '-') {
            negative = true;
            s.erase(0, 1);
        }
        std::string term;
        if (c.terms().size() > 1) {
            term = "(" + s + ")*" + sym;
        } else {
            term = s == "1" ? sym : s + "*" + sym;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

Json subspace_to_json_names(const LieAlgebra &a, const Subspace &s)
{
    Json arr = Json::array();
    for (const auto &v : s.basis()) {
        arr.push_back(vector_to_json(a, v));
    }
    return arr;
}

std::optional<Json> complement_json(const Options &o)
{
    if (o.complement.empty()) {
        return std::nullopt;
    }
    Json arr = Json::array();
    for (const auto &name : o.complement) {
        arr.push_back(name);
    }
    return arr;
}

struct Source {
    std::optional<TransitivePair> pair;
    std::optional<LieAlgebra> algebra;
    std::optional<Realisation> realisation;
    std::optional<Instance> instance;
};

Source load_source(const Options &o, int degree, bool need_pair = true)
{
    if (o.input.empty() == o.entry.empty()) {
        throw Error(errc::invalid_argument, "exactly one of --input or --entry is required");
    }
    Source s;
    if (!o.entry.empty()) {
        const auto &e = find_entry(o.entry);
        s.instance = instantiate(e.id, parse_params(e, o.params), degree);
        s.pair = s.instance->pair;
        if (auto c = complement_json(o)) {
            std::vector<Vector> comp;
            for (const auto &v : *c) {
                comp.push_back(vector_from_json(s.pair->algebra(), v));
            }
            s.pair = s.pair->with_complement(std::move(comp));
        }
    } else {
        const Json j = load_json_file(o.input);
        if (j.is_object() && j.contains("images")) {
            s.realisation = realisation_from_json(j);
            s.pair = s.realisation->pair;
        } else if (j.is_object() && j.contains("algebra")) {
            s.pair = pair_from_json(j, complement_json(o));
        } else if (j.is_object() && j.contains("basis") && !need_pair) {
            s.algebra = algebra_from_json(j);
        } else {
            throw Error(errc::schema_violation, o.input + " is not a pair or realisation document");
        }
    }
    if (s.pair) {
        s.algebra = s.pair->algebra();
    }
    return s;
}

Realisation realisation_for(const Options &o, int degree)
{
    auto s = load_source(o, degree);
    if (s.realisation) {
        return std::move(*s.realisation);
    }
    return realise(*s.pair, degree);
}

void print_realisation(const Realisation &r, bool json, std::ostream &out)
{
    if (json) {
        out << to_json(r).dump(2) << "\n";
        return;
    }
    const auto &a = r.pair.algebra();
    out << "realisation through degree " << r.degree << " in";
    if (r.variables.empty()) {
        out << " no variables";
    }
    for (const auto &v : r.variables) {
        out << " " << v;
    }
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out << "  " << a.name(i) << " -> " << field_text(r.images[i], r.variables) << "\n";
    }
    out << "kernel: " << vectors_text(a, r.kernel.basis()) << "\n";
}

int cmd_realise(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    print_realisation(realisation_for(o, checked_degree(o.degree)), json, out);
    return 0;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const auto r = realisation_for(o, checked_degree(o.degree));
    const auto report = verify_realisation(r);
    const auto &a = r.pair.algebra();
    if (json) {
        out << to_json(report, a).dump(2) << "\n";
        return report.ok() ? 0 : 1;
    }
    auto line = [&](const char *what, bool ok) { out << "  " << what << ": " << (ok ? "pass" : "FAIL") << "\n"; };
    out << "verification through degree " << r.degree << "\n";
    line("homomorphism", report.homomorphism);
    for (const auto &res : report.residuals) {
        if (!res.vanishes) {
            out << "    [" << a.name(res.lhs) << ", " << a.name(res.rhs)
                << "] residual: " << field_text(res.residual, r.variables) << "\n";
        }
    }
    line("isotropy has order >= 0", report.isotropy_nonnegative);
    line("isotropy is exactly h", report.isotropy_exact);
    line("transitive", report.transitive);
    line("kernel is the largest ideal in h", report.kernel_is_largest_ideal);
    line("kernel matches vanishing images", report.kernel_matches_images);
    out << "result: " << (report.ok() ? "pass" : "FAIL") << "\n";
    return report.ok() ? 0 : 1;
}

std::size_t variable_index(const Options &o, const Realisation &r)
{
    for (std::size_t i = 0; i < r.variables.size(); ++i) {
        if (r.variables[i] == o.var) {
            return i;
        }
    }
    const bool digits = !o.var.empty() && std::all_of(o.var.begin(), o.var.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
    if (digits && std::stoul(o.var) < r.variables.size()) {
        return std::stoul(o.var);
    }
    throw Error(errc::invalid_argument, "--var must name a variable of the realisation");
}

int cmd_lift(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const auto r = realisation_for(o, checked_degree(o.degree));
    const auto lifted = o.var.empty() ? lift_polynomial(r) : lift_exp_polynomial(r, variable_index(o, r));
    if (json) {
        out << to_json(lifted, r.variables).dump(2) << "\n";
        return 0;
    }
    for (const auto &img : lifted) {
        for (std::size_t k = 0; k < img.coefficients.size(); ++k) {
            const auto &c = img.coefficients[k];
            out << img.name << "." << r.variables[k] << " = " << c.render(r.variables) << "  ["
                << to_string(c.status) << "]";
            if (!c.note.empty()) {
                out << "  " << c.note;
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_prolong(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const int degree = checked_degree(o.degree);
    if (o.field.empty()) {
        throw Error(errc::invalid_argument, "--field is required");
    }
    if (o.order < 0 || o.order > 12) {
        throw Error(errc::invalid_argument, "--order must be in 0..12");
    }
    const auto X = parse_field(o.field, 2, degree);
    const auto pr = prolong(X, static_cast<unsigned>(o.order));
    std::optional<JetExpression> residual;
    std::optional<ExplicitOde> ode;
    if (!o.ode.empty()) {
        ode = parse_ode(o.ode, degree);
        residual = symmetry_residual(X, *ode);
    }
    if (json) {
        Json images = Json::object();
        for (std::size_t i = 0; i < pr.images.size(); ++i) {
            images[jet_name(static_cast<unsigned>(i))] = to_string(pr.images[i]);
        }
        Json doc{{"field", field_text(X, {"x", "y"})}, {"degree", degree}, {"images", images}};
        if (residual) {
            doc["ode"] = to_string(*ode);
            doc["residual"] = to_string(*residual);
            doc["symmetry"] = residual->is_zero();
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "X = " << field_text(X, {"x", "y"}) << "\n";
    for (std::size_t i = 0; i < pr.images.size(); ++i) {
        out << "  X(" << jet_name(static_cast<unsigned>(i)) << ") = " << to_string(pr.images[i]) << "\n";
    }
    if (residual) {
        out << "residual on " << to_string(*ode) << ": " << to_string(*residual) << "\n";
        out << (residual->is_zero() ? "symmetry" : "not a symmetry") << "\n";
    }
    return 0;
}

int cmd_symmetries(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const int degree = checked_degree(o.degree);
    if (o.ode.empty()) {
        throw Error(errc::invalid_argument, "--ode is required");
    }
    const auto ode = parse_ode(o.ode, degree);
    const std::vector<std::string> xy{"x", "y"};
    if (!o.entry.empty()) {
        const auto &e = find_entry(o.entry);
        const auto params = parse_params(e, o.params);
        const auto flags = check_table_entry_symmetry(e.id, params, ode);
        const auto inst = instantiate(e.id, params, degree);
        bool all = true;
        Json rows = Json::array();
        for (std::size_t i = 0; i < flags.size(); ++i) {
            all = all && flags[i];
            rows.push_back({{"generator", inst.texts[i]}, {"symmetry", static_cast<bool>(flags[i])}});
            if (!json) {
                out << "  " << inst.texts[i] << ": " << (flags[i] ? "symmetry" : "not a symmetry") << "\n";
            }
        }
        if (json) {
            out << Json{{"entry", e.id}, {"ode", to_string(ode)}, {"generators", rows}, {"all", all}}.dump(2)
                << "\n";
        }
        return 0;
    }
    if (o.ansatz_degree < 1 || o.ansatz_degree > 12) {
        throw Error(errc::invalid_argument, "--ansatz-degree must be in 1..12");
    }
    const auto sys = determining_system(ode, static_cast<unsigned>(o.ansatz_degree));
    if (json) {
        Json basis = Json::array();
        for (const auto &X : sys.solutions) {
            basis.push_back(field_text(X, xy));
        }
        out << Json{{"ode", to_string(ode)},
                    {"ansatz_degree", sys.ansatz_degree},
                    {"reliable_degree", sys.reliable_degree},
                    {"unknowns", sys.unknowns.size()},
                    {"equations", sys.equations.rows()},
                    {"dimension", sys.solutions.size()},
                    {"next_dimension", sys.next_dimension},
                    {"stabilized", sys.stabilized},
                    {"basis", basis}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "symmetries of " << to_string(ode) << " with polynomial ansatz of degree " << sys.ansatz_degree << "\n";
    out << "dimension " << sys.solutions.size() << " (" << sys.next_dimension << " at degree "
        << sys.ansatz_degree + 1 << ", " << (sys.stabilized ? "stable" : "not stable") << ")\n";
    for (const auto &X : sys.solutions) {
        out << "  " << field_text(X, xy) << "\n";
    }
    return 0;
}

std::string param_specs_text(const CatalogEntry &e)
{
    std::string out;
    for (const auto &p : e.params) {
        if (!out.empty()) {
            out += ", ";
        }
        out += p.name;
        if (p.kind == ParameterSpec::Kind::alpha_set) {
            out += " (alpha set)";
        } else if (p.min) {
            out += " >= " + std::to_string(*p.min);
        } else if (p.nonzero) {
            out += " != 0";
        }
    }
    return out;
}

Json entry_json(const CatalogEntry &e)
{
    Json params = Json::array();
    for (const auto &p : e.params) {
        Json spec{{"name", p.name}, {"default", p.default_text}};
        spec["kind"] = p.kind == ParameterSpec::Kind::integer    ? "integer"
                       : p.kind == ParameterSpec::Kind::rational ? "rational"
                                                                 : "alpha_set";
        if (p.min) {
            spec["min"] = *p.min;
        }
        if (p.nonzero) {
            spec["nonzero"] = true;
        }
        params.push_back(spec);
    }
    Json j{{"id", e.id}, {"table", e.table}, {"type", e.type}, {"labels", e.labels}, {"params", params}};
    if (e.case_number) {
        j["case"] = *e.case_number;
    }
    if (e.equivalent_to) {
        j["equivalent_to"] = {{"id", e.equivalent_to->id}, {"note", e.equivalent_to->note}};
        if (!e.equivalent_to->params.empty()) {
            j["equivalent_to"]["params"] = e.equivalent_to->params;
        }
        if (!e.equivalent_to->when.empty()) {
            j["equivalent_to"]["when"] = e.equivalent_to->when;
        }
    }
    return j;
}

int cmd_catalog_list(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    Json arr = Json::array();
    for (const auto &e : catalog()) {
        if (json) {
            arr.push_back(entry_json(e));
            continue;
        }
        std::string labels;
        for (const auto &l : e.labels) {
            labels += (labels.empty() ? "" : " ") + l;
        }
        out << e.id << "  type " << e.type;
        if (!labels.empty()) {
            out << "  labels " << labels;
        }
        if (!e.params.empty()) {
            out << "  params " << param_specs_text(e);
        }
        out << "\n";
    }
    if (json) {
        out << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_catalog_show(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    if (o.entry.empty()) {
        throw Error(errc::invalid_argument, "--id is required");
    }
    const auto &e = find_entry(o.entry);
    const auto params = parse_params(e, o.params);
    const auto inst = instantiate(e.id, params, checked_degree(o.degree));
    const auto &a = inst.algebra;
    if (json) {
        Json j = entry_json(e);
        j["instance"] = {{"params", to_string(e, params)},
                         {"degree", inst.degree},
                         {"generators", Json::array()},
                         {"pair", to_json(inst.pair)}};
        for (std::size_t i = 0; i < inst.texts.size(); ++i) {
            j["instance"]["generators"].push_back({{"name", inst.names[i]}, {"text", inst.texts[i]}});
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << e.id << "  type " << e.type << "\n";
    if (!e.params.empty()) {
        out << "parameters: " << to_string(e, params) << "\n";
    }
    for (std::size_t i = 0; i < inst.texts.size(); ++i) {
        out << "  " << inst.names[i] << " = " << inst.texts[i] << "\n";
    }
    out << "brackets:\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const auto &v = a.bracket_basis(i, j);
            if (!is_zero(v)) {
                out << "  [" << a.name(i) << ", " << a.name(j) << "] = " << vector_text(a, v) << "\n";
            }
        }
    }
    out << "isotropy: " << vectors_text(a, inst.pair.isotropy_basis()) << "\n";
    out << "complement: " << vectors_text(a, inst.pair.complement()) << "\n";
    if (e.equivalent_to) {
        out << "equivalent to " << e.equivalent_to->id;
        if (!e.equivalent_to->params.empty()) {
            out << " with " << e.equivalent_to->params;
        }
        if (!e.equivalent_to->when.empty()) {
            out << " when " << e.equivalent_to->when;
        }
        out << " (" << e.equivalent_to->note << ")\n";
    }
    return 0;
}

int cmd_catalog_verify(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const int degree = checked_degree(o.degree);
    std::vector<std::pair<const CatalogEntry *, CatalogParams>> runs;
    if (!o.entry.empty()) {
        const auto &e = find_entry(o.entry);
        runs.emplace_back(&e, parse_params(e, o.params));
    } else {
        if (!o.params.empty()) {
            throw Error(errc::invalid_argument, "--params needs --id");
        }
        for (const auto &e : catalog()) {
            runs.emplace_back(&e, default_params(e));
        }
    }
    bool all = true;
    Json arr = Json::array();
    for (const auto &[e, p] : runs) {
        const auto r = verify_entry(e->id, p, degree);
        all = all && r.ok();
        if (json) {
            Json j{{"id", r.id},
                   {"params", to_string(*e, p)},
                   {"ok", r.ok()},
                   {"generators", r.generator_count},
                   {"dimension", r.dimension},
                   {"checked_degree", r.checked_degree},
                   {"independent", r.independent},
                   {"closed", r.closed},
                   {"transitive", r.transitive},
                   {"jacobi", r.jacobi},
                   {"failures", r.failures}};
            if (r.containment) {
                j["containment"] = *r.containment;
            }
            arr.push_back(j);
            continue;
        }
        out << r.id;
        if (!e->params.empty()) {
            out << " [" << to_string(*e, p) << "]";
        }
        out << ": " << (r.ok() ? "pass" : "FAIL") << " (dim " << r.dimension << ", checked through degree "
            << r.checked_degree << ")\n";
        for (const auto &f : r.failures) {
            out << "  " << f << "\n";
        }
    }
    if (json) {
        out << (o.entry.empty() ? arr : arr.front()).dump(2) << "\n";
    }
    return all ? 0 : 1;
}

int cmd_report(const Options &o, std::ostream &out)
{
    const bool json = json_output(o);
    const auto s = load_source(o, checked_degree(o.degree), false);
    const auto &a = *s.algebra;
    const auto rep = structural_report(a);
    Json j{{"dim", a.dim()},
           {"derived_series", Json::array()},
           {"center", subspace_to_json_names(a, rep.center)},
           {"killing_rank", rep.killing_rank},
           {"semisimple", rep.semisimple},
           {"solvable", rep.solvable},
           {"abelian", rep.abelian},
           {"simple", is_simple(a)},
           {"has_nonzero_abelian_ideal", rep.has_nonzero_abelian_ideal}};
    for (const auto &d : rep.derived_series) {
        j["derived_series"].push_back(d.dim());
    }
    if (rep.abelian_ideal) {
        j["abelian_ideal"] = subspace_to_json_names(a, *rep.abelian_ideal);
    }
    if (s.pair) {
        const auto ideal = largest_ideal_in(*s.pair);
        j["pair"] = {{"codimension", s.pair->codimension()},
                     {"largest_ideal_in_isotropy", subspace_to_json_names(a, ideal)},
                     {"effective", ideal.is_zero()},
                     {"complement_nilpotent_subalgebra", complement_is_nilpotent_subalgebra(*s.pair)}};
    }
    if (json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "dimension " << a.dim() << "\n";
    out << "derived series dimensions:";
    for (const auto &d : rep.derived_series) {
        out << " " << d.dim();
    }
    out << "\n";
    out << "center: " << vectors_text(a, rep.center.basis()) << "\n";
    out << "Killing form rank " << rep.killing_rank << "\n";
    out << "semisimple " << (rep.semisimple ? "yes" : "no") << ", solvable " << (rep.solvable ? "yes" : "no")
        << ", abelian " << (rep.abelian ? "yes" : "no") << ", simple " << (is_simple(a) ? "yes" : "no") << "\n";
    if (rep.abelian_ideal) {
        out << "non-zero abelian ideal: " << vectors_text(a, rep.abelian_ideal->basis()) << "\n";
    }
    if (s.pair) {
        const auto ideal = largest_ideal_in(*s.pair);
        out << "pair of codimension " << s.pair->codimension() << "\n";
        out << "largest ideal inside h: " << vectors_text(a, ideal.basis()) << "\n";
        out << "effective " << (ideal.is_zero() ? "yes" : "no") << "\n";
        out << "complement is a subalgebra acting nilpotently: "
            << (complement_is_nilpotent_subalgebra(*s.pair) ? "yes" : "no") << "\n";
    }
    return 0;
}

void add_source(CLI::App *cmd, Options &o)
{
    cmd->add_option("--input", o.input, "pair, algebra or realisation JSON file");
    cmd->add_option("--entry", o.entry, "catalog entry id");
    cmd->add_option("--params", o.params, "entry parameters, e.g. r=2,lambda=-1/2");
    cmd->add_option("--complement", o.complement, "complement basis names")->delimiter(',');
}

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--degree", o.degree, "truncation degree")->capture_default_str();
    cmd->add_option("--format", o.format, "text or json")->capture_default_str();
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app("Realise transitive Lie algebra pairs as formal vector fields", "lierealise");
    app.require_subcommand(1);

    auto *realise_cmd = app.add_subcommand("realise", "realise a pair as truncated vector fields");
    auto *verify_cmd = app.add_subcommand("verify", "check a realisation against its pair");
    auto *lift_cmd = app.add_subcommand("lift", "recognise closed forms of realisation coefficients");
    for (auto *cmd : {realise_cmd, verify_cmd, lift_cmd}) {
        add_source(cmd, o);
        add_common(cmd, o);
    }
    lift_cmd->add_option("--var", o.var, "variable for exp-polynomial lifting");

    auto *prolong_cmd = app.add_subcommand("prolong", "prolong a planar vector field to jet space");
    prolong_cmd->add_option("--field", o.field, "vector field, e.g. x*p + y^2*q");
    prolong_cmd->add_option("--order", o.order, "prolongation order")->capture_default_str();
    prolong_cmd->add_option("--ode", o.ode, "also evaluate the symmetry residual on this ODE");
    add_common(prolong_cmd, o);

    auto *sym_cmd = app.add_subcommand("symmetries", "point symmetries of an explicit ODE");
    sym_cmd->add_option("--ode", o.ode, "ODE such as \"y'' = 0\"");
    sym_cmd->add_option("--ansatz-degree", o.ansatz_degree, "polynomial ansatz degree")->capture_default_str();
    sym_cmd->add_option("--entry", o.entry, "check the generators of a catalog entry instead");
    sym_cmd->add_option("--params", o.params, "entry parameters");
    add_common(sym_cmd, o);

    auto *cat_cmd = app.add_subcommand("catalog", "Lie's classification tables");
    cat_cmd->require_subcommand(1);
    auto *list_cmd = cat_cmd->add_subcommand("list", "list entries");
    auto *show_cmd = cat_cmd->add_subcommand("show", "instantiate one entry");
    auto *cverify_cmd = cat_cmd->add_subcommand("verify", "verify one or all entries");
    list_cmd->add_option("--format", o.format, "text or json")->capture_default_str();
    for (auto *cmd : {show_cmd, cverify_cmd}) {
        cmd->add_option("--id", o.entry, "entry id");
        cmd->add_option("--params", o.params, "entry parameters");
        add_common(cmd, o);
    }

    auto *report_cmd = app.add_subcommand("report", "structural report on an algebra or pair");
    add_source(report_cmd, o);
    add_common(report_cmd, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << Json{{"error", {{"code", errc::invalid_argument}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        if (*realise_cmd) {
            return cmd_realise(o, out);
        }
        if (*verify_cmd) {
            return cmd_verify(o, out);
        }
        if (*lift_cmd) {
            return cmd_lift(o, out);
        }
        if (*prolong_cmd) {
            return cmd_prolong(o, out);
        }
        if (*sym_cmd) {
            return cmd_symmetries(o, out);
        }
        if (*list_cmd) {
            return cmd_catalog_list(o, out);
        }
        if (*show_cmd) {
            return cmd_catalog_show(o, out);
        }
        if (*cverify_cmd) {
            return cmd_catalog_verify(o, out);
        }
        return cmd_report(o, out);
    } catch (const Error &e) {
        err << Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const Json::exception &e) {
        err << Json{{"error", {{"code", errc::schema_violation}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }
}

} // namespace lierealise
