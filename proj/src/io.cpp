#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>
#include <lierealise/io.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace lierealise {

namespace {

[[noreturn]] void schema(const std::string &msg) { throw Error(errc::schema_violation, msg); }

const Json &member(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        schema(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

Rational rational_from_json(const Json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(Integer(std::to_string(j.get<long long>())));
    }
    schema("rationals are written as strings \"p/q\" or integers");
}

std::vector<Vector> vectors_from_json(const LieAlgebra &a, const Json &j, const char *what)
{
    if (!j.is_array()) {
        schema(std::string(what) + " must be an array");
    }
    std::vector<Vector> out;
    for (const auto &v : j) {
        out.push_back(vector_from_json(a, v));
    }
    return out;
}

Json subspace_to_json(const LieAlgebra &a, const std::vector<Vector> &basis)
{
    Json out = Json::array();
    for (const auto &v : basis) {
        out.push_back(vector_to_json(a, v));
    }
    return out;
}

} // namespace

Json load_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::file_not_found, "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error &e) {
        throw Error(errc::parse_error, path + ": " + e.what());
    }
}

LieAlgebra algebra_from_json(const Json &j)
{
    const auto &basis = member(j, "basis");
    if (!basis.is_array()) {
        schema("basis must be an array of names");
    }
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto &n : basis) {
        if (!n.is_string() || n.get<std::string>().empty()) {
            schema("basis names must be non-empty strings");
        }
        if (!seen.insert(n.get<std::string>()).second) {
            schema("duplicate basis name " + n.get<std::string>());
        }
        names.push_back(n.get<std::string>());
    }
    if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() != static_cast<long long>(names.size()))) {
        schema("dim does not match the basis");
    }
    StructureConstants sc(names);
    auto index = [&](const Json &n) {
        if (!n.is_string()) {
            schema("bracket operands must be basis names");
        }
        auto i = sc.index_of(n.get<std::string>());
        if (!i) {
            schema("unknown basis name " + n.get<std::string>());
        }
        return *i;
    };
    std::set<std::pair<std::size_t, std::size_t>> done;
    if (j.contains("brackets")) {
        const auto &brackets = j.at("brackets");
        if (!brackets.is_array()) {
            schema("brackets must be an array");
        }
        for (const auto &b : brackets) {
            const auto lhs = index(member(b, "lhs"));
            const auto rhs = index(member(b, "rhs"));
            const auto &out = member(b, "out");
            if (!out.is_object()) {
                schema("bracket output must be an object {name: coefficient}");
            }
            Vector v = zero_vector(names.size());
            for (const auto &[name, c] : out.items()) {
                auto i = sc.index_of(name);
                if (!i) {
                    schema("unknown basis name " + name);
                }
                v[*i] += rational_from_json(c);
            }
            if (lhs == rhs) {
                if (!is_zero(v)) {
                    schema("[" + names[lhs] + ", " + names[lhs] + "] must vanish");
                }
                continue;
            }
            if (!done.insert({std::min(lhs, rhs), std::max(lhs, rhs)}).second) {
                schema("bracket [" + names[lhs] + ", " + names[rhs] + "] given twice");
            }
            sc.set(lhs, rhs, std::move(v));
        }
    }
    const auto jac = check_jacobi(sc);
    if (!jac.holds) {
        const auto &t = *jac.failing_triple;
        throw Error(errc::not_a_lie_algebra, "Jacobi identity fails on (" + names[t[0]] + ", " + names[t[1]] + ", " +
                                                 names[t[2]] + ")");
    }
    return LieAlgebra(std::move(sc));
}

Json to_json(const LieAlgebra &a)
{
    Json brackets = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const auto &v = a.bracket_basis(i, j);
            if (!is_zero(v)) {
                brackets.push_back({{"lhs", a.name(i)}, {"rhs", a.name(j)}, {"out", vector_to_json(a, v)}});
            }
        }
    }
    return {{"dim", a.dim()}, {"basis", a.names()}, {"brackets", brackets}};
}

Json vector_to_json(const LieAlgebra &a, const Vector &v)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            out[a.name(i)] = to_string(v[i]);
        }
    }
    return out;
}

Vector vector_from_json(const LieAlgebra &a, const Json &j)
{
    if (j.is_string()) {
        return a.basis_vector(j.get<std::string>());
    }
    Vector v = zero_vector(a.dim());
    if (j.is_object()) {
        for (const auto &[name, c] : j.items()) {
            v[a.index_of(name)] += rational_from_json(c);
        }
        return v;
    }
    if (j.is_array()) {
        if (j.size() != a.dim()) {
            schema("dense vectors need " + std::to_string(a.dim()) + " entries");
        }
        for (std::size_t i = 0; i < a.dim(); ++i) {
            v[i] = rational_from_json(j[i]);
        }
        return v;
    }
    schema("a vector is a basis name, an object {name: coefficient} or an array");
}

TransitivePair pair_from_json(const Json &j, const std::optional<Json> &complement_override)
{
    auto a = algebra_from_json(member(j, "algebra"));
    auto iso = vectors_from_json(a, member(j, "isotropy"), "isotropy");
    std::optional<std::vector<Vector>> complement;
    if (complement_override) {
        complement = vectors_from_json(a, *complement_override, "complement");
    } else if (j.contains("complement")) {
        complement = vectors_from_json(a, j.at("complement"), "complement");
    }
    if (!complement) {
        return TransitivePair::with_standard_complement(std::move(a), iso);
    }
    return TransitivePair(std::move(a), std::move(iso), std::move(*complement));
}

Json to_json(const TransitivePair &p)
{
    const auto &a = p.algebra();
    return {{"algebra", to_json(a)},
            {"isotropy", subspace_to_json(a, p.isotropy_basis())},
            {"complement", subspace_to_json(a, p.complement())}};
}

Json to_json(const Realisation &r)
{
    const auto &a = r.pair.algebra();
    Json images = Json::object();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto &X = r.images[i];
        Json comps = Json::object();
        for (std::size_t k = 0; k < X.n_vars(); ++k) {
            comps[r.variables[k]] = to_string(X.coefficient(k), r.variables);
        }
        images[a.name(i)] = {{"components", comps}, {"field", to_string(X, r.variables)}};
    }
    return {{"degree", r.degree},
            {"variables", r.variables},
            {"pair", to_json(r.pair)},
            {"images", images},
            {"kernel", subspace_to_json(a, r.kernel.basis())}};
}

Realisation realisation_from_json(const Json &j)
{
    auto pair = pair_from_json(member(j, "pair"));
    const auto &deg = member(j, "degree");
    if (!deg.is_number_integer() || deg.get<long long>() < 1 || deg.get<long long>() > 4096) {
        schema("degree must be a positive integer");
    }
    const int degree = deg.get<int>();
    const auto vars = member(j, "variables").get<std::vector<std::string>>();
    if (vars.size() != pair.codimension()) {
        schema("one variable per complement vector is required");
    }
    const auto &images = member(j, "images");
    const auto &a = pair.algebra();
    std::vector<TruncatedVectorField> fields;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!images.contains(a.name(i))) {
            schema("missing image of " + a.name(i));
        }
        const auto &comps = member(images.at(a.name(i)), "components");
        std::vector<TruncatedSeries> coeffs;
        for (const auto &v : vars) {
            const auto &c = member(comps, v.c_str());
            if (!c.is_string()) {
                schema("image components are series strings");
            }
            Bindings none;
            coeffs.push_back(evaluate_series(parse_expression(c.get<std::string>()), vars, degree, none));
        }
        fields.emplace_back(std::move(coeffs), degree);
    }
    Realisation r{std::move(pair), degree, vars, std::move(fields), Subspace()};
    r.kernel = largest_ideal_in(r.pair);
    return r;
}

Json to_json(const RealisationReport &report, const LieAlgebra &a)
{
    Json residuals = Json::array();
    for (const auto &res : report.residuals) {
        if (!res.vanishes) {
            residuals.push_back({{"lhs", a.name(res.lhs)},
                                 {"rhs", a.name(res.rhs)},
                                 {"checked_degree", res.checked_degree},
                                 {"residual", to_string(res.residual)}});
        }
    }
    return {{"ok", report.ok()},
            {"homomorphism", report.homomorphism},
            {"brackets_checked", report.residuals.size()},
            {"failing_brackets", residuals},
            {"isotropy_nonnegative", report.isotropy_nonnegative},
            {"isotropy_exact", report.isotropy_exact},
            {"transitive", report.transitive},
            {"kernel_is_largest_ideal", report.kernel_is_largest_ideal},
            {"kernel_matches_images", report.kernel_matches_images},
            {"kernel", subspace_to_json(a, report.truncated_kernel.basis())}};
}

Json to_json(const std::vector<LiftedImage> &lifted, const std::vector<std::string> &variables)
{
    Json out = Json::object();
    for (const auto &img : lifted) {
        Json comps = Json::object();
        for (std::size_t k = 0; k < img.coefficients.size(); ++k) {
            const auto &c = img.coefficients[k];
            Json entry{{"status", to_string(c.status)}, {"value", c.render(variables)}};
            if (!c.note.empty()) {
                entry["note"] = c.note;
            }
            comps[variables[k]] = entry;
        }
        out[img.name] = comps;
    }
    return out;
}

} // namespace lierealise
