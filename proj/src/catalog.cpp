#include <lierealise/catalog.hpp>
#include <lierealise/catalog_data.hpp>
#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lierealise {

namespace {

using nlohmann::json;

ParameterSpec::Kind parse_kind(const std::string &s)
{
    if (s == "integer") {
        return ParameterSpec::Kind::integer;
    }
    if (s == "rational") {
        return ParameterSpec::Kind::rational;
    }
    if (s == "alpha_set") {
        return ParameterSpec::Kind::alpha_set;
    }
    throw Error(errc::schema_violation, "unknown parameter kind " + s);
}

std::string alpha_set_text(const std::vector<AlphaMultiplicity> &alphas)
{
    std::string out;
    for (const auto &a : alphas) {
        if (!out.empty()) {
            out += ';';
        }
        out += to_string(a.alpha) + ":" + std::to_string(a.r);
    }
    return out;
}

ParameterSpec parse_spec(const json &j)
{
    ParameterSpec s;
    s.name = j.at("name").get<std::string>();
    s.kind = parse_kind(j.at("kind").get<std::string>());
    if (j.contains("min")) {
        s.min = j.at("min").get<long>();
    }
    s.nonzero = j.value("nonzero", false);
    const auto &d = j.at("default");
    if (s.kind == ParameterSpec::Kind::alpha_set) {
        std::vector<AlphaMultiplicity> alphas;
        for (const auto &a : d) {
            alphas.push_back({parse_rational(a.at("alpha").get<std::string>()), a.at("r").get<unsigned>()});
        }
        s.default_text = alpha_set_text(alphas);
    } else if (d.is_string()) {
        s.default_text = d.get<std::string>();
    } else {
        s.default_text = std::to_string(d.get<long>());
    }
    return s;
}

GeneratorTemplate parse_template(const json &j)
{
    GeneratorTemplate t;
    if (j.is_string()) {
        t.text = j.get<std::string>();
        return t;
    }
    t.text = j.at("template").get<std::string>();
    t.index = j.at("index").get<std::string>();
    t.from = j.at("from").get<std::string>();
    t.to = j.at("to").get<std::string>();
    t.for_each_alpha = j.value("for_each_alpha", false);
    return t;
}

std::vector<CatalogEntry> load_catalog()
{
    const auto doc = json::parse(kCatalogJson);
    std::vector<CatalogEntry> out;
    for (const auto &j : doc.at("entries")) {
        CatalogEntry e;
        e.id = j.at("id").get<std::string>();
        e.table = j.at("table").get<int>();
        e.type = j.at("type").get<std::string>();
        if (j.contains("case")) {
            e.case_number = j.at("case").get<int>();
        }
        e.labels = j.at("labels").get<std::vector<std::string>>();
        for (const auto &p : j.at("params")) {
            e.params.push_back(parse_spec(p));
        }
        for (const auto &g : j.at("generators")) {
            e.generators.push_back(parse_template(g));
        }
        if (j.contains("equivalent_to")) {
            const auto &x = j.at("equivalent_to");
            e.equivalent_to = CrossReference{x.at("id").get<std::string>(), x.value("params", ""),
                                             x.value("when", ""), x.value("note", "")};
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string trimmed(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trimmed(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::vector<AlphaMultiplicity> parse_alpha_set(std::string_view text)
{
    std::vector<AlphaMultiplicity> out;
    if (trimmed(text).empty()) {
        return out;
    }
    for (const auto &item : split(text, ';')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            throw Error(errc::invalid_argument, "alpha set items are written alpha:r, got '" + item + "'");
        }
        const Rational r = parse_rational(parts[1]);
        if (!is_integer(r) || r < 0 || r > 64) {
            throw Error(errc::invalid_argument, "multiplicity r_alpha must be an integer in 0..64");
        }
        out.push_back({parse_rational(parts[0]), static_cast<unsigned>(r.get_num().get_ui())});
    }
    return out;
}

void set_value(const ParameterSpec &spec, CatalogParams &params, std::string_view text)
{
    if (spec.kind == ParameterSpec::Kind::alpha_set) {
        params.alphas = parse_alpha_set(text);
    } else {
        params.values[spec.name] = parse_rational(text);
    }
}

// Replaces bound identifiers by their values.
std::string substitute(const std::string &text, const Bindings &b)
{
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            const std::string id = text.substr(i, j - i);
            auto it = b.find(id);
            if (it == b.end()) {
                out += id;
            } else if (is_integer(it->second) && it->second >= 0) {
                out += to_string(it->second);
            } else {
                out += "(" + to_string(it->second) + ")";
            }
            i = j;
        } else {
            out += text[i++];
        }
    }
    return out;
}

long bound_integer(const std::string &text, const Bindings &b)
{
    const auto v = evaluate_constant(parse_expression(text), b);
    if (!v || !is_integer(*v)) {
        throw Error(errc::schema_violation, "range bound '" + text + "' is not an integer");
    }
    return v->get_num().get_si();
}

struct Expanded {
    std::vector<std::string> texts;
    std::vector<TruncatedVectorField> fields;
};

Expanded expand(const CatalogEntry &e, const CatalogParams &params, int degree)
{
    Bindings base;
    for (const auto &[k, v] : params.values) {
        base[k] = v;
    }
    Expanded out;
    auto emit = [&](const std::string &text, const Bindings &b) {
        out.texts.push_back(substitute(text, b));
        out.fields.push_back(evaluate_field(parse_expression(text), {"x", "y"}, degree, b));
    };
    for (const auto &g : e.generators) {
        if (!g.index) {
            emit(g.text, base);
            continue;
        }
        std::vector<Bindings> scopes;
        if (g.for_each_alpha) {
            for (const auto &a : params.alphas) {
                Bindings b = base;
                b["alpha"] = a.alpha;
                b["r_alpha"] = Rational(a.r);
                scopes.push_back(std::move(b));
            }
        } else {
            scopes.push_back(base);
        }
        for (auto &b : scopes) {
            const long from = bound_integer(g.from, b);
            const long to = bound_integer(g.to, b);
            for (long i = from; i <= to; ++i) {
                b[*g.index] = Rational(i);
                emit(g.text, b);
            }
        }
    }
    return out;
}

using Key = std::pair<std::size_t, Exponent>;

std::map<Key, Rational> flatten(const TruncatedVectorField &X, int d)
{
    std::map<Key, Rational> out;
    for (std::size_t i = 0; i < X.n_vars(); ++i) {
        for (const auto &[e, c] : X.coefficient(i).terms()) {
            if (static_cast<int>(total_degree(e)) <= d) {
                out.emplace(Key{i, e}, c);
            }
        }
    }
    return out;
}

int common_degree(const std::vector<TruncatedVectorField> &fields)
{
    int d = fields.empty() ? -1 : fields.front().degree();
    for (const auto &f : fields) {
        d = std::min(d, f.degree());
    }
    return d;
}

// Coordinates of `target` in terms of the flattened generators, if any.
class SpanSolver {
public:
    SpanSolver(const std::vector<TruncatedVectorField> &fields, int d) : d_(d), count_(fields.size())
    {
        std::vector<std::map<Key, Rational>> flat;
        for (const auto &f : fields) {
            flat.push_back(flatten(f, d));
            for (const auto &[k, c] : flat.back()) {
                rows_.emplace(k, rows_.size());
            }
        }
        m_ = Matrix(rows_.size(), count_);
        for (std::size_t j = 0; j < count_; ++j) {
            for (const auto &[k, c] : flat[j]) {
                m_(rows_.at(k), j) = c;
            }
        }
    }

    std::size_t rank() const { return lierealise::rank(m_); }

    std::optional<Vector> coordinates(const TruncatedVectorField &target) const
    {
        Vector b = zero_vector(rows_.size());
        for (const auto &[k, c] : flatten(target, d_)) {
            auto it = rows_.find(k);
            if (it == rows_.end()) {
                return std::nullopt;
            }
            b[it->second] = c;
        }
        return solve(m_, b);
    }

private:
    int d_;
    std::size_t count_;
    std::map<Key, std::size_t> rows_;
    Matrix m_;
};

std::vector<std::string> generator_names(std::size_t k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back("X" + std::to_string(i + 1));
    }
    return names;
}

int working_degree(const CatalogEntry &e, const CatalogParams &params, int degree)
{
    // Count first so the expansion degree can depend on it.
    std::size_t count = 0;
    for (const auto &g : e.generators) {
        if (!g.index) {
            ++count;
            continue;
        }
        if (g.for_each_alpha) {
            for (const auto &a : params.alphas) {
                count += a.r + 1;
            }
        } else {
            Bindings b;
            for (const auto &[k, v] : params.values) {
                b[k] = v;
            }
            const long span = bound_integer(g.to, b) - bound_integer(g.from, b) + 1;
            count += static_cast<std::size_t>(std::max(span, 0L));
        }
    }
    return std::max(degree, static_cast<int>(count) + 2);
}

} // namespace

bool CatalogEntry::has_exp() const
{
    return std::any_of(generators.begin(), generators.end(),
                       [](const GeneratorTemplate &g) { return g.text.find("exp") != std::string::npos; });
}

const std::vector<CatalogEntry> &catalog()
{
    static const std::vector<CatalogEntry> entries = load_catalog();
    return entries;
}

const CatalogEntry &find_entry(std::string_view id)
{
    for (const auto &e : catalog()) {
        if (e.id == id) {
            return e;
        }
    }
    throw Error(errc::unknown_entry, "no catalog entry with id " + std::string(id));
}

CatalogParams default_params(const CatalogEntry &entry)
{
    CatalogParams p;
    for (const auto &s : entry.params) {
        set_value(s, p, s.default_text);
    }
    return p;
}

void validate_params(const CatalogEntry &entry, const CatalogParams &params)
{
    for (const auto &[k, v] : params.values) {
        const bool declared = std::any_of(entry.params.begin(), entry.params.end(), [&](const ParameterSpec &s) {
            return s.name == k && s.kind != ParameterSpec::Kind::alpha_set;
        });
        if (!declared) {
            throw Error(errc::invalid_argument, entry.id + " has no parameter " + k);
        }
    }
    bool wants_alphas = false;
    for (const auto &s : entry.params) {
        if (s.kind == ParameterSpec::Kind::alpha_set) {
            wants_alphas = true;
            if (params.alphas.empty()) {
                throw Error(errc::invalid_argument, s.name + " must be a non-empty set");
            }
            std::set<Rational> seen;
            for (const auto &a : params.alphas) {
                if (!seen.insert(a.alpha).second) {
                    throw Error(errc::invalid_argument, "alpha " + to_string(a.alpha) + " listed twice");
                }
            }
            continue;
        }
        auto it = params.values.find(s.name);
        if (it == params.values.end()) {
            throw Error(errc::invalid_argument, "missing parameter " + s.name);
        }
        const Rational &v = it->second;
        if (s.kind == ParameterSpec::Kind::integer) {
            if (!is_integer(v) || v > 64) {
                throw Error(errc::invalid_argument, s.name + " must be an integer no larger than 64");
            }
        }
        if (s.min && v < *s.min) {
            throw Error(errc::invalid_argument, s.name + " must be at least " + std::to_string(*s.min));
        }
        if (s.nonzero && v == 0) {
            throw Error(errc::invalid_argument, s.name + " must be non-zero");
        }
    }
    if (!wants_alphas && !params.alphas.empty()) {
        throw Error(errc::invalid_argument, entry.id + " takes no alpha set");
    }
}

CatalogParams parse_params(const CatalogEntry &entry, std::string_view text)
{
    CatalogParams p = default_params(entry);
    if (trimmed(text).empty()) {
        validate_params(entry, p);
        return p;
    }
    for (const auto &item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw Error(errc::invalid_argument, "parameters are written key=value, got '" + item + "'");
        }
        const auto key = trimmed(std::string_view(item).substr(0, eq));
        const auto value = std::string_view(item).substr(eq + 1);
        auto it = std::find_if(entry.params.begin(), entry.params.end(),
                               [&](const ParameterSpec &s) { return s.name == key; });
        if (it == entry.params.end()) {
            throw Error(errc::invalid_argument, entry.id + " has no parameter " + key);
        }
        set_value(*it, p, value);
    }
    validate_params(entry, p);
    return p;
}

std::string to_string(const CatalogEntry &entry, const CatalogParams &params)
{
    std::string out;
    for (const auto &s : entry.params) {
        if (!out.empty()) {
            out += ',';
        }
        out += s.name + "=";
        if (s.kind == ParameterSpec::Kind::alpha_set) {
            out += alpha_set_text(params.alphas);
        } else if (auto it = params.values.find(s.name); it != params.values.end()) {
            out += to_string(it->second);
        }
    }
    return out;
}

FieldAbstraction abstract_fields(const std::vector<TruncatedVectorField> &fields,
                                 const std::vector<std::string> &names)
{
    if (fields.empty() || names.size() != fields.size()) {
        throw Error(errc::dimension_mismatch, "one name per field is required");
    }
    FieldAbstraction a;
    a.n_vars = fields.front().n_vars();
    for (const auto &f : fields) {
        if (f.n_vars() != a.n_vars) {
            throw Error(errc::dimension_mismatch, "fields live in different dimensions");
        }
    }
    const std::size_t k = fields.size();
    // Brackets are reliable one degree below their arguments.
    a.checked_degree = common_degree(fields) - 1;
    const SpanSolver span(fields, a.checked_degree);
    a.independent = span.rank() == k;

    Matrix values(a.n_vars, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < a.n_vars; ++i) {
            values(i, j) = fields[j].coefficient(i).constant_term();
        }
    }
    a.value_rank = rank(values);
    a.isotropy = nullspace(values);
    {
        std::vector<Vector> chosen;
        for (std::size_t j = 0; j < k; ++j) {
            chosen.push_back(values.column(j));
            if (rank(Matrix::from_rows(chosen, a.n_vars)) == chosen.size()) {
                a.complement_indices.push_back(j);
            } else {
                chosen.pop_back();
            }
        }
    }
    if (!a.independent) {
        return a;
    }

    StructureConstants sc(names);
    a.closed = true;
    for (std::size_t i = 0; i < k && a.closed; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto c = span.coordinates(bracket(fields[i], fields[j]));
            if (!c) {
                a.closed = false;
                a.open_bracket = std::pair{i, j};
                break;
            }
            sc.set(i, j, std::move(*c));
        }
    }
    if (!a.closed) {
        return a;
    }
    a.jacobi = check_jacobi(sc);
    a.constants = sc;
    if (a.jacobi.holds) {
        LieAlgebra g(sc);
        std::vector<Vector> complement;
        for (auto j : a.complement_indices) {
            complement.push_back(g.basis_vector(j));
        }
        a.pair = TransitivePair(g, a.isotropy, complement);
    }
    return a;
}

std::optional<Vector> span_coordinates(const std::vector<TruncatedVectorField> &basis, const TruncatedVectorField &X,
                                       int d)
{
    return SpanSolver(basis, d).coordinates(X);
}

Instance instantiate(std::string_view id, const CatalogParams &params, int degree)
{
    if (degree < 1) {
        throw Error(errc::invalid_argument, "degree must be at least 1");
    }
    const auto &entry = find_entry(id);
    validate_params(entry, params);
    const int w = working_degree(entry, params, degree);
    auto ex = expand(entry, params, w);
    auto names = generator_names(ex.fields.size());
    auto a = abstract_fields(ex.fields, names);
    if (!a.independent) {
        throw Error(errc::bracket_not_closed, entry.id + ": generators are linearly dependent");
    }
    if (!a.closed) {
        throw Error(errc::bracket_not_closed, entry.id + ": bracket of " + ex.texts[a.open_bracket->first] +
                                                  " and " + ex.texts[a.open_bracket->second] +
                                                  " leaves the span");
    }
    if (!a.pair) {
        throw Error(errc::not_a_lie_algebra, entry.id + ": extracted constants violate the Jacobi identity");
    }
    return Instance{entry.id,   params,   w, std::move(names), std::move(ex.texts), std::move(ex.fields),
                    a.pair->algebra(), *a.pair};
}

Instance instantiate(std::string_view id, int degree)
{
    return instantiate(id, default_params(find_entry(id)), degree);
}

EntryReport verify_fields(const std::vector<TruncatedVectorField> &fields)
{
    EntryReport r;
    r.generator_count = fields.size();
    if (fields.empty()) {
        r.failures.push_back("no generators");
        return r;
    }
    const auto a = abstract_fields(fields, generator_names(fields.size()));
    r.checked_degree = a.checked_degree;
    r.independent = a.independent;
    r.closed = a.closed;
    r.transitive = a.transitive();
    r.jacobi = a.closed && a.jacobi.holds;
    if (a.pair) {
        r.dimension = a.pair->algebra().dim();
    }
    if (!r.independent) {
        r.failures.push_back("generators are linearly dependent");
    } else if (!r.closed) {
        r.failures.push_back("bracket of generators " + std::to_string(a.open_bracket->first + 1) + " and " +
                             std::to_string(a.open_bracket->second + 1) + " leaves the span");
    } else if (!r.jacobi) {
        r.failures.push_back("extracted constants violate the Jacobi identity");
    }
    if (!r.transitive) {
        r.failures.push_back("values at the origin span a space of dimension " + std::to_string(a.value_rank));
    }
    if (r.ok() && r.dimension != r.generator_count) {
        r.failures.push_back("dimension differs from the generator count");
    }
    return r;
}

bool table1_chain_holds(int degree)
{
    const auto g5 = expand(find_entry("T1.(5)"), {}, degree).fields;
    const auto g6 = expand(find_entry("T1.(6)"), {}, degree).fields;
    const auto g8 = expand(find_entry("T1.(8)"), {}, degree).fields;
    auto inside = [&](const std::vector<TruncatedVectorField> &small, const std::vector<TruncatedVectorField> &big) {
        const SpanSolver span(big, degree);
        return std::all_of(small.begin(), small.end(),
                           [&](const TruncatedVectorField &f) { return span.coordinates(f).has_value(); });
    };
    return inside(g5, g6) && inside(g6, g8);
}

EntryReport verify_entry(std::string_view id, const CatalogParams &params, int degree)
{
    const auto &entry = find_entry(id);
    validate_params(entry, params);
    const int w = working_degree(entry, params, std::max(degree, 1));
    EntryReport r = verify_fields(expand(entry, params, w).fields);
    r.id = entry.id;
    if (entry.table == 1) {
        r.containment = table1_chain_holds(w);
        if (!*r.containment) {
            r.failures.push_back("Table 1 chain (5) ⊂ (6) ⊂ (8) is broken");
        }
    }
    return r;
}

std::vector<CatalogParams> parameter_sweep(const CatalogEntry &entry)
{
    std::vector<CatalogParams> out{CatalogParams{}};
    for (const auto &s : entry.params) {
        std::vector<CatalogParams> next;
        for (const auto &p : out) {
            auto with = [&](auto &&mutate) {
                CatalogParams q = p;
                mutate(q);
                next.push_back(std::move(q));
            };
            switch (s.kind) {
            case ParameterSpec::Kind::integer:
                for (long r = s.min.value_or(0); r <= 3; ++r) {
                    with([&](CatalogParams &q) { q.values[s.name] = Rational(r); });
                }
                break;
            case ParameterSpec::Kind::rational:
                for (const char *v : {"1", "-1", "2", "1/2"}) {
                    with([&](CatalogParams &q) { q.values[s.name] = parse_rational(v); });
                }
                break;
            case ParameterSpec::Kind::alpha_set: {
                const std::vector<Rational> alphas{0, 1, -1, Rational(1, 2)};
                for (const auto &a : alphas) {
                    for (unsigned r = 0; r <= 3; ++r) {
                        with([&](CatalogParams &q) { q.alphas = {{a, r}}; });
                    }
                }
                const std::vector<std::pair<unsigned, unsigned>> mult{{0, 0}, {1, 2}, {3, 0}};
                for (std::size_t i = 0; i < alphas.size(); ++i) {
                    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
                        for (const auto &[ri, rj] : mult) {
                            with([&](CatalogParams &q) { q.alphas = {{alphas[i], ri}, {alphas[j], rj}}; });
                        }
                    }
                }
                break;
            }
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<OneVarFixture> one_var_classification_fixtures(int degree)
{
    std::vector<std::vector<std::string>> families{{"p"}, {"p", "x*p"}, {"p", "x*p", "x^2*p"}, {"x*p"}};
    for (int i = 2; i <= 4; ++i) {
        families.push_back({"x*p", "x^" + std::to_string(i) + "*p"});
    }
    std::vector<OneVarFixture> out;
    for (const auto &texts : families) {
        OneVarFixture f;
        f.texts = texts;
        f.name = "<";
        for (const auto &t : texts) {
            f.name += (f.name.size() > 1 ? ", " : "") + t;
            f.fields.push_back(parse_field(t, 1, degree));
        }
        f.name += ">";
        f.transitive = std::any_of(f.fields.begin(), f.fields.end(), [](const TruncatedVectorField &X) {
            return X.coefficient(0).constant_term() != 0;
        });
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<bool> check_table_entry_symmetry(std::string_view id, const CatalogParams &params,
                                             const ExplicitOde &ode)
{
    const auto &entry = find_entry(id);
    if (entry.has_exp()) {
        throw Error(errc::invalid_argument, entry.id + " has non-polynomial generators");
    }
    validate_params(entry, params);
    const int d = std::max(ode.rhs.degree(), 1);
    return check_symmetries(expand(entry, params, d).fields, ode);
}

} // namespace lierealise
