#include <lierealise/error.hpp>
#include <lierealise/jets.hpp>

#include <algorithm>
#include <sstream>

namespace lierealise {

namespace {

void trim(JetMonomial &m)
{
    while (!m.empty() && m.back() == 0) {
        m.pop_back();
    }
}

JetMonomial times_jet(JetMonomial m, unsigned i, int power = 1)
{
    if (m.size() < i) {
        m.resize(i, 0);
    }
    m[i - 1] = static_cast<unsigned>(static_cast<int>(m[i - 1]) + power);
    trim(m);
    return m;
}

TruncatedSeries zero_series(int degree) { return TruncatedSeries(2, degree); }

} // namespace

JetExpression::JetExpression(int degree) : degree_(std::max(degree, -1)) {}

JetExpression JetExpression::from_series(const TruncatedSeries &f)
{
    if (f.n_vars() != 2) {
        throw Error(errc::dimension_mismatch, "jet coefficients are series in (x, y)");
    }
    JetExpression e(f.degree());
    e.add_term({}, f);
    return e;
}

JetExpression JetExpression::jet_variable(unsigned i, int degree)
{
    if (i == 0) {
        throw Error(errc::invalid_argument, "jet variables start at y'");
    }
    JetExpression e(degree);
    e.add_term(times_jet({}, i), TruncatedSeries::constant(2, degree, 1));
    return e;
}

unsigned JetExpression::jet_order() const
{
    std::size_t k = 0;
    for (const auto &[m, c] : terms_) {
        k = std::max(k, m.size());
    }
    return static_cast<unsigned>(k);
}

TruncatedSeries JetExpression::coefficient(const JetMonomial &m) const
{
    JetMonomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? zero_series(degree_) : it->second;
}

void JetExpression::add_term(const JetMonomial &m, const TruncatedSeries &c)
{
    if (c.n_vars() != 2) {
        throw Error(errc::dimension_mismatch, "jet coefficients are series in (x, y)");
    }
    JetMonomial key = m;
    trim(key);
    if (c.degree() < degree_) {
        *this = truncated(c.degree());
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        auto t = c.truncated(degree_);
        if (!t.is_zero()) {
            terms_.emplace(std::move(key), std::move(t));
        }
        return;
    }
    it->second += c.truncated(degree_);
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

JetExpression JetExpression::truncated(int degree) const
{
    JetExpression r(std::min(degree, degree_));
    for (const auto &[m, c] : terms_) {
        auto t = c.truncated(r.degree_);
        if (!t.is_zero()) {
            r.terms_.emplace(m, std::move(t));
        }
    }
    return r;
}

JetExpression &JetExpression::operator+=(const JetExpression &o)
{
    if (o.degree_ < degree_) {
        *this = truncated(o.degree_);
    }
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

JetExpression &JetExpression::operator-=(const JetExpression &o)
{
    return *this += Rational(-1) * o;
}

JetExpression operator*(const Rational &c, const JetExpression &a)
{
    JetExpression r(a.degree_);
    if (c != 0) {
        for (const auto &[m, s] : a.terms_) {
            r.terms_.emplace(m, c * s);
        }
    }
    return r;
}

JetExpression operator*(const JetExpression &a, const JetExpression &b)
{
    JetExpression r(std::min(a.degree_, b.degree_));
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            JetMonomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) {
                m[i] += ma[i];
            }
            for (std::size_t i = 0; i < mb.size(); ++i) {
                m[i] += mb[i];
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::string jet_name(unsigned i)
{
    if (i == 0) {
        return "y";
    }
    if (i <= 3) {
        return "y" + std::string(i, '\'');
    }
    return "y'{" + std::to_string(i) + "}";
}

std::string to_string(const JetExpression &e)
{
    if (e.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : e.terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (any) {
                mono << '*';
            }
            mono << jet_name(static_cast<unsigned>(i + 1));
            if (m[i] > 1) {
                mono << '^' << m[i];
            }
            any = true;
        }
        if (!any) {
            os << '(' << to_string(c) << ')';
        } else if (c == TruncatedSeries::constant(2, c.degree(), 1)) {
            os << mono.str();
        } else {
            os << '(' << to_string(c) << ")*" << mono.str();
        }
    }
    return os.str();
}

JetExpression total_derivative(const JetExpression &e)
{
    JetExpression r(e.degree() - 1);
    for (const auto &[m, c] : e.terms()) {
        r.add_term(m, c.derivative(0));
        r.add_term(times_jet(m, 1), c.derivative(1));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            const auto k = static_cast<unsigned>(i + 1);
            auto lowered = times_jet(m, k, -1);
            r.add_term(times_jet(lowered, k + 1), Rational(m[i]) * c);
        }
    }
    return r;
}

Prolongation prolong(const TruncatedVectorField &X, unsigned k)
{
    if (X.n_vars() != 2) {
        throw Error(errc::dimension_mismatch, "prolongation needs a field in the plane");
    }
    const auto &f = X.coefficient(0);
    const auto &g = X.coefficient(1);
    JetExpression q = JetExpression::from_series(-f.derivative(0));
    q.add_term({1}, -f.derivative(1));
    Prolongation pr{q, {JetExpression::from_series(g)}};
    for (unsigned i = 0; i < k; ++i) {
        pr.images.push_back(total_derivative(pr.images.back()) + q * JetExpression::jet_variable(i + 1, X.degree()));
    }
    return pr;
}

JetExpression apply_prolonged(const TruncatedVectorField &X, const Prolongation &pr, const JetExpression &e)
{
    const auto &f = X.coefficient(0);
    const auto &g = X.coefficient(1);
    JetExpression r(e.degree() - 1);
    for (const auto &[m, c] : e.terms()) {
        r.add_term(m, f * c.derivative(0) + g * c.derivative(1));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            const auto k = static_cast<unsigned>(i + 1);
            if (k >= pr.images.size()) {
                throw Error(errc::invalid_argument, "prolongation order too small for the expression");
            }
            JetExpression rest(e.degree());
            rest.add_term(times_jet(m, k, -1), Rational(m[i]) * c);
            r += rest * pr.images[k];
        }
    }
    return r;
}

namespace {

JetExpression jet_of(const Expr &e, int degree, const Bindings &b)
{
    using K = ExprNode::Kind;
    static const std::vector<std::string> xy{"x", "y"};
    switch (e->kind) {
    case K::jet:
        if (e->name != "y") {
            throw Error(errc::parse_error, "only derivatives of y are jet variables");
        }
        return JetExpression::jet_variable(e->jet_order, degree);
    case K::neg:
        return Rational(-1) * jet_of(e->args[0], degree, b);
    case K::add:
        return jet_of(e->args[0], degree, b) + jet_of(e->args[1], degree, b);
    case K::sub:
        return jet_of(e->args[0], degree, b) - jet_of(e->args[1], degree, b);
    case K::mul:
        return jet_of(e->args[0], degree, b) * jet_of(e->args[1], degree, b);
    case K::div: {
        auto d = evaluate_constant(e->args[1], b);
        if (!d || *d == 0) {
            throw Error(errc::parse_error, "only division by nonzero constants is supported");
        }
        return (1 / *d) * jet_of(e->args[0], degree, b);
    }
    case K::pow: {
        auto ex = evaluate_constant(e->args[1], b);
        if (!ex || !is_integer(*ex) || *ex < 0 || *ex > 64) {
            throw Error(errc::parse_error, "jet powers need a constant non-negative integer exponent");
        }
        auto base = jet_of(e->args[0], degree, b);
        auto r = JetExpression::from_series(TruncatedSeries::constant(2, degree, 1));
        for (long i = 0; i < ex->get_num().get_si(); ++i) {
            r = r * base;
        }
        return r;
    }
    case K::partial:
        throw Error(errc::parse_error, "derivations are not allowed in an equation");
    default:
        return JetExpression::from_series(evaluate_series(e, xy, degree, b));
    }
}

} // namespace

ExplicitOde ExplicitOde::with_degree(int degree) const
{
    return ExplicitOde{order, jet_of(source, degree, {}), source};
}

ExplicitOde parse_ode(std::string_view text, int degree)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
        throw Error(errc::parse_error, "an equation needs exactly one '='");
    }
    const auto lhs = parse_expression(text.substr(0, eq));
    if (lhs->kind != ExprNode::Kind::jet || lhs->name != "y") {
        throw Error(errc::parse_error, "left-hand side must be a derivative y^(m)");
    }
    const unsigned m = lhs->jet_order;
    if (m < 2) {
        throw Error(errc::parse_error, "only equations of order at least 2 are supported");
    }
    auto rhs = parse_expression(text.substr(eq + 1));
    ExplicitOde ode{m, jet_of(rhs, degree, {}), rhs};
    if (ode.rhs.jet_order() >= m) {
        throw Error(errc::parse_error, "right-hand side must not involve " + jet_name(m) + " or higher");
    }
    return ode;
}

std::string to_string(const ExplicitOde &ode)
{
    return jet_name(ode.order) + " = " + to_string(ode.rhs);
}

namespace {

// Replace every power of y^(m) by the same power of q, to a fixpoint.
JetExpression substitute(const JetExpression &e, unsigned m, const JetExpression &q)
{
    JetExpression cur = e;
    for (;;) {
        bool changed = false;
        JetExpression next(cur.degree());
        for (const auto &[mono, c] : cur.terms()) {
            if (mono.size() < m || mono[m - 1] == 0) {
                next.add_term(mono, c);
                continue;
            }
            changed = true;
            const unsigned p = mono[m - 1];
            JetMonomial rest = mono;
            rest[m - 1] = 0;
            JetExpression t(cur.degree());
            t.add_term(rest, c);
            for (unsigned i = 0; i < p; ++i) {
                t = t * q;
            }
            next += t;
        }
        if (!changed) {
            return next;
        }
        cur = std::move(next);
    }
}

} // namespace

JetExpression symmetry_residual(const TruncatedVectorField &X, const ExplicitOde &ode)
{
    const auto pr = prolong(X, ode.order);
    auto r = pr.images[ode.order] - apply_prolonged(X, pr, ode.rhs);
    return substitute(r, ode.order, ode.rhs);
}

namespace {

std::vector<TruncatedVectorField> ansatz(unsigned d, int degree)
{
    std::vector<TruncatedVectorField> out;
    for (std::size_t comp = 0; comp < 2; ++comp) {
        for (unsigned total = 0; total <= d; ++total) {
            for (unsigned a = total + 1; a-- > 0;) {
                std::vector<TruncatedSeries> c{TruncatedSeries(2, degree), TruncatedSeries(2, degree)};
                c[comp] = TruncatedSeries::monomial(2, degree, {a, total - a});
                out.emplace_back(std::move(c), degree);
            }
        }
    }
    return out;
}

struct Solved {
    std::vector<TruncatedVectorField> unknowns;
    Matrix equations;
    std::vector<TruncatedVectorField> solutions;
    int reliable;
};

Solved solve_ansatz(const ExplicitOde &ode, unsigned d)
{
    int q = 0;
    for (const auto &[m, c] : ode.rhs.terms()) {
        q = std::max(q, c.max_term_degree());
    }
    const int work = static_cast<int>(d) + q + static_cast<int>(ode.order) + 2;
    const auto eq = ode.with_degree(work);
    Solved s;
    s.unknowns = ansatz(d, work);
    std::vector<JetExpression> residuals;
    s.reliable = work;
    for (const auto &u : s.unknowns) {
        residuals.push_back(symmetry_residual(u, eq));
        s.reliable = std::min(s.reliable, residuals.back().degree());
    }
    std::map<std::pair<JetMonomial, Exponent>, std::size_t> rows;
    for (const auto &r : residuals) {
        for (const auto &[m, c] : r.terms()) {
            for (const auto &[e, v] : c.terms()) {
                if (static_cast<int>(total_degree(e)) <= s.reliable) {
                    rows.try_emplace({m, e}, rows.size());
                }
            }
        }
    }
    s.equations = Matrix(rows.size(), s.unknowns.size());
    for (std::size_t k = 0; k < residuals.size(); ++k) {
        for (const auto &[m, c] : residuals[k].terms()) {
            for (const auto &[e, v] : c.terms()) {
                if (auto it = rows.find({m, e}); it != rows.end()) {
                    s.equations(it->second, k) = v;
                }
            }
        }
    }
    for (const auto &v : nullspace(s.equations)) {
        auto f = TruncatedVectorField::zero(2, work);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] != 0) {
                f += v[k] * s.unknowns[k];
            }
        }
        s.solutions.push_back(std::move(f));
    }
    return s;
}

} // namespace

DeterminingSystem determining_system(const ExplicitOde &ode, unsigned ansatz_degree)
{
    if (ansatz_degree < 1) {
        throw Error(errc::invalid_argument, "ansatz degree must be at least 1");
    }
    auto s = solve_ansatz(ode, ansatz_degree);
    const auto next = solve_ansatz(ode, ansatz_degree + 1);
    DeterminingSystem ds{ansatz_degree, s.reliable, std::move(s.unknowns), std::move(s.equations),
                         std::move(s.solutions), next.solutions.size(), false};
    ds.stabilized = ds.next_dimension == ds.solutions.size();
    return ds;
}

std::vector<bool> check_symmetries(const std::vector<TruncatedVectorField> &fields, const ExplicitOde &ode)
{
    std::vector<bool> out;
    for (const auto &f : fields) {
        out.push_back(symmetry_residual(f, ode).is_zero());
    }
    return out;
}

} // namespace lierealise
