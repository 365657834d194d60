#include <lierealise/error.hpp>
#include <lierealise/realise.hpp>
#include <lierealise/recurrence.hpp>
#include <lierealise/uea.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lierealise {

namespace {

// All exponents in n variables of total degree <= d, in graded order.
std::vector<Exponent> multi_indices(std::size_t n, int d)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    // Enumerate each total degree separately, lexicographically descending.
    for (int total = 0; total <= d; ++total) {
        std::vector<Exponent> level;
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
            if (i + 1 == n) {
                e[i] = left;
                level.push_back(e);
                return;
            }
            for (unsigned k = left + 1; k-- > 0;) {
                e[i] = k;
                rec(i + 1, left - k);
            }
        };
        if (n == 0) {
            if (total == 0) {
                out.push_back({});
            }
            continue;
        }
        rec(0, static_cast<unsigned>(total));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Integer multi_factorial(const Exponent &e)
{
    Integer r = 1;
    for (auto v : e) {
        r *= factorial(v);
    }
    return r;
}

// Exact polynomial copy with truncation degree equal to its top degree.
TruncatedSeries as_polynomial(const TruncatedSeries &f)
{
    TruncatedSeries p(f.n_vars(), std::max(f.max_term_degree(), 0));
    for (const auto &[e, c] : f.terms()) {
        p.add_term(e, c);
    }
    return p;
}

TruncatedSeries at_degree(const TruncatedSeries &poly, int degree)
{
    TruncatedSeries p(poly.n_vars(), degree);
    for (const auto &[e, c] : poly.terms()) {
        p.add_term(e, c);
    }
    return p;
}

Matrix coefficient_matrix(const Realisation &r, int degree)
{
    const auto &g = r.pair.algebra();
    const auto n = r.variables.size();
    const auto alphas = multi_indices(n, degree);
    Matrix m(n * alphas.size(), g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                m(i * alphas.size() + a, k) = r.images[k].coefficient(i).coefficient(alphas[a]);
            }
        }
    }
    return m;
}

} // namespace

const TruncatedVectorField &Realisation::image(const std::string &name) const
{
    return images.at(pair.algebra().index_of(name));
}

TruncatedVectorField Realisation::image_of(const Vector &x) const
{
    const auto &g = pair.algebra();
    if (x.size() != g.dim()) {
        throw Error(errc::dimension_mismatch, "element has wrong dimension");
    }
    auto out = TruncatedVectorField::zero(variables.size(), degree);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        if (x[k] != 0) {
            out += x[k] * images[k];
        }
    }
    return out;
}

Realisation realise(const TransitivePair &p, int degree)
{
    if (degree < 1) {
        throw Error(errc::invalid_argument, "truncation degree must be at least 1");
    }
    const auto &g = p.algebra();
    const auto n = p.codimension();
    const auto m = g.dim();
    const auto iso = m - n;
    const PbwAlgebra U = PbwAlgebra::adapted(p);
    const auto alphas = multi_indices(n, degree);

    // phi(b_j) for the adapted basis b_j.
    std::vector<std::vector<TruncatedSeries>> adapted(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            adapted[j].emplace_back(n, degree);
        }
    }
    for (const auto &alpha : alphas) {
        PbwMonomial mono(m, 0);
        std::copy(alpha.begin(), alpha.end(), mono.begin() + static_cast<std::ptrdiff_t>(iso));
        const auto y_alpha = UeaElement::monomial(mono);
        const Rational scale(1, multi_factorial(alpha));
        for (std::size_t j = 0; j < m; ++j) {
            const auto u = U.right_multiply(y_alpha, j, true);
            if (u.is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto c = U.linear_coefficient(u, i);
                if (c != 0) {
                    adapted[j][i].add_term(alpha, c * scale);
                }
            }
        }
    }

    // Original basis vectors in adapted coordinates.
    const auto basis = p.adapted_basis();
    Matrix B(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            B(k, j) = basis[j][k];
        }
    }
    const auto Binv = inverse(B);
    if (!Binv) {
        throw Error(errc::malformed_pair, "isotropy and complement do not form a basis");
    }

    Realisation r{p, degree, default_variable_names(n), {}, largest_ideal_in(p)};
    if (n == 0) {
        r.variables.clear();
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<TruncatedSeries> coeffs;
        for (std::size_t i = 0; i < n; ++i) {
            TruncatedSeries s(n, degree);
            for (std::size_t j = 0; j < m; ++j) {
                if ((*Binv)(j, k) != 0) {
                    s += (*Binv)(j, k) * adapted[j][i];
                }
            }
            coeffs.push_back(std::move(s));
        }
        r.images.emplace_back(std::move(coeffs), degree);
    }
    return r;
}

Subspace image_kernel(const Realisation &r)
{
    const auto dim = r.pair.algebra().dim();
    if (r.variables.empty()) {
        return Subspace::full(dim);
    }
    return Subspace(dim, nullspace(coefficient_matrix(r, r.degree)));
}

RealisationReport verify_realisation(const Realisation &r)
{
    RealisationReport rep;
    const auto &g = r.pair.algebra();
    const auto n = r.variables.size();
    const int checked = r.degree - 1;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            auto res = bracket(r.images[a], r.images[b]) - r.image_of(g.bracket_basis(a, b));
            res = res.truncated(checked);
            const bool ok = res.is_zero();
            rep.homomorphism = rep.homomorphism && ok;
            rep.residuals.push_back({a, b, checked, ok, std::move(res)});
        }
    }

    for (const auto &h : r.pair.isotropy_basis()) {
        if (order_vf(r.image_of(h)) < 0) {
            rep.isotropy_nonnegative = false;
        }
    }

    const Exponent origin(n, 0);
    Matrix constants(n, g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            constants(i, k) = r.images[k].coefficient(i).coefficient(origin);
        }
    }
    Matrix comp(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto f = r.image_of(r.pair.complement()[j]);
        for (std::size_t i = 0; i < n; ++i) {
            comp(i, j) = f.coefficient(i).coefficient(origin);
        }
    }
    rep.transitive = rank(comp) == n;
    const Subspace preimage = n == 0 ? Subspace::full(g.dim()) : Subspace(g.dim(), nullspace(constants));
    rep.isotropy_exact = preimage == r.pair.isotropy();

    rep.truncated_kernel = image_kernel(r);
    rep.kernel_is_largest_ideal = r.kernel == largest_ideal_in(r.pair);
    rep.kernel_matches_images = rep.truncated_kernel == r.kernel;
    return rep;
}

std::string to_string(CertificationStatus s)
{
    switch (s) {
    case CertificationStatus::certified_polynomial:
        return "certified_polynomial";
    case CertificationStatus::certified_exp_polynomial:
        return "certified_exp_polynomial";
    case CertificationStatus::truncated_only:
        return "truncated_only";
    }
    return "unknown";
}

TruncatedSeries ClosedFormCoefficient::expand(int degree) const
{
    auto out = at_degree(polynomial, degree);
    if (status == CertificationStatus::truncated_only) {
        return polynomial.truncated(degree);
    }
    for (const auto &t : exp_terms) {
        const auto x = TruncatedSeries::variable(polynomial.n_vars(), degree, t.variable);
        out += at_degree(t.polynomial, degree) * exp_series(t.lambda * x);
    }
    return out;
}

std::string ClosedFormCoefficient::render(const std::vector<std::string> &names) const
{
    std::vector<std::string> parts;
    if (!polynomial.is_zero()) {
        parts.push_back(to_string(polynomial, names));
    }
    for (const auto &t : exp_terms) {
        std::string arg;
        if (t.lambda == 1) {
            arg = names[t.variable];
        } else if (t.lambda == -1) {
            arg = "-" + names[t.variable];
        } else {
            arg = to_string(t.lambda) + "*" + names[t.variable];
        }
        parts.push_back("(" + to_string(t.polynomial, names) + ")*exp(" + arg + ")");
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += " + " + parts[i];
    }
    return out;
}

std::vector<LiftedImage> lift_polynomial(const Realisation &r)
{
    const bool hypothesis = r.variables.empty() || complement_is_nilpotent_subalgebra(r.pair);
    std::vector<LiftedImage> out;
    const auto &g = r.pair.algebra();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        LiftedImage li{g.name(k), {}};
        for (const auto &f : r.images[k].coefficients()) {
            ClosedFormCoefficient c;
            const int top = f.max_term_degree();
            if (!hypothesis) {
                c.polynomial = f;
                c.note = "complement is not a subalgebra acting nilpotently on g";
            } else if (r.degree - top < kPolynomialGuard) {
                c.polynomial = f;
                c.note = "nonzero terms too close to the truncation degree";
            } else {
                c.status = CertificationStatus::certified_polynomial;
                c.polynomial = as_polynomial(f);
            }
            li.coefficients.push_back(std::move(c));
        }
        out.push_back(std::move(li));
    }
    return out;
}

namespace {

// k!/(k-m)! * lambda^(k-m), zero for k < m.
Rational basis_value(const Rational &lambda, unsigned m, unsigned k)
{
    if (k < m) {
        return 0;
    }
    Rational r = 1;
    for (unsigned t = 0; t < m; ++t) {
        r *= k - t;
    }
    for (unsigned t = m; t < k; ++t) {
        r *= lambda;
    }
    return r;
}

ClosedFormCoefficient lift_series(const TruncatedSeries &f, std::size_t var)
{
    ClosedFormCoefficient out;
    out.polynomial = f;
    const int D = f.degree();
    const auto n = f.n_vars();

    std::map<Exponent, std::map<unsigned, Rational>> slices;
    for (const auto &[e, c] : f.terms()) {
        Exponent beta = e;
        beta[var] = 0;
        slices[beta][e[var]] = c;
    }

    std::map<Rational, TruncatedSeries> by_lambda;
    auto poly_for = [&](const Rational &lambda) -> TruncatedSeries & {
        auto it = by_lambda.find(lambda);
        if (it == by_lambda.end()) {
            it = by_lambda.emplace(lambda, TruncatedSeries(n, D)).first;
        }
        return it->second;
    };

    for (const auto &[beta, slice] : slices) {
        const int len = D - static_cast<int>(total_degree(beta)) + 1;
        std::vector<Rational> s(static_cast<std::size_t>(len), 0);
        for (const auto &[k, c] : slice) {
            s[k] = c * Rational(factorial(k));
        }
        const auto rec = berlekamp_massey(s);
        const auto L = rec.length();
        if (static_cast<std::size_t>(len) < 2 * L + 2) {
            out.note = "too few terms to confirm a recurrence";
            return out;
        }
        const auto roots = rational_roots(characteristic_polynomial(rec));
        if (!roots) {
            out.note = "recurrence found but its roots are not rational, closed form withheld";
            return out;
        }
        std::vector<std::pair<Rational, unsigned>> unknowns;
        for (const auto &root : *roots) {
            for (unsigned m = 0; m < root.multiplicity; ++m) {
                unknowns.emplace_back(root.value, m);
            }
        }
        Matrix A(static_cast<std::size_t>(len), unknowns.size());
        for (std::size_t k = 0; k < s.size(); ++k) {
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                A(k, u) = basis_value(unknowns[u].first, unknowns[u].second, static_cast<unsigned>(k));
            }
        }
        const auto sol = solve(A, s);
        if (!sol || A * *sol != s) {
            out.note = "recurrence roots do not fit the series";
            return out;
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            if ((*sol)[u] == 0) {
                continue;
            }
            Exponent e = beta;
            e[var] = unknowns[u].second;
            poly_for(unknowns[u].first).add_term(e, (*sol)[u]);
        }
    }

    ClosedFormCoefficient cand;
    cand.polynomial = TruncatedSeries(n, 0);
    for (const auto &[lambda, p] : by_lambda) {
        if (p.is_zero()) {
            continue;
        }
        if (lambda == 0) {
            cand.polynomial = as_polynomial(p);
        } else {
            cand.exp_terms.push_back({var, lambda, as_polynomial(p)});
        }
    }
    cand.status = cand.exp_terms.empty() ? CertificationStatus::certified_polynomial
                                         : CertificationStatus::certified_exp_polynomial;
    if (!(cand.expand(D) == f)) {
        out.note = "closed form does not re-expand to the series";
        return out;
    }
    return cand;
}

} // namespace

std::vector<LiftedImage> lift_exp_polynomial(const Realisation &r, std::size_t var)
{
    const auto n = r.variables.size();
    if (n != 0 && var >= n) {
        throw Error(errc::invalid_argument, "variable index out of range");
    }
    std::vector<LiftedImage> out;
    const auto &g = r.pair.algebra();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        LiftedImage li{g.name(k), {}};
        for (const auto &f : r.images[k].coefficients()) {
            li.coefficients.push_back(lift_series(f, var));
        }
        out.push_back(std::move(li));
    }
    return out;
}

} // namespace lierealise
