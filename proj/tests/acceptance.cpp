// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <lierealise/catalog.hpp>
#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>
#include <lierealise/jets.hpp>
#include <lierealise/realise.hpp>
#include <lierealise/uea.hpp>

#include "fixtures.hpp"

using namespace lierealise;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

TruncatedVectorField V(const std::string &text, std::size_t n, int degree) { return parse_field(text, n, degree); }

Outcome ac1()
{
    const auto start = Clock::now();
    const auto r = realise(fixtures::sl2_pair(), 6);
    const double t = seconds_since(start);
    const bool exact = r.image("E") == V("p", 1, 6) && r.image("H") == V("-2*x*p", 1, 6) &&
                       r.image("F") == V("-x^2*p", 1, 6);
    return {exact && t < 1.0, "phi(F) = " + to_string(r.image("F")) + ", " + fmt_seconds(t)};
}

Outcome ac2()
{
    // Adapted order (F, H, E); E^d F = F E^d + d H E^(d-1) - d(d-1) E^(d-1), E^d H = H E^d - 2d E^d.
    PbwAlgebra U(fixtures::sl2(), 2);
    bool ok = true;
    for (unsigned d = 1; d <= 6; ++d) {
        UeaElement f;
        f.add_term({1, 0, d}, 1);
        f.add_term({0, 1, d - 1}, d);
        f.add_term({0, 0, d - 1}, -Rational(d * (d - 1)));
        UeaElement h;
        h.add_term({0, 1, d}, 1);
        h.add_term({0, 0, d}, -Rational(2 * d));
        ok = ok && U.multiply(U.monomial_power(0, d), U.generator("F")) == f;
        ok = ok && U.multiply(U.monomial_power(0, d), U.generator("H")) == h;
    }
    return {ok, "d = 1..6"};
}

Outcome ac3()
{
    const auto start = Clock::now();
    const auto ode = parse_ode("y'' = 0", 6);
    const auto sys = determining_system(ode, 3);
    const auto type8 = instantiate("T1.(8)", 6);
    const int d = sys.reliable_degree;
    bool mutual = true;
    for (const auto &X : sys.solutions) {
        mutual = mutual && span_coordinates(type8.generators, X, d).has_value();
    }
    for (const auto &X : type8.generators) {
        mutual = mutual && span_coordinates(sys.solutions, X, d).has_value();
    }
    const double t = seconds_since(start);
    return {sys.solutions.size() == 8 && mutual && t < 5.0,
            "dimension " + std::to_string(sys.solutions.size()) + ", spans " + (mutual ? "equal" : "differ") + ", " +
                fmt_seconds(t)};
}

Outcome ac4()
{
    const auto start = Clock::now();
    std::size_t runs = 0, brackets = 0;
    std::string first_failure;
    for (const auto &e : catalog()) {
        for (const auto &p : parameter_sweep(e)) {
            ++runs;
            const auto inst = instantiate(e.id, p, 6);
            const auto report = verify_realisation(realise(inst.pair, 6));
            brackets += report.residuals.size();
            for (const auto &res : report.residuals) {
                if (!res.vanishes && first_failure.empty()) {
                    first_failure = e.id + " [" + to_string(e, p) + "]";
                }
            }
            if (!report.homomorphism && first_failure.empty()) {
                first_failure = e.id + " [" + to_string(e, p) + "]";
            }
        }
    }
    const double t = seconds_since(start);
    std::string detail = std::to_string(runs) + " instances, " + std::to_string(brackets) + " brackets, " +
                         fmt_seconds(t);
    if (!first_failure.empty()) {
        detail += ", first failure " + first_failure;
    }
    return {first_failure.empty() && t < 300.0, detail};
}

Outcome ac5()
{
    bool ok = true;
    std::string detail;
    auto check = [&](const std::string &name, const TransitivePair &p, const Subspace &expected) {
        const auto r = realise(p, 5);
        const bool good = image_kernel(r) == largest_ideal_in(p) && largest_ideal_in(p) == expected;
        ok = ok && good;
        detail += (detail.empty() ? "" : ", ") + name + (good ? " ok" : " mismatch");
    };

    // sl2 plus a central z, with z inside h: the largest ideal is <z>.
    auto g = fixtures::algebra({"F", "H", "E", "z"},
                               {{"H", "E", {{"E", 2}}}, {"H", "F", {{"F", -2}}}, {"E", "F", {{"H", 1}}}});
    TransitivePair central(g, {g.basis_vector("F"), g.basis_vector("H"), g.basis_vector("z")},
                           {g.basis_vector("E")});
    check("central", central, Subspace(4, {g.basis_vector("z")}));

    // Diagonal over an abelian algebra: the diagonal itself is an ideal.
    auto diag = diagonal_pair(LieAlgebra::abelian({"s", "t"}));
    check("diagonal", diag, diag.isotropy());

    // h = g.
    auto s = fixtures::sl2();
    TransitivePair whole(s, {s.basis_vector(0), s.basis_vector(1), s.basis_vector(2)}, {});
    check("h = g", whole, Subspace::full(3));
    return {ok, detail};
}

Outcome ac6()
{
    bool ok = true;
    auto certified = [](const std::vector<LiftedImage> &lifted) {
        for (const auto &img : lifted) {
            for (const auto &c : img.coefficients) {
                if (c.status != CertificationStatus::certified_polynomial) {
                    return false;
                }
            }
        }
        return true;
    };
    const int D = 6;
    const auto p = fixtures::gl2_semidirect();
    const auto r = realise(p, D);
    const auto &g = p.algebra();
    ok = ok && certified(lift_polynomial(r));
    for (const auto &name : {"E11", "E12", "E21", "E22"}) {
        const auto ad = g.ad(g.basis_vector(name));
        auto expected = TruncatedVectorField::zero(2, D);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const Rational a = -ad(4 + i, 4 + j);
                if (a != 0) {
                    expected += a * TruncatedSeries::variable(2, D, j) * TruncatedVectorField::partial(2, D, i);
                }
            }
        }
        ok = ok && r.image(name) == expected;
    }
    const bool sl2 = certified(lift_polynomial(realise(fixtures::sl2_pair(), D)));
    return {ok && sl2, std::string("gl2 semidirect ") + (ok ? "ok" : "failed") + ", sl2 " + (sl2 ? "ok" : "failed")};
}

Outcome ac7()
{
    const int D = 10;
    const auto inst = instantiate("T2.(2,1).case1", D);
    const auto r = realise(inst.pair, D);
    bool ok = true;
    std::string lambdas;
    for (std::size_t var = 0; var < r.variables.size(); ++var) {
        const auto lifted = lift_exp_polynomial(r, var);
        bool all_certified = true;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            for (std::size_t k = 0; k < lifted[i].coefficients.size(); ++k) {
                const auto &c = lifted[i].coefficients[k];
                all_certified = all_certified && c.status != CertificationStatus::truncated_only;
                ok = ok && c.expand(D) == r.images[i].coefficient(k);
                for (const auto &t : c.exp_terms) {
                    if (t.lambda != 0) {
                        lambdas += (lambdas.empty() ? "" : ", ") + to_string(t.lambda) + " along " + r.variables[var];
                    }
                }
            }
        }
        if (var == 1) {
            ok = ok && all_certified;
        }
    }
    // Realised coordinates (x, y) relate to the ones of the Redundancy remark
    // by x = v, y = -u; both must give the same fields.
    const std::vector<TruncatedSeries> to_remark{parse_series("y", 2, D), parse_series("-x", 2, D)};
    const std::vector<TruncatedSeries> remark{parse_series("y*exp(-x)", 2, D), parse_series("-x", 2, D)};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto a = coordinate_change(r.images[i], to_remark);
        const auto b = coordinate_change(inst.generators[i].truncated(D), remark);
        ok = ok && a.agrees_with(b, std::min(a.degree(), b.degree()));
    }
    return {ok && !lambdas.empty(), "lambda " + lambdas};
}

TruncatedVectorField random_field(std::mt19937 &rng, std::size_t n, int D)
{
    std::uniform_int_distribution<int> coef(-4, 4), terms(1, 4), low(0, 3);
    const int min_degree = low(rng);
    std::uniform_int_distribution<int> deg(min_degree, D);
    std::vector<TruncatedSeries> comps;
    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries s(n, D);
        for (int t = terms(rng); t > 0; --t) {
            Exponent e(n, 0);
            for (int k = deg(rng); k > 0; --k) {
                e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]++;
            }
            Rational c(coef(rng), 1 + low(rng));
            c.canonicalize();
            s.add_term(e, c);
        }
        comps.push_back(std::move(s));
    }
    return TruncatedVectorField(std::move(comps), D);
}

Outcome ac8()
{
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    const int D = 6;
    int order_ok = 0, jacobi_ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = dims(rng);
        const auto X = random_field(rng, n, D), Y = random_field(rng, n, D), Z = random_field(rng, n, D);
        const int ox = order_vf(X), oy = order_vf(Y);
        const int oxy = order_vf(bracket(X, Y));
        if (ox == kInfiniteOrder || oy == kInfiniteOrder || oxy >= ox + oy) {
            ++order_ok;
        }
        const auto jac = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
        if (jac.agrees_with(TruncatedVectorField::zero(n, D), jac.degree())) {
            ++jacobi_ok;
        }
    }
    return {order_ok == 500 && jacobi_ok == 500,
            std::to_string(order_ok) + "/500 order, " + std::to_string(jacobi_ok) + "/500 Jacobi"};
}

Outcome ac9()
{
    const int D = 6;
    const auto src = instantiate("T2.(2,1).case1", D);
    const auto target = instantiate("T2.(1,1)", parse_params(find_entry("T2.(1,1)"), "alphas=1:0"), D);
    const std::vector<TruncatedSeries> subst{parse_series("y*exp(-x)", 2, D), parse_series("-x", 2, D)};
    bool ok = true;
    int checked = D;
    for (const auto &X : src.generators) {
        const auto moved = coordinate_change(X.truncated(D), subst);
        checked = std::min(checked, moved.degree());
        const auto c = span_coordinates(target.generators, moved, moved.degree());
        if (!c) {
            ok = false;
            continue;
        }
        auto residual = moved;
        for (std::size_t i = 0; i < c->size(); ++i) {
            residual -= (*c)[i] * target.generators[i];
        }
        ok = ok && residual.agrees_with(TruncatedVectorField::zero(2, D), moved.degree());
    }
    return {ok, "residual zero through degree " + std::to_string(checked)};
}

Outcome ac10()
{
    PbwAlgebra U(LieAlgebra::abelian({"Y1", "Y2"}));
    using Tensor = std::map<std::pair<PbwMonomial, PbwMonomial>, Rational>;
    auto tensor_mul = [&](const Tensor &a, const Tensor &b) {
        Tensor out;
        for (const auto &[ka, ca] : a) {
            for (const auto &[kb, cb] : b) {
                const auto l = U.multiply(UeaElement::monomial(ka.first), UeaElement::monomial(kb.first));
                const auto r = U.multiply(UeaElement::monomial(ka.second), UeaElement::monomial(kb.second));
                for (const auto &[ml, cl] : l.terms()) {
                    for (const auto &[mr, cr] : r.terms()) {
                        out[{ml, mr}] += ca * cb * cl * cr;
                    }
                }
            }
        }
        return out;
    };
    const PbwMonomial one{0, 0};
    auto primitive = [&](std::size_t i) {
        PbwMonomial y{0, 0};
        y[i] = 1;
        return Tensor{{{y, one}, 1}, {{one, y}, 1}};
    };
    int checks = 0, failures = 0;
    for (unsigned g1 = 0; g1 <= 6; ++g1) {
        for (unsigned g2 = 0; g1 + g2 <= 6; ++g2) {
            // (a_alpha a_beta)(u) = (a_alpha (x) a_beta)(coproduct of u), u = Y^gamma.
            Tensor delta{{{one, one}, 1}};
            for (unsigned k = 0; k < g1; ++k) {
                delta = tensor_mul(delta, primitive(0));
            }
            for (unsigned k = 0; k < g2; ++k) {
                delta = tensor_mul(delta, primitive(1));
            }
            const auto y_gamma = U.multiply(U.monomial_power(0, g1), U.monomial_power(1, g2));
            for (unsigned a1 = 0; a1 <= 3; ++a1) {
                for (unsigned a2 = 0; a1 + a2 <= 3; ++a2) {
                    for (unsigned b1 = 0; b1 <= 3; ++b1) {
                        for (unsigned b2 = 0; b1 + b2 <= 3; ++b2) {
                            Rational lhs = 0;
                            for (const auto &[k, c] : delta) {
                                lhs += c * UeaElement::monomial(k.first).coefficient({a1, a2}) *
                                       UeaElement::monomial(k.second).coefficient({b1, b2});
                            }
                            const Rational mult(multinomial({a1, b1}) * multinomial({a2, b2}));
                            ++checks;
                            if (lhs != mult * U.complement_coefficient(y_gamma, {a1 + b1, a2 + b2})) {
                                ++failures;
                            }
                        }
                    }
                }
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " identities, " + std::to_string(failures) + " failures"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 sl2 realisation exactness", ac1},
        {"AC2 PBW products E^d F, E^d H", ac2},
        {"AC3 determining system of y'' = 0", ac3},
        {"AC4 homomorphism over the catalog sweep", ac4},
        {"AC5 kernel equals largest ideal in h", ac5},
        {"AC6 polynomial realisation", ac6},
        {"AC7 exp-polynomial certification", ac7},
        {"AC8 order inequality and Jacobi", ac8},
        {"AC9 coordinate change into T2.(1,1)", ac9},
        {"AC10 divided-power law", ac10},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const Error &e) {
            o = {false, std::string("error ") + e.code() + ": " + e.what()};
        } catch (const std::exception &e) {
            o = {false, e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << o.detail << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
