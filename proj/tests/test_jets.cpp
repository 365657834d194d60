#include <doctest.h>

#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>
#include <lierealise/jets.hpp>

#include <chrono>
#include <random>

using namespace lierealise;

namespace {

constexpr int D = 10;

JetExpression J(const char *text, int degree = D)
{
    // Reuse the equation parser on "y'' = text".
    return parse_ode(std::string("y'{9} = ") + text, degree).rhs;
}

TruncatedVectorField V(const char *text, int degree = D) { return parse_field(text, 2, degree); }

Subspace span_of(const std::vector<TruncatedVectorField> &fields, int degree)
{
    // Coefficient vectors over all monomials of degree <= `degree` in both components.
    std::vector<Exponent> monos;
    for (unsigned t = 0; t <= static_cast<unsigned>(degree); ++t) {
        for (unsigned a = 0; a <= t; ++a) {
            monos.push_back({a, t - a});
        }
    }
    std::vector<Vector> rows;
    for (const auto &f : fields) {
        Vector v;
        for (std::size_t c = 0; c < 2; ++c) {
            for (const auto &m : monos) {
                v.push_back(f.coefficient(c).coefficient(m));
            }
        }
        rows.push_back(std::move(v));
    }
    return Subspace(2 * monos.size(), rows);
}

} // namespace

TEST_CASE("total derivative")
{
    CHECK(total_derivative(J("y")) == J("y'", D - 1));
    CHECK(total_derivative(J("x*y'")) == J("y' + x*y''", D - 1));
    CHECK(total_derivative(J("y^2")) == J("2*y*y'", D - 1));
    CHECK(total_derivative(J("y'^3")) == J("3*y'^2*y''", D - 1));
    CHECK(to_string(J("y'{4}*y'' + y'''")) == "y''' + y''*y'{4}");
}

TEST_CASE("prolongation formulas")
{
    auto pr = prolong(V("x*q"), 2);
    CHECK(pr.images[1] == J("1", D - 1));
    CHECK(pr.images[2].is_zero());

    auto tr = prolong(V("p"), 4);
    for (unsigned i = 0; i <= 4; ++i) {
        CHECK(tr.images[i].is_zero());
    }
    CHECK_THROWS_AS(prolong(parse_field("p", 1, 3), 2), Error);
}

TEST_CASE("prolongation matches the closed forms for generic f, g")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<TruncatedSeries> c{TruncatedSeries(2, D), TruncatedSeries(2, D)};
        for (auto &s : c) {
            for (unsigned t = 0; t <= 3; ++t) {
                for (unsigned a = 0; a <= t; ++a) {
                    s.add_term({a, t - a}, coef(rng));
                }
            }
        }
        TruncatedVectorField X(c);
        const auto &f = c[0];
        const auto &g = c[1];
        auto fx = f.derivative(0), fy = f.derivative(1), gx = g.derivative(0), gy = g.derivative(1);
        auto pr = prolong(X, 2);

        auto y1 = JetExpression::jet_variable(1, D), y2 = JetExpression::jet_variable(2, D);
        auto F = [](const TruncatedSeries &s) { return JetExpression::from_series(s); };
        auto xy1 = F(gx) + F(gy - fx) * y1 - F(fy) * y1 * y1;
        CHECK(pr.images[1] == xy1.truncated(pr.images[1].degree()));

        auto fxx = fx.derivative(0), fxy = fx.derivative(1), fyy = fy.derivative(1);
        auto gxx = gx.derivative(0), gxy = gx.derivative(1), gyy = gy.derivative(1);
        auto xy2 = F(gxx) + F(Rational(2) * gxy - fxx) * y1 + F(gyy - Rational(2) * fxy) * y1 * y1 -
                   F(fyy) * y1 * y1 * y1 + F(gy - Rational(2) * fx) * y2 - F(Rational(3) * fy) * y1 * y2;
        CHECK(pr.images[2] == xy2.truncated(pr.images[2].degree()));
    }
}

TEST_CASE("symmetry residuals")
{
    auto ode = parse_ode("y'' = 0", D);
    CHECK(symmetry_residual(V("x^2*p + x*y*q"), ode).is_zero());
    CHECK(symmetry_residual(V("x*y*p + y^2*q"), ode).is_zero());
    CHECK(symmetry_residual(V("y*p"), ode).is_zero());
    CHECK_FALSE(symmetry_residual(V("x*p"), parse_ode("y'' = y'", D)).is_zero());
    CHECK_FALSE(symmetry_residual(V("x^3*q"), ode).is_zero());

    // Linear in X.
    auto a = V("x^2*q + y*p"), b = V("x*y*p - y^3*q");
    auto lhs = symmetry_residual(Rational(2) * a - Rational(3) * b, ode);
    auto rhs = Rational(2) * symmetry_residual(a, ode) - Rational(3) * symmetry_residual(b, ode);
    CHECK(lhs == rhs);
}

TEST_CASE("y d/dx prolonged is quadratic in the jets")
{
    for (unsigned m = 2; m <= 4; ++m) {
        auto pr = prolong(V("y*p", 12), m);
        const auto &img = pr.images[m];
        CHECK_FALSE(img.is_zero());
        for (const auto &[mono, c] : img.terms()) {
            unsigned weight = 0, count = 0;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                weight += mono[i] * static_cast<unsigned>(i + 1);
                count += mono[i];
            }
            CHECK(count == 2);
            CHECK(weight == m + 1);
            CHECK(c.max_term_degree() == 0);
        }
        // Every product y^(j) y^(m+1-j) occurs.
        for (unsigned j = 1; j <= m; ++j) {
            JetMonomial mono(m, 0);
            mono[j - 1] += 1;
            mono[m - j] += 1;
            CHECK_FALSE(img.coefficient(mono).is_zero());
        }
    }
}

TEST_CASE("ODE parsing")
{
    auto ode = parse_ode("y''' = y'*y''", 4);
    CHECK(ode.order == 3);
    CHECK(to_string(ode) == "y''' = y'*y''");
    CHECK(parse_ode("y'{4} = x", 4).order == 4);
    CHECK_THROWS_AS(parse_ode("y' = y", 4), Error);
    CHECK_THROWS_AS(parse_ode("y'' = y''", 4), Error);
    CHECK_THROWS_AS(parse_ode("y''", 4), Error);
    CHECK_THROWS_AS(parse_ode("x = y", 4), Error);
}

TEST_CASE("determining system of y'' = 0")
{
    const auto t0 = std::chrono::steady_clock::now();
    auto ds = determining_system(parse_ode("y'' = 0", 4), 3);
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));
    CHECK(ds.solutions.size() == 8);
    CHECK(ds.stabilized);
    CHECK(ds.next_dimension == 8);

    // The eight projective generators span the same space.
    const char *gens[] = {"p", "q", "x*q", "x*p - y*q", "y*p", "x*p + y*q", "x^2*p + x*y*q", "x*y*p + y^2*q"};
    std::vector<TruncatedVectorField> table;
    for (auto g : gens) {
        table.push_back(V(g));
    }
    CHECK(span_of(ds.solutions, 4) == span_of(table, 4));

    // Same space as g_xx = f_yy = 2 g_xy - f_xx = g_yy - 2 f_xy = 0 on cubic f, g.
    std::vector<Vector> rows;
    const auto n = ds.unknowns.size();
    auto derivative_rows = [&](auto &&expr) {
        std::map<Exponent, Vector> by_mono;
        for (std::size_t k = 0; k < n; ++k) {
            const auto &u = ds.unknowns[k];
            auto s = expr(u.coefficient(0), u.coefficient(1));
            for (const auto &[e, c] : s.terms()) {
                auto &row = by_mono.try_emplace(e, zero_vector(n)).first->second;
                row[k] += c;
            }
        }
        for (auto &[e, row] : by_mono) {
            rows.push_back(row);
        }
    };
    derivative_rows([](const TruncatedSeries &, const TruncatedSeries &g) { return g.derivative(0).derivative(0); });
    derivative_rows([](const TruncatedSeries &f, const TruncatedSeries &) { return f.derivative(1).derivative(1); });
    derivative_rows([](const TruncatedSeries &f, const TruncatedSeries &g) {
        return Rational(2) * g.derivative(0).derivative(1) - f.derivative(0).derivative(0);
    });
    derivative_rows([](const TruncatedSeries &f, const TruncatedSeries &g) {
        return g.derivative(1).derivative(1) - Rational(2) * f.derivative(0).derivative(1);
    });
    Subspace oracle(n, nullspace(Matrix::from_rows(rows, n)));
    Subspace solved(n, nullspace(ds.equations));
    CHECK(oracle == solved);

    // Bracket closure of the solution space.
    auto ode = parse_ode("y'' = 0", D);
    for (std::size_t i = 0; i < ds.solutions.size(); ++i) {
        for (std::size_t j = i + 1; j < ds.solutions.size(); ++j) {
            auto b = bracket(ds.solutions[i].truncated(D), ds.solutions[j].truncated(D));
            CHECK(symmetry_residual(b, ode).is_zero());
        }
    }
}

TEST_CASE("translations solve autonomous y-free equations")
{
    auto ds = determining_system(parse_ode("y'' = y'^3", 4), 2);
    std::vector<TruncatedVectorField> sol;
    for (const auto &s : ds.solutions) {
        sol.push_back(s);
    }
    const int deg = 2;
    auto space = span_of(sol, deg);
    CHECK(space.contains(span_of({V("p")}, deg)));
    CHECK(space.contains(span_of({V("q")}, deg)));
    auto flags = check_symmetries({V("p"), V("q"), V("x*p")}, parse_ode("y'' = y'^3", D));
    CHECK(flags == std::vector<bool>{true, true, false});
}
