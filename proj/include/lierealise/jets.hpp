#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <lierealise/expr.hpp>
#include <lierealise/linalg.hpp>
#include <lierealise/series.hpp>

namespace lierealise {

// Exponents of y', y'', ... in that order, without trailing zeros.
using JetMonomial = std::vector<unsigned>;

// Polynomial in the jet variables y^(1), y^(2), ... whose coefficients are
// series in (x, y) sharing one truncation degree.
class JetExpression {
public:
    explicit JetExpression(int degree);

    static JetExpression from_series(const TruncatedSeries &f);
    // y^(i) for i >= 1; y itself is a series variable.
    static JetExpression jet_variable(unsigned i, int degree);

    int degree() const { return degree_; }
    // Highest i with y^(i) present; 0 when the expression is a plain series.
    unsigned jet_order() const;
    const std::map<JetMonomial, TruncatedSeries> &terms() const { return terms_; }
    TruncatedSeries coefficient(const JetMonomial &m) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const JetMonomial &m, const TruncatedSeries &c);
    JetExpression truncated(int degree) const;

    JetExpression &operator+=(const JetExpression &o);
    JetExpression &operator-=(const JetExpression &o);
    friend JetExpression operator+(JetExpression a, const JetExpression &b) { return a += b; }
    friend JetExpression operator-(JetExpression a, const JetExpression &b) { return a -= b; }
    friend JetExpression operator*(const JetExpression &a, const JetExpression &b);
    friend JetExpression operator*(const Rational &c, const JetExpression &a);
    friend bool operator==(const JetExpression &, const JetExpression &) = default;

private:
    int degree_;
    std::map<JetMonomial, TruncatedSeries> terms_;
};

std::string jet_name(unsigned i);
std::string to_string(const JetExpression &e);

// D_x = d/dx + y' d/dy + sum_i y^(i+1) d/dy^(i).
JetExpression total_derivative(const JetExpression &e);

struct Prolongation {
    JetExpression q;                   // [X, D_x] = q D_x
    std::vector<JetExpression> images; // images[i] = X(y^(i)), i = 0..k
};

// X = f d/dx + g d/dy prolonged to order k.
Prolongation prolong(const TruncatedVectorField &X, unsigned k);

// The prolonged field applied to an expression of jet order <= pr.images.size() - 1.
JetExpression apply_prolonged(const TruncatedVectorField &X, const Prolongation &pr, const JetExpression &e);

// y^(m) = rhs with rhs free of y^(i), i >= m.
struct ExplicitOde {
    unsigned order;
    JetExpression rhs;
    Expr source; // right-hand side as parsed

    // Same equation with coefficients expanded to another degree.
    ExplicitOde with_degree(int degree) const;
};

// "y'' = 0", "y''' = y'*y''". Coefficients are expanded to `degree`.
ExplicitOde parse_ode(std::string_view text, int degree);
std::string to_string(const ExplicitOde &ode);

// X(y^(m) - Q) with y^(m) replaced by Q; X is a symmetry iff this vanishes.
JetExpression symmetry_residual(const TruncatedVectorField &X, const ExplicitOde &ode);

struct DeterminingSystem {
    unsigned ansatz_degree;
    int reliable_degree;
    // Ansatz fields x^a y^b d/dx and x^a y^b d/dy; columns of `equations`.
    std::vector<TruncatedVectorField> unknowns;
    Matrix equations;
    std::vector<TruncatedVectorField> solutions;
    // Dimension at ansatz degree + 1, and whether it agrees.
    std::size_t next_dimension;
    bool stabilized;
};

DeterminingSystem determining_system(const ExplicitOde &ode, unsigned ansatz_degree);

std::vector<bool> check_symmetries(const std::vector<TruncatedVectorField> &fields, const ExplicitOde &ode);

} // namespace lierealise
