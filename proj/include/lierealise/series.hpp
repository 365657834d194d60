#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <lierealise/linalg.hpp>
#include <lierealise/rational.hpp>

namespace lierealise {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent &e);

// Graded order: total degree first, then lexicographically descending, so
// x^2 < x*y < y^2 when x comes before y.
struct GradedLexLess {
    bool operator()(const Exponent &a, const Exponent &b) const;
};

// Order of the zero series or the zero field.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// Power series in n variables known exactly up to total degree D. Terms
// above D are never stored. D = -1 means nothing is known.
class TruncatedSeries {
public:
    using Terms = std::map<Exponent, Rational, GradedLexLess>;

    TruncatedSeries(std::size_t n_vars, int degree);

    static TruncatedSeries constant(std::size_t n_vars, int degree, const Rational &c);
    static TruncatedSeries variable(std::size_t n_vars, int degree, std::size_t i);
    static TruncatedSeries monomial(std::size_t n_vars, int degree, const Exponent &e, const Rational &c = 1);

    std::size_t n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponent &e) const;
    Rational constant_term() const { return coefficient(Exponent(n_vars_, 0)); }
    // Minimal total degree of a stored term, kInfiniteOrder for zero.
    int order() const;
    // Highest total degree of a stored term, -1 for zero.
    int max_term_degree() const;

    // Terms above the truncation degree are silently dropped.
    void add_term(const Exponent &e, const Rational &c);
    TruncatedSeries truncated(int degree) const;

    TruncatedSeries derivative(std::size_t i) const;

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries &a);
    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    // Equality of all coefficients of total degree <= d.
    bool agrees_with(const TruncatedSeries &o, int d) const;

private:
    std::size_t n_vars_;
    int degree_;
    Terms terms_;
};

// Sums and products are reliable up to the smaller of the two degrees.
// f(subst_1, ..., subst_n); every subst_i must have zero constant term.
TruncatedSeries compose(const TruncatedSeries &f, const std::vector<TruncatedSeries> &subst);
TruncatedSeries power(const TruncatedSeries &f, unsigned k);
// exp(f) for f with zero constant term.
TruncatedSeries exp_series(const TruncatedSeries &f);

std::vector<std::string> default_variable_names(std::size_t n);
// "1 - x^2 + 1/2*x*y"; ascending graded order.
std::string to_string(const TruncatedSeries &f, const std::vector<std::string> &names);
std::string to_string(const TruncatedSeries &f);

class TruncatedVectorField {
public:
    // All coefficients are truncated to the smallest of their degrees.
    explicit TruncatedVectorField(std::vector<TruncatedSeries> coeffs);
    // Same, additionally capped at `degree`; allows the field in 0 variables.
    TruncatedVectorField(std::vector<TruncatedSeries> coeffs, int degree);

    static TruncatedVectorField zero(std::size_t n_vars, int degree);
    // d/dx_i
    static TruncatedVectorField partial(std::size_t n_vars, int degree, std::size_t i);

    std::size_t n_vars() const { return coeffs_.size(); }
    int degree() const { return degree_; }
    const TruncatedSeries &coefficient(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<TruncatedSeries> &coefficients() const { return coeffs_; }
    bool is_zero() const;
    TruncatedVectorField truncated(int degree) const;
    // Coefficients agree through total degree d.
    bool agrees_with(const TruncatedVectorField &o, int d) const;

    TruncatedVectorField &operator+=(const TruncatedVectorField &o);
    TruncatedVectorField &operator-=(const TruncatedVectorField &o);
    friend TruncatedVectorField operator+(TruncatedVectorField a, const TruncatedVectorField &b) { return a += b; }
    friend TruncatedVectorField operator-(TruncatedVectorField a, const TruncatedVectorField &b) { return a -= b; }
    friend TruncatedVectorField operator*(const Rational &c, const TruncatedVectorField &a);
    // Multiplication of every coefficient by a function.
    friend TruncatedVectorField operator*(const TruncatedSeries &f, const TruncatedVectorField &a);
    friend bool operator==(const TruncatedVectorField &, const TruncatedVectorField &) = default;

private:
    int degree_;
    std::vector<TruncatedSeries> coeffs_;
};

// X(f) = sum_i f_i df/dx_i, reliable to min(deg X, deg f - 1).
TruncatedSeries apply(const TruncatedVectorField &X, const TruncatedSeries &f);
// [X, Y]_j = X(g_j) - Y(f_j), reliable to min(deg X, deg Y) - 1.
TruncatedVectorField bracket(const TruncatedVectorField &X, const TruncatedVectorField &Y);
// -1 + min_i ord(f_i); kInfiniteOrder for the zero field.
int order_vf(const TruncatedVectorField &X);

// Inverse of x = subst(u). Constant terms must vanish and the linear part
// must be invertible.
std::vector<TruncatedSeries> formal_inverse(const std::vector<TruncatedSeries> &subst);
// X written in the coordinates u where x = subst(u).
TruncatedVectorField coordinate_change(const TruncatedVectorField &X, const std::vector<TruncatedSeries> &subst);

// "(1 - x^2)·d/dx + (x*y)·d/dy"
std::string to_string(const TruncatedVectorField &X, const std::vector<std::string> &names);
std::string to_string(const TruncatedVectorField &X);

} // namespace lierealise
