#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <lierealise/rational.hpp>
#include <lierealise/series.hpp>

namespace lierealise {

// Syntax tree for the small expression language used by field, template and
// ODE input:
//   numbers (42, 1/2, 0.25), identifiers, + - * / ^, '·' as *, implicit
//   multiplication (2x, x(1+y)), exp(...), partials d/dx, and jet variables
//   y', y'', y'{k}.
struct ExprNode {
    enum class Kind { number, symbol, jet, partial, neg, add, sub, mul, div, pow, call };

    Kind kind;
    Rational value;          // number
    std::string name;        // symbol, jet base, partial variable, call name
    unsigned jet_order = 0;  // jet
    std::vector<std::shared_ptr<const ExprNode>> args;
};

using Expr = std::shared_ptr<const ExprNode>;
using Bindings = std::map<std::string, Rational>;

Expr parse_expression(std::string_view text);

// Value of an expression made only of numbers and bound symbols.
std::optional<Rational> evaluate_constant(const Expr &e, const Bindings &bindings = {});

std::set<std::string> free_symbols(const Expr &e);

// Symbols resolve to bindings first, then to variables.
TruncatedSeries evaluate_series(const Expr &e, const std::vector<std::string> &variables, int degree,
                                const Bindings &bindings = {});

// As evaluate_series, plus d/dx partials and Lie's aliases p, q, r for the
// partials along the first three variables (bindings and variables win).
TruncatedVectorField evaluate_field(const Expr &e, const std::vector<std::string> &variables, int degree,
                                    const Bindings &bindings = {});

TruncatedSeries parse_series(std::string_view text, std::size_t n_vars, int degree, const Bindings &bindings = {});
TruncatedVectorField parse_field(std::string_view text, std::size_t n_vars, int degree, const Bindings &bindings = {});

} // namespace lierealise
