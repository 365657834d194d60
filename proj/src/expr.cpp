#include <lierealise/error.hpp>
#include <lierealise/expr.hpp>

#include <cctype>

namespace lierealise {

namespace {

struct Token {
    enum class Kind { number, ident, jet, partial, op, end };
    Kind kind;
    std::string text;
    Rational value;
    unsigned order = 0;
    std::size_t pos = 0;
};

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string &what)
{
    throw Error(errc::parse_error, what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                digits += s[i++];
            }
            Rational v{Integer(digits)};
            if (i + 1 < s.size() && s[i] == '.' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                std::string frac;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    frac += s[i++];
                }
                Integer den = 1;
                for (std::size_t k = 0; k < frac.size(); ++k) {
                    den *= 10;
                }
                v += Rational(Integer(frac), den);
                v.canonicalize();
            }
            out.push_back({Token::Kind::number, std::string(s.substr(start, i - start)), v, 0, start});
            continue;
        }
        if (c == 'd' && s.substr(i, 3) == "d/d" && i + 3 < s.size() && ident_start(s[i + 3])) {
            i += 3;
            std::string name;
            while (i < s.size() && ident_char(s[i])) {
                name += s[i++];
            }
            out.push_back({Token::Kind::partial, name, 0, 0, start});
            continue;
        }
        if (ident_start(c)) {
            std::string name;
            while (i < s.size() && ident_char(s[i])) {
                name += s[i++];
            }
            if (i < s.size() && s[i] == '\'') {
                unsigned primes = 0;
                while (i < s.size() && s[i] == '\'') {
                    ++primes;
                    ++i;
                }
                if (primes == 1 && i < s.size() && s[i] == '{') {
                    std::size_t close = s.find('}', i);
                    if (close == std::string_view::npos) {
                        fail(s, i, "unterminated jet order");
                    }
                    const std::string num(s.substr(i + 1, close - i - 1));
                    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
                        fail(s, i, "jet order must be a positive integer");
                    }
                    primes = static_cast<unsigned>(std::stoul(num));
                    if (primes == 0) {
                        fail(s, i, "jet order must be a positive integer");
                    }
                    i = close + 1;
                }
                out.push_back({Token::Kind::jet, name, 0, primes, start});
                continue;
            }
            out.push_back({Token::Kind::ident, name, 0, 0, start});
            continue;
        }
        if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xB7) {
            i += 2;
            out.push_back({Token::Kind::op, "*", 0, 0, start});
            continue;
        }
        if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            ++i;
            out.push_back({Token::Kind::op, std::string(1, c), 0, 0, start});
            continue;
        }
        fail(s, i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::end, "", 0, 0, s.size()});
    return out;
}

Expr make(ExprNode::Kind k, std::vector<Expr> args = {})
{
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

    Expr parse()
    {
        auto e = expression();
        if (peek().kind != Token::Kind::end) {
            fail(text_, peek().pos, "unexpected '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token &peek() const { return tokens_[pos_]; }
    bool is_op(const char *op) const { return peek().kind == Token::Kind::op && peek().text == op; }

    void expect(const char *op)
    {
        if (!is_op(op)) {
            fail(text_, peek().pos, std::string("expected '") + op + "'");
        }
        ++pos_;
    }

    Expr expression()
    {
        auto lhs = term();
        while (is_op("+") || is_op("-")) {
            const bool plus = is_op("+");
            ++pos_;
            lhs = make(plus ? ExprNode::Kind::add : ExprNode::Kind::sub, {lhs, term()});
        }
        return lhs;
    }

    bool starts_primary() const
    {
        const auto k = peek().kind;
        return k == Token::Kind::number || k == Token::Kind::ident || k == Token::Kind::jet ||
               k == Token::Kind::partial || is_op("(");
    }

    Expr term()
    {
        auto lhs = unary();
        for (;;) {
            if (is_op("*")) {
                ++pos_;
                lhs = make(ExprNode::Kind::mul, {lhs, unary()});
            } else if (is_op("/")) {
                ++pos_;
                lhs = make(ExprNode::Kind::div, {lhs, unary()});
            } else if (starts_primary()) {
                lhs = make(ExprNode::Kind::mul, {lhs, power()});
            } else {
                return lhs;
            }
        }
    }

    Expr unary()
    {
        if (is_op("-")) {
            ++pos_;
            return make(ExprNode::Kind::neg, {unary()});
        }
        if (is_op("+")) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Expr power()
    {
        auto base = primary();
        if (is_op("^")) {
            ++pos_;
            return make(ExprNode::Kind::pow, {base, unary()});
        }
        return base;
    }

    Expr primary()
    {
        const Token t = peek();
        switch (t.kind) {
        case Token::Kind::number: {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::number;
            n->value = t.value;
            return n;
        }
        case Token::Kind::jet: {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::jet;
            n->name = t.text;
            n->jet_order = t.order;
            return n;
        }
        case Token::Kind::partial: {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::partial;
            n->name = t.text;
            return n;
        }
        case Token::Kind::ident: {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->name = t.text;
            if (t.text == "exp" && is_op("(")) {
                ++pos_;
                n->kind = ExprNode::Kind::call;
                n->args.push_back(expression());
                expect(")");
                return n;
            }
            n->kind = ExprNode::Kind::symbol;
            return n;
        }
        case Token::Kind::op:
            if (t.text == "(") {
                ++pos_;
                auto e = expression();
                expect(")");
                return e;
            }
            break;
        case Token::Kind::end:
            fail(text_, t.pos, "unexpected end of input");
        }
        fail(text_, t.pos, "unexpected '" + t.text + "'");
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::optional<Rational> int_power(const Rational &base, const Rational &exponent)
{
    if (!is_integer(exponent)) {
        return std::nullopt;
    }
    const Integer e = exponent.get_num();
    if (e < 0 && base == 0) {
        return std::nullopt;
    }
    if (abs(e) > 4096) {
        return std::nullopt;
    }
    Rational r = 1;
    const long n = e.get_si();
    for (long k = 0; k < std::abs(n); ++k) {
        r *= base;
    }
    if (n < 0) {
        r = 1 / r;
    }
    return r;
}

unsigned nonnegative_exponent(const Expr &e, const Bindings &b)
{
    auto v = evaluate_constant(e, b);
    if (!v || !is_integer(*v) || *v < 0 || *v > 4096) {
        throw Error(errc::parse_error, "exponent of a non-constant base must be a constant non-negative integer");
    }
    return static_cast<unsigned>(v->get_num().get_ui());
}

Rational nonzero_constant(const Expr &e, const Bindings &b)
{
    auto v = evaluate_constant(e, b);
    if (!v) {
        throw Error(errc::parse_error, "only division by constants is supported");
    }
    if (*v == 0) {
        throw Error(errc::parse_error, "division by zero");
    }
    return *v;
}

std::optional<std::size_t> find_index(const std::vector<std::string> &names, const std::string &n)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == n) {
            return i;
        }
    }
    return std::nullopt;
}

TruncatedSeries series_of(const Expr &e, const std::vector<std::string> &vars, int degree, const Bindings &b)
{
    const auto n = vars.size();
    using K = ExprNode::Kind;
    switch (e->kind) {
    case K::number:
        return TruncatedSeries::constant(n, degree, e->value);
    case K::symbol: {
        if (auto it = b.find(e->name); it != b.end()) {
            return TruncatedSeries::constant(n, degree, it->second);
        }
        if (auto i = find_index(vars, e->name)) {
            return TruncatedSeries::variable(n, degree, *i);
        }
        throw Error(errc::parse_error, "unknown symbol '" + e->name + "'");
    }
    case K::jet:
        throw Error(errc::parse_error, "jet variable '" + e->name + "' not allowed here");
    case K::partial:
        throw Error(errc::parse_error, "a derivation d/d" + e->name + " is not a function");
    case K::neg:
        return -series_of(e->args[0], vars, degree, b);
    case K::add:
        return series_of(e->args[0], vars, degree, b) + series_of(e->args[1], vars, degree, b);
    case K::sub:
        return series_of(e->args[0], vars, degree, b) - series_of(e->args[1], vars, degree, b);
    case K::mul:
        return series_of(e->args[0], vars, degree, b) * series_of(e->args[1], vars, degree, b);
    case K::div:
        return (1 / nonzero_constant(e->args[1], b)) * series_of(e->args[0], vars, degree, b);
    case K::pow: {
        if (auto base = evaluate_constant(e->args[0], b)) {
            if (auto ex = evaluate_constant(e->args[1], b)) {
                if (auto v = int_power(*base, *ex)) {
                    return TruncatedSeries::constant(n, degree, *v);
                }
            }
        }
        return power(series_of(e->args[0], vars, degree, b), nonnegative_exponent(e->args[1], b));
    }
    case K::call: {
        auto arg = series_of(e->args[0], vars, degree, b);
        if (arg.constant_term() != 0) {
            throw Error(errc::nonzero_constant_term, "exp(...) needs an argument vanishing at the origin");
        }
        return exp_series(arg);
    }
    }
    throw Error(errc::parse_error, "unsupported expression");
}

struct FieldValue {
    std::optional<TruncatedSeries> series;
    std::optional<TruncatedVectorField> field;
};

FieldValue field_of(const Expr &e, const std::vector<std::string> &vars, int degree, const Bindings &b)
{
    const auto n = vars.size();
    using K = ExprNode::Kind;
    auto partial = [&](std::size_t i) { return FieldValue{std::nullopt, TruncatedVectorField::partial(n, degree, i)}; };
    auto as_series = [&](const Expr &x) { return FieldValue{series_of(x, vars, degree, b), std::nullopt}; };
    switch (e->kind) {
    case K::partial: {
        if (auto i = find_index(vars, e->name)) {
            return partial(*i);
        }
        throw Error(errc::parse_error, "unknown variable in d/d" + e->name);
    }
    case K::symbol: {
        if (b.count(e->name) || find_index(vars, e->name)) {
            return as_series(e);
        }
        static const char *aliases[] = {"p", "q", "r"};
        for (std::size_t i = 0; i < 3 && i < n; ++i) {
            if (e->name == aliases[i]) {
                return partial(i);
            }
        }
        throw Error(errc::parse_error, "unknown symbol '" + e->name + "'");
    }
    case K::neg: {
        auto v = field_of(e->args[0], vars, degree, b);
        if (v.field) {
            return {std::nullopt, Rational(-1) * *v.field};
        }
        return {-*v.series, std::nullopt};
    }
    case K::add:
    case K::sub: {
        auto l = field_of(e->args[0], vars, degree, b);
        auto r = field_of(e->args[1], vars, degree, b);
        if (l.field && r.field) {
            return {std::nullopt, e->kind == K::add ? *l.field + *r.field : *l.field - *r.field};
        }
        if (l.series && r.series) {
            return {e->kind == K::add ? *l.series + *r.series : *l.series - *r.series, std::nullopt};
        }
        throw Error(errc::parse_error, "cannot add a function and a vector field");
    }
    case K::mul: {
        auto l = field_of(e->args[0], vars, degree, b);
        auto r = field_of(e->args[1], vars, degree, b);
        if (l.field && r.field) {
            throw Error(errc::parse_error, "product of two vector fields is not a vector field");
        }
        if (l.series && r.series) {
            return {*l.series * *r.series, std::nullopt};
        }
        return l.field ? FieldValue{std::nullopt, *r.series * *l.field} : FieldValue{std::nullopt, *l.series * *r.field};
    }
    case K::div: {
        auto l = field_of(e->args[0], vars, degree, b);
        const auto c = 1 / nonzero_constant(e->args[1], b);
        if (l.field) {
            return {std::nullopt, c * *l.field};
        }
        return {c * *l.series, std::nullopt};
    }
    default:
        return as_series(e);
    }
}

} // namespace

Expr parse_expression(std::string_view text)
{
    return Parser(text).parse();
}

std::optional<Rational> evaluate_constant(const Expr &e, const Bindings &b)
{
    using K = ExprNode::Kind;
    auto both = [&](auto f) -> std::optional<Rational> {
        auto l = evaluate_constant(e->args[0], b);
        auto r = evaluate_constant(e->args[1], b);
        if (!l || !r) {
            return std::nullopt;
        }
        return f(*l, *r);
    };
    switch (e->kind) {
    case K::number:
        return e->value;
    case K::symbol: {
        auto it = b.find(e->name);
        return it == b.end() ? std::nullopt : std::optional<Rational>(it->second);
    }
    case K::neg: {
        auto v = evaluate_constant(e->args[0], b);
        return v ? std::optional<Rational>(-*v) : std::nullopt;
    }
    case K::add:
        return both([](const Rational &x, const Rational &y) -> std::optional<Rational> { return x + y; });
    case K::sub:
        return both([](const Rational &x, const Rational &y) -> std::optional<Rational> { return x - y; });
    case K::mul:
        return both([](const Rational &x, const Rational &y) -> std::optional<Rational> { return x * y; });
    case K::div:
        return both([](const Rational &x, const Rational &y) -> std::optional<Rational> {
            if (y == 0) {
                return std::nullopt;
            }
            return x / y;
        });
    case K::pow:
        return both([](const Rational &x, const Rational &y) { return int_power(x, y); });
    case K::call: {
        auto v = evaluate_constant(e->args[0], b);
        if (v && *v == 0) {
            return Rational(1);
        }
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

std::set<std::string> free_symbols(const Expr &e)
{
    std::set<std::string> out;
    if (e->kind == ExprNode::Kind::symbol) {
        out.insert(e->name);
    }
    for (const auto &a : e->args) {
        auto s = free_symbols(a);
        out.insert(s.begin(), s.end());
    }
    return out;
}

TruncatedSeries evaluate_series(const Expr &e, const std::vector<std::string> &variables, int degree,
                                const Bindings &bindings)
{
    return series_of(e, variables, degree, bindings);
}

TruncatedVectorField evaluate_field(const Expr &e, const std::vector<std::string> &variables, int degree,
                                    const Bindings &bindings)
{
    auto v = field_of(e, variables, degree, bindings);
    if (!v.field) {
        if (v.series && v.series->is_zero()) {
            return TruncatedVectorField::zero(variables.size(), degree);
        }
        throw Error(errc::parse_error, "expression is a function, not a vector field");
    }
    return *v.field;
}

TruncatedSeries parse_series(std::string_view text, std::size_t n_vars, int degree, const Bindings &bindings)
{
    return evaluate_series(parse_expression(text), default_variable_names(n_vars), degree, bindings);
}

TruncatedVectorField parse_field(std::string_view text, std::size_t n_vars, int degree, const Bindings &bindings)
{
    return evaluate_field(parse_expression(text), default_variable_names(n_vars), degree, bindings);
}

} // namespace lierealise
