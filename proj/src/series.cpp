#include <lierealise/error.hpp>
#include <lierealise/series.hpp>

#include <algorithm>
#include <sstream>

namespace lierealise {

unsigned total_degree(const Exponent &e)
{
    unsigned d = 0;
    for (auto v : e) {
        d += v;
    }
    return d;
}

bool GradedLexLess::operator()(const Exponent &a, const Exponent &b) const
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_vars(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw Error(errc::dimension_mismatch, "series live in different numbers of variables");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t n_vars, int degree) : n_vars_(n_vars), degree_(std::max(degree, -1))
{
    if (n_vars == 0) {
        throw Error(errc::invalid_argument, "series need at least one variable");
    }
}

TruncatedSeries TruncatedSeries::constant(std::size_t n_vars, int degree, const Rational &c)
{
    TruncatedSeries s(n_vars, degree);
    s.add_term(Exponent(n_vars, 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t n_vars, int degree, std::size_t i)
{
    if (i >= n_vars) {
        throw Error(errc::dimension_mismatch, "variable index out of range");
    }
    Exponent e(n_vars, 0);
    e[i] = 1;
    return monomial(n_vars, degree, e);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t n_vars, int degree, const Exponent &e, const Rational &c)
{
    TruncatedSeries s(n_vars, degree);
    s.add_term(e, c);
    return s;
}

Rational TruncatedSeries::coefficient(const Exponent &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int TruncatedSeries::order() const
{
    return terms_.empty() ? kInfiniteOrder : static_cast<int>(total_degree(terms_.begin()->first));
}

int TruncatedSeries::max_term_degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
}

void TruncatedSeries::add_term(const Exponent &e, const Rational &c)
{
    if (e.size() != n_vars_) {
        throw Error(errc::dimension_mismatch, "exponent length differs from number of variables");
    }
    if (c == 0 || static_cast<int>(total_degree(e)) > degree_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TruncatedSeries TruncatedSeries::truncated(int degree) const
{
    TruncatedSeries r(n_vars_, std::min(degree, degree_));
    for (const auto &[e, c] : terms_) {
        if (static_cast<int>(total_degree(e)) > r.degree_) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative(std::size_t i) const
{
    if (i >= n_vars_) {
        throw Error(errc::dimension_mismatch, "variable index out of range");
    }
    TruncatedSeries r(n_vars_, degree_ - 1);
    for (const auto &[e, c] : terms_) {
        if (e[i] == 0) {
            continue;
        }
        Exponent f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    require_same_vars(n_vars_, o.n_vars_);
    if (o.degree_ < degree_) {
        *this = truncated(o.degree_);
    }
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
    return *this += -o;
}

TruncatedSeries operator-(const TruncatedSeries &a)
{
    return Rational(-1) * a;
}

TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a)
{
    TruncatedSeries r(a.n_vars_, a.degree_);
    if (c != 0) {
        for (const auto &[e, v] : a.terms_) {
            r.terms_.emplace_hint(r.terms_.end(), e, c * v);
        }
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_vars(a.n_vars_, b.n_vars_);
    TruncatedSeries r(a.n_vars_, std::min(a.degree_, b.degree_));
    Exponent e(a.n_vars_);
    for (const auto &[ea, ca] : a.terms_) {
        const int da = static_cast<int>(total_degree(ea));
        for (const auto &[eb, cb] : b.terms_) {
            if (da + static_cast<int>(total_degree(eb)) > r.degree_) {
                break;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries &o, int d) const
{
    return truncated(d).terms_ == o.truncated(d).terms_;
}

TruncatedSeries power(const TruncatedSeries &f, unsigned k)
{
    auto r = TruncatedSeries::constant(f.n_vars(), f.degree(), 1);
    for (unsigned i = 0; i < k; ++i) {
        r = r * f;
    }
    return r;
}

TruncatedSeries compose(const TruncatedSeries &f, const std::vector<TruncatedSeries> &subst)
{
    if (subst.size() != f.n_vars()) {
        throw Error(errc::dimension_mismatch, "need one substitution per variable");
    }
    if (subst.empty()) {
        return f;
    }
    const auto m = subst.front().n_vars();
    int degree = f.degree();
    for (const auto &s : subst) {
        require_same_vars(m, s.n_vars());
        if (s.constant_term() != 0) {
            throw Error(errc::nonzero_constant_term, "substituted series must have zero constant term");
        }
        degree = std::min(degree, s.degree());
    }
    TruncatedSeries result(m, degree);
    if (degree < 0) {
        return result;
    }
    // powers[i][k] = subst_i^k, built lazily.
    std::vector<std::vector<TruncatedSeries>> powers(subst.size());
    for (std::size_t i = 0; i < subst.size(); ++i) {
        powers[i].push_back(TruncatedSeries::constant(m, degree, 1));
    }
    auto pw = [&](std::size_t i, unsigned k) -> const TruncatedSeries & {
        while (powers[i].size() <= k) {
            powers[i].push_back(powers[i].back() * subst[i].truncated(degree));
        }
        return powers[i][k];
    };
    for (const auto &[e, c] : f.terms()) {
        if (static_cast<int>(total_degree(e)) > degree) {
            break;
        }
        auto term = TruncatedSeries::constant(m, degree, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term = term * pw(i, e[i]);
            }
        }
        result += term;
    }
    return result;
}

TruncatedSeries exp_series(const TruncatedSeries &f)
{
    if (f.constant_term() != 0) {
        throw Error(errc::nonzero_constant_term, "exp needs a series with zero constant term");
    }
    auto result = TruncatedSeries::constant(f.n_vars(), f.degree(), 1);
    auto term = result;
    for (int k = 1; k <= f.degree(); ++k) {
        term = Rational(1, k) * (term * f);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

std::vector<std::string> default_variable_names(std::size_t n)
{
    switch (n) {
    case 1:
        return {"x"};
    case 2:
        return {"x", "y"};
    case 3:
        return {"x", "y", "z"};
    default:
        break;
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

std::string to_string(const TruncatedSeries &f, const std::vector<std::string> &names)
{
    if (names.size() != f.n_vars()) {
        throw Error(errc::dimension_mismatch, "need one name per variable");
    }
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : f.terms()) {
        Rational mag = c;
        if (c < 0) {
            os << (first ? "-" : " - ");
            mag = -c;
        } else if (!first) {
            os << " + ";
        }
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (any) {
                mono << '*';
            }
            mono << names[i];
            if (e[i] > 1) {
                mono << '^' << e[i];
            }
            any = true;
        }
        if (!any) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << to_string(mag) << '*' << mono.str();
        }
        first = false;
    }
    return os.str();
}

std::string to_string(const TruncatedSeries &f)
{
    return to_string(f, default_variable_names(f.n_vars()));
}

TruncatedVectorField::TruncatedVectorField(std::vector<TruncatedSeries> coeffs)
    : TruncatedVectorField(std::move(coeffs), kInfiniteOrder)
{
}

TruncatedVectorField::TruncatedVectorField(std::vector<TruncatedSeries> coeffs, int degree)
    : degree_(degree), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty() && degree == kInfiniteOrder) {
        throw Error(errc::invalid_argument, "a vector field in 0 variables needs an explicit degree");
    }
    const auto n = coeffs_.size();
    for (const auto &c : coeffs_) {
        if (c.n_vars() != n) {
            throw Error(errc::dimension_mismatch, "field coefficients must live in as many variables as the field has components");
        }
        degree_ = std::min(degree_, c.degree());
    }
    for (auto &c : coeffs_) {
        if (c.degree() != degree_) {
            c = c.truncated(degree_);
        }
    }
}

TruncatedVectorField TruncatedVectorField::zero(std::size_t n_vars, int degree)
{
    std::vector<TruncatedSeries> c;
    for (std::size_t i = 0; i < n_vars; ++i) {
        c.emplace_back(n_vars, degree);
    }
    return TruncatedVectorField(std::move(c), degree);
}

TruncatedVectorField TruncatedVectorField::partial(std::size_t n_vars, int degree, std::size_t i)
{
    auto z = zero(n_vars, degree);
    z.coeffs_.at(i) = TruncatedSeries::constant(n_vars, degree, 1);
    return z;
}

bool TruncatedVectorField::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto &c) { return c.is_zero(); });
}

TruncatedVectorField TruncatedVectorField::truncated(int degree) const
{
    std::vector<TruncatedSeries> c;
    for (const auto &s : coeffs_) {
        c.push_back(s.truncated(degree));
    }
    return TruncatedVectorField(std::move(c), std::min(degree, degree_));
}

bool TruncatedVectorField::agrees_with(const TruncatedVectorField &o, int d) const
{
    if (n_vars() != o.n_vars()) {
        return false;
    }
    for (std::size_t i = 0; i < n_vars(); ++i) {
        if (!coeffs_[i].agrees_with(o.coeffs_[i], d)) {
            return false;
        }
    }
    return true;
}

TruncatedVectorField &TruncatedVectorField::operator+=(const TruncatedVectorField &o)
{
    require_same_vars(n_vars(), o.n_vars());
    for (std::size_t i = 0; i < n_vars(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    degree_ = std::min(degree_, o.degree_);
    return *this;
}

TruncatedVectorField &TruncatedVectorField::operator-=(const TruncatedVectorField &o)
{
    return *this += Rational(-1) * o;
}

TruncatedVectorField operator*(const Rational &c, const TruncatedVectorField &a)
{
    auto r = a;
    for (auto &s : r.coeffs_) {
        s = c * s;
    }
    return r;
}

TruncatedVectorField operator*(const TruncatedSeries &f, const TruncatedVectorField &a)
{
    std::vector<TruncatedSeries> c;
    for (const auto &s : a.coeffs_) {
        c.push_back(f * s);
    }
    return TruncatedVectorField(std::move(c), a.degree_);
}

TruncatedSeries apply(const TruncatedVectorField &X, const TruncatedSeries &f)
{
    require_same_vars(X.n_vars(), f.n_vars());
    TruncatedSeries r(f.n_vars(), std::min(X.degree(), f.degree() - 1));
    for (std::size_t i = 0; i < X.n_vars(); ++i) {
        r += X.coefficient(i) * f.derivative(i);
    }
    return r;
}

TruncatedVectorField bracket(const TruncatedVectorField &X, const TruncatedVectorField &Y)
{
    require_same_vars(X.n_vars(), Y.n_vars());
    std::vector<TruncatedSeries> c;
    for (std::size_t j = 0; j < X.n_vars(); ++j) {
        c.push_back(apply(X, Y.coefficient(j)) - apply(Y, X.coefficient(j)));
    }
    return TruncatedVectorField(std::move(c), std::min(X.degree(), Y.degree()) - 1);
}

int order_vf(const TruncatedVectorField &X)
{
    int m = kInfiniteOrder;
    for (const auto &c : X.coefficients()) {
        m = std::min(m, c.order());
    }
    return m == kInfiniteOrder ? m : m - 1;
}

std::vector<TruncatedSeries> formal_inverse(const std::vector<TruncatedSeries> &subst)
{
    const auto n = subst.size();
    if (n == 0) {
        return {};
    }
    int degree = subst.front().degree();
    Matrix linear(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        require_same_vars(subst[i].n_vars(), n);
        if (subst[i].constant_term() != 0) {
            throw Error(errc::nonzero_constant_term, "substitution must fix the origin");
        }
        degree = std::min(degree, subst[i].degree());
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n, 0);
            e[j] = 1;
            linear(i, j) = subst[i].coefficient(e);
        }
    }
    auto inv = inverse(linear);
    if (!inv) {
        throw Error(errc::singular_linear_part, "linear part of the substitution is not invertible");
    }
    // subst = A u + N(u); iterate psi <- A^{-1} (x - N(psi)).
    std::vector<TruncatedSeries> nonlinear;
    for (std::size_t i = 0; i < n; ++i) {
        auto s = subst[i].truncated(degree);
        for (std::size_t j = 0; j < n; ++j) {
            s -= linear(i, j) * TruncatedSeries::variable(n, degree, j);
        }
        nonlinear.push_back(std::move(s));
    }
    auto combine = [&](const std::vector<TruncatedSeries> &rhs) {
        std::vector<TruncatedSeries> out(n, TruncatedSeries(n, degree));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if ((*inv)(i, j) != 0) {
                    out[i] += (*inv)(i, j) * rhs[j];
                }
            }
        }
        return out;
    };
    std::vector<TruncatedSeries> x;
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(TruncatedSeries::variable(n, degree, i));
    }
    auto psi = combine(x);
    for (int iter = 1; iter < std::max(degree, 1); ++iter) {
        std::vector<TruncatedSeries> rhs;
        for (std::size_t i = 0; i < n; ++i) {
            rhs.push_back(x[i] - compose(nonlinear[i], psi));
        }
        auto next = combine(rhs);
        if (next == psi) {
            break;
        }
        psi = std::move(next);
    }
    return psi;
}

TruncatedVectorField coordinate_change(const TruncatedVectorField &X, const std::vector<TruncatedSeries> &subst)
{
    if (subst.size() != X.n_vars()) {
        throw Error(errc::dimension_mismatch, "need one substitution per variable");
    }
    const auto psi = formal_inverse(subst);
    std::vector<TruncatedSeries> c;
    for (const auto &p : psi) {
        c.push_back(compose(apply(X, p), subst));
    }
    return TruncatedVectorField(std::move(c), X.degree() - 1);
}

std::string to_string(const TruncatedVectorField &X, const std::vector<std::string> &names)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < X.n_vars(); ++i) {
        if (X.coefficient(i).is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        os << '(' << to_string(X.coefficient(i), names) << ")·d/d" << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

std::string to_string(const TruncatedVectorField &X)
{
    return to_string(X, default_variable_names(X.n_vars()));
}

} // namespace lierealise
