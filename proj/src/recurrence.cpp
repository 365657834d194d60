#include <lierealise/recurrence.hpp>

#include <algorithm>

namespace lierealise {

LinearRecurrence berlekamp_massey(const std::vector<Rational> &s)
{
    // C(z) = 1 + C_1 z + ... is the connection polynomial; s_k + sum C_j s_{k-j} = 0.
    std::vector<Rational> C{1}, B{1};
    std::size_t L = 0, m = 1;
    Rational b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational d = s[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) {
            d += C[i] * s[n - i];
        }
        if (d == 0) {
            ++m;
            continue;
        }
        const Rational coef = d / b;
        auto T = C;
        if (C.size() < B.size() + m) {
            C.resize(B.size() + m, 0);
        }
        for (std::size_t i = 0; i < B.size(); ++i) {
            C[i + m] -= coef * B[i];
        }
        if (2 * L <= n) {
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            ++m;
        }
    }
    C.resize(L + 1, 0);
    LinearRecurrence r;
    for (std::size_t i = 1; i <= L; ++i) {
        r.coefficients.push_back(-C[i]);
    }
    return r;
}

std::vector<Rational> characteristic_polynomial(const LinearRecurrence &r)
{
    std::vector<Rational> p{1};
    for (const auto &c : r.coefficients) {
        p.push_back(-c);
    }
    return p;
}

namespace {

Rational evaluate(const std::vector<Rational> &p, const Rational &z)
{
    Rational v = 0;
    for (const auto &c : p) {
        v = v * z + c;
    }
    return v;
}

// p / (z - root), assuming exact divisibility.
std::vector<Rational> deflate(const std::vector<Rational> &p, const Rational &root)
{
    std::vector<Rational> q;
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc = acc * root + p[i];
        q.push_back(acc);
    }
    return q;
}

// Positive divisors of |n| by trial division; nullopt when n has a prime
// factor beyond the search bound.
std::optional<std::vector<Integer>> divisors(Integer n)
{
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= n; ++p) {
        if (p > 1000000) {
            return std::nullopt;
        }
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) {
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<Integer> out{1};
    for (const auto &[p, e] : factors) {
        const auto size = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < size; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    return out;
}

} // namespace

std::optional<std::vector<RationalRoot>> rational_roots(const std::vector<Rational> &poly)
{
    std::vector<Rational> p = poly;
    while (!p.empty() && p.front() == 0) {
        p.erase(p.begin());
    }
    if (p.empty()) {
        return std::nullopt;
    }
    std::vector<RationalRoot> roots;
    unsigned zero_mult = 0;
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
        ++zero_mult;
    }
    if (zero_mult) {
        roots.push_back({0, zero_mult});
    }
    if (p.size() == 1) {
        return roots;
    }
    Integer den = 1;
    for (const auto &c : p) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    const Integer lead = Rational(p.front() * den).get_num();
    const Integer tail = Rational(p.back() * den).get_num();
    auto num_div = divisors(tail);
    auto den_div = divisors(lead);
    if (!num_div || !den_div) {
        return std::nullopt;
    }
    std::vector<Rational> candidates;
    for (const auto &a : *num_div) {
        for (const auto &b : *den_div) {
            Rational c(a, b);
            c.canonicalize();
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto &c : candidates) {
        unsigned mult = 0;
        while (p.size() > 1 && evaluate(p, c) == 0) {
            p = deflate(p, c);
            ++mult;
        }
        if (mult) {
            roots.push_back({c, mult});
        }
    }
    if (p.size() > 1) {
        return std::nullopt;
    }
    std::sort(roots.begin(), roots.end(), [](const auto &x, const auto &y) { return x.value < y.value; });
    return roots;
}

} // namespace lierealise
