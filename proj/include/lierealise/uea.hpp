#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <lierealise/liealg.hpp>

namespace lierealise {

// Exponent vector against the ordered generators X_1..X_m; the monomial is
// X_1^{a_1} ... X_m^{a_m}, so the vector itself encodes the PBW ordering.
using PbwMonomial = std::vector<unsigned>;

unsigned degree(const PbwMonomial &m);

// Element of U(g) in PBW normal form. No zero coefficients are stored, so
// equal elements have identical term maps.
class UeaElement {
public:
    UeaElement() = default;

    static UeaElement monomial(PbwMonomial m, Rational c = 1);

    const std::map<PbwMonomial, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const PbwMonomial &m) const;
    // Highest total degree of a stored monomial (0 for zero).
    unsigned degree() const;

    void add_term(const PbwMonomial &m, const Rational &c);
    void add(const UeaElement &other, const Rational &scale = 1);

    UeaElement &operator+=(const UeaElement &o)
    {
        add(o);
        return *this;
    }
    UeaElement &operator-=(const UeaElement &o)
    {
        add(o, -1);
        return *this;
    }
    friend UeaElement operator+(UeaElement a, const UeaElement &b) { return a += b; }
    friend UeaElement operator-(UeaElement a, const UeaElement &b) { return a -= b; }
    friend UeaElement operator*(const Rational &c, const UeaElement &a);
    friend bool operator==(const UeaElement &, const UeaElement &) = default;

private:
    std::map<PbwMonomial, Rational> terms_;
};

struct PbwOptions {
    // Drop monomials of total degree above this from the returned product.
    std::optional<unsigned> max_degree;
    // Compute in U(g) / h·U(g): monomials with a nonzero isotropy exponent
    // are discarded as soon as they appear. h·U(g) is a right ideal, so this
    // is exact for every functional that vanishes on it.
    bool modulo_isotropy = false;
};

// U(g) for a fixed ordered basis. The first isotropy_dim generators span h,
// the remaining ones are the complement Y_1..Y_n. Products are computed by
// right multiplication with single generators, memoised per (monomial,
// generator); the memo is internally locked, so a const PbwAlgebra may be
// shared between threads.
class PbwAlgebra {
public:
    explicit PbwAlgebra(LieAlgebra algebra, std::size_t isotropy_dim = 0);
    // Generators ordered as p.adapted_basis().
    static PbwAlgebra adapted(const TransitivePair &p);

    PbwAlgebra(PbwAlgebra &&) noexcept;
    PbwAlgebra &operator=(PbwAlgebra &&) noexcept;
    ~PbwAlgebra();

    const LieAlgebra &algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    std::size_t isotropy_dim() const { return isotropy_dim_; }
    std::size_t codimension() const { return dim() - isotropy_dim_; }

    UeaElement one() const;
    UeaElement generator(std::size_t i) const;
    UeaElement generator(const std::string &name) const { return generator(algebra_.index_of(name)); }
    // Y_i^d, with i a 0-based complement index.
    UeaElement monomial_power(std::size_t complement_index, unsigned d) const;
    // Ordered product of generators X_{w_1} X_{w_2} ... in normal form.
    UeaElement from_word(const std::vector<std::size_t> &word) const;

    UeaElement multiply(const UeaElement &a, const UeaElement &b, const PbwOptions &opts = {}) const;
    UeaElement right_multiply(const UeaElement &a, std::size_t generator, bool modulo_isotropy = false) const;

    // Coefficient of the pure complement monomial Y^alpha (all isotropy
    // exponents zero), i.e. the value of the functional a_alpha.
    Rational complement_coefficient(const UeaElement &u, const std::vector<unsigned> &alpha) const;
    // a_{e_i}(u) for a 0-based complement index i.
    Rational linear_coefficient(const UeaElement &u, std::size_t complement_index) const;

    // Renders like "F^1 H^2 E^3 - 2 E^1".
    std::string to_string(const UeaElement &u) const;

private:
    struct Memo;

    UeaElement right_mul_monomial(const PbwMonomial &m, std::size_t j, bool modulo) const;
    bool has_isotropy_factor(const PbwMonomial &m) const;

    LieAlgebra algebra_;
    std::size_t isotropy_dim_;
    // Sparse [x_k, x_j] for k > j.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> brackets_;
    std::unique_ptr<Memo> memo_;
};

enum class RewriteStrategy { leftmost, rightmost };

// Normal form of a word by naive adjacent swaps x_j x_i -> x_i x_j + [x_j, x_i]
// on words, always rewriting the leftmost (or rightmost) inversion first.
// Independent of the memoised multiplication path.
UeaElement normalize_by_rewriting(const LieAlgebra &a, const std::vector<std::size_t> &word, RewriteStrategy strategy);

} // namespace lierealise
