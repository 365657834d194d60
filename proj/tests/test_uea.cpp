#include <doctest.h>

#include "fixtures.hpp"

#include <lierealise/uea.hpp>

#include <random>

using namespace lierealise;
using namespace fixtures;

namespace {

// Adapted order for (sl2, <F, H>) is (F, H, E).
PbwMonomial fhe(unsigned f, unsigned h, unsigned e) { return {f, h, e}; }

UeaElement random_element(const PbwAlgebra &U, std::mt19937 &rng, unsigned max_degree)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> gen(0, U.dim() - 1);
    UeaElement u;
    for (int t = 0; t < 3; ++t) {
        std::vector<std::size_t> word;
        for (unsigned k = deg(rng); k > 0; --k) {
            word.push_back(gen(rng));
        }
        u.add(U.from_word(word), coef(rng));
    }
    return u;
}

} // namespace

TEST_CASE("sl2 products in the adapted order")
{
    PbwAlgebra U(sl2(), 2);
    const auto E = U.generator("E"), F = U.generator("F"), H = U.generator("H");

    auto e2f = U.multiply(U.monomial_power(0, 2), F);
    UeaElement expected;
    expected.add_term(fhe(1, 0, 2), 1);
    expected.add_term(fhe(0, 1, 1), 2);
    expected.add_term(fhe(0, 0, 1), -2);
    CHECK(e2f == expected);
    CHECK(U.to_string(e2f) == "F^1 E^2 + 2 H^1 E^1 - 2 E^1");

    UeaElement eh;
    eh.add_term(fhe(0, 1, 1), 1);
    eh.add_term(fhe(0, 0, 1), -2);
    CHECK(U.multiply(E, H) == eh);

    CHECK(U.multiply(U.one(), e2f) == e2f);
    CHECK(U.multiply(e2f, U.one()) == e2f);
}

TEST_CASE("E^d F and E^d H for d = 1..6")
{
    PbwAlgebra U(sl2(), 2);
    for (unsigned d = 1; d <= 6; ++d) {
        UeaElement f;
        f.add_term(fhe(1, 0, d), 1);
        f.add_term(fhe(0, 1, d - 1), d);
        f.add_term(fhe(0, 0, d - 1), -Rational(d * (d - 1)));
        CHECK(U.multiply(U.monomial_power(0, d), U.generator("F")) == f);

        UeaElement h;
        h.add_term(fhe(0, 1, d), 1);
        h.add_term(fhe(0, 0, d), -Rational(2 * d));
        CHECK(U.multiply(U.monomial_power(0, d), U.generator("H")) == h);
    }
}

TEST_CASE("monomial powers and coefficient extraction")
{
    PbwAlgebra U(sl2(), 2);
    CHECK(U.monomial_power(0, 0) == U.one());
    CHECK(U.monomial_power(0, 2) == UeaElement::monomial(fhe(0, 0, 2)));
    CHECK_THROWS(U.monomial_power(1, 1));

    auto u = U.multiply(U.monomial_power(0, 2), U.generator("F"));
    CHECK(U.linear_coefficient(u, 0) == -2);
    CHECK(U.linear_coefficient(U.one(), 0) == 0);

    PbwAlgebra A(LieAlgebra::abelian({"Y1", "Y2"}));
    auto v = Rational(3) * A.generator(0) + Rational(5) * A.generator(1);
    CHECK(A.linear_coefficient(v, 1) == 5);
    CHECK(A.complement_coefficient(v, {1, 0}) == 3);
}

TEST_CASE("defining relation on basis pairs")
{
    for (const auto &g : {sl2(), heisenberg(), gl2(), gl2_semidirect().algebra()}) {
        PbwAlgebra U(g);
        for (std::size_t i = 0; i < g.dim(); ++i) {
            for (std::size_t j = 0; j < g.dim(); ++j) {
                auto comm = U.multiply(U.generator(i), U.generator(j)) - U.multiply(U.generator(j), U.generator(i));
                UeaElement br;
                const auto &b = g.bracket_basis(i, j);
                for (std::size_t k = 0; k < g.dim(); ++k) {
                    br.add(U.generator(k), b[k]);
                }
                CHECK(comm == br);
            }
        }
    }
}

TEST_CASE("associativity on random elements")
{
    std::mt19937 rng(7);
    for (const auto &g : {sl2(), gl2(), gl2_semidirect().algebra()}) {
        PbwAlgebra U(g);
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_element(U, rng, 4), b = random_element(U, rng, 4), c = random_element(U, rng, 4);
            CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));
        }
    }
}

TEST_CASE("rewriting order does not matter")
{
    std::mt19937 rng(11);
    for (const auto &g : {sl2(), heisenberg(), gl2(), gl2_semidirect().algebra()}) {
        PbwAlgebra U(g);
        std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
        std::uniform_int_distribution<int> len(0, 6);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::size_t> word;
            for (int k = len(rng); k > 0; --k) {
                word.push_back(gen(rng));
            }
            auto left = normalize_by_rewriting(g, word, RewriteStrategy::leftmost);
            auto right = normalize_by_rewriting(g, word, RewriteStrategy::rightmost);
            CHECK(left == right);
            CHECK(U.from_word(word) == left);
        }
    }
}

TEST_CASE("quotient by the isotropy right ideal")
{
    PbwAlgebra U(sl2(), 2);
    PbwOptions q;
    q.modulo_isotropy = true;
    auto full = U.multiply(U.monomial_power(0, 3), U.generator("F"));
    auto reduced = U.multiply(U.monomial_power(0, 3), U.generator("F"), q);
    UeaElement kept;
    for (const auto &[m, c] : full.terms()) {
        if (m[0] == 0 && m[1] == 0) {
            kept.add_term(m, c);
        }
    }
    CHECK(reduced == kept);

    PbwOptions capped;
    capped.max_degree = 2;
    auto low = U.multiply(U.monomial_power(0, 2), U.generator("F"), capped);
    CHECK(low.degree() == 2);
    CHECK(low.coefficient(fhe(1, 0, 2)) == 0);
}

TEST_CASE("divided-power law on an abelian algebra")
{
    // Coproduct of Y^gamma computed as the product of Y_i (x) 1 + 1 (x) Y_i in
    // U (x) U, with each tensor factor multiplied through pbw_multiply.
    PbwAlgebra U(LieAlgebra::abelian({"Y1", "Y2"}));
    using Tensor = std::map<std::pair<PbwMonomial, PbwMonomial>, Rational>;
    auto tensor_mul = [&](const Tensor &a, const Tensor &b) {
        Tensor out;
        for (const auto &[ka, ca] : a) {
            for (const auto &[kb, cb] : b) {
                auto l = U.multiply(UeaElement::monomial(ka.first), UeaElement::monomial(kb.first));
                auto r = U.multiply(UeaElement::monomial(ka.second), UeaElement::monomial(kb.second));
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
    for (unsigned g1 = 0; g1 <= 6; ++g1) {
        for (unsigned g2 = 0; g1 + g2 <= 6; ++g2) {
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
                            const Rational rhs = mult * U.complement_coefficient(y_gamma, {a1 + b1, a2 + b2});
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
        }
    }
}
