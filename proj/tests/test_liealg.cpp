#include <doctest.h>

#include "fixtures.hpp"

#include <lierealise/error.hpp>

using namespace lierealise;
using namespace fixtures;

TEST_CASE("sl2 brackets")
{
    auto g = sl2();
    auto E = g.basis_vector("E"), H = g.basis_vector("H"), F = g.basis_vector("F");
    CHECK(g.bracket(H, E) == Rational(2) * E);
    CHECK(g.bracket(E, F) == H);
    CHECK(g.bracket(H, F) == Rational(-2) * F);
    CHECK(is_zero(g.bracket(E + F, E + F)));
    CHECK_THROWS_AS(g.bracket(E, vec({1, 0})), Error);
}

TEST_CASE("Heisenberg bilinearity")
{
    auto g = heisenberg();
    CHECK(g.bracket(vec({1, 1, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
}

TEST_CASE("Jacobi check")
{
    CHECK(check_jacobi(sl2()).holds);
    CHECK(check_jacobi(LieAlgebra::abelian({"a", "b", "c"})).holds);

    StructureConstants sc({"e1", "e2", "e3"});
    sc.set(0, 1, vec({1, 0, 0}));
    sc.set(1, 2, vec({0, 1, 0}));
    sc.set(0, 2, vec({0, 0, 1}));
    auto r = check_jacobi(sc);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failing_triple);
    CHECK(*r.failing_triple == std::array<std::size_t, 3>{0, 1, 2});
    try {
        LieAlgebra bad(sc);
        FAIL("expected rejection");
    } catch (const Error &e) {
        CHECK(e.code() == errc::not_a_lie_algebra);
    }
}

TEST_CASE("structure constants store i<j only")
{
    StructureConstants sc({"a", "b"});
    sc.set(1, 0, vec({1, 0}));
    CHECK(sc.entries().size() == 1);
    CHECK(sc.get(0, 1) == vec({-1, 0}));
    CHECK(sc.get(1, 0) == vec({1, 0}));
    CHECK(is_zero(sc.get(1, 1)));
    CHECK_THROWS_AS(StructureConstants({"a", "a"}), Error);
}

TEST_CASE("subalgebra closure")
{
    auto g = sl2();
    auto E = g.basis_vector("E"), H = g.basis_vector("H"), F = g.basis_vector("F");
    CHECK(is_subalgebra(g, Subspace(3, {F, H})));
    CHECK(is_subalgebra(g, Subspace::full(3)));
    CHECK(is_subalgebra(g, Subspace(3, {E + F})));
    CHECK_FALSE(is_subalgebra(g, Subspace(3, {E, F})));
}

TEST_CASE("largest ideal and effectiveness")
{
    auto p = sl2_pair();
    CHECK(largest_ideal_in(p).is_zero());
    CHECK(is_effective(p));

    auto g = sl2();
    TransitivePair whole(g, {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)}, {});
    CHECK(largest_ideal_in(whole) == Subspace::full(3));
    CHECK_FALSE(is_effective(whole));

    auto s = gl2_semidirect();
    CHECK(s.algebra().dim() == 6);
    CHECK(s.codimension() == 2);
    CHECK(check_jacobi(s.algebra()).holds);
    CHECK(is_effective(s));
}

TEST_CASE("largest ideal is an ideal inside h and maximal")
{
    // g = <a, c> abelian, h = <a>: the whole of h is an ideal.
    auto g = LieAlgebra::abelian({"a", "c"});
    TransitivePair p(g, {g.basis_vector(0)}, {g.basis_vector(1)});
    auto I = largest_ideal_in(p);
    CHECK(I == p.isotropy());
    CHECK(is_ideal(g, I));

    // (t, v) with [t, v] = v, h = <t>: t generates everything, so nothing survives.
    auto b = algebra({"t", "v"}, {{"t", "v", {{"v", 1}}}});
    TransitivePair q(b, {b.basis_vector(0)}, {b.basis_vector(1)});
    CHECK(largest_ideal_in(q).is_zero());
}

TEST_CASE("pair validation")
{
    auto g = sl2();
    auto E = g.basis_vector("E"), H = g.basis_vector("H"), F = g.basis_vector("F");
    CHECK_THROWS_AS(TransitivePair(g, {E, F}, {H}), Error);
    CHECK_THROWS_AS(TransitivePair(g, {F, H}, {F}), Error);
    CHECK_THROWS_AS(TransitivePair(g, {F, H}, {}), Error);
    auto p = TransitivePair::with_standard_complement(g, {F, H});
    CHECK(p.codimension() == 1);
    CHECK(p.adapted_basis().size() == 3);
}

TEST_CASE("semidirect products")
{
    auto s = gl2_semidirect();
    const auto &g = s.algebra();
    // [E12, m2] = m1 under matrix multiplication.
    CHECK(g.bracket(g.basis_vector("E12"), g.basis_vector("m2")) == g.basis_vector("m1"));
    CHECK(is_zero(g.bracket(g.basis_vector("m1"), g.basis_vector("m2"))));

    auto zero_h = semidirect_from_module(LieAlgebra::abelian({}), {}, {"m1", "m2"});
    CHECK(zero_h.algebra().dim() == 2);
    CHECK(structural_report(zero_h.algebra()).abelian);

    Matrix id(1, 1);
    id(0, 0) = 1;
    auto tv = semidirect_from_module(LieAlgebra::abelian({"t"}), {id});
    CHECK(tv.algebra().bracket(tv.algebra().basis_vector(0), tv.algebra().basis_vector(1)) ==
          tv.algebra().basis_vector(1));

    // Two commuting basis elements mapped to non-commuting matrices.
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    CHECK_THROWS_AS(semidirect_from_module(LieAlgebra::abelian({"s", "t"}), {a, b}), Error);
}

TEST_CASE("diagonal pairs")
{
    auto d = diagonal_pair(sl2());
    CHECK(d.algebra().dim() == 6);
    CHECK(d.codimension() == 3);
    CHECK(is_effective(d));

    auto ab = diagonal_pair(LieAlgebra::abelian({"t"}));
    CHECK(ab.codimension() == 1);
    CHECK_FALSE(is_effective(ab));
}

TEST_CASE("structural reports")
{
    auto r = structural_report(sl2());
    CHECK(r.semisimple);
    CHECK(r.center.is_zero());
    CHECK(r.killing_rank == 3);
    CHECK_FALSE(r.has_nonzero_abelian_ideal);
    CHECK(is_simple(sl2()));

    // Killing form of sl2 in the (F, H, E) basis: K(H,H) = 8, K(E,F) = 4.
    const auto &K = r.killing;
    CHECK(K(1, 1) == 8);
    CHECK(K(0, 2) == 4);
    CHECK(K(2, 0) == 4);
    CHECK(K(0, 0) == 0);

    auto a = structural_report(LieAlgebra::abelian({"a", "b"}));
    CHECK(a.killing.is_zero());
    CHECK_FALSE(a.semisimple);
    CHECK(a.abelian);

    auto gl = structural_report(gl2());
    CHECK_FALSE(gl.semisimple);
    CHECK(gl.center == Subspace(4, {vec({1, 0, 0, 1})}));
    CHECK(gl.killing_kernel == gl.center);
    CHECK(gl.has_nonzero_abelian_ideal);
    CHECK_FALSE(is_simple(gl2()));
    CHECK_FALSE(is_simple(diagonal_pair(sl2()).algebra()));
}

TEST_CASE("Killing form is symmetric and invariant")
{
    for (const auto &g : {sl2(), gl2(), heisenberg(), gl2_semidirect().algebra()}) {
        auto K = killing_form(g);
        CHECK(K == K.transposed());
        const auto n = g.dim();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                for (std::size_t z = 0; z < n; ++z) {
                    auto xy = g.bracket_basis(x, y);
                    auto yz = g.bracket_basis(y, z);
                    Rational l = 0, r = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        l += xy[k] * K(k, z);
                        r += K(x, k) * yz[k];
                    }
                    CHECK(l == r);
                }
            }
        }
    }
}

TEST_CASE("nilpotency of ad")
{
    auto g = sl2();
    CHECK(ad_is_nilpotent(g, g.basis_vector("E")));
    CHECK_FALSE(ad_is_nilpotent(g, g.basis_vector("H")));
    CHECK(ad_is_nilpotent(g, zero_vector(3)));
    CHECK(complement_is_nilpotent_subalgebra(sl2_pair()));
    CHECK(complement_is_nilpotent_subalgebra(gl2_semidirect()));
    auto h = sl2_pair().with_complement({g.basis_vector("E") + g.basis_vector("H")});
    CHECK_FALSE(complement_is_nilpotent_subalgebra(h));
}

TEST_CASE("chains of subalgebras")
{
    auto p = sl2_pair();
    CHECK(verify_chain(p, {p.isotropy(), Subspace::full(3)}));
    CHECK_FALSE(verify_chain(p, {Subspace::full(3), p.isotropy()}));

    // Solvable <p, q, xq, x^2 q> abstractly: P = p, Q_i = x^i q with [P, Q_i] = i Q_{i-1}.
    auto g = algebra({"P", "Q0", "Q1", "Q2"}, {{"P", "Q1", {{"Q0", 1}}}, {"P", "Q2", {{"Q1", 2}}}});
    // Isotropy of the origin: Q1, Q2. Chain <Q1,Q2> in <Q0,Q1,Q2> in g.
    TransitivePair t(g, {g.basis_vector("Q1"), g.basis_vector("Q2")}, {g.basis_vector("P"), g.basis_vector("Q0")});
    Subspace mid(4, {g.basis_vector("Q0"), g.basis_vector("Q1"), g.basis_vector("Q2")});
    CHECK(verify_chain(t, {t.isotropy(), mid, Subspace::full(4)}));

    // Diagonal in sl2 + sl2 has no intermediate subalgebra of dimension 4 of this shape.
    auto d = diagonal_pair(sl2());
    std::vector<Vector> bad = d.isotropy_basis();
    bad.push_back(d.complement()[0]);
    Subspace s4(6, bad);
    std::vector<Vector> bad5 = bad;
    bad5.push_back(d.complement()[1]);
    CHECK_FALSE(verify_chain(d, {d.isotropy(), s4, Subspace(6, bad5), Subspace::full(6)}));
}

TEST_CASE("rebase keeps the algebra")
{
    auto g = sl2();
    auto E = g.basis_vector("E"), H = g.basis_vector("H"), F = g.basis_vector("F");
    auto r = rebase(g, {E + F, H, E - F}, {"A", "B", "C"});
    CHECK(check_jacobi(r).holds);
    // [H, E+F] = 2E - 2F = 2 C.
    CHECK(r.bracket(r.basis_vector("B"), r.basis_vector("A")) == Rational(2) * r.basis_vector("C"));
}
