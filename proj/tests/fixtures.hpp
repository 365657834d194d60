#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <lierealise/liealg.hpp>
#include <lierealise/series.hpp>

namespace fixtures {

using namespace lierealise;

struct Bracket {
    std::string lhs, rhs;
    std::vector<std::pair<std::string, Rational>> out;
};

inline LieAlgebra algebra(std::vector<std::string> names, const std::vector<Bracket> &brackets)
{
    StructureConstants sc(names);
    for (const auto &b : brackets) {
        Vector v = zero_vector(names.size());
        for (const auto &[n, c] : b.out) {
            v[*sc.index_of(n)] += c;
        }
        sc.set(*sc.index_of(b.lhs), *sc.index_of(b.rhs), v);
    }
    return LieAlgebra(std::move(sc));
}

// Basis ordered (F, H, E) so that the adapted order of (sl2, <F, H>) is the
// stored one.
inline LieAlgebra sl2()
{
    return algebra({"F", "H", "E"}, {{"H", "E", {{"E", 2}}}, {"H", "F", {{"F", -2}}}, {"E", "F", {{"H", 1}}}});
}

inline TransitivePair sl2_pair()
{
    auto g = sl2();
    return TransitivePair(g, {g.basis_vector("F"), g.basis_vector("H")}, {g.basis_vector("E")});
}

inline LieAlgebra heisenberg()
{
    return algebra({"e1", "e2", "e3"}, {{"e1", "e2", {{"e3", 1}}}});
}

inline LieAlgebra gl2()
{
    // E11, E12, E21, E22 with [Eij, Ekl] = d_jk Eil - d_li Ekj.
    return algebra({"E11", "E12", "E21", "E22"},
                   {{"E11", "E12", {{"E12", 1}}},
                    {"E11", "E21", {{"E21", -1}}},
                    {"E12", "E21", {{"E11", 1}, {"E22", -1}}},
                    {"E12", "E22", {{"E12", 1}}},
                    {"E21", "E22", {{"E21", -1}}}});
}

// gl2 acting on K^2 by matrix multiplication.
inline TransitivePair gl2_semidirect()
{
    std::vector<Matrix> rho;
    for (auto [r, c] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        Matrix m(2, 2);
        m(r, c) = 1;
        rho.push_back(m);
    }
    return semidirect_from_module(gl2(), rho);
}

inline Vector vec(std::initializer_list<int> xs)
{
    Vector v;
    for (int x : xs) {
        v.emplace_back(x);
    }
    return v;
}

} // namespace fixtures
