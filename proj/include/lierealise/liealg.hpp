#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <lierealise/linalg.hpp>

namespace lierealise {

// Raw bracket table on a named basis. Only i<j entries are stored; no
// identities are enforced, which is what lets check_jacobi report on
// arbitrary (possibly invalid) input.
class StructureConstants {
public:
    explicit StructureConstants(std::vector<std::string> basis_names);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string &name) const;

    // Sets [e_i, e_j] = value (and implicitly [e_j, e_i] = -value).
    void set(std::size_t i, std::size_t j, Vector value);
    Vector get(std::size_t i, std::size_t j) const;

    const std::map<std::pair<std::size_t, std::size_t>, Vector> &entries() const { return entries_; }

private:
    std::vector<std::string> names_;
    std::map<std::pair<std::size_t, std::size_t>, Vector> entries_;
};

struct JacobiCheck {
    bool holds = true;
    std::optional<std::array<std::size_t, 3>> failing_triple;
};

JacobiCheck check_jacobi(const StructureConstants &sc);

// Finite-dimensional Lie algebra over Q. Construction verifies the Jacobi
// identity; an instance is immutable afterwards.
class LieAlgebra {
public:
    explicit LieAlgebra(StructureConstants sc);

    static LieAlgebra abelian(std::vector<std::string> names);

    std::size_t dim() const { return sc_.dim(); }
    const std::vector<std::string> &names() const { return sc_.names(); }
    const std::string &name(std::size_t i) const { return sc_.names().at(i); }
    // Throws Error(schema_violation) for unknown names.
    std::size_t index_of(const std::string &name) const;
    const StructureConstants &structure() const { return sc_; }

    Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
    Vector basis_vector(const std::string &name) const { return basis_vector(index_of(name)); }

    const Vector &bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vector bracket(const Vector &u, const Vector &v) const;
    // Matrix of v -> [x, v].
    Matrix ad(const Vector &x) const;

private:
    StructureConstants sc_;
    std::vector<Vector> table_;
};

JacobiCheck check_jacobi(const LieAlgebra &a);

// Same algebra expressed in a new basis (rows are vectors in old coordinates).
LieAlgebra rebase(const LieAlgebra &a, const std::vector<Vector> &new_basis, std::vector<std::string> new_names);

Subspace span_of_brackets(const LieAlgebra &a, const Subspace &u, const Subspace &v);
bool is_subalgebra(const LieAlgebra &a, const Subspace &s);
bool is_ideal(const LieAlgebra &a, const Subspace &s);
Subspace ideal_generated_by(const LieAlgebra &a, const std::vector<Vector> &generators);
Subspace center(const LieAlgebra &a);
// g, [g,g], [[g,g],[g,g]], ... until it stabilises (last entry repeats nothing).
std::vector<Subspace> derived_series(const LieAlgebra &a, const Subspace &start);
Matrix killing_form(const LieAlgebra &a);
bool ad_is_nilpotent(const LieAlgebra &a, const Vector &v);
bool is_simple(const LieAlgebra &a);

// (g, h) with an ordered basis of h and an ordered complement Y_1..Y_n.
class TransitivePair {
public:
    TransitivePair(LieAlgebra algebra, std::vector<Vector> isotropy_basis, std::vector<Vector> complement);

    // Complement made of the basis vectors e_j that are not echelon pivots of h.
    static TransitivePair with_standard_complement(LieAlgebra algebra, const std::vector<Vector> &isotropy_spanning);

    const LieAlgebra &algebra() const { return algebra_; }
    const Subspace &isotropy() const { return isotropy_; }
    const std::vector<Vector> &isotropy_basis() const { return isotropy_basis_; }
    const std::vector<Vector> &complement() const { return complement_; }
    std::size_t codimension() const { return complement_.size(); }

    TransitivePair with_complement(std::vector<Vector> complement) const;
    // Isotropy basis followed by the complement.
    std::vector<Vector> adapted_basis() const;

private:
    LieAlgebra algebra_;
    Subspace isotropy_;
    std::vector<Vector> isotropy_basis_;
    std::vector<Vector> complement_;
};

Subspace largest_ideal_in(const TransitivePair &p);
bool is_effective(const TransitivePair &p);

// h ⋉ m for a representation rho of h on m = K^k (rho[i] is the matrix of
// basis element i). The pair is (h ⋉ m, h) with the m-basis as complement.
// Throws Error(not_a_representation) if rho does not respect brackets.
TransitivePair semidirect_from_module(const LieAlgebra &h, const std::vector<Matrix> &rho,
                                      std::vector<std::string> module_names = {});

// (k ⊕ k, diagonal) with complement {(x, 0)}.
TransitivePair diagonal_pair(const LieAlgebra &k);

struct StructuralReport {
    std::vector<Subspace> derived_series;
    Subspace center;
    Matrix killing;
    std::size_t killing_rank = 0;
    Subspace killing_kernel;
    bool semisimple = false;
    bool abelian = false;
    bool solvable = false;
    bool has_nonzero_abelian_ideal = false;
    // Last nonzero term of the derived series of the Killing kernel.
    std::optional<Subspace> abelian_ideal;
};

StructuralReport structural_report(const LieAlgebra &a);

// chain[i] must be a subalgebra of codimension n - i, with chain[0] = h,
// chain[n] = g and chain[i] ⊆ chain[i + 1].
bool verify_chain(const TransitivePair &p, const std::vector<Subspace> &chain);

// The complement spans a subalgebra acting nilpotently on g (exact test via
// the descending flag g ⊇ ad(m)g ⊇ ad(m)^2 g ⊇ ...).
bool complement_is_nilpotent_subalgebra(const TransitivePair &p);

} // namespace lierealise
