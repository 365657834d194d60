#include <lierealise/error.hpp>
#include <lierealise/liealg.hpp>

#include <set>

namespace lierealise {

StructureConstants::StructureConstants(std::vector<std::string> basis_names) : names_(std::move(basis_names))
{
    std::set<std::string> seen;
    for (const auto &n : names_) {
        if (n.empty()) {
            throw Error(errc::schema_violation, "empty basis name");
        }
        if (!seen.insert(n).second) {
            throw Error(errc::schema_violation, "duplicate basis name '" + n + "'");
        }
    }
}

std::optional<std::size_t> StructureConstants::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

void StructureConstants::set(std::size_t i, std::size_t j, Vector value)
{
    if (i >= dim() || j >= dim()) {
        throw Error(errc::dimension_mismatch, "basis index out of range");
    }
    if (value.size() != dim()) {
        throw Error(errc::dimension_mismatch, "bracket value has wrong length");
    }
    if (i == j) {
        if (!is_zero(value)) {
            throw Error(errc::not_a_lie_algebra, "[e_i, e_i] must vanish");
        }
        return;
    }
    if (i > j) {
        value = Rational(-1) * value;
        std::swap(i, j);
    }
    if (is_zero(value)) {
        entries_.erase({i, j});
    } else {
        entries_[{i, j}] = std::move(value);
    }
}

Vector StructureConstants::get(std::size_t i, std::size_t j) const
{
    if (i == j) {
        return zero_vector(dim());
    }
    bool flip = i > j;
    if (flip) {
        std::swap(i, j);
    }
    auto it = entries_.find({i, j});
    if (it == entries_.end()) {
        return zero_vector(dim());
    }
    return flip ? Rational(-1) * it->second : it->second;
}

namespace {

// [u, v] for arbitrary vectors, straight from a bracket lookup.
template <typename Lookup>
Vector expand_bracket(std::size_t n, const Vector &u, const Vector &v, Lookup &&lookup)
{
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0 || i == j) {
                continue;
            }
            axpy(r, u[i] * v[j], lookup(i, j));
        }
    }
    return r;
}

} // namespace

JacobiCheck check_jacobi(const StructureConstants &sc)
{
    const auto n = sc.dim();
    auto lookup = [&](std::size_t i, std::size_t j) { return sc.get(i, j); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector s = expand_bracket(n, sc.get(i, j), ek, lookup);
                s = s + expand_bracket(n, sc.get(j, k), ei, lookup);
                s = s + expand_bracket(n, sc.get(k, i), ej, lookup);
                if (!is_zero(s)) {
                    return {false, std::array<std::size_t, 3>{i, j, k}};
                }
            }
        }
    }
    return {};
}

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc))
{
    auto jac = check_jacobi(sc_);
    if (!jac.holds) {
        const auto &t = *jac.failing_triple;
        throw Error(errc::not_a_lie_algebra, "Jacobi identity fails on (" + name(t[0]) + ", " + name(t[1]) + ", "
                                                 + name(t[2]) + ")");
    }
    const auto n = dim();
    table_.resize(n * n, zero_vector(n));
    for (const auto &[ij, v] : sc_.entries()) {
        table_[ij.first * n + ij.second] = v;
        table_[ij.second * n + ij.first] = Rational(-1) * v;
    }
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> names) { return LieAlgebra(StructureConstants(std::move(names))); }

std::size_t LieAlgebra::index_of(const std::string &name) const
{
    auto idx = sc_.index_of(name);
    if (!idx) {
        throw Error(errc::schema_violation, "unknown basis name '" + name + "'");
    }
    return *idx;
}

Vector LieAlgebra::bracket(const Vector &u, const Vector &v) const
{
    if (u.size() != dim() || v.size() != dim()) {
        throw Error(errc::dimension_mismatch, "bracket arguments must have length " + std::to_string(dim()));
    }
    return expand_bracket(dim(), u, v, [&](std::size_t i, std::size_t j) -> const Vector & { return bracket_basis(i, j); });
}

Matrix LieAlgebra::ad(const Vector &x) const
{
    const auto n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = bracket(x, basis_vector(j));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = col[i];
        }
    }
    return m;
}

JacobiCheck check_jacobi(const LieAlgebra &a) { return check_jacobi(a.structure()); }

LieAlgebra rebase(const LieAlgebra &a, const std::vector<Vector> &new_basis, std::vector<std::string> new_names)
{
    const auto n = a.dim();
    if (new_basis.size() != n || new_names.size() != n) {
        throw Error(errc::dimension_mismatch, "new basis must have dim elements");
    }
    // Columns of b are the new basis vectors; coordinates are b^{-1} v.
    auto b = Matrix::from_rows(new_basis, n).transposed();
    auto binv = inverse(b);
    if (!binv) {
        throw Error(errc::invalid_argument, "new basis is linearly dependent");
    }
    StructureConstants sc(std::move(new_names));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sc.set(i, j, (*binv) * a.bracket(new_basis[i], new_basis[j]));
        }
    }
    return LieAlgebra(std::move(sc));
}

Subspace span_of_brackets(const LieAlgebra &a, const Subspace &u, const Subspace &v)
{
    std::vector<Vector> vecs;
    for (const auto &x : u.basis()) {
        for (const auto &y : v.basis()) {
            auto b = a.bracket(x, y);
            if (!is_zero(b)) {
                vecs.push_back(std::move(b));
            }
        }
    }
    return Subspace(a.dim(), vecs);
}

bool is_subalgebra(const LieAlgebra &a, const Subspace &s)
{
    const auto &b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!s.contains(a.bracket(b[i], b[j]))) {
                return false;
            }
        }
    }
    return true;
}

bool is_ideal(const LieAlgebra &a, const Subspace &s)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (const auto &v : s.basis()) {
            if (!s.contains(a.bracket(a.basis_vector(i), v))) {
                return false;
            }
        }
    }
    return true;
}

Subspace ideal_generated_by(const LieAlgebra &a, const std::vector<Vector> &generators)
{
    Subspace current(a.dim(), generators);
    while (true) {
        auto vecs = current.basis();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (const auto &v : current.basis()) {
                vecs.push_back(a.bracket(a.basis_vector(i), v));
            }
        }
        Subspace next(a.dim(), vecs);
        if (next.dim() == current.dim()) {
            return current;
        }
        current = std::move(next);
    }
}

Subspace center(const LieAlgebra &a)
{
    const auto n = a.dim();
    // x is central iff [x, e_j] = 0 for every j: stack ad(e_j)^T-style rows.
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto &b = a.bracket_basis(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                m(j * n + r, i) = b[r];
            }
        }
    }
    return Subspace(n, nullspace(m));
}

std::vector<Subspace> derived_series(const LieAlgebra &a, const Subspace &start)
{
    std::vector<Subspace> series{start};
    while (!series.back().is_zero()) {
        auto next = span_of_brackets(a, series.back(), series.back());
        if (next.dim() == series.back().dim()) {
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

Matrix killing_form(const LieAlgebra &a)
{
    const auto n = a.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ads.push_back(a.ad(a.basis_vector(i)));
    }
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // tr(AB) without forming AB.
            Rational t = 0;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (ads[i](r, c) != 0 && ads[j](c, r) != 0) {
                        t += ads[i](r, c) * ads[j](c, r);
                    }
                }
            }
            k(i, j) = t;
            k(j, i) = t;
        }
    }
    return k;
}

bool ad_is_nilpotent(const LieAlgebra &a, const Vector &v)
{
    auto ad = a.ad(v);
    auto p = Matrix::identity(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        p = p * ad;
        if (p.is_zero()) {
            return true;
        }
    }
    return p.is_zero();
}

bool is_simple(const LieAlgebra &a)
{
    if (a.dim() == 0 || !structural_report(a).semisimple) {
        return false;
    }
    const auto full = Subspace::full(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!(ideal_generated_by(a, {a.basis_vector(i)}) == full)) {
            return false;
        }
    }
    return true;
}

TransitivePair::TransitivePair(LieAlgebra algebra, std::vector<Vector> isotropy_basis, std::vector<Vector> complement)
    : algebra_(std::move(algebra)), isotropy_basis_(std::move(isotropy_basis)), complement_(std::move(complement))
{
    const auto n = algebra_.dim();
    for (const auto &v : isotropy_basis_) {
        if (v.size() != n) {
            throw Error(errc::malformed_pair, "isotropy vector has wrong length");
        }
    }
    for (const auto &v : complement_) {
        if (v.size() != n) {
            throw Error(errc::malformed_pair, "complement vector has wrong length");
        }
    }
    isotropy_ = Subspace(n, isotropy_basis_);
    if (isotropy_.dim() != isotropy_basis_.size()) {
        throw Error(errc::malformed_pair, "isotropy basis is linearly dependent");
    }
    if (!is_subalgebra(algebra_, isotropy_)) {
        throw Error(errc::malformed_pair, "isotropy is not closed under the bracket");
    }
    if (isotropy_.dim() + complement_.size() != n) {
        throw Error(errc::malformed_pair, "complement size must equal dim g - dim h = "
                                              + std::to_string(n - isotropy_.dim()));
    }
    if (Subspace(n, adapted_basis()).dim() != n) {
        throw Error(errc::malformed_pair, "complement is not a vector-space complement of the isotropy");
    }
}

TransitivePair TransitivePair::with_standard_complement(LieAlgebra algebra, const std::vector<Vector> &isotropy_spanning)
{
    Subspace h(algebra.dim(), isotropy_spanning);
    auto basis = h.basis();
    auto comp = h.standard_complement();
    return TransitivePair(std::move(algebra), std::move(basis), std::move(comp));
}

TransitivePair TransitivePair::with_complement(std::vector<Vector> complement) const
{
    return TransitivePair(algebra_, isotropy_basis_, std::move(complement));
}

std::vector<Vector> TransitivePair::adapted_basis() const
{
    auto b = isotropy_basis_;
    b.insert(b.end(), complement_.begin(), complement_.end());
    return b;
}

Subspace largest_ideal_in(const TransitivePair &p)
{
    const auto &g = p.algebra();
    const auto n = g.dim();
    Subspace current = p.isotropy();
    while (!current.is_zero()) {
        const auto &b = current.basis();
        // x = sum c_l b_l stays iff reduce([e_j, x]) = 0 for all j.
        Matrix m(n * n, b.size());
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < b.size(); ++l) {
                auto r = current.reduce(g.bracket(g.basis_vector(j), b[l]));
                for (std::size_t k = 0; k < n; ++k) {
                    m(j * n + k, l) = r[k];
                }
            }
        }
        std::vector<Vector> keep;
        for (const auto &c : nullspace(m)) {
            Vector v = zero_vector(n);
            for (std::size_t l = 0; l < b.size(); ++l) {
                axpy(v, c[l], b[l]);
            }
            keep.push_back(std::move(v));
        }
        Subspace next(n, keep);
        if (next.dim() == current.dim()) {
            break;
        }
        current = std::move(next);
    }
    return current;
}

bool is_effective(const TransitivePair &p) { return largest_ideal_in(p).is_zero(); }

TransitivePair semidirect_from_module(const LieAlgebra &h, const std::vector<Matrix> &rho, std::vector<std::string> module_names)
{
    const auto dh = h.dim();
    if (rho.size() != dh) {
        throw Error(errc::not_a_representation, "need one matrix per basis element of h");
    }
    const std::size_t dm = dh == 0 ? (module_names.empty() ? 0 : module_names.size()) : rho.front().rows();
    for (const auto &m : rho) {
        if (m.rows() != dm || m.cols() != dm) {
            throw Error(errc::not_a_representation, "representation matrices must be square of equal size");
        }
    }
    for (std::size_t i = 0; i < dh; ++i) {
        for (std::size_t j = i + 1; j < dh; ++j) {
            Matrix lhs(dm, dm);
            const auto &b = h.bracket_basis(i, j);
            for (std::size_t k = 0; k < dh; ++k) {
                if (b[k] != 0) {
                    for (std::size_t r = 0; r < dm; ++r) {
                        for (std::size_t c = 0; c < dm; ++c) {
                            lhs(r, c) += b[k] * rho[k](r, c);
                        }
                    }
                }
            }
            if (!(lhs == rho[i] * rho[j] - rho[j] * rho[i])) {
                throw Error(errc::not_a_representation, "rho([" + h.name(i) + ", " + h.name(j)
                                                            + "]) differs from the commutator of the images");
            }
        }
    }
    if (module_names.empty()) {
        for (std::size_t k = 0; k < dm; ++k) {
            module_names.push_back("m" + std::to_string(k + 1));
        }
    }
    if (module_names.size() != dm) {
        throw Error(errc::dimension_mismatch, "module names do not match the module dimension");
    }
    auto names = h.names();
    names.insert(names.end(), module_names.begin(), module_names.end());
    const auto n = dh + dm;
    StructureConstants sc(names);
    for (std::size_t i = 0; i < dh; ++i) {
        for (std::size_t j = i + 1; j < dh; ++j) {
            auto v = zero_vector(n);
            const auto &b = h.bracket_basis(i, j);
            for (std::size_t k = 0; k < dh; ++k) {
                v[k] = b[k];
            }
            sc.set(i, j, v);
        }
        for (std::size_t c = 0; c < dm; ++c) {
            auto v = zero_vector(n);
            for (std::size_t r = 0; r < dm; ++r) {
                v[dh + r] = rho[i](r, c);
            }
            sc.set(i, dh + c, v);
        }
    }
    LieAlgebra g(std::move(sc));
    std::vector<Vector> hb, mb;
    for (std::size_t i = 0; i < dh; ++i) {
        hb.push_back(unit_vector(n, i));
    }
    for (std::size_t c = 0; c < dm; ++c) {
        mb.push_back(unit_vector(n, dh + c));
    }
    return TransitivePair(std::move(g), std::move(hb), std::move(mb));
}

TransitivePair diagonal_pair(const LieAlgebra &k)
{
    const auto d = k.dim();
    std::vector<std::string> names;
    for (const auto &nm : k.names()) {
        names.push_back(nm + "_1");
    }
    for (const auto &nm : k.names()) {
        names.push_back(nm + "_2");
    }
    StructureConstants sc(names);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto &b = k.bracket_basis(i, j);
            auto v1 = zero_vector(2 * d), v2 = zero_vector(2 * d);
            for (std::size_t r = 0; r < d; ++r) {
                v1[r] = b[r];
                v2[d + r] = b[r];
            }
            sc.set(i, j, v1);
            sc.set(d + i, d + j, v2);
        }
    }
    LieAlgebra g(std::move(sc));
    std::vector<Vector> diag, comp;
    for (std::size_t i = 0; i < d; ++i) {
        auto v = zero_vector(2 * d);
        v[i] = 1;
        v[d + i] = 1;
        diag.push_back(std::move(v));
        comp.push_back(unit_vector(2 * d, i));
    }
    return TransitivePair(std::move(g), std::move(diag), std::move(comp));
}

StructuralReport structural_report(const LieAlgebra &a)
{
    StructuralReport r;
    const auto n = a.dim();
    const auto full = Subspace::full(n);
    r.derived_series = derived_series(a, full);
    r.center = center(a);
    r.killing = killing_form(a);
    r.killing_rank = rank(r.killing);
    r.killing_kernel = Subspace(n, nullspace(r.killing));
    r.semisimple = n > 0 && r.killing_rank == n;
    r.abelian = r.center.dim() == n;
    r.solvable = r.derived_series.back().is_zero();
    if (!r.killing_kernel.is_zero()) {
        auto ds = derived_series(a, r.killing_kernel);
        // The Killing kernel is a solvable ideal, so its derived series ends
        // in zero; the last nonzero term is an abelian ideal of g.
        const Subspace *last = nullptr;
        for (const auto &s : ds) {
            if (!s.is_zero()) {
                last = &s;
            }
        }
        if (last != nullptr && span_of_brackets(a, *last, *last).is_zero()) {
            r.abelian_ideal = *last;
            r.has_nonzero_abelian_ideal = true;
        }
    }
    return r;
}

bool verify_chain(const TransitivePair &p, const std::vector<Subspace> &chain)
{
    const auto n = p.codimension();
    const auto dim = p.algebra().dim();
    if (chain.size() != n + 1) {
        return false;
    }
    if (!(chain.front() == p.isotropy()) || !(chain.back() == Subspace::full(dim))) {
        return false;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        if (chain[i].ambient_dim() != dim || chain[i].dim() != dim - (n - i)) {
            return false;
        }
        if (!is_subalgebra(p.algebra(), chain[i])) {
            return false;
        }
        if (i > 0 && !chain[i].contains(chain[i - 1])) {
            return false;
        }
    }
    return true;
}

bool complement_is_nilpotent_subalgebra(const TransitivePair &p)
{
    const auto &g = p.algebra();
    Subspace m(g.dim(), p.complement());
    if (!is_subalgebra(g, m)) {
        return false;
    }
    std::vector<Matrix> ads;
    for (const auto &y : p.complement()) {
        ads.push_back(g.ad(y));
    }
    auto flag = Subspace::full(g.dim());
    while (!flag.is_zero()) {
        std::vector<Vector> next;
        for (const auto &ad : ads) {
            for (const auto &v : flag.basis()) {
                next.push_back(ad * v);
            }
        }
        Subspace s(g.dim(), next);
        if (s.dim() == flag.dim()) {
            return false;
        }
        flag = std::move(s);
    }
    return true;
}

} // namespace lierealise
