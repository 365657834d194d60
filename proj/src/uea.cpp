#include <lierealise/error.hpp>
#include <lierealise/uea.hpp>

#include <mutex>
#include <sstream>

namespace lierealise {

unsigned degree(const PbwMonomial &m)
{
    unsigned d = 0;
    for (auto e : m) {
        d += e;
    }
    return d;
}

UeaElement UeaElement::monomial(PbwMonomial m, Rational c)
{
    UeaElement u;
    u.add_term(m, c);
    return u;
}

Rational UeaElement::coefficient(const PbwMonomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned UeaElement::degree() const
{
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, lierealise::degree(m));
    }
    return d;
}

void UeaElement::add_term(const PbwMonomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void UeaElement::add(const UeaElement &other, const Rational &scale)
{
    if (scale == 0) {
        return;
    }
    for (const auto &[m, c] : other.terms_) {
        add_term(m, scale * c);
    }
}

UeaElement operator*(const Rational &c, const UeaElement &a)
{
    UeaElement r;
    if (c == 0) {
        return r;
    }
    for (const auto &[m, v] : a.terms_) {
        r.terms_.emplace(m, c * v);
    }
    return r;
}

struct PbwAlgebra::Memo {
    std::mutex mutex;
    std::map<std::pair<PbwMonomial, std::size_t>, UeaElement> table[2];
};

PbwAlgebra::PbwAlgebra(LieAlgebra algebra, std::size_t isotropy_dim)
    : algebra_(std::move(algebra)), isotropy_dim_(isotropy_dim), memo_(std::make_unique<Memo>())
{
    if (isotropy_dim_ > algebra_.dim()) {
        throw Error(errc::invalid_argument, "isotropy dimension exceeds dim g");
    }
    const auto n = algebra_.dim();
    brackets_.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto &b = algebra_.bracket_basis(k, j);
            for (std::size_t l = 0; l < n; ++l) {
                if (b[l] != 0) {
                    brackets_[k * n + j].emplace_back(l, b[l]);
                }
            }
        }
    }
}

PbwAlgebra::PbwAlgebra(PbwAlgebra &&) noexcept = default;
PbwAlgebra &PbwAlgebra::operator=(PbwAlgebra &&) noexcept = default;
PbwAlgebra::~PbwAlgebra() = default;

namespace {

std::string combination_name(const LieAlgebra &a, const Vector &v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        Rational c = v[i];
        if (c < 0) {
            os << (first ? "-" : "-");
            c = -c;
        } else if (!first) {
            os << "+";
        }
        if (c != 1) {
            os << to_string(c) << "*";
        }
        os << a.name(i);
        first = false;
    }
    return os.str();
}

} // namespace

PbwAlgebra PbwAlgebra::adapted(const TransitivePair &p)
{
    const auto &g = p.algebra();
    auto basis = p.adapted_basis();
    std::vector<std::string> names;
    for (const auto &v : basis) {
        names.push_back(combination_name(g, v));
    }
    return PbwAlgebra(rebase(g, basis, std::move(names)), p.isotropy().dim());
}

UeaElement PbwAlgebra::one() const { return UeaElement::monomial(PbwMonomial(dim(), 0)); }

UeaElement PbwAlgebra::generator(std::size_t i) const
{
    if (i >= dim()) {
        throw Error(errc::dimension_mismatch, "generator index out of range");
    }
    PbwMonomial m(dim(), 0);
    m[i] = 1;
    return UeaElement::monomial(m);
}

UeaElement PbwAlgebra::monomial_power(std::size_t complement_index, unsigned d) const
{
    if (complement_index >= codimension()) {
        throw Error(errc::dimension_mismatch, "complement index out of range");
    }
    PbwMonomial m(dim(), 0);
    m[isotropy_dim_ + complement_index] = d;
    return UeaElement::monomial(m);
}

UeaElement PbwAlgebra::from_word(const std::vector<std::size_t> &word) const
{
    auto u = one();
    for (auto j : word) {
        u = right_multiply(u, j);
    }
    return u;
}

bool PbwAlgebra::has_isotropy_factor(const PbwMonomial &m) const
{
    for (std::size_t i = 0; i < isotropy_dim_; ++i) {
        if (m[i] != 0) {
            return true;
        }
    }
    return false;
}

UeaElement PbwAlgebra::right_mul_monomial(const PbwMonomial &m, std::size_t j, bool modulo) const
{
    if (modulo && has_isotropy_factor(m)) {
        return {};
    }
    std::size_t last = dim();
    for (std::size_t k = dim(); k-- > 0;) {
        if (m[k] != 0) {
            last = k;
            break;
        }
    }
    if (last == dim() || j >= last) {
        PbwMonomial r = m;
        ++r[j];
        if (modulo && has_isotropy_factor(r)) {
            return {};
        }
        return UeaElement::monomial(std::move(r));
    }

    auto key = std::make_pair(m, j);
    {
        std::lock_guard lock(memo_->mutex);
        auto &table = memo_->table[modulo ? 1 : 0];
        if (auto it = table.find(key); it != table.end()) {
            return it->second;
        }
    }

    // m = m' x_k with k > j:  m' x_k x_j = (m' x_j) x_k + m' [x_k, x_j].
    PbwMonomial prefix = m;
    --prefix[last];
    UeaElement result;
    const auto head = right_mul_monomial(prefix, j, modulo);
    for (const auto &[mon, c] : head.terms()) {
        result.add(right_mul_monomial(mon, last, modulo), c);
    }
    for (const auto &[l, c] : brackets_[last * dim() + j]) {
        result.add(right_mul_monomial(prefix, l, modulo), c);
    }

    std::lock_guard lock(memo_->mutex);
    memo_->table[modulo ? 1 : 0].emplace(std::move(key), result);
    return result;
}

UeaElement PbwAlgebra::right_multiply(const UeaElement &a, std::size_t generator, bool modulo_isotropy) const
{
    if (generator >= dim()) {
        throw Error(errc::dimension_mismatch, "generator index out of range");
    }
    UeaElement r;
    for (const auto &[m, c] : a.terms()) {
        if (m.size() != dim()) {
            throw Error(errc::dimension_mismatch, "monomial has wrong number of exponents");
        }
        r.add(right_mul_monomial(m, generator, modulo_isotropy), c);
    }
    return r;
}

UeaElement PbwAlgebra::multiply(const UeaElement &a, const UeaElement &b, const PbwOptions &opts) const
{
    UeaElement result;
    for (const auto &[mb, cb] : b.terms()) {
        if (mb.size() != dim()) {
            throw Error(errc::dimension_mismatch, "monomial has wrong number of exponents");
        }
        UeaElement partial = a;
        if (opts.modulo_isotropy) {
            UeaElement filtered;
            for (const auto &[m, c] : partial.terms()) {
                if (!has_isotropy_factor(m)) {
                    filtered.add_term(m, c);
                }
            }
            partial = std::move(filtered);
        }
        for (std::size_t g = 0; g < dim(); ++g) {
            for (unsigned e = 0; e < mb[g]; ++e) {
                partial = right_multiply(partial, g, opts.modulo_isotropy);
            }
        }
        result.add(partial, cb);
    }
    if (opts.max_degree) {
        UeaElement capped;
        for (const auto &[m, c] : result.terms()) {
            if (lierealise::degree(m) <= *opts.max_degree) {
                capped.add_term(m, c);
            }
        }
        return capped;
    }
    return result;
}

Rational PbwAlgebra::complement_coefficient(const UeaElement &u, const std::vector<unsigned> &alpha) const
{
    if (alpha.size() != codimension()) {
        throw Error(errc::dimension_mismatch, "multi-index must have one entry per complement vector");
    }
    PbwMonomial m(dim(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        m[isotropy_dim_ + i] = alpha[i];
    }
    return u.coefficient(m);
}

Rational PbwAlgebra::linear_coefficient(const UeaElement &u, std::size_t complement_index) const
{
    if (complement_index >= codimension()) {
        throw Error(errc::dimension_mismatch, "complement index out of range");
    }
    PbwMonomial m(dim(), 0);
    m[isotropy_dim_ + complement_index] = 1;
    return u.coefficient(m);
}

std::string PbwAlgebra::to_string(const UeaElement &u) const
{
    if (u.is_zero()) {
        return "0";
    }
    // Highest degree first, then the map order.
    std::vector<std::pair<PbwMonomial, Rational>> terms(u.terms().begin(), u.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto &a, const auto &b) { return degree(a.first) > degree(b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms) {
        Rational mag = c;
        if (c < 0) {
            os << (first ? "-" : " - ");
            mag = -c;
        } else if (!first) {
            os << " + ";
        }
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (any) {
                mono << ' ';
            }
            mono << algebra_.name(i) << '^' << m[i];
            any = true;
        }
        if (!any) {
            os << lierealise::to_string(mag);
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << lierealise::to_string(mag) << ' ' << mono.str();
        }
        first = false;
    }
    return os.str();
}

UeaElement normalize_by_rewriting(const LieAlgebra &a, const std::vector<std::size_t> &word, RewriteStrategy strategy)
{
    using Word = std::vector<std::size_t>;
    std::map<Word, Rational> pending{{word, Rational(1)}};
    UeaElement done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word &w = node.key();
        const Rational c = node.mapped();
        if (c == 0) {
            continue;
        }
        std::optional<std::size_t> pos;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                pos = k;
                if (strategy == RewriteStrategy::leftmost) {
                    break;
                }
            }
        }
        if (!pos) {
            PbwMonomial m(a.dim(), 0);
            for (auto g : w) {
                ++m.at(g);
            }
            done.add_term(m, c);
            continue;
        }
        const auto k = *pos;
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        pending[swapped] += c;
        const auto &b = a.bracket_basis(w[k], w[k + 1]);
        for (std::size_t l = 0; l < a.dim(); ++l) {
            if (b[l] == 0) {
                continue;
            }
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            shorter.push_back(l);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
            pending[shorter] += c * b[l];
        }
    }
    return done;
}

} // namespace lierealise
