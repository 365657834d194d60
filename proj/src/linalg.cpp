#include <lierealise/error.hpp>
#include <lierealise/linalg.hpp>

#include <utility>

namespace lierealise {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    auto v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector &v)
{
    for (const auto &x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

static void check_same_size(const Vector &a, const Vector &b)
{
    if (a.size() != b.size()) {
        throw Error(errc::dimension_mismatch, "vector length mismatch: " + std::to_string(a.size()) + " vs "
                                                  + std::to_string(b.size()));
    }
}

Vector operator+(const Vector &a, const Vector &b)
{
    check_same_size(a, b);
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

Vector operator-(const Vector &a, const Vector &b)
{
    check_same_size(a, b);
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Vector operator*(const Rational &c, const Vector &v)
{
    Vector r(v);
    for (auto &x : r) {
        x *= c;
    }
    return r;
}

void axpy(Vector &v, const Rational &c, const Vector &w)
{
    check_same_size(v, w);
    if (c == 0) {
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w[i] != 0) {
            v[i] += c * w[i];
        }
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw Error(errc::dimension_mismatch, "matrix row has wrong length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r));
    }
    return out;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto &x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    if (a.cols_ != b.rows_) {
        throw Error(errc::dimension_mismatch, "matrix product shape mismatch");
    }
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto &aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) != 0) {
                    m(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return m;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw Error(errc::dimension_mismatch, "matrix sum shape mismatch");
    }
    Matrix m(a);
    for (std::size_t i = 0; i < m.data_.size(); ++i) {
        m.data_[i] += b.data_[i];
    }
    return m;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw Error(errc::dimension_mismatch, "matrix difference shape mismatch");
    }
    Matrix m(a);
    for (std::size_t i = 0; i < m.data_.size(); ++i) {
        m.data_[i] -= b.data_[i];
    }
    return m;
}

Vector operator*(const Matrix &a, const Vector &v)
{
    if (a.cols_ != v.size()) {
        throw Error(errc::dimension_mismatch, "matrix-vector shape mismatch");
    }
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a(i, j) != 0 && v[j] != 0) {
                r[i] += a(i, j) * v[j];
            }
        }
    }
    return r;
}

Rational Matrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

RowEchelon row_reduce(const Matrix &input)
{
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, c) == 0) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        if (sel != lead) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
                std::swap(m(sel, k), m(lead, k));
            }
        }
        Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k) {
            m(lead, k) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) {
                continue;
            }
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (m(lead, k) != 0) {
                    m(r, k) -= f * m(lead, k);
                }
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix reduced(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            reduced(r, k) = m(r, k);
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix &m)
{
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v = zero_vector(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.reduced(r, free);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve(const Matrix &m, const Vector &b)
{
    if (b.size() != m.rows()) {
        throw Error(errc::dimension_mismatch, "right-hand side has wrong length");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    auto ech = row_reduce(aug);
    Vector x = zero_vector(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == m.cols()) {
            return std::nullopt;
        }
        x[ech.pivots[r]] = ech.reduced(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix &m)
{
    if (m.rows() != m.cols()) {
        throw Error(errc::dimension_mismatch, "inverse of a non-square matrix");
    }
    const auto n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(aug);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = ech.reduced(r, n + c);
        }
    }
    return inv;
}

Rational determinant(const Matrix &input)
{
    if (input.rows() != input.cols()) {
        throw Error(errc::dimension_mismatch, "determinant of a non-square matrix");
    }
    Matrix m = input;
    const auto n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m(sel, c) == 0) {
            ++sel;
        }
        if (sel == n) {
            return 0;
        }
        if (sel != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m(sel, k), m(c, k));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) {
                continue;
            }
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) {
                m(r, k) -= f * m(c, k);
            }
        }
    }
    return det;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector> &spanning) : ambient_(ambient_dim)
{
    if (spanning.empty()) {
        return;
    }
    auto ech = row_reduce(Matrix::from_rows(spanning, ambient_dim));
    basis_ = ech.reduced.row_vectors();
    pivots_ = std::move(ech.pivots);
}

Subspace Subspace::full(std::size_t n)
{
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
    }
    return Subspace(n, e);
}

Vector Subspace::reduce(const Vector &v) const
{
    if (v.size() != ambient_) {
        throw Error(errc::dimension_mismatch, "vector does not live in the ambient space of the subspace");
    }
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (r[pivots_[k]] != 0) {
            Rational f = r[pivots_[k]];
            axpy(r, -f, basis_[k]);
        }
    }
    return r;
}

bool Subspace::contains(const Vector &v) const { return lierealise::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const
{
    for (const auto &b : other.basis_) {
        if (!contains(b)) {
            return false;
        }
    }
    return true;
}

Vector Subspace::coordinates(const Vector &v) const
{
    if (!contains(v)) {
        throw Error(errc::invalid_argument, "vector is not a member of the subspace");
    }
    Vector c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        c[k] = v[pivots_[k]];
    }
    return c;
}

Subspace Subspace::sum(const Subspace &other) const
{
    if (other.ambient_ != ambient_) {
        throw Error(errc::dimension_mismatch, "subspaces of different ambient spaces");
    }
    auto all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace &other) const
{
    if (other.ambient_ != ambient_) {
        throw Error(errc::dimension_mismatch, "subspaces of different ambient spaces");
    }
    if (basis_.empty() || other.basis_.empty()) {
        return Subspace(ambient_);
    }
    // a in A ∩ B iff a = sum s_i a_i = sum t_j b_j; kernel of [A^T | -B^T].
    const auto na = basis_.size();
    const auto nb = other.basis_.size();
    Matrix m(ambient_, na + nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t r = 0; r < ambient_; ++r) {
            m(r, i) = basis_[i][r];
        }
    }
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t r = 0; r < ambient_; ++r) {
            m(r, na + j) = -other.basis_[j][r];
        }
    }
    std::vector<Vector> vecs;
    for (const auto &k : nullspace(m)) {
        Vector v = zero_vector(ambient_);
        for (std::size_t i = 0; i < na; ++i) {
            axpy(v, k[i], basis_[i]);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace(ambient_, vecs);
}

std::vector<Vector> Subspace::standard_complement() const
{
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) {
        is_pivot[p] = true;
    }
    std::vector<Vector> out;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (!is_pivot[i]) {
            out.push_back(unit_vector(ambient_, i));
        }
    }
    return out;
}

} // namespace lierealise
