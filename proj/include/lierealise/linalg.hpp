#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <lierealise/rational.hpp>

namespace lierealise {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);
Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator*(const Rational &c, const Vector &v);
// v += c * w
void axpy(Vector &v, const Rational &c, const Vector &w);

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    Matrix transposed() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Vector operator*(const Matrix &a, const Vector &v);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

    Rational trace() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each kept row
};

// Gauss-Jordan elimination. Pivots are chosen as the lowest available column.
RowEchelon row_reduce(const Matrix &m);
std::size_t rank(const Matrix &m);

// Basis of {x : m x = 0}, one vector per free column, in canonical form
// (free variable set to 1, the other free variables 0).
std::vector<Vector> nullspace(const Matrix &m);

// Some solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix &m, const Vector &b);

std::optional<Matrix> inverse(const Matrix &m);

Rational determinant(const Matrix &m);

// Subspace of K^n kept in reduced row echelon form, so equality and
// membership are decided by direct comparison and reduction.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);
    Subspace(std::size_t ambient_dim, const std::vector<Vector> &spanning);

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vector> &basis() const { return basis_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

    // Remainder of v after reduction against the echelon basis; zero iff v
    // lies in the subspace. The map is linear in v.
    Vector reduce(const Vector &v) const;
    bool contains(const Vector &v) const;
    bool contains(const Subspace &other) const;
    // Coefficients of v in basis(); v must be a member.
    Vector coordinates(const Vector &v) const;

    Subspace sum(const Subspace &other) const;
    Subspace intersect(const Subspace &other) const;

    // Standard basis vectors indexed by non-pivot columns: a complement.
    std::vector<Vector> standard_complement() const;

    friend bool operator==(const Subspace &a, const Subspace &b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace lierealise
