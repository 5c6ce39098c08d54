/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a FieldSpec.
 *
 * Row reduction always selects the pivot with the lowest column index and,
 * within that column, the lowest row index, so every echelon form produced
 * here is bit-identical across runs.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdinf/scalar.hpp"

namespace zdinf {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec field, std::size_t n);
Vec unit_vec(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero_vec(std::span<const Scalar> v);
/// a + c*b, elementwise.
Vec axpy(std::span<const Scalar> a, const Scalar& c, std::span<const Scalar> b);
Vec scale(const Scalar& c, std::span<const Scalar> v);
Vec concat(std::span<const Scalar> a, std::span<const Scalar> b);

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vec>& cols);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    Matrix transpose() const;
    Vec apply(std::span<const Scalar> v) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    FieldSpec field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column in ascending order.
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with a x = b, or nullopt.
std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b);

/// Subspace of k^n stored as a reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(FieldSpec field, std::size_t n);
    static Subspace full(FieldSpec field, std::size_t n);
    static Subspace span(FieldSpec field, std::size_t n, const std::vector<Vec>& vectors);

    FieldSpec field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const& { return basis_; }
    std::vector<Vec> basis() && { return std::move(basis_); }
    const std::vector<std::size_t>& pivots() const& { return pivots_; }
    std::vector<std::size_t> pivots() && { return std::move(pivots_); }

    /// Eliminates the pivot coordinates of v; zero iff v lies in the subspace.
    Vec reduce(std::span<const Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& o) const;
    /// Rows spanning the functionals vanishing on the subspace.
    std::vector<Vec> annihilator() const;

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace image(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    FieldSpec field_{};
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/**
 * U / W for subspaces W ⊆ U of k^n.
 *
 * Representatives are reduced modulo the echelon basis of W, so two vectors
 * of U define the same class iff their reductions coincide. The complement
 * basis is itself reduced and in echelon form; coordinates of a class are
 * read off at the complement's pivot columns.
 */
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(const Subspace& whole, const Subspace& sub);

    std::size_t dim() const { return complement_.size(); }
    std::size_t ambient() const { return sub_.ambient(); }
    const Subspace& sub() const { return sub_; }
    const std::vector<Vec>& complement() const { return complement_; }

    Vec reduce(std::span<const Scalar> v) const { return sub_.reduce(v); }
    Vec coordinates(std::span<const Scalar> v) const;
    Vec lift(std::span<const Scalar> coords) const;

private:
    FieldSpec field_{};
    Subspace sub_;
    std::vector<Vec> complement_;
    std::vector<std::size_t> complement_pivots_;
};

}  // namespace zdinf
