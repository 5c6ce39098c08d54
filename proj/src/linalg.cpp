#include "zdinf/linalg.hpp"

#include <sstream>

namespace zdinf {

Vec zero_vec(FieldSpec field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vec(FieldSpec field, std::size_t n, std::size_t i) {
    Vec v = zero_vec(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

bool is_zero_vec(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vec axpy(std::span<const Scalar> a, const Scalar& c, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("axpy: vector lengths differ");
    Vec out(a.begin(), a.end());
    if (c.is_zero()) return out;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!b[i].is_zero()) out[i] += c * b[i];
    return out;
}

Vec scale(const Scalar& c, std::span<const Scalar> v) {
    Vec out(v.begin(), v.end());
    for (auto& s : out) s *= c;
    return out;
}

Vec concat(std::span<const Scalar> a, std::span<const Scalar> b) {
    Vec out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)); }

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length " + std::to_string(v.size()) + " vs " + std::to_string(cols_) + " columns");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& s : out.data_) s *= c;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).to_string();
    }
    out << ']';
    return out.str();
}

Echelon rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t i = next; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                found = i;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        const Scalar inv = rows[next][col].inverse();
        for (auto& s : rows[next]) s *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col].is_zero()) continue;
            rows[i] = axpy(rows[i], -rows[i][col], rows[next]);
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return {Matrix::from_rows(m.field(), m.cols(), rows), pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const Echelon e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

Subspace Subspace::zero(FieldSpec field, std::size_t n) {
    Subspace s;
    s.field_ = field;
    s.ambient_ = n;
    return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t n) {
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(field, n, i));
    return span(field, n, units);
}

Subspace Subspace::span(FieldSpec field, std::size_t n, const std::vector<Vec>& vectors) {
    Subspace s = zero(field, n);
    if (vectors.empty()) return s;
    const Echelon e = rref(Matrix::from_rows(field, n, vectors));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
    s.pivots_ = e.pivots;
    return s;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace reduce: vector length mismatch");
    Vec out(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar c = out[pivots_[r]];
        if (!c.is_zero()) out = axpy(out, -c, basis_[r]);
    }
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

std::vector<Vec> Subspace::annihilator() const {
    if (basis_.empty()) {
        std::vector<Vec> units;
        for (std::size_t i = 0; i < ambient_; ++i) units.push_back(unit_vec(field_, ambient_, i));
        return units;
    }
    return nullspace(Matrix::from_rows(field_, ambient_, basis_));
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace intersection: ambient mismatch");
    std::vector<Vec> constraints = annihilator();
    const auto other = o.annihilator();
    constraints.insert(constraints.end(), other.begin(), other.end());
    if (constraints.empty()) return *this;
    return span(field_, ambient_, nullspace(Matrix::from_rows(field_, ambient_, constraints)));
}

Subspace Subspace::image(const Matrix& m) const {
    std::vector<Vec> images;
    for (const auto& b : basis_) images.push_back(m.apply(b));
    return span(field_, m.rows(), images);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

QuotientSpace::QuotientSpace(const Subspace& whole, const Subspace& sub) : field_(whole.field()), sub_(sub) {
    if (whole.ambient() != sub.ambient()) throw DimensionMismatch("quotient: ambient mismatch");
    std::vector<Vec> reduced;
    for (const auto& b : whole.basis()) {
        Vec r = sub_.reduce(b);
        if (!is_zero_vec(r)) reduced.push_back(std::move(r));
    }
    const Subspace comp = Subspace::span(field_, whole.ambient(), reduced);
    complement_ = comp.basis();
    complement_pivots_ = comp.pivots();
}

Vec QuotientSpace::coordinates(std::span<const Scalar> v) const {
    const Vec r = reduce(v);
    Vec coords;
    coords.reserve(complement_.size());
    for (auto p : complement_pivots_) coords.push_back(r[p]);
    return coords;
}

Vec QuotientSpace::lift(std::span<const Scalar> coords) const {
    if (coords.size() != complement_.size()) throw DimensionMismatch("quotient lift: coordinate length mismatch");
    Vec v = zero_vec(field_, ambient());
    for (std::size_t i = 0; i < coords.size(); ++i) v = axpy(v, coords[i], complement_[i]);
    return v;
}

}  // namespace zdinf
