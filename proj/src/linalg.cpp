#include "crossalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossalg {

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += x * rhs.at(k, j);
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Rat Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        const Rat inv = Rat(1) / r.at(lead, col);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col) == 0) continue;
            const Rat f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const auto [red, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto [red, pivots] = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const auto [red, pivots] = rref(Matrix::from_rows(ambient_dim, vectors));
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(red.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec e(ambient_dim, Rat(0));
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const { return coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    // Echelon basis: peel off pivot coordinates in order.
    Vec rem = v;
    Vec coords(basis_.size(), Rat(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_[i][p] == 0) ++p;
        coords[i] = rem[p];
        if (coords[i] != 0) rem = rem - coords[i] * basis_[i];
    }
    if (!crossalg::is_zero(rem)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
    // Columns u_1..u_k, -v_1..-v_l; kernel coefficients give common vectors.
    std::vector<Vec> cols = basis_;
    for (const Vec& v : other.basis_) cols.push_back(Rat(-1) * v);
    const Subspace ker = kernel(Matrix::from_cols(ambient_, cols));
    std::vector<Vec> vecs;
    for (const Vec& c : ker.basis()) {
        Vec w(ambient_, Rat(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) w = w + c[i] * basis_[i];
        vecs.push_back(std::move(w));
    }
    return span(ambient_, vecs);
}

Matrix Subspace::basis_rows() const { return Matrix::from_rows(ambient_, basis_); }

Matrix Subspace::basis_cols() const { return Matrix::from_cols(ambient_, basis_); }

Subspace kernel(const Matrix& m) {
    const auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

VectorQuotient vector_quotient(const Subspace& sub) {
    const std::size_t n = sub.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (const Vec& b : sub.basis()) {
        std::size_t p = 0;
        while (p < n && b[p] == 0) ++p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    const std::size_t q = free_cols.size();
    VectorQuotient vq{q, Matrix(q, n), Matrix(n, q)};
    for (std::size_t r = 0; r < q; ++r) vq.section.at(free_cols[r], r) = 1;
    // Projection: reduce mod the echelon basis, then read off free coordinates.
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, Rat(0));
        e[j] = 1;
        Vec rem = e;
        for (const Vec& b : sub.basis()) {
            std::size_t p = 0;
            while (p < n && b[p] == 0) ++p;
            if (rem[p] != 0) rem = rem - rem[p] * b;
        }
        for (std::size_t r = 0; r < q; ++r) vq.projection.at(r, j) = rem[free_cols[r]];
    }
    return vq;
}

}  // namespace crossalg
