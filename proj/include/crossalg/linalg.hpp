#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crossalg/rational.hpp"

namespace crossalg {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Matrix identity(std::size_t n);
    // Rows are the given vectors.
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_cols(std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix operator*(const Matrix& rhs) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

    Matrix transposed() const;
    bool is_identity() const;
    bool is_zero() const;
    Rat trace() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Reduced row-echelon form (Gauss-Jordan, exact).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Some solution of M x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// A linear subspace of Q^ambient, stored by its canonical reduced-echelon
// basis. Equal subspaces compare equal componentwise.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    // Ref-qualified so iterating the basis of a temporary stays valid.
    const std::vector<Vec>& basis() const& { return basis_; }
    std::vector<Vec> basis() && { return std::move(basis_); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the echelon basis, or nullopt if v is outside.
    std::optional<Vec> coords_of(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    // Basis vectors as rows of a dim x ambient matrix.
    Matrix basis_rows() const;
    // Basis vectors as columns of an ambient x dim matrix.
    Matrix basis_cols() const;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

// Right null space of m, as a canonical subspace of Q^cols.
Subspace kernel(const Matrix& m);

// Quotient of Q^ambient by a subspace: projection matrix (q x ambient),
// section matrix (ambient x q) picking the non-pivot coordinate
// representatives. projection * section = identity.
struct VectorQuotient {
    std::size_t quotient_dim;
    Matrix projection;
    Matrix section;
};
VectorQuotient vector_quotient(const Subspace& sub);

}  // namespace crossalg
