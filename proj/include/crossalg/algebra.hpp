#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crossalg/linalg.hpp"
#include "crossalg/validation.hpp"

namespace crossalg {

// Finite-dimensional associative unital algebra over Q, given by structure
// constants in a distinguished basis: structure(i, j) are the coordinates
// of b_i * b_j.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::size_t dim, Vec unit);

    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(std::size_t i) const;

    void set_product(std::size_t i, std::size_t j, Vec coords);
    Vec basis_product(std::size_t i, std::size_t j) const;

    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis_element(std::size_t i) const;
    Vec scalar(const Rat& c) const { return c * unit_; }

    // Matrix of y -> x*y (left) or y -> y*x (right).
    Matrix left_op(const Vec& x) const;
    Matrix right_op(const Vec& x) const;

    // Opposite algebra (products reversed).
    Algebra opposite() const;

private:
    std::size_t dim_ = 0;
    std::vector<Rat> structure_;  // dim^3, entry ((i*dim)+j)*dim+k
    Vec unit_;
    std::vector<std::string> labels_;
};

// Unital algebra morphism source -> target, stored as its matrix in the
// distinguished bases.
struct Morphism {
    Matrix matrix;  // target_dim x source_dim
    Vec apply(const Vec& x) const { return matrix * x; }
};

Report validate_morphism(const Algebra& source, const Algebra& target, const Morphism& f);

// Reports every failed associativity triple and unit-law failure.
Report validate_algebra(const Algebra& a);

struct UnitCheck {
    bool invertible = false;
    Vec inverse;
};
UnitCheck is_unit(const Algebra& a, const Vec& x);

// Smallest multiplicatively closed subspace containing the generators
// (and the unit when requested).
Subspace subalgebra_closure(const Algebra& a, const std::vector<Vec>& generators,
                            bool include_unit = true);

// Smallest subspace containing the generators and closed under left and
// right multiplication by the whole algebra.
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& generators);

struct QuotientAlgebra {
    Algebra algebra;
    Matrix projection;  // quotient_dim x ambient_dim, multiplicative and unital
    Matrix section;     // ambient_dim x quotient_dim, linear section of projection
};

// Quotient by a two-sided ideal; throws std::invalid_argument when the
// subspace is not an ideal.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

// {z : z b = b z for all basis b}.
Subspace center(const Algebra& a);

// {x : x j in J for all j in J}.
Subspace idealizer(const Algebra& a, const Subspace& j);

Algebra direct_product(const Algebra& a, const Algebra& b);

// A unital multiplicatively closed subspace of an ambient algebra, together
// with the induced algebra on its echelon basis. Doubles as the semilocal
// pair of the nodal analysis.
struct SubalgebraPair {
    Algebra ambient;
    Subspace sub;
    Algebra sub_algebra;  // structure constants on sub's echelon basis
    Matrix inclusion;     // ambient_dim x sub_dim

    Vec embed(const Vec& sub_coords) const { return inclusion * sub_coords; }
};

// Builds the pair from a spanning set; throws when the span is not closed
// under multiplication or misses the unit.
SubalgebraPair make_subalgebra_pair(const Algebra& ambient, const std::vector<Vec>& sub_span,
                         bool include_unit = true);
SubalgebraPair make_subalgebra_pair(const Algebra& ambient, const Subspace& sub);

Report validate_pair(const SubalgebraPair& p);

// --- presets -------------------------------------------------------------

// Q[x]/(x^n), basis 1, x, ..., x^{n-1}.
Algebra preset_trunc_poly(std::size_t n);
// Q[x,y]/(xy, x^n, y^n), basis 1, x..x^{n-1}, y..y^{n-1}.
Algebra preset_trunc_node(std::size_t n);
// trunc_poly(n) x trunc_poly(n).
Algebra preset_trunc_hered(std::size_t n);
// Full matrix algebra in the matrix-unit basis e11, e12, ..., enn.
Algebra preset_mat(std::size_t n);
// Upper-triangular n x n matrices, basis e_ij for i <= j.
Algebra preset_upper_tri(std::size_t n);
// Q^k with componentwise product.
Algebra preset_split(std::size_t k);

// {(f, g) in trunc_hered(n) : f(0) = g(0)} inside trunc_hered(n).
SubalgebraPair preset_node_pair(std::size_t n);
// Diagonal matrices inside Mat_2.
SubalgebraPair preset_diag_pair();
// Scalars inside Q^3.
SubalgebraPair preset_triple_pair();

}  // namespace crossalg
