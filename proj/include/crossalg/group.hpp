#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crossalg/algebra.hpp"
#include "crossalg/linalg.hpp"
#include "crossalg/radical.hpp"
#include "crossalg/validation.hpp"

namespace crossalg {

// Finite group as a Cayley table of indices.
struct GroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> table;  // order x order, row-major
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    std::vector<std::string> names;

    std::size_t mul(std::size_t f, std::size_t g) const { return table[f * order + g]; }
    std::string name(std::size_t g) const;

    static GroupTable from_table(const std::vector<std::vector<std::size_t>>& rows,
                                 std::vector<std::string> names = {});
    static GroupTable cyclic(std::size_t n);
    static GroupTable sym3();
    static GroupTable trivial() { return cyclic(1); }
};

// Checks all group axioms exhaustively.
Report validate_group(const GroupTable& g);

// Action datum (phi, omega) of a finite group on an algebra: one
// automorphism per group element and a unit-valued factor system, stored
// total (all order^2 pairs).
struct ActionDatum {
    GroupTable group;
    std::vector<Matrix> phi;  // one dim x dim matrix per group element
    std::vector<Vec> omega;   // order x order elements, row-major

    const Matrix& phi_of(std::size_t g) const { return phi[g]; }
    const Vec& omega_of(std::size_t f, std::size_t g) const {
        return omega[f * group.order + g];
    }

    // phi as given, omega identically 1.
    static ActionDatum trivial_cocycle(const Algebra& a, const GroupTable& g,
                                       std::vector<Matrix> phi);
    static ActionDatum trivial(const Algebra& a, const GroupTable& g);
};

// Exhaustively checks the three action axioms plus morphism/unit
// preconditions on every group tuple and basis element.
Report validate_action(const Algebra& a, const ActionDatum& datum);

struct CrossedProduct {
    Algebra base;
    ActionDatum datum;
    Algebra total;  // dim = base.dim * group.order, basis (i, g) at i*order + g
    Matrix embed;   // total.dim x base.dim, a -> a[e]

    std::size_t index(std::size_t base_idx, std::size_t g) const {
        return base_idx * datum.group.order + g;
    }
    // Coordinates of a[g] in the total algebra.
    Vec element(const Vec& a_coords, std::size_t g) const;
    // Coefficient of [g] (an element of the base) in a total element.
    Vec coefficient(const Vec& total_coords, std::size_t g) const;
};

// Builds the multiplication table a[f] * b[g] = a phi_f(b) omega_{f,g} [fg]
// without validating the datum. Used by the corruption tests.
Algebra crossed_product_table(const Algebra& a, const ActionDatum& datum);

// Validated construction; throws std::invalid_argument carrying the axiom
// report on a bad datum.
CrossedProduct crossed_product(const Algebra& a, const ActionDatum& datum);

// Crossed product with omega == 1; phi must be a homomorphism to Aut(A).
CrossedProduct skew_group_ring(const Algebra& a, const GroupTable& g,
                               std::vector<Matrix> phi);

// B tensor_A B for a unital subalgebra A of B, as a quotient of B tensor B,
// with both B-actions and the multiplication map mu.
struct BalancedTensorSquare {
    SubalgebraPair extension;
    std::size_t dim = 0;
    Matrix projection;  // dim x big^2
    Matrix section;     // big^2 x dim
    Matrix mu;          // big x dim

    Vec pure_tensor(const Vec& x, const Vec& y) const;  // class of x (x) y
    Vec left_mul(const Vec& b, const Vec& t) const;
    Vec right_mul(const Vec& t, const Vec& b) const;
};

BalancedTensorSquare balanced_tensor_square(const SubalgebraPair& extension);

// The separability witness of the crossed product:
// w = 1/n sum_g omega^{-1}_{g, g^{-1}} [g] (x) [g^{-1}] and the
// coefficient-of-identity projection pi : B -> A.
struct SeparabilityWitness {
    BalancedTensorSquare square;
    Vec w;      // in the balanced tensor square
    Matrix pi;  // base.dim x total.dim
};

SeparabilityWitness separability_witness(const CrossedProduct& cp);

// Strict separability report: (1) witness identities, (2) split
// inclusion via pi, (3) projectivity of B over A on both sides.
Report check_strict_separability(const SubalgebraPair& extension,
                                 const BalancedTensorSquare& square, const Vec& w,
                                 const Matrix& pi);

// Induced datum on the semisimple quotient; asserts phi_g(rad) = rad.
ActionDatum induced_quotient_action(const Algebra& a, const ActionDatum& datum,
                                    const QuotientAlgebra& quot);

// phi_g maps the subspace onto itself for every g; when require_omega is
// set, all omega values must lie in the subspace as well.
bool action_preserves_subalgebra(const ActionDatum& datum, const Subspace& sub,
                                 bool require_omega = true);

}  // namespace crossalg
