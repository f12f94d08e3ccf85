#pragma once

#include <cstddef>
#include <vector>

#include "crossalg/algebra.hpp"
#include "crossalg/group.hpp"
#include "crossalg/nodal.hpp"
#include "crossalg/radical.hpp"

namespace crossalg {

// Endomorphism algebra of a left module, realized as the commutant of the
// action matrices. The abstract Algebra lives on the echelon basis of the
// commutant, with composition as product and the identity matrix as unit.
struct EndoAlgebra {
    Algebra algebra;
    std::vector<Matrix> realization;  // one module_dim x module_dim matrix per basis element
    Subspace space;                   // flattened commutant inside Q^(module_dim^2)

    // Coordinates of an endomorphism in the echelon basis. Throws when the
    // matrix does not commute with the module action.
    Vec coords_of(const Matrix& rho) const;
    Matrix realize(const Vec& coords) const;
};

EndoAlgebra endomorphism_algebra(const Algebra& a, const LeftModule& m);

// A module together with a compatible family of invertible maps, one per
// group element: alpha_g(a p) = phi_g(a) alpha_g(p).
struct InvariantModule {
    LeftModule module;
    std::vector<Matrix> alpha;  // one module_dim x module_dim matrix per group element
};

// Checks the compatibility identity on every (g, basis a); failures name
// the offending pair.
Report validate_invariant_module(const Algebra& a, const ActionDatum& datum,
                                 const InvariantModule& im);

// The action (psi, xi) on the endomorphism algebra:
// psi_g(rho) = alpha_g rho alpha_g^{-1},
// xi_{f,g} = (left mult by omega_{f,g}^{-1}) alpha_f alpha_g alpha_{fg}^{-1}.
// Throws std::invalid_argument on a compatibility failure or when some
// xi_{f,g} is not module-linear.
ActionDatum induced_endo_action(const Algebra& a, const ActionDatum& datum,
                                const InvariantModule& im, const EndoAlgebra& endo);

// Crossed product tensor a module over the base, using the free basis [g]:
// basis [g] (x) p_k at index g*module_dim + k.
LeftModule induced_module(const CrossedProduct& cp, const LeftModule& m);

// General induction along a subalgebra inclusion: ambient (x)_sub M as a
// quotient of ambient (x) M by the balancing relators.
struct InducedModule {
    LeftModule module;  // over the ambient algebra
    Matrix projection;  // dim x (ambient_dim * m_dim)
    Matrix section;
};
InducedModule induced_module(const SubalgebraPair& ext, const LeftModule& m);

// The ring map Phi from the crossed product of the endomorphism algebra to
// the endomorphisms of the induced module, checked exactly on the full
// basis: rho{g} sends [h] (x) p to [h][g]^{-1} (x) rho(alpha_g(p)).
struct PhiReport {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    bool action_valid = false;   // the induced datum passes the axiom checks
    bool well_defined = false;   // every image commutes with the crossed action
    bool multiplicative = false;
    bool unital = false;
    bool bijective = false;
    Report details;

    bool ok() const {
        return action_valid && well_defined && multiplicative && unital && bijective;
    }
};

PhiReport phi_isomorphism(const Algebra& a, const ActionDatum& datum,
                          const InvariantModule& im);

// Transport of the pair invariants along a progenerator of the subalgebra:
// A' = End(prog), H' = End(ambient (x)_A prog). Throws std::invalid_argument
// when prog is not a progenerator.
struct MoritaReport {
    std::size_t end_sub_dim = 0;
    std::size_t end_ambient_dim = 0;
    bool backstrom = false;        // rad(A') = rad(H') inside End(induced)
    std::size_t ell_original = 0;
    std::size_t ell_transported = 0;
    bool ell_preserved = false;

    bool ok() const { return backstrom && ell_preserved; }
};

MoritaReport morita_transport_check(const SemilocalPair& p, const LeftModule& prog,
                                    std::uint64_t seed = 0);

}  // namespace crossalg
