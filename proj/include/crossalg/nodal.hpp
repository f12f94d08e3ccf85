#pragma once

#include <cstddef>
#include <vector>

#include "crossalg/algebra.hpp"
#include "crossalg/group.hpp"
#include "crossalg/radical.hpp"

namespace crossalg {

// The semilocal pair A inside H analyzed by this module.
using SemilocalPair = SubalgebraPair;

// rad(A) pushed into ambient coordinates equals rad(H).
bool is_backstrom(const SemilocalPair& p);

// Quotient pair modulo the common radical of a Backstrom pair.
SemilocalPair quotient_pair(const SemilocalPair& p);

struct BMatrixData {
    std::vector<std::size_t> a;      // regular multiplicities of the quotient of A
    std::vector<std::vector<std::size_t>> b;  // b[i][j] = dim(e_j Hbar e_i)
    bool basic = false;
};

// The decomposition matrix of the quotient pair. Throws on non-Backstrom
// input or NotSplitError on non-split quotients. Asserts the structural
// facts b_ii > 0 and the symmetry of the zero pattern.
BMatrixData b_matrix(const SemilocalPair& p, std::uint64_t seed = 0);

// max_i sum_j b_ij.
std::size_t ell_star(const SemilocalPair& p, std::uint64_t seed = 0);
std::size_t ell_star(const BMatrixData& data);

bool is_nodal_pair(const SemilocalPair& p, std::uint64_t seed = 0);

struct MatrixConditionVerdict {
    bool holds1 = false;  // (B a)_i <= 2 a_i for all i
    bool holds2 = false;  // per-index dichotomy with a unique partner
    bool holds3 = false;  // row sums <= 2
};

// The combinatorial classifier on a nonnegative integer matrix satisfying
// the hypotheses (positive diagonal, symmetric zero pattern) and a strictly
// positive vector. Throws std::invalid_argument naming the offending entry
// on a hypothesis violation.
MatrixConditionVerdict classify_matrix_condition(
    const std::vector<std::vector<std::size_t>>& b, const std::vector<std::size_t>& a);

struct TwoGeneratorReport {
    std::size_t mu = 0;
    BMatrixData data;
    std::size_t ell = 0;
    bool cond1 = false;  // mu <= 2
    bool cond2 = false;  // dichotomy on the B-matrix
    bool cond3 = false;  // ell <= 2
    bool pattern_ok = false;  // (1)=>(2)<=>(3), and full equivalence when basic
};

TwoGeneratorReport theorem_2gen_report(const SemilocalPair& p, std::uint64_t seed = 0);

struct HereditaryCoverReport {
    Subspace cover;             // idealizer of rad(A) in the ambient algebra
    bool contains_sub = false;  // A inside the cover
    bool rad_matches = false;   // rad(cover algebra) = rad(A)
    bool cover_hereditary = false;  // only filled when requested
    bool heredity_checked = false;
};

HereditaryCoverReport hereditary_cover(const SemilocalPair& p, bool check_heredity);

// The pair A[G] inside H[G] over the crossed product of the ambient
// algebra. Throws when the datum does not preserve the subalgebra or some
// omega value leaves it.
struct CrossedPair {
    CrossedProduct product;  // of the ambient algebra
    SemilocalPair pair;
};
CrossedPair crossed_pair(const SemilocalPair& p, const ActionDatum& datum);

struct ClosureReport {
    bool preconditions_ok = false;
    std::vector<std::string> precondition_failures;
    bool backstrom = false;
    bool radical_formula_ok = false;  // rad(H[G]) = span(rad-basis x G), independent cross-check
    std::size_t ell = 0;
    bool pattern_ok = false;
    bool nodal = false;
    BMatrixData data;
};

// Machine check that the crossed pair of a nodal pair is again nodal; the
// crossed radical is computed from scratch by the trace form, with the
// J x G span formula as an independent second assertion.
ClosureReport verify_closure_theorem(const SemilocalPair& p, const ActionDatum& datum,
                                     std::uint64_t seed = 0);

}  // namespace crossalg
