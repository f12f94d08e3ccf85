#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "crossalg/algebra.hpp"
#include "crossalg/linalg.hpp"
#include "crossalg/validation.hpp"

namespace crossalg {

// Raised when a semisimple algebra is not split over Q (irreducible minimal
// polynomial factor of degree > 1, or a Wedderburn block whose dimension is
// not a perfect square). Such instances would need a field extension.
class NotSplitError : public std::runtime_error {
public:
    explicit NotSplitError(const std::string& what) : std::runtime_error(what) {}
};

// Left module over an algebra, given by one action matrix per basis element.
struct LeftModule {
    std::size_t algebra_dim = 0;
    std::size_t dim = 0;
    std::vector<Matrix> action;  // one dim x dim matrix per algebra basis element

    Matrix act(const Vec& a) const;
    static LeftModule regular(const Algebra& a);
    static LeftModule direct_sum(const LeftModule& m, const LeftModule& n);
    // Left ideal A*e as a left module, together with its embedding into A.
    static LeftModule left_ideal(const Algebra& a, const Vec& e, Subspace* carrier = nullptr);
    // B restricted to A along an inclusion matrix (B_dim x A_dim).
    static LeftModule restriction(const Algebra& big, const Algebra& small,
                                  const Matrix& inclusion);
};

Report validate_module(const Algebra& a, const LeftModule& m);

// Gram matrix of the trace form T(x, y) = trace(L_{xy}).
Matrix trace_form(const Algebra& a);

// Kernel of the trace form. Certified on every call: the result is a
// two-sided ideal, it is nilpotent, and the quotient trace form is
// nondegenerate (characteristic zero makes this the Jacobson radical).
Subspace jacobson_radical(const Algebra& a);

bool is_semisimple(const Algebra& a);

QuotientAlgebra semisimple_quotient(const Algebra& a);

struct WedderburnBlock {
    Vec central_idem;      // primitive central idempotent
    std::size_t block_dim; // dim of the two-sided ideal it cuts out
    std::size_t n;         // matrix size, block_dim = n^2
    Vec prim_idem;         // one primitive idempotent with dim(e S e) = 1
};

struct WedderburnData {
    std::vector<WedderburnBlock> blocks;
};

// Split Wedderburn decomposition of a semisimple algebra. Throws
// NotSplitError on non-split input. seed steers the fallback random
// primitive-idempotent search; results are deterministic for a fixed seed.
WedderburnData wedderburn(const Algebra& s, std::uint64_t seed = 0);

// Multiplicity of each simple block module in m: dim(e_j * m).
std::vector<std::size_t> simple_multiplicities(const Algebra& s, const WedderburnData& data,
                                               const LeftModule& m);

// Lifts orthogonal idempotents of the semisimple quotient to orthogonal
// idempotents of a, via the iteration e <- 3e^2 - 2e^3 followed by
// sequential orthogonalization.
std::vector<Vec> lift_idempotents(const Algebra& a, const QuotientAlgebra& quot,
                                  const std::vector<Vec>& idems_of_quotient);

// Everything the projectivity and generator counts need, computed once.
struct AlgebraAnalysis {
    Subspace radical;
    QuotientAlgebra quotient;       // semisimple quotient
    WedderburnData wedderburn_data; // of the quotient
    std::vector<Vec> lifted_idems;  // in a, one per block
    std::vector<std::size_t> cover_dims;  // dim(A * e_hat_i)
    std::vector<std::size_t> regular_mults;  // a_i = n_i for a split quotient
};
AlgebraAnalysis analyze_algebra(const Algebra& a, std::uint64_t seed = 0);

// Multiplicities of the simple modules in the top m / (rad a) m.
std::vector<std::size_t> top_multiplicities(const Algebra& a, const AlgebraAnalysis& an,
                                            const LeftModule& m);

bool is_projective(const Algebra& a, const LeftModule& m);
bool is_projective(const Algebra& a, const AlgebraAnalysis& an, const LeftModule& m);

// Left global dimension <= 1: the radical is projective as a left module.
bool is_hereditary(const Algebra& a);

// Minimal number of generators of m: max_i ceil(m_i / a_i) over the top.
std::size_t min_generators(const Algebra& a, const LeftModule& m);
std::size_t min_generators(const Algebra& a, const AlgebraAnalysis& an, const LeftModule& m);

// All Wedderburn blocks of the semisimple quotient have n_i = 1.
bool is_basic(const Algebra& a);

}  // namespace crossalg
