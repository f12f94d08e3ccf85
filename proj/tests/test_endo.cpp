#include <doctest.h>

#include "crossalg/endo.hpp"
#include "helpers.hpp"

using namespace crossalg;
using testutil::vec;

namespace {

LeftModule mat2_column_module() {
    LeftModule m;
    m.algebra_dim = 4;
    m.dim = 2;
    Matrix e11(2, 2), e12(2, 2), e21(2, 2), e22(2, 2);
    e11.at(0, 0) = 1;
    e12.at(0, 1) = 1;
    e21.at(1, 0) = 1;
    e22.at(1, 1) = 1;
    m.action = {e11, e12, e21, e22};
    return m;
}

}  // namespace

TEST_CASE("endomorphism algebras") {
    {
        const Algebra qq = preset_split(2);
        const EndoAlgebra e = endomorphism_algebra(qq, LeftModule::regular(qq));
        CHECK(e.algebra.dim() == 2);
        CHECK(validate_algebra(e.algebra).ok());
        CHECK(is_semisimple(e.algebra));
        CHECK(wedderburn(e.algebra).blocks.size() == 2);
    }
    {
        // Schur: the simple module over Mat2 has a 1-dimensional commutant.
        const Algebra m2 = preset_mat(2);
        const LeftModule col = mat2_column_module();
        REQUIRE(validate_module(m2, col).ok());
        CHECK(endomorphism_algebra(m2, col).algebra.dim() == 1);
    }
    {
        const Algebra q = preset_split(1);
        const LeftModule free2 =
            LeftModule::direct_sum(LeftModule::regular(q), LeftModule::regular(q));
        const EndoAlgebra e = endomorphism_algebra(q, free2);
        CHECK(e.algebra.dim() == 4);
        const WedderburnData wd = wedderburn(e.algebra);
        REQUIRE(wd.blocks.size() == 1);
        CHECK(wd.blocks[0].n == 2);
    }
}

TEST_CASE("endo algebra structure constants come from composition") {
    const Algebra tn = preset_trunc_node(3);
    const EndoAlgebra e = endomorphism_algebra(tn, LeftModule::regular(tn));
    CHECK(e.realize(e.algebra.unit()).is_identity());
    for (std::size_t i = 0; i < e.algebra.dim(); ++i)
        for (std::size_t j = 0; j < e.algebra.dim(); ++j)
            CHECK(e.realize(e.algebra.basis_product(i, j)) ==
                  e.realization[i] * e.realization[j]);
}

TEST_CASE("invariant module validation") {
    const Algebra qq = preset_split(2);
    const ActionDatum swap = testutil::c2_action(qq, testutil::perm_matrix({1, 0}));
    InvariantModule good{LeftModule::regular(qq), swap.phi};
    CHECK(validate_invariant_module(qq, swap, good).ok());

    InvariantModule bad{LeftModule::regular(qq),
                        {Matrix::identity(2), Matrix::identity(2)}};
    CHECK(!validate_invariant_module(qq, swap, bad).ok());
}

TEST_CASE("induced action on the endomorphism algebra") {
    const Algebra qq = preset_split(2);
    {
        // Trivial datum, alpha = id: the induced datum is trivial.
        const ActionDatum triv = ActionDatum::trivial(qq, GroupTable::cyclic(2));
        InvariantModule im{LeftModule::regular(qq), triv.phi};
        const EndoAlgebra e = endomorphism_algebra(qq, im.module);
        const ActionDatum induced = induced_endo_action(qq, triv, im, e);
        CHECK(validate_action(e.algebra, induced).ok());
        CHECK(induced.phi_of(1).is_identity());
        CHECK(induced.omega_of(1, 1) == e.algebra.unit());
    }
    const ActionDatum swap = testutil::c2_action(qq, testutil::perm_matrix({1, 0}));
    {
        InvariantModule im{LeftModule::regular(qq), swap.phi};
        const EndoAlgebra e = endomorphism_algebra(qq, im.module);
        const ActionDatum induced = induced_endo_action(qq, swap, im, e);
        CHECK(validate_action(e.algebra, induced).ok());
        CHECK(!induced.phi_of(1).is_identity());  // psi swaps the two factors of E
        CHECK((induced.phi_of(1) * induced.phi_of(1)).is_identity());
        CHECK(induced.omega_of(1, 1) == e.algebra.unit());
    }
    {
        const ActionDatum neg = testutil::with_omega(swap, 1, 1, vec({-1, -1}));
        InvariantModule im{LeftModule::regular(qq), neg.phi};
        const EndoAlgebra e = endomorphism_algebra(qq, im.module);
        const ActionDatum induced = induced_endo_action(qq, neg, im, e);
        CHECK(validate_action(e.algebra, induced).ok());
        CHECK(induced.omega_of(1, 1) == Rat(-1) * e.algebra.unit());
    }
}

TEST_CASE("induced modules over crossed products") {
    const Algebra tn = preset_trunc_node(3);
    const ActionDatum swap = testutil::c2_action(tn, testutil::swap_trunc_node(3));
    const CrossedProduct cp = crossed_product(tn, swap);
    const LeftModule ind = induced_module(cp, LeftModule::regular(tn));
    CHECK(ind.dim == 10);
    CHECK(validate_module(cp.total, ind).ok());
    // Inducing the regular module gives a module isomorphic to the regular
    // module of the crossed product; same dimension and both free of rank 1.
    CHECK(min_generators(cp.total, ind) == 1);
    CHECK(is_projective(cp.total, ind));
}

TEST_CASE("induced modules along general inclusions") {
    {
        // H-bar tensor over A-bar of the unique simple: 2-dimensional.
        const SemilocalPair qp = quotient_pair(preset_node_pair(3));
        const InducedModule ind = induced_module(qp, LeftModule::regular(qp.sub_algebra));
        CHECK(ind.module.dim == 2);
        CHECK(validate_module(qp.ambient, ind.module).ok());
    }
    {
        // B = A: the induced module is M again.
        const Algebra tn = preset_trunc_node(3);
        const SubalgebraPair full = make_subalgebra_pair(tn, Subspace::full(tn.dim()));
        const InducedModule ind = induced_module(full, LeftModule::regular(tn));
        CHECK(ind.module.dim == tn.dim());
        CHECK(validate_module(tn, ind.module).ok());
    }
}

TEST_CASE("phi isomorphism fixtures") {
    {
        const Algebra q = preset_split(1);
        const ActionDatum triv = ActionDatum::trivial(q, GroupTable::cyclic(2));
        InvariantModule im{LeftModule::regular(q), triv.phi};
        const PhiReport r = phi_isomorphism(q, triv, im);
        CHECK(r.left_dim == 2);
        CHECK(r.right_dim == 2);
        CHECK(r.ok());
    }
    {
        const Algebra qq = preset_split(2);
        const ActionDatum swap = testutil::c2_action(qq, testutil::perm_matrix({1, 0}));
        InvariantModule im{LeftModule::regular(qq), swap.phi};
        const PhiReport r = phi_isomorphism(qq, swap, im);
        CHECK(r.left_dim == 4);
        CHECK(r.right_dim == 4);
        CHECK(r.ok());
    }
    {
        const Algebra tn = preset_trunc_node(3);
        const ActionDatum swap = testutil::c2_action(tn, testutil::swap_trunc_node(3));
        InvariantModule im{LeftModule::regular(tn), swap.phi};
        const PhiReport r = phi_isomorphism(tn, swap, im);
        CHECK(r.left_dim == 10);
        CHECK(r.right_dim == 10);
        CHECK(r.ok());
    }
}

TEST_CASE("morita transport") {
    const SemilocalPair np = preset_node_pair(3);
    {
        const MoritaReport r = morita_transport_check(np, LeftModule::regular(np.sub_algebra));
        CHECK(r.backstrom);
        CHECK(r.ell_original == 2);
        CHECK(r.ell_transported == 2);
        CHECK(r.ok());
    }
    {
        const LeftModule two = LeftModule::direct_sum(LeftModule::regular(np.sub_algebra),
                                                      LeftModule::regular(np.sub_algebra));
        const MoritaReport r = morita_transport_check(np, two);
        CHECK(r.ok());
        CHECK(r.ell_transported == 2);
    }
    {
        // The 1-dimensional top of the node algebra is not projective.
        LeftModule simple;
        simple.algebra_dim = np.sub_algebra.dim();
        simple.dim = 1;
        simple.action.assign(np.sub_algebra.dim(), Matrix(1, 1));
        const QuotientAlgebra q = semisimple_quotient(np.sub_algebra);
        for (std::size_t i = 0; i < np.sub_algebra.dim(); ++i)
            simple.action[i].at(0, 0) = (q.projection * np.sub_algebra.basis_element(i))[0];
        REQUIRE(validate_module(np.sub_algebra, simple).ok());
        CHECK_THROWS_AS(morita_transport_check(np, simple), std::invalid_argument);
    }
}
