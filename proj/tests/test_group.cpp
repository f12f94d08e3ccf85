#include <doctest.h>

#include "crossalg/group.hpp"
#include "crossalg/nodal.hpp"
#include "crossalg/radical.hpp"
#include "helpers.hpp"

using namespace crossalg;
using testutil::vec;

TEST_CASE("group validation") {
    CHECK(validate_group(GroupTable::cyclic(2)).ok());
    CHECK(validate_group(GroupTable::cyclic(3)).ok());
    CHECK(validate_group(GroupTable::sym3()).ok());

    GroupTable bad = GroupTable::cyclic(3);
    bad.table[1 * 3 + 1] = 1;  // s*s := s breaks associativity/cancellation
    CHECK(!validate_group(bad).ok());
}

TEST_CASE("action validation") {
    const Algebra q = preset_split(1);
    CHECK(validate_action(q, ActionDatum::trivial(q, GroupTable::cyclic(2))).ok());

    const Algebra tn = preset_trunc_node(3);
    const ActionDatum swap = testutil::c2_action(tn, testutil::swap_trunc_node(3));
    CHECK(validate_action(tn, swap).ok());

    CHECK(validate_action(tn, testutil::with_omega(swap, 1, 1, vec({-1, 0, 0, 0, 0}))).ok());
    // omega_{s,s} = 1 + x is moved off itself by the swap: cocycle axiom fails.
    CHECK(!validate_action(tn, testutil::with_omega(swap, 1, 1, vec({1, 1, 0, 0, 0}))).ok());
}

TEST_CASE("crossed product of Q with C2") {
    const Algebra q = preset_split(1);
    const CrossedProduct cp = crossed_product(q, ActionDatum::trivial(q, GroupTable::cyclic(2)));
    CHECK(cp.total.dim() == 2);
    CHECK(validate_algebra(cp.total).ok());
    CHECK(is_semisimple(cp.total));
    CHECK(wedderburn(cp.total).blocks.size() == 2);

    // [s]^2 = -1 gives the complex numbers: valid but not split.
    const ActionDatum neg = testutil::with_omega(
        ActionDatum::trivial(q, GroupTable::cyclic(2)), 1, 1, vec({-1}));
    const CrossedProduct ci = crossed_product(q, neg);
    CHECK(ci.total.dim() == 2);
    const Vec s = ci.element(q.unit(), 1);
    CHECK(ci.total.mul(s, s) == Rat(-1) * ci.total.unit());
    CHECK(is_semisimple(ci.total));
    CHECK_THROWS_AS(wedderburn(ci.total), NotSplitError);
}

TEST_CASE("crossed product radical formula on trunc_node(3) with swap") {
    const Algebra tn = preset_trunc_node(3);
    const CrossedProduct cp =
        crossed_product(tn, testutil::c2_action(tn, testutil::swap_trunc_node(3)));
    CHECK(cp.total.dim() == 10);
    const Subspace rad = jacobson_radical(cp.total);
    CHECK(rad.dim() == 8);
    std::vector<Vec> jg;
    for (const Vec& j : jacobson_radical(tn).basis())
        for (std::size_t g = 0; g < 2; ++g) jg.push_back(cp.element(j, g));
    CHECK(rad == Subspace::span(10, jg));
}

TEST_CASE("crossed product rejects an invalid datum") {
    const Algebra tn = preset_trunc_node(3);
    const ActionDatum bad = testutil::with_omega(
        testutil::c2_action(tn, testutil::swap_trunc_node(3)), 0, 1, vec({2, 0, 0, 0, 0}));
    CHECK(!validate_action(tn, bad).ok());
    CHECK_THROWS_AS(crossed_product(tn, bad), std::invalid_argument);
    // The unvalidated table detects the same corruption as a unit-law or
    // associativity failure.
    CHECK(!validate_algebra(crossed_product_table(tn, bad)).ok());
}

TEST_CASE("skew group rings") {
    const Algebra q = preset_split(1);
    const CrossedProduct group_alg =
        skew_group_ring(q, GroupTable::cyclic(3), std::vector<Matrix>(3, Matrix::identity(1)));
    CHECK(group_alg.total.dim() == 3);
    CHECK(validate_algebra(group_alg.total).ok());

    const Algebra qq = preset_split(2);
    const CrossedProduct m2ish = skew_group_ring(
        qq, GroupTable::cyclic(2), {Matrix::identity(2), testutil::perm_matrix({1, 0})});
    CHECK(is_semisimple(m2ish.total));
    const WedderburnData wd = wedderburn(m2ish.total);
    REQUIRE(wd.blocks.size() == 1);
    CHECK(wd.blocks[0].n == 2);

    // phi that is not an automorphism is rejected.
    Matrix not_mult = Matrix::identity(2);
    not_mult.at(0, 0) = 2;
    CHECK_THROWS_AS(
        skew_group_ring(qq, GroupTable::cyclic(2), {Matrix::identity(2), not_mult}),
        std::invalid_argument);
}

TEST_CASE("crossed-product indexing and embedding") {
    const Algebra tn = preset_trunc_node(3);
    const CrossedProduct cp = crossed_product(tn, ActionDatum::trivial(tn, GroupTable::cyclic(2)));
    for (std::size_t i = 0; i < tn.dim(); ++i)
        for (std::size_t g = 0; g < 2; ++g) {
            CHECK(cp.index(i, g) == i * 2 + g);
            const Vec el = cp.element(tn.basis_element(i), g);
            CHECK(cp.coefficient(el, g) == tn.basis_element(i));
            CHECK(is_zero(cp.coefficient(el, 1 - g)));
        }
    // embed is a unital algebra monomorphism.
    CHECK(validate_morphism(tn, cp.total, Morphism{cp.embed}).ok());
    CHECK(rank(cp.embed) == tn.dim());
}

TEST_CASE("balanced tensor squares") {
    const Algebra b = preset_trunc_poly(2);
    {
        // A = B: the square collapses to B.
        const SubalgebraPair full = make_subalgebra_pair(b, Subspace::full(b.dim()));
        const BalancedTensorSquare sq = balanced_tensor_square(full);
        CHECK(sq.dim == b.dim());
        for (std::size_t i = 0; i < b.dim(); ++i)
            CHECK(sq.mu * sq.pure_tensor(b.basis_element(i), b.unit()) == b.basis_element(i));
    }
    {
        // A = scalars: the square is all of B (x) B.
        const SubalgebraPair scalars =
            make_subalgebra_pair(b, std::vector<Vec>{b.unit()});
        CHECK(balanced_tensor_square(scalars).dim == b.dim() * b.dim());
    }
    {
        const Algebra qq = preset_split(2);
        const CrossedProduct cp = skew_group_ring(
            qq, GroupTable::cyclic(2), {Matrix::identity(2), testutil::perm_matrix({1, 0})});
        std::vector<Vec> base;
        for (std::size_t i = 0; i < 2; ++i) base.push_back(cp.embed.col(i));
        const SubalgebraPair ext = make_subalgebra_pair(cp.total, base);
        CHECK(balanced_tensor_square(ext).dim == cp.total.dim() * 2);
    }
}

TEST_CASE("separability witness") {
    const Algebra q = preset_split(1);
    {
        const CrossedProduct cp =
            crossed_product(q, ActionDatum::trivial(q, GroupTable::cyclic(2)));
        const SeparabilityWitness wit = separability_witness(cp);
        const Vec half_ee = Rat(1, 2) * wit.square.pure_tensor(cp.element(q.unit(), 0),
                                                               cp.element(q.unit(), 0));
        const Vec half_ss = Rat(1, 2) * wit.square.pure_tensor(cp.element(q.unit(), 1),
                                                               cp.element(q.unit(), 1));
        CHECK(wit.w == half_ee + half_ss);
        CHECK(wit.square.mu * wit.w == cp.total.unit());
    }
    {
        const ActionDatum neg = testutil::with_omega(
            ActionDatum::trivial(q, GroupTable::cyclic(2)), 1, 1, vec({-1}));
        const CrossedProduct cp = crossed_product(q, neg);
        const SeparabilityWitness wit = separability_witness(cp);
        const Vec half_ee = Rat(1, 2) * wit.square.pure_tensor(cp.element(q.unit(), 0),
                                                               cp.element(q.unit(), 0));
        const Vec half_ss = Rat(1, 2) * wit.square.pure_tensor(cp.element(q.unit(), 1),
                                                               cp.element(q.unit(), 1));
        CHECK(wit.w == half_ee - half_ss);
        CHECK(wit.square.mu * wit.w == cp.total.unit());
        for (std::size_t i = 0; i < cp.total.dim(); ++i) {
            const Vec b = cp.total.basis_element(i);
            CHECK(wit.square.left_mul(b, wit.w) == wit.square.right_mul(wit.w, b));
        }
    }
    {
        // Coefficient-of-identity projection on the trunc_node(3) swap product.
        const Algebra tn = preset_trunc_node(3);
        const CrossedProduct cp =
            crossed_product(tn, testutil::c2_action(tn, testutil::swap_trunc_node(3)));
        const SeparabilityWitness wit = separability_witness(cp);
        const Vec elem = cp.element(tn.unit(), 0) + cp.element(tn.basis_element(1), 1);
        CHECK(wit.pi * elem == tn.unit());
    }
}

TEST_CASE("strict separability checks") {
    {
        const Algebra tn = preset_trunc_node(3);
        const CrossedProduct cp =
            crossed_product(tn, testutil::c2_action(tn, testutil::swap_trunc_node(3)));
        std::vector<Vec> base;
        for (std::size_t i = 0; i < tn.dim(); ++i) base.push_back(cp.embed.col(i));
        const SubalgebraPair ext = make_subalgebra_pair(cp.total, base);
        const SeparabilityWitness wit = separability_witness(cp);
        CHECK(check_strict_separability(ext, wit.square, wit.w, wit.pi).ok());
    }
    {
        // A = B passes with the tautological witness.
        const Algebra b = preset_trunc_poly(2);
        const SubalgebraPair full = make_subalgebra_pair(b, Subspace::full(b.dim()));
        const BalancedTensorSquare sq = balanced_tensor_square(full);
        const Vec w = sq.pure_tensor(b.unit(), b.unit());
        CHECK(check_strict_separability(full, sq, w, Matrix::identity(b.dim())).ok());
        // Wrong witness: half the unit tensor fails mu(w) = 1.
        CHECK(!check_strict_separability(full, sq, Rat(1, 2) * w, Matrix::identity(b.dim()))
                   .ok());
    }
}

TEST_CASE("induced quotient actions") {
    const Algebra tn = preset_trunc_node(3);
    const ActionDatum swap = testutil::c2_action(tn, testutil::swap_trunc_node(3));
    const QuotientAlgebra q = semisimple_quotient(tn);
    const ActionDatum induced = induced_quotient_action(tn, swap, q);
    CHECK(validate_action(q.algebra, induced).ok());
    CHECK(q.algebra.dim() == 1);
    CHECK(induced.phi_of(1).is_identity());

    const Algebra qq = preset_split(2);
    const ActionDatum qq_swap = testutil::c2_action(qq, testutil::perm_matrix({1, 0}));
    const QuotientAlgebra qq_quot = semisimple_quotient(qq);
    const ActionDatum same = induced_quotient_action(qq, qq_swap, qq_quot);
    CHECK(validate_action(qq_quot.algebra, same).ok());
    CHECK(same.phi_of(1) * qq_quot.projection == qq_quot.projection * qq_swap.phi_of(1));
}

TEST_CASE("action_preserves_subalgebra") {
    const SubalgebraPair np = preset_node_pair(3);
    const ActionDatum swap = testutil::c2_action(np.ambient, testutil::swap_hered(3));
    CHECK(action_preserves_subalgebra(swap, np.sub));
    CHECK(action_preserves_subalgebra(swap, Subspace::full(np.ambient.dim())));

    const Algebra q3 = preset_split(3);
    const ActionDatum cyc = testutil::c2_action(q3, testutil::perm_matrix({1, 2, 0}));
    const Subspace aab = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    CHECK(!action_preserves_subalgebra(cyc, aab));
    CHECK(action_preserves_subalgebra(ActionDatum::trivial(q3, GroupTable::cyclic(2)), aab));
}
