#include "crossalg/endo.hpp"

#include <stdexcept>
#include <string>

namespace crossalg {

namespace {

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

Matrix unflatten(const Vec& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    return m;
}

// A (x) I_m on row-major flattened block vectors.
Matrix kron_left(const Matrix& a, std::size_t m) {
    Matrix out(a.rows() * m, a.cols() * m);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) == 0) continue;
            for (std::size_t s = 0; s < m; ++s) out.at(r * m + s, c * m + s) = a.at(r, c);
        }
    return out;
}

// I_n (x) B.
Matrix kron_right(std::size_t n, const Matrix& b) {
    Matrix out(n * b.rows(), n * b.cols());
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(t * b.rows() + r, t * b.cols() + c) = b.at(r, c);
    return out;
}

Matrix inverse_or_throw(const Matrix& m, const std::string& what) {
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument(what);
    return *inv;
}

}  // namespace

Vec EndoAlgebra::coords_of(const Matrix& rho) const {
    auto c = space.coords_of(flatten(rho));
    if (!c) throw std::logic_error("matrix does not commute with the module action");
    return *c;
}

Matrix EndoAlgebra::realize(const Vec& coords) const {
    const std::size_t m = realization.empty() ? 0 : realization[0].rows();
    Matrix out(m, m);
    for (std::size_t b = 0; b < coords.size(); ++b)
        if (coords[b] != 0) {
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    out.at(r, c) += coords[b] * realization[b].at(r, c);
        }
    return out;
}

EndoAlgebra endomorphism_algebra(const Algebra& a, const LeftModule& m) {
    const std::size_t n = m.dim;
    // rho * A_i - A_i * rho = 0 for every action matrix, as a linear system
    // on the flattened rho.
    Matrix constraints(a.dim() * n * n, n * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Matrix& act = m.action[i];
        const std::size_t base = i * n * n;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = base + r * n + c;
                for (std::size_t k = 0; k < n; ++k) {
                    constraints.at(row, r * n + k) += act.at(k, c);
                    constraints.at(row, k * n + c) -= act.at(r, k);
                }
            }
    }

    EndoAlgebra e{Algebra(), {}, kernel(constraints)};
    for (const Vec& v : e.space.basis()) e.realization.push_back(unflatten(v, n));

    const std::size_t dim = e.space.dim();
    Vec unit = *e.space.coords_of(flatten(Matrix::identity(n)));
    e.algebra = Algebra(dim, std::move(unit));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            e.algebra.set_product(i, j,
                                  *e.space.coords_of(flatten(e.realization[i] * e.realization[j])));
    return e;
}

Report validate_invariant_module(const Algebra& a, const ActionDatum& datum,
                                 const InvariantModule& im) {
    Report rep;
    const std::size_t n = im.module.dim;
    if (im.alpha.size() != datum.group.order) {
        rep.fail("alpha family size does not match the group order");
        return rep;
    }
    for (std::size_t g = 0; g < datum.group.order; ++g) {
        if (im.alpha[g].rows() != n || im.alpha[g].cols() != n) {
            rep.fail("alpha[" + datum.group.name(g) + "] has the wrong shape");
            continue;
        }
        if (!inverse(im.alpha[g]))
            rep.fail("alpha[" + datum.group.name(g) + "] is not invertible");
    }
    if (!rep.ok()) return rep;
    if (!im.alpha[datum.group.identity].is_identity())
        rep.fail("alpha at the group identity is not the identity map");
    for (std::size_t g = 0; g < datum.group.order; ++g)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Matrix lhs = im.alpha[g] * im.module.action[i];
            const Matrix rhs = im.module.act(datum.phi_of(g) * a.basis_element(i)) * im.alpha[g];
            if (!(lhs == rhs))
                rep.fail("compatibility fails at (g=" + datum.group.name(g) +
                         ", a=" + a.label(i) + ")");
        }
    return rep;
}

ActionDatum induced_endo_action(const Algebra& a, const ActionDatum& datum,
                                const InvariantModule& im, const EndoAlgebra& endo) {
    {
        const Report rep = validate_invariant_module(a, datum, im);
        if (!rep.ok()) throw std::invalid_argument(rep.failures.front());
    }
    const std::size_t order = datum.group.order;
    const std::size_t edim = endo.algebra.dim();

    ActionDatum out;
    out.group = datum.group;
    std::vector<Matrix> alpha_inv;
    for (std::size_t g = 0; g < order; ++g)
        alpha_inv.push_back(inverse_or_throw(im.alpha[g], "alpha not invertible"));

    for (std::size_t g = 0; g < order; ++g) {
        std::vector<Vec> cols;
        for (std::size_t b = 0; b < edim; ++b)
            cols.push_back(endo.coords_of(im.alpha[g] * endo.realization[b] * alpha_inv[g]));
        out.phi.push_back(Matrix::from_cols(edim, cols));
    }

    for (std::size_t f = 0; f < order; ++f)
        for (std::size_t g = 0; g < order; ++g) {
            const UnitCheck u = is_unit(a, datum.omega_of(f, g));
            if (!u.invertible)
                throw std::invalid_argument("omega value at (" + datum.group.name(f) + ", " +
                                            datum.group.name(g) + ") is not a unit");
            const Matrix xi = im.module.act(u.inverse) * im.alpha[f] * im.alpha[g] *
                              alpha_inv[datum.group.mul(f, g)];
            const auto coords = endo.space.coords_of(flatten(xi));
            if (!coords)
                throw std::invalid_argument("xi at (" + datum.group.name(f) + ", " +
                                            datum.group.name(g) + ") is not module-linear");
            out.omega.push_back(*coords);
        }
    return out;
}

LeftModule induced_module(const CrossedProduct& cp, const LeftModule& m) {
    const std::size_t order = cp.datum.group.order;
    const std::size_t md = m.dim;
    const Algebra& base = cp.base;

    std::vector<Matrix> phi_inv;
    for (std::size_t h = 0; h < order; ++h)
        phi_inv.push_back(inverse_or_throw(cp.datum.phi_of(h), "phi not invertible"));

    LeftModule out;
    out.algebra_dim = cp.total.dim();
    out.dim = order * md;
    out.action.assign(out.algebra_dim, Matrix(out.dim, out.dim));
    // b_i[f] sends [g] (x) p to [fg] (x) phi_{fg}^{-1}(b_i omega_{f,g}) p.
    for (std::size_t i = 0; i < base.dim(); ++i)
        for (std::size_t f = 0; f < order; ++f) {
            Matrix& act = out.action[cp.index(i, f)];
            for (std::size_t g = 0; g < order; ++g) {
                const std::size_t fg = cp.datum.group.mul(f, g);
                const Vec c = base.mul(base.basis_element(i), cp.datum.omega_of(f, g));
                const Matrix block = m.act(phi_inv[fg] * c);
                for (std::size_t r = 0; r < md; ++r)
                    for (std::size_t k = 0; k < md; ++k)
                        act.at(fg * md + r, g * md + k) = block.at(r, k);
            }
        }
    return out;
}

InducedModule induced_module(const SubalgebraPair& ext, const LeftModule& m) {
    const std::size_t big = ext.ambient.dim();
    const std::size_t md = m.dim;
    const std::size_t total = big * md;

    std::vector<Vec> relators;
    for (std::size_t t = 0; t < big; ++t)
        for (std::size_t b = 0; b < ext.sub_algebra.dim(); ++b) {
            const Vec xa = ext.ambient.mul(ext.ambient.basis_element(t),
                                           ext.embed(ext.sub_algebra.basis_element(b)));
            const Matrix& bp = m.action[b];
            for (std::size_t p = 0; p < md; ++p) {
                Vec rel(total, Rat(0));
                for (std::size_t k = 0; k < big; ++k) rel[k * md + p] += xa[k];
                for (std::size_t q = 0; q < md; ++q) rel[t * md + q] -= bp.at(q, p);
                if (!is_zero(rel)) relators.push_back(std::move(rel));
            }
        }

    const VectorQuotient q = vector_quotient(Subspace::span(total, relators));
    InducedModule out;
    out.projection = q.projection;
    out.section = q.section;
    out.module.algebra_dim = big;
    out.module.dim = q.quotient_dim;
    for (std::size_t y = 0; y < big; ++y)
        out.module.action.push_back(
            q.projection * kron_left(ext.ambient.left_op(ext.ambient.basis_element(y)), md) *
            q.section);
    return out;
}

PhiReport phi_isomorphism(const Algebra& a, const ActionDatum& datum,
                          const InvariantModule& im) {
    PhiReport rep;
    {
        const Report inv = validate_invariant_module(a, datum, im);
        if (!inv.ok()) {
            rep.details.merge(inv);
            return rep;
        }
    }
    const EndoAlgebra endo = endomorphism_algebra(a, im.module);
    const ActionDatum induced = induced_endo_action(a, datum, im, endo);
    {
        const Report av = validate_action(endo.algebra, induced);
        rep.action_valid = av.ok();
        rep.details.merge(av);
        if (!rep.action_valid) return rep;
    }

    const CrossedProduct left = crossed_product(endo.algebra, induced);
    const CrossedProduct cp = crossed_product(a, datum);
    const LeftModule n_mod = induced_module(cp, im.module);
    const EndoAlgebra right = endomorphism_algebra(cp.total, n_mod);

    rep.left_dim = left.total.dim();
    rep.right_dim = right.algebra.dim();

    const std::size_t order = datum.group.order;
    const std::size_t md = im.module.dim;

    std::vector<Vec> ginv;  // [g]^{-1} in the crossed product
    for (std::size_t g = 0; g < order; ++g) {
        const UnitCheck u = is_unit(cp.total, cp.element(a.unit(), g));
        if (!u.invertible) {
            rep.details.fail("basis unit [" + datum.group.name(g) + "] is not invertible");
            return rep;
        }
        ginv.push_back(u.inverse);
    }
    std::vector<Matrix> phi_inv;
    for (std::size_t h = 0; h < order; ++h) phi_inv.push_back(*inverse(datum.phi_of(h)));

    // Column of Phi per left basis element rho_b{g}: the matrix of
    // [h] (x) p -> [h][g]^{-1} (x) rho_b(alpha_g(p)) in right coordinates.
    rep.well_defined = true;
    Matrix phi_map(right.algebra.dim(), left.total.dim());
    for (std::size_t b = 0; b < endo.algebra.dim(); ++b)
        for (std::size_t g = 0; g < order; ++g) {
            Matrix image(n_mod.dim, n_mod.dim);
            const Matrix move = endo.realization[b] * im.alpha[g];
            for (std::size_t h = 0; h < order; ++h) {
                const Vec t = cp.total.mul(cp.element(a.unit(), h), ginv[g]);
                for (std::size_t k = 0; k < md; ++k) {
                    Vec q(md, Rat(0));
                    for (std::size_t r = 0; r < md; ++r) q[r] = move.at(r, k);
                    for (std::size_t f = 0; f < order; ++f) {
                        const Vec cf = cp.coefficient(t, f);
                        if (is_zero(cf)) continue;
                        const Vec w = im.module.act(phi_inv[f] * cf) * q;
                        for (std::size_t r = 0; r < md; ++r)
                            image.at(f * md + r, h * md + k) += w[r];
                    }
                }
            }
            const auto coords = right.space.coords_of(flatten(image));
            if (!coords) {
                rep.well_defined = false;
                rep.details.fail("image of basis element (" + std::to_string(b) + ", " +
                                 datum.group.name(g) + ") is not an endomorphism");
                continue;
            }
            for (std::size_t r = 0; r < right.algebra.dim(); ++r)
                phi_map.at(r, left.index(b, g)) = (*coords)[r];
        }
    if (!rep.well_defined) return rep;

    rep.multiplicative = true;
    for (std::size_t s = 0; s < left.total.dim(); ++s)
        for (std::size_t t = 0; t < left.total.dim(); ++t) {
            const Vec lhs = phi_map * left.total.basis_product(s, t);
            const Vec rhs = right.algebra.mul(phi_map.col(s), phi_map.col(t));
            if (!is_zero(lhs - rhs)) {
                rep.multiplicative = false;
                rep.details.fail("Phi is not multiplicative on basis pair (" +
                                 std::to_string(s) + ", " + std::to_string(t) + ")");
            }
        }
    rep.unital = is_zero(phi_map * left.total.unit() - right.algebra.unit());
    if (!rep.unital) rep.details.fail("Phi does not preserve the unit");
    rep.bijective =
        rep.left_dim == rep.right_dim && rank(phi_map) == rep.left_dim;
    if (!rep.bijective) rep.details.fail("Phi is not bijective");
    return rep;
}

MoritaReport morita_transport_check(const SemilocalPair& p, const LeftModule& prog,
                                    std::uint64_t seed) {
    const AlgebraAnalysis an = analyze_algebra(p.sub_algebra, seed);
    if (!is_projective(p.sub_algebra, an, prog))
        throw std::invalid_argument("not a progenerator: module is not projective");
    for (std::size_t t : top_multiplicities(p.sub_algebra, an, prog))
        if (t == 0)
            throw std::invalid_argument("not a progenerator: some simple is missing from the top");

    const EndoAlgebra end_sub = endomorphism_algebra(p.sub_algebra, prog);
    const InducedModule ind = induced_module(p, prog);
    const EndoAlgebra end_amb = endomorphism_algebra(p.ambient, ind.module);

    // End(prog) lands in End(induced) as id (x) rho on the quotient.
    std::vector<Vec> span;
    for (const Matrix& rho : end_sub.realization) {
        const Matrix big = ind.projection * kron_right(p.ambient.dim(), rho) * ind.section;
        span.push_back(end_amb.coords_of(big));
    }
    const SemilocalPair transported =
        make_subalgebra_pair(end_amb.algebra, Subspace::span(end_amb.algebra.dim(), span));

    MoritaReport rep;
    rep.end_sub_dim = end_sub.algebra.dim();
    rep.end_ambient_dim = end_amb.algebra.dim();
    rep.backstrom = is_backstrom(transported);
    rep.ell_original = ell_star(p, seed);
    rep.ell_transported = ell_star(transported, seed);
    rep.ell_preserved = rep.ell_original == rep.ell_transported;
    return rep;
}

}  // namespace crossalg
