#include "crossalg/group.hpp"

#include <array>
#include <stdexcept>

namespace crossalg {

std::string GroupTable::name(std::size_t g) const {
    if (g < names.size()) return names[g];
    return "g" + std::to_string(g);
}

GroupTable GroupTable::from_table(const std::vector<std::vector<std::size_t>>& rows,
                                  std::vector<std::string> names) {
    GroupTable g;
    g.order = rows.size();
    for (const auto& row : rows) {
        if (row.size() != g.order) throw std::invalid_argument("Cayley table is not square");
        for (std::size_t v : row) {
            if (v >= g.order) throw std::invalid_argument("Cayley table entry out of range");
            g.table.push_back(v);
        }
    }
    g.names = std::move(names);
    // Identity: the unique e with e*x = x*e = x for all x.
    bool found = false;
    for (std::size_t e = 0; e < g.order; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < g.order; ++x)
            if (g.mul(e, x) != x || g.mul(x, e) != x) ok = false;
        if (ok) {
            g.identity = e;
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("Cayley table has no identity");
    g.inverse.assign(g.order, 0);
    for (std::size_t x = 0; x < g.order; ++x) {
        bool inv_found = false;
        for (std::size_t y = 0; y < g.order; ++y)
            if (g.mul(x, y) == g.identity && g.mul(y, x) == g.identity) {
                g.inverse[x] = y;
                inv_found = true;
                break;
            }
        if (!inv_found) throw std::invalid_argument("Cayley table element without inverse");
    }
    return g;
}

GroupTable GroupTable::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : (i == 1 ? "s" : "s^" + std::to_string(i)));
    return from_table(rows, std::move(names));
}

GroupTable GroupTable::sym3() {
    // Elements: e, r, r2 (3-cycles), t, tr, tr2 (transpositions), as
    // permutations of {0,1,2} composed left-to-right.
    const std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const auto compose = [&](std::size_t a, std::size_t b) {
        std::array<std::size_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return k;
        throw std::logic_error("sym3 composition lookup");
    };
    std::vector<std::vector<std::size_t>> rows(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) rows[i][j] = compose(i, j);
    return from_table(rows, {"e", "r", "r2", "t", "tr", "tr2"});
}

Report validate_group(const GroupTable& g) {
    Report rep;
    if (g.table.size() != g.order * g.order) {
        rep.fail("table size mismatch");
        return rep;
    }
    for (std::size_t x = 0; x < g.order; ++x)
        if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x)
            rep.fail("identity law fails at " + g.name(x));
    for (std::size_t x = 0; x < g.order; ++x)
        if (g.mul(x, g.inverse[x]) != g.identity || g.mul(g.inverse[x], x) != g.identity)
            rep.fail("inverse law fails at " + g.name(x));
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
            for (std::size_t c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    rep.fail("associativity fails on (" + g.name(a) + ", " + g.name(b) + ", " +
                             g.name(c) + ")");
    return rep;
}

ActionDatum ActionDatum::trivial_cocycle(const Algebra& a, const GroupTable& g,
                                         std::vector<Matrix> phi) {
    ActionDatum d{g, std::move(phi), {}};
    d.omega.assign(g.order * g.order, a.unit());
    return d;
}

ActionDatum ActionDatum::trivial(const Algebra& a, const GroupTable& g) {
    return trivial_cocycle(a, g, std::vector<Matrix>(g.order, Matrix::identity(a.dim())));
}

Report validate_action(const Algebra& a, const ActionDatum& datum) {
    Report rep;
    const GroupTable& g = datum.group;
    if (datum.phi.size() != g.order || datum.omega.size() != g.order * g.order) {
        rep.fail("datum size mismatch");
        return rep;
    }
    for (std::size_t x = 0; x < g.order; ++x) {
        const Report m = validate_morphism(a, a, Morphism{datum.phi_of(x)});
        if (!m.ok()) rep.fail("phi_" + g.name(x) + " is not an algebra morphism");
        if (rank(datum.phi_of(x)) != a.dim())
            rep.fail("phi_" + g.name(x) + " is not invertible");
    }
    std::vector<Vec> omega_inv(g.order * g.order);
    for (std::size_t f = 0; f < g.order; ++f)
        for (std::size_t x = 0; x < g.order; ++x) {
            const UnitCheck u = is_unit(a, datum.omega_of(f, x));
            if (!u.invertible) {
                rep.fail("omega_(" + g.name(f) + ", " + g.name(x) + ") is not a unit");
                continue;
            }
            omega_inv[f * g.order + x] = u.inverse;
        }
    if (!rep.ok()) return rep;  // axiom checks need units and morphisms

    // Axiom 2.
    if (!datum.phi_of(g.identity).is_identity()) rep.fail("phi_e is not the identity");
    for (std::size_t x = 0; x < g.order; ++x) {
        if (datum.omega_of(x, g.identity) != a.unit())
            rep.fail("omega_(" + g.name(x) + ", e) is not 1");
        if (datum.omega_of(g.identity, x) != a.unit())
            rep.fail("omega_(e, " + g.name(x) + ") is not 1");
    }
    // Axiom 1 on every basis element.
    for (std::size_t g1 = 0; g1 < g.order; ++g1)
        for (std::size_t g2 = 0; g2 < g.order; ++g2) {
            const Matrix lhs = datum.phi_of(g1) * datum.phi_of(g2);
            const Vec& w = datum.omega_of(g1, g2);
            const Vec& winv = omega_inv[g1 * g.order + g2];
            const Matrix rhs =
                a.left_op(w) * a.right_op(winv) * datum.phi_of(g.mul(g1, g2));
            if (lhs != rhs)
                rep.fail("twisted-composition axiom fails at (" + g.name(g1) + ", " +
                         g.name(g2) + ")");
        }
    // Axiom 3.
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = 0; y < g.order; ++y)
            for (std::size_t z = 0; z < g.order; ++z) {
                const Vec lhs = a.mul(datum.phi_of(x) * datum.omega_of(y, z),
                                      datum.omega_of(x, g.mul(y, z)));
                const Vec rhs = a.mul(datum.omega_of(x, y), datum.omega_of(g.mul(x, y), z));
                if (lhs != rhs)
                    rep.fail("cocycle axiom fails at (" + g.name(x) + ", " + g.name(y) + ", " +
                             g.name(z) + ")");
            }
    return rep;
}

Algebra crossed_product_table(const Algebra& a, const ActionDatum& datum) {
    const GroupTable& g = datum.group;
    const std::size_t d = a.dim(), n = g.order, total_dim = d * n;
    Vec unit(total_dim, Rat(0));
    for (std::size_t k = 0; k < d; ++k) unit[k * n + g.identity] = a.unit()[k];
    Algebra total(total_dim, unit);
    std::vector<std::string> labels(total_dim);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t x = 0; x < n; ++x)
            labels[i * n + x] = a.label(i) + "[" + g.name(x) + "]";
    total.set_labels(std::move(labels));

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t f = 0; f < n; ++f)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t x = 0; x < n; ++x) {
                    // e_i[f] * e_j[x] = e_i phi_f(e_j) omega_{f,x} [f x]
                    const Vec coeff = a.mul(a.mul(a.basis_element(i),
                                                  datum.phi_of(f) * a.basis_element(j)),
                                            datum.omega_of(f, x));
                    const std::size_t fx = g.mul(f, x);
                    Vec c(total_dim, Rat(0));
                    for (std::size_t k = 0; k < d; ++k) c[k * n + fx] = coeff[k];
                    total.set_product(i * n + f, j * n + x, c);
                }
    return total;
}

CrossedProduct crossed_product(const Algebra& a, const ActionDatum& datum) {
    const Report rep = validate_action(a, datum);
    if (!rep.ok()) {
        std::string msg = "invalid action datum:";
        for (const auto& f : rep.failures) msg += "\n  " + f;
        throw std::invalid_argument(msg);
    }
    CrossedProduct cp{a, datum, crossed_product_table(a, datum), {}};
    const std::size_t n = datum.group.order;
    cp.embed = Matrix(cp.total.dim(), a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
        cp.embed.at(k * n + datum.group.identity, k) = 1;
    return cp;
}

Vec CrossedProduct::element(const Vec& a_coords, std::size_t g) const {
    Vec v(total.dim(), Rat(0));
    for (std::size_t k = 0; k < base.dim(); ++k) v[index(k, g)] = a_coords[k];
    return v;
}

Vec CrossedProduct::coefficient(const Vec& total_coords, std::size_t g) const {
    Vec v(base.dim(), Rat(0));
    for (std::size_t k = 0; k < base.dim(); ++k) v[k] = total_coords[index(k, g)];
    return v;
}

CrossedProduct skew_group_ring(const Algebra& a, const GroupTable& g,
                               std::vector<Matrix> phi) {
    return crossed_product(a, ActionDatum::trivial_cocycle(a, g, std::move(phi)));
}

Vec BalancedTensorSquare::pure_tensor(const Vec& x, const Vec& y) const {
    const std::size_t d = extension.ambient.dim();
    Vec full(d * d, Rat(0));
    for (std::size_t p = 0; p < d; ++p)
        if (x[p] != 0)
            for (std::size_t q = 0; q < d; ++q)
                if (y[q] != 0) full[p * d + q] = x[p] * y[q];
    return projection * full;
}

namespace {

// Applies b on the chosen tensor factor of a full D^2 vector.
Vec tensor_factor_mul(const Algebra& big, const Vec& b, const Vec& full, bool left) {
    const std::size_t d = big.dim();
    const Matrix op = left ? big.left_op(b) : big.right_op(b);
    Vec out(d * d, Rat(0));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            const Rat& c = full[p * d + q];
            if (c == 0) continue;
            if (left) {
                for (std::size_t r = 0; r < d; ++r)
                    if (op.at(r, p) != 0) out[r * d + q] += op.at(r, p) * c;
            } else {
                for (std::size_t r = 0; r < d; ++r)
                    if (op.at(r, q) != 0) out[p * d + r] += op.at(r, q) * c;
            }
        }
    return out;
}

}  // namespace

Vec BalancedTensorSquare::left_mul(const Vec& b, const Vec& t) const {
    return projection * tensor_factor_mul(extension.ambient, b, section * t, true);
}

Vec BalancedTensorSquare::right_mul(const Vec& t, const Vec& b) const {
    return projection * tensor_factor_mul(extension.ambient, b, section * t, false);
}

BalancedTensorSquare balanced_tensor_square(const SubalgebraPair& extension) {
    const Algebra& big = extension.ambient;
    const std::size_t d = big.dim();
    // Relators x a (x) y - x (x) a y over the A-basis.
    std::vector<Vec> relators;
    for (std::size_t s = 0; s < extension.sub.dim(); ++s) {
        const Vec a = extension.sub.basis()[s];
        for (std::size_t x = 0; x < d; ++x) {
            const Vec xa = big.mul(big.basis_element(x), a);
            for (std::size_t y = 0; y < d; ++y) {
                const Vec ay = big.mul(a, big.basis_element(y));
                Vec rel(d * d, Rat(0));
                for (std::size_t p = 0; p < d; ++p) rel[p * d + y] += xa[p];
                for (std::size_t q = 0; q < d; ++q) rel[x * d + q] -= ay[q];
                if (!is_zero(rel)) relators.push_back(std::move(rel));
            }
        }
    }
    const VectorQuotient vq = vector_quotient(Subspace::span(d * d, relators));
    BalancedTensorSquare bts{extension, vq.quotient_dim, vq.projection, vq.section, {}};
    // mu factors through the quotient since (x a) y = x (a y).
    Matrix mu_full(d, d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            const Vec prod = big.basis_product(p, q);
            for (std::size_t k = 0; k < d; ++k) mu_full.at(k, p * d + q) = prod[k];
        }
    bts.mu = mu_full * vq.section;
    // Bimodule-morphism check for mu on the quotient basis.
    for (std::size_t b = 0; b < d; ++b) {
        const Vec eb = big.basis_element(b);
        for (std::size_t t = 0; t < bts.dim; ++t) {
            Vec unit_t(bts.dim, Rat(0));
            unit_t[t] = 1;
            if (bts.mu * bts.left_mul(eb, unit_t) != big.mul(eb, bts.mu * unit_t) ||
                bts.mu * bts.right_mul(unit_t, eb) != big.mul(bts.mu * unit_t, eb))
                throw std::logic_error("mu is not a bimodule morphism on the quotient");
        }
    }
    return bts;
}

SeparabilityWitness separability_witness(const CrossedProduct& cp) {
    const GroupTable& g = cp.datum.group;
    const std::size_t n = g.order;
    std::vector<Vec> embed_cols;
    for (std::size_t k = 0; k < cp.base.dim(); ++k) embed_cols.push_back(cp.embed.col(k));
    const SubalgebraPair ext = make_subalgebra_pair(cp.total, embed_cols);
    SeparabilityWitness wit{balanced_tensor_square(ext), {}, {}};

    Vec w(wit.square.dim, Rat(0));
    for (std::size_t x = 0; x < n; ++x) {
        const UnitCheck u = is_unit(cp.base, cp.datum.omega_of(x, g.inverse[x]));
        if (!u.invertible) throw std::logic_error("omega value is not a unit");
        w = w + wit.square.pure_tensor(cp.element(u.inverse, x),
                                       cp.element(cp.base.unit(), g.inverse[x]));
    }
    wit.w = Rat(1, static_cast<long>(n)) * w;

    // pi: coefficient of [e], expressed in the subalgebra's echelon basis.
    wit.pi = Matrix(ext.sub.dim(), cp.total.dim());
    for (std::size_t t = 0; t < cp.total.dim(); ++t) {
        Vec et(cp.total.dim(), Rat(0));
        et[t] = 1;
        const Vec coeff = cp.coefficient(et, g.identity);
        const auto coords = ext.sub.coords_of(cp.embed * coeff);
        if (!coords) throw std::logic_error("projection image left the subalgebra");
        for (std::size_t r = 0; r < ext.sub.dim(); ++r) wit.pi.at(r, t) = (*coords)[r];
    }
    return wit;
}

Report check_strict_separability(const SubalgebraPair& extension,
                                 const BalancedTensorSquare& square, const Vec& w,
                                 const Matrix& pi) {
    Report rep;
    const Algebra& big = extension.ambient;
    // (1) witness identities
    if (square.mu * w != big.unit()) rep.fail("mu(w) != 1");
    for (std::size_t b = 0; b < big.dim(); ++b) {
        const Vec eb = big.basis_element(b);
        if (square.left_mul(eb, w) != square.right_mul(w, eb))
            rep.fail("w does not centralize basis element " + big.label(b));
    }
    // (2) split inclusion via pi
    for (std::size_t s = 0; s < extension.sub.dim(); ++s) {
        Vec expected(extension.sub.dim(), Rat(0));
        expected[s] = 1;
        if (pi * extension.sub.basis()[s] != expected) {
            rep.fail("pi does not restrict to the identity on the subalgebra");
            break;
        }
    }
    for (std::size_t s = 0; s < extension.sub.dim(); ++s) {
        const Vec a_big = extension.sub.basis()[s];
        Vec a_sub(extension.sub.dim(), Rat(0));
        a_sub[s] = 1;
        for (std::size_t x = 0; x < big.dim(); ++x) {
            const Vec ex = big.basis_element(x);
            if (pi * big.mul(a_big, ex) != extension.sub_algebra.mul(a_sub, pi * ex) ||
                pi * big.mul(ex, a_big) != extension.sub_algebra.mul(pi * ex, a_sub)) {
                rep.fail("pi is not a bimodule morphism at (" +
                         std::to_string(s) + ", " + big.label(x) + ")");
            }
        }
    }
    // (3) projectivity of B over A, both sides
    const LeftModule left_restriction =
        LeftModule::restriction(big, extension.sub_algebra, extension.inclusion);
    try {
        if (!is_projective(extension.sub_algebra, left_restriction))
            rep.fail("B is not projective as a left A-module");
        const LeftModule right_restriction = LeftModule::restriction(
            big.opposite(), extension.sub_algebra.opposite(), extension.inclusion);
        if (!is_projective(extension.sub_algebra.opposite(), right_restriction))
            rep.fail("B is not projective as a right A-module");
    } catch (const NotSplitError& e) {
        rep.fail(std::string("projectivity test needs a split quotient: ") + e.what());
    }
    return rep;
}

ActionDatum induced_quotient_action(const Algebra& a, const ActionDatum& datum,
                                    const QuotientAlgebra& quot) {
    const Subspace rad = kernel(quot.projection);
    for (std::size_t x = 0; x < datum.group.order; ++x) {
        std::vector<Vec> image;
        for (const Vec& v : rad.basis()) image.push_back(datum.phi_of(x) * v);
        if (Subspace::span(a.dim(), image) != rad)
            throw std::logic_error("automorphism does not preserve the radical");
    }
    ActionDatum induced{datum.group, {}, {}};
    for (std::size_t x = 0; x < datum.group.order; ++x)
        induced.phi.push_back(quot.projection * datum.phi_of(x) * quot.section);
    for (const Vec& w : datum.omega) induced.omega.push_back(quot.projection * w);
    const Report rep = validate_action(quot.algebra, induced);
    if (!rep.ok()) throw std::logic_error("induced quotient datum is not an action");
    return induced;
}

bool action_preserves_subalgebra(const ActionDatum& datum, const Subspace& sub,
                                 bool require_omega) {
    for (std::size_t x = 0; x < datum.group.order; ++x) {
        std::vector<Vec> image;
        for (const Vec& v : sub.basis()) image.push_back(datum.phi_of(x) * v);
        if (Subspace::span(sub.ambient_dim(), image) != sub) return false;
    }
    if (require_omega)
        for (const Vec& w : datum.omega)
            if (!sub.contains(w)) return false;
    return true;
}

}  // namespace crossalg
