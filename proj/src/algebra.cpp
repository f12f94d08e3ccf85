#include "crossalg/algebra.hpp"

#include <stdexcept>

namespace crossalg {

Algebra::Algebra(std::size_t dim, Vec unit)
    : dim_(dim), structure_(dim * dim * dim, Rat(0)), unit_(std::move(unit)) {
    if (unit_.size() != dim_) throw std::invalid_argument("unit coordinate length mismatch");
}

void Algebra::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_)
        throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

std::string Algebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "b" + std::to_string(i);
}

void Algebra::set_product(std::size_t i, std::size_t j, Vec coords) {
    if (coords.size() != dim_) throw std::invalid_argument("product coordinate length mismatch");
    for (std::size_t k = 0; k < dim_; ++k) structure_[(i * dim_ + j) * dim_ + k] = coords[k];
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vec r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = structure_[(i * dim_ + j) * dim_ + k];
    return r;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("element dimension mismatch");
    Vec r(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Rat c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                r[k] += c * structure_[(i * dim_ + j) * dim_ + k];
        }
    }
    return r;
}

Vec Algebra::basis_element(std::size_t i) const {
    Vec e(dim_, Rat(0));
    e[i] = 1;
    return e;
}

Matrix Algebra::left_op(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = mul(x, basis_element(j));
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Matrix Algebra::right_op(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = mul(basis_element(j), x);
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Algebra Algebra::opposite() const {
    Algebra op(dim_, unit_);
    op.labels_ = labels_;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) op.set_product(i, j, basis_product(j, i));
    return op;
}

Report validate_morphism(const Algebra& source, const Algebra& target, const Morphism& f) {
    Report rep;
    if (f.matrix.rows() != target.dim() || f.matrix.cols() != source.dim()) {
        rep.fail("morphism matrix shape mismatch");
        return rep;
    }
    if (f.apply(source.unit()) != target.unit()) rep.fail("morphism is not unital");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            const Vec lhs = f.apply(source.basis_product(i, j));
            const Vec rhs = target.mul(f.apply(source.basis_element(i)),
                                       f.apply(source.basis_element(j)));
            if (lhs != rhs)
                rep.fail("morphism not multiplicative on (" + source.label(i) + ", " +
                         source.label(j) + ")");
        }
    return rep;
}

Report validate_algebra(const Algebra& a) {
    Report rep;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (a.mul(a.unit(), a.basis_element(i)) != a.basis_element(i))
            rep.fail("unit law fails on the left at " + a.label(i));
        if (a.mul(a.basis_element(i), a.unit()) != a.basis_element(i))
            rep.fail("unit law fails on the right at " + a.label(i));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const Vec lhs = a.mul(ij, a.basis_element(k));
                const Vec rhs = a.mul(a.basis_element(i), a.basis_product(j, k));
                if (lhs != rhs)
                    rep.fail("associativity fails on (" + a.label(i) + ", " + a.label(j) +
                             ", " + a.label(k) + ")");
            }
        }
    return rep;
}

UnitCheck is_unit(const Algebra& a, const Vec& x) {
    // In a finite-dimensional unital algebra, L_x nonsingular implies x is
    // invertible; the right-inverse check below then certifies two-sidedness.
    const auto y = solve(a.left_op(x), a.unit());
    if (!y) return {};
    if (a.mul(*y, x) != a.unit()) return {};
    return {true, *y};
}

namespace {

// Fixed point of span-then-multiply iteration.
Subspace multiplicative_closure(const Algebra& a, std::vector<Vec> seed) {
    Subspace current = Subspace::span(a.dim(), seed);
    for (;;) {
        std::vector<Vec> next = current.basis();
        for (const Vec& u : current.basis())
            for (const Vec& v : current.basis()) next.push_back(a.mul(u, v));
        Subspace grown = Subspace::span(a.dim(), next);
        if (grown.dim() == current.dim()) return grown;
        current = std::move(grown);
    }
}

}  // namespace

Subspace subalgebra_closure(const Algebra& a, const std::vector<Vec>& generators,
                            bool include_unit) {
    std::vector<Vec> seed = generators;
    if (include_unit) seed.push_back(a.unit());
    return multiplicative_closure(a, std::move(seed));
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& generators) {
    Subspace current = Subspace::span(a.dim(), generators);
    for (;;) {
        std::vector<Vec> next = current.basis();
        for (const Vec& v : current.basis())
            for (std::size_t i = 0; i < a.dim(); ++i) {
                next.push_back(a.mul(a.basis_element(i), v));
                next.push_back(a.mul(v, a.basis_element(i)));
            }
        Subspace grown = Subspace::span(a.dim(), next);
        if (grown.dim() == current.dim()) return grown;
        current = std::move(grown);
    }
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
    if (ideal.ambient_dim() != a.dim())
        throw std::invalid_argument("ideal ambient dimension mismatch");
    for (const Vec& v : ideal.basis())
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!ideal.contains(a.mul(a.basis_element(i), v)) ||
                !ideal.contains(a.mul(v, a.basis_element(i))))
                throw std::invalid_argument("subspace is not a two-sided ideal");

    const VectorQuotient vq = vector_quotient(ideal);
    Algebra q(vq.quotient_dim, vq.projection * a.unit());
    for (std::size_t i = 0; i < vq.quotient_dim; ++i)
        for (std::size_t j = 0; j < vq.quotient_dim; ++j)
            q.set_product(i, j, vq.projection * a.mul(vq.section.col(i), vq.section.col(j)));
    return {std::move(q), vq.projection, vq.section};
}

Subspace center(const Algebra& a) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Matrix d = a.left_op(a.basis_element(i)) - a.right_op(a.basis_element(i));
        for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row(r));
    }
    return kernel(Matrix::from_rows(a.dim(), rows));
}

Subspace idealizer(const Algebra& a, const Subspace& j) {
    if (j.ambient_dim() != a.dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    if (j.dim() == 0) return Subspace::full(a.dim());
    const VectorQuotient vq = vector_quotient(j);
    std::vector<Vec> rows;
    for (const Vec& jv : j.basis()) {
        // Condition on x: x * jv lies in J, i.e. proj(R_jv x) = 0.
        const Matrix cond = vq.projection * a.right_op(jv);
        for (std::size_t r = 0; r < cond.rows(); ++r) rows.push_back(cond.row(r));
    }
    return kernel(Matrix::from_rows(a.dim(), rows));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    Vec unit(da + db, Rat(0));
    for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit()[i];
    for (std::size_t i = 0; i < db; ++i) unit[da + i] = b.unit()[i];
    Algebra p(da + db, unit);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Vec c(da + db, Rat(0));
            const Vec ab = a.basis_product(i, j);
            for (std::size_t k = 0; k < da; ++k) c[k] = ab[k];
            p.set_product(i, j, c);
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Vec c(da + db, Rat(0));
            const Vec bb = b.basis_product(i, j);
            for (std::size_t k = 0; k < db; ++k) c[da + k] = bb[k];
            p.set_product(da + i, da + j, c);
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < da; ++i) labels.push_back("l:" + a.label(i));
    for (std::size_t i = 0; i < db; ++i) labels.push_back("r:" + b.label(i));
    p.set_labels(std::move(labels));
    return p;
}

SubalgebraPair make_subalgebra_pair(const Algebra& ambient, const std::vector<Vec>& sub_span,
                         bool include_unit) {
    std::vector<Vec> span = sub_span;
    if (include_unit) span.push_back(ambient.unit());
    return make_subalgebra_pair(ambient, Subspace::span(ambient.dim(), span));
}

SubalgebraPair make_subalgebra_pair(const Algebra& ambient, const Subspace& sub) {
    if (!sub.contains(ambient.unit()))
        throw std::invalid_argument("subalgebra does not contain the unit");
    const auto unit_coords = sub.coords_of(ambient.unit());
    Algebra induced(sub.dim(), *unit_coords);
    for (std::size_t i = 0; i < sub.dim(); ++i)
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            const auto c = sub.coords_of(ambient.mul(sub.basis()[i], sub.basis()[j]));
            if (!c) throw std::invalid_argument("subspace is not multiplicatively closed");
            induced.set_product(i, j, *c);
        }
    return {ambient, sub, std::move(induced), sub.basis_cols()};
}

Report validate_pair(const SubalgebraPair& p) {
    Report rep;
    if (!p.sub.contains(p.ambient.unit())) rep.fail("unit is not in the subalgebra");
    for (std::size_t i = 0; i < p.sub.dim(); ++i)
        for (std::size_t j = 0; j < p.sub.dim(); ++j) {
            const Vec prod = p.ambient.mul(p.sub.basis()[i], p.sub.basis()[j]);
            const auto c = p.sub.coords_of(prod);
            if (!c) {
                rep.fail("subalgebra not closed at basis pair (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
                continue;
            }
            if (p.sub_algebra.basis_product(i, j) != *c)
                rep.fail("induced structure constants disagree with ambient product at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    return rep;
}

Algebra preset_trunc_poly(std::size_t n) {
    if (n == 0) throw std::invalid_argument("trunc_poly requires n >= 1");
    Vec unit(n, Rat(0));
    unit[0] = 1;
    Algebra a(n, unit);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    a.set_labels(std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec c(n, Rat(0));
            if (i + j < n) c[i + j] = 1;
            a.set_product(i, j, c);
        }
    return a;
}

Algebra preset_trunc_node(std::size_t n) {
    if (n < 2) throw std::invalid_argument("trunc_node requires n >= 2");
    const std::size_t d = 2 * n - 1;
    Vec unit(d, Rat(0));
    unit[0] = 1;
    Algebra a(d, unit);
    // Basis: 1, x, ..., x^{n-1}, y, ..., y^{n-1}; relations xy = 0, x^n = y^n = 0.
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < n; ++i)
        labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i)
        labels.push_back(i == 1 ? "y" : "y^" + std::to_string(i));
    a.set_labels(std::move(labels));

    const auto x_idx = [n](std::size_t deg) { return deg; };
    const auto y_idx = [n](std::size_t deg) { return n - 1 + deg; };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec c(d, Rat(0));
            const bool i_is_x = i >= 1 && i <= n - 1;
            const bool j_is_x = j >= 1 && j <= n - 1;
            const std::size_t deg_i = i == 0 ? 0 : (i_is_x ? i : i - (n - 1));
            const std::size_t deg_j = j == 0 ? 0 : (j_is_x ? j : j - (n - 1));
            if (i == 0 && j == 0) {
                c[0] = 1;
            } else if (i == 0) {
                c[j] = 1;
            } else if (j == 0) {
                c[i] = 1;
            } else if (i_is_x == j_is_x) {
                const std::size_t deg = deg_i + deg_j;
                if (deg < n) c[i_is_x ? x_idx(deg) : y_idx(deg)] = 1;
            }
            // mixed x/y products vanish
            a.set_product(i, j, c);
        }
    return a;
}

Algebra preset_trunc_hered(std::size_t n) {
    return direct_product(preset_trunc_poly(n), preset_trunc_poly(n));
}

Algebra preset_mat(std::size_t n) {
    const std::size_t d = n * n;
    const auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    Vec unit(d, Rat(0));
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = 1;
    Algebra a(d, unit);
    std::vector<std::string> labels(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels[idx(i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
    a.set_labels(std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vec c(d, Rat(0));
                    if (j == k) c[idx(i, l)] = 1;
                    a.set_product(idx(i, j), idx(k, l), c);
                }
    return a;
}

Algebra preset_upper_tri(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
    const std::size_t d = cells.size();
    const auto idx = [&cells](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k] == std::make_pair(i, j)) return k;
        throw std::logic_error("cell lookup");
    };
    Vec unit(d, Rat(0));
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = 1;
    Algebra a(d, unit);
    std::vector<std::string> labels(d);
    for (std::size_t k = 0; k < d; ++k)
        labels[k] = "e" + std::to_string(cells[k].first + 1) + std::to_string(cells[k].second + 1);
    a.set_labels(std::move(labels));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            Vec c(d, Rat(0));
            if (cells[p].second == cells[q].first) c[idx(cells[p].first, cells[q].second)] = 1;
            a.set_product(p, q, c);
        }
    return a;
}

Algebra preset_split(std::size_t k) {
    if (k == 0) throw std::invalid_argument("split preset requires k >= 1");
    Vec unit(k, Rat(1));
    Algebra a(k, unit);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
        labels[i] = "f" + std::to_string(i + 1);
        for (std::size_t j = 0; j < k; ++j) {
            Vec c(k, Rat(0));
            if (i == j) c[i] = 1;
            a.set_product(i, j, c);
        }
    }
    a.set_labels(std::move(labels));
    return a;
}

SubalgebraPair preset_node_pair(std::size_t n) {
    const Algebra h = preset_trunc_hered(n);
    // Span: (1,1) plus all positive powers of each factor variable.
    std::vector<Vec> span{h.unit()};
    for (std::size_t i = 1; i < n; ++i) {
        span.push_back(h.basis_element(i));      // (x^i, 0)
        span.push_back(h.basis_element(n + i));  // (0, y^i)
    }
    return make_subalgebra_pair(h, span);
}

SubalgebraPair preset_diag_pair() {
    const Algebra h = preset_mat(2);
    return make_subalgebra_pair(h, {h.basis_element(0), h.basis_element(3)});
}

SubalgebraPair preset_triple_pair() {
    const Algebra h = preset_split(3);
    return make_subalgebra_pair(h, {h.unit()});
}

}  // namespace crossalg
