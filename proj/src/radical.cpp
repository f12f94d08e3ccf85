#include "crossalg/radical.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace crossalg {

Matrix LeftModule::act(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
        if (a[i] != 0) m = m + [&] {
            Matrix s(dim, dim);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) s.at(r, c) = a[i] * action[i].at(r, c);
            return s;
        }();
    return m;
}

LeftModule LeftModule::regular(const Algebra& a) {
    LeftModule m{a.dim(), a.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_op(a.basis_element(i)));
    return m;
}

LeftModule LeftModule::direct_sum(const LeftModule& m, const LeftModule& n) {
    if (m.algebra_dim != n.algebra_dim) throw std::invalid_argument("parent algebra mismatch");
    LeftModule s{m.algebra_dim, m.dim + n.dim, {}};
    for (std::size_t i = 0; i < m.algebra_dim; ++i) {
        Matrix block(s.dim, s.dim);
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) block.at(r, c) = m.action[i].at(r, c);
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < n.dim; ++c)
                block.at(m.dim + r, m.dim + c) = n.action[i].at(r, c);
        s.action.push_back(std::move(block));
    }
    return s;
}

LeftModule LeftModule::left_ideal(const Algebra& a, const Vec& e, Subspace* carrier) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.basis_element(i), e));
    const Subspace sp = Subspace::span(a.dim(), gens);
    if (carrier) *carrier = sp;
    LeftModule m{a.dim(), sp.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix act(sp.dim(), sp.dim());
        for (std::size_t c = 0; c < sp.dim(); ++c) {
            const auto coords = sp.coords_of(a.mul(a.basis_element(i), sp.basis()[c]));
            if (!coords) throw std::logic_error("left ideal not closed under action");
            for (std::size_t r = 0; r < sp.dim(); ++r) act.at(r, c) = (*coords)[r];
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

LeftModule LeftModule::restriction(const Algebra& big, const Algebra& small,
                                   const Matrix& inclusion) {
    if (inclusion.rows() != big.dim() || inclusion.cols() != small.dim())
        throw std::invalid_argument("inclusion shape mismatch");
    LeftModule m{small.dim(), big.dim(), {}};
    for (std::size_t i = 0; i < small.dim(); ++i)
        m.action.push_back(big.left_op(inclusion.col(i)));
    return m;
}

Report validate_module(const Algebra& a, const LeftModule& m) {
    Report rep;
    if (m.algebra_dim != a.dim() || m.action.size() != a.dim()) {
        rep.fail("module action shape mismatch");
        return rep;
    }
    if (!m.act(a.unit()).is_identity()) rep.fail("unit does not act as identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action[i] * m.action[j] != m.act(a.basis_product(i, j)))
                rep.fail("action not multiplicative on (" + a.label(i) + ", " + a.label(j) + ")");
    return rep;
}

Matrix trace_form(const Algebra& a) {
    const std::size_t d = a.dim();
    Vec traces(d);
    for (std::size_t k = 0; k < d; ++k) traces[k] = a.left_op(a.basis_element(k)).trace();
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec p = a.basis_product(i, j);
            Rat t(0);
            for (std::size_t k = 0; k < d; ++k)
                if (p[k] != 0) t += p[k] * traces[k];
            g.at(i, j) = t;
        }
    return g;
}

namespace {

bool subspace_is_ideal(const Algebra& a, const Subspace& s) {
    for (const Vec& v : s.basis())
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!s.contains(a.mul(a.basis_element(i), v)) ||
                !s.contains(a.mul(v, a.basis_element(i))))
                return false;
    return true;
}

bool subspace_is_nilpotent(const Algebra& a, const Subspace& s) {
    Subspace power = s;
    for (std::size_t k = 0; k < a.dim() && power.dim() > 0; ++k) {
        std::vector<Vec> prods;
        for (const Vec& u : power.basis())
            for (const Vec& v : s.basis()) prods.push_back(a.mul(u, v));
        power = Subspace::span(a.dim(), prods);
    }
    return power.dim() == 0;
}

}  // namespace

Subspace jacobson_radical(const Algebra& a) {
    const Subspace rad = kernel(trace_form(a));
    // Certificate; a failure here is a bug, not bad input.
    if (!subspace_is_ideal(a, rad))
        throw std::logic_error("radical certificate: kernel of trace form is not an ideal");
    if (!subspace_is_nilpotent(a, rad))
        throw std::logic_error("radical certificate: kernel of trace form is not nilpotent");
    const QuotientAlgebra q = quotient_algebra(a, rad);
    if (rank(trace_form(q.algebra)) != q.algebra.dim())
        throw std::logic_error("radical certificate: quotient trace form is degenerate");
    return rad;
}

bool is_semisimple(const Algebra& a) { return jacobson_radical(a).dim() == 0; }

QuotientAlgebra semisimple_quotient(const Algebra& a) {
    return quotient_algebra(a, jacobson_radical(a));
}

// --- polynomial helpers (coefficients low-to-high) -------------------------

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

Poly make_monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    const Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

// Remainder of u mod v (v nonzero).
Poly poly_mod(Poly u, const Poly& v) {
    trim(u);
    while (u.size() >= v.size() && !u.empty()) {
        const Rat f = u.back() / v.back();
        const std::size_t shift = u.size() - v.size();
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= f * v[i];
        trim(u);
    }
    return u;
}

Poly poly_gcd(Poly u, Poly v) {
    trim(u);
    trim(v);
    while (!v.empty()) {
        Poly r = poly_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(u);
}

Poly poly_div_exact(const Poly& u, const Poly& v) {
    Poly rem = u;
    trim(rem);
    Poly q(rem.size() >= v.size() ? rem.size() - v.size() + 1 : 0, Rat(0));
    while (rem.size() >= v.size() && !rem.empty()) {
        const Rat f = rem.back() / v.back();
        const std::size_t shift = rem.size() - v.size();
        q[shift] = f;
        for (std::size_t i = 0; i < v.size(); ++i) rem[shift + i] -= f * v[i];
        trim(rem);
    }
    if (!rem.empty()) throw std::logic_error("polynomial division was not exact");
    trim(q);
    return q;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly squarefree_part(const Poly& p) {
    const Poly d = derivative(p);
    if (d.empty()) return make_monic(p);
    return make_monic(poly_div_exact(p, poly_gcd(p, d)));
}

std::vector<mpz_class> divisors_of(mpz_class n) {
    // Trial division; any large leftover cofactor is treated as prime, which
    // is enough at desk scale.
    std::vector<std::pair<mpz_class, unsigned>> factors;
    n = abs(n);
    for (mpz_class p = 2; p * p <= n && p < 1000000; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// All rational roots of p (assumed squarefree), ascending.
std::vector<Rat> rational_roots(const Poly& p) {
    Poly q = p;
    trim(q);
    if (q.size() <= 1) return {};
    // Clear denominators.
    mpz_class den_lcm = 1;
    for (const Rat& c : q) {
        mpz_class d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> z;
    for (const Rat& c : q) z.push_back(mpz_class(c * Rat(den_lcm)));
    std::set<Rat> roots;
    if (z.front() == 0) roots.insert(Rat(0));
    // Strip trailing zero constant terms for the divisor search.
    std::size_t lo = 0;
    while (lo < z.size() && z[lo] == 0) ++lo;
    if (lo + 1 < z.size()) {
        for (const mpz_class& num : divisors_of(z[lo]))
            for (const mpz_class& den : divisors_of(z.back()))
                for (int sign : {1, -1}) {
                    Rat cand(sign * num, den);
                    cand.canonicalize();
                    if (poly_eval(p, cand) == 0) roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

// Minimal polynomial of z inside the unital subalgebra with local unit f
// (f z = z f = z assumed).
Poly min_poly_of(const Algebra& a, const Vec& f, const Vec& z) {
    std::vector<Vec> powers{f};
    Vec current = f;
    for (;;) {
        const Matrix m = Matrix::from_cols(a.dim(), powers);
        current = a.mul(current, z);
        if (const auto coeffs = solve(m, current)) {
            Poly p;
            for (const Rat& c : *coeffs) p.push_back(-c);
            p.push_back(Rat(1));
            return p;
        }
        powers.push_back(current);
        if (powers.size() > a.dim() + 1) throw std::logic_error("minimal polynomial overflow");
    }
}

std::size_t isqrt_exact(std::size_t n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : 0;
}

// Splits the idempotent f of the commutative algebra spanned by `center`
// along the spectrum of f*z; returns the refined idempotents.
std::vector<Vec> split_central_idem(const Algebra& s, const Vec& f, const Vec& zb) {
    const Vec z = s.mul(f, zb);
    const Poly p = min_poly_of(s, f, z);
    const Poly sf = squarefree_part(p);
    if (sf.size() != p.size())
        throw std::invalid_argument("central minimal polynomial not squarefree; input not semisimple");
    if (sf.size() <= 2) return {f};
    const std::vector<Rat> roots = rational_roots(sf);
    if (roots.size() + 1 != sf.size())
        throw NotSplitError("central minimal polynomial has an irreducible factor of degree > 1");
    std::vector<Vec> refined;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        // Lagrange idempotent at roots[i].
        Vec e = f;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            Vec factor = s.mul(z, f) - roots[j] * f;
            e = (Rat(1) / (roots[i] - roots[j])) * s.mul(e, factor);
        }
        refined.push_back(std::move(e));
    }
    return refined;
}

Subspace left_multiples(const Algebra& s, const std::vector<Vec>& left_basis, const Vec& x) {
    std::vector<Vec> prods;
    for (const Vec& b : left_basis) prods.push_back(s.mul(b, x));
    return Subspace::span(s.dim(), prods);
}

std::size_t dim_sandwich(const Algebra& s, const Vec& e) {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < s.dim(); ++i)
        prods.push_back(s.mul(e, s.mul(s.basis_element(i), e)));
    return Subspace::span(s.dim(), prods).dim();
}

// Derives a primitive idempotent from a rank-one element x of the block:
// x b x spans a line, and a non-nilpotent point of it rescales to an
// idempotent.
std::optional<Vec> idempotent_from_rank_one(const Algebra& s, const std::vector<Vec>& block_basis,
                                            const Vec& x) {
    for (const Vec& b : block_basis) {
        const Vec z = s.mul(x, s.mul(b, x));
        if (is_zero(z)) continue;
        const Vec zz = s.mul(z, z);
        if (is_zero(zz)) continue;
        std::size_t k = 0;
        while (z[k] == 0) ++k;
        const Rat gamma = zz[k] / z[k];
        if (zz != gamma * z) continue;  // not proportional: x was not rank one
        const Vec e = (Rat(1) / gamma) * z;
        if (s.mul(e, e) == e && dim_sandwich(s, e) == 1) return e;
    }
    return std::nullopt;
}

Vec find_primitive_idempotent(const Algebra& s, const Vec& central, std::size_t n,
                              std::uint64_t seed) {
    std::vector<Vec> block_basis_raw;
    for (std::size_t i = 0; i < s.dim(); ++i)
        block_basis_raw.push_back(s.mul(central, s.basis_element(i)));
    const Subspace block = Subspace::span(s.dim(), block_basis_raw);
    const std::vector<Vec>& bb = block.basis();
    if (n == 1) return central;

    const auto try_candidate = [&](const Vec& x) -> std::optional<Vec> {
        if (is_zero(x)) return std::nullopt;
        if (left_multiples(s, bb, x).dim() != n) return std::nullopt;  // not rank one
        return idempotent_from_rank_one(s, bb, x);
    };

    // Deterministic candidates first: block-cut basis elements, then their
    // pairwise products.
    for (const Vec& x : bb)
        if (auto e = try_candidate(x)) return *e;
    for (const Vec& u : bb)
        for (const Vec& v : bb)
            if (auto e = try_candidate(s.mul(u, v))) return *e;

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 500; ++attempt) {
        Vec x(s.dim(), Rat(0));
        for (const Vec& b : bb) x = x + rat(coeff(rng)) * b;
        // Random elements are generically invertible in the block; products
        // with low-rank deterministic candidates pull the rank down.
        for (const Vec& b : bb) {
            if (auto e = try_candidate(s.mul(x, b))) return *e;
            if (auto e = try_candidate(s.mul(b, x))) return *e;
        }
        if (auto e = try_candidate(x)) return *e;
    }
    throw NotSplitError("primitive idempotent search exhausted; block may be non-split");
}

}  // namespace

WedderburnData wedderburn(const Algebra& s, std::uint64_t seed) {
    const Subspace z = center(s);
    std::vector<Vec> idems{s.unit()};
    for (const Vec& zb : z.basis()) {
        std::vector<Vec> refined;
        for (const Vec& f : idems)
            for (Vec& e : split_central_idem(s, f, zb)) refined.push_back(std::move(e));
        idems = std::move(refined);
    }
    if (idems.size() != z.dim())
        throw NotSplitError("center does not split into rational idempotents");

    WedderburnData data;
    for (std::size_t bi = 0; bi < idems.size(); ++bi) {
        const Vec& c = idems[bi];
        std::vector<Vec> block_span;
        for (std::size_t i = 0; i < s.dim(); ++i) block_span.push_back(s.mul(c, s.basis_element(i)));
        const std::size_t block_dim = Subspace::span(s.dim(), block_span).dim();
        const std::size_t n = isqrt_exact(block_dim);
        if (n == 0) throw NotSplitError("block dimension is not a perfect square");
        WedderburnBlock block{c, block_dim, n, find_primitive_idempotent(s, c, n, seed + bi)};
        data.blocks.push_back(std::move(block));
    }

    // Reconstruction sanity.
    Vec total(s.dim(), Rat(0));
    std::size_t dim_sum = 0;
    for (const auto& b : data.blocks) {
        total = total + b.central_idem;
        dim_sum += b.block_dim;
    }
    if (total != s.unit() || dim_sum != s.dim())
        throw std::logic_error("wedderburn reconstruction failed");
    return data;
}

std::vector<std::size_t> simple_multiplicities(const Algebra& s, const WedderburnData& data,
                                               const LeftModule& m) {
    std::vector<std::size_t> mult;
    std::size_t weighted = 0;
    for (const auto& b : data.blocks) {
        const std::size_t mi = rank(m.act(b.prim_idem));
        mult.push_back(mi);
        weighted += mi * b.n;
    }
    if (weighted != m.dim)
        throw std::logic_error("simple multiplicities do not add up to the module dimension");
    return mult;
}

std::vector<Vec> lift_idempotents(const Algebra& a, const QuotientAlgebra& quot,
                                  const std::vector<Vec>& idems_of_quotient) {
    const auto idempotentize = [&a](Vec e) {
        for (std::size_t it = 0; it <= 2 * a.dim(); ++it) {
            const Vec e2 = a.mul(e, e);
            if (e2 == e) return e;
            // e <- 3e^2 - 2e^3
            e = Rat(3) * e2 - Rat(2) * a.mul(e2, e);
        }
        throw std::logic_error("idempotent lifting did not terminate");
    };

    std::vector<Vec> lifted;
    Vec partial_sum(a.dim(), Rat(0));
    for (const Vec& ebar : idems_of_quotient) {
        Vec e = idempotentize(quot.section * ebar);
        // Orthogonalize against the previously lifted idempotents.
        const Vec complement = a.unit() - partial_sum;
        e = idempotentize(a.mul(complement, a.mul(e, complement)));
        if (quot.projection * e != ebar)
            throw std::logic_error("lifted idempotent has the wrong residue class");
        partial_sum = partial_sum + e;
        lifted.push_back(std::move(e));
    }
    return lifted;
}

AlgebraAnalysis analyze_algebra(const Algebra& a, std::uint64_t seed) {
    AlgebraAnalysis an{jacobson_radical(a), {}, {}, {}, {}, {}};
    an.quotient = quotient_algebra(a, an.radical);
    an.wedderburn_data = wedderburn(an.quotient.algebra, seed);
    std::vector<Vec> bars;
    for (const auto& b : an.wedderburn_data.blocks) bars.push_back(b.prim_idem);
    an.lifted_idems = lift_idempotents(a, an.quotient, bars);
    for (const Vec& e : an.lifted_idems) {
        Subspace carrier(a.dim());
        LeftModule::left_ideal(a, e, &carrier);
        an.cover_dims.push_back(carrier.dim());
    }
    for (const auto& b : an.wedderburn_data.blocks) an.regular_mults.push_back(b.n);
    return an;
}

std::vector<std::size_t> top_multiplicities(const Algebra& a, const AlgebraAnalysis& an,
                                            const LeftModule& m) {
    // J*M
    std::vector<Vec> jm;
    for (const Vec& jv : an.radical.basis()) {
        const Matrix act = m.act(jv);
        for (std::size_t c = 0; c < m.dim; ++c) jm.push_back(act.col(c));
    }
    const VectorQuotient top = vector_quotient(Subspace::span(m.dim, jm));
    std::vector<std::size_t> mult;
    for (std::size_t bi = 0; bi < an.wedderburn_data.blocks.size(); ++bi) {
        const Vec rep = an.lifted_idems[bi];
        mult.push_back(rank(top.projection * m.act(rep) * top.section));
    }
    return mult;
}

bool is_projective(const Algebra& a, const AlgebraAnalysis& an, const LeftModule& m) {
    const std::vector<std::size_t> mult = top_multiplicities(a, an, m);
    std::size_t cover = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) cover += mult[i] * an.cover_dims[i];
    return cover == m.dim;
}

bool is_projective(const Algebra& a, const LeftModule& m) {
    return is_projective(a, analyze_algebra(a), m);
}

bool is_hereditary(const Algebra& a) {
    const AlgebraAnalysis an = analyze_algebra(a);
    if (an.radical.dim() == 0) return true;
    // rad(A) as a left module over A.
    LeftModule rad_mod{a.dim(), an.radical.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix act(an.radical.dim(), an.radical.dim());
        for (std::size_t c = 0; c < an.radical.dim(); ++c) {
            const auto coords = an.radical.coords_of(a.mul(a.basis_element(i), an.radical.basis()[c]));
            if (!coords) throw std::logic_error("radical not closed under left action");
            for (std::size_t r = 0; r < an.radical.dim(); ++r) act.at(r, c) = (*coords)[r];
        }
        rad_mod.action.push_back(std::move(act));
    }
    return is_projective(a, an, rad_mod);
}

std::size_t min_generators(const Algebra& a, const AlgebraAnalysis& an, const LeftModule& m) {
    const std::vector<std::size_t> mult = top_multiplicities(a, an, m);
    std::size_t mu = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        const std::size_t needed = (mult[i] + an.regular_mults[i] - 1) / an.regular_mults[i];
        mu = std::max(mu, needed);
    }
    return mu;
}

std::size_t min_generators(const Algebra& a, const LeftModule& m) {
    return min_generators(a, analyze_algebra(a), m);
}

bool is_basic(const Algebra& a) {
    const AlgebraAnalysis an = analyze_algebra(a);
    return std::all_of(an.wedderburn_data.blocks.begin(), an.wedderburn_data.blocks.end(),
                       [](const WedderburnBlock& b) { return b.n == 1; });
}

}  // namespace crossalg
