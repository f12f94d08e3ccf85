#pragma once

#include <random>
#include <vector>

#include "crossalg/algebra.hpp"
#include "crossalg/group.hpp"
#include "crossalg/linalg.hpp"

namespace testutil {

using namespace crossalg;

inline Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

inline Matrix perm_matrix(const std::vector<std::size_t>& image) {
    // Column j is e_{image[j]}.
    Matrix m(image.size(), image.size());
    for (std::size_t j = 0; j < image.size(); ++j) m.at(image[j], j) = 1;
    return m;
}

// x^i <-> y^i on trunc_node(n), basis 1, x..x^{n-1}, y..y^{n-1}.
inline Matrix swap_trunc_node(std::size_t n) {
    std::vector<std::size_t> image(2 * n - 1);
    image[0] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        image[i] = n - 1 + i;
        image[n - 1 + i] = i;
    }
    return perm_matrix(image);
}

// Factor swap on trunc_hered(n) = trunc_poly(n) x trunc_poly(n).
inline Matrix swap_hered(std::size_t n) {
    std::vector<std::size_t> image(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        image[i] = n + i;
        image[n + i] = i;
    }
    return perm_matrix(image);
}

// Conjugation by the 2x2 permutation matrix on mat(2): e11<->e22, e12<->e21.
inline Matrix conj_mat2() { return perm_matrix({3, 2, 1, 0}); }

inline ActionDatum c2_action(const Algebra& a, Matrix sigma) {
    return ActionDatum::trivial_cocycle(a, GroupTable::cyclic(2),
                                        {Matrix::identity(a.dim()), std::move(sigma)});
}

inline ActionDatum with_omega(ActionDatum d, std::size_t f, std::size_t g, Vec value) {
    d.omega[f * d.group.order + g] = std::move(value);
    return d;
}

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rat(rng);
    return m;
}

}  // namespace testutil
