#pragma once

// The rank metric on words over F_{q^n}: a word (w_1 .. w_m) expands to an
// n x m matrix over F_q (column j holds the coordinates of w_j), and its rank
// norm is the rank of that matrix. Rank distance is the norm of the
// difference.

#include <stdexcept>
#include <vector>

#include "rankcodes/gf.hpp"
#include "rankcodes/linalg.hpp"

namespace rankcodes {

using Word = std::vector<FieldElement>;

inline int rank_norm(const Field& f, const Word& w) {
    if (w.empty()) return 0;
    const uint32_t n = f.extension_degree();
    detail::Matrix<detail::PrimeFieldOps> m(n, std::vector<uint32_t>(w.size(), 0));
    for (size_t j = 0; j < w.size(); ++j) {
        f.check(w[j]);
        for (uint32_t row = 0; row < n; ++row) m[row][j] = w[j].c[row];
    }
    const detail::PrimeFieldOps ops{f.q()};
    return static_cast<int>(detail::rank(ops, std::move(m)));
}

inline int rank_distance(const Field& f, const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rank distance needs words of equal length");
    Word diff(a.size());
    for (size_t i = 0; i < a.size(); ++i) diff[i] = f.sub(a[i], b[i]);
    return rank_norm(f, diff);
}

// A uniformly chosen word of length n with rank norm exactly t: pick t
// F_q-independent elements u_1..u_t of F_{q^n} and a rank-t t x n matrix M
// over F_q, and set e_j = sum_i u_i M[i][j]. Both factors are redrawn until
// they have full rank, so the result always has norm t.
inline Word random_error(const Field& f, int t, Rng& rng) {
    const int n = static_cast<int>(f.extension_degree());
    if (t < 0 || t > n) throw std::invalid_argument("error rank must lie in [0, n]");
    Word e(static_cast<size_t>(n), f.zero());
    if (t == 0) return e;

    const detail::PrimeFieldOps ops{f.q()};
    std::vector<FieldElement> u;
    for (;;) {
        u.clear();
        for (int i = 0; i < t; ++i) u.push_back(f.random_element(rng));
        detail::Matrix<detail::PrimeFieldOps> m(static_cast<size_t>(t),
                                                std::vector<uint32_t>(f.extension_degree(), 0));
        for (int i = 0; i < t; ++i)
            for (uint32_t col = 0; col < f.extension_degree(); ++col) m[static_cast<size_t>(i)][col] = u[static_cast<size_t>(i)].c[col];
        if (detail::rank(ops, std::move(m)) == static_cast<size_t>(t)) break;
    }
    detail::Matrix<detail::PrimeFieldOps> coords;
    for (;;) {
        coords.assign(static_cast<size_t>(t), std::vector<uint32_t>(static_cast<size_t>(n), 0));
        for (auto& row : coords)
            for (auto& x : row) x = static_cast<uint32_t>(rng.below(f.q()));
        if (detail::rank(ops, coords) == static_cast<size_t>(t)) break;
    }
    for (int j = 0; j < n; ++j) {
        FieldElement acc = f.zero();
        for (int i = 0; i < t; ++i) {
            FieldElement scaled = u[static_cast<size_t>(i)];
            for (auto& c : scaled.c)
                c = static_cast<uint32_t>(static_cast<uint64_t>(c) * coords[static_cast<size_t>(i)][static_cast<size_t>(j)] % f.q());
            acc = f.add(acc, scaled);
        }
        e[static_cast<size_t>(j)] = acc;
    }
    return e;
}

}  // namespace rankcodes
