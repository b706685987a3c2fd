#pragma once

// Linearized polynomials over F_{q^n}: sums of terms c_i x^(q^i). They form a
// noncommutative ring under addition and composition, with
//   a x^(q^i) o b x^(q^j) = a b^(q^i) x^(q^(i+j)).
// Both one-sided Euclidean divisions exist because leading coefficients are
// invertible. Exponents of the Frobenius are always reduced mod n, since
// x^(q^n) acts as the identity on F_{q^n}.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcodes/gf.hpp"
#include "rankcodes/linalg.hpp"

namespace rankcodes {

class LinearizedPoly {
  public:
    LinearizedPoly() = default;  // the zero polynomial

    static LinearizedPoly from_coeffs(const Field& f, std::vector<FieldElement> coeffs) {
        for (const auto& c : coeffs) f.check(c);
        while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
        LinearizedPoly p;
        p.coeffs_ = std::move(coeffs);
        return p;
    }

    static LinearizedPoly monomial(const Field& f, const FieldElement& c, size_t i) {
        std::vector<FieldElement> cs(i + 1, f.zero());
        cs[i] = c;
        return from_coeffs(f, std::move(cs));
    }

    // x, the identity of the composition ring
    static LinearizedPoly identity(const Field& f) { return monomial(f, f.one(), 0); }

    bool is_zero() const { return coeffs_.empty(); }

    // q-degree: the largest i with c_i != 0, or -1 for the zero polynomial.
    int qdeg() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    FieldElement coeff(const Field& f, size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : f.zero();
    }

    bool operator==(const LinearizedPoly&) const = default;

  private:
    std::vector<FieldElement> coeffs_;
};

inline FieldElement lp_eval(const Field& f, const LinearizedPoly& p, const FieldElement& x) {
    FieldElement acc = f.zero();
    const auto& cs = p.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) acc = f.add(acc, f.mul(cs[i], f.frobenius(x, i)));
    return acc;
}

inline LinearizedPoly lp_add(const Field& f, const LinearizedPoly& a, const LinearizedPoly& b) {
    std::vector<FieldElement> cs(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = f.add(a.coeff(f, i), b.coeff(f, i));
    return LinearizedPoly::from_coeffs(f, std::move(cs));
}

inline LinearizedPoly lp_sub(const Field& f, const LinearizedPoly& a, const LinearizedPoly& b) {
    std::vector<FieldElement> cs(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = f.sub(a.coeff(f, i), b.coeff(f, i));
    return LinearizedPoly::from_coeffs(f, std::move(cs));
}

inline LinearizedPoly lp_scale(const Field& f, const FieldElement& c, const LinearizedPoly& a) {
    std::vector<FieldElement> cs = a.coeffs();
    for (auto& x : cs) x = f.mul(c, x);
    return LinearizedPoly::from_coeffs(f, std::move(cs));
}

// Composition (a o b)(x) = a(b(x)).
inline LinearizedPoly lp_compose(const Field& f, const LinearizedPoly& a, const LinearizedPoly& b) {
    if (a.is_zero() || b.is_zero()) return LinearizedPoly();
    std::vector<FieldElement> cs(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (f.is_zero(a.coeffs()[i])) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            cs[i + j] = f.add(cs[i + j], f.mul(a.coeffs()[i], f.frobenius(b.coeffs()[j], i)));
    }
    return LinearizedPoly::from_coeffs(f, std::move(cs));
}

struct LpDivision {
    LinearizedPoly quotient;
    LinearizedPoly remainder;
};

// Left division: f = g o quotient + remainder with qdeg(remainder) < qdeg(g).
inline LpDivision lp_divide_left(const Field& fld, const LinearizedPoly& f, const LinearizedPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const int d = g.qdeg();
    const uint32_t n = fld.extension_degree();
    std::vector<FieldElement> work = f.coeffs();
    const int m0 = f.qdeg();
    std::vector<FieldElement> quot(static_cast<size_t>(std::max(0, m0 - d + 1)), fld.zero());
    int m = m0;
    const FieldElement gd_inv = fld.inv(g.coeffs()[static_cast<size_t>(d)]);
    while (m >= d) {
        if (!fld.is_zero(work[static_cast<size_t>(m)])) {
            // choose c with g_d * c^(q^d) = leading coefficient of work
            const FieldElement u = fld.mul(work[static_cast<size_t>(m)], gd_inv);
            const FieldElement c = fld.frobenius(u, (n - static_cast<uint32_t>(d) % n) % n);
            quot[static_cast<size_t>(m - d)] = c;
            for (int i = 0; i <= d; ++i) {
                const size_t k = static_cast<size_t>(i + m - d);
                work[k] = fld.sub(work[k],
                                  fld.mul(g.coeffs()[static_cast<size_t>(i)], fld.frobenius(c, static_cast<uint64_t>(i))));
            }
        }
        --m;
    }
    return {LinearizedPoly::from_coeffs(fld, std::move(quot)), LinearizedPoly::from_coeffs(fld, std::move(work))};
}

// Right division: f = quotient o g + remainder with qdeg(remainder) < qdeg(g).
inline LpDivision lp_divide_right(const Field& fld, const LinearizedPoly& f, const LinearizedPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const int d = g.qdeg();
    std::vector<FieldElement> work = f.coeffs();
    const int m0 = f.qdeg();
    std::vector<FieldElement> quot(static_cast<size_t>(std::max(0, m0 - d + 1)), fld.zero());
    int m = m0;
    while (m >= d) {
        if (!fld.is_zero(work[static_cast<size_t>(m)])) {
            // choose c with c * g_d^(q^(m-d)) = leading coefficient of work
            const FieldElement c = fld.div(
                work[static_cast<size_t>(m)],
                fld.frobenius(g.coeffs()[static_cast<size_t>(d)], static_cast<uint64_t>(m - d)));
            quot[static_cast<size_t>(m - d)] = c;
            for (int i = 0; i <= d; ++i) {
                const size_t k = static_cast<size_t>(i + m - d);
                work[k] = fld.sub(
                    work[k],
                    fld.mul(c, fld.frobenius(g.coeffs()[static_cast<size_t>(i)], static_cast<uint64_t>(m - d))));
            }
        }
        --m;
    }
    return {LinearizedPoly::from_coeffs(fld, std::move(quot)), LinearizedPoly::from_coeffs(fld, std::move(work))};
}

// Basis of the root space {v : p(v) = 0}, an F_q-subspace of F_{q^n}.
inline std::vector<FieldElement> lp_kernel(const Field& f, const LinearizedPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("kernel of the zero polynomial is everything");
    const uint32_t n = f.extension_degree();
    // matrix of the F_q-linear map v -> p(v) in the power basis
    detail::Matrix<detail::PrimeFieldOps> m(n, std::vector<uint32_t>(n, 0));
    FieldElement basis_vec = f.one();
    for (uint32_t j = 0; j < n; ++j) {
        const FieldElement image = lp_eval(f, p, basis_vec);
        for (uint32_t row = 0; row < n; ++row) m[row][j] = image.c[row];
        basis_vec = f.mul(basis_vec, f.gen());
    }
    const detail::PrimeFieldOps ops{f.q()};
    const auto null_basis = detail::nullspace(ops, std::move(m));
    std::vector<FieldElement> out;
    out.reserve(null_basis.size());
    for (const auto& v : null_basis) {
        FieldElement e = f.zero();
        e.c.assign(v.begin(), v.end());
        out.push_back(std::move(e));
    }
    return out;
}

// Moore matrix: row j holds the Frobenius orbit (x_j, x_j^q, ..., x_j^(q^(cols-1))).
inline std::vector<std::vector<FieldElement>> moore_matrix(const Field& f,
                                                           const std::vector<FieldElement>& elems,
                                                           size_t cols) {
    std::vector<std::vector<FieldElement>> m(elems.size(), std::vector<FieldElement>(cols, f.zero()));
    for (size_t j = 0; j < elems.size(); ++j)
        for (size_t i = 0; i < cols; ++i) m[j][i] = f.frobenius(elems[j], i);
    return m;
}

// Determinant of the square Moore matrix; nonzero iff elems are F_q-independent.
inline FieldElement moore_determinant(const Field& f, const std::vector<FieldElement>& elems) {
    const detail::ExtFieldOps ops{&f};
    return detail::determinant(ops, moore_matrix(f, elems, elems.size()));
}

// The lowest-degree linearized polynomial vanishing exactly on the span of
// basis, normalized so that the leading coefficient equals the Moore
// determinant of basis. For independent (v_1 .. v_k) the result has q-degree
// k; dependent input is an error.
inline LinearizedPoly subspace_annihilator(const Field& f, const std::vector<FieldElement>& basis) {
    LinearizedPoly h = LinearizedPoly::identity(f);
    for (const auto& v : basis) {
        const FieldElement w = lp_eval(f, h, v);
        if (f.is_zero(w)) throw std::invalid_argument("annihilator basis is F_q-dependent");
        // h <- (x^q - w^(q-1) x) o h
        const FieldElement w_pow = f.div(f.frobenius(w, 1), w);
        std::vector<FieldElement> step(2, f.zero());
        step[0] = f.neg(w_pow);
        step[1] = f.one();
        h = lp_compose(f, LinearizedPoly::from_coeffs(f, std::move(step)), h);
    }
    const FieldElement det = moore_determinant(f, basis);
    return lp_scale(f, det, h);
}

}  // namespace rankcodes
