#pragma once

// Gaussian elimination over F_q and over F_{q^n}, shared through a small
// operations trait. Deterministic: pivots are chosen as the first nonzero
// entry scanning down, and reduced row echelon form is fully normalized, so
// nullspace bases depend only on the input matrix.

#include <cstdint>
#include <vector>

#include "rankcodes/gf.hpp"

namespace rankcodes::detail {

struct PrimeFieldOps {
    using Elem = uint32_t;
    uint32_t q;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % q; }
    Elem sub(Elem a, Elem b) const { return (a + q - b) % q; }
    Elem neg(Elem a) const { return (q - a) % q; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<uint64_t>(a) * b % q); }
    Elem inv(Elem a) const { return scalar_inv_mod(a, q); }
};

struct ExtFieldOps {
    using Elem = FieldElement;
    const Field* f;
    Elem zero() const { return f->zero(); }
    Elem one() const { return f->one(); }
    bool is_zero(const Elem& a) const { return f->is_zero(a); }
    Elem add(const Elem& a, const Elem& b) const { return f->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return f->sub(a, b); }
    Elem neg(const Elem& a) const { return f->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return f->mul(a, b); }
    Elem inv(const Elem& a) const { return f->inv(a); }
};

template <class Ops>
using Matrix = std::vector<std::vector<typename Ops::Elem>>;

// In-place reduced row echelon form; returns the pivot columns in order.
template <class Ops>
std::vector<size_t> rref(const Ops& ops, Matrix<Ops>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && ops.is_zero(m[sel][col])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const auto piv_inv = ops.inv(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = ops.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || ops.is_zero(m[i][col])) continue;
            const auto factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = ops.sub(m[i][j], ops.mul(factor, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
size_t rank(const Ops& ops, Matrix<Ops> m) {
    return rref(ops, m).size();
}

// Basis of the right nullspace of m, one vector per free column, in column
// order. Each basis vector has a 1 in its free column.
template <class Ops>
Matrix<Ops> nullspace(const Ops& ops, Matrix<Ops> m) {
    Matrix<Ops> basis;
    if (m.empty()) return basis;
    const size_t cols = m[0].size();
    const std::vector<size_t> pivots = rref(ops, m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<typename Ops::Elem> v(cols, ops.zero());
        v[fc] = ops.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ops.neg(m[i][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class Ops>
typename Ops::Elem determinant(const Ops& ops, Matrix<Ops> m) {
    const size_t n = m.size();
    if (n == 0) return ops.one();
    bool negate = false;
    auto det = ops.one();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && ops.is_zero(m[sel][col])) ++sel;
        if (sel == n) return ops.zero();
        if (sel != col) {
            std::swap(m[sel], m[col]);
            negate = !negate;
        }
        det = ops.mul(det, m[col][col]);
        const auto piv_inv = ops.inv(m[col][col]);
        for (size_t i = col + 1; i < n; ++i) {
            if (ops.is_zero(m[i][col])) continue;
            const auto factor = ops.mul(m[i][col], piv_inv);
            for (size_t j = col; j < n; ++j) m[i][j] = ops.sub(m[i][j], ops.mul(factor, m[col][j]));
        }
    }
    return negate ? ops.neg(det) : det;
}

}  // namespace rankcodes::detail
