#pragma once

// Twisted Gabidulin codes. A message (f_0 .. f_{k-1}) maps to the polynomial
//     f = f_0 x + f_1 x^q + ... + f_{k-1} x^(q^(k-1)) + eta f_0^(q^r) x^(q^k)
// evaluated on n independent points. The code has minimum rank distance
// n - k + 1 exactly when the norm of eta avoids (-1)^(nk); construction
// enforces that unless explicitly bypassed.
//
// Decoding interpolates (P1, P2) as in the classical case, then recovers the
// twist coefficient f_0 in one of two ways: by reading it off the quotient
// when division succeeds directly, or from a quadratic built out of pairs of
// interpolation solutions. With f_0 known, the remaining coefficients come
// from a classical decode of dimension k - 1 on the conjugated point set.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcodes/gabidulin.hpp"
#include "rankcodes/gf.hpp"
#include "rankcodes/linalg.hpp"
#include "rankcodes/linpoly.hpp"
#include "rankcodes/rank_metric.hpp"

namespace rankcodes {

namespace detail {

// Square root in F_{q^n} for odd q, by Tonelli-Shanks in the cyclic
// multiplicative group. Returns nothing for nonresidues.
inline std::optional<FieldElement> sqrt_odd(const Field& f, const FieldElement& a) {
    if (f.is_zero(a)) return f.zero();
    if (f.order() == UINT64_MAX) throw BudgetError("field too large for square roots");
    const uint64_t m = f.order() - 1;
    if (!(f.pow(a, m / 2) == f.one())) return std::nullopt;
    uint64_t s = m;
    uint32_t e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    // deterministic nonresidue scan
    FieldElement b = f.zero();
    for (uint64_t idx = 1;; ++idx) {
        b = f.element_from_index(idx);
        if (!(f.pow(b, m / 2) == f.one())) break;
    }
    FieldElement x = f.pow(a, (s + 1) / 2);
    FieldElement t = f.pow(a, s);
    FieldElement g = f.pow(b, s);
    uint32_t r = e;
    while (!(t == f.one())) {
        uint32_t i = 0;
        FieldElement t2 = t;
        while (!(t2 == f.one())) {
            t2 = f.mul(t2, t2);
            ++i;
        }
        FieldElement gs = g;
        for (uint32_t j = 0; j + i + 1 < r; ++j) gs = f.mul(gs, gs);
        x = f.mul(x, gs);
        g = f.mul(gs, gs);
        t = f.mul(t, g);
        r = i;
    }
    return x;
}

}  // namespace detail

// All roots of c2 z^2 + c1 z + c0 in F_{q^n}, without duplicates. The
// identically zero polynomial is an error. Odd q goes through the quadratic
// formula with a Tonelli-Shanks square root; q = 2 turns z -> c2 z^2 + c1 z
// into an F_2-linear map and solves the affine system.
inline std::vector<FieldElement> solve_quadratic(const Field& f, const FieldElement& c2,
                                                 const FieldElement& c1, const FieldElement& c0) {
    f.check(c2);
    f.check(c1);
    f.check(c0);
    if (f.is_zero(c2) && f.is_zero(c1) && f.is_zero(c0))
        throw std::invalid_argument("quadratic is identically zero");
    if (f.is_zero(c2)) {
        if (f.is_zero(c1)) return {};
        return {f.neg(f.div(c0, c1))};
    }
    if (f.q() % 2 == 1) {
        const FieldElement disc = f.sub(f.mul(c1, c1), f.mul(f.from_base(4), f.mul(c2, c0)));
        const FieldElement two_c2_inv = f.inv(f.mul(f.from_base(2), c2));
        if (f.is_zero(disc)) return {f.mul(f.neg(c1), two_c2_inv)};
        const auto root = detail::sqrt_odd(f, disc);
        if (!root) return {};
        return {f.mul(f.sub(*root, c1), two_c2_inv), f.mul(f.sub(f.neg(*root), c1), two_c2_inv)};
    }
    // q = 2: solve the affine F_2-linear system c2 z^2 + c1 z = c0
    const uint32_t n = f.extension_degree();
    detail::Matrix<detail::PrimeFieldOps> m(n, std::vector<uint32_t>(n + 1, 0));
    FieldElement basis_vec = f.one();
    for (uint32_t j = 0; j < n; ++j) {
        const FieldElement image =
            f.add(f.mul(c2, f.frobenius(basis_vec, 1)), f.mul(c1, basis_vec));
        for (uint32_t row = 0; row < n; ++row) m[row][j] = image.c[row];
        basis_vec = f.mul(basis_vec, f.gen());
    }
    for (uint32_t row = 0; row < n; ++row) m[row][n] = c0.c[row];
    const detail::PrimeFieldOps ops{f.q()};
    auto work = m;
    const auto pivots = detail::rref(ops, work);
    if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent
    FieldElement particular = f.zero();
    for (size_t i = 0; i < pivots.size(); ++i) particular.c[pivots[i]] = work[i][n];
    // kernel of the homogeneous part
    for (auto& row : m) row.pop_back();
    const auto null_basis = detail::nullspace(ops, std::move(m));
    std::vector<FieldElement> roots{particular};
    for (const auto& v : null_basis) {
        std::vector<FieldElement> extended;
        for (const auto& r : roots) {
            FieldElement shifted = r;
            for (uint32_t i = 0; i < n; ++i) shifted.c[i] = (shifted.c[i] + v[i]) % 2;
            extended.push_back(std::move(shifted));
        }
        for (auto& x : extended) roots.push_back(std::move(x));
    }
    return roots;
}

struct DecodeOptions {
    // Cap on the field order the twist-recovery fallback may scan when the
    // quadratic shortcut does not apply.
    uint64_t field_scan_limit = uint64_t(1) << 20;
};

class TwistedCode {
  public:
    TwistedCode(Field field, int k, FieldElement eta, int r, std::vector<FieldElement> alpha)
        : TwistedCode(Unchecked{}, std::move(field), k, std::move(eta), r, std::move(alpha)) {
        // MRD obstruction: the twist is invalid when the norm of eta equals
        // (-1)^(nk) in F_q. Over q = 2 that value is 1 = N(eta) for every
        // nonzero eta, so only eta = 0 survives.
        const uint32_t n = field_.extension_degree();
        const uint32_t sign =
            (static_cast<uint64_t>(n) * static_cast<uint64_t>(k_) % 2 == 0) ? 1u : field_.q() - 1;
        if (field_.norm(eta_).c[0] == sign)
            throw std::invalid_argument(
                "twist coefficient rejected: its norm equals (-1)^(nk), so the code would not be "
                "maximum rank distance");
    }

    static TwistedCode with_power_basis(Field field, int k, FieldElement eta, int r) {
        std::vector<FieldElement> alpha = power_basis(field);
        return TwistedCode(std::move(field), k, std::move(eta), r, std::move(alpha));
    }

    // Skips the norm obstruction check. Shape checks still apply. Meant for
    // experiments that need deliberately broken codes.
    static TwistedCode unchecked(Field field, int k, FieldElement eta, int r,
                                 std::vector<FieldElement> alpha) {
        return TwistedCode(Unchecked{}, std::move(field), k, std::move(eta), r, std::move(alpha));
    }

    const Field& field() const { return field_; }
    int dimension() const { return k_; }
    int length() const { return static_cast<int>(alpha_.size()); }
    const FieldElement& eta() const { return eta_; }
    int twist_exponent() const { return r_; }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    bool is_classical() const { return field_.is_zero(eta_); }
    int max_error_rank() const { return (length() - k_) / 2; }

    LinearizedPoly message_poly(const Message& m) const {
        if (static_cast<int>(m.size()) != k_)
            throw std::invalid_argument("message length must equal the dimension");
        std::vector<FieldElement> cs(static_cast<size_t>(k_) + 1, field_.zero());
        for (int i = 0; i < k_; ++i) cs[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
        cs[static_cast<size_t>(k_)] = twist_coeff(m[0]);
        return LinearizedPoly::from_coeffs(field_, std::move(cs));
    }

    Word encode(const Message& m) const {
        const LinearizedPoly f = message_poly(m);
        Word w(alpha_.size());
        for (size_t i = 0; i < alpha_.size(); ++i) w[i] = lp_eval(field_, f, alpha_[i]);
        return w;
    }

    std::optional<Message> decode(const Word& received, const DecodeOptions& opts = {}) const {
        if (received.size() != alpha_.size())
            throw std::invalid_argument("received word length must match the code length");
        for (const auto& x : received) field_.check(x);
        if (is_classical()) {
            return GabidulinCode(field_, k_, alpha_).decode(received);
        }
        // inner classical code used once f_0 is pinned down: dimension k - 1
        // on the conjugated evaluation points
        std::optional<GabidulinCode> inner;
        if (k_ >= 2) {
            std::vector<FieldElement> alpha_q(alpha_.size());
            for (size_t i = 0; i < alpha_.size(); ++i) alpha_q[i] = field_.frobenius(alpha_[i], 1);
            inner.emplace(field_, k_ - 1, std::move(alpha_q));
        }
        for (int t = max_error_rank(); t >= 0; --t) {
            const auto basis = interpolation_solution_basis(field_, alpha_, received, t, k_);
            // direct divisions first
            for (const auto& [p1, p2] : basis) {
                if (auto m = try_division(p1, p2, received, t)) return m;
            }
            // pairs of solutions constrain f_0
            for (const FieldElement& f0 : twist_candidates(basis, t, opts)) {
                if (auto m = finish_with_twist(f0, received, t, inner)) return m;
            }
        }
        return std::nullopt;
    }

  private:
    struct Unchecked {};

    TwistedCode(Unchecked, Field field, int k, FieldElement eta, int r,
                std::vector<FieldElement> alpha)
        : field_(std::move(field)), k_(k), eta_(std::move(eta)), r_(r), alpha_(std::move(alpha)) {
        const int n = static_cast<int>(field_.extension_degree());
        if (static_cast<int>(alpha_.size()) != n)
            throw std::invalid_argument("evaluation points must number the extension degree");
        if (k_ < 1 || k_ >= n) throw std::invalid_argument("dimension must lie in [1, n-1]");
        if (r_ < 0 || r_ >= n) throw std::invalid_argument("twist exponent must lie in [0, n-1]");
        field_.check(eta_);
        for (const auto& a : alpha_) field_.check(a);
        if (field_.is_zero(moore_determinant(field_, alpha_)))
            throw std::invalid_argument("evaluation points must be F_q-independent");
    }

    FieldElement twist_coeff(const FieldElement& f0) const {
        return field_.mul(eta_, field_.frobenius(f0, static_cast<uint64_t>(r_)));
    }

    std::optional<Message> try_division(const LinearizedPoly& p1, const LinearizedPoly& p2,
                                        const Word& received, int t) const {
        if (p2.is_zero()) return std::nullopt;
        const LpDivision d = lp_divide_left(field_, p1, p2);
        if (!d.remainder.is_zero() || d.quotient.qdeg() > k_) return std::nullopt;
        const FieldElement f0 = d.quotient.coeff(field_, 0);
        if (!(d.quotient.coeff(field_, static_cast<size_t>(k_)) == twist_coeff(f0)))
            return std::nullopt;
        Message m(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) m[static_cast<size_t>(i)] = d.quotient.coeff(field_, static_cast<size_t>(i));
        if (rank_distance(field_, encode(m), received) > t) return std::nullopt;
        return m;
    }

    // Candidate values of f_0 from cross-multiplied pairs of interpolation
    // solutions. Writing A0, Atop, B0, Btop for the constant and leading
    // coefficients of a solution pair (P1, P2), every solution satisfies
    //   A0 - B0 f_0 = c h_0   and   Atop - Btop etat f_0^(q^s) = c h_top
    // for a shared polynomial h, where etat = eta^(q^(n-t-k)) and
    // s = (r + n - t - k) mod n. Cross-multiplying two solutions eliminates
    // h. When s = 0 that is a quadratic in f_0; otherwise every field
    // element is checked against the identity (guarded by opts).
    std::vector<FieldElement> twist_candidates(
        const std::vector<std::pair<LinearizedPoly, LinearizedPoly>>& basis, int t,
        const DecodeOptions& opts) const {
        const int n = length();
        const size_t top1 = static_cast<size_t>(n - t);
        const size_t top2 = static_cast<size_t>(n - t - k_);
        const uint32_t s = static_cast<uint32_t>((r_ + n - t - k_) % n);
        const FieldElement etat =
            field_.frobenius(eta_, static_cast<uint64_t>((n - t - k_) % n));

        std::vector<FieldElement> candidates;
        bool have_candidates = false;
        for (size_t u = 0; u < basis.size() && !(have_candidates && candidates.empty()); ++u) {
            for (size_t v = u + 1; v < basis.size(); ++v) {
                const FieldElement a0u = basis[u].first.coeff(field_, 0);
                const FieldElement atopu = basis[u].first.coeff(field_, top1);
                const FieldElement b0u = basis[u].second.coeff(field_, 0);
                const FieldElement btopu = basis[u].second.coeff(field_, top2);
                const FieldElement a0v = basis[v].first.coeff(field_, 0);
                const FieldElement atopv = basis[v].first.coeff(field_, top1);
                const FieldElement b0v = basis[v].second.coeff(field_, 0);
                const FieldElement btopv = basis[v].second.coeff(field_, top2);

                std::vector<FieldElement> roots;
                bool degenerate = false;
                if (s == 0) {
                    const FieldElement c2 = field_.mul(
                        etat, field_.sub(field_.mul(b0u, btopv), field_.mul(b0v, btopu)));
                    const FieldElement c1 = field_.add(
                        field_.sub(field_.mul(b0v, atopu),
                                   field_.add(field_.mul(field_.mul(a0u, btopv), etat),
                                              field_.mul(b0u, atopv))),
                        field_.mul(field_.mul(a0v, btopu), etat));
                    const FieldElement c0 =
                        field_.sub(field_.mul(a0u, atopv), field_.mul(a0v, atopu));
                    if (field_.is_zero(c2) && field_.is_zero(c1) && field_.is_zero(c0)) {
                        degenerate = true;
                    } else {
                        roots = solve_quadratic(field_, c2, c1, c0);
                    }
                } else {
                    if (field_.order() > opts.field_scan_limit)
                        throw BudgetError(
                            "twist recovery would scan a field larger than the configured limit");
                    for (const FieldElement& z : field_.elements(true)) {
                        const FieldElement fz = field_.frobenius(z, s);
                        const FieldElement lhs =
                            field_.mul(field_.sub(a0u, field_.mul(b0u, z)),
                                       field_.sub(atopv, field_.mul(field_.mul(btopv, etat), fz)));
                        const FieldElement rhs =
                            field_.mul(field_.sub(a0v, field_.mul(b0v, z)),
                                       field_.sub(atopu, field_.mul(field_.mul(btopu, etat), fz)));
                        if (lhs == rhs) roots.push_back(z);
                    }
                    degenerate = roots.size() == field_.order();
                }
                if (degenerate) continue;
                if (!have_candidates) {
                    candidates = std::move(roots);
                    have_candidates = true;
                } else {
                    // the true f_0 is a root for every informative pair
                    std::vector<FieldElement> kept;
                    for (const auto& c : candidates)
                        for (const auto& r : roots)
                            if (c == r) {
                                kept.push_back(c);
                                break;
                            }
                    candidates = std::move(kept);
                }
                if (have_candidates && candidates.empty()) break;
            }
        }
        // dedupe, preserving order
        std::vector<FieldElement> unique;
        for (const auto& c : candidates) {
            bool seen = false;
            for (const auto& u2 : unique)
                if (u2 == c) {
                    seen = true;
                    break;
                }
            if (!seen) unique.push_back(c);
        }
        return unique;
    }

    // Step with known twist coefficient: subtract the f_0 terms and decode
    // what remains as a dimension k-1 classical code on conjugated points.
    std::optional<Message> finish_with_twist(const FieldElement& f0, const Word& received, int t,
                                             const std::optional<GabidulinCode>& inner) const {
        const FieldElement tw = twist_coeff(f0);
        Word stripped(received.size());
        for (size_t j = 0; j < received.size(); ++j) {
            FieldElement used = field_.mul(f0, alpha_[j]);
            used = field_.add(used,
                              field_.mul(tw, field_.frobenius(alpha_[j], static_cast<uint64_t>(k_))));
            stripped[j] = field_.sub(received[j], used);
        }
        Message m(static_cast<size_t>(k_), field_.zero());
        m[0] = f0;
        if (k_ == 1) {
            if (rank_norm(field_, stripped) > t) return std::nullopt;
            return m;
        }
        const auto inner_m = inner->decode(stripped);
        if (!inner_m) return std::nullopt;
        for (int i = 1; i < k_; ++i) m[static_cast<size_t>(i)] = (*inner_m)[static_cast<size_t>(i - 1)];
        if (rank_distance(field_, encode(m), received) > t) return std::nullopt;
        return m;
    }

    Field field_;
    int k_;
    FieldElement eta_;
    int r_;
    std::vector<FieldElement> alpha_;
};

// The interpolation system of the twisted decoder; exposed for inspection.
inline InterpolationSystem build_interpolation_system(const TwistedCode& code, const Word& received,
                                                      int t) {
    return build_interpolation_system(code.field(), code.alpha(), received, t, code.dimension());
}

inline std::vector<std::pair<LinearizedPoly, LinearizedPoly>> interpolation_solutions(
    const TwistedCode& code, const Word& received, int t) {
    return interpolation_solution_basis(code.field(), code.alpha(), received, t, code.dimension());
}

}  // namespace rankcodes
