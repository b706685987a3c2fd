#pragma once

// Exact arithmetic in F_q (q prime) and in the extension F_{q^n}.
//
// An extension element is a length-n coefficient vector over F_q: c[i] is the
// coefficient of beta^i, where beta is the residue class of x modulo a monic
// irreducible polynomial of degree n.  All operations are exact; nothing here
// is probabilistic except Rng, which wraps a seeded mt19937_64.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rankcodes/errors.hpp"

namespace rankcodes {

struct FieldElement {
    std::vector<uint32_t> c;  // little-endian: c[i] multiplies beta^i
    bool operator==(const FieldElement&) const = default;
};

// Deterministic random source. A single 64-bit seed fixes the whole stream;
// draws below a bound use rejection sampling, so they are exactly uniform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const uint64_t x = eng_();
            if (x >= threshold) return x % bound;
        }
    }

    static constexpr const char* kName = "mt19937_64 + rejection sampling";

  private:
    std::mt19937_64 eng_;
};

namespace detail {

inline bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline uint32_t scalar_inv_mod(uint32_t a, uint32_t q) {
    // Extended Euclid on integers; q prime, a in [1, q).
    int64_t old_r = q, r = a, old_t = 0, t = 1;
    while (r != 0) {
        const int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_t, t) = std::make_pair(t, old_t - quot * t);
    }
    int64_t res = old_t % q;
    if (res < 0) res += q;
    return static_cast<uint32_t>(res);
}

// Dense little-endian polynomials over F_q, used only for modulus handling.
using Poly = std::vector<uint32_t>;

inline int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

inline void poly_trim(Poly& p) { p.resize(static_cast<size_t>(poly_deg(p) + 1)); }

inline Poly poly_mul(const Poly& a, const Poly& b, uint32_t q) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    Poly out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i] % q);
    poly_trim(out);
    return out;
}

// Remainder of a modulo monic m.
inline Poly poly_rem(Poly a, const Poly& m, uint32_t q) {
    const int dm = poly_deg(m);
    for (int i = poly_deg(a); i >= dm; --i) {
        const uint32_t c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            const size_t k = static_cast<size_t>(i - dm + j);
            a[k] = static_cast<uint32_t>((a[k] + static_cast<uint64_t>(c) * (q - m[static_cast<size_t>(j)] % q)) % q);
        }
    }
    poly_trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t q) {
    while (poly_deg(b) >= 0) {
        Poly r = b;
        // make b monic before reducing, so poly_rem's monic assumption holds
        const uint32_t lead = b[static_cast<size_t>(poly_deg(b))];
        if (lead != 1) {
            const uint32_t inv = scalar_inv_mod(lead, q);
            for (auto& x : r) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * inv % q);
        }
        Poly rem = poly_rem(std::move(a), r, q);
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t q) {
    return poly_rem(poly_mul(a, b, q), m, q);
}

// x^q mod m, by square and multiply on the exponent q.
inline Poly poly_xq_mod(const Poly& m, uint32_t q) {
    Poly result{1};
    Poly base{0, 1};
    uint32_t e = q;
    while (e > 0) {
        if (e & 1u) result = poly_mulmod(result, base, m, q);
        base = poly_mulmod(base, base, m, q);
        e >>= 1;
    }
    return result;
}

// g(s) mod m for polynomials g, s: Horner on coefficients of g.
inline Poly poly_compose_mod(const Poly& g, const Poly& s, const Poly& m, uint32_t q) {
    Poly acc;
    for (int i = poly_deg(g); i >= 0; --i) {
        acc = poly_mulmod(acc, s, m, q);
        const uint32_t c = g[static_cast<size_t>(i)];
        if (c != 0) {
            if (acc.empty()) acc.resize(1, 0);
            acc[0] = (acc[0] + c) % q;
        }
    }
    return acc;
}

inline std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Rabin's test: monic f of degree n is irreducible over F_q iff
// x^(q^n) == x mod f and gcd(x^(q^(n/p)) - x, f) = 1 for every prime p | n.
inline bool is_irreducible(const Poly& f, uint32_t q) {
    const int n = poly_deg(f);
    if (n < 1) return false;
    if (f[static_cast<size_t>(n)] != 1) return false;
    const Poly xq = poly_xq_mod(f, q);
    std::vector<Poly> frob_powers(static_cast<size_t>(n) + 1);
    frob_powers[0] = Poly{0, 1};  // x
    for (int i = 1; i <= n; ++i)
        frob_powers[static_cast<size_t>(i)] = poly_compose_mod(frob_powers[static_cast<size_t>(i - 1)], xq, f, q);
    // x^(q^n) - x must vanish mod f
    Poly top = frob_powers[static_cast<size_t>(n)];
    if (top.size() < 2) top.resize(2, 0);
    top[1] = (top[1] + q - 1) % q;
    poly_trim(top);
    if (poly_deg(top) >= 0) return false;
    for (uint32_t p : prime_factors(static_cast<uint32_t>(n))) {
        Poly g = frob_powers[static_cast<size_t>(n) / p];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + q - 1) % q;
        poly_trim(g);
        Poly d = poly_gcd(f, g, q);
        if (poly_deg(d) != 0) return false;
    }
    return true;
}

}  // namespace detail

// F_{q^n} with a fixed monic irreducible modulus. Construction precomputes the
// n Frobenius maps as matrices over F_q, so frobenius() is a matrix-vector
// product rather than a pow.
class Field {
  public:
    static constexpr uint64_t kEnumerationGuard = uint64_t(1) << 24;

    Field(uint32_t q, uint32_t n, std::vector<uint32_t> modulus) { init(q, n, std::move(modulus)); }

    // Uses the default modulus: the monic irreducible of degree n whose
    // non-leading coefficient vector (c_0, ..., c_{n-1}) encodes the smallest
    // integer sum(c_i * q^i).
    Field(uint32_t q, uint32_t n) { init(q, n, default_modulus(q, n)); }

    static std::vector<uint32_t> default_modulus(uint32_t q, uint32_t n) {
        check_params(q, n);
        // The count of monic irreducibles of degree n is ~ q^n / n, so the
        // smallest one is found after a short scan.
        const uint64_t cap = uint64_t(1) << 26;
        for (uint64_t v = 0; v < cap; ++v) {
            std::vector<uint32_t> mod(n + 1, 0);
            uint64_t rest = v;
            for (uint32_t i = 0; i < n && rest > 0; ++i) {
                mod[i] = static_cast<uint32_t>(rest % q);
                rest /= q;
            }
            if (rest > 0) break;  // exhausted all degree-n candidates
            mod[n] = 1;
            if (detail::is_irreducible(mod, q)) return mod;
        }
        throw std::invalid_argument("no irreducible modulus found");
    }

    uint32_t q() const { return q_; }
    uint32_t extension_degree() const { return n_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // q^n, saturated to UINT64_MAX on overflow.
    uint64_t order() const { return order_; }

    bool operator==(const Field& other) const {
        return q_ == other.q_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    FieldElement zero() const { return FieldElement{std::vector<uint32_t>(n_, 0)}; }

    FieldElement one() const { return from_base(1); }

    // beta, the residue class of x.
    FieldElement gen() const {
        FieldElement e = zero();
        if (n_ > 1) e.c[1] = 1;
        return e;
    }

    FieldElement from_base(uint32_t v) const {
        FieldElement e = zero();
        e.c[0] = v % q_;
        return e;
    }

    bool is_zero(const FieldElement& a) const {
        check(a);
        return std::all_of(a.c.begin(), a.c.end(), [](uint32_t x) { return x == 0; });
    }

    bool in_base_field(const FieldElement& a) const {
        check(a);
        return std::all_of(a.c.begin() + 1, a.c.end(), [](uint32_t x) { return x == 0; });
    }

    void check(const FieldElement& a) const {
        if (a.c.size() != n_) throw std::invalid_argument("element has wrong coordinate length");
        for (uint32_t x : a.c)
            if (x >= q_) throw std::invalid_argument("element coordinate out of range");
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        FieldElement r = a;
        for (uint32_t i = 0; i < n_; ++i) r.c[i] = (r.c[i] + b.c[i]) % q_;
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        FieldElement r = a;
        for (uint32_t i = 0; i < n_; ++i) r.c[i] = (r.c[i] + q_ - b.c[i]) % q_;
        return r;
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        std::vector<uint64_t> acc(2 * n_ - 1, 0);
        for (uint32_t i = 0; i < n_; ++i) {
            if (a.c[i] == 0) continue;
            for (uint32_t j = 0; j < n_; ++j) acc[i + j] += static_cast<uint64_t>(a.c[i]) * b.c[j];
        }
        // fold down by the monic modulus: beta^n = -(m_0 + ... + m_{n-1} beta^{n-1})
        for (uint32_t i = 2 * n_ - 2; i >= n_; --i) {
            const uint64_t c = acc[i] % q_;
            if (c == 0) continue;
            for (uint32_t j = 0; j < n_; ++j) acc[i - n_ + j] += c * (q_ - modulus_[j] % q_);
        }
        FieldElement r = zero();
        for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint32_t>(acc[i] % q_);
        return r;
    }

    FieldElement inv(const FieldElement& a) const {
        check(a);
        if (is_zero(a)) throw std::invalid_argument("zero has no inverse");
        // extended Euclid in F_q[x] against the modulus
        detail::Poly old_r(modulus_), r(a.c.begin(), a.c.end());
        detail::poly_trim(r);
        detail::Poly old_t, t{1};
        while (detail::poly_deg(r) >= 0) {
            // divide old_r by r
            detail::Poly quot, rem = old_r;
            const int dr = detail::poly_deg(r);
            const uint32_t lead_inv = detail::scalar_inv_mod(r[static_cast<size_t>(dr)], q_);
            quot.resize(static_cast<size_t>(std::max(0, detail::poly_deg(rem) - dr + 1)), 0);
            for (int i = detail::poly_deg(rem); i >= dr; --i) {
                const uint32_t c =
                    static_cast<uint32_t>(static_cast<uint64_t>(rem[static_cast<size_t>(i)]) * lead_inv % q_);
                if (c == 0) continue;
                quot[static_cast<size_t>(i - dr)] = c;
                for (int j = 0; j <= dr; ++j) {
                    const size_t k = static_cast<size_t>(i - dr + j);
                    rem[k] = static_cast<uint32_t>(
                        (rem[k] + static_cast<uint64_t>(c) * (q_ - r[static_cast<size_t>(j)] % q_)) % q_);
                }
            }
            detail::poly_trim(rem);
            detail::Poly qt = detail::poly_mul(quot, t, q_);
            detail::Poly new_t = old_t;
            new_t.resize(std::max(new_t.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) new_t[i] = (new_t[i] + q_ - qt[i]) % q_;
            detail::poly_trim(new_t);
            old_r = std::move(r);
            r = std::move(rem);
            old_t = std::move(t);
            t = std::move(new_t);
        }
        // old_r is a nonzero constant because the modulus is irreducible
        const uint32_t c_inv = detail::scalar_inv_mod(old_r[0], q_);
        FieldElement out = zero();
        for (size_t i = 0; i < old_t.size(); ++i)
            out.c[i] = static_cast<uint32_t>(static_cast<uint64_t>(old_t[i]) * c_inv % q_);
        return out;
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

    FieldElement pow(const FieldElement& a, uint64_t e) const {
        check(a);
        FieldElement result = one(), base = a;
        while (e > 0) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    // a^(q^i); i is reduced mod n.
    FieldElement frobenius(const FieldElement& a, uint64_t i) const {
        check(a);
        const uint32_t k = static_cast<uint32_t>(i % n_);
        if (k == 0) return a;
        const auto& m = frob_[k];
        FieldElement r = zero();
        for (uint32_t row = 0; row < n_; ++row) {
            uint64_t acc = 0;
            for (uint32_t col = 0; col < n_; ++col) acc += static_cast<uint64_t>(m[row * n_ + col]) * a.c[col];
            r.c[row] = static_cast<uint32_t>(acc % q_);
        }
        return r;
    }

    // Norm down to F_q: product of all n conjugates. The result always lies
    // in the base field.
    FieldElement norm(const FieldElement& a) const {
        check(a);
        FieldElement acc = a, result = a;
        for (uint32_t i = 1; i < n_; ++i) {
            acc = frobenius(acc, 1);
            result = mul(result, acc);
        }
        return result;
    }

    FieldElement element_from_index(uint64_t idx) const {
        FieldElement e = zero();
        for (uint32_t i = 0; i < n_; ++i) {
            e.c[i] = static_cast<uint32_t>(idx % q_);
            idx /= q_;
        }
        if (idx != 0) throw std::invalid_argument("element index out of range");
        return e;
    }

    uint64_t index_of(const FieldElement& a) const {
        check(a);
        if (order_ == UINT64_MAX) throw BudgetError("field too large to index");
        uint64_t idx = 0;
        for (uint32_t i = n_; i-- > 0;) idx = idx * q_ + a.c[i];
        return idx;
    }

    FieldElement random_element(Rng& rng) const {
        FieldElement e = zero();
        for (uint32_t i = 0; i < n_; ++i) e.c[i] = static_cast<uint32_t>(rng.below(q_));
        return e;
    }

    FieldElement random_nonzero(Rng& rng) const {
        for (;;) {
            FieldElement e = random_element(rng);
            if (!is_zero(e)) return e;
        }
    }

    class ElementRange {
      public:
        class Iterator {
          public:
            Iterator(const Field* f, uint64_t i) : field_(f), i_(i) {}
            FieldElement operator*() const { return field_->element_from_index(i_); }
            Iterator& operator++() {
                ++i_;
                return *this;
            }
            bool operator!=(const Iterator& o) const { return i_ != o.i_; }

          private:
            const Field* field_;
            uint64_t i_;
        };
        ElementRange(const Field* f, uint64_t count) : field_(f), count_(count) {}
        Iterator begin() const { return Iterator(field_, 0); }
        Iterator end() const { return Iterator(field_, count_); }
        uint64_t size() const { return count_; }

      private:
        const Field* field_;
        uint64_t count_;
    };

    // All q^n elements in index order. Guarded: fields above 2^24 elements
    // refuse to enumerate unless force is set.
    ElementRange elements(bool force = false) const {
        if (!force && order_ > kEnumerationGuard)
            throw BudgetError("refusing to enumerate a field of order above 2^24 (pass force to override)");
        return ElementRange(this, order_);
    }

  private:
    static void check_params(uint32_t q, uint32_t n) {
        if (!detail::is_prime_u32(q)) throw std::invalid_argument("q must be prime");
        if (q >= (1u << 16)) throw std::invalid_argument("q must be below 2^16");
        if (n < 2) throw std::invalid_argument("extension degree must be at least 2");
    }

    void init(uint32_t q, uint32_t n, std::vector<uint32_t> modulus) {
        check_params(q, n);
        if (modulus.size() != static_cast<size_t>(n) + 1)
            throw std::invalid_argument("modulus must have degree n");
        for (uint32_t c : modulus)
            if (c >= q) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus[n] != 1) throw std::invalid_argument("modulus must be monic");
        if (!detail::is_irreducible(modulus, q)) throw std::invalid_argument("modulus must be irreducible");
        q_ = q;
        n_ = n;
        modulus_ = std::move(modulus);

        order_ = 1;
        for (uint32_t i = 0; i < n_; ++i) {
            if (order_ > UINT64_MAX / q_) {
                order_ = UINT64_MAX;
                break;
            }
            order_ *= q_;
        }

        build_frobenius_tables();
    }

    void build_frobenius_tables() {
        frob_.assign(n_, std::vector<uint32_t>(static_cast<size_t>(n_) * n_, 0));
        // identity map
        for (uint32_t j = 0; j < n_; ++j) frob_[0][j * n_ + j] = 1;
        // columns of frob_[1]: (beta^j)^q = (beta^q)^j
        FieldElement beta_q = pow(gen(), q_);
        FieldElement col = one();
        for (uint32_t j = 0; j < n_; ++j) {
            for (uint32_t row = 0; row < n_; ++row) frob_[1][row * n_ + j] = col.c[row];
            col = mul(col, beta_q);
        }
        // frob_[i] = frob_[1] * frob_[i-1] as matrices over F_q
        for (uint32_t i = 2; i < n_; ++i) {
            for (uint32_t row = 0; row < n_; ++row) {
                for (uint32_t j = 0; j < n_; ++j) {
                    uint64_t acc = 0;
                    for (uint32_t m = 0; m < n_; ++m)
                        acc += static_cast<uint64_t>(frob_[1][row * n_ + m]) * frob_[i - 1][m * n_ + j];
                    frob_[i][row * n_ + j] = static_cast<uint32_t>(acc % q_);
                }
            }
        }
    }

    uint32_t q_ = 0;
    uint32_t n_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<std::vector<uint32_t>> frob_;
};

// (1, beta, beta^2, ..., beta^(n-1)): the default evaluation-point basis.
inline std::vector<FieldElement> power_basis(const Field& f) {
    std::vector<FieldElement> basis;
    FieldElement a = f.one();
    for (uint32_t i = 0; i < f.extension_degree(); ++i) {
        basis.push_back(a);
        a = f.mul(a, f.gen());
    }
    return basis;
}

}  // namespace rankcodes
