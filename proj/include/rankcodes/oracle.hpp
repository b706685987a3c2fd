#pragma once

// Exhaustive ground truth for small codes: nearest codeword by full
// enumeration, true minimum distance, and the Singleton equality check.
// Everything here is exponential in n*k and guarded by explicit budgets; the
// point is certifying the fast decoders, not performance.

#include <cstdint>
#include <vector>

#include "rankcodes/gabidulin.hpp"
#include "rankcodes/gf.hpp"
#include "rankcodes/rank_metric.hpp"

namespace rankcodes {

struct OracleBudget {
    uint64_t max_codewords = 1000000;        // cap on q^(nk)
    uint64_t max_field = uint64_t(1) << 20;  // cap on q^n
};

struct NearestResult {
    Message message;
    int distance = 0;
    bool unique = true;  // false when another codeword achieves the distance
};

namespace detail {

inline uint64_t checked_codeword_count(const Field& f, int k, const OracleBudget& budget) {
    if (f.order() > budget.max_field) throw BudgetError("field order exceeds the oracle budget");
    uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > budget.max_codewords / f.order())
            throw BudgetError("codeword count exceeds the oracle budget");
        count *= f.order();
    }
    return count;
}

// Messages are ordered by a mixed-radix index: the first coordinate is the
// most significant block, and each block is an element index.
inline Message message_from_index(const Field& f, int k, uint64_t idx) {
    Message m(static_cast<size_t>(k), f.zero());
    for (int i = k - 1; i >= 0; --i) {
        m[static_cast<size_t>(i)] = f.element_from_index(idx % f.order());
        idx /= f.order();
    }
    return m;
}

}  // namespace detail

template <class Code>
NearestResult oracle_nearest(const Code& code, const Word& received,
                             const OracleBudget& budget = {}) {
    const Field& f = code.field();
    const uint64_t total = detail::checked_codeword_count(f, code.dimension(), budget);
    NearestResult best;
    best.distance = -1;
    for (uint64_t idx = 0; idx < total; ++idx) {
        const Message m = detail::message_from_index(f, code.dimension(), idx);
        const int d = rank_distance(f, code.encode(m), received);
        if (best.distance < 0 || d < best.distance) {
            best.message = m;
            best.distance = d;
            best.unique = true;
        } else if (d == best.distance) {
            best.unique = false;
        }
    }
    return best;
}

// Minimum rank norm over all nonzero codewords.
template <class Code>
int oracle_min_distance(const Code& code, const OracleBudget& budget = {}) {
    const Field& f = code.field();
    const uint64_t total = detail::checked_codeword_count(f, code.dimension(), budget);
    int best = -1;
    for (uint64_t idx = 1; idx < total; ++idx) {
        const Message m = detail::message_from_index(f, code.dimension(), idx);
        const int d = rank_norm(f, code.encode(m));
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// Whether the code meets the rank-metric Singleton bound with equality:
// dimension k equals n - d + 1 for the true minimum distance d.
template <class Code>
bool oracle_singleton_check(const Code& code, const OracleBudget& budget = {}) {
    const int d = oracle_min_distance(code, budget);
    return code.dimension() == code.length() - d + 1;
}

}  // namespace rankcodes
