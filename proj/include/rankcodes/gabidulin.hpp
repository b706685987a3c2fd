#pragma once

// Gabidulin codes: evaluate linearized message polynomials of q-degree < k on
// n F_q-independent points. Decoding is by interpolation: find a pair
// (P1, P2) of linearized polynomials, P2 != 0, with
//     P1(alpha_i) - P2(r_i) = 0  for all i,
// where qdeg P1 <= n - t and qdeg P2 <= n - t - k. For an error of rank at
// most t the message polynomial f then satisfies P1 = P2 o f, so f falls out
// of a left division.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankcodes/gf.hpp"
#include "rankcodes/linalg.hpp"
#include "rankcodes/linpoly.hpp"
#include "rankcodes/rank_metric.hpp"

namespace rankcodes {

using Message = std::vector<FieldElement>;

struct InterpolationSystem {
    detail::Matrix<detail::ExtFieldOps> matrix;  // n rows, a_count + b_count columns
    int a_count = 0;  // unknowns a_0 .. a_{n-t}, coefficients of P1
    int b_count = 0;  // unknowns b_0 .. b_{n-t-k}, coefficients of P2
};

// Rows evaluate P1 at alpha_i minus P2 at r_i; the nullspace is the solution
// space of the interpolation conditions. Requires 2n - 2t - k + 2 > n so the
// homogeneous system is guaranteed nontrivial solutions.
inline InterpolationSystem build_interpolation_system(const Field& f,
                                                      const std::vector<FieldElement>& alpha,
                                                      const Word& received, int t, int k) {
    const int n = static_cast<int>(alpha.size());
    if (static_cast<int>(received.size()) != n)
        throw std::invalid_argument("received word length must match the code length");
    if (t < 0) throw std::invalid_argument("error radius must be nonnegative");
    if (2 * t >= n - k + 2) throw std::invalid_argument("error radius too large for interpolation");
    InterpolationSystem sys;
    sys.a_count = n - t + 1;
    sys.b_count = n - t - k + 1;
    sys.matrix.assign(static_cast<size_t>(n),
                      std::vector<FieldElement>(static_cast<size_t>(sys.a_count + sys.b_count), f.zero()));
    for (int i = 0; i < n; ++i) {
        auto& row = sys.matrix[static_cast<size_t>(i)];
        for (int j = 0; j < sys.a_count; ++j) row[static_cast<size_t>(j)] = f.frobenius(alpha[static_cast<size_t>(i)], static_cast<uint64_t>(j));
        for (int j = 0; j < sys.b_count; ++j)
            row[static_cast<size_t>(sys.a_count + j)] = f.neg(f.frobenius(received[static_cast<size_t>(i)], static_cast<uint64_t>(j)));
    }
    return sys;
}

// Nullspace basis of the interpolation system, as (P1, P2) pairs. With
// constrain_leading set, the leading coefficient a_{n-t} of P1 is forced to
// zero; solutions of the constrained system divide exactly whenever the
// received word is within distance t of the classical code.
inline std::vector<std::pair<LinearizedPoly, LinearizedPoly>> interpolation_solution_basis(
    const Field& f, const std::vector<FieldElement>& alpha, const Word& received, int t, int k,
    bool constrain_leading = false) {
    InterpolationSystem sys = build_interpolation_system(f, alpha, received, t, k);
    if (constrain_leading) {
        std::vector<FieldElement> row(static_cast<size_t>(sys.a_count + sys.b_count), f.zero());
        row[static_cast<size_t>(sys.a_count - 1)] = f.one();
        sys.matrix.push_back(std::move(row));
    }
    const detail::ExtFieldOps ops{&f};
    const auto basis = detail::nullspace(ops, std::move(sys.matrix));
    std::vector<std::pair<LinearizedPoly, LinearizedPoly>> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        std::vector<FieldElement> p1(v.begin(), v.begin() + sys.a_count);
        std::vector<FieldElement> p2(v.begin() + sys.a_count, v.end());
        out.emplace_back(LinearizedPoly::from_coeffs(f, std::move(p1)),
                         LinearizedPoly::from_coeffs(f, std::move(p2)));
    }
    return out;
}

class GabidulinCode {
  public:
    GabidulinCode(Field field, int k, std::vector<FieldElement> alpha)
        : field_(std::move(field)), k_(k), alpha_(std::move(alpha)) {
        const int n = static_cast<int>(field_.extension_degree());
        if (static_cast<int>(alpha_.size()) != n)
            throw std::invalid_argument("evaluation points must number the extension degree");
        if (k_ < 1 || k_ > n) throw std::invalid_argument("dimension must lie in [1, n]");
        for (const auto& a : alpha_) field_.check(a);
        if (field_.is_zero(moore_determinant(field_, alpha_)))
            throw std::invalid_argument("evaluation points must be F_q-independent");
    }

    static GabidulinCode with_power_basis(Field field, int k) {
        std::vector<FieldElement> alpha = power_basis(field);
        return GabidulinCode(std::move(field), k, std::move(alpha));
    }

    const Field& field() const { return field_; }
    int dimension() const { return k_; }
    int length() const { return static_cast<int>(alpha_.size()); }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    int max_error_rank() const { return (length() - k_) / 2; }

    LinearizedPoly message_poly(const Message& m) const {
        if (static_cast<int>(m.size()) != k_) throw std::invalid_argument("message length must equal the dimension");
        return LinearizedPoly::from_coeffs(field_, m);
    }

    Word encode(const Message& m) const {
        const LinearizedPoly f = message_poly(m);
        Word w(alpha_.size());
        for (size_t i = 0; i < alpha_.size(); ++i) w[i] = lp_eval(field_, f, alpha_[i]);
        return w;
    }

    std::optional<Message> decode(const Word& received) const {
        if (received.size() != alpha_.size())
            throw std::invalid_argument("received word length must match the code length");
        for (const auto& x : received) field_.check(x);
        for (int t = max_error_rank(); t >= 0; --t) {
            for (int pass = 0; pass < 2; ++pass) {
                const auto basis =
                    interpolation_solution_basis(field_, alpha_, received, t, k_, pass == 1);
                for (const auto& [p1, p2] : basis) {
                    if (auto m = try_solution(p1, p2, received, t)) return m;
                }
            }
        }
        return std::nullopt;
    }

  private:
    std::optional<Message> try_solution(const LinearizedPoly& p1, const LinearizedPoly& p2,
                                        const Word& received, int t) const {
        if (p2.is_zero()) return std::nullopt;
        const LpDivision d = lp_divide_left(field_, p1, p2);
        if (!d.remainder.is_zero() || d.quotient.qdeg() >= k_) return std::nullopt;
        Message m(static_cast<size_t>(k_), field_.zero());
        for (int i = 0; i < k_; ++i) m[static_cast<size_t>(i)] = d.quotient.coeff(field_, static_cast<size_t>(i));
        if (rank_distance(field_, encode(m), received) > t) return std::nullopt;
        return m;
    }

    Field field_;
    int k_;
    std::vector<FieldElement> alpha_;
};

}  // namespace rankcodes
