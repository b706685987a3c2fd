#include <catch2/catch_amalgamated.hpp>

#include "rankcodes/oracle.hpp"
#include "rankcodes/twisted.hpp"

using namespace rankcodes;

namespace {

Word add_words(const Field& f, const Word& a, const Word& b) {
    Word out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Message random_message(const Field& f, int k, Rng& rng) {
    Message m(static_cast<size_t>(k));
    for (auto& x : m) x = f.random_element(rng);
    return m;
}

FieldElement element_of_norm(const Field& f, uint32_t target) {
    for (const auto& e : f.elements())
        if (!f.is_zero(e) && f.norm(e) == f.from_base(target)) return e;
    throw std::runtime_error("no element of that norm");
}

}  // namespace

TEST_CASE("construction rejects twists whose norm hits the obstruction") {
    Field f81(3, 4);
    // n*k = 8 even, so the forbidden norm value is +1
    const FieldElement good = element_of_norm(f81, 2);
    const FieldElement bad = element_of_norm(f81, 1);
    CHECK_NOTHROW(TwistedCode::with_power_basis(f81, 2, good, 3));
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f81, 2, bad, 3), std::invalid_argument);
    CHECK_NOTHROW(TwistedCode::with_power_basis(f81, 2, f81.zero(), 0));

    // n*k odd: the forbidden value becomes -1
    Field f27(3, 3);
    const FieldElement norm2 = element_of_norm(f27, 2);  // 2 = -1 mod 3
    const FieldElement norm1 = element_of_norm(f27, 1);
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f27, 1, norm2, 2), std::invalid_argument);
    CHECK_NOTHROW(TwistedCode::with_power_basis(f27, 1, norm1, 2));
}

TEST_CASE("over q = 2 every nonzero twist is rejected") {
    Field f16(2, 4);
    int rejected = 0, total = 0;
    for (const auto& e : f16.elements()) {
        if (f16.is_zero(e)) continue;
        ++total;
        try {
            TwistedCode::with_power_basis(f16, 2, e, 1);
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    CHECK(total == 15);
    CHECK(rejected == 15);
    CHECK_NOTHROW(TwistedCode::with_power_basis(f16, 2, f16.zero(), 0));
}

TEST_CASE("parameter range validation") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f, 0, eta, 1), std::invalid_argument);
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f, 4, eta, 1), std::invalid_argument);
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f, 2, eta, -1), std::invalid_argument);
    CHECK_THROWS_AS(TwistedCode::with_power_basis(f, 2, eta, 4), std::invalid_argument);
    auto alpha = power_basis(f);
    alpha[2] = f.add(alpha[0], alpha[1]);
    CHECK_THROWS_AS(TwistedCode(f, 2, eta, 1, alpha), std::invalid_argument);
}

TEST_CASE("message polynomial carries the twist") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);

    const auto zero_poly = code.message_poly(Message(2, f.zero()));
    CHECK(zero_poly.is_zero());

    Message m(2, f.zero());
    m[1] = f.gen();
    const auto p1 = code.message_poly(m);  // f_0 = 0: no twist term
    CHECK(p1.qdeg() == 1);
    CHECK(p1.coeff(f, 1) == f.gen());

    m[0] = f.one();
    m[1] = f.zero();
    const auto p2 = code.message_poly(m);  // x + eta x^(q^2)
    CHECK(p2.qdeg() == 2);
    CHECK(p2.coeff(f, 0) == f.one());
    CHECK(p2.coeff(f, 2) == eta);
}

TEST_CASE("encoding is F_q-linear but not F_{q^n}-linear") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    Rng rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        const Message m1 = random_message(f, 2, rng);
        const Message m2 = random_message(f, 2, rng);
        const uint32_t c = static_cast<uint32_t>(rng.below(3));
        Message combo(2);
        for (int i = 0; i < 2; ++i)
            combo[static_cast<size_t>(i)] =
                f.add(f.mul(f.from_base(c), m1[static_cast<size_t>(i)]), m2[static_cast<size_t>(i)]);
        const Word w1 = code.encode(m1), w2 = code.encode(m2);
        Word expected(w1.size());
        for (size_t i = 0; i < w1.size(); ++i)
            expected[i] = f.add(f.mul(f.from_base(c), w1[i]), w2[i]);
        CHECK(code.encode(combo) == expected);
    }
    // scaling by an element outside F_q moves the twist differently
    Message m(2, f.zero());
    m[0] = f.one();
    const FieldElement c = f.gen();
    Message scaled(2, f.zero());
    scaled[0] = c;
    const Word w = code.encode(m);
    Word cw(w.size());
    for (size_t i = 0; i < w.size(); ++i) cw[i] = f.mul(c, w[i]);
    CHECK_FALSE(code.encode(scaled) == cw);
}

TEST_CASE("codeword polynomials have small kernels") {
    // nonzero members of the code family vanish on at most k-1 dimensions,
    // which is what makes the minimum distance n-k+1
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    Rng rng(41);
    int checked = 0;
    while (checked < 100) {
        const Message m = random_message(f, 2, rng);
        const auto p = code.message_poly(m);
        if (p.is_zero()) continue;
        ++checked;
        CHECK(static_cast<int>(lp_kernel(f, p).size()) <= code.dimension() - 1);
    }
}

TEST_CASE("round trips with the twist exponent aligned to the radius") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);  // r = t + k at t = 1
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const Message m = random_message(f, 2, rng);
        const int t = trial % 2;
        const Word rec = add_words(f, code.encode(m), random_error(f, t, rng));
        const auto dec = code.decode(rec);
        REQUIRE(dec.has_value());
        CHECK(*dec == m);
    }
}

TEST_CASE("round trips with a generic twist exponent") {
    // r = 1 makes s nonzero at the working radius, forcing the scan fallback
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 1);
    Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Message m = random_message(f, 2, rng);
        const Word rec = add_words(f, code.encode(m), random_error(f, 1, rng));
        const auto dec = code.decode(rec);
        REQUIRE(dec.has_value());
        CHECK(*dec == m);
    }
}

TEST_CASE("the scan fallback respects its budget") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 1);
    Rng rng(44);
    const Message m = random_message(f, 2, rng);
    const Word rec = add_words(f, code.encode(m), random_error(f, 1, rng));
    DecodeOptions opts;
    opts.field_scan_limit = 10;
    CHECK_THROWS_AS(code.decode(rec, opts), BudgetError);
}

TEST_CASE("dimension one and eta zero edge cases") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    Rng rng(45);

    const TwistedCode k1 = TwistedCode::with_power_basis(f, 1, eta, 2);  // r = t + k at t = 1
    for (int trial = 0; trial < 20; ++trial) {
        const Message m = random_message(f, 1, rng);
        const Word rec = add_words(f, k1.encode(m), random_error(f, 1, rng));
        const auto dec = k1.decode(rec);
        REQUIRE(dec.has_value());
        CHECK(*dec == m);
    }

    const TwistedCode classical = TwistedCode::with_power_basis(f, 2, f.zero(), 0);
    CHECK(classical.is_classical());
    for (int trial = 0; trial < 20; ++trial) {
        const Message m = random_message(f, 2, rng);
        const Word rec = add_words(f, classical.encode(m), random_error(f, 1, rng));
        const auto dec = classical.decode(rec);
        REQUIRE(dec.has_value());
        CHECK(*dec == m);
    }
}

TEST_CASE("interpolation solutions satisfy the conditions and are plentiful") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    Rng rng(46);
    const Message m = random_message(f, 2, rng);
    const Word rec = add_words(f, code.encode(m), random_error(f, 1, rng));

    const auto sys = build_interpolation_system(code, rec, 1);
    CHECK(sys.matrix.size() == 4);
    CHECK(sys.a_count + sys.b_count == 2 * 4 - 2 - 2 + 2);

    const auto sols = interpolation_solutions(code, rec, 1);
    CHECK(sols.size() >= 2);
    for (const auto& [p1, p2] : sols)
        for (size_t i = 0; i < 4; ++i)
            CHECK(lp_eval(f, p1, code.alpha()[i]) == lp_eval(f, p2, rec[i]));
}

TEST_CASE("the all-zero received word admits the trivial solution") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    const Word zero(4, f.zero());
    const auto sys = build_interpolation_system(code, zero, 1);
    // the column of b_0 is identically zero, so (P1, P2) = (0, x) solves it
    for (const auto& row : sys.matrix) CHECK(f.is_zero(row[static_cast<size_t>(sys.a_count)]));
    const auto dec = code.decode(zero);
    REQUIRE(dec.has_value());
    CHECK(*dec == Message(2, f.zero()));
}

TEST_CASE("twist recovery is consistent between division and pair quadratics") {
    // whenever the direct division yields the message, its f_0 must be a root
    // of every informative pair identity
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    Rng rng(47);
    int verified = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Message m = random_message(f, 2, rng);
        const int t = 1;
        const Word rec = add_words(f, code.encode(m), random_error(f, t, rng));
        const auto sols = interpolation_solutions(code, rec, t);
        REQUIRE(sols.size() >= 2);
        const FieldElement f0 = m[0];
        const int n = 4, k = 2;
        const FieldElement etat = f.frobenius(eta, static_cast<uint64_t>(n - t - k));
        const uint32_t s = static_cast<uint32_t>((3 + n - t - k) % n);
        REQUIRE(s == 0);
        for (size_t u = 0; u < sols.size(); ++u) {
            for (size_t v = u + 1; v < sols.size(); ++v) {
                const auto a0u = sols[u].first.coeff(f, 0);
                const auto atopu = sols[u].first.coeff(f, static_cast<size_t>(n - t));
                const auto b0u = sols[u].second.coeff(f, 0);
                const auto btopu = sols[u].second.coeff(f, static_cast<size_t>(n - t - k));
                const auto a0v = sols[v].first.coeff(f, 0);
                const auto atopv = sols[v].first.coeff(f, static_cast<size_t>(n - t));
                const auto b0v = sols[v].second.coeff(f, 0);
                const auto btopv = sols[v].second.coeff(f, static_cast<size_t>(n - t - k));
                const auto lhs = f.mul(f.sub(a0u, f.mul(b0u, f0)),
                                       f.sub(atopv, f.mul(f.mul(btopv, etat), f0)));
                const auto rhs = f.mul(f.sub(a0v, f.mul(b0v, f0)),
                                       f.sub(atopu, f.mul(f.mul(btopu, etat), f0)));
                CHECK(lhs == rhs);
                ++verified;
            }
        }
    }
    CHECK(verified > 0);
}

TEST_CASE("decode failure on words far from the code") {
    Field f(3, 4);
    const FieldElement eta = element_of_norm(f, 2);
    const TwistedCode code = TwistedCode::with_power_basis(f, 2, eta, 3);
    Rng rng(48);
    int failures = 0;
    for (int attempt = 0; attempt < 50 && failures < 5; ++attempt) {
        Word w;
        for (int i = 0; i < 4; ++i) w.push_back(f.random_element(rng));
        const auto near = oracle_nearest(code, w);
        if (near.distance <= code.max_error_rank()) continue;
        CHECK_FALSE(code.decode(w).has_value());
        ++failures;
    }
    CHECK(failures == 5);  // plenty of far words exist at these parameters
}

TEST_CASE("bypassing validation exposes a code that is not maximum rank distance") {
    Field f(3, 4);
    const FieldElement bad = element_of_norm(f, 1);
    const auto broken = TwistedCode::unchecked(f, 2, bad, 1, power_basis(f));
    const int d = oracle_min_distance(broken);
    CHECK(d < 3);
    CHECK_FALSE(oracle_singleton_check(broken));
}

TEST_CASE("quadratic solving over odd characteristic") {
    Field f(3, 2);
    // z^2 - 1: roots 1 and 2
    auto roots = solve_quadratic(f, f.one(), f.zero(), f.from_base(2));
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == f.one() && roots[1] == f.from_base(2)) ||
           (roots[0] == f.from_base(2) && roots[1] == f.one())));
    // z^2 + 1: roots beta and 2 beta
    roots = solve_quadratic(f, f.one(), f.zero(), f.one());
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(f.is_zero(f.add(f.mul(r, r), f.one())));
    // linear: 2z + 1 = 0
    roots = solve_quadratic(f, f.zero(), f.from_base(2), f.one());
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == f.one());
    // double root: (z - 1)^2
    roots = solve_quadratic(f, f.one(), f.from_base(1), f.one());
    REQUIRE(roots.size() == 1);
    CHECK(f.is_zero(f.add(f.add(f.mul(roots[0], roots[0]), roots[0]), f.one())));
    CHECK_THROWS_AS(solve_quadratic(f, f.zero(), f.zero(), f.zero()), std::invalid_argument);
    CHECK(solve_quadratic(f, f.zero(), f.zero(), f.one()).empty());
}

TEST_CASE("quadratic solving matches exhaustive search") {
    for (auto params : {std::pair<uint32_t, uint32_t>{3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        Field f(params.first, params.second);
        Rng rng(49);
        for (int trial = 0; trial < 60; ++trial) {
            const FieldElement c2 = f.random_element(rng);
            const FieldElement c1 = f.random_element(rng);
            const FieldElement c0 = f.random_element(rng);
            if (f.is_zero(c2) && f.is_zero(c1) && f.is_zero(c0)) continue;
            std::vector<FieldElement> expected;
            for (const auto& z : f.elements()) {
                const auto val = f.add(f.add(f.mul(c2, f.mul(z, z)), f.mul(c1, z)), c0);
                if (f.is_zero(val)) expected.push_back(z);
            }
            auto got = solve_quadratic(f, c2, c1, c0);
            CHECK(got.size() == expected.size());
            for (const auto& r : got) {
                bool found = false;
                for (const auto& e : expected)
                    if (e == r) found = true;
                CHECK(found);
            }
        }
    }
}
