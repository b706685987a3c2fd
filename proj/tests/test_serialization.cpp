#include <catch2/catch_amalgamated.hpp>

#include "rankcodes/codespec.hpp"

using namespace rankcodes;

TEST_CASE("elements and words survive a JSON round trip") {
    Field f(3, 4);
    Rng rng(70);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldElement> w;
        for (int i = 0; i < 4; ++i) w.push_back(f.random_element(rng));
        const auto j = elements_to_json(w);
        CHECK(elements_from_json(f, j, 4) == w);
        const auto one = element_to_json(w[0]);
        CHECK(element_from_json(f, one) == w[0]);
    }
}

TEST_CASE("malformed element JSON is a parse error") {
    Field f(3, 2);
    CHECK_THROWS_AS(element_from_json(f, nlohmann::json::array({1, 2, 0})), ParseError);
    CHECK_THROWS_AS(element_from_json(f, nlohmann::json::array({3, 0})), ParseError);
    CHECK_THROWS_AS(element_from_json(f, nlohmann::json::array({-1, 0})), ParseError);
    CHECK_THROWS_AS(element_from_json(f, nlohmann::json("ab")), ParseError);
    CHECK_THROWS_AS(elements_from_json(f, nlohmann::json::array({{1, 0}}), 2), ParseError);
}

TEST_CASE("JSON syntax errors carry line context") {
    try {
        parse_json_text("{\n  \"q\": 3,\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("packed digit strings round trip") {
    Field f(3, 4);
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldElement> w;
        for (int i = 0; i < 3; ++i) w.push_back(f.random_element(rng));
        const std::string s = to_packed_digits(f, w);
        CHECK(s.size() == 12);
        CHECK(from_packed_digits(f, s, 3) == w);
    }
    // digits above 9 use letters
    Field f13(13, 2);
    FieldElement e = f13.zero();
    e.c = {12, 10};
    CHECK(to_packed_digits(f13, {e}) == "ca");
    CHECK(from_packed_digits(f13, "ca", 1) == std::vector<FieldElement>{e});
    CHECK(from_packed_digits(f13, "CA", 1) == std::vector<FieldElement>{e});
}

TEST_CASE("packed digit validation") {
    Field f(3, 4);
    CHECK_THROWS_AS(from_packed_digits(f, "0120", 2), ParseError);   // wrong length
    CHECK_THROWS_AS(from_packed_digits(f, "01*0", 1), ParseError);   // bad character
    CHECK_THROWS_AS(from_packed_digits(f, "0130", 1), ParseError);   // digit not below q
    Field f37(37, 2);
    CHECK_THROWS_AS(to_packed_digits(f37, {f37.zero()}), std::invalid_argument);
}

TEST_CASE("code descriptions round trip through JSON") {
    Field f(3, 4);
    FieldElement eta = f.zero();
    for (const auto& e : f.elements())
        if (!f.is_zero(e) && f.norm(e) == f.from_base(2)) {
            eta = e;
            break;
        }
    const auto code = TwistedCode::with_power_basis(f, 2, eta, 3);
    const CodeSpec cs = CodeSpec::from_code(code);
    CHECK_FALSE(cs.alpha.has_value());  // power basis stays implicit

    const CodeSpec parsed = CodeSpec::from_string(cs.to_string());
    CHECK(parsed.q == 3);
    CHECK(parsed.n == 4);
    CHECK(parsed.k == 2);
    CHECK(parsed.r == 3);
    CHECK(parsed.modulus == f.modulus());
    CHECK(parsed.eta == eta.c);
    const TwistedCode rebuilt = parsed.make_code();
    CHECK(rebuilt.eta() == eta);
    CHECK(rebuilt.alpha() == code.alpha());
}

TEST_CASE("custom evaluation points are preserved") {
    Field f(3, 4);
    auto alpha = power_basis(f);
    std::swap(alpha[0], alpha[1]);
    const auto code = TwistedCode(f, 2, f.zero(), 0, alpha);
    const CodeSpec cs = CodeSpec::from_code(code);
    REQUIRE(cs.alpha.has_value());
    const TwistedCode rebuilt = CodeSpec::from_string(cs.to_string()).make_code();
    CHECK(rebuilt.alpha() == alpha);
}

TEST_CASE("missing modulus falls back to the default") {
    const std::string text = R"({"q": 3, "n": 4, "k": 2, "r": 0, "eta": [0, 0, 0, 0]})";
    const CodeSpec cs = CodeSpec::from_string(text);
    CHECK(cs.modulus == Field::default_modulus(3, 4));
    CHECK_NOTHROW(cs.make_code());
}

TEST_CASE("invalid code descriptions are rejected") {
    CHECK_THROWS_AS(CodeSpec::from_string("[]"), ParseError);
    CHECK_THROWS_AS(CodeSpec::from_string("{\"q\": 3}"), ParseError);
    CHECK_THROWS_AS(CodeSpec::from_string(R"({"q": 3, "n": 4, "k": 2, "r": 0})"), ParseError);
    // bad field parameters surface as parse errors with context
    const std::string bad_q = R"({"q": 4, "n": 2, "k": 1, "r": 0, "eta": [0, 0]})";
    CHECK_THROWS_AS(CodeSpec::from_string(bad_q).make_code(), ParseError);
    // eta out of range
    const std::string bad_eta = R"({"q": 3, "n": 2, "k": 1, "r": 0, "eta": [3, 0]})";
    CHECK_THROWS_AS(CodeSpec::from_string(bad_eta).make_code(), ParseError);
    // invalid twist caught by construction
    const std::string bad_norm = R"({"q": 3, "n": 4, "k": 2, "r": 1, "eta": [1, 0, 0, 0]})";
    CHECK_THROWS_AS(CodeSpec::from_string(bad_norm).make_code(), std::invalid_argument);
    CHECK_NOTHROW(CodeSpec::from_string(bad_norm).make_code(false));
}
