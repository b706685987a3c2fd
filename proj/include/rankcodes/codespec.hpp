#pragma once

// File formats. A code is described by a JSON object
//   {"q": 3, "n": 4, "k": 2, "r": 3, "modulus": [...], "eta": [...],
//    "alpha": [[...], ...]}
// where field elements are little-endian coefficient arrays over F_q,
// "modulus" lists the n+1 coefficients of the field modulus, and "alpha" may
// be omitted for the power basis. Words and messages are JSON arrays of
// elements, or packed digit strings (one base-36 digit per coefficient) when
// a compact form is wanted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rankcodes/errors.hpp"
#include "rankcodes/gf.hpp"
#include "rankcodes/twisted.hpp"

namespace rankcodes {

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1, col = 1;
        const size_t stop = e.byte > 0 ? std::min(text.size(), static_cast<size_t>(e.byte) - 1)
                                       : size_t{0};
        for (size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("JSON error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
}

inline nlohmann::json element_to_json(const FieldElement& e) {
    return nlohmann::json(e.c);
}

inline FieldElement element_from_json(const Field& f, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != f.extension_degree())
        throw ParseError("field element must be an array of " +
                         std::to_string(f.extension_degree()) + " coefficients");
    FieldElement e = f.zero();
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned() || j[i].get<uint64_t>() >= f.q())
            throw ParseError("field element coefficient out of range at position " +
                             std::to_string(i));
        e.c[i] = j[i].get<uint32_t>();
    }
    return e;
}

inline nlohmann::json elements_to_json(const std::vector<FieldElement>& elems) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : elems) a.push_back(element_to_json(e));
    return a;
}

inline std::vector<FieldElement> elements_from_json(const Field& f, const nlohmann::json& j,
                                                    size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError("expected an array of " + std::to_string(expected) + " field elements");
    std::vector<FieldElement> out;
    out.reserve(expected);
    for (const auto& item : j) out.push_back(element_from_json(f, item));
    return out;
}

// --- packed digit strings (one character per F_q coefficient) ---

inline constexpr const char kDigitChars[] = "0123456789abcdefghijklmnopqrstuvwxyz";

inline std::string to_packed_digits(const Field& f, const std::vector<FieldElement>& elems) {
    if (f.q() > 36) throw std::invalid_argument("packed digit strings require q <= 36");
    std::string s;
    s.reserve(elems.size() * f.extension_degree());
    for (const auto& e : elems) {
        f.check(e);
        for (uint32_t c : e.c) s.push_back(kDigitChars[c]);
    }
    return s;
}

inline std::vector<FieldElement> from_packed_digits(const Field& f, const std::string& s,
                                                    size_t count) {
    if (f.q() > 36) throw std::invalid_argument("packed digit strings require q <= 36");
    if (s.size() != count * f.extension_degree())
        throw ParseError("packed digit string has length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(count * f.extension_degree()));
    std::vector<FieldElement> out(count, f.zero());
    for (size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        uint32_t digit;
        if (ch >= '0' && ch <= '9') digit = static_cast<uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'z') digit = static_cast<uint32_t>(ch - 'a') + 10;
        else if (ch >= 'A' && ch <= 'Z') digit = static_cast<uint32_t>(ch - 'A') + 10;
        else throw ParseError("invalid digit character at position " + std::to_string(i));
        if (digit >= f.q()) throw ParseError("digit out of range at position " + std::to_string(i));
        out[i / f.extension_degree()].c[i % f.extension_degree()] = digit;
    }
    return out;
}

// --- code description files ---

struct CodeSpec {
    uint32_t q = 0;
    uint32_t n = 0;
    int k = 0;
    int r = 0;
    std::vector<uint32_t> modulus;  // resolved to the default when absent from input
    std::vector<uint32_t> eta;      // coefficient vector, length n
    std::optional<std::vector<std::vector<uint32_t>>> alpha;  // absent: power basis

    static CodeSpec from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw ParseError("code description must be a JSON object");
        CodeSpec cs;
        for (const char* key : {"q", "n", "k", "r"})
            if (!j.contains(key) || !j[key].is_number_unsigned())
                throw ParseError(std::string("code description needs an unsigned integer \"") +
                                 key + "\"");
        cs.q = j["q"].get<uint32_t>();
        cs.n = j["n"].get<uint32_t>();
        cs.k = j["k"].get<int>();
        cs.r = j["r"].get<int>();
        if (j.contains("modulus")) {
            if (!j["modulus"].is_array()) throw ParseError("\"modulus\" must be an array");
            for (const auto& c : j["modulus"]) {
                if (!c.is_number_unsigned()) throw ParseError("modulus coefficients must be unsigned");
                cs.modulus.push_back(c.get<uint32_t>());
            }
        } else {
            try {
                cs.modulus = Field::default_modulus(cs.q, cs.n);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("invalid field parameters: ") + e.what());
            }
        }
        if (!j.contains("eta") || !j["eta"].is_array())
            throw ParseError("code description needs an \"eta\" coefficient array");
        for (const auto& c : j["eta"]) {
            if (!c.is_number_unsigned()) throw ParseError("eta coefficients must be unsigned");
            cs.eta.push_back(c.get<uint32_t>());
        }
        if (j.contains("alpha")) {
            if (!j["alpha"].is_array()) throw ParseError("\"alpha\" must be an array of elements");
            std::vector<std::vector<uint32_t>> rows;
            for (const auto& el : j["alpha"]) {
                if (!el.is_array()) throw ParseError("\"alpha\" entries must be coefficient arrays");
                std::vector<uint32_t> row;
                for (const auto& c : el) {
                    if (!c.is_number_unsigned())
                        throw ParseError("alpha coefficients must be unsigned");
                    row.push_back(c.get<uint32_t>());
                }
                rows.push_back(std::move(row));
            }
            cs.alpha = std::move(rows);
        }
        return cs;
    }

    static CodeSpec from_string(const std::string& text) { return from_json(parse_json_text(text)); }

    nlohmann::json to_json() const {
        nlohmann::json j{{"q", q}, {"n", n}, {"k", k}, {"r", r}, {"modulus", modulus}, {"eta", eta}};
        if (alpha) j["alpha"] = *alpha;
        return j;
    }

    std::string to_string() const { return to_json().dump(2) + "\n"; }

    Field make_field() const {
        try {
            return Field(q, n, modulus);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("invalid field parameters: ") + e.what());
        }
    }

    TwistedCode make_code(bool validated = true) const {
        const Field f = make_field();
        FieldElement eta_el = f.zero();
        if (eta.size() != n) throw ParseError("eta must have one coefficient per basis element");
        for (size_t i = 0; i < eta.size(); ++i) {
            if (eta[i] >= q) throw ParseError("eta coefficient out of range");
            eta_el.c[i] = eta[i];
        }
        std::vector<FieldElement> points;
        if (alpha) {
            for (const auto& row : *alpha) {
                FieldElement e = f.zero();
                if (row.size() != n) throw ParseError("alpha entries must have length n");
                for (size_t i = 0; i < row.size(); ++i) {
                    if (row[i] >= q) throw ParseError("alpha coefficient out of range");
                    e.c[i] = row[i];
                }
                points.push_back(std::move(e));
            }
        } else {
            points = power_basis(f);
        }
        if (validated) return TwistedCode(f, k, eta_el, r, std::move(points));
        return TwistedCode::unchecked(f, k, eta_el, r, std::move(points));
    }

    static CodeSpec from_code(const TwistedCode& code) {
        CodeSpec cs;
        const Field& f = code.field();
        cs.q = f.q();
        cs.n = f.extension_degree();
        cs.k = code.dimension();
        cs.r = code.twist_exponent();
        cs.modulus = f.modulus();
        cs.eta = code.eta().c;
        if (!(code.alpha() == power_basis(f))) {
            std::vector<std::vector<uint32_t>> rows;
            for (const auto& a : code.alpha()) rows.push_back(a.c);
            cs.alpha = std::move(rows);
        }
        return cs;
    }
};

}  // namespace rankcodes
