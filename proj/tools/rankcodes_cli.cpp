// Command line front end: create code descriptions, encode, corrupt, decode,
// cross-check against the exhaustive oracle, certify the distance, and time
// the decoder.
//
// Exit codes: 0 success, 1 usage or validation error, 2 decode failure or a
// negative verification result, 3 work budget exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rankcodes/rankcodes.hpp"

namespace {

using namespace rankcodes;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
}

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

CodeSpec load_spec(const std::string& path) { return CodeSpec::from_string(read_text(path)); }

std::vector<FieldElement> load_elements(const Field& f, const std::string& path, size_t count,
                                        bool hex) {
    const std::string text = read_text(path);
    if (hex) return from_packed_digits(f, strip(text), count);
    return elements_from_json(f, parse_json_text(text), count);
}

std::string dump_elements(const Field& f, const std::vector<FieldElement>& elems, bool hex) {
    if (hex) return to_packed_digits(f, elems) + "\n";
    return elements_to_json(elems).dump() + "\n";
}

std::vector<uint32_t> parse_coeff_list(const std::string& text, const std::string& what) {
    const nlohmann::json j = parse_json_text(text);
    if (!j.is_array()) throw ParseError(what + " must be a JSON array of coefficients");
    std::vector<uint32_t> out;
    for (const auto& c : j) {
        if (!c.is_number_unsigned()) throw ParseError(what + " coefficients must be unsigned");
        out.push_back(c.get<uint32_t>());
    }
    return out;
}

int cmd_code_new(uint32_t q, uint32_t n, int k, int r, const std::string& eta_strategy,
                 const std::string& eta_text, const std::string& modulus_text, uint64_t seed,
                 const std::string& out_path) {
    std::vector<uint32_t> modulus =
        modulus_text.empty() ? Field::default_modulus(q, n) : parse_coeff_list(modulus_text, "modulus");
    const Field field(q, n, modulus);
    FieldElement eta = field.zero();
    if (eta_strategy == "zero") {
        // classical code, nothing to sample
    } else if (eta_strategy == "random-valid") {
        if (q == 2) {
            std::cerr << "no valid twist exists over q = 2: every nonzero eta has norm 1, which "
                         "equals (-1)^(nk), so the code would not be maximum rank distance\n";
            return 1;
        }
        Rng rng(seed);
        const uint32_t sign =
            (static_cast<uint64_t>(n) * static_cast<uint64_t>(k) % 2 == 0) ? 1u : q - 1;
        for (;;) {
            eta = field.random_nonzero(rng);
            if (field.norm(eta).c[0] != sign) break;
        }
    } else if (eta_strategy == "explicit") {
        if (eta_text.empty()) throw ParseError("explicit eta strategy needs --eta-value");
        const auto coeffs = parse_coeff_list(eta_text, "eta");
        if (coeffs.size() != n) throw ParseError("eta must have n coefficients");
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] >= q) throw ParseError("eta coefficient out of range");
            eta.c[i] = coeffs[i];
        }
    } else {
        throw ParseError("eta strategy must be zero, random-valid, or explicit");
    }
    const TwistedCode code(field, k, eta, r, power_basis(field));  // validates everything
    write_text(out_path, CodeSpec::from_code(code).to_string());
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& msg_path, bool hex,
               const std::string& out_path) {
    const TwistedCode code = load_spec(spec_path).make_code();
    const Message m =
        load_elements(code.field(), msg_path, static_cast<size_t>(code.dimension()), hex);
    write_text(out_path, dump_elements(code.field(), code.encode(m), hex));
    return 0;
}

int cmd_corrupt(const std::string& spec_path, const std::string& word_path, int t, uint64_t seed,
                bool hex, const std::string& out_path) {
    const TwistedCode code = load_spec(spec_path).make_code();
    const Field& f = code.field();
    Word w = load_elements(f, word_path, static_cast<size_t>(code.length()), hex);
    Rng rng(seed);
    const Word e = random_error(f, t, rng);
    for (size_t i = 0; i < w.size(); ++i) w[i] = f.add(w[i], e[i]);
    write_text(out_path, dump_elements(f, w, hex));
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& word_path, bool hex,
               const std::string& out_path) {
    const TwistedCode code = load_spec(spec_path).make_code();
    const Word w = load_elements(code.field(), word_path, static_cast<size_t>(code.length()), hex);
    const auto m = code.decode(w);
    if (!m) {
        std::cerr << "decode failure: no codeword within rank radius " << code.max_error_rank()
                  << "\n";
        return 2;
    }
    write_text(out_path, dump_elements(code.field(), *m, hex));
    return 0;
}

int cmd_oracle_decode(const std::string& spec_path, const std::string& word_path, bool hex,
                      uint64_t max_codewords, uint64_t max_field, const std::string& out_path) {
    const TwistedCode code = load_spec(spec_path).make_code();
    const Word w = load_elements(code.field(), word_path, static_cast<size_t>(code.length()), hex);
    const OracleBudget budget{max_codewords, max_field};
    const NearestResult res = oracle_nearest(code, w, budget);
    nlohmann::json j{{"distance", res.distance}, {"unique", res.unique}};
    j["message"] = hex ? nlohmann::json(to_packed_digits(code.field(), res.message))
                       : elements_to_json(res.message);
    write_text(out_path, j.dump() + "\n");
    return 0;
}

int cmd_verify_mrd(const std::string& spec_path, uint64_t max_codewords, uint64_t max_field) {
    // Bypass construction-time validation so deliberately broken descriptions
    // can be measured rather than rejected.
    const TwistedCode code = load_spec(spec_path).make_code(false);
    const OracleBudget budget{max_codewords, max_field};
    const int d = oracle_min_distance(code, budget);
    const int singleton = code.length() - code.dimension() + 1;
    if (d == singleton) {
        std::cout << "min distance " << d << " = n-k+1: MRD confirmed\n";
        return 0;
    }
    std::cout << "min distance " << d << " < n-k+1 = " << singleton << ": not MRD\n";
    return 2;
}

int cmd_bench(const std::string& spec_path, int trials, int t, uint64_t seed) {
    const TwistedCode code = load_spec(spec_path).make_code();
    const Field& f = code.field();
    if (t < 0) t = code.max_error_rank();
    Rng rng(seed);
    std::vector<double> enc_us, dec_us;
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
        Message m(static_cast<size_t>(code.dimension()));
        for (auto& x : m) x = f.random_element(rng);
        const auto t0 = std::chrono::steady_clock::now();
        const Word w = code.encode(m);
        const auto t1 = std::chrono::steady_clock::now();
        const Word e = random_error(f, t, rng);
        Word rec(w.size());
        for (size_t j = 0; j < w.size(); ++j) rec[j] = f.add(w[j], e[j]);
        const auto t2 = std::chrono::steady_clock::now();
        const auto dec = code.decode(rec);
        const auto t3 = std::chrono::steady_clock::now();
        if (!dec || !(*dec == m)) ++failures;
        enc_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
        dec_us.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
    }
    auto median = [](std::vector<double> v) {
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    };
    std::cout << "code: q=" << f.q() << " n=" << f.extension_degree() << " k=" << code.dimension()
              << " r=" << code.twist_exponent() << ", error rank t=" << t << ", trials=" << trials
              << "\n";
    std::cout << "encode median " << median(enc_us) << " us\n";
    std::cout << "decode median " << median(dec_us) << " us\n";
    std::cout << "recovered " << (trials - failures) << "/" << trials << "\n";
    return failures == 0 ? 0 : 2;
}

int cmd_selftest() {
    int failed = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok" : "FAIL") << ": " << name << "\n";
        if (!ok) ++failed;
    };

    const Field f9(3, 2);
    const FieldElement beta = f9.gen();
    report("beta * beta = 2 in F_9", f9.mul(beta, beta) == f9.from_base(2));
    report("beta^q = 2 beta in F_9", f9.frobenius(beta, 1) == f9.mul(f9.from_base(2), beta));
    report("norm(beta) = 1 in F_9", f9.norm(beta) == f9.one());

    const Field f81(3, 4);
    Rng rng(2024);
    bool div_ok = true;
    for (int i = 0; i < 20 && div_ok; ++i) {
        std::vector<FieldElement> fc, gc;
        for (int j = 0; j < 6; ++j) fc.push_back(f81.random_element(rng));
        for (int j = 0; j < 4; ++j) gc.push_back(f81.random_element(rng));
        const auto fp = LinearizedPoly::from_coeffs(f81, fc);
        const auto gp = LinearizedPoly::from_coeffs(f81, gc);
        if (gp.is_zero()) continue;
        const auto d = lp_divide_left(f81, fp, gp);
        div_ok = lp_add(f81, lp_compose(f81, gp, d.quotient), d.remainder) == fp &&
                 d.remainder.qdeg() < gp.qdeg();
    }
    report("left division round trip", div_ok);

    const auto gab = GabidulinCode::with_power_basis(Field(2, 8), 4);
    bool gab_ok = true;
    for (int i = 0; i < 5 && gab_ok; ++i) {
        Message m(4);
        for (auto& x : m) x = gab.field().random_element(rng);
        Word rec = gab.encode(m);
        const Word e = random_error(gab.field(), i % 3, rng);
        for (size_t j = 0; j < rec.size(); ++j) rec[j] = gab.field().add(rec[j], e[j]);
        const auto dec = gab.decode(rec);
        gab_ok = dec && *dec == m;
    }
    report("classical decode round trip", gab_ok);

    FieldElement eta = f81.zero();
    for (const auto& e : f81.elements())
        if (!f81.is_zero(e) && f81.norm(e) == f81.from_base(2)) {
            eta = e;
            break;
        }
    const auto tw = TwistedCode::with_power_basis(f81, 2, eta, 3);
    bool tw_ok = true;
    for (int i = 0; i < 5 && tw_ok; ++i) {
        Message m(2);
        for (auto& x : m) x = f81.random_element(rng);
        Word rec = tw.encode(m);
        const Word e = random_error(f81, 1, rng);
        for (size_t j = 0; j < rec.size(); ++j) rec[j] = f81.add(rec[j], e[j]);
        const auto dec = tw.decode(rec);
        tw_ok = dec && *dec == m;
    }
    report("twisted decode round trip", tw_ok);

    bool oracle_ok = true;
    for (int i = 0; i < 2 && oracle_ok; ++i) {
        Message m(2);
        for (auto& x : m) x = f81.random_element(rng);
        Word rec = tw.encode(m);
        const Word e = random_error(f81, 1, rng);
        for (size_t j = 0; j < rec.size(); ++j) rec[j] = f81.add(rec[j], e[j]);
        const auto dec = tw.decode(rec);
        const auto near = oracle_nearest(tw, rec);
        oracle_ok = dec && *dec == near.message && near.unique;
    }
    report("decoder matches exhaustive oracle", oracle_ok);

    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric codes: encoding, decoding, and exhaustive certification"};
    app.set_version_flag("--version", std::string("rankcodes ") + rankcodes::kVersion +
                                          " (rng: " + Rng::kName + ")");
    app.require_subcommand(1);

    // code new
    auto* code_cmd = app.add_subcommand("code", "manage code descriptions");
    code_cmd->require_subcommand(1);
    auto* new_cmd = code_cmd->add_subcommand("new", "create a code description");
    uint32_t q = 0, n = 0;
    int k = 0, r = 0;
    std::string eta_strategy = "random-valid", eta_text, modulus_text, out_path = "-";
    uint64_t seed = 0;
    new_cmd->add_option("--q", q, "base field size (prime)")->required();
    new_cmd->add_option("--n", n, "extension degree / code length")->required();
    new_cmd->add_option("--k", k, "dimension")->required();
    new_cmd->add_option("--r", r, "twist exponent")->required();
    new_cmd->add_option("--eta", eta_strategy, "twist strategy: zero, random-valid, or explicit");
    new_cmd->add_option("--eta-value", eta_text, "twist coefficient as a JSON coefficient array");
    new_cmd->add_option("--modulus", modulus_text, "field modulus as a JSON coefficient array");
    new_cmd->add_option("--seed", seed, "seed for random-valid sampling");
    new_cmd->add_option("--out", out_path, "output file (- for stdout)");

    // shared options
    std::string spec_path, in_path = "-";
    bool hex = false;
    int t = 0;
    uint64_t corrupt_seed = 0;

    auto* encode_cmd = app.add_subcommand("encode", "encode a message");
    encode_cmd->add_option("--spec", spec_path, "code description file")->required();
    encode_cmd->add_option("--message", in_path, "message file (- for stdin)");
    encode_cmd->add_flag("--hex", hex, "packed digit strings instead of JSON");
    encode_cmd->add_option("--out", out_path, "output file (- for stdout)");

    auto* corrupt_cmd = app.add_subcommand("corrupt", "add a random error of given rank");
    corrupt_cmd->add_option("--spec", spec_path, "code description file")->required();
    corrupt_cmd->add_option("--word", in_path, "word file (- for stdin)");
    corrupt_cmd->add_option("--t", t, "error rank")->required();
    corrupt_cmd->add_option("--seed", corrupt_seed, "error sampling seed");
    corrupt_cmd->add_flag("--hex", hex, "packed digit strings instead of JSON");
    corrupt_cmd->add_option("--out", out_path, "output file (- for stdout)");

    auto* decode_cmd = app.add_subcommand("decode", "decode a received word");
    decode_cmd->add_option("--spec", spec_path, "code description file")->required();
    decode_cmd->add_option("--word", in_path, "word file (- for stdin)");
    decode_cmd->add_flag("--hex", hex, "packed digit strings instead of JSON");
    decode_cmd->add_option("--out", out_path, "output file (- for stdout)");

    uint64_t max_codewords = OracleBudget{}.max_codewords;
    uint64_t max_field = OracleBudget{}.max_field;
    auto* oracle_cmd = app.add_subcommand("oracle-decode", "exhaustive nearest-codeword search");
    oracle_cmd->add_option("--spec", spec_path, "code description file")->required();
    oracle_cmd->add_option("--word", in_path, "word file (- for stdin)");
    oracle_cmd->add_flag("--hex", hex, "packed digit strings instead of JSON");
    oracle_cmd->add_option("--max-codewords", max_codewords, "codeword enumeration budget");
    oracle_cmd->add_option("--max-field", max_field, "field size budget");
    oracle_cmd->add_option("--out", out_path, "output file (- for stdout)");

    auto* verify_cmd = app.add_subcommand("verify-mrd", "recompute the true minimum distance");
    verify_cmd->add_option("--spec", spec_path, "code description file")->required();
    verify_cmd->add_option("--max-codewords", max_codewords, "codeword enumeration budget");
    verify_cmd->add_option("--max-field", max_field, "field size budget");

    int trials = 20;
    int bench_t = -1;
    auto* bench_cmd = app.add_subcommand("bench", "time encode and decode");
    bench_cmd->add_option("--spec", spec_path, "code description file")->required();
    bench_cmd->add_option("--trials", trials, "number of trials");
    bench_cmd->add_option("--t", bench_t, "error rank (default: maximum radius)");
    bench_cmd->add_option("--seed", corrupt_seed, "trial sampling seed");

    auto* selftest_cmd = app.add_subcommand("selftest", "run built-in sanity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(code_cmd))
            return cmd_code_new(q, n, k, r, eta_strategy, eta_text, modulus_text, seed, out_path);
        if (app.got_subcommand(encode_cmd)) return cmd_encode(spec_path, in_path, hex, out_path);
        if (app.got_subcommand(corrupt_cmd))
            return cmd_corrupt(spec_path, in_path, t, corrupt_seed, hex, out_path);
        if (app.got_subcommand(decode_cmd)) return cmd_decode(spec_path, in_path, hex, out_path);
        if (app.got_subcommand(oracle_cmd))
            return cmd_oracle_decode(spec_path, in_path, hex, max_codewords, max_field, out_path);
        if (app.got_subcommand(verify_cmd)) return cmd_verify_mrd(spec_path, max_codewords, max_field);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(spec_path, trials, bench_t, corrupt_seed);
        if (app.got_subcommand(selftest_cmd)) return cmd_selftest();
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
