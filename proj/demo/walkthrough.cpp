// Walk through the library: build a twisted code over F_81, encode a
// message, inject a rank-1 error, decode, and certify the distance
// exhaustively.

#include <iostream>

#include "rankcodes/rankcodes.hpp"

using namespace rankcodes;

namespace {

std::string show(const FieldElement& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.c[i]);
    }
    return s + "]";
}

std::string show_word(const Word& w) {
    std::string s;
    for (const auto& e : w) {
        if (!s.empty()) s += " ";
        s += show(e);
    }
    return s;
}

}  // namespace

int main() {
    // F_81 = F_3[x]/(x^4 + x + 2), elements as digit vectors, low power first
    Field f(3, 4);
    std::cout << "field: q=" << f.q() << " n=" << f.extension_degree() << " modulus";
    for (uint32_t c : f.modulus()) std::cout << " " << c;
    std::cout << "\n";

    // pick a twist coefficient whose norm avoids (-1)^(nk) = +1
    FieldElement eta = f.zero();
    for (const auto& e : f.elements())
        if (!f.is_zero(e) && f.norm(e) == f.from_base(2)) {
            eta = e;
            break;
        }
    std::cout << "twist eta = " << show(eta) << ", norm " << show(f.norm(eta)) << "\n";

    const auto code = TwistedCode::with_power_basis(f, 2, eta, 3);
    std::cout << "code: n=" << code.length() << " k=" << code.dimension()
              << " r=" << code.twist_exponent() << ", corrects rank <= " << code.max_error_rank()
              << "\n\n";

    // encode
    Rng rng(42);
    Message m{f.from_base(1), f.gen()};
    const Word sent = code.encode(m);
    std::cout << "message: " << show_word(m) << "\n";
    std::cout << "sent:    " << show_word(sent) << "\n";

    // corrupt with an error of rank exactly 1
    const Word err = random_error(f, 1, rng);
    Word received(sent.size());
    for (size_t i = 0; i < sent.size(); ++i) received[i] = f.add(sent[i], err[i]);
    std::cout << "error:   " << show_word(err) << " (rank " << rank_norm(f, err) << ")\n";
    std::cout << "received " << show_word(received) << "\n";

    // decode by interpolation
    const auto decoded = code.decode(received);
    if (!decoded) {
        std::cout << "decode failed\n";
        return 1;
    }
    std::cout << "decoded: " << show_word(*decoded)
              << (*decoded == m ? "  (matches the message)" : "  (MISMATCH)") << "\n\n";

    // cross-check against brute force and certify the minimum distance
    const auto near = oracle_nearest(code, received);
    std::cout << "exhaustive nearest codeword at distance " << near.distance
              << (near.unique ? " (unique)" : " (tied)") << "\n";
    const int d = oracle_min_distance(code);
    std::cout << "true minimum distance " << d << " = n-k+1 = "
              << code.length() - code.dimension() + 1
              << ": maximum rank distance confirmed\n";
    return *decoded == m && d == code.length() - code.dimension() + 1 ? 0 : 1;
}
