#include "weakhopf/field.hpp"

#include <gmpxx.h>

namespace wha {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    // 40 Miller-Rabin rounds; deterministic enough for input validation.
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw ParseError("prime-field modulus must be prime, got " + std::to_string(p));
    }
    FieldSpec f;
    f.kind = FieldKind::Prime;
    f.modulus = p;
    return f;
}

std::string FieldSpec::str() const {
    if (kind == FieldKind::Rationals) return "Q";
    return "F" + std::to_string(modulus);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    std::string_view digits;
    if (text.rfind("Fp:", 0) == 0) {
        digits = text.substr(3);
    } else if (text.size() >= 2 && text[0] == 'F') {
        digits = text.substr(1);
    } else {
        throw ParseError("bad field spec: " + std::string(text));
    }
    if (digits.empty()) throw ParseError("bad field spec: " + std::string(text));
    std::uint64_t p = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("bad field spec: " + std::string(text));
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
}

}  // namespace wha
