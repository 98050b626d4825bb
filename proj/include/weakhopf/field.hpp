#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "weakhopf/errors.hpp"

namespace wha {

enum class FieldKind : std::uint8_t { Rationals, Prime };

/// Ground field: the rationals, or Z/p for a prime p that fits in 64 bits.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;  // prime fields only

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p);

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;  // "Q" or "F<p>"
    static FieldSpec parse(std::string_view text);
};

bool is_prime_u64(std::uint64_t n);

}  // namespace wha
