#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "weakhopf/field.hpp"

namespace wha {

/// Exact field element. Rational values are arbitrary-precision fractions in
/// lowest terms with positive denominator; prime-field values are canonical
/// residues in [0, p). There is no rounding anywhere.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), q_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(long v, const FieldSpec& f);
    static Scalar rational(long num, long den);  // over Q
    static Scalar from_mpq(mpq_class v, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rationals serialize as "a/b" ("/1" omitted); residues as decimal.
    std::string str() const;
    static Scalar parse(std::string_view text, const FieldSpec& f);

    /// Rational payload (valid only over Q).
    const mpq_class& rational_value() const { return q_; }
    std::uint64_t residue_value() const { return r_; }

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class q_;            // rationals
    std::uint64_t r_ = 0;    // prime-field residue
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);  // p prime, a != 0

}  // namespace wha
