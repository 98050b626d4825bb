#include "weakhopf/scalar.hpp"

namespace wha {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid over signed 128-bit intermediates
    __int128 t = 0, nt = 1;
    __int128 r = static_cast<__int128>(p), nr = static_cast<__int128>(a % p);
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DivisionByZeroError("element not invertible mod p");
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.q_ = 1;
    } else {
        s.r_ = f.modulus == 1 ? 0 : 1;
    }
    return s;
}

Scalar Scalar::of_int(long v, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.q_ = v;
    } else {
        long m = static_cast<long>(f.modulus);
        long r = v % m;
        if (r < 0) r += m;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::from_mpq(mpq_class v, const FieldSpec& f) {
    if (f.kind != FieldKind::Rationals) {
        throw FieldMismatchError("rational literal used in a prime field");
    }
    Scalar s;
    s.field_ = f;
    v.canonicalize();
    s.q_ = std::move(v);
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rationals ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) {
        throw FieldMismatchError("mixed-field operands: " + field_.str() + " vs " + o.field_.str());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ = q_ + o.q_;
    } else {
        std::uint64_t p = field_.modulus;
        std::uint64_t v = r_ + o.r_;  // p < 2^63 in practice; guard anyway
        if (v >= p || v < r_) v -= p;
        s.r_ = v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ = q_ - o.q_;
    } else {
        std::uint64_t p = field_.modulus;
        s.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p - o.r_);
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ = q_ * o.q_;
    } else {
        s.r_ = mulmod_u64(r_, o.r_, field_.modulus);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ = q_ / o.q_;
    } else {
        s.r_ = mulmod_u64(r_, invmod_u64(o.r_, field_.modulus), field_.modulus);
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : field_.modulus - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    return one(field_) / *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Prime) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
    if (text.empty()) throw ParseError("empty scalar");
    std::string s(text);
    if (f.kind == FieldKind::Prime) {
        mpz_class z;
        if (z.set_str(s, 10) != 0) throw ParseError("bad residue: " + s);
        mpz_class m(std::to_string(f.modulus));
        mpz_class r = ((z % m) + m) % m;
        Scalar out;
        out.field_ = f;
        out.r_ = r.get_ui();
        return out;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (q.get_den() == 0) throw DivisionByZeroError("zero denominator in literal");
    q.canonicalize();
    Scalar out;
    out.field_ = f;
    out.q_ = std::move(q);
    return out;
}

}  // namespace wha
