#include "whq/scalar.hpp"

namespace whq {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

} // namespace

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    return from_int(1, f);
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rational) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rational) {
        if (mpq_set_str(s.q_.get_mpq_t(), text.c_str(), 10) != 0)
            throw IOError("bad rational literal '" + text + "'");
        if (s.q_.get_den() == 0) throw DivisionByZero();
        s.q_.canonicalize();
    } else {
        mpz_class n;
        auto slash = text.find('/');
        if (mpz_set_str(n.get_mpz_t(), text.substr(0, slash).c_str(), 10) != 0)
            throw IOError("bad residue literal '" + text + "'");
        mpz_class m = n % static_cast<unsigned long>(f.p);
        if (m < 0) m += static_cast<unsigned long>(f.p);
        s.r_ = m.get_ui();
        if (slash != std::string::npos) {
            Scalar d = parse(text.substr(slash + 1), f);
            s = s / d;
        }
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) {
        auto show = [](const FieldSpec& f) {
            return f.kind == FieldKind::Rational ? std::string("Q")
                                                 : "F_" + std::to_string(f.p);
        };
        throw MixedFields(show(field_) + " vs " + show(o.field_));
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rational) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rational) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rational) s.q_ = q_ * o.q_;
    else s.r_ = mod_mul(r_, o.r_, field_.p);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rational) s.q_ = 1 / q_;
    else s.r_ = mod_pow(r_, field_.p - 2, field_.p); // Fermat, p prime
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rational) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Rational) return q_.get_str();
    return std::to_string(r_);
}

} // namespace whq
