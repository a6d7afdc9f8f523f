#ifndef WHQ_SCALAR_HPP
#define WHQ_SCALAR_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "whq/errors.hpp"

namespace whq {

enum class FieldKind { Rational, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0; // modulus when kind == Prime

    bool operator==(const FieldSpec&) const = default;
};

// An exact field element: a rational in lowest terms (positive denominator)
// or a residue in [0, p) for a prime p. Values are immutable in spirit:
// arithmetic returns fresh values and never mutates operands.
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    // Parses "num", "-num" or "num/den" relative to a field.
    static Scalar parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // DivisionByZero when o == 0
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "num/den" with "/den" omitted for integral values; residues print as
    // plain integers.
    std::string str() const;

private:
    FieldSpec field_{};
    mpq_class q_{};          // canonical: lowest terms, positive denominator
    std::uint64_t r_ = 0;    // residue when prime

    void check_same_field(const Scalar& o) const;
};

} // namespace whq

#endif
