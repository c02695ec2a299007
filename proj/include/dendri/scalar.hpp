#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dendri {

using Rational = boost::multiprecision::cpp_rational;

/// The ground field: the rationals or a prime field GF(p) with p < 2^16.
class Field {
public:
    enum class Kind { rational, prime };

    static Field rational() { return Field(Kind::rational, 0); }
    /// Throws std::invalid_argument unless p is a prime below 65536.
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::rational; }
    /// Modulus for GF(p); 0 for the rationals.
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Throws PreconditionFailed when the field has characteristic 2.
void require_char_not_two(const Field& f, const char* where);

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(const Field& f, long long v);
    Scalar(const Field& f, const Rational& v);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    /// Parses "a", "-a", "a/b" exactly in the given field ("5" in GF(3) is 2;
    /// "-3/6" over Q is -1/2). Throws std::invalid_argument on malformed text,
    /// zero denominators and denominators divisible by p.
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical exact text: "p/q" or "n" over Q, the residue over GF(p).
    std::string to_string() const;

    /// Residue in [0, p); only valid for prime-field scalars.
    std::uint32_t residue() const;
    /// Value over Q; only valid for rational scalars.
    const Rational& rational() const;

    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::rational();
    Rational q_{0};
    std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dendri
