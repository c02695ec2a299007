#include "dendri/scalar.hpp"

#include "dendri/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dendri {

using boost::multiprecision::cpp_int;

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 16)) throw std::invalid_argument("GF(p) modulus must be below 65536");
    if (!is_prime(p)) throw std::invalid_argument("GF(p) modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("rational") : "gf " + std::to_string(p_);
}

void require_char_not_two(const Field& f, const char* where) {
    if (f.characteristic() == 2) {
        throw PreconditionFailed(std::string(where) + " needs a field of characteristic other than 2");
    }
}

namespace {

std::uint32_t reduce(const cpp_int& v, std::uint32_t p) {
    cpp_int m = v % p;
    if (m < 0) m += p;
    return m.convert_to<std::uint32_t>();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(const Field& f, long long v) : field_(f) {
    if (f.is_rational()) {
        q_ = v;
    } else {
        r_ = reduce(cpp_int(v), f.modulus());
    }
}

Scalar::Scalar(const Field& f, const Rational& v) : field_(f) {
    if (f.is_rational()) {
        q_ = v;
        return;
    }
    const std::uint32_t p = f.modulus();
    const std::uint32_t den = reduce(denominator(v), p);
    if (den == 0) throw std::invalid_argument("denominator divisible by the field characteristic");
    const std::uint64_t num = reduce(numerator(v), p);
    r_ = static_cast<std::uint32_t>(num * mod_inverse(den, p) % p);
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    } else if (s.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
        negative = true;
        s.remove_prefix(3);
    }
    const auto slash = s.find('/');
    const std::string_view num_text = s.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto all_digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    }
    cpp_int num{std::string(num_text)};
    cpp_int den{std::string(den_text)};
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Scalar(f, Rational(num, den));
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return std::to_string(r_);
    if (denominator(q_) == 1) return numerator(q_).str();
    return numerator(q_).str() + "/" + denominator(q_).str();
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational()) throw std::logic_error("residue() on a rational scalar");
    return r_;
}

const Rational& Scalar::rational() const {
    if (!field_.is_rational()) throw std::logic_error("rational() on a prime-field scalar");
    return q_;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) {
        throw FieldMismatch("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out = *this;
    if (field_.is_rational()) {
        out.q_ = 1 / q_;
    } else {
        out.r_ = mod_inverse(r_, field_.modulus());
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ -= o.q_;
    } else {
        const std::uint32_t p = field_.modulus();
        r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + p - o.r_) % p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ *= o.q_;
    } else {
        r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (field_.is_rational()) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = field_.modulus() - r_;
    }
    return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dendri
