#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigrid {

/// Exact arbitrary-precision rational, always stored reduced with a
/// positive denominator. Thin value wrapper over GMP's mpq_class; the
/// canonical text form is "p/q" in base 10 (denominator always present).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num) : value_(num) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p" or "p/q" (base 10). Throws std::invalid_argument on
    /// malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_positive() const { return sgn(value_) > 0; }
    bool is_zero() const { return sgn(value_) == 0; }

    double to_double() const { return value_.get_d(); }

    /// Canonical "p/q" form, denominator included even when it is 1.
    std::string to_string() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\": " + why);
    };
    if (text.empty()) fail("empty");
    const auto slash = text.find('/');
    const std::string num_str(text.substr(0, slash));
    std::string den_str = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    mpz_class num, den;
    if (num_str.empty() || num.set_str(num_str, 10) != 0) fail("bad numerator");
    if (den_str.empty() || den.set_str(den_str, 10) != 0) fail("bad denominator");
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
}

}  // namespace trigrid
