#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Invariants: gcd(|num|, den) = 1 and den > 0; zero is 0/1.
 * All arithmetic and comparisons are exact — there is no floating point
 * anywhere in this library.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amp {

using BigInt = boost::multiprecision::cpp_int;

struct DivisionByZeroValue : std::runtime_error {
    DivisionByZeroValue() : std::runtime_error("division by zero value") {}
};

struct NumberParseError : std::runtime_error {
    explicit NumberParseError(const std::string& what) : std::runtime_error("bad numeric literal: " + what) {}
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}             // NOLINT: implicit by design
    Rational(long long n) : num_(n), den_(1) {}       // NOLINT
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    /// Exact conversion of a literal: integer ("20"), decimal ("0.3" -> 3/10),
    /// or fraction ("3/10"). Never goes through floating point.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZeroValue();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (num_ == 0) throw DivisionByZeroValue();
        return Rational(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void reduce();

    BigInt num_;
    BigInt den_;  // always > 0
};

}  // namespace amp
