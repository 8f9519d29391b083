#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace knotconc {

using Int = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with positive denominator.
// Backed by an arbitrary-precision integer pair; no floating point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}         // NOLINT
    Rational(const Int& num, const Int& den);

    const Int num() const { return boost::multiprecision::numerator(v_); }
    const Int den() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "-3/4", or just "-3" when the denominator is 1
    std::string str() const;
    // always "num/den", e.g. "0/1"; the serialization form
    std::string fraction_str() const;
    // accepts both forms produced above
    static Rational parse(const std::string& s);

    // floor / round-to-nearest (ties away from zero); exact
    Int floor() const;
    Int round() const;

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

} // namespace knotconc
