#include "knotconc/rational.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {

Rational::Rational(const Int& num, const Int& den) {
    if (den.is_zero()) throw Error("rational: zero denominator");
    // cpp_rational's component constructor rejects negative denominators
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(Int(-num), Int(-den));
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_.is_zero()) throw Error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
}

std::string Rational::fraction_str() const {
    return num().str() + "/" + den().str();
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { return ParseError("not a fraction: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Int Rational::floor() const {
    Int q = num() / den();
    if (num() < 0 && q * den() != num()) --q;
    return q;
}

Int Rational::round() const {
    // nearest integer, halves rounded away from zero
    Int n = num(), d = den();
    Int q = n / d, r = n % d;
    if (2 * boost::multiprecision::abs(r) >= d) q += (n < 0) ? -1 : 1;
    return q;
}

} // namespace knotconc
