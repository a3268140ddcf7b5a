#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chernum {

// All coefficient arithmetic in this library is exact. Integers are
// arbitrary-precision; rationals are always kept in lowest terms with a
// positive denominator (guaranteed by the backend).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a cross-checked identity fails. This signals an implementation
// bug rather than bad input, and maps to a distinct CLI exit code.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

inline Int int_pow(const Int& base, int e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Quotient of an exact division; a remainder signals an implementation bug
// in the caller, hence VerificationError.
inline Int divide_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("divide_exact: division by zero");
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw VerificationError("divide_exact: inexact division");
    return q;
}

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }

inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Decimal string forms used by the JSON schemas ("p" or "p/q").
inline std::string coeff_string(const Int& v) { return v.str(); }

inline std::string coeff_string(const Rational& v) {
    if (is_integral(v)) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a valid integer: '" + s + "'");
    }
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a valid rational: '" + s + "'");
    }
}

} // namespace chernum
