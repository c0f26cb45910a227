#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hwcone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Renders p/q, omitting the denominator when it is 1.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s); }

}  // namespace hwcone
