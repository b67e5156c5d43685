#ifndef HYPERFIN_RATIONAL_HPP
#define HYPERFIN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace hyperfin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline std::string to_string(const Rational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

/// Rational enclosure 2.718281828 < e < 2.718281829, tight enough to
/// certify every comparison this project makes.
inline Rational euler_lower() { return Rational(BigInt(2718281828), BigInt(1000000000)); }
inline Rational euler_upper() { return Rational(BigInt(2718281829), BigInt(1000000000)); }

}  // namespace hyperfin

#endif
