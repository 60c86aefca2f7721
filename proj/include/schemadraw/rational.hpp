#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace schemadraw {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRational& q) { return boost::multiprecision::denominator(q); }

// Number of bits in |v|; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

// Storage cost of a rational in lowest terms: bits of numerator plus bits
// of denominator.
inline std::size_t bit_length(const BigRational& q) {
    return bit_length(rat_num(q)) + bit_length(rat_den(q));
}

inline double to_double(const BigRational& q) { return static_cast<double>(q); }

inline std::string to_string(const BigRational& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline int sign_of(const BigRational& q) { return q.sign(); }
inline int sign_of(const BigInt& v) { return v.sign(); }

} // namespace schemadraw
