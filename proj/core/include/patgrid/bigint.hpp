#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace patgrid {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);
BigInt power(const BigInt& base, unsigned exponent);
inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace patgrid
