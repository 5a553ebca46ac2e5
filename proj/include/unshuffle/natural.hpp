#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unshuffle {

/// Exact group orders. 26!·2^26 already needs more than 64 bits.
using Natural = boost::multiprecision::cpp_int;

Natural factorial(unsigned n);
Natural pow2(unsigned e);
inline std::string to_decimal(const Natural& x) { return x.str(); }

}  // namespace unshuffle
