#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hfseq {

// All quantities in this library are exact integers with no size cap.
using Integer = boost::multiprecision::cpp_int;

// Floor of the square root of a non-negative integer.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

}  // namespace hfseq
