#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qkk {

/// 50 significant decimal digits; used where double runs into its noise floor.
using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

}  // namespace qkk
