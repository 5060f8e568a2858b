#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace szeta {

/// 50 decimal digits. Used where exact inputs would otherwise lose most of
/// their digits to cancellation (fixtures, tails, Shanks tables).
using Wide = boost::multiprecision::cpp_bin_float_50;

}  // namespace szeta
