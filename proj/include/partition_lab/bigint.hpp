#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partition_lab {

// Exact integer type used for counts and series coefficients.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace partition_lab
