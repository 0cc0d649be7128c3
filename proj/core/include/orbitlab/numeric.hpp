// Exact arithmetic types. All rank, kernel and normal-form computations in
// this library run over arbitrary-precision integers or rationals; floating
// point appears only in DOT layout hints.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace orbitlab
