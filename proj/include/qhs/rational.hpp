#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qhs {

// Exact scalar for all linear algebra.  Everything in the engine is a
// rational number; there is no floating point anywhere.
using Rat = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

} // namespace qhs
