#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace djg {

// Exact scalars. Rat is always stored reduced with positive denominator;
// equality is structural on the reduced form.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// "p/q" with q > 0 and gcd(p,q) = 1, or just "p" when q = 1.
std::string rat_to_string(const Rat& x);

// Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
// The result is normalized regardless of the input form.
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace djg
