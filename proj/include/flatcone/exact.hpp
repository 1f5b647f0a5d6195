#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flatcone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

/// Python-style modulus: result in [0, m) for m > 0.
long long mod_floor(long long a, long long m);

std::string to_string(const Integer& z);
/// Always "p/q", including q == 1.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q".
Rational parse_rational(std::string_view text);

IntVector to_integers(const std::vector<long long>& v);

/// Divides by the gcd of the entries; sign preserved. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

/// Multiplies by the lcm of the denominators and then makes the result primitive.
IntVector clear_denominators(const RatVector& v);

RatVector to_rationals(const IntVector& v);

}  // namespace flatcone
