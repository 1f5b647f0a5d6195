#include "flatcone/exact.hpp"

namespace flatcone {

Integer floor_of(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g = boost::multiprecision::gcd(a, b);
  return g < 0 ? Integer(-g) : g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer l = boost::multiprecision::lcm(a, b);
  return l < 0 ? Integer(-l) : l;
}

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error("bad integer in rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error("bad digit in rational '" + std::string(text) + "'");
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

IntVector to_integers(const std::vector<long long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

IntVector make_primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd_of(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm_of(l, denominator_of(q));
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(numerator_of(q) * (l / denominator_of(q)));
  return make_primitive(std::move(out));
}

RatVector to_rationals(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace flatcone
