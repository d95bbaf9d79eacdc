#include "radix/integer.hpp"

#include <stdexcept>

namespace radix {

Integer mod_floor(const Integer& a, const Integer& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::invalid_argument("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

}  // namespace radix
