#include "apolar/rational.hpp"

#include "apolar/errors.hpp"

#include <cctype>

namespace apolar {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  return make_rational(p, q);
}

Rational gen_binomial(const Rational& a, unsigned b) {
  Rational result = 1;
  for (unsigned i = 0; i < b; ++i) {
    result *= a - static_cast<long>(i);
    result /= static_cast<long>(i + 1);
  }
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Rational r = gen_binomial(Rational(n), static_cast<unsigned>(k));
  return r.get_num();
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Integer> primitive_integer_vector(const Vector& v) {
  Integer lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer x = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  if (g == 0) return out;
  int sign = 1;
  for (const auto& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) x = x / g * sign;
  return out;
}

}  // namespace apolar
