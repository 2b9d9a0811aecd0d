#include "redchern/rational.hpp"

#include <cctype>

#include "redchern/errors.hpp"

namespace redchern {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  Rational q;
  q.get_num() = Integer(strip_plus(num));
  q.get_den() = Integer(strip_plus(den));
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace redchern
