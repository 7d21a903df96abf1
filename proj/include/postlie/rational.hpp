#ifndef POSTLIE_RATIONAL_HPP
#define POSTLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace postlie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator as long as construction goes through the helpers below.
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// Accepts "p", "-p", "p/q" with optional sign; rejects zero denominators,
/// decimals and trailing garbage.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int(num)) throw ParseError("bad rational '" + std::string(text) + "'");
  mpz_class p(strip_plus(num), 10);
  mpz_class q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_int(den) || den.front() == '-' || den.front() == '+')
      throw ParseError("bad rational '" + std::string(text) + "'");
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational make_rational(long p, long q = 1) {
  if (q == 0) throw Error("zero denominator");
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

}  // namespace postlie

#endif  // POSTLIE_RATIONAL_HPP
