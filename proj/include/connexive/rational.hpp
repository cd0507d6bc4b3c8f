#ifndef CONNEXIVE_RATIONAL_HPP
#define CONNEXIVE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "connexive/error.hpp"

namespace connexive {

// All arithmetic in the engine is exact.  Verdicts are yes/no; a floating
// tolerance could flip a table row, so floats never appear.
using Rat = boost::multiprecision::mpq_rational;

// Accepts "p/q" or an integer, optionally signed.  Always canonical on
// return (the raw string constructor of mpq does not reduce and does not
// reject a zero denominator, so parsing is done by hand).
inline Rat parse_rational(const std::string& text) {
  auto bad = [&]() -> ParseError {
    return ParseError("invalid rational '" + text + "'", 0, {"p/q", "integer"});
  };
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text)) throw bad();
    return Rat(boost::multiprecision::mpz_int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw bad();
  boost::multiprecision::mpz_int n(num), d(den);
  if (d == 0) throw DomainError("zero denominator in rational '" + text + "'");
  return Rat(n) / Rat(d);  // mpq division canonicalizes
}

// Lowest terms, "p/q" or plain integer when q == 1.
inline std::string rat_str(const Rat& r) { return r.str(); }

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

}  // namespace connexive

#endif  // CONNEXIVE_RATIONAL_HPP
