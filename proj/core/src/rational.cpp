#include "causalchop/rational.hpp"

#include <ostream>

namespace causalchop {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", "");
  const auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("malformed rational '" + text + "'", "");
    size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw ParseError("malformed rational '" + text + "'", "");
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw ParseError("malformed rational '" + text + "'", "");
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(mpq_class(mpz_class(text), mpz_class(1)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", "");
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow2(int k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(k >= 0 ? k : -k));
  return k >= 0 ? Rational(mpq_class(p)) : Rational(mpz_class(1), p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace causalchop
