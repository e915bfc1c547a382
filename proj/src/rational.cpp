#include "cospan/rational.hpp"

#include <cctype>

#include "cospan/errors.hpp"

namespace cospan {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);

  const std::size_t num_start = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!all_digits(num, num_start, num.size()) || !all_digits(den, 0, den.size())) {
    throw ParseError("rational", "malformed literal '" + text + "'");
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    throw ParseError("rational", "malformed literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
    throw ParseError("rational", "zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

double rational_to_double(const Rational& value) { return value.get_d(); }

}  // namespace cospan
