#include "polystack/rational.hpp"

#include "polystack/errors.hpp"

#include <cctype>

namespace polystack {

Rational rat(long num, long den) {
  if (den == 0)
    throw std::invalid_argument("rat: zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

namespace {

bool valid_integer_token(const std::string& tok) {
  std::size_t i = 0;
  if (i < tok.size() && (tok[i] == '-' || tok[i] == '+'))
    ++i;
  if (i == tok.size())
    return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den))
    fail(ErrorKind::Parse, "malformed rational: '" + text + "'");
  // mpz_set_str rejects a leading '+', so drop it here.
  if (num.front() == '+')
    num.erase(0, 1);
  if (den.front() == '+')
    den.erase(0, 1);
  Rational value{mpz_class(num), mpz_class(den)};
  if (value.get_den() == 0)
    fail(ErrorKind::Parse, "zero denominator in rational: '" + text + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace polystack
