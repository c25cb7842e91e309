#include "brf/rational.hpp"

#include <cctype>
#include <cstddef>

#include "brf/errors.hpp"

namespace brf {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  require(!s.empty(), Errc::parse_error, "empty rational literal");
  std::string sign;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') sign = "-";
    s = s.substr(1);
  }
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    require(all_digits(num) && all_digits(den), Errc::parse_error,
            "bad rational literal: " + text);
    Rational r(sign + num + "/" + den);
    require(r.get_den() != 0, Errc::parse_error, "zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    require(all_digits(ip) && (fp.empty() || all_digits(fp)), Errc::parse_error,
            "bad decimal literal: " + text);
    mpz_class digits(ip + fp);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rational r(digits, scale);
    r.canonicalize();
    if (!sign.empty()) r = -r;
    return r;
  }
  require(all_digits(s), Errc::parse_error, "bad rational literal: " + text);
  return Rational(sign + s);
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace brf
