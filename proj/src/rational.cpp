#include "tvb/rational.hpp"

namespace tvb {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw std::invalid_argument("bad rational: '" + s + "'");
    return Rat(mpz_class(s));
  }
  std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
  if (!valid_integer_token(ns) || !valid_integer_token(ds))
    throw std::invalid_argument("bad rational: '" + s + "'");
  mpz_class den(ds);
  if (den == 0) throw std::invalid_argument("bad rational (zero denominator): '" + s + "'");
  return Rat(mpz_class(ns), den);
}

std::string Rat::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::pretty() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return str();
}

}  // namespace tvb
