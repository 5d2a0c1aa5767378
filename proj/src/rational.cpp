#include "dehn/rational.hpp"

#include <cctype>

namespace dehn {

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
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.erase(s.begin());
  }

  auto slash = s.find('/');
  Rational value;
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw std::invalid_argument("bad rational literal: " + text);
    BigInt den(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(BigInt(p), den);
  } else {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string ip = s.substr(0, dot);
      std::string fp = s.substr(dot + 1);
      if (ip.empty()) ip = "0";
      if (fp.empty()) fp = "0";
      if (!all_digits(ip) || !all_digits(fp)) throw std::invalid_argument("bad rational literal: " + text);
      BigInt scale = 1;
      for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
      value = Rational(BigInt(ip) * scale + BigInt(fp), scale);
    } else {
      if (!all_digits(s)) throw std::invalid_argument("bad rational literal: " + text);
      value = Rational(BigInt(s));
    }
  }
  return neg ? -value : value;
}

std::string rational_to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

double rational_to_double(const Rational& v) { return static_cast<double>(v); }

}  // namespace dehn
