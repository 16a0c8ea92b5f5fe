#include "djg/rational.hpp"

#include <cctype>

namespace djg {

std::string rat_to_string(const Rat& x) {
  Int n = rat_num(x);
  Int d = rat_den(x);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace {

bool parse_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Int(s);
  return true;
}

}  // namespace

std::optional<Rat> rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  Int num, den;
  if (slash == std::string::npos) {
    if (!parse_int(s, num)) return std::nullopt;
    return Rat(num);
  }
  if (!parse_int(s.substr(0, slash), num)) return std::nullopt;
  if (!parse_int(s.substr(slash + 1), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace djg
