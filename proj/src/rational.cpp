#include "scc/rational.hpp"

#include "scc/errors.hpp"

namespace scc {

std::string FormatRational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string DisplayRational(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return FormatRational(value);
}

Rational ParseRational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw InvalidInput("empty rational component");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw InvalidInput("bad rational: " + std::string(text));
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw InvalidInput("bad rational: " + std::string(text));
      }
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return boost::multiprecision::cpp_int(digits);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator: " + std::string(text));
  return Rational(num, den);
}

}  // namespace scc
