#ifndef SCC_RATIONAL_HPP_
#define SCC_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace scc {

using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" form, always with a denominator ("2/1").
std::string FormatRational(const Rational& value);

// Short form for humans: "2" or "101/100".
std::string DisplayRational(const Rational& value);

// Accepts "num/den" or a bare integer. Throws InvalidInput.
Rational ParseRational(std::string_view text);

}  // namespace scc

#endif  // SCC_RATIONAL_HPP_
