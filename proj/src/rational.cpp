#include "cudim/rational.hpp"

#include <functional>
#include <stdexcept>

namespace cudim {

std::string ExtRational::str() const {
  if (is_infinite()) return "inf";
  const auto& q = *value_;
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(text))
      throw std::invalid_argument("not a rational: " + std::string(text));
    return ExtRational(Rational(boost::multiprecision::cpp_int(std::string(text))));
  }
  auto p = text.substr(0, slash), q = text.substr(slash + 1);
  if (!is_digits(p) || !is_digits(q))
    throw std::invalid_argument("not a rational: " + std::string(text));
  boost::multiprecision::cpp_int den(std::string{q});
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return ExtRational(Rational(boost::multiprecision::cpp_int(std::string{p}), den));
}

std::size_t ExtRational::hash() const {
  if (is_infinite()) return 0x9e3779b97f4a7c15ull;
  return std::hash<Rational>{}(*value_);
}

}  // namespace cudim
