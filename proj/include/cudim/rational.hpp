#pragma once

// Exact non-negative rationals extended by +infinity.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace cudim {

using Rational = boost::multiprecision::cpp_rational;

class ExtRational {
 public:
  ExtRational() = default;  // zero
  ExtRational(Rational q) : value_(std::move(q)) {}  // NOLINT: implicit by design
  ExtRational(long long n) : value_(Rational(n)) {}  // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_zero() const { return value_ && *value_ == 0; }
  // Precondition: finite.
  const Rational& value() const { return *value_; }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtRational(*a.value_ + *b.value_);
  }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b) {
    if (a.is_infinite())
      return b.is_infinite() ? std::strong_ordering::equal
                             : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    int c = a.value_->compare(*b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  /// "inf", "n" or "p/q" in lowest terms.
  std::string str() const;
  /// Accepts "inf", an integer, or "p/q". Throws std::invalid_argument.
  static ExtRational parse(std::string_view text);

  std::size_t hash() const;

 private:
  std::optional<Rational> value_ = Rational(0);
};

}  // namespace cudim
