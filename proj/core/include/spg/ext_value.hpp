#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "spg/errors.hpp"

namespace spg {

using Weight = std::int64_t;

/// An element of Z extended with -inf and +inf.
///
/// Ordering is -inf < every finite value < +inf. Addition of a finite weight
/// leaves infinities unchanged; finite sums are overflow-checked.
class ExtValue {
 public:
  enum class Kind : std::uint8_t { MinusInf, Finite, PlusInf };

  constexpr ExtValue() = default;

  static constexpr ExtValue finite(Weight v) { return ExtValue(Kind::Finite, v); }
  static constexpr ExtValue plus_inf() { return ExtValue(Kind::PlusInf, 0); }
  static constexpr ExtValue minus_inf() { return ExtValue(Kind::MinusInf, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  constexpr bool is_minus_inf() const { return kind_ == Kind::MinusInf; }

  /// Finite payload; throws if the value is infinite.
  Weight value() const {
    if (!is_finite()) {
      throw DomainError("ExtValue::value() called on " + to_string());
    }
    return value_;
  }

  ExtValue plus(Weight w) const {
    if (!is_finite()) return *this;
    Weight sum = 0;
    if (__builtin_add_overflow(value_, w, &sum)) {
      throw DomainError("integer overflow in value arithmetic");
    }
    return finite(sum);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::MinusInf: return "-inf";
      case Kind::PlusInf: return "+inf";
      case Kind::Finite: break;
    }
    return std::to_string(value_);
  }

  // Kind is declared first so the defaulted comparison orders by kind, then
  // by payload (which is 0 for both infinities).
  friend constexpr auto operator<=>(const ExtValue&, const ExtValue&) = default;

 private:
  constexpr ExtValue(Kind k, Weight v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::Finite;
  Weight value_ = 0;
};

}  // namespace spg
