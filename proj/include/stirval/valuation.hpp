#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

namespace stirval {

/// Raised when a computation would exceed a configured size/precision cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A p-adic valuation: an integer (negative values are poles) or +infinity.
/// nu_p(0) is infinity; it is a dedicated state, never a sentinel number.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long v) : inf_(false), v_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.inf_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return inf_; }

  long value() const {
    if (inf_) throw std::logic_error("Valuation::value() on infinity");
    return v_;
  }

  /// Decimal string, or "inf".
  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend constexpr bool operator<(Valuation a, Valuation b) {
    if (a.inf_) return false;
    return b.inf_ || a.v_ < b.v_;
  }
  friend constexpr bool operator<=(Valuation a, Valuation b) { return a < b || a == b; }
  friend constexpr bool operator>(Valuation a, Valuation b) { return b < a; }
  friend constexpr bool operator>=(Valuation a, Valuation b) { return b <= a; }

  friend constexpr bool operator==(Valuation a, long b) { return !a.inf_ && a.v_ == b; }
  friend constexpr bool operator==(long a, Valuation b) { return b == a; }

  /// Sum of valuations (values of a product); infinity absorbs.
  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

  friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.str(); }

 private:
  bool inf_ = false;
  long v_ = 0;
};

}  // namespace stirval
