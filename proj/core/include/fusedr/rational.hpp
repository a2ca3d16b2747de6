#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fusedr {

/// Raised when a guarded denominator vanishes or a parameter leaves the
/// admissible domain. The message names the offending factor exactly.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; division by zero throws DomainError
/// instead of producing a sentinel.
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(long n) : v_(n) {}  // NOLINT: integers convert implicitly
  ExactScalar(long num, long den);
  explicit ExactScalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading sign. Anything else
  /// (decimals, whitespace, empty) is rejected.
  static ExactScalar parse(std::string_view text);

  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Integer power; negative exponents invert (zero base throws).
  ExactScalar pow(long e) const;

  /// "p/q" in lowest terms, "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Deformation parameter q (nonzero) with t = q^2 cached.
struct QParams {
  ExactScalar q;
  ExactScalar t;
  explicit QParams(ExactScalar q_value);
};

}  // namespace fusedr
