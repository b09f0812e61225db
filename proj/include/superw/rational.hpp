#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superw {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational. The representation is
/// canonical: a value is stored inline if and only if it fits, so equality
/// is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}            // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v) {}      // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p" or "p/q" (q nonzero). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void assign(mpq_class&& q);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace superw

template <>
struct std::hash<superw::Rational> {
  std::size_t operator()(const superw::Rational& r) const noexcept { return r.hash(); }
};
