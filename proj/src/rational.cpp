#include "superw/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace superw {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 mag = abs128(v);
  auto hi = static_cast<unsigned long>(mag >> 64);
  auto lo = static_cast<unsigned long>(mag & ~static_cast<unsigned long>(0));
  mpz_class out = hi;
  out <<= 64;
  out += lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in literal: " + s);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void Rational::assign(mpq_class&& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign(std::move(q));
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.assign_wide(-static_cast<i128>(num_), den_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_wide(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      assign_wide(n, d);
    }
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    i128 n = static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    assign_wide(n, d);
    return *this;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return out;
}

}  // namespace superw
