#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <gmpxx.h>

namespace arrkit {

// Exact rational number. Small values (numerator and denominator fitting in
// int64) are kept inline; anything larger is promoted to a heap-allocated
// mpq_class. All intermediate products on the inline path go through
// __int128, so no operation ever wraps.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : n_(n) {}
  Rational(int n) : n_(n) {}
  Rational(long long n, long long d) { set_i128(n, d); }
  Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = new mpq_class(*o.big_);
  }
  Rational(Rational&& o) noexcept : n_(o.n_), d_(o.d_), big_(o.big_) {
    o.big_ = nullptr;
  }
  Rational& operator=(const Rational& o) {
    if (this == &o) return *this;
    n_ = o.n_;
    d_ = o.d_;
    mpq_class* nb = o.big_ ? new mpq_class(*o.big_) : nullptr;
    delete big_;
    big_ = nb;
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    n_ = o.n_;
    d_ = o.d_;
    delete big_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
  }
  ~Rational() { delete big_; }

  static Rational from_string(const std::string& s);

  bool is_small() const { return big_ == nullptr; }
  bool is_zero() const { return big_ ? big_->get_num() == 0 : n_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (n_ == 1 && d_ == 1); }
  bool is_integer() const {
    return big_ ? big_->get_den() == 1 : d_ == 1;
  }

  int sign() const {
    if (big_) return sgn(*big_);
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
  }

  // Only valid when is_small(); used by the mod-p layer.
  long long num_small() const { return n_; }
  long long den_small() const { return d_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    // n_/d_ is kept reduced with d_ > 0, so this is already canonical;
    // gmpxx has no long long constructor, and long is 64-bit here
    return mpq_class(mpz_class(static_cast<long>(n_)),
                     mpz_class(static_cast<long>(d_)));
  }

  // Integer value; requires is_integer() and a small magnitude.
  long long to_ll() const {
    if (!big_) return n_;
    return big_->get_num().get_si();
  }

  Rational operator-() const {
    Rational r(*this);
    r.negate();
    return r;
  }
  void negate() {
    if (big_) {
      *big_ = -*big_;
      maybe_demote();
    } else {
      n_ = -n_;
    }
  }

  Rational& operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
      long long g = gcd_ll(d_, o.d_);
      long long dg = d_ / g;
      __int128 num = static_cast<__int128>(n_) * (o.d_ / g) +
                     static_cast<__int128>(o.n_) * dg;
      __int128 den = static_cast<__int128>(dg) * o.d_;
      // remaining common factor divides g
      if (g > 1) {
        long long r = static_cast<long long>(num % g);
        long long g2 = gcd_ll(r < 0 ? -r : r, g);
        if (g2 > 1) {
          num /= g2;
          den /= g2;
        }
      }
      store_coprime(num, den);
      return *this;
    }
    promote();
    *big_ += o.big_ ? *o.big_ : o.to_mpq();
    maybe_demote();
    return *this;
  }

  Rational& operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
      long long g = gcd_ll(d_, o.d_);
      long long dg = d_ / g;
      __int128 num = static_cast<__int128>(n_) * (o.d_ / g) -
                     static_cast<__int128>(o.n_) * dg;
      __int128 den = static_cast<__int128>(dg) * o.d_;
      if (g > 1) {
        long long r = static_cast<long long>(num % g);
        long long g2 = gcd_ll(r < 0 ? -r : r, g);
        if (g2 > 1) {
          num /= g2;
          den /= g2;
        }
      }
      store_coprime(num, den);
      return *this;
    }
    promote();
    *big_ -= o.big_ ? *o.big_ : o.to_mpq();
    maybe_demote();
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      if (n_ == 0 || o.n_ == 0) {
        n_ = 0;
        d_ = 1;
        return *this;
      }
      long long g1 = gcd_ll(n_ < 0 ? -n_ : n_, o.d_);
      long long g2 = gcd_ll(o.n_ < 0 ? -o.n_ : o.n_, d_);
      __int128 num = static_cast<__int128>(n_ / g1) * (o.n_ / g2);
      __int128 den = static_cast<__int128>(d_ / g2) * (o.d_ / g1);
      store_coprime(num, den);
      return *this;
    }
    promote();
    *big_ *= o.big_ ? *o.big_ : o.to_mpq();
    maybe_demote();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (!big_ && !o.big_) {
      if (o.n_ == 0) abort();
      long long g1 = gcd_ll(n_ < 0 ? -n_ : n_, o.n_ < 0 ? -o.n_ : o.n_);
      long long g2 = gcd_ll(o.d_, d_);
      __int128 num = static_cast<__int128>(n_ / g1) * (o.d_ / g2);
      __int128 den = static_cast<__int128>(d_ / g2) * (o.n_ / g1);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      store_coprime(num, den);
      return *this;
    }
    promote();
    *big_ /= o.big_ ? *o.big_ : o.to_mpq();
    maybe_demote();
    return *this;
  }

  // this += a*b, the inner-loop elimination primitive
  void add_mul(const Rational& a, const Rational& b) {
    Rational t(a);
    t *= b;
    *this += t;
  }
  void sub_mul(const Rational& a, const Rational& b) {
    Rational t(a);
    t *= b;
    *this -= t;
  }

  Rational inverse() const {
    Rational r(1);
    r /= *this;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.to_mpq() == b.to_mpq();
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.n_) * b.d_ <
             static_cast<__int128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  std::string str() const;

private:
  long long n_ = 0;
  long long d_ = 1;
  mpq_class* big_ = nullptr;

  static long long gcd_ll(long long a, long long b) {
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static __int128 gcd_i128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void set_i128(__int128 n, __int128 d);
  // num/den coprime, den > 0
  void store_coprime(__int128 num, __int128 den);
  void assign_big(const mpq_class& q);
  void promote() {
    if (!big_) big_ = new mpq_class(to_mpq());
  }
  void maybe_demote();
};

inline const Rational& q_zero() {
  static const Rational z(0);
  return z;
}
inline const Rational& q_one() {
  static const Rational o(1);
  return o;
}

}  // namespace arrkit
