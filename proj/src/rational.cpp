#include "arrkit/rational.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <stdexcept>

namespace arrkit {

namespace {

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = (hi << 64) + static_cast<unsigned long>(u & ~0ull);
  return neg ? mpz_class(-out) : out;
}

bool fits_ll(__int128 v) { return v >= -static_cast<__int128>(LLONG_MAX) && v <= LLONG_MAX; }

}  // namespace

void Rational::set_i128(__int128 n, __int128 d) {
  if (d == 0) abort();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    store_coprime(0, 1);
    return;
  }
  __int128 g = gcd_i128(n, d);
  store_coprime(n / g, d / g);
}

void Rational::store_coprime(__int128 num, __int128 den) {
  if (fits_ll(num) && fits_ll(den)) {
    n_ = static_cast<long long>(num);
    d_ = static_cast<long long>(den);
    delete big_;
    big_ = nullptr;
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  // inputs are coprime with positive denominator, so q is canonical
  if (big_)
    *big_ = q;
  else
    big_ = new mpq_class(q);
}

void Rational::assign_big(const mpq_class& q) {
  delete big_;
  big_ = new mpq_class(q);
  big_->canonicalize();
  maybe_demote();
}

void Rational::maybe_demote() {
  if (!big_) return;
  const mpz_class& num = big_->get_num();
  const mpz_class& den = big_->get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    n_ = num.get_si();
    d_ = den.get_si();
    delete big_;
    big_ = nullptr;
  }
}

Rational Rational::from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = t.find('/');
  std::string ns = slash == std::string::npos ? t : t.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : t.substr(slash + 1);
  long long n = 0, d = 1;
  auto rn = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  auto rd = std::from_chars(ds.data(), ds.data() + ds.size(), d);
  bool ok = rn.ec == std::errc() && rn.ptr == ns.data() + ns.size() &&
            rd.ec == std::errc() && rd.ptr == ds.data() + ds.size();
  if (ok) {
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r;
    r.set_i128(n, d);
    return r;
  }
  // out of int64 range (or malformed); let GMP take a look
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r;
  r.assign_big(q);
  return r;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(n_);
  if (d_ != 1) s += "/" + std::to_string(d_);
  return s;
}

}  // namespace arrkit
