#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qops/formal_sum.hpp"

namespace qops {

// Exact coefficient rings for prestack evaluation: rationals, prime fields
// with runtime modulus, and dual numbers over either.

using Rational = boost::multiprecision::cpp_rational;

inline Rational ring_inverse(const Rational& x) {
  QOPS_CHECK(x != 0, "rational: division by zero");
  return 1 / x;
}
inline bool ring_invertible(const Rational& x) { return x != 0; }

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v, long long p) : p_(p) {
    QOPS_CHECK(p >= 0 && p != 1, "Fp: modulus");
    v_ = p ? ((v % p) + p) % p : v;
  }
  long long value() const { return v_; }
  long long modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, a.merged(b)); }
  friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.v_, a.merged(b)); }
  friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v_ * b.v_, a.merged(b)); }
  Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) {
    long long p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return a.v_ == b.v_;
    auto red = [p](long long v) { return ((v % p) + p) % p; };
    return red(a.v_) == red(b.v_);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  // a zero-modulus Fp is the neutral literal 0/1 used before the modulus is
  // known (e.g. from integer literals)
  long long merged(const Fp& o) const {
    QOPS_CHECK(p_ == 0 || o.p_ == 0 || p_ == o.p_, "Fp: modulus mismatch");
    return p_ ? p_ : o.p_;
  }
  long long v_, p_;

 public:
  Fp(int v) : v_(v), p_(0) {}  // literals 0/1 before a modulus is attached
};

inline Fp ring_inverse(const Fp& x) {
  long long p = x.modulus();
  QOPS_CHECK(p > 1 && x.value() % p != 0, "Fp: not invertible");
  long long r = 1, b = x.value() % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return Fp(r, p);
}
inline bool ring_invertible(const Fp& x) { return x.modulus() > 1 && x.value() % x.modulus() != 0; }

// Dual numbers K[eps]/(eps^2).
template <typename K>
struct Dual {
  K a{0}, b{0};
  Dual() = default;
  Dual(int v) : a(v), b(0) {}
  Dual(K a0, K b0) : a(std::move(a0)), b(std::move(b0)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  Dual operator-() const { return {-a, -b}; }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

template <typename K>
inline Dual<K> ring_inverse(const Dual<K>& x) {
  K ia = ring_inverse(x.a);
  return {ia, -(ia * ia * x.b)};
}
template <typename K>
inline bool ring_invertible(const Dual<K>& x) {
  return ring_invertible(x.a);
}

// Image of an integer coefficient in the ring.
template <typename K>
inline K ring_from_coeff(const Coeff& c) {
  K out{0};
  K pw{1};
  Coeff n = c >= 0 ? c : -c;
  while (n != 0) {
    if ((n & 1) != 0) out += pw;
    pw += pw;
    n >>= 1;
  }
  if (c < 0) out = -out;
  return out;
}

template <>
inline Rational ring_from_coeff<Rational>(const Coeff& c) {
  return Rational(c);
}

}  // namespace qops
