#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qops {

// Exact integer coefficients. All operad-level identities are integral.
using Coeff = boost::multiprecision::cpp_int;

#define QOPS_CHECK(cond, msg)                                  \
  do {                                                         \
    if (!(cond)) throw std::logic_error(std::string("qops: ") + (msg)); \
  } while (0)

// Integer-coefficient linear combination over a canonically ordered basis.
// T must provide `std::string key() const`, a canonical encoding that is
// unique per basis element; term order is the byte order of keys, which is
// also the serialization order.
template <typename T>
class FormalSum {
 public:
  using Terms = std::map<std::string, std::pair<T, Coeff>>;

  FormalSum() = default;
  explicit FormalSum(const T& t, Coeff c = 1) { add(t, c); }

  void add(const T& t, const Coeff& c) {
    if (c == 0) return;
    std::string k = t.key();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::make_pair(t, c));
    } else {
      it->second.second += c;
      if (it->second.second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, tc] : o.terms_) add(tc.first, tc.second);
    return *this;
  }
  FormalSum operator+(const FormalSum& o) const {
    FormalSum r = *this;
    r += o;
    return r;
  }
  FormalSum operator-() const { return *this * Coeff(-1); }
  FormalSum operator-(const FormalSum& o) const { return *this + (-o); }
  FormalSum operator*(const Coeff& c) const {
    FormalSum r;
    if (c == 0) return r;
    for (const auto& [k, tc] : terms_) r.terms_.emplace(k, std::make_pair(tc.first, tc.second * c));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe to range-for a temporary

  Coeff coeff(const T& t) const {
    auto it = terms_.find(t.key());
    return it == terms_.end() ? Coeff(0) : it->second.second;
  }

  bool operator==(const FormalSum& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (a->first != b->first || a->second.second != b->second.second) return false;
    return true;
  }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  // Canonical serialization: `±coef·<key>` joined by ` + `; empty sum is `0`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, tc] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (tc.second >= 0) os << "+";
      os << tc.second.str() << "·" << k;
    }
    return os.str();
  }

  // Apply f to each basis element, summing f(t) scaled by the coefficient.
  // f returns a FormalSum<U>.
  template <typename F>
  auto map_terms(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    U out;
    for (const auto& [k, tc] : terms_) out += f(tc.first) * tc.second;
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace qops
