// Univariate polynomials over a FiniteField.
#pragma once

#include "field.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symlev {

class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Fe> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

  static Poly constant(FieldPtr F, Fe c) { return Poly(std::move(F), {c}); }
  static Poly x(FieldPtr F) { return Poly(std::move(F), {0, 1}); }
  /// t - r
  static Poly linear(FieldPtr F, Fe r) {
    Fe nr = F->neg(r);
    return Poly(std::move(F), {nr, 1});
  }

  const FieldPtr& field() const { return F_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Fe lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const {
    if (is_zero()) return *this;
    Fe li = F_->inv(lead());
    std::vector<Fe> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F_->mul(c_[i], li);
    return Poly(F_, std::move(c));
  }

  Fe eval(Fe t) const {
    Fe v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = F_->add(F_->mul(v, t), c_[i]);
    return v;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(F_);
    std::vector<Fe> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
    return Poly(F_, std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.F_ ? a.F_ : b.F_;
    std::vector<Fe> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F->add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
  }

  Poly operator-() const {
    std::vector<Fe> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F_->neg(c_[i]);
    return Poly(F_, std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.F_ ? a.F_ : b.F_;
    if (a.is_zero() || b.is_zero()) return Poly(F);
    std::vector<Fe> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F->add(c[i + j], F->mul(a.c_[i], b.c_[j]));
    }
    return Poly(F, std::move(c));
  }

  Poly scaled(Fe s) const {
    std::vector<Fe> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F_->mul(c_[i], s);
    return Poly(F_, std::move(c));
  }

  /// Quotient and remainder.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    const FieldPtr& F = b.F_;
    std::vector<Fe> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(F), a};
    std::vector<Fe> q(a.c_.size() - b.c_.size() + 1, 0);
    Fe li = F->inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
      Fe c = F->mul(r[i], li);
      q[i - db] = c;
      if (!c) continue;
      for (int j = 0; j <= db; ++j) r[i - db + j] = F->sub(r[i - db + j], F->mul(c, b.c_[j]));
    }
    r.resize(db);
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
  }

  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Monic gcd (zero if both are zero).
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// base^e mod m for a non-negative exponent.
  friend Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::constant(m.field(), 1) % m;
    base = base % m;
    while (e) {
      if (e & 1) r = (r * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!s.empty()) s += " + ";
      bool unit = c_[i] == 1 && i > 0;
      if (!unit) s += std::to_string(c_[i]);
      if (i > 0) s += (unit ? "" : "*") + std::string("t") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldPtr F_;
  std::vector<Fe> c_;
};

/// Image of a polynomial under a field embedding.
inline Poly embed_poly(const Poly& f, const Embedding& e) {
  std::vector<Fe> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = e(f.coeffs()[i]);
  return Poly(e.target(), std::move(c));
}

}  // namespace symlev
