// Finite fields F_{p^k} with integer element encodings.
//
// An element is encoded as sum c_i p^i where c_0 + c_1 x + ... is its residue
// modulo the field modulus. The modulus is the monic irreducible of degree k
// whose lower coefficients, read as that base-p integer, are smallest.
#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace symlev {

using Fe = std::uint32_t;

namespace detail {

using PPoly = std::vector<std::uint64_t>;

inline void pp_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pp_mod(PPoly a, const PPoly& f, std::uint64_t p) {
  pp_trim(a);
  const std::size_t df = f.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    std::uint64_t b = f.back() % p, e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() > df) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
    pp_trim(a);
  }
  return a;
}

inline PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return pp_mod(std::move(c), f, p);
}

inline PPoly pp_powmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint64_t p) {
  PPoly r{1};
  base = pp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pp_mulmod(r, base, f, p);
    base = pp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline PPoly pp_gcd(PPoly a, PPoly b, std::uint64_t p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    PPoly r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using symlev::is_prime;

// Rabin's test.
inline bool pp_irreducible(const PPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  std::vector<PPoly> frob(k + 1);
  frob[1] = pp_powmod(PPoly{0, 1}, p, f, p);
  for (std::size_t i = 2; i <= k; ++i) {
    PPoly acc{1};
    PPoly base = frob[i - 1];
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = pp_mulmod(acc, base, f, p);
      base = pp_mulmod(base, base, f, p);
      e >>= 1;
    }
    frob[i] = acc;
  }
  PPoly x{0, 1};
  if (pp_mod(frob[k], f, p) != pp_mod(x, f, p)) return false;
  for (std::uint64_t r : prime_factors(k)) {
    PPoly g = frob[k / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    pp_trim(g);
    PPoly d = pp_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField {
 public:
  static constexpr std::uint64_t table_limit = std::uint64_t{1} << 22;

  FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
    if (!detail::is_prime(p)) throw precondition_error("field characteristic must be prime");
    if (k < 1 || k > 24) throw precondition_error("extension degree must lie in [1,24]");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > 0xFFFFFFFFull) throw precondition_error("field too large for 32-bit element encoding");
    }
    q_ = q;
    find_modulus();
    find_generator();
    if (q_ <= table_limit) build_tables();
  }

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  Fe generator() const { return gen_; }

  Fe zero() const { return 0; }
  Fe one() const { return 1; }

  Fe from_int(long long v) const { return static_cast<Fe>(mod_floor(v, p_)); }

  std::vector<std::uint32_t> digits(Fe a) const {
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Fe from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return static_cast<Fe>(v);
  }

  Fe add(Fe a, Fe b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    if (tables_) {
      std::uint32_t la = log_[a], lb = log_[b];
      std::uint32_t d = lb >= la ? lb - la : lb + order_ - la;
      std::int64_t z = zech_[d];
      if (z < 0) return 0;
      return exp_[la + static_cast<std::uint32_t>(z)];
    }
    return add_digits(a, b);
  }

  Fe neg(Fe a) const {
    if (p_ == 2 || a == 0) return a;
    Fe r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      std::uint32_t c = a % p_;
      a /= p_;
      r += ((p_ - c) % p_) * scale;
      scale *= p_;
    }
    return r;
  }

  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_digits(a, b);
  }

  Fe inv(Fe a) const {
    if (a == 0) throw precondition_error("inverse of zero");
    if (tables_) return exp_[(order_ - log_[a]) % order_];
    return pow(a, q_ - 2);
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  Fe pow(Fe a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables_) {
      e %= order_;
      return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * e) % order_)];
    }
    Fe r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Fe pow(Fe a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-e));
  }

  Fe pow(Fe a, int e) const { return pow(a, static_cast<std::int64_t>(e)); }
  Fe pow(Fe a, unsigned e) const { return pow(a, static_cast<std::uint64_t>(e)); }

  Fe frobenius(Fe a, unsigned times = 1) const {
    for (unsigned i = 0; i < times; ++i) a = pow(a, static_cast<std::uint64_t>(p_));
    return a;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(Fe a) const {
    if (a == 0) throw precondition_error("order of zero");
    std::uint64_t n = q_ - 1;
    for (std::uint64_t r : detail::prime_factors(q_ - 1))
      while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    return n;
  }

  /// log of a nonzero element to the base generator().
  std::uint64_t log(Fe a) const {
    if (a == 0) throw precondition_error("log of zero");
    if (tables_) return log_[a];
    Fe x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      if (x == a) return i;
      x = mul(x, gen_);
    }
    throw precondition_error("log failed");
  }

  bool has_tables() const { return tables_; }

  bool same_as(const FiniteField& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  Fe add_digits(Fe a, Fe b) const {
    Fe r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      std::uint32_t c = (a % p_ + b % p_) % p_;
      a /= p_;
      b /= p_;
      r += c * scale;
      scale *= p_;
    }
    return r;
  }

  Fe mul_digits(Fe a, Fe b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> c(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < k_; ++j) c[i + j] = (c[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    }
    for (std::size_t i = c.size(); i-- > k_;) {
      std::uint64_t t = c[i];
      if (!t) continue;
      c[i] = 0;
      for (unsigned j = 0; j < k_; ++j) c[i - k_ + j] = (c[i - k_ + j] + (p_ - t) * mod_[j]) % p_;
    }
    Fe r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += static_cast<Fe>(c[i]) * scale;
      scale *= p_;
    }
    return r;
  }

  void find_modulus() {
    if (k_ == 1) {
      mod_ = {0, 1};
      return;
    }
    for (std::uint64_t low = 0; low < q_; ++low) {
      detail::PPoly f(k_ + 1, 0);
      std::uint64_t v = low;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = v % p_;
        v /= p_;
      }
      f[k_] = 1;
      if (f[0] == 0) continue;
      if (detail::pp_irreducible(f, p_)) {
        mod_.assign(f.begin(), f.end());
        return;
      }
    }
    throw precondition_error("no irreducible modulus found");
  }

  void find_generator() {
    order_ = static_cast<std::uint32_t>(q_ - 1);
    if (q_ == 2) {
      gen_ = 1;
      return;
    }
    auto primes = detail::prime_factors(q_ - 1);
    for (std::uint64_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (std::uint64_t r : primes)
        if (pow(static_cast<Fe>(g), (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = static_cast<Fe>(g);
        return;
      }
    }
    throw precondition_error("no primitive element found");
  }

  void build_tables() {
    const std::uint32_t n = order_;
    exp_.assign(2 * std::size_t(n) + 1, 0);
    log_.assign(q_, 0);
    Fe x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_digits(x, gen_);
    }
    for (std::uint32_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
    if (p_ != 2) {
      zech_.assign(n, -1);
      for (std::uint32_t i = 0; i < n; ++i) {
        Fe s = add_digits(1, exp_[i]);
        zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
      }
    }
    tables_ = true;
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> mod_;
  Fe gen_ = 1;
  std::uint32_t order_ = 1;
  bool tables_ = false;
  std::vector<Fe> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Cached field construction; equal (p, k) always yield the same object.
inline FieldPtr make_field(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const FiniteField>(p, k);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, k), f);
  return it->second;
}

/// F_q for a prime power q.
inline FieldPtr make_field_of_size(std::uint64_t q) {
  if (q < 2) throw precondition_error("field size must be a prime power");
  auto ps = detail::prime_factors(q);
  if (ps.size() != 1) throw precondition_error("field size must be a prime power");
  unsigned k = 0;
  std::uint64_t v = q;
  while (v > 1) {
    v /= ps[0];
    ++k;
  }
  return make_field(static_cast<std::uint32_t>(ps[0]), k);
}

/// Ring embedding F_{p^a} -> F_{p^b}, a | b.
class Embedding {
 public:
  Embedding(FieldPtr src, FieldPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
    if (src_->p() != dst_->p() || dst_->k() % src_->k() != 0)
      throw precondition_error("embedding requires a subfield");
    const auto& f = src_->modulus();
    if (src_->k() == 1) {
      root_ = 0;
    } else {
      // Search the subfield of dst for the smallest root of the source modulus.
      const std::uint64_t Q = dst_->size(), q = src_->size();
      Fe h = dst_->pow(dst_->generator(), (Q - 1) / (q - 1));
      bool found = false;
      Fe best = 0, x = 1;
      for (std::uint64_t j = 0; j + 1 < q; ++j) {
        Fe v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = dst_->add(dst_->mul(v, x), dst_->from_int(f[i]));
        if (v == 0 && (!found || x < best)) {
          best = x;
          found = true;
        }
        x = dst_->mul(x, h);
      }
      if (!found) throw precondition_error("embedding failure: modulus has no root");
      root_ = best;
    }
    powers_.resize(src_->k());
    Fe r = 1;
    for (unsigned i = 0; i < src_->k(); ++i) {
      powers_[i] = r;
      r = dst_->mul(r, root_);
    }
    if (src_->size() <= (1u << 16)) {
      table_.resize(src_->size());
      for (std::uint64_t a = 0; a < src_->size(); ++a) table_[a] = compute(static_cast<Fe>(a));
    }
  }

  Fe operator()(Fe a) const { return table_.empty() ? compute(a) : table_[a]; }

  /// Inverse on the image; throws if b is not in the image.
  Fe preimage(Fe b) const {
    std::call_once(*once_, [this] {
      for (std::uint64_t a = 0; a < src_->size(); ++a) inverse_[(*this)(static_cast<Fe>(a))] = static_cast<Fe>(a);
    });
    auto it = inverse_.find(b);
    if (it == inverse_.end()) throw precondition_error("element not in the subfield image");
    return it->second;
  }

  const FieldPtr& source() const { return src_; }
  const FieldPtr& target() const { return dst_; }

 private:
  Fe compute(Fe a) const {
    auto d = src_->digits(a);
    Fe v = 0;
    for (unsigned i = 0; i < d.size(); ++i)
      if (d[i]) v = dst_->add(v, dst_->mul(dst_->from_int(d[i]), powers_[i]));
    return v;
  }

  FieldPtr src_, dst_;
  Fe root_ = 0;
  std::vector<Fe> powers_;
  std::vector<Fe> table_;
  std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
  mutable std::unordered_map<Fe, Fe> inverse_;
};

inline Fe embed(Fe e, const FieldPtr& src, const FieldPtr& dst) { return Embedding(src, dst)(e); }

}  // namespace symlev
