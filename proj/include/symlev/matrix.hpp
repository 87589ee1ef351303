// Dense square matrices over a FiniteField.
#pragma once

#include "poly.hpp"

#include <string>
#include <vector>

namespace symlev {

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr F, int n) : F_(std::move(F)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  FqMatrix(FieldPtr F, int n, std::vector<Fe> entries) : F_(std::move(F)), n_(n), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(n) * n) throw precondition_error("matrix entry count mismatch");
  }

  static FqMatrix identity(FieldPtr F, int n) { return scalar(std::move(F), n, 1); }
  static FqMatrix scalar(FieldPtr F, int n, Fe s) {
    FqMatrix m(std::move(F), n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static FqMatrix diagonal(FieldPtr F, const std::vector<Fe>& d) {
    FqMatrix m(std::move(F), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  /// Companion matrix of a monic polynomial.
  static FqMatrix companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw precondition_error("companion matrix needs a monic polynomial");
    const int n = f.degree();
    FqMatrix m(f.field(), n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = f.field()->neg(f.coeff(i));
    return m;
  }
  /// Block diagonal sum.
  static FqMatrix block_diag(const std::vector<FqMatrix>& blocks) {
    int n = 0;
    for (auto& b : blocks) n += b.n_;
    FqMatrix m(blocks.front().F_, n);
    int off = 0;
    for (auto& b : blocks) {
      for (int i = 0; i < b.n_; ++i)
        for (int j = 0; j < b.n_; ++j) m(off + i, off + j) = b(i, j);
      off += b.n_;
    }
    return m;
  }

  const FieldPtr& field() const { return F_; }
  int n() const { return n_; }
  const std::vector<Fe>& entries() const { return a_; }
  Fe& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Fe operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const FqMatrix& x, const FqMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
  friend bool operator!=(const FqMatrix& x, const FqMatrix& y) { return !(x == y); }

  friend FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
    if (x.n_ != y.n_) throw precondition_error("matrix size mismatch");
    const FiniteField& F = *x.F_;
    FqMatrix r(x.F_, x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        Fe c = x(i, k);
        if (!c) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) = F.add(r(i, j), F.mul(c, y(k, j)));
      }
    return r;
  }

  friend FqMatrix operator+(const FqMatrix& x, const FqMatrix& y) {
    FqMatrix r(x.F_, x.n_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->add(x.a_[i], y.a_[i]);
    return r;
  }

  friend FqMatrix operator-(const FqMatrix& x, const FqMatrix& y) {
    FqMatrix r(x.F_, x.n_);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->sub(x.a_[i], y.a_[i]);
    return r;
  }

  FqMatrix scaled(Fe s) const {
    FqMatrix r(F_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], s);
    return r;
  }

  FqMatrix transpose() const {
    FqMatrix r(F_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  /// Entry-wise map, e.g. a field automorphism.
  template <class Fn>
  FqMatrix map(Fn fn) const {
    FqMatrix r(F_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fn(a_[i]);
    return r;
  }

  int rank() const {
    std::vector<Fe> m = a_;
    const FiniteField& F = *F_;
    int r = 0;
    for (int c = 0; c < n_ && r < n_; ++c) {
      int piv = -1;
      for (int i = r; i < n_; ++i)
        if (m[i * n_ + c]) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[r * n_ + j]);
      Fe inv = F.inv(m[r * n_ + c]);
      for (int i = r + 1; i < n_; ++i) {
        Fe f = F.mul(m[i * n_ + c], inv);
        if (!f) continue;
        for (int j = c; j < n_; ++j) m[i * n_ + j] = F.sub(m[i * n_ + j], F.mul(f, m[r * n_ + j]));
      }
      ++r;
    }
    return r;
  }

  Fe det() const {
    std::vector<Fe> m = a_;
    const FiniteField& F = *F_;
    Fe d = 1;
    for (int c = 0; c < n_; ++c) {
      int piv = -1;
      for (int i = c; i < n_; ++i)
        if (m[i * n_ + c]) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      if (piv != c) {
        for (int j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
        d = F.neg(d);
      }
      d = F.mul(d, m[c * n_ + c]);
      Fe inv = F.inv(m[c * n_ + c]);
      for (int i = c + 1; i < n_; ++i) {
        Fe f = F.mul(m[i * n_ + c], inv);
        if (!f) continue;
        for (int j = c; j < n_; ++j) m[i * n_ + j] = F.sub(m[i * n_ + j], F.mul(f, m[c * n_ + j]));
      }
    }
    return d;
  }

  bool invertible() const { return rank() == n_; }

  FqMatrix inverse() const {
    const FiniteField& F = *F_;
    const int w = 2 * n_;
    std::vector<Fe> m(static_cast<std::size_t>(n_) * w, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) m[i * w + j] = (*this)(i, j);
      m[i * w + n_ + i] = 1;
    }
    for (int c = 0; c < n_; ++c) {
      int piv = -1;
      for (int i = c; i < n_; ++i)
        if (m[i * w + c]) {
          piv = i;
          break;
        }
      if (piv < 0) throw precondition_error("matrix is singular");
      if (piv != c)
        for (int j = 0; j < w; ++j) std::swap(m[piv * w + j], m[c * w + j]);
      Fe inv = F.inv(m[c * w + c]);
      for (int j = 0; j < w; ++j) m[c * w + j] = F.mul(m[c * w + j], inv);
      for (int i = 0; i < n_; ++i) {
        if (i == c || !m[i * w + c]) continue;
        Fe f = m[i * w + c];
        for (int j = 0; j < w; ++j) m[i * w + j] = F.sub(m[i * w + j], F.mul(f, m[c * w + j]));
      }
    }
    FqMatrix r(F_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = m[i * w + n_ + j];
    return r;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      s += "[";
      for (int j = 0; j < n_; ++j) s += (j ? " " : "") + std::to_string((*this)(i, j));
      s += "]";
    }
    return s;
  }

 private:
  FieldPtr F_;
  int n_ = 0;
  std::vector<Fe> a_;
};

inline FqMatrix embed_matrix(const FqMatrix& m, const Embedding& e) {
  FqMatrix r(e.target(), m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) r(i, j) = e(m(i, j));
  return r;
}

/// Kronecker product.
inline FqMatrix kron(const FqMatrix& g, const FqMatrix& s) {
  const int n = g.n(), j = s.n();
  const FiniteField& F = *g.field();
  FqMatrix r(g.field(), n * j);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < j; ++c)
        for (int d = 0; d < j; ++d) r(a * j + c, b * j + d) = F.mul(g(a, b), s(c, d));
  return r;
}

/// det(t I - M), via reduction to upper Hessenberg form.
inline Poly char_poly(const FqMatrix& M) {
  const FieldPtr& Fp = M.field();
  const FiniteField& F = *Fp;
  const int n = M.n();
  std::vector<Fe> h = M.entries();
  auto H = [&](int i, int j) -> Fe& { return h[static_cast<std::size_t>(i) * n + j]; };
  for (int c = 0; c < n - 2; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (H(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
    }
    Fe inv = F.inv(H(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      Fe f = F.mul(H(i, c), inv);
      if (!f) continue;
      for (int j = 0; j < n; ++j) H(i, j) = F.sub(H(i, j), F.mul(f, H(c + 1, j)));
      for (int r = 0; r < n; ++r) H(r, c + 1) = F.add(H(r, c + 1), F.mul(f, H(r, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(Fp, 1);
  const Poly t = Poly::x(Fp);
  for (int m = 1; m <= n; ++m) {
    Poly acc = (t - Poly::constant(Fp, H(m - 1, m - 1))) * p[m - 1];
    Fe prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, H(i, i - 1));
      if (!prod) break;
      Fe coef = F.mul(prod, H(i - 1, m - 1));
      if (coef) acc = acc - p[i - 1].scaled(coef);
    }
    p[m] = acc;
  }
  return p[n];
}

/// dim ker(M - lambda Id), computed over the field of lambda.
inline int eigenspace_dim(const FqMatrix& M, Fe lambda, const FieldPtr& ext) {
  FqMatrix E = M.field()->same_as(*ext) ? M : embed_matrix(M, Embedding(M.field(), ext));
  FqMatrix D = E - FqMatrix::scalar(ext, E.n(), lambda);
  return E.n() - D.rank();
}

inline int eigenspace_dim(const FqMatrix& M, Fe lambda) { return eigenspace_dim(M, lambda, M.field()); }

}  // namespace symlev
