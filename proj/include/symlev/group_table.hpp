// Enumerated finite groups: element tables, conjugacy classes, parallel map.
#pragma once

#include "matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace symlev {

/// Deterministic parallel map: out[i] = f(i), independent of the worker count.
template <class F>
auto parallel_map(std::size_t n, F&& f, unsigned workers = 1) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

/// Multiplication on byte-string encoded elements. Products apply the right
/// factor first.
class ElementOps {
 public:
  virtual ~ElementOps() = default;
  virtual std::string mul(const std::string& a, const std::string& b) const = 0;
  virtual std::string inverse(const std::string& a) const = 0;
  virtual std::string identity() const = 0;
  virtual std::string canonical(const std::string& a) const { return a; }
};

/// Permutations of {0..n-1}; byte i holds the image of i.
class PermOps : public ElementOps {
 public:
  explicit PermOps(int n) : n_(n) {
    if (n < 1 || n > 255) throw precondition_error("permutation degree must lie in [1,255]");
  }
  int degree() const { return n_; }
  std::string mul(const std::string& a, const std::string& b) const override {
    std::string r(n_, 0);
    for (int i = 0; i < n_; ++i) r[i] = a[static_cast<unsigned char>(b[i])];
    return r;
  }
  std::string inverse(const std::string& a) const override {
    std::string r(n_, 0);
    for (int i = 0; i < n_; ++i) r[static_cast<unsigned char>(a[i])] = static_cast<char>(i);
    return r;
  }
  std::string identity() const override {
    std::string r(n_, 0);
    for (int i = 0; i < n_; ++i) r[i] = static_cast<char>(i);
    return r;
  }
  static std::string encode(const std::vector<int>& p) {
    std::string r(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<char>(p[i]);
    return r;
  }
  static std::vector<int> decode(const std::string& s) {
    std::vector<int> p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p[i] = static_cast<unsigned char>(s[i]);
    return p;
  }

 private:
  int n_;
};

/// n x n matrices over F_q with q <= 256, row-major, one byte per entry.
/// With a nonempty scalar list, elements are cosets of those scalars and the
/// canonical representative is the least encoding in the coset.
class MatrixOps : public ElementOps {
 public:
  MatrixOps(FieldPtr F, int n, std::vector<Fe> scalars = {}) : F_(std::move(F)), n_(n), scalars_(std::move(scalars)) {
    if (F_->size() > 256) throw precondition_error("matrix groups need q <= 256");
    const std::size_t q = F_->size();
    add_.resize(q * q);
    mul_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>(F_->add(static_cast<Fe>(a), static_cast<Fe>(b)));
        mul_[a * q + b] = static_cast<std::uint8_t>(F_->mul(static_cast<Fe>(a), static_cast<Fe>(b)));
      }
  }
  const FieldPtr& field() const { return F_; }
  int n() const { return n_; }
  bool projective() const { return !scalars_.empty(); }
  const std::vector<Fe>& scalars() const { return scalars_; }

  std::string mul(const std::string& a, const std::string& b) const override {
    const std::size_t q = F_->size();
    std::string r(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const auto c = static_cast<unsigned char>(a[i * n_ + k]);
        if (!c) continue;
        const std::uint8_t* mrow = &mul_[c * q];
        for (int j = 0; j < n_; ++j) {
          auto& x = reinterpret_cast<unsigned char&>(r[i * n_ + j]);
          x = add_[x * q + mrow[static_cast<unsigned char>(b[k * n_ + j])]];
        }
      }
    return canonical(r);
  }
  std::string inverse(const std::string& a) const override { return canonical(encode(decode(a).inverse())); }
  std::string identity() const override { return canonical(encode(FqMatrix::identity(F_, n_))); }
  std::string canonical(const std::string& a) const override {
    if (scalars_.empty()) return a;
    const std::size_t q = F_->size();
    std::string best = a;
    for (Fe z : scalars_) {
      std::string s = a;
      for (auto& c : s) c = static_cast<char>(mul_[z * q + static_cast<unsigned char>(c)]);
      if (s < best) best = s;
    }
    return best;
  }

  std::string encode(const FqMatrix& m) const {
    if (m.n() != n_) throw precondition_error("matrix size mismatch");
    std::string r(m.entries().size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<char>(m.entries()[i]);
    return r;
  }
  FqMatrix decode(const std::string& s) const {
    std::vector<Fe> e(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) e[i] = static_cast<unsigned char>(s[i]);
    return FqMatrix(F_, n_, std::move(e));
  }

 private:
  FieldPtr F_;
  int n_;
  std::vector<Fe> scalars_;
  std::vector<std::uint8_t> add_, mul_;
};

/// A finite group enumerated from generators. Immutable after construction.
class GroupTable {
 public:
  using Index = std::uint32_t;

  /// Closure of the generators; throws cap_exceeded past `cap` elements.
  GroupTable(std::shared_ptr<const ElementOps> ops, const std::vector<std::string>& gens, std::size_t cap)
      : ops_(std::move(ops)) {
    for (auto& g : gens) gens_.push_back(ops_->canonical(g));
    close(cap);
    inv_.resize(elems_.size());
    for (Index i = 0; i < elems_.size(); ++i) inv_[i] = index_of(ops_->inverse(elems_[i]));
    build_classes();
  }

  const ElementOps& ops() const { return *ops_; }
  std::shared_ptr<const ElementOps> ops_ptr() const { return ops_; }
  std::size_t order() const { return elems_.size(); }
  const std::string& element(Index i) const { return elems_[i]; }
  const std::vector<std::string>& generators() const { return gens_; }
  Index identity() const { return 0; }
  Index inverse(Index i) const { return inv_[i]; }

  /// Index of an element; throws if it lies outside the group.
  Index index_of(const std::string& key) const {
    auto it = index_.find(ops_->canonical(key));
    if (it == index_.end()) throw precondition_error("element not in group");
    return it->second;
  }
  bool contains(const std::string& key) const { return index_.count(ops_->canonical(key)) > 0; }
  Index mul(Index a, Index b) const { return index_.at(ops_->mul(elems_[a], elems_[b])); }
  Index conjugate(Index g, Index x) const { return mul(mul(g, x), inv_[g]); }

  std::size_t class_count() const { return class_rep_.size(); }
  std::size_t class_of(Index i) const { return class_of_[i]; }
  Index class_rep(std::size_t c) const { return class_rep_[c]; }
  std::size_t class_size(std::size_t c) const { return class_members_[c].size(); }
  const std::vector<Index>& class_members(std::size_t c) const { return class_members_[c]; }

  /// Element order.
  std::uint64_t element_order(Index i) const {
    std::uint64_t k = 1;
    for (Index x = i; x != identity(); x = mul(x, i)) ++k;
    return k;
  }

  /// Matrix representative of an element of a matrix group.
  FqMatrix matrix(Index i) const {
    auto m = dynamic_cast<const MatrixOps*>(ops_.get());
    if (!m) throw precondition_error("not a matrix group");
    return m->decode(elems_[i]);
  }
  /// Image list of an element of a permutation group.
  std::vector<int> permutation(Index i) const {
    if (!dynamic_cast<const PermOps*>(ops_.get())) throw precondition_error("not a permutation group");
    return PermOps::decode(elems_[i]);
  }

 private:
  void close(std::size_t cap) {
    add(ops_->identity(), cap);
    for (std::size_t head = 0; head < elems_.size(); ++head)
      for (auto& g : gens_) add(ops_->mul(elems_[head], g), cap);
  }
  void add(const std::string& key, std::size_t cap) {
    if (index_.count(key)) return;
    if (elems_.size() >= cap) throw cap_exceeded("group order exceeds enumeration cap " + std::to_string(cap));
    index_.emplace(key, static_cast<Index>(elems_.size()));
    elems_.push_back(key);
  }
  void build_classes() {
    const std::size_t none = static_cast<std::size_t>(-1);
    class_of_.assign(elems_.size(), none);
    std::vector<Index> gi;
    for (auto& g : gens_) gi.push_back(index_of(g));
    for (Index x = 0; x < elems_.size(); ++x) {
      if (class_of_[x] != none) continue;
      const std::size_t c = class_rep_.size();
      class_rep_.push_back(x);
      class_members_.emplace_back();
      std::deque<Index> todo{x};
      class_of_[x] = c;
      while (!todo.empty()) {
        Index y = todo.front();
        todo.pop_front();
        class_members_[c].push_back(y);
        for (Index g : gi) {
          Index z = conjugate(g, y);
          if (class_of_[z] == none) {
            class_of_[z] = c;
            todo.push_back(z);
          }
        }
      }
      std::sort(class_members_[c].begin(), class_members_[c].end());
    }
  }

  std::shared_ptr<const ElementOps> ops_;
  std::vector<std::string> gens_;
  std::vector<std::string> elems_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Index> inv_;
  std::vector<std::size_t> class_of_;
  std::vector<Index> class_rep_;
  std::vector<std::vector<Index>> class_members_;
};

}  // namespace symlev
