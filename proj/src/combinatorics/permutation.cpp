#include "cactus/combinatorics/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "cactus/errors.hpp"

namespace cactus::comb {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images are not a bijection of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("adjacent transposition index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw DomainError("transposition entries out of range");
  auto p = identity(n);
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw DomainError("composing permutations of different degree");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) {
    out.img_[x] = img_[static_cast<std::size_t>(rhs.img_[x] - 1)];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) {
    out.img_[static_cast<std::size_t>(img_[x] - 1)] = static_cast<int>(x) + 1;
  }
  return out;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation acc = identity(size());
  while (k) {
    if (k & 1ull) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != static_cast<int>(x) + 1) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(img_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::one_line() const {
  std::string out = "w(";
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x) out += " ";
    out += std::to_string(img_[x]);
  }
  return out + ")";
}

int mod1(long long a, int n) {
  long long r = a % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

CyclicInterval::CyclicInterval(int i, int j, int n) : i_(i), j_(j), n_(n) {
  if (n < 2 || i < 1 || i > n || j < 1 || j > n) throw DomainError("cyclic interval endpoints out of range");
  if (i == j) throw DomainError("cyclic interval needs distinct endpoints");
  for (int k = i;; k = mod1(k + 1, n)) {
    elems_.push_back(k);
    if (k == j) break;
  }
}

bool CyclicInterval::contains(int k) const { return position(k) >= 0; }

int CyclicInterval::position(int k) const {
  for (std::size_t p = 0; p < elems_.size(); ++p) {
    if (elems_[p] == k) return static_cast<int>(p);
  }
  return -1;
}

bool CyclicInterval::contains_interval(const CyclicInterval& other) const {
  if (other.n_ != n_) return false;
  int p = position(other.i_);
  if (p < 0) return false;
  for (std::size_t q = 0; q < other.elems_.size(); ++q) {
    std::size_t idx = static_cast<std::size_t>(p) + q;
    if (idx >= elems_.size() || elems_[idx] != other.elems_[q]) return false;
  }
  return true;
}

bool CyclicInterval::disjoint(const CyclicInterval& other) const {
  return std::none_of(other.elems_.begin(), other.elems_.end(), [&](int k) { return contains(k); });
}

Permutation interval_reversal(int i, int j, int n) {
  CyclicInterval iv(i, j, n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  const auto& e = iv.elements();
  const std::size_t m = e.size();
  for (std::size_t p = 0; p < m; ++p) img[static_cast<std::size_t>(e[p] - 1)] = e[m - 1 - p];
  return Permutation(std::move(img));
}

bool is_translation(const Permutation& w, int i, int j) {
  if (i < 1 || j > w.size() || i >= j) throw DomainError("is_translation expects 1 <= i < j <= n");
  for (int k = 1; k <= j - i; ++k) {
    if (w(i + k) != w(i) + k) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace cactus::comb
