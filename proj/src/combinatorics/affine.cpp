#include "cactus/combinatorics/affine.hpp"

#include <algorithm>
#include <numeric>

#include "cactus/errors.hpp"

namespace cactus::comb {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Splits a = i + n m with i in [1, n].
std::pair<int, long long> split(long long a, int n) {
  long long m = floor_div(a - 1, n);
  return {static_cast<int>(a - n * m), m};
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long long> window) : win_(std::move(window)) {
  const int n = static_cast<int>(win_.size());
  if (n < 1) throw DomainError("affine permutation needs n >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  long long sum = 0;
  for (long long v : win_) {
    int r = mod1(v, n);
    if (seen[static_cast<std::size_t>(r)]) throw DomainError("window residues are not a complete system mod n");
    seen[static_cast<std::size_t>(r)] = 1;
    sum += v;
  }
  if (sum != static_cast<long long>(n) * (n + 1) / 2) throw DomainError("window sum differs from n(n+1)/2");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long long> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1LL);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_permutation(const Permutation& sigma) {
  std::vector<long long> w;
  for (int v : sigma.images()) w.push_back(v);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::translation(const std::vector<long long>& k) {
  const int n = static_cast<int>(k.size());
  std::vector<long long> w(k.size());
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i + static_cast<long long>(n) * k[static_cast<std::size_t>(i - 1)];
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, int k) {
  if (n < 2 || k < 0 || k >= n) throw DomainError("simple reflection index out of range");
  auto w = identity(n).win_;
  if (k == 0) {
    w[0] = 0;
    w[static_cast<std::size_t>(n - 1)] = n + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]);
  }
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::operator()(long long a) const {
  auto [i, m] = split(a, n());
  return win_[static_cast<std::size_t>(i - 1)] + static_cast<long long>(n()) * m;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& rhs) const {
  if (rhs.n() != n()) throw DomainError("composing affine permutations of different n");
  AffinePermutation out;
  out.win_.resize(win_.size());
  for (int i = 1; i <= n(); ++i) out.win_[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
  return out;
}

AffinePermutation AffinePermutation::inverse() const {
  AffinePermutation out;
  out.win_.resize(win_.size());
  for (int i = 1; i <= n(); ++i) {
    auto [r, m] = split(win_[static_cast<std::size_t>(i - 1)], n());
    // f(i) = r + nm, so f^{-1}(r) = i - nm.
    out.win_[static_cast<std::size_t>(r - 1)] = i - static_cast<long long>(n()) * m;
  }
  return out;
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n(); ++i) {
    if (win_[static_cast<std::size_t>(i - 1)] != i) return false;
  }
  return true;
}

Permutation AffinePermutation::reduce() const {
  std::vector<int> img;
  for (long long v : win_) img.push_back(mod1(v, n()));
  return Permutation(std::move(img));
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < win_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(win_[i]);
  }
  return s + "]";
}

AffinePermutation rotate(const AffinePermutation& f, long long a) {
  std::vector<long long> w;
  for (int x = 1; x <= f.n(); ++x) w.push_back(f(x - a) + a);
  return AffinePermutation(std::move(w));
}

AffinePermutation affine_interval_reversal(int i, int j, int n) {
  if (n < 2 || i < 1 || i > n || j < 1 || j > n) throw DomainError("interval endpoints out of range");
  if (i == j) throw DomainError("affine interval reversal needs i != j");
  const long long hi = j > i ? j : j + n;
  std::vector<long long> w;
  for (int x = 1; x <= n; ++x) {
    // Representative of x's class that lies in [i, i+n).
    long long y = x;
    while (y < i) y += n;
    while (y >= i + n) y -= n;
    long long img = (y <= hi) ? i + hi - y : y;
    w.push_back(img - (y - x));
  }
  return AffinePermutation(std::move(w));
}

AffineDecomposition affine_decompose(const AffinePermutation& f) {
  AffineDecomposition d{f.reduce(), {}};
  for (int i = 1; i <= f.n(); ++i) {
    d.k.push_back((f.window()[static_cast<std::size_t>(i - 1)] - d.sigma(i)) / f.n());
  }
  return d;
}

AffinePermutation affine_recompose(const AffineDecomposition& d) {
  return AffinePermutation::from_permutation(d.sigma) * AffinePermutation::translation(d.k);
}

ExtAffinePermutation::ExtAffinePermutation(AffinePermutation base, long long shift)
    : base_(std::move(base)), shift_(mod1(shift, base_.n()) % base_.n()) {}

ExtAffinePermutation ExtAffinePermutation::identity(int n) { return {AffinePermutation::identity(n), 0}; }

ExtAffinePermutation ExtAffinePermutation::rotation(int n, long long a) { return {AffinePermutation::identity(n), a}; }

ExtAffinePermutation ExtAffinePermutation::operator*(const ExtAffinePermutation& rhs) const {
  return {base_ * rotate(rhs.base_, shift_), static_cast<long long>(shift_) + rhs.shift_};
}

ExtAffinePermutation ExtAffinePermutation::inverse() const {
  // (f, r^a)^{-1} = (r^{-a} . f^{-1}, r^{-a}).
  return {rotate(base_.inverse(), -shift_), -static_cast<long long>(shift_)};
}

bool ExtAffinePermutation::is_identity() const { return shift_ == 0 && base_.is_identity(); }

Permutation ExtAffinePermutation::reduce() const {
  return base_.reduce() * Permutation::long_cycle(n()).pow(shift_);
}

std::string ExtAffinePermutation::to_string() const {
  return base_.to_string() + " r^" + std::to_string(shift_);
}

SemidirectElement SemidirectElement::operator*(const SemidirectElement& rhs) const {
  SemidirectElement out{sigma * rhs.sigma, {}};
  for (int i = 1; i <= rhs.sigma.size(); ++i) {
    out.k.push_back(k[static_cast<std::size_t>(rhs.sigma(i) - 1)] + rhs.k[static_cast<std::size_t>(i - 1)]);
  }
  out.k = normalise_mod_diagonal(std::move(out.k));
  return out;
}

std::vector<long long> normalise_mod_diagonal(std::vector<long long> k) {
  if (k.empty()) return k;
  const long long c = k.back();
  for (auto& v : k) v -= c;
  return k;
}

SemidirectElement ext_affine_to_semidirect(const ExtAffinePermutation& g) {
  const int n = g.n();
  SemidirectElement e{g.reduce(), {}};
  for (int i = 1; i <= n; ++i) e.k.push_back((g(i) - e.sigma(i)) / n);
  e.k = normalise_mod_diagonal(std::move(e.k));
  return e;
}

ExtAffinePermutation semidirect_to_ext_affine(const SemidirectElement& e) {
  const int n = e.sigma.size();
  if (static_cast<int>(e.k.size()) != n) throw DomainError("semidirect element has wrong vector length");
  long long sk = std::accumulate(e.k.begin(), e.k.end(), 0LL);
  const long long a = ((sk % n) + n) % n;
  const long long c = (a - sk) / n;
  auto big_f = [&](long long x) {
    auto [i, m] = split(x, n);
    return e.sigma(i) + static_cast<long long>(n) * (e.k[static_cast<std::size_t>(i - 1)] + c) + static_cast<long long>(n) * m;
  };
  std::vector<long long> w;
  for (int j = 1; j <= n; ++j) w.push_back(big_f(j - a));
  return {AffinePermutation(std::move(w)), a};
}

std::vector<AffinePermutation> bounded_affine_permutations(int n, long long bound) {
  std::vector<AffinePermutation> out;
  std::vector<long long> w(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const long long target = static_cast<long long>(n) * (n + 1) / 2;
  auto rec = [&](auto&& self, int pos, long long sum) -> void {
    if (pos == n) {
      if (sum == target) out.emplace_back(w);
      return;
    }
    const long long remaining = n - pos - 1;
    for (long long v = -bound; v <= bound; ++v) {
      int r = mod1(v, n);
      if (used[static_cast<std::size_t>(r)]) continue;
      long long s = sum + v;
      if (s - remaining * bound > target || s + remaining * bound < target) continue;
      used[static_cast<std::size_t>(r)] = 1;
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, s);
      used[static_cast<std::size_t>(r)] = 0;
    }
  };
  rec(rec, 0, 0);
  return out;
}

void to_json(nlohmann::json& j, const AffinePermutation& f) { j = {{"n", f.n()}, {"window", f.window()}}; }

void from_json(const nlohmann::json& j, AffinePermutation& f) {
  auto w = j.at("window").get<std::vector<long long>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(w.size())) {
    throw DomainError("affine permutation JSON: n does not match window length");
  }
  f = AffinePermutation(std::move(w));
}

}  // namespace cactus::comb
