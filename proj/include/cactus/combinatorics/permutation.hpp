#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cactus::comb {

// A bijection of [n] = {1,...,n}. Composition is right to left:
// (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The long cycle r : i -> i+1 (n -> 1).
  static Permutation long_cycle(int n);
  // Adjacent transposition (i i+1), 1 <= i < n.
  static Permutation adjacent(int n, int i);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  bool is_identity() const;

  // Cycle notation with fixed points omitted, e.g. "(1 4)(2 3)"; "()" for id.
  std::string cycles() const;
  // One-line notation "w(2 3 1)".
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

// Residue of a in {1,...,n}: writes n for 0.
int mod1(long long a, int n);

// Cyclic interval [i,j] = (i, i+1, ..., j) read in Z/n with labels in [n].
class CyclicInterval {
public:
  CyclicInterval(int i, int j, int n);

  int first() const { return i_; }
  int last() const { return j_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  bool contains(int k) const;
  // Position of k inside the interval (0-based), or -1.
  int position(int k) const;
  bool is_standard() const { return i_ < j_; }
  // [k,l] subset of [i,j] with the induced order preserved.
  bool contains_interval(const CyclicInterval& other) const;
  bool disjoint(const CyclicInterval& other) const;

  friend bool operator==(const CyclicInterval& a, const CyclicInterval& b) {
    return a.i_ == b.i_ && a.j_ == b.j_ && a.n_ == b.n_;
  }

private:
  int i_, j_, n_;
  std::vector<int> elems_;
};

// w_{ij}: reverses the cyclic interval [i,j] and fixes its complement.
Permutation interval_reversal(int i, int j, int n);

// True iff w(i+k) = w(i)+k for k = 1..j-i.
bool is_translation(const Permutation& w, int i, int j);

// All n! permutations of [n] in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace cactus::comb

template <>
struct std::hash<cactus::comb::Permutation> {
  std::size_t operator()(const cactus::comb::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
