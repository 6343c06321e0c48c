#include "cactus/combinatorics/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

#include "cactus/errors.hpp"

namespace cactus::comb {

namespace {

std::string block_text(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + "}";
}

std::vector<int> union_checked(const std::vector<Block>& blocks) {
  std::vector<int> all;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("set partition has an empty block");
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw DomainError("set partition blocks are not disjoint");
  }
  return all;
}

}  // namespace

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  ground_ = union_checked(blocks_);
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::single_block(int n) {
  Block b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return SetPartition({b});
}

SetPartition SetPartition::discrete(int n) {
  std::vector<Block> bs;
  for (int i = 1; i <= n; ++i) bs.push_back({i});
  return SetPartition(std::move(bs));
}

SetPartition SetPartition::from_classes(const std::vector<int>& elements, const std::vector<int>& class_of) {
  std::map<int, Block> by;
  for (std::size_t i = 0; i < elements.size(); ++i) by[class_of[i]].push_back(elements[i]);
  std::vector<Block> bs;
  for (auto& [k, b] : by) bs.push_back(std::move(b));
  return SetPartition(std::move(bs));
}

int SetPartition::num_singletons() const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; }));
}

int SetPartition::block_index(int x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return static_cast<int>(i);
  }
  return -1;
}

bool SetPartition::same_block(int a, int b) const {
  int ia = block_index(a);
  return ia >= 0 && ia == block_index(b);
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += block_text(blocks_[i]);
  }
  return s + "}";
}

bool refines(const SetPartition& b, const SetPartition& s) {
  if (b.ground() != s.ground()) throw DomainError("refines: partitions of different ground sets");
  for (const auto& blk : b.blocks()) {
    int idx = s.block_index(blk.front());
    for (int x : blk) {
      if (s.block_index(x) != idx) return false;
    }
  }
  return true;
}

std::vector<SetPartition> all_set_partitions(const std::vector<int>& ground) {
  std::vector<SetPartition> out;
  if (ground.empty()) return out;
  // Restricted growth strings.
  const std::size_t n = ground.size();
  std::vector<int> rg(n, 0), mx(n, 0);
  while (true) {
    out.push_back(SetPartition::from_classes(ground, rg));
    std::size_t i = n - 1;
    while (i > 0 && rg[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++rg[i];
    mx[i] = std::max(mx[i - 1], rg[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rg[k] = 0;
      mx[k] = mx[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<int> g(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 1);
  return all_set_partitions(g);
}

OrderedSetPartition::OrderedSetPartition(std::vector<Block> parts) : parts_(std::move(parts)) {
  for (auto& b : parts_) std::sort(b.begin(), b.end());
  union_checked(parts_);
}

SetPartition OrderedSetPartition::unordered() const { return SetPartition(parts_); }

std::string OrderedSetPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += block_text(parts_[i]);
  }
  return s + ")";
}

std::vector<OrderedSetPartition> all_ordered_set_partitions(int n) {
  std::vector<OrderedSetPartition> out;
  for (const auto& p : all_set_partitions(n)) {
    std::vector<Block> bs = p.blocks();
    std::vector<std::size_t> idx(bs.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<Block> ord;
      for (auto k : idx) ord.push_back(bs[k]);
      out.emplace_back(std::move(ord));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedSetPartition> all_ordered_set_partitions(int n, int parts) {
  std::vector<OrderedSetPartition> out;
  for (auto& p : all_ordered_set_partitions(n)) {
    if (p.num_parts() == parts) out.push_back(std::move(p));
  }
  return out;
}

CyclicSetPartition::CyclicSetPartition(const OrderedSetPartition& rep) {
  const auto& parts = rep.parts();
  if (parts.empty()) {
    rep_ = rep;
    return;
  }
  std::size_t best = 0;
  int mn = parts[0].front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() < mn) {
      mn = parts[i].front();
      best = i;
    }
  }
  std::vector<Block> rot;
  for (std::size_t k = 0; k < parts.size(); ++k) rot.push_back(parts[(best + k) % parts.size()]);
  rep_ = OrderedSetPartition(std::move(rot));
}

std::string CyclicSetPartition::to_string() const { return "cyc" + rep_.to_string(); }

void to_json(nlohmann::json& j, const SetPartition& p) { j = p.blocks(); }

void from_json(const nlohmann::json& j, SetPartition& p) {
  p = SetPartition(j.get<std::vector<Block>>());
}

}  // namespace cactus::comb
