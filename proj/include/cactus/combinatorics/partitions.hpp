#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cactus::comb {

using Block = std::vector<int>;

// Unordered set partition. Blocks are stored sorted internally and sorted
// lexicographically as a family, which makes equality structural.
class SetPartition {
public:
  SetPartition() = default;
  explicit SetPartition(std::vector<Block> blocks);

  // {[n]} and the discrete partition [[n]].
  static SetPartition single_block(int n);
  static SetPartition discrete(int n);
  // From a labelling: labels[i-1] = class id of element i.
  static SetPartition from_classes(const std::vector<int>& elements, const std::vector<int>& class_of);

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& ground() const { return ground_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int num_singletons() const;
  // Index of the block containing x, or -1.
  int block_index(int x) const;
  bool same_block(int a, int b) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  std::vector<Block> blocks_;
  std::vector<int> ground_;
};

// True iff every block of b lies in a block of s. Ground sets must agree.
bool refines(const SetPartition& b, const SetPartition& s);

// All set partitions of the given ground set (sorted).
std::vector<SetPartition> all_set_partitions(const std::vector<int>& ground);
std::vector<SetPartition> all_set_partitions(int n);

class OrderedSetPartition {
public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<Block> parts);

  const std::vector<Block>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  SetPartition unordered() const;
  std::string to_string() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
  std::vector<Block> parts_;
};

std::vector<OrderedSetPartition> all_ordered_set_partitions(int n);
std::vector<OrderedSetPartition> all_ordered_set_partitions(int n, int parts);

// Ordered set partition up to cyclic rotation; stored in the rotation whose
// first part contains the smallest label.
class CyclicSetPartition {
public:
  CyclicSetPartition() = default;
  explicit CyclicSetPartition(const OrderedSetPartition& rep);

  const OrderedSetPartition& representative() const { return rep_; }
  int num_parts() const { return rep_.num_parts(); }
  std::string to_string() const;

  friend bool operator==(const CyclicSetPartition&, const CyclicSetPartition&) = default;
  friend auto operator<=>(const CyclicSetPartition&, const CyclicSetPartition&) = default;

private:
  OrderedSetPartition rep_;
};

void to_json(nlohmann::json& j, const SetPartition& p);
void from_json(const nlohmann::json& j, SetPartition& p);

}  // namespace cactus::comb
