#pragma once

#include <compare>
#include <string>
#include <vector>

namespace singerfac {

// Integer partition, parts stored weakly decreasing, largest first.  The
// empty partition is a valid value (the unique partition of 0) and is
// distinct from "no partition".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Hook shape <a, 1^k>; a = 0 with k = 0 denotes the empty partition.
  static Partition hook(int a, int k);
  static Partition single_row(int n) { return hook(n, 0); }
  static Partition single_column(int n);

  const std::vector<int>& parts() const { return parts_; }
  int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  size_t num_parts() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  // Multiplicity of v as a part.
  int multiplicity(int v) const;
  // Part-wise scaling by d (used to pass from gamma to d*gamma).
  Partition scaled(int d) const;
  // Remove one part equal to v; the part must be present.
  Partition remove_part(int v) const;
  bool has_part(int v) const { return multiplicity(v) > 0; }

  auto operator<=>(const Partition& o) const = default;

  std::string to_string() const;  // e.g. "(3,1,1)"

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, each exactly once, in descending lexicographic order:
// (n) first, (1^n) last.  This order is a linear extension of dominance
// (mu dominated by lambda implies mu listed after lambda).
std::vector<Partition> partitions_of(int n);

// a(lambda) = sum_i (i-1)*lambda_i with 1-based i.  (Macdonald's n(lambda).)
long a_stat(const Partition& p);

// Hook length of every cell of the Young diagram, row-major.
std::vector<int> hook_lengths(const Partition& p);

// Centralizer size of a permutation of cycle type gamma: prod_i i^{m_i} m_i!.
long long z_centralizer(const Partition& gamma);

}  // namespace singerfac
