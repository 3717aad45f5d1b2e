#include "singerfac/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "singerfac/error.hpp"

namespace singerfac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) fail(Errc::InvalidArgument, "partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail(Errc::InvalidArgument, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int a, int k) {
  if (a < 0 || k < 0) fail(Errc::InvalidArgument, "bad hook shape");
  if (a == 0) {
    if (k != 0) fail(Errc::InvalidArgument, "bad hook shape");
    return Partition();
  }
  std::vector<int> parts;
  parts.reserve(k + 1);
  parts.push_back(a);
  for (int i = 0; i < k; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

Partition Partition::single_column(int n) {
  if (n == 0) return Partition();
  return hook(1, n - 1);
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<int> t(parts_[0], 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++t[j];
  return Partition(std::move(t));
}

int Partition::multiplicity(int v) const {
  int m = 0;
  for (int part : parts_) m += (part == v);
  return m;
}

Partition Partition::scaled(int d) const {
  if (d < 1) fail(Errc::InvalidArgument, "scaling factor must be positive");
  std::vector<int> out(parts_);
  for (int& part : out) part *= d;
  return Partition(std::move(out));
}

Partition Partition::remove_part(int v) const {
  std::vector<int> out(parts_);
  auto it = std::find(out.begin(), out.end(), v);
  if (it == out.end()) fail(Errc::InvalidArgument, "part not present");
  out.erase(it);
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(Errc::InvalidArgument, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

long a_stat(const Partition& p) {
  long acc = 0;
  for (size_t i = 0; i < p.num_parts(); ++i) acc += static_cast<long>(i) * p.parts()[i];
  return acc;
}

std::vector<int> hook_lengths(const Partition& p) {
  const auto& parts = p.parts();
  Partition t = p.transpose();
  std::vector<int> hooks;
  hooks.reserve(p.size());
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j)
      hooks.push_back(parts[i] - j + t.parts()[j] - static_cast<int>(i) - 1);
  return hooks;
}

long long z_centralizer(const Partition& gamma) {
  long long z = 1;
  int prev = -1;
  long long mult = 0;
  for (int part : gamma.parts()) {
    if (part == prev) {
      ++mult;
    } else {
      prev = part;
      mult = 1;
    }
    z *= part * mult;  // accumulates part^m * m! across equal runs
  }
  return z;
}

}  // namespace singerfac
