#include "singerfac/bruteforce.hpp"

#include "singerfac/error.hpp"

namespace singerfac {

namespace {

uint32_t target_index(const GroupTable& table, const Matrix& target) {
  auto idx = table.index_of(target);
  if (!idx) fail(Errc::TargetNotInGroup, "target element is not in the group table");
  return *idx;
}

}  // namespace

mpz_class fac_count(const GroupTable& table, const Matrix& target, int length) {
  if (length < 0) fail(Errc::InvalidArgument, "length must be nonnegative");
  uint32_t goal = target_index(table, target);
  size_t size = table.size();
  size_t nrefl = table.reflections().size();
  const auto& products = table.reflection_products();

  std::vector<mpz_class> cur(size), next(size);
  cur[table.identity_index()] = 1;
  for (int step = 0; step < length; ++step) {
    for (auto& c : next) c = 0;
    for (size_t i = 0; i < size; ++i) {
      if (cur[i] == 0) continue;
      const uint32_t* row = &products[i * nrefl];
      for (size_t r = 0; r < nrefl; ++r) next[row[r]] += cur[i];
    }
    cur.swap(next);
  }
  return cur[goal];
}

std::map<int, mpz_class> fac_count_by_transvections(const GroupTable& table,
                                                    const Matrix& target, int length) {
  if (length < 0) fail(Errc::InvalidArgument, "length must be nonnegative");
  uint32_t goal = target_index(table, target);
  size_t size = table.size();
  size_t nrefl = table.reflections().size();
  const auto& products = table.reflection_products();
  const auto& reflections = table.reflections();

  // second axis: number of transvection factors used so far
  size_t lanes = static_cast<size_t>(length) + 1;
  std::vector<mpz_class> cur(size * lanes), next(size * lanes);
  cur[table.identity_index() * lanes + 0] = 1;
  for (int step = 0; step < length; ++step) {
    for (auto& c : next) c = 0;
    for (size_t i = 0; i < size; ++i) {
      const uint32_t* row = &products[i * nrefl];
      for (int m = 0; m <= step; ++m) {
        const mpz_class& c = cur[i * lanes + m];
        if (c == 0) continue;
        for (size_t r = 0; r < nrefl; ++r)
          next[row[r] * lanes + m + (reflections[r].transvection ? 1 : 0)] += c;
      }
    }
    cur.swap(next);
  }
  std::map<int, mpz_class> out;
  for (int m = 0; m <= length; ++m) out[m] = cur[goal * lanes + m];
  return out;
}

mpz_class fac_count_by_det_sequence(const GroupTable& table, const Matrix& target,
                                    const std::vector<Fe>& dets) {
  uint32_t goal = target_index(table, target);
  const Field& F = table.element(0).field();
  const auto& params = table.params();
  for (Fe d : dets)
    if (!params.det_in_x(d, F))
      fail(Errc::DeterminantNotInX, "prescribed determinant is not in X");

  size_t size = table.size();
  size_t nrefl = table.reflections().size();
  const auto& products = table.reflection_products();
  const auto& reflections = table.reflections();

  // pre-bucket the reflection list by determinant so each step walks only
  // its own class
  auto bucket_for = [&](Fe d) {
    std::vector<uint32_t> out;
    for (uint32_t r = 0; r < nrefl; ++r)
      if (reflections[r].det == d) out.push_back(r);
    return out;
  };

  std::vector<mpz_class> cur(size), next(size);
  cur[table.identity_index()] = 1;
  for (Fe d : dets) {
    std::vector<uint32_t> bucket = bucket_for(d);
    for (auto& c : next) c = 0;
    for (size_t i = 0; i < size; ++i) {
      if (cur[i] == 0) continue;
      const uint32_t* row = &products[i * nrefl];
      for (uint32_t r : bucket) next[row[r]] += cur[i];
    }
    cur.swap(next);
  }
  return cur[goal];
}

}  // namespace singerfac
