#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "singerfac/matrix.hpp"

namespace singerfac {

enum class Sign : int { Linear = +1, Unitary = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

// Parameters of the group G_X = { g in GL^eps_n(q) : det(g) in X }, where X
// is the unique subgroup of order x of the determinant group GL^eps_1
// (order q - eps).  SL corresponds to x = 1 and GL/GU to x = q - eps.
struct GroupParams {
  int n = 0;
  Sign eps = Sign::Linear;
  uint64_t q = 0;  // prime power
  uint64_t x = 1;  // |X|, must divide q - eps

  uint64_t p = 0;  // characteristic
  unsigned e = 0;  // q = p^e

  static GroupParams make(int n, Sign eps, uint64_t q, uint64_t x);

  int64_t eps_q() const { return sign_value(eps) * static_cast<int64_t>(q); }
  uint64_t det_group_order() const;  // q - eps
  // Entry field: GF(q) for the linear family, GF(q^2) for the unitary one.
  FieldPtr entry_field() const;
  bool is_su32() const { return eps == Sign::Unitary && n == 3 && q == 2 && x == 1; }

  // |GL^eps_n(q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - eps^i).
  mpz_class full_group_order() const;
  // x * |SL^eps_n(q)| — the predicted order of G_X.
  mpz_class expected_order() const;
  // Order of a Singer cycle: x * ((eps q)^n - 1)/(eps q - 1).
  mpz_class singer_order() const;
  bool has_singer_cycle() const;

  // True iff the field element (of the entry field) has determinant-group
  // order dividing x, i.e. lies in X.
  bool det_in_x(Fe d, const Field& entry) const;

  std::string name() const;  // e.g. "GU_3(2)", "G{x=2}_2(3)"
};

struct Reflection {
  Matrix matrix;
  Fe det;              // entry-field element
  bool transvection;   // det == 1
};

// All reflections of G_X, each exactly once, found by scanning rank-one
// perturbations I + u v^T of the identity, filtered by membership (unitary
// condition for eps = -, determinant in X) and deduplicated by normalizing v.
// Order is deterministic.  Throws ScanTooLarge past the candidate cap.
std::vector<Reflection> enumerate_reflections(const GroupParams& params,
                                              uint64_t scan_cap = uint64_t(1) << 26);

// Closed forms from the reflection class sizes: the number of transvections,
// and the number of semisimple reflections per fixed determinant != 1.
mpz_class transvection_count(int n, int64_t eps_q);
mpz_class semisimple_count_per_det(int n, int64_t eps_q);

struct SingerElement {
  Matrix matrix;
  uint64_t order = 0;
  // Discrete log of an eigenvalue against the least primitive element of the
  // splitting field representation used by the search.
  uint64_t eigen_exponent = 0;
};

// The enumerated group: canonically encoded elements with a dense index
// (sorted by encoding), the tagged reflection list, and fast products with
// reflections.  Immutable after construction.
class GroupTable {
 public:
  // Breadth-first closure of the reflection set.  Throws GroupTooLarge,
  // ClosureMismatch, or NotReflectionGroup (the SU_3(2) exception).
  static GroupTable generate(const GroupParams& params,
                             uint64_t size_cap = uint64_t(1) << 21);

  const GroupParams& params() const { return params_; }
  size_t size() const { return elements_.size(); }
  const Matrix& element(uint32_t index) const { return elements_[index]; }
  const std::vector<Reflection>& reflections() const { return reflections_; }
  // Index of a tagged reflection inside the element table.
  uint32_t reflection_element_index(size_t r) const { return reflection_index_[r]; }

  std::optional<uint32_t> index_of(const Matrix& m) const;
  uint32_t identity_index() const { return identity_index_; }

  // product index of element(i) * reflections()[r]; the full table is built
  // lazily on first use and then shared.
  const std::vector<uint32_t>& reflection_products() const;

  // Least-encoding element with irreducible characteristic polynomial and
  // multiplicative order x * ((eps q)^n - 1)/(eps q - 1).  Throws
  // NoSingerCycle when none exists (unitary even n; SU_3(2)).
  SingerElement find_singer() const;

  // Binary cache round-trip (header with params, body of sorted encodings).
  void save(std::ostream& out) const;
  static GroupTable load(std::istream& in);

 private:
  GroupTable() = default;
  void index_elements(std::vector<Matrix> elements);

  GroupParams params_;
  std::vector<Matrix> elements_;  // sorted by canonical encoding
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<Reflection> reflections_;
  std::vector<uint32_t> reflection_index_;
  uint32_t identity_index_ = 0;
  // built once on first use; guarded so tables can be shared across worker
  // threads
  mutable std::unique_ptr<std::mutex> products_mutex_ = std::make_unique<std::mutex>();
  mutable std::vector<uint32_t> products_;
  mutable std::optional<SingerElement> singer_;
};

// Companion matrix of the minimal polynomial of the least primitive element
// of GF(q^n): an element of GL_n(F_q) of multiplicative order q^n - 1.
SingerElement companion_singer(int n, uint64_t q);

}  // namespace singerfac
