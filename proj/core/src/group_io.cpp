#include <cstring>
#include <istream>
#include <ostream>

#include "singerfac/error.hpp"
#include "singerfac/group.hpp"

namespace singerfac {

namespace {

constexpr char kMagic[4] = {'S', 'F', 'G', 'T'};
constexpr uint32_t kVersion = 1;

void put_u64(std::ostream& out, uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

uint64_t get_u64(std::istream& in) {
  char buf[8];
  in.read(buf, 8);
  if (!in) fail(Errc::InvalidArgument, "truncated group table file");
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<uint8_t>(buf[i]);
  return v;
}

}  // namespace

void GroupTable::save(std::ostream& out) const {
  out.write(kMagic, 4);
  put_u64(out, kVersion);
  put_u64(out, static_cast<uint64_t>(params_.n));
  put_u64(out, params_.eps == Sign::Linear ? 0 : 1);
  put_u64(out, params_.q);
  put_u64(out, params_.x);
  put_u64(out, size());
  int width = Matrix::encoded_width(elements_[0].field());
  put_u64(out, static_cast<uint64_t>(width));
  for (const Matrix& m : elements_) {
    std::string enc = m.encode();
    out.write(enc.data(), static_cast<std::streamsize>(enc.size()));
  }
  put_u64(out, reflections_.size());
  for (size_t r = 0; r < reflections_.size(); ++r) {
    put_u64(out, reflection_index_[r]);
    put_u64(out, reflections_[r].transvection ? 1 : 0);
  }
}

GroupTable GroupTable::load(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    fail(Errc::InvalidArgument, "not a group table file");
  if (get_u64(in) != kVersion) fail(Errc::InvalidArgument, "unsupported group table version");
  int n = static_cast<int>(get_u64(in));
  Sign eps = get_u64(in) == 0 ? Sign::Linear : Sign::Unitary;
  uint64_t q = get_u64(in);
  uint64_t x = get_u64(in);
  uint64_t count = get_u64(in);
  uint64_t width = get_u64(in);

  GroupTable table;
  table.params_ = GroupParams::make(n, eps, q, x);
  FieldPtr field = table.params_.entry_field();
  if (width != static_cast<uint64_t>(Matrix::encoded_width(*field)))
    fail(Errc::InvalidArgument, "group table encoding width mismatch");
  size_t stride = static_cast<size_t>(n) * n * width;
  std::vector<Matrix> elements;
  elements.reserve(count);
  std::string buf(stride, '\0');
  for (uint64_t i = 0; i < count; ++i) {
    in.read(buf.data(), static_cast<std::streamsize>(stride));
    if (!in) fail(Errc::InvalidArgument, "truncated group table file");
    elements.push_back(Matrix::decode(field, n, buf));
  }
  if (mpz_class(static_cast<unsigned long>(count)) != table.params_.expected_order())
    fail(Errc::ClosureMismatch, "cached table order does not match the cardinality formula");

  uint64_t refl_count = get_u64(in);
  const Field& F = *field;
  mpz_class transvections = 0, semisimple = 0;
  for (uint64_t r = 0; r < refl_count; ++r) {
    uint64_t index = get_u64(in);
    uint64_t tag = get_u64(in);
    if (index >= count) fail(Errc::InvalidArgument, "reflection index out of range");
    const Matrix& m = elements[index];
    Fe det = m.determinant();
    bool transvection = det == F.one();
    if (transvection != (tag == 1))
      fail(Errc::InvalidArgument, "reflection tag does not match its determinant");
    (transvection ? transvections : semisimple) += 1;
    table.reflections_.push_back(Reflection{m, det, transvection});
  }
  const auto& p = table.params_;
  if (transvections != transvection_count(p.n, p.eps_q()) ||
      semisimple != semisimple_count_per_det(p.n, p.eps_q()) * (static_cast<long>(p.x) - 1))
    fail(Errc::ClosureMismatch, "cached reflection list does not match the class sizes");
  table.index_elements(std::move(elements));
  return table;
}

}  // namespace singerfac
