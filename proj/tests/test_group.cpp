#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "singerfac/error.hpp"
#include "singerfac/group.hpp"

using namespace singerfac;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}
}  // namespace

TEST_CASE("group parameter validation") {
  CHECK_THROWS_AS(GroupParams::make(2, Sign::Linear, 6, 1), Error);   // 6 not a prime power
  CHECK_THROWS_AS(GroupParams::make(2, Sign::Linear, 3, 3), Error);   // 3 does not divide q-1=2
  CHECK_NOTHROW(GroupParams::make(2, Sign::Unitary, 3, 4));           // x | q+1
  auto p = GroupParams::make(2, Sign::Linear, 4, 3);
  CHECK(p.p == 2);
  CHECK(p.e == 2);
  CHECK(p.name() == "GL_2(4)");
  CHECK(GroupParams::make(3, Sign::Unitary, 2, 1).name() == "SU_3(2)");
  CHECK(GroupParams::make(2, Sign::Linear, 3, 2).name() == "GL_2(3)");
}

TEST_CASE("cardinality formula") {
  CHECK(GroupParams::make(2, Sign::Linear, 2, 1).expected_order() == 6);     // SL_2(2)
  CHECK(GroupParams::make(2, Sign::Linear, 3, 2).full_group_order() == 48);  // GL_2(3)
  CHECK(GroupParams::make(3, Sign::Unitary, 2, 3).expected_order() == 648);  // GU_3(2)
  CHECK(GroupParams::make(3, Sign::Unitary, 3, 1).expected_order() == 6048); // SU_3(3)
  CHECK(GroupParams::make(3, Sign::Unitary, 3, 4).expected_order() == 24192);
}

TEST_CASE("Singer orders") {
  CHECK(GroupParams::make(2, Sign::Linear, 3, 1).singer_order() == 4);
  CHECK(GroupParams::make(3, Sign::Unitary, 2, 3).singer_order() == 9);
  CHECK(GroupParams::make(3, Sign::Linear, 2, 1).singer_order() == 7);
  CHECK_FALSE(GroupParams::make(2, Sign::Unitary, 3, 4).has_singer_cycle());
  CHECK_FALSE(GroupParams::make(3, Sign::Unitary, 2, 1).has_singer_cycle());  // SU_3(2)
  CHECK(GroupParams::make(3, Sign::Unitary, 2, 3).has_singer_cycle());
}

TEST_CASE("companion_singer examples") {
  SUBCASE("n=2, q=2: minimal polynomial z^2+z+1") {
    SingerElement s = companion_singer(2, 2);
    CHECK(s.order == 3);
    const Field& F = s.matrix.field();
    CHECK(s.matrix.at(0, 0).is_zero());
    CHECK(s.matrix.at(0, 1) == F.one());
    CHECK(s.matrix.at(1, 0) == F.one());
    CHECK(s.matrix.at(1, 1) == F.one());
    CHECK(element_order(s.matrix, 3) == 3);
    CHECK(is_irreducible_element(s.matrix));
  }
  SUBCASE("n=1: the 1x1 generator") {
    for (uint64_t q : {2, 3, 5, 9}) {
      SingerElement s = companion_singer(1, q);
      CHECK(s.order == q - 1);
      if (q > 2) CHECK(element_order(s.matrix, q - 1) == q - 1);
    }
  }
  SUBCASE("n=3, q=2: order 7, irreducible characteristic polynomial") {
    SingerElement s = companion_singer(3, 2);
    CHECK(s.order == 7);
    CHECK(element_order(s.matrix, 7 * 6) == 7);
    CHECK(is_irreducible_element(s.matrix));
  }
  SUBCASE("size cap") { CHECK_THROWS_AS(companion_singer(23, 2), Error); }
}

TEST_CASE("is_irreducible_element") {
  auto F3 = build_field(3, 1);
  CHECK_FALSE(is_irreducible_element(Matrix::identity(F3, 2)));
  Matrix diag(F3, 2);
  diag.at(0, 0) = F3->one();
  diag.at(1, 1) = F3->generator();
  CHECK_FALSE(is_irreducible_element(diag));
  CHECK(is_irreducible_element(companion_singer(2, 3).matrix));
}

TEST_CASE("matrix basics: inverse and Cayley-Hamilton") {
  SingerElement s = companion_singer(3, 2);
  Matrix m = s.matrix;
  CHECK((m * m.inverse()).is_identity());
  FieldPoly chi = m.characteristic_polynomial();
  CHECK(chi.degree() == 3);
  CHECK(chi.is_monic());
  const Field& F = m.field();
  Matrix acc(m.field_ptr(), 3);
  Matrix power = Matrix::identity(m.field_ptr(), 3);
  for (int i = 0; i <= chi.degree(); ++i) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        acc.at(r, c) = F.add(acc.at(r, c), F.mul(chi.coeff(i), power.at(r, c)));
    power = power * m;
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(acc.at(r, c).is_zero());
}

TEST_CASE("encode/decode round trip") {
  SingerElement s = companion_singer(2, 3);
  std::string enc = s.matrix.encode();
  Matrix back = Matrix::decode(s.matrix.field_ptr(), 2, enc);
  CHECK(back == s.matrix);
  CHECK(back.encode() == enc);
}

TEST_CASE("reflection scan matches the closed-form class sizes") {
  struct Case {
    int n;
    Sign eps;
    uint64_t q, x;
    long transvections, semisimple;
  };
  for (const Case& c : {
           Case{2, Sign::Linear, 3, 2, 8, 12},      // GL_2(3)
           Case{2, Sign::Linear, 2, 1, 3, 0},       // SL_2(2)
           Case{3, Sign::Unitary, 2, 3, 9, 24},     // GU_3(2): 12 per det, 2 dets
           Case{3, Sign::Unitary, 2, 1, 9, 0},      // SU_3(2)
           Case{3, Sign::Linear, 2, 1, 21, 0},      // SL_3(2)
           Case{2, Sign::Linear, 4, 3, 15, 40},     // GL_2(4): 20 per det, 2 dets
           Case{3, Sign::Unitary, 3, 4, 56, 189},   // GU_3(3): 63 per det, 3 dets
       }) {
    auto params = GroupParams::make(c.n, c.eps, c.q, c.x);
    auto refl = enumerate_reflections(params);
    long transvections = 0, semisimple = 0;
    for (const auto& r : refl) (r.transvection ? transvections : semisimple) += 1;
    CHECK(transvections == c.transvections);
    CHECK(semisimple == c.semisimple);
    CHECK(transvection_count(c.n, params.eps_q()) == c.transvections);
    CHECK(semisimple_count_per_det(c.n, params.eps_q()) * (long(c.x) - 1) == c.semisimple);

    const Field& F = *params.entry_field();
    for (const auto& r : refl) {
      CHECK(r.transvection == (r.det == F.one()));
      CHECK(r.matrix.determinant() == r.det);
      // fixed space of dimension n-1: rank(g - I) = 1
      std::vector<std::vector<Fe>> rows(c.n, std::vector<Fe>(c.n));
      for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
          rows[i][j] = F.sub(r.matrix.at(i, j), i == j ? F.one() : fe_zero());
      int rank = 0;
      for (int col = 0, row = 0; col < c.n && row < c.n; ++col) {
        int pivot = -1;
        for (int i = row; i < c.n; ++i)
          if (!rows[i][col].is_zero()) {
            pivot = i;
            break;
          }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[row]);
        for (int i = 0; i < c.n; ++i) {
          if (i == row || rows[i][col].is_zero()) continue;
          Fe factor = F.div(rows[i][col], rows[row][col]);
          for (int j = 0; j < c.n; ++j)
            rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[row][j]));
        }
        ++row;
        ++rank;
      }
      CHECK(rank == 1);
    }
  }
}

TEST_CASE("group closure orders") {
  CHECK(GroupTable::generate(GroupParams::make(2, Sign::Linear, 2, 1)).size() == 6);
  CHECK(GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 3)).size() == 648);
  CHECK(GroupTable::generate(GroupParams::make(3, Sign::Unitary, 3, 1)).size() == 6048);
}

TEST_CASE("SU_3(2) reports NotReflectionGroup") {
  CHECK(code_of([] { GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 1)); }) ==
        Errc::NotReflectionGroup);
}

TEST_CASE("size cap enforcement") {
  CHECK(code_of([] { GroupTable::generate(GroupParams::make(3, Sign::Linear, 7, 1)); }) ==
        Errc::GroupTooLarge);
}

TEST_CASE("reflection scan cap enforcement") {
  CHECK(code_of([] { enumerate_reflections(GroupParams::make(4, Sign::Unitary, 5, 1)); }) ==
        Errc::ScanTooLarge);
}

TEST_CASE("determinant image is exactly X") {
  for (auto params : {GroupParams::make(2, Sign::Linear, 3, 2),
                      GroupParams::make(3, Sign::Unitary, 2, 3)}) {
    GroupTable table = GroupTable::generate(params);
    const Field& F = *params.entry_field();
    std::set<int32_t> dets;
    for (size_t i = 0; i < table.size(); ++i) {
      Fe d = table.element(static_cast<uint32_t>(i)).determinant();
      CHECK(params.det_in_x(d, F));
      dets.insert(d.v);
    }
    CHECK(dets.size() == params.x);
  }
}

TEST_CASE("unitary membership for every table element") {
  auto params = GroupParams::make(3, Sign::Unitary, 2, 3);
  GroupTable table = GroupTable::generate(params);
  for (size_t i = 0; i < table.size(); ++i) {
    const Matrix& g = table.element(static_cast<uint32_t>(i));
    CHECK((g * g.conjugate_transpose(params.q)).is_identity());
  }
}

TEST_CASE("find_singer on the grid") {
  struct Case {
    GroupParams params;
    uint64_t order;
  };
  for (const Case& c : {Case{GroupParams::make(2, Sign::Linear, 3, 1), 4},
                        Case{GroupParams::make(3, Sign::Unitary, 2, 3), 9},
                        Case{GroupParams::make(2, Sign::Linear, 3, 2), 8}}) {
    GroupTable table = GroupTable::generate(c.params);
    SingerElement s = table.find_singer();
    CHECK(s.order == c.order);
    CHECK(is_irreducible_element(s.matrix));
    mpz_class bound = c.params.full_group_order();
    CHECK(element_order(s.matrix, bound.get_ui()) == c.order);
    // the determinant generates X
    Fe det = s.matrix.determinant();
    CHECK(s.matrix.field().element_order(det) == c.params.x);
    // the inverse is in the table and is itself irreducible
    Matrix inv = s.matrix.inverse();
    CHECK(table.index_of(inv).has_value());
    CHECK(is_irreducible_element(inv));
  }
}

TEST_CASE("find_singer rejects the unitary even-dimension case") {
  GroupTable table = GroupTable::generate(GroupParams::make(2, Sign::Unitary, 3, 4));
  CHECK(code_of([&] { table.find_singer(); }) == Errc::NoSingerCycle);
}

TEST_CASE("group table save/load round trip") {
  auto params = GroupParams::make(2, Sign::Linear, 3, 2);
  GroupTable table = GroupTable::generate(params);
  std::stringstream buffer;
  table.save(buffer);
  GroupTable loaded = GroupTable::load(buffer);
  CHECK(loaded.size() == table.size());
  CHECK(loaded.reflections().size() == table.reflections().size());
  for (size_t i = 0; i < table.size(); ++i)
    CHECK(loaded.element(static_cast<uint32_t>(i)) == table.element(static_cast<uint32_t>(i)));
  SingerElement a = table.find_singer();
  SingerElement b = loaded.find_singer();
  CHECK(a.matrix == b.matrix);
  CHECK(a.eigen_exponent == b.eigen_exponent);
}

TEST_CASE("golden encodings: deterministic construction end to end") {
  // Frozen fingerprints of the serialized tables.  A change here means the
  // deterministic choices (modulus, generator, encoding, sort order) moved
  // and every cached table on disk is invalidated.
  auto fnv1a = [](const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  };
  struct Golden {
    GroupParams params;
    size_t size;
    uint64_t table_fnv, singer_fnv, eigexp;
  };
  for (const Golden& g : {
           Golden{GroupParams::make(2, Sign::Linear, 3, 1), 292,
                  13753214942848293578ull, 2932291548022307034ull, 2},
           Golden{GroupParams::make(2, Sign::Linear, 3, 2), 580,
                  9006254927648812057ull, 2931333873394324478ull, 5},
           Golden{GroupParams::make(3, Sign::Unitary, 2, 3), 6428,
                  17980711235783161058ull, 18032393034824241605ull, 14},
           Golden{GroupParams::make(2, Sign::Linear, 4, 1), 548,
                  14695003439298191616ull, 2931332773882696267ull, 6},
       }) {
    GroupTable table = GroupTable::generate(g.params);
    std::stringstream buf;
    table.save(buf);
    std::string bytes = buf.str();
    CHECK(bytes.size() == g.size);
    CHECK(fnv1a(bytes) == g.table_fnv);
    SingerElement s = table.find_singer();
    CHECK(fnv1a(s.matrix.encode()) == g.singer_fnv);
    CHECK(s.eigen_exponent == g.eigexp);
    // the eigenvalue exponent determines the order inside the splitting field
    mpz_class units = 1;
    uint64_t entry = table.element(0).field().size();
    for (int i = 0; i < g.params.n; ++i) units *= static_cast<long>(entry);
    units -= 1;
    mpz_class ord = units / gcd(mpz_class(static_cast<long>(g.eigexp)), units);
    CHECK(ord == table.params().singer_order());
  }
}

TEST_CASE("group table load rejects corrupted input") {
  auto params = GroupParams::make(2, Sign::Linear, 3, 1);
  GroupTable table = GroupTable::generate(params);
  std::stringstream buffer;
  table.save(buffer);
  std::string bytes = buffer.str();

  SUBCASE("bad magic") {
    std::string bad = bytes;
    bad[0] = 'X';
    std::stringstream in(bad);
    CHECK_THROWS_AS(GroupTable::load(in), Error);
  }
  SUBCASE("truncated body") {
    std::stringstream in(bytes.substr(0, bytes.size() / 2));
    CHECK_THROWS_AS(GroupTable::load(in), Error);
  }
  SUBCASE("dropped element changes the order") {
    // remove one encoded element and patch the count down by one
    int width = Matrix::encoded_width(table.element(0).field());
    size_t stride = static_cast<size_t>(2) * 2 * width;
    std::string bad = bytes;
    bad[4 + 8 * 5] = static_cast<char>(table.size() - 1);  // count field, little-endian
    bad.erase(4 + 8 * 7, stride);                          // first element record
    std::stringstream in(bad);
    CHECK_THROWS_AS(GroupTable::load(in), Error);
  }
}

TEST_CASE("element_order basics") {
  auto F = build_field(2, 1);
  CHECK(element_order(Matrix::identity(F, 2), 6) == 1);
  CHECK(element_order(companion_singer(2, 2).matrix, 6) == 3);
}
