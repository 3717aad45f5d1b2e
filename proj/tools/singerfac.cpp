// Command-line driver: count (per-route factorization counts), verify
// (built-in identity suites over the desk-scale grid), table (count grids).
//
// Exit codes: 0 success / all routes agree, 1 route disagreement or suite
// failure, 2 invalid parameters or configuration.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

#include "singerfac/bruteforce.hpp"
#include "singerfac/charcount.hpp"
#include "singerfac/combinat.hpp"
#include "singerfac/error.hpp"
#include "singerfac/green.hpp"
#include "singerfac/report.hpp"

using namespace singerfac;

namespace {

struct RunConfig {
  std::string group = "sl";
  int n = 0;
  uint64_t q = 0;
  uint64_t x = 1;      // only for --group gx
  char gx_eps = '+';   // only for --group gx
  std::string len;
  int m = -1;
  std::vector<std::string> methods{"closed", "character", "brute"};
  bool methods_explicit = false;
  std::string format = "text";
  std::string cache_dir;
  uint64_t brute_cap = uint64_t(1) << 21;
};

GroupParams params_from(const RunConfig& cfg) {
  if (cfg.group == "sl") return GroupParams::make(cfg.n, Sign::Linear, cfg.q, 1);
  if (cfg.group == "su") return GroupParams::make(cfg.n, Sign::Unitary, cfg.q, 1);
  if (cfg.group == "gl") return GroupParams::make(cfg.n, Sign::Linear, cfg.q, cfg.q - 1);
  if (cfg.group == "gu") return GroupParams::make(cfg.n, Sign::Unitary, cfg.q, cfg.q + 1);
  if (cfg.group == "gx")
    return GroupParams::make(cfg.n, cfg.gx_eps == '-' ? Sign::Unitary : Sign::Linear, cfg.q,
                             cfg.x);
  fail(Errc::InvalidArgument, "unknown group selector '" + cfg.group + "'");
}

std::pair<int, int> parse_range(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    int v = std::stoi(spec);
    return {v, v};
  }
  int lo = std::stoi(spec.substr(0, colon));
  int hi = std::stoi(spec.substr(colon + 1));
  if (lo > hi) fail(Errc::InvalidArgument, "empty range '" + spec + "'");
  return {lo, hi};
}

std::vector<uint64_t> parse_list(const std::string& spec) {
  std::vector<uint64_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  if (out.empty()) fail(Errc::InvalidArgument, "empty list '" + spec + "'");
  return out;
}

// Group tables are the expensive part; shared across grid points and cached
// on disk when a cache directory is configured.
class TableCache {
 public:
  TableCache(std::string dir, uint64_t cap) : dir_(std::move(dir)), cap_(cap) {}

  std::shared_ptr<const GroupTable> get(const GroupParams& params) {
    std::string key = cache_key(params);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memory_.find(key);
      if (it != memory_.end()) return it->second;
    }
    std::shared_ptr<const GroupTable> table;
    std::filesystem::path file;
    if (!dir_.empty()) {
      file = std::filesystem::path(dir_) / (key + ".bin");
      std::ifstream in(file, std::ios::binary);
      if (in) table = std::make_shared<GroupTable>(GroupTable::load(in));
    }
    if (!table) {
      table = std::make_shared<GroupTable>(GroupTable::generate(params, cap_));
      if (!dir_.empty()) {
        std::filesystem::create_directories(dir_);
        std::ofstream out(file, std::ios::binary);
        if (out) table->save(out);
      }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return memory_.emplace(key, table).first->second;
  }

 private:
  static std::string cache_key(const GroupParams& params) {
    std::ostringstream os;
    os << "gt_" << (params.eps == Sign::Linear ? "p" : "m") << params.n << "_q" << params.q
       << "_x" << params.x << "_v1";
    return os.str();
  }

  std::string dir_;
  uint64_t cap_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GroupTable>> memory_;
};

bool wants(const RunConfig& cfg, const std::string& method) {
  for (const auto& m : cfg.methods)
    if (m == method) return true;
  return false;
}

CountReport run_point(const GroupParams& params, int ell, int m, const RunConfig& cfg,
                      TableCache& cache) {
  CountReport report = make_report(params, ell);
  report.m = m;
  mpz_class x(static_cast<unsigned long>(params.x));
  if (wants(cfg, "closed"))
    report.closed_form = m < 0 ? closed_form_gx(params.n, params.eps_q(), x, ell)
                               : closed_form_refined(params.n, params.eps_q(), x, ell, m);
  if (wants(cfg, "character"))
    report.character_pipeline = m < 0 ? frobenius_count(params, ell)
                                      : frobenius_count_refined(params, ell, m);
  if (wants(cfg, "brute")) {
    bool feasible = params.expected_order() <= static_cast<unsigned long>(cfg.brute_cap);
    if (!feasible && cfg.methods_explicit)
      fail(Errc::GroupTooLarge, params.name() + " exceeds the brute-force cap");
    if (feasible) {
      auto table = cache.get(params);
      SingerElement singer = table->find_singer();
      if (m < 0) {
        report.brute_force = fac_count(*table, singer.matrix, ell);
      } else {
        auto by_m = fac_count_by_transvections(*table, singer.matrix, ell);
        report.brute_force = by_m[m];
      }
    }
  }
  const mpz_class* reference = nullptr;
  for (const auto* v : {&report.closed_form, &report.character_pipeline, &report.brute_force}) {
    if (!v->has_value()) continue;
    if (reference && **v != *reference) report.agree = false;
    if (!reference) reference = &**v;
  }
  return report;
}

void emit(const std::vector<CountReport>& reports, const std::string& format,
          std::ostream& out) {
  if (format == "json") {
    out << to_json(reports, 2) << "\n";
  } else if (format == "csv") {
    out << csv_header() << "\n";
    for (const auto& r : reports) out << csv_row(r) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r) << "\n";
  }
}

int cmd_count(const RunConfig& cfg) {
  GroupParams params = params_from(cfg);
  auto [lo, hi] = parse_range(cfg.len);
  if (lo < 0) fail(Errc::InvalidArgument, "length must be nonnegative");
  // fail fast with exit 2 when the group cannot contain a Singer cycle
  if (!params.has_singer_cycle())
    fail(Errc::NoSingerCycle, params.name() + " contains no Singer cycle");
  TableCache cache(cfg.cache_dir, cfg.brute_cap);
  std::vector<CountReport> reports;
  for (int ell = lo; ell <= hi; ++ell)
    reports.push_back(run_point(params, ell, cfg.m, cfg, cache));
  emit(reports, cfg.format, std::cout);
  for (const auto& r : reports)
    if (!r.agree) return 1;
  return 0;
}

int cmd_table(const RunConfig& cfg, const std::string& n_spec, const std::string& q_spec,
              bool refined, unsigned jobs) {
  auto [n_lo, n_hi] = parse_range(n_spec);
  auto [l_lo, l_hi] = parse_range(cfg.len);
  std::vector<uint64_t> qs = parse_list(q_spec);
  if (n_lo < 1 || l_lo < 0) fail(Errc::InvalidArgument, "invalid ranges");

  struct Point {
    GroupParams params;
    int ell;
    int m;
  };
  std::vector<Point> grid;
  for (int n = n_lo; n <= n_hi; ++n)
    for (uint64_t q : qs) {
      RunConfig probe = cfg;
      probe.n = n;
      probe.q = q;
      GroupParams params;
      try {
        params = params_from(probe);
      } catch (const Error&) {
        continue;  // e.g. x does not divide q - eps for this q
      }
      if (!params.has_singer_cycle()) continue;
      for (int ell = l_lo; ell <= l_hi; ++ell) {
        if (!refined) {
          grid.push_back({params, ell, -1});
        } else {
          if (params.x == 1) continue;
          for (int m = 0; m < ell; ++m) grid.push_back({params, ell, m});
        }
      }
    }

  TableCache cache(cfg.cache_dir, cfg.brute_cap);
  std::vector<CountReport> reports(grid.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= grid.size()) return;
      reports[i] = run_point(grid[i].params, grid[i].ell, grid[i].m, cfg, cache);
    }
  };
  // deterministic output order regardless of completion order: results land
  // in their grid slot and are emitted sequentially afterwards
  std::vector<std::future<void>> pool;
  unsigned workers = std::max(1u, jobs);
  for (unsigned t = 0; t < workers; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();  // rethrows the first failure: no partial table

  emit(reports, cfg.format.empty() || cfg.format == "text" ? "csv" : cfg.format, std::cout);
  for (const auto& r : reports)
    if (!r.agree) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void run_check(std::vector<Check>& checks, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const Error& e) {
    detail = e.what();
  }
  checks.push_back({name, pass, detail});
}

std::vector<GroupParams> verify_grid() {
  return {
      GroupParams::make(2, Sign::Linear, 2, 1),   // SL_2(2)
      GroupParams::make(2, Sign::Linear, 3, 1),   // SL_2(3)
      GroupParams::make(2, Sign::Linear, 3, 2),   // GL_2(3)
      GroupParams::make(3, Sign::Linear, 2, 1),   // SL_3(2) = GL_3(2)
      GroupParams::make(2, Sign::Linear, 4, 1),   // SL_2(4)
      GroupParams::make(3, Sign::Unitary, 2, 3),  // GU_3(2)
      GroupParams::make(3, Sign::Unitary, 3, 1),  // SU_3(3)
      GroupParams::make(3, Sign::Unitary, 3, 4),  // GU_3(3)
  };
}

int cmd_verify(const std::string& suite, const std::string& format, const RunConfig& cfg) {
  std::vector<Check> checks;
  TableCache cache(cfg.cache_dir, cfg.brute_cap);

  if (suite == "minimal") {
    for (const auto& params : verify_grid()) {
      run_check(checks, "minimal " + params.name(), [&](std::string& detail) {
        auto table = cache.get(params);
        SingerElement singer = table->find_singer();
        mpz_class brute = fac_count(*table, singer.matrix, params.n);
        mpz_class h = params.singer_order();
        mpz_class expected;
        mpz_pow_ui(expected.get_mpz_t(), h.get_mpz_t(), params.n - 1);
        detail = "brute=" + brute.get_str() + " h^{n-1}=" + expected.get_str();
        return brute == expected;
      });
    }
  } else if (suite == "lengths") {
    for (const auto& params : verify_grid()) {
      for (int ell = params.n; ell <= params.n + 3; ++ell) {
        run_check(checks, "lengths " + params.name() + " ell=" + std::to_string(ell),
                  [&](std::string& detail) {
                    auto table = cache.get(params);
                    SingerElement singer = table->find_singer();
                    mpz_class brute = fac_count(*table, singer.matrix, ell);
                    mpz_class closed = closed_form_gx(
                        params.n, params.eps_q(),
                        mpz_class(static_cast<unsigned long>(params.x)), ell);
                    mpz_class pipeline = frobenius_count(params, ell);
                    detail = "closed=" + closed.get_str() + " character=" +
                             pipeline.get_str() + " brute=" + brute.get_str();
                    return closed == pipeline && pipeline == brute;
                  });
      }
    }
  } else if (suite == "classes") {
    for (const auto& params : verify_grid()) {
      run_check(checks, "classes " + params.name(), [&](std::string& detail) {
        auto refl = enumerate_reflections(params);
        mpz_class transvections = 0, semisimple = 0;
        for (const auto& r : refl) (r.transvection ? transvections : semisimple) += 1;
        mpz_class t_expected = transvection_count(params.n, params.eps_q());
        mpz_class s_expected = semisimple_count_per_det(params.n, params.eps_q()) *
                               (static_cast<long>(params.x) - 1);
        auto table = cache.get(params);
        detail = "transvections=" + transvections.get_str() + "/" + t_expected.get_str() +
                 " semisimple=" + semisimple.get_str() + "/" + s_expected.get_str() +
                 " order=" + std::to_string(table->size());
        return transvections == t_expected && semisimple == s_expected &&
               mpz_class(static_cast<unsigned long>(table->size())) ==
                   params.expected_order();
      });
    }
    run_check(checks, "classes SU_3(2) NotReflectionGroup", [&](std::string& detail) {
      try {
        GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 1));
      } catch (const Error& e) {
        detail = e.what();
        return e.code() == Errc::NotReflectionGroup;
      }
      detail = "closure unexpectedly matched";
      return false;
    });
  } else if (suite == "ennola") {
    for (uint64_t q : std::vector<uint64_t>{2, 3}) {
      for (int ell : {3, 4, 5}) {
        run_check(checks,
                  "ennola special q=" + std::to_string(q) + " ell=" + std::to_string(ell),
                  [&](std::string& detail) {
                    EnnolaReport r = ennola_check(3, q, ell, EnnolaScope::Special, cfg.brute_cap);
                    detail = r.linear.group + "=" + r.linear.formula_value.get_str() + " " +
                             r.unitary.group + "=" + r.unitary.formula_value.get_str();
                    if (q == 2 && !r.unitary.rejected_no_singer) return false;
                    return r.agree;
                  });
        run_check(checks, "ennola full q=" + std::to_string(q) + " ell=" + std::to_string(ell),
                  [&](std::string& detail) {
                    EnnolaReport r = ennola_check(3, q, ell, EnnolaScope::Full, cfg.brute_cap);
                    detail = r.linear.group + "=" + r.linear.formula_value.get_str() + " " +
                             r.unitary.group + "=" + r.unitary.formula_value.get_str();
                    return r.agree;
                  });
      }
    }
  } else if (suite == "green") {
    run_check(checks, "green Q^{(1)}_{(1)} = 1", [&](std::string& detail) {
      detail = green_polynomial(Partition({1}), Partition({1})).to_string();
      return green_polynomial(Partition({1}), Partition({1})) == IntPolynomial::one();
    });
    run_check(checks, "green t=0 matches symmetric-group characters (|lambda| <= 6)",
              [&](std::string&) {
                for (int n = 1; n <= 6; ++n)
                  for (const auto& lambda : partitions_of(n))
                    for (const auto& rho : partitions_of(n)) {
                      IntPolynomial x = green_table().transition_coefficient(lambda, rho);
                      if (x.coeff(0) != mpz_class(static_cast<long>(mn_character(lambda, rho))))
                        return false;
                    }
                return true;
              });
    run_check(checks, "green t=1 matches the monomial expansion (|rho| <= 6)",
              [&](std::string&) {
                for (int n = 1; n <= 6; ++n)
                  for (const auto& rho : partitions_of(n)) {
                    auto monomials = green_table().power_sum_monomials(rho);
                    for (const auto& lambda : partitions_of(n)) {
                      IntPolynomial x = green_table().transition_coefficient(lambda, rho);
                      mpz_class expected =
                          monomials.count(lambda) ? monomials.at(lambda) : 0;
                      if (x.eval(1) != expected) return false;
                    }
                  }
                return true;
              });
    run_check(checks, "green degree law (deg <= a_stat, equality off character zeros)",
              [&](std::string&) {
                for (int n = 1; n <= 6; ++n)
                  for (const auto& lambda : partitions_of(n))
                    for (const auto& rho : partitions_of(n)) {
                      IntPolynomial qpoly = green_polynomial(lambda, rho);
                      long bound = a_stat(lambda);
                      if (qpoly.degree() > bound) return false;
                      if (mn_character(lambda, rho) != 0 && qpoly.degree() != bound)
                        return false;
                    }
                return true;
              });
  } else if (suite == "conjecture") {
    for (int ell : {3, 4}) {
      run_check(checks, "conjecture GU_3(2) ell=" + std::to_string(ell),
                [&](std::string& detail) {
                  auto table = cache.get(GroupParams::make(3, Sign::Unitary, 2, 3));
                  ConjectureReport r = conjecture_eigenvalue_check(*table, ell, 0);
                  detail = "sequences=" + std::to_string(r.findings.size()) +
                           " agree=" + std::to_string(r.agreements) +
                           " disagree=" + std::to_string(r.disagreements);
                  std::cout << to_json(r) << "\n";
                  return true;  // findings only; never fails the suite
                });
    }
  } else {
    fail(Errc::InvalidArgument, "unknown suite '" + suite + "'");
  }

  size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    if (format != "json")
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  }
  if (format == "json") {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"passed\":" << (checks.size() - failed)
       << ",\"failed\":" << failed << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
      if (i) os << ",";
      os << "{\"name\":\"" << checks[i].name << "\",\"pass\":" << (checks[i].pass ? "true" : "false")
         << "}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << (failed == 0 ? "OK" : "FAILED") << " " << (checks.size() - failed) << "/"
              << checks.size() << " checks passed\n";
  }
  if (suite == "conjecture") return 0;
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reflection-factorization counts of Singer cycles in finite linear and unitary groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("SINGERFAC_CACHE_DIR")) cfg.cache_dir = env;

  auto add_common = [&](CLI::App* cmd, bool need_group) {
    if (need_group) {
      cmd->add_option("--group", cfg.group, "gl|sl|gu|su|gx")->required();
      cmd->add_option("--x", cfg.x, "determinant subgroup order (with --group gx)");
      cmd->add_option("--eps", cfg.gx_eps, "+ or - (with --group gx)");
    }
    cmd->add_option("--format", cfg.format, "text|csv|json");
    cmd->add_option("--cache-dir", cfg.cache_dir, "group table cache directory");
    cmd->add_option("--brute-cap", cfg.brute_cap, "group size cap for brute force");
  };

  CLI::App* count = app.add_subcommand("count", "count factorizations by the requested routes");
  add_common(count, true);
  count->add_option("--n", cfg.n, "dimension")->required();
  count->add_option("--q", cfg.q, "prime power")->required();
  count->add_option("--len", cfg.len, "length or lo:hi range")->required();
  count->add_option("--m", cfg.m, "restrict to exactly m transvection factors");
  std::string methods;
  count->add_option("--method", methods, "comma list from closed,character,brute");

  CLI::App* verify = app.add_subcommand("verify", "run a built-in verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "minimal|lengths|ennola|classes|green|conjecture")
      ->required();
  add_common(verify, false);

  CLI::App* table = app.add_subcommand("table", "emit a count grid");
  add_common(table, true);
  std::string n_spec, q_spec;
  unsigned jobs = 4;
  bool refined = false;
  table->add_option("--n", n_spec, "dimension or lo:hi range")->required();
  table->add_option("--q", q_spec, "comma list of prime powers")->required();
  table->add_option("--len", cfg.len, "length or lo:hi range")->required();
  table->add_option("--method", methods, "comma list from closed,character,brute");
  table->add_flag("--refined", refined, "stratify by the number of transvections");
  table->add_option("--jobs", jobs, "worker pool size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!methods.empty()) {
      cfg.methods.clear();
      cfg.methods_explicit = true;
      std::stringstream ss(methods);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item != "closed" && item != "character" && item != "brute")
          fail(Errc::InvalidArgument, "unknown method '" + item + "'");
        cfg.methods.push_back(item);
      }
    }
    if (count->parsed()) return cmd_count(cfg);
    if (verify->parsed()) return cmd_verify(suite, cfg.format, cfg);
    if (table->parsed()) return cmd_table(cfg, n_spec, q_spec, refined, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::InvalidArgument || e.code() == Errc::NoSingerCycle ||
        e.code() == Errc::NotPrime || e.code() == Errc::FieldTooLarge ||
        e.code() == Errc::GroupTooLarge || e.code() == Errc::XTrivial)
      return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
