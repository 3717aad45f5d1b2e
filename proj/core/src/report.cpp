#include "singerfac/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace singerfac {

namespace {

using nlohmann::json;

json count_json(const std::optional<mpz_class>& v) {
  if (!v) return nullptr;
  return v->get_str();
}

json report_json(const CountReport& r) {
  json j{{"group", r.group},   {"n", r.n},       {"q", r.q},
         {"epsilon", r.epsilon}, {"x", r.x},     {"ell", r.ell},
         {"agree", r.agree}};
  if (r.m >= 0) j["m"] = r.m;
  j["closed_form"] = count_json(r.closed_form);
  j["character_pipeline"] = count_json(r.character_pipeline);
  j["brute_force"] = count_json(r.brute_force);
  return j;
}

json side_json(const EnnolaSide& s) {
  json j{{"group", s.group},
         {"formula_value", s.formula_value.get_str()},
         {"agree", s.agree}};
  j["brute_force"] = s.brute_force ? json(s.brute_force->get_str()) : json(nullptr);
  if (s.rejected_no_singer) j["rejected"] = "NoSingerCycle";
  return j;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

std::string to_json(const CountReport& report, int indent) {
  return dump(report_json(report), indent);
}

std::string to_json(const std::vector<CountReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return dump(arr, indent);
}

std::string to_json(const EnnolaReport& report, int indent) {
  json polys = json::array();
  for (const auto& p : report.shared_polynomials) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    polys.push_back(coeffs);
  }
  json j{{"n", report.n},
         {"q", report.q},
         {"ell", report.ell},
         {"scope", report.scope == EnnolaScope::Special ? "special" : "full"},
         {"shared_polynomials", polys},
         {"linear", side_json(report.linear)},
         {"unitary", side_json(report.unitary)},
         {"agree", report.agree}};
  return dump(j, indent);
}

std::string to_json(const ConjectureReport& report, int indent) {
  json findings = json::array();
  for (const auto& f : report.findings) {
    findings.push_back(json{{"dets", f.dets},
                            {"m", f.m},
                            {"brute_force", f.brute_force.get_str()},
                            {"conjecture", f.conjecture.get_str()},
                            {"agree", f.agree}});
  }
  json j{{"group", report.group},
         {"ell", report.ell},
         {"exhaustive", report.exhaustive},
         {"agreements", report.agreements},
         {"disagreements", report.disagreements},
         {"findings", findings}};
  return dump(j, indent);
}

std::string csv_header() { return "group,n,q,epsilon,x,ell,m,method,count"; }

namespace {
std::string csv_prefix(const CountReport& r) {
  std::ostringstream os;
  os << r.group << "," << r.n << "," << r.q << "," << (r.epsilon > 0 ? "+" : "-") << "," << r.x
     << "," << r.ell << ",";
  if (r.m >= 0) os << r.m;
  os << ",";
  return os.str();
}
}  // namespace

std::string csv_row(const CountReport& r) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* method, const std::optional<mpz_class>& v) {
    if (!v) return;
    if (!first) os << "\n";
    first = false;
    os << csv_prefix(r) << method << "," << v->get_str();
  };
  emit("closed", r.closed_form);
  emit("character", r.character_pipeline);
  emit("brute", r.brute_force);
  return os.str();
}

std::string to_text(const CountReport& r) {
  std::ostringstream os;
  os << r.group << " ell=" << r.ell;
  if (r.m >= 0) os << " m=" << r.m;
  auto emit = [&](const char* method, const std::optional<mpz_class>& v) {
    if (v) os << " " << method << "=" << v->get_str();
  };
  emit("closed", r.closed_form);
  emit("character", r.character_pipeline);
  emit("brute", r.brute_force);
  os << (r.agree ? " ok" : " MISMATCH");
  return os.str();
}

CountReport make_report(const GroupParams& params, int ell) {
  CountReport r;
  r.group = params.name();
  r.n = params.n;
  r.q = params.q;
  r.epsilon = sign_value(params.eps);
  r.x = params.x;
  r.ell = ell;
  return r;
}

}  // namespace singerfac
