#include "loday/tools/run.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <nlohmann/json.hpp>

#include "loday/expression.hpp"
#include "loday/factories.hpp"

namespace loday::tools {

std::vector<CheckSpec> select_checks(const std::vector<CheckSpec>& file_checks, const RunOverrides& o) {
  std::vector<CheckSpec> out;
  if (o.only) {
    for (const auto id : *o.only) {
      bool found = false;
      for (const auto& c : file_checks)
        if (c.id == id) {
          out.push_back(c);
          found = true;
        }
      if (!found) out.push_back({id, VerifyOptions{}});
    }
  } else {
    out = file_checks;
  }
  for (auto& c : out) {
    if (o.seed) c.options.seed = *o.seed;
    if (o.trials) c.options.trials = *o.trials;
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return out;
}

RunReport run_checks(const OddJacobiStructure& J, const std::vector<CheckSpec>& checks) {
  const auto origin = recognize(J);
  RunReport r{std::string(origin_name(origin)), check_structure(J), {}, exit_ok};
  if (!r.structure.valid()) {
    r.exit_code = exit_failure;
    return r;
  }
  const Model m{J, origin};
  for (const auto& c : checks) {
    r.checks.push_back(verify_model_identity(m, c.id, c.options));
    if (!succeeded(r.checks.back().status)) r.exit_code = exit_failure;
  }
  return r;
}

namespace {

using nlohmann::ordered_json;

struct Condition {
  const char* name;
  const char* residual;
  const Residual* value;
};

std::vector<Condition> conditions(const StructureReport& s) {
  return {{"homological", "{Qs,Qs}", &s.homological},
          {"invariance", "{Qs,S}", &s.invariance},
          {"compatibility", "{S,S} + 2 Qs S", &s.compatibility}};
}

ordered_json to_json(const RunReport& r) {
  ordered_json out;
  out["model"] = r.model;
  ordered_json st = ordered_json::object();
  for (const auto& c : conditions(r.structure)) {
    ordered_json e;
    e["pass"] = c.value->pass;
    e["residual"] = c.residual;
    e["value"] = print_expr(c.value->defect);
    st[c.name] = e;
  }
  out["structure"] = st;
  ordered_json list = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = std::string(to_string(c.id));
    e["trials"] = c.trials;
    e["status"] = std::string(to_string(c.status));
    ordered_json ws = ordered_json::array();
    for (const auto& w : c.witnesses) {
      ordered_json we;
      we["label"] = w.label;
      ordered_json in = ordered_json::array();
      for (const auto& f : w.inputs) in.push_back(print_expr(f));
      we["inputs"] = in;
      we["defect"] = print_expr(w.defect);
      ws.push_back(we);
    }
    e["witnesses"] = ws;
    e["notes"] = c.notes;
    e["flags"] = c.flags;
    e["seed"] = c.seed;
    list.push_back(e);
  }
  out["checks"] = list;
  out["exit_code"] = r.exit_code;
  return out;
}

void to_text(std::ostream& os, const RunReport& r) {
  os << "model: " << r.model << '\n';
  for (const auto& c : conditions(r.structure)) {
    os << std::left << std::setw(24) << c.name << (c.value->pass ? "pass" : "fail");
    if (!c.value->pass) os << "  " << c.residual << " = " << print_expr(c.value->defect);
    os << '\n';
  }
  if (!r.structure.valid()) os << "structure conditions failed; identities not run\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(24) << to_string(c.id) << std::setw(26) << to_string(c.status) << "trials=" << c.trials
       << " seed=" << c.seed << '\n';
    for (const auto& f : c.flags) os << "    flag: " << f << '\n';
    if (c.status == CheckStatus::Pass) continue;
    for (const auto& w : c.witnesses) {
      os << "    witness " << w.label << ':';
      for (const auto& f : w.inputs) os << " [" << print_expr(f) << ']';
      os << " -> " << print_expr(w.defect) << '\n';
    }
  }
  os << (r.exit_code == exit_ok ? "OK" : "FAILED") << '\n';
}

}  // namespace

void emit_report(std::ostream& os, const RunReport& r, Format f) {
  if (f == Format::Json)
    os << to_json(r).dump(2) << '\n';
  else
    to_text(os, r);
}

}  // namespace loday::tools
