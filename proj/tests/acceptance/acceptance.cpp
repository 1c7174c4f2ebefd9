// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "loday/tools/run.hpp"

using namespace loday;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

VerifyOptions trials(unsigned n, std::uint64_t seed = 0) {
  VerifyOptions o;
  o.trials = n;
  o.seed = seed;
  return o;
}

bool zero_residuals(const StructureReport& r) {
  return r.homological.defect.is_zero() && r.invariance.defect.is_zero() && r.compatibility.defect.is_zero();
}

std::string describe(const CheckReport& r) {
  std::string s = std::string(to_string(r.id)) + " " + std::string(to_string(r.status)) + " (" +
                  std::to_string(r.trials) + " trials";
  if (!r.witnesses.empty()) s += ", witness: " + r.witnesses.front().label;
  return s + ")";
}

CheckReport run_identity(const OddJacobiStructure& J, IdentityId id, const VerifyOptions& o) {
  return verify_model_identity(Model{J, recognize(J)}, id, o);
}

void require_pass(Outcome& out, const std::string& model, const OddJacobiStructure& J,
                  std::initializer_list<IdentityId> ids, const VerifyOptions& o) {
  for (auto id : ids) {
    const auto r = run_identity(J, id, o);
    out.require(r.status == CheckStatus::Pass && r.witnesses.empty() && r.trials >= o.trials,
                model + ": " + describe(r));
  }
}

Outcome criterion1() {
  Outcome out;
  for (unsigned n : {1u, 2u}) {
    const auto r = check_structure(make_odd_contact(n));
    out.require(r.valid() && zero_residuals(r), "odd contact n=" + std::to_string(n));
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto o = trials(200);
  require_pass(out, "odd contact n=1", make_odd_contact(1), {IdentityId::JacobiLoday, IdentityId::LeftLeibniz}, o);
  require_pass(out, "de Rham R^{2|2}", fixtures::de_rham_manifold(), {IdentityId::JacobiLoday, IdentityId::LeftLeibniz},
               o);
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto J = make_odd_contact(1);
  const auto probe = run_identity(J, IdentityId::SkewsymmetryProbe, trials(100));
  out.require(probe.status == CheckStatus::ExpectedFailConfirmed && !probe.witnesses.empty(), describe(probe));
  if (!probe.witnesses.empty()) {
    const auto& w = probe.witnesses.front();
    std::string in;
    for (const auto& f : w.inputs) in += (in.empty() ? "" : ", ") + print_expr(f);
    out.note("witness (" + in + ") -> " + print_expr(w.defect));
  }
  require_pass(out, "odd contact n=1", J, {IdentityId::Symmetrization}, trials(100));
  require_pass(out, "de Rham R^{2|2}", fixtures::de_rham_manifold(), {IdentityId::SkewsymmetryProbe}, trials(100));
  return out;
}

Outcome criterion4() {
  Outcome out;
  require_pass(out, "odd contact n=1", make_odd_contact(1),
               {IdentityId::Bihamiltonian, IdentityId::QYCommute, IdentityId::YIsJacobi, IdentityId::YMorphism,
                IdentityId::MixedComm, IdentityId::YOfOddBracket, IdentityId::NestedCorollary, IdentityId::YProduct,
                IdentityId::RightLeibnizDefect, IdentityId::CartanTable, IdentityId::MasterEquation},
               trials(100));
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto ids = {IdentityId::StarAssociative, IdentityId::StarCommIsBracket, IdentityId::GenLeibniz,
                    IdentityId::DerivedLeibniz, IdentityId::StarHam};
  require_pass(out, "odd contact n=1", make_odd_contact(1), ids, trials(100));
  const auto A = fixtures::solvable_jacobi(1, 0);
  out.require(check_structure(A).valid(), "solvable Jacobi algebroid is valid");
  require_pass(out, "solvable Jacobi algebroid", A, ids, trials(100));
  return out;
}

Outcome criterion6() {
  Outcome out;
  const auto base = make_lie_algebroid(fixtures::su2());
  out.require(check_structure(make_q_manifold(base.chart, base.Q)).homological.pass, "su(2) Q is homological");
  const std::array<const char*, 3> entry{"Q^3_12", "Q^1_23", "Q^2_31"};
  for (int bump = 1; bump <= 3; ++bump) {
    const auto L = make_lie_algebroid(fixtures::su2(bump));
    const auto r = check_structure(make_q_manifold(L.chart, L.Q));
    const std::string what = std::string(entry[bump - 1]) + " perturbed to 2: homological residual " +
                             (r.homological.defect.is_zero() ? "0" : print_expr(r.homological.defect));
    out.require(!r.homological.defect.is_zero(), what);
  }
  // Diagnostic: perturbing an entry that is zero in su(2) does break the Jacobi identity.
  auto d = fixtures::su2();
  d.set_structure(0, 0, 1, fixtures::constant(d.base(), 1));
  const auto L = make_lie_algebroid(d);
  const auto r = check_structure(make_q_manifold(L.chart, L.Q));
  out.note("Q^1_12 perturbed from 0 to 1: homological residual " + print_expr(r.homological.defect));
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto A = fixtures::solvable_jacobi(1, 0);
  const auto origin = std::get<JacobiAlgebroidOrigin>(recognize(A));
  const auto r = algebroid_bracket_weights(A, origin, trials(100));
  out.require(r.status != CheckStatus::Fail && r.witnesses.empty(), "weights: " + describe(r));
  const auto shifts = bracket_shifts(A);
  out.require(shifts && shifts->odd_bracket == -1 && shifts->loday_bracket == -2, "declared shifts -1 and -2");

  // Independent pass over weight-homogeneous samples.
  SamplerOptions so;
  so.weight_homogeneous = true;
  PolynomialSampler s(A.chart(), so, 7);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const auto f = s.sample(), g = s.sample();
    const auto wf = weight_of(f), wg = weight_of(g);
    const auto b = odd_jacobi_bracket(A, f, g), l = loday_bracket(A, f, g);
    if (!b.is_zero()) out.require(weight_of(b) == *wf + *wg - 1, "[[f,g]] weight on " + print_expr(f));
    if (!l.is_zero()) out.require(weight_of(l) == *wf + *wg - 2, "{f,g} weight on " + print_expr(f));
    checked += !b.is_zero() + !l.is_zero();
  }
  out.require(checked > 0, "some brackets are nonzero");

  const auto Z = fixtures::solvable_jacobi(0, 0);
  out.require(check_structure(Z).valid(), "zero cocycle is valid");
  PolynomialSampler z(Z.chart(), SamplerOptions{}, 11);
  bool all_zero = true;
  for (int k = 0; k < 100; ++k) all_zero = all_zero && loday_bracket(Z, z.sample(), z.sample()).is_zero();
  out.require(all_zero, "zero cocycle gives a zero Loday bracket");
  return out;
}

Outcome criterion8() {
  Outcome out;
  const std::vector<std::pair<std::string, OddJacobiStructure>> models{
      {"odd contact n=1", make_odd_contact(1)},
      {"odd contact n=2", make_odd_contact(2)},
      {"de Rham R^{2|2}", fixtures::de_rham_manifold()},
      {"solvable Jacobi algebroid", fixtures::solvable_jacobi(1, 0)},
      {"su(2) Lie algebroid", fixtures::lie_structure(fixtures::su2())}};
  for (const auto& [name, J] : models)
    require_pass(out, name, J, {IdentityId::OddBracketCoords, IdentityId::LodayBracketCoords}, trials(100));

  const auto d = run_identity(make_odd_contact(1), IdentityId::ReferenceDisplays, trials(100));
  out.require(d.status == CheckStatus::ExpectedFailConfirmed && !d.flags.empty(), "odd contact displays are flagged");
  for (const auto& f : d.flags) out.note("flag: " + f);
  return out;
}

struct Cli {
  int code = -1;
  std::string out;
};

Cli verify(const std::string& args) {
  const std::string cmd = std::string(LODAY_VERIFY_EXE) + " " + args + " 2>/dev/null";
  Cli r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::map<std::string, std::string> statuses(const json& j) {
  std::map<std::string, std::string> m;
  for (const auto& c : j["checks"]) m[c["id"]] = c["status"];
  return m;
}

bool structure_ok(const json& j) {
  return j["structure"]["homological"]["pass"] && j["structure"]["invariance"]["pass"] &&
         j["structure"]["compatibility"]["pass"];
}

Outcome criterion9() {
  Outcome out;
  const std::string dir = LODAY_DATA_DIR;
  std::map<std::string, json> reports;
  auto load = [&](const std::string& file, int expected_exit) {
    const auto a = verify(dir + "/" + file + " --format json");
    const auto b = verify(dir + "/" + file + " --format json");
    out.require(a.code == expected_exit, file + ": exit " + std::to_string(a.code));
    out.require(a.out == b.out, file + ": byte-stable report");
    try {
      reports[file] = json::parse(a.out);
    } catch (const json::exception&) {
      out.require(false, file + ": report is JSON");
      reports[file] = json::object({{"checks", json::array()}, {"structure", json::object()}});
    }
  };
  for (const auto* f : {"odd_contact_1.json", "odd_contact_2.json", "qmanifold_derham_2.json", "su2_lie_algebroid.json",
                        "su2_perturbed_1.json", "su2_perturbed_2.json", "su2_perturbed_3.json",
                        "solvable_jacobi_algebroid.json", "solvable_jacobi_zero_cocycle.json",
                        "action_jacobi_algebroid.json"})
    load(f, 0);
  load("qmanifold_nonhomological.json", 1);
  load("solvable_jacobi_bad_cocycle.json", 1);

  // Criterion 1.
  out.require(structure_ok(reports["odd_contact_1.json"]) && structure_ok(reports["odd_contact_2.json"]), "cli: 1");

  // Criteria 2-5 and 8 on the odd contact file.
  const auto oc = statuses(reports["odd_contact_1.json"]);
  for (const auto& [id, st] : oc) {
    const bool expected = id == "SKEWSYMMETRY_PROBE" || id == "REFERENCE_DISPLAYS";
    out.require(st == (expected ? "expected-fail-confirmed" : "pass"), "cli: odd_contact_1 " + id + " " + st);
  }
  for (const auto& c : reports["odd_contact_1.json"]["checks"])
    if (c["id"] == "SKEWSYMMETRY_PROBE") out.require(!c["witnesses"].empty(), "cli: skew witness present");

  const auto dr = statuses(reports["qmanifold_derham_2.json"]);
  for (const auto& [id, st] : dr)
    out.require(st == (id == "REFERENCE_DISPLAYS" ? "expected-fail-confirmed" : "pass"),
                "cli: qmanifold_derham_2 " + id + " " + st);

  // Criteria 5, 7 and 8 on the algebroids.
  for (const auto* f : {"solvable_jacobi_algebroid.json", "solvable_jacobi_zero_cocycle.json", "odd_contact_2.json",
                        "action_jacobi_algebroid.json", "su2_lie_algebroid.json"})
    for (const auto& [id, st] : statuses(reports[f]))
      out.require(st != "fail", std::string("cli: ") + f + " " + id + " " + st);

  // Criterion 6: the CLI must report the same verdicts as the library.
  out.require(structure_ok(reports["su2_lie_algebroid.json"]), "cli: su(2) valid");
  for (int bump = 1; bump <= 3; ++bump) {
    const auto& j = reports["su2_perturbed_" + std::to_string(bump) + ".json"];
    const auto L = make_lie_algebroid(fixtures::su2(bump));
    const bool library = check_structure(make_q_manifold(L.chart, L.Q)).homological.pass;
    out.require(j["structure"]["homological"]["pass"] == library,
                "cli: su2_perturbed_" + std::to_string(bump) + " agrees with the library");
  }
  out.note("criterion 6 verdicts reproduced as computed (homological residual zero), see criterion 6");

  // Negative files are rejected.
  out.require(!reports["qmanifold_nonhomological.json"]["structure"]["homological"]["pass"], "cli: nonhomological");
  out.require(reports["solvable_jacobi_bad_cocycle.json"]["checks"].empty(), "cli: bad cocycle runs no identities");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double budget_s = 0;  // 0: no runtime bound
  };
  const std::vector<Criterion> criteria{{"structure validation", criterion1, 5},
                                        {"Loday-Poisson bracket", criterion2, 60},
                                        {"non-skewness", criterion3},
                                        {"Hamiltonian calculus", criterion4, 300},
                                        {"derived product", criterion5},
                                        {"Lie algebroid gate", criterion6},
                                        {"Jacobi algebroid weights", criterion7},
                                        {"convention cross-checks", criterion8},
                                        {"CLI end-to-end", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].budget_s > 0)
      o.require(secs < criteria[i].budget_s, "runtime over " + std::to_string(int(criteria[i].budget_s)) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "CRITERION " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].name << " (" << secs
         << " s)";
    std::cout << line.str() << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
