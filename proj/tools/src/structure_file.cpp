#include "loday/tools/structure_file.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "loday/errors.hpp"
#include "loday/expression.hpp"

namespace loday::tools {

namespace {

using nlohmann::json;

std::string ptr(const std::string& base, const std::string& key) {
  std::string out = base + "/";
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

void only_keys(const json& obj, const std::string& at, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) throw FormatError(ptr(at, k), "unknown field '" + k + "'");
  }
}

const json& require(const json& obj, const std::string& at, const std::string& key) {
  if (!obj.contains(key)) throw FormatError(ptr(at, key), "missing field '" + key + "'");
  return obj.at(key);
}

template <class T>
T integer(const json& v, const std::string& at, long long lo, long long hi) {
  if (!v.is_number_integer()) throw FormatError(at, "expected an integer");
  const auto n = v.get<long long>();
  if (n < lo || n > hi) throw FormatError(at, "integer out of range");
  return static_cast<T>(n);
}

std::uint64_t seed_value(const json& v, const std::string& at) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  return integer<std::uint64_t>(v, at, 0, std::numeric_limits<long long>::max());
}

bool identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

SuperPolynomial expression(const json& v, const std::string& at, const ChartPtr& chart) {
  if (!v.is_string()) throw FormatError(at, "expected an expression string");
  try {
    return parse_polynomial(v.get<std::string>(), chart);
  } catch (const ParseError& e) {
    throw FormatError(at, e.what());
  }
}

ChartPtr coordinates(const json& doc) {
  const auto& list = require(doc, "", "coordinates");
  if (!list.is_array()) throw FormatError("/coordinates", "expected an array");
  std::vector<CoordinateSpec> specs;
  std::set<std::string> names;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto at = ptr("/coordinates", i);
    const auto& c = list[i];
    if (!c.is_object()) throw FormatError(at, "expected an object");
    only_keys(c, at, {"name", "parity", "weight"});
    const auto& name = require(c, at, "name");
    if (!name.is_string() || !identifier(name.get<std::string>()))
      throw FormatError(ptr(at, "name"), "expected an identifier");
    const auto n = name.get<std::string>();
    if (!names.insert(n).second) throw FormatError(ptr(at, "name"), "duplicate coordinate '" + n + "'");
    const auto& par = require(c, at, "parity");
    if (!par.is_string() || (par != "even" && par != "odd"))
      throw FormatError(ptr(at, "parity"), "parity must be \"even\" or \"odd\"");
    Weight w{0};
    if (c.contains("weight")) w = Weight{integer<int>(c.at("weight"), ptr(at, "weight"), -1000, 1000)};
    specs.push_back({n, par == "even" ? Parity::Even : Parity::Odd, w});
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& n = specs[i].name;
    if (n.starts_with("p_") && names.count(n.substr(2)))
      throw FormatError(ptr(ptr("/coordinates", i), "name"),
                        "'" + n + "' collides with the momentum of '" + n.substr(2) + "'");
  }
  try {
    return Chart::make(std::move(specs));
  } catch (const Error& e) {
    throw FormatError("/coordinates", e.what());
  }
}

std::vector<CheckSpec> checks(const json& doc) {
  if (!doc.contains("checks")) return default_checks();
  const auto& list = doc.at("checks");
  if (!list.is_array()) throw FormatError("/checks", "expected an array");
  std::vector<CheckSpec> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto at = ptr("/checks", i);
    const auto& c = list[i];
    if (!c.is_object()) throw FormatError(at, "expected an object");
    only_keys(c, at, {"id", "trials", "max_degree", "max_coeff", "seed"});
    const auto& id = require(c, at, "id");
    if (!id.is_string()) throw FormatError(ptr(at, "id"), "expected an identity name");
    CheckSpec s;
    try {
      s.id = parse_identity(id.get<std::string>());
    } catch (const UsageError& e) {
      throw FormatError(ptr(at, "id"), e.what());
    }
    if (c.contains("trials")) s.options.trials = integer<unsigned>(c.at("trials"), ptr(at, "trials"), 1, 1000000);
    if (c.contains("max_degree"))
      s.options.sampler.max_degree = integer<unsigned>(c.at("max_degree"), ptr(at, "max_degree"), 0, 12);
    if (c.contains("max_coeff"))
      s.options.sampler.max_coeff = integer<unsigned>(c.at("max_coeff"), ptr(at, "max_coeff"), 1, 1000000);
    if (c.contains("seed")) s.options.seed = seed_value(c.at("seed"), ptr(at, "seed"));
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<CheckSpec> default_checks() {
  std::vector<CheckSpec> out;
  for (const auto& e : catalog()) out.push_back({e.id, VerifyOptions{}});
  return out;
}

StructureFile parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("", "expected a JSON object");
  only_keys(doc, "", {"coordinates", "structure", "checks"});
  auto chart = coordinates(doc);
  auto ps = lift(chart);

  const auto& st = require(doc, "", "structure");
  if (!st.is_object()) throw FormatError("/structure", "expected an object");
  only_keys(st, "/structure", {"S", "Q"});
  auto S = st.contains("S") ? expression(st.at("S"), "/structure/S", ps.lifted()) : SuperPolynomial(ps.lifted());
  std::vector<SuperPolynomial> comps(chart->size(), SuperPolynomial(chart));
  if (st.contains("Q")) {
    const auto& q = st.at("Q");
    if (!q.is_object()) throw FormatError("/structure/Q", "expected an object keyed by coordinate name");
    for (const auto& [name, v] : q.items()) {
      const auto idx = chart->find(name);
      if (!idx) throw FormatError(ptr("/structure/Q", name), "unknown coordinate '" + name + "'");
      comps[*idx] = expression(v, ptr("/structure/Q", name), chart);
    }
  }
  auto list = checks(doc);
  try {
    VectorField Q(chart, Parity::Odd, std::move(comps));
    return {OddJacobiStructure(std::move(ps), std::move(S), std::move(Q)), std::move(list)};
  } catch (const Error& e) {
    throw FormatError("/structure", e.what());
  }
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw UsageError("cannot read '" + path.string() + "'");
  return parse_structure(ss.str());
}

}  // namespace loday::tools
