#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loday/errors.hpp"
#include "loday/tools/run.hpp"

using namespace loday;
using namespace loday::tools;

int main(int argc, char** argv) {
  CLI::App app{"Verify an odd Jacobi structure file against the identity catalog"};
  std::string file, format = "text", only;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  app.add_option("file", file, "structure file (JSON)")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  auto* only_opt = app.add_option("--only", only, "comma-separated identity ids");
  auto* seed_opt = app.add_option("--seed", seed, "seed for every check");
  auto* trials_opt = app.add_option("--trials", trials, "trials for every check")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    RunOverrides o;
    if (*only_opt) {
      std::vector<IdentityId> ids;
      std::stringstream ss(only);
      for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) ids.push_back(parse_identity(id));
      o.only = std::move(ids);
    }
    if (*seed_opt) o.seed = seed;
    if (*trials_opt) o.trials = trials;
    const auto f = load_structure(file);
    const auto report = run_checks(f.structure, select_checks(f.checks, o));
    emit_report(std::cout, report, format == "json" ? Format::Json : Format::Text);
    return report.exit_code;
  } catch (const FormatError& e) {
    std::cerr << "format error at " << (e.pointer().empty() ? "/" : e.pointer()) << ": "
              << std::string_view(e.what()).substr(e.pointer().size() + 2) << '\n';
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
}
