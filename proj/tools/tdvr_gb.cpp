#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "tdvr/errors.hpp"

namespace {

int finish(const tdvr::cli::Outcome& out, const std::string& report_path) {
  std::cout << out.human;
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write report to '" << report_path << "'\n";
      return tdvr::cli::kPrecondition;
    }
    f << tdvr::cli::render(out.report);
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and flatness over truncated discrete valuation rings", "tdvr-gb"};
  tdvr::cli::CommandOptions opt;
  std::string instance_path, report_path;
  std::vector<std::string> extra;
  std::uint64_t max_degree = 0;

  app.add_option("command", opt.command, "gb | minimal-gb | nf | member | flat | rank | gr | oracle")->required();
  app.add_option("instance", instance_path, "instance file")->required();
  app.add_option("element", extra, "element argument for nf and member");
  app.add_option("--order", opt.order, "term order, e.g. \"deglex pot 2 1\"");
  app.add_option("--out", report_path, "write the machine report (JSON) to this file");
  auto* md = app.add_option("--max-degree", max_degree, "degree bound D for per-degree data");
  app.add_flag("--trace", opt.trace, "include reduction traces");
  app.add_flag("--dump-slices", opt.dump_slices, "include per-degree slices (gr, oracle)");
  app.add_option("--pair-budget", opt.pair_budget, "maximum number of processed pairs")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tdvr::cli::kParse;
  }
  if (md->count() > 0) opt.max_degree = max_degree;
  if (!tdvr::cli::known_command(opt.command)) {
    std::cerr << "unknown command '" << opt.command << "'\n";
    return tdvr::cli::kParse;
  }
  if (extra.size() > 1) {
    std::cerr << "too many positional arguments\n";
    return tdvr::cli::kParse;
  }
  if (!extra.empty()) opt.element = extra.front();

  try {
    const tdvr::cli::Instance inst = tdvr::cli::load_instance(instance_path);
    return finish(tdvr::cli::run_command(inst, opt), report_path);
  } catch (const tdvr::ParseError& e) {
    return finish(tdvr::cli::load_failure(opt, e.what()), report_path);
  }
}
