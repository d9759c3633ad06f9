#include <chrono>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "qkk/suites.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void print_catalog(bool as_json) {
  if (as_json) {
    std::cout << qkk::catalog_json().dump(2) << '\n';
    return;
  }
  for (const auto& s : qkk::suite_catalog()) {
    std::cout << s.name << "\n  requires: ";
    for (std::size_t k = 0; k < s.required.size(); ++k) std::cout << (k ? ", " : "") << s.required[k];
    std::cout << "\n  " << s.summary << '\n';
    for (const auto& a : s.anchors) std::cout << "  anchor: " << a << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact verification suites for SU_q(2) K-theory computations"};
  app.require_subcommand(1);

  qkk::SuiteConfig cfg;
  std::string lmax_text = "20";
  std::string out;
  std::string csv_dir;
  int L0 = 0;
  std::string precision;

  auto* run = app.add_subcommand("run", "run a verification suite and write a JSON report");
  run->add_option("--suite", cfg.suite, "suite name (see 'list')")->required();
  run->add_option("--q", cfg.q, "deformation parameter in [-1,1] minus {0}");
  run->add_option("--lmax", lmax_text, "truncation spin, \"n\" or \"n/2\"");
  run->add_option("--t-grid", cfg.t_grid, "number of t points including both endpoints");
  run->add_option("--n", cfg.n, "dimension n for kring suites");
  run->add_option("--D", cfg.D, "Koszul truncation degree");
  run->add_option("--tol-identity", cfg.tol_identity, "tolerance for identities");
  run->add_option("--tol-decay", cfg.tol_decay, "threshold for the decay tables at the largest l");
  run->add_option("--L0", L0, "tail cut for fredholm and rotation (default min(15, lmax - 2))");
  run->add_option("--precision", precision, "lemma2 arithmetic: standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  run->add_option("--out", out, "JSON report path")->required();
  run->add_option("--csv", csv_dir, "directory for long-format CSV tables");
  run->add_option("--seed", cfg.seed, "seed for randomized property checks");

  bool list_json = false;
  auto* list = app.add_subcommand("list", "list suites, required parameters and anchors");
  list->add_flag("--json", list_json, "print the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (list->parsed()) {
    print_catalog(list_json);
    return exit_pass;
  }

  try {
    cfg.lmax = qkk::HalfInt::parse(lmax_text);
  } catch (const std::exception& e) {
    std::cerr << "usage error: bad --lmax '" << lmax_text << "': " << e.what() << '\n';
    return exit_usage;
  }
  if (run->count("--L0")) cfg.L0 = L0;
  if (!precision.empty()) cfg.precision = precision;

  const auto t0 = std::chrono::steady_clock::now();
  qkk::VerificationReport report("none");
  try {
    report = qkk::run_suite(cfg);
  } catch (const qkk::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error while running suite " << cfg.suite << ": " << e.what() << '\n';
    return exit_fail;
  }
  report.set_wall_time_ms(
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());

  try {
    qkk::write_json(report, out);
    if (!csv_dir.empty()) {
      const auto path = std::filesystem::path(csv_dir) / (cfg.suite + ".csv");
      if (qkk::write_csv(report, path)) std::cout << "csv: " << path.string() << '\n';
    }
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  std::size_t failed = 0;
  for (const auto& c : report.checks())
    if (!c.pass) {
      ++failed;
      std::cerr << "FAIL " << c.name << ": " << c.value << " " << qkk::to_string(c.comparison) << " " << c.threshold
                << '\n';
    }
  std::cout << cfg.suite << ": " << (report.overall() ? "pass" : "fail") << " (" << report.checks().size()
            << " checks, " << failed << " failed)\n";
  return report.overall() ? exit_pass : exit_fail;
}
