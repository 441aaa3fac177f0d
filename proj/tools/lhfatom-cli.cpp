#include "cli/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace lhfatom;

lhf::GaugeSide parse_side(const std::string &s) {
  if (s == "below")
    return lhf::GaugeSide::below;
  if (s == "above")
    return lhf::GaugeSide::above;
  throw io::ConfigError("--side must be 'below' or 'above'");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"lhfatom: localized Hartree-Fock exchange for spherical "
               "atoms/ions with fractional occupation numbers"};
  app.require_subcommand(1);

  std::string config_path, out_path, side_str = "below";
  double delta = 0.1, n_int = 0.0;
  std::uint64_t seed = 1;
  int trials = 1000;

  auto *single = app.add_subcommand("single", "one self-consistent run");
  single->add_option("--config", config_path, "config file")->required();
  single->add_option("--out", out_path, "output path (default stdout)");
  single->add_option("--side", side_str, "gauge at integer N: below|above");

  auto *scan = app.add_subcommand("scan", "E(N) scan, CSV output");
  scan->add_option("--config", config_path, "config file")->required();
  scan->add_option("--out", out_path, "output path (default stdout)");
  scan->add_option("--side", side_str, "gauge at integer N: below|above");

  auto *jump = app.add_subcommand("jump", "potential jump across integer N");
  jump->add_option("--config", config_path, "config file")->required();
  jump->add_option("--out", out_path, "output path (default stdout)");
  jump->add_option("--N", n_int, "integer particle number")->required();
  jump->add_option("--delta", delta, "offset from the integer (default 0.1)");

  auto *beta = app.add_subcommand("beta-table",
                                  "renormalized fraction beta(alpha, N)");
  beta->add_option("--out", out_path, "output path (default stdout)");

  auto *wick = app.add_subcommand("wick-verify",
                                  "randomized second-quantization checks");
  wick->add_option("--seed", seed, "rng seed (default 1)");
  wick->add_option("--trials", trials, "number of random ensembles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (single->parsed() || scan->parsed() || jump->parsed()) {
      const auto cfg = cli::load_setup(io::Config::parse_file(config_path));
      if (single->parsed())
        return cli::run_single(cfg, out_path, parse_side(side_str), std::cerr);
      if (scan->parsed())
        return cli::run_scan(cfg, out_path, parse_side(side_str), std::cerr);
      return cli::run_jump(cfg, out_path, n_int, delta, std::cerr);
    }
    if (beta->parsed())
      return cli::run_beta_table(out_path, std::cerr);
    return cli::run_wick_verify(seed, trials, std::cout);
  } catch (const io::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::exit_config;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
