#include "cli/runner.hpp"

#include "io/format.hpp"
#include "lhf/diagnostics.hpp"
#include "wick/lattice.hpp"
#include "wick/rdm.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace lhfatom::cli {

using json = nlohmann::ordered_json;
using lhf::GaugeSide;
using occ::OccupationSpec;
using occ::Spin;
using occ::SpinShell;
using occ::Subshell;

namespace {

double quantized(double v) { return std::stod(io::fmt(v)); }

std::vector<Subshell> parse_shell_list(const io::Config &cfg,
                                       const std::string &key) {
  std::vector<Subshell> out;
  if (!cfg.has(key))
    return out;
  for (const auto &item : cfg.get_list(key))
    out.push_back(occ::parse_subshell(item));
  return out;
}

void write_text(const std::string &path, const std::string &text,
                std::ostream &fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io::ConfigError("cannot open output file '" + path + "'");
  out << text;
}

} // namespace

RunSetup load_setup(const io::Config &cfg) {
  RunSetup s;
  s.Z = cfg.get_double("Z");
  if (s.Z <= 0.0)
    throw io::ConfigError("Z must be positive");
  s.shells_up = parse_shell_list(cfg, "shells_up");
  s.shells_down = parse_shell_list(cfg, "shells_down");

  const auto homo_spec = cfg.get_list("homo");
  if (homo_spec.size() != 2)
    throw io::ConfigError("homo must be '<shell>,<spin>', e.g. '2s,up'");
  s.homo = SpinShell{occ::parse_subshell(homo_spec[0]),
                     occ::parse_spin(homo_spec[1])};

  if (cfg.has("alpha") && cfg.has("N_total"))
    throw io::ConfigError("give either alpha or N_total, not both");
  if (cfg.has("alpha"))
    s.alpha = cfg.get_double("alpha");
  if (cfg.has("N_total"))
    s.n_total = cfg.get_double("N_total");

  s.grid_n = static_cast<std::size_t>(cfg.get_int("grid.n", 600));
  s.grid_rmax = cfg.get_double("grid.rmax", 40.0);
  s.scf.mixing = cfg.get_double("scf.mixing", 0.3);
  s.scf.tol = cfg.get_double("scf.tol", 1e-8);
  s.scf.max_iter = static_cast<int>(cfg.get_int("scf.max_iter", 300));
  if (cfg.has("scan.start") || cfg.has("scan.stop") || cfg.has("scan.step"))
    for (const char *k : {"scan.start", "scan.stop", "scan.step"})
      if (!cfg.has(k))
        throw io::ConfigError(std::string("scan needs all of ") +
                              "scan.start/scan.stop/scan.step");
  if (cfg.has("scan.start")) {
    s.scan_start = cfg.get_double("scan.start");
    s.scan_stop = cfg.get_double("scan.stop");
    s.scan_step = cfg.get_double("scan.step");
    if (*s.scan_step <= 0.0)
      throw io::ConfigError("scan.step must be positive");
  }
  s.out_path = cfg.get_string("output.path", "");
  s.profiles = cfg.get_bool("output.profiles", false);
  return s;
}

double FillingScheme::capacity() const {
  double c = 0.0;
  for (const auto &sh : order)
    c += sh.sh.multiplicity();
  return c;
}

FillingScheme make_filling(const RunSetup &setup) {
  FillingScheme f;
  f.Z = setup.Z;
  for (const auto &sh : setup.shells_up)
    f.order.push_back({sh, Spin::up});
  for (const auto &sh : setup.shells_down)
    f.order.push_back({sh, Spin::down});
  if (std::none_of(f.order.begin(), f.order.end(),
                   [&](const SpinShell &s) { return s == setup.homo; }))
    f.order.push_back(setup.homo);
  std::sort(f.order.begin(), f.order.end(), occ::aufbau_less);
  return f;
}

OccupationSpec FillingScheme::spec_at(double n_total, GaugeSide side) const {
  const double cap = capacity();
  if (n_total < -1e-9 || n_total > cap + 1e-9)
    throw io::ConfigError("N=" + io::fmt(n_total) +
                          " outside the declared shell scheme (capacity " +
                          io::fmt(cap) + ")");
  n_total = std::clamp(n_total, 0.0, cap);

  OccupationSpec spec;
  spec.Z = Z;

  // locate the shell being filled
  double prev = 0.0;
  std::size_t j = 0;
  for (; j < order.size(); ++j) {
    const double c = order[j].sh.multiplicity();
    if (n_total <= prev + c + 1e-9)
      break;
    prev += c;
  }
  if (j == order.size())
    j = order.size() - 1;
  double frac = n_total - prev;
  const double cap_j = order[j].sh.multiplicity();
  if (std::abs(frac) < 1e-9)
    frac = 0.0;
  if (std::abs(frac - cap_j) < 1e-9)
    frac = cap_j;

  auto add_closed = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      (order[i].spin == Spin::up ? spec.closed_up : spec.closed_down)
          .push_back(order[i].sh);
  };

  if (frac == 0.0) {
    // integer boundary below shell j: only reachable for j = 0 (N = 0)
    add_closed(j);
    spec.homo = order[j];
    spec.alpha = 0.0;
    return spec;
  }
  if (frac == cap_j) {
    if (side == GaugeSide::above && j + 1 < order.size()) {
      add_closed(j + 1);
      spec.homo = order[j + 1];
      spec.alpha = 0.0;
    } else {
      add_closed(j);
      spec.homo = order[j];
      spec.alpha = 1.0;
    }
    return spec;
  }
  if (order[j].sh.l != 0)
    throw io::ConfigError("N=" + io::fmt(n_total) +
                          " lands a fraction in the non-s subshell " +
                          occ::to_string(order[j]) +
                          "; only s subshells may hold a fraction");
  add_closed(j);
  spec.homo = order[j];
  spec.alpha = frac;
  return spec;
}

OccupationSpec resolve_spec(const RunSetup &setup, GaugeSide side) {
  if (setup.alpha) {
    OccupationSpec spec;
    spec.Z = setup.Z;
    spec.closed_up = setup.shells_up;
    spec.closed_down = setup.shells_down;
    spec.homo = setup.homo;
    spec.alpha = *setup.alpha;
    spec.validate();
    return spec;
  }
  if (setup.n_total)
    return make_filling(setup).spec_at(*setup.n_total, side);
  throw io::ConfigError("config needs alpha or N_total");
}

namespace {

json result_record(const lhf::ScfResult &res, const FillingScheme &scheme) {
  const auto &spec = res.spec;
  json rec;
  rec["Z"] = quantized(spec.Z);
  rec["N"] = quantized(spec.n_total(spec.alpha));
  rec["N_up"] = quantized(spec.n_sigma(Spin::up, spec.alpha));
  rec["N_down"] = quantized(spec.n_sigma(Spin::down, spec.alpha));
  rec["alpha"] = quantized(spec.alpha);
  rec["beta"] = quantized(spec.beta());
  rec["E_direct"] = quantized(res.E_direct);
  rec["E_dft"] = quantized(res.E_dft);
  rec["E_x"] = quantized(res.E_x);
  rec["identity_residual"] = quantized(res.identity_residual);
  json eps = json::object();
  for (const auto &sh : scheme.order) {
    if (auto e = lhf::shell_eigenvalue(res, sh))
      eps[occ::to_string(sh)] = quantized(*e);
  }
  rec["eigenvalues"] = eps;
  rec["c_up"] = quantized(res.pots.c_up);
  rec["c_down"] = quantized(res.pots.c_down);
  rec["G_alpha"] = quantized(res.pots.G_alpha);
  rec["G_beta"] = quantized(res.pots.G_beta);
  rec["tail_slope_up"] = quantized(res.pots.tail_slope_up);
  rec["tail_slope_down"] = quantized(res.pots.tail_slope_down);
  rec["iterations"] = res.iterations;
  rec["status"] = "ok";
  return rec;
}

std::string profile_csv(const lhf::ScfResult &res) {
  const auto &g = *res.grid;
  const auto dm_a =
      occ::build_density_matrix(res.orbitals, res.spec, res.spec.alpha);
  const auto n_up = occ::spin_density(g, dm_a, Spin::up);
  const auto n_dn = occ::spin_density(g, dm_a, Spin::down);
  std::string out = "r,v_ext,v_H,v_x_up,v_x_down,n_up,n_down\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out += io::csv_row({io::fmt(g.r[i]), io::fmt(res.pots.v_ext[i]),
                        io::fmt(res.pots.v_hartree[i]),
                        io::fmt(res.pots.vx_up[i]), io::fmt(res.pots.vx_down[i]),
                        io::fmt(n_up[i]), io::fmt(n_dn[i])});
  return out;
}

std::string profile_path(const std::string &out_path) {
  if (out_path.empty())
    return "profiles.csv";
  const auto dot = out_path.find_last_of('.');
  const std::string stem =
      (dot == std::string::npos) ? out_path : out_path.substr(0, dot);
  return stem + ".profiles.csv";
}

std::vector<std::string> scan_header(const FillingScheme &scheme) {
  std::vector<std::string> h{"N",   "N_up", "N_down", "alpha",
                             "beta", "E_direct", "E_dft", "E_x",
                             "identity_residual"};
  for (const auto &sh : scheme.order)
    h.push_back("eps_" + occ::to_string(sh));
  for (const char *k : {"c_up", "c_down", "G_alpha", "G_beta", "iterations",
                        "status"})
    h.push_back(k);
  return h;
}

std::vector<std::string> scan_row(double n_total, const FillingScheme &scheme,
                                  const lhf::ScfResult *res,
                                  const OccupationSpec *spec,
                                  const std::string &status) {
  std::vector<std::string> row;
  row.push_back(io::fmt(n_total));
  if (spec) {
    row.push_back(io::fmt(spec->n_sigma(Spin::up, spec->alpha)));
    row.push_back(io::fmt(spec->n_sigma(Spin::down, spec->alpha)));
    row.push_back(io::fmt(spec->alpha));
    row.push_back(io::fmt(spec->beta()));
  } else {
    row.insert(row.end(), 4, "");
  }
  if (res) {
    row.push_back(io::fmt(res->E_direct));
    row.push_back(io::fmt(res->E_dft));
    row.push_back(io::fmt(res->E_x));
    row.push_back(io::fmt(res->identity_residual));
    for (const auto &sh : scheme.order) {
      if (auto e = lhf::shell_eigenvalue(*res, sh))
        row.push_back(io::fmt(*e));
      else
        row.push_back("");
    }
    row.push_back(io::fmt(res->pots.c_up));
    row.push_back(io::fmt(res->pots.c_down));
    row.push_back(io::fmt(res->pots.G_alpha));
    row.push_back(io::fmt(res->pots.G_beta));
    row.push_back(std::to_string(res->iterations));
  } else {
    row.insert(row.end(), 4 + scheme.order.size() + 5, "");
  }
  row.push_back(status);
  return row;
}

} // namespace

int run_single(const RunSetup &setup, const std::string &out_override,
               GaugeSide side, std::ostream &err) {
  try {
    const auto spec = resolve_spec(setup, side);
    const auto grid = radial::build_grid(setup.Z, setup.grid_n, setup.grid_rmax);
    const auto res = lhf::scf(spec, grid, setup.scf);
    const auto scheme = make_filling(setup);
    const std::string out_path =
        out_override.empty() ? setup.out_path : out_override;
    write_text(out_path, result_record(res, scheme).dump(2) + "\n", std::cout);
    if (setup.profiles)
      write_text(profile_path(out_path), profile_csv(res), std::cout);
    return exit_ok;
  } catch (const io::ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::invalid_argument &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const lhf::UnboundError &e) {
    err << "unbound species: " << e.what() << "\n";
    return exit_unbound;
  } catch (const lhf::ScfError &e) {
    err << "scf failure: " << e.what() << "\n";
    return exit_noconv;
  }
}

int run_scan(const RunSetup &setup, const std::string &out_override,
             GaugeSide side, std::ostream &err) {
  try {
    if (!setup.scan_start)
      throw io::ConfigError("scan requires scan.start/scan.stop/scan.step");
    const auto scheme = make_filling(setup);
    const auto grid = radial::build_grid(setup.Z, setup.grid_n, setup.grid_rmax);

    std::string csv = io::csv_row(scan_header(scheme));
    const double start = *setup.scan_start, stop = *setup.scan_stop,
                 step = *setup.scan_step;
    const long n_steps =
        (stop < start) ? -1 : static_cast<long>((stop - start) / step + 1e-9);
    for (long k = 0; k <= n_steps; ++k) {
      const double n_total = start + static_cast<double>(k) * step;
      OccupationSpec spec;
      try {
        spec = scheme.spec_at(n_total, side);
      } catch (const io::ConfigError &) {
        csv += io::csv_row(scan_row(n_total, scheme, nullptr, nullptr,
                                    "config_error"));
        continue;
      }
      try {
        const auto res = lhf::scf(spec, grid, setup.scf);
        csv += io::csv_row(scan_row(n_total, scheme, &res, &spec, "ok"));
      } catch (const lhf::UnboundError &) {
        csv += io::csv_row(scan_row(n_total, scheme, nullptr, &spec, "unbound"));
      } catch (const lhf::ScfError &) {
        csv += io::csv_row(
            scan_row(n_total, scheme, nullptr, &spec, "no_convergence"));
      }
    }
    write_text(out_override.empty() ? setup.out_path : out_override, csv,
               std::cout);
    return exit_ok;
  } catch (const io::ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::invalid_argument &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  }
}

int run_jump(const RunSetup &setup, const std::string &out_override,
             double n_int, double delta, std::ostream &err) {
  try {
    if (std::abs(n_int - std::round(n_int)) > 1e-12)
      throw io::ConfigError("jump: N must be an integer");
    if (delta < 0.0 || delta > 0.5)
      throw io::ConfigError("jump: delta must lie in [0, 0.5]");
    const auto scheme = make_filling(setup);
    const auto grid = radial::build_grid(setup.Z, setup.grid_n, setup.grid_rmax);
    const auto spec_b = scheme.spec_at(n_int - delta, GaugeSide::below);
    const auto spec_a = scheme.spec_at(n_int + delta, GaugeSide::below);
    const auto res_b = lhf::scf(spec_b, grid, setup.scf);
    const auto res_a = lhf::scf(spec_a, grid, setup.scf);
    const auto rep = lhf::potential_jump(res_b, res_a);

    std::ostringstream out;
    out << "# N_int=" << io::fmt(n_int) << " delta=" << io::fmt(delta) << "\n";
    out << "# mean_dv_up=" << io::fmt(rep.mean_up)
        << " mean_dv_down=" << io::fmt(rep.mean_down) << "\n";
    out << "# reldev_up=" << io::fmt(rep.reldev_up)
        << " reldev_down=" << io::fmt(rep.reldev_down) << "\n";
    out << "# relation_residual=" << io::fmt(rep.relation_residual)
        << " relative=" << io::fmt(rep.relation_residual_rel) << "\n";
    out << "r,dv_up,dv_down,bulk\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      out << io::csv_row({io::fmt(grid.r[i]), io::fmt(rep.dv_up[i]),
                          io::fmt(rep.dv_down[i]),
                          std::to_string(int(rep.bulk[i]))});
    write_text(out_override.empty() ? setup.out_path : out_override, out.str(),
               std::cout);
    return exit_ok;
  } catch (const io::ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::invalid_argument &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const lhf::UnboundError &e) {
    err << "unbound species: " << e.what() << "\n";
    return exit_unbound;
  } catch (const lhf::ScfError &e) {
    err << "scf failure: " << e.what() << "\n";
    return exit_noconv;
  }
}

int run_beta_table(const std::string &out_path, std::ostream &err) {
  try {
    std::string csv = "alpha,beta_N1,beta_N2,beta_N3,beta_N4\n";
    for (int i = 0; i <= 100; ++i) {
      const double a = 0.01 * i;
      std::vector<std::string> row{io::fmt(a)};
      for (int n = 1; n <= 4; ++n)
        row.push_back(io::fmt(occ::beta_from_alpha(n, a)));
      csv += io::csv_row(row);
    }
    write_text(out_path, csv, std::cout);
    return exit_ok;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
}

int run_wick_verify(std::uint64_t seed, int trials, std::ostream &log) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double max_string_gap = 0.0;
  double max_affine_resid = 0.0;
  double max_rdm2_gap = 0.0;
  double max_rdm3_gap = 0.0;
  double max_integer_idem = 0.0;
  double min_frac_idem = 1.0e300;
  bool ok = true;

  for (int t = 0; t < trials; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5); // 2..6 modes
    const int n = static_cast<int>(rng() % static_cast<unsigned>(m));
    wick::FractionalEnsemble ens;
    ens.lower.m = m;
    ens.lower.orbitals = wick::random_unitary(m, rng());
    // random occupied subset of size n, random added orbital
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i)
      perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ens.lower.occ = 0;
    for (int i = 0; i < n; ++i)
      ens.lower.occ |= 1u << perm[i];
    ens.added_orbital = perm[n];
    ens.gamma = unif(rng);

    // operator strings of length 4 and 6 over the orbital basis
    for (int len : {4, 6}) {
      std::vector<wick::FieldOp> ops(len);
      for (auto &op : ops)
        op = {rng() % 2 == 0, static_cast<int>(rng() % static_cast<unsigned>(m))};
      const auto chk = wick::generalized_wick_check(ens, ops);
      max_string_gap = std::max(max_string_gap, chk.gap);

      // the ensemble expectation must be affine in gamma
      auto at_gamma = [&](double gm) {
        auto e2 = ens;
        e2.gamma = gm;
        return wick::expectation(e2, ops);
      };
      const wick::Cplx y0 = at_gamma(0.0), y1 = at_gamma(1.0);
      for (double gm : {0.25, 0.5, 0.75}) {
        const wick::Cplx pred = (1.0 - gm) * y0 + gm * y1;
        max_affine_resid =
            std::max(max_affine_resid, std::abs(at_gamma(gm) - pred));
      }
    }

    const auto rho1 = wick::rdm_bruteforce(ens, 1);
    const auto idem = wick::idempotency_check(rho1);
    if (ens.gamma < 1e-12 || ens.gamma > 1.0 - 1e-12)
      max_integer_idem = std::max(max_integer_idem, idem.deviation);
    else
      min_frac_idem = std::min(min_frac_idem, idem.deviation);

    const auto rho2b = wick::rdm_bruteforce(ens, 2);
    const auto rho2w = wick::wick_factorization(rho1, 2);
    max_rdm2_gap =
        std::max(max_rdm2_gap, (rho2b - rho2w).cwiseAbs().maxCoeff());
    if (t % 20 == 0 && m <= 5) {
      const auto rho3b = wick::rdm_bruteforce(ens, 3);
      const auto rho3w = wick::wick_factorization(rho1, 3);
      max_rdm3_gap =
          std::max(max_rdm3_gap, (rho3b - rho3w).cwiseAbs().maxCoeff());
    }
  }

  log << "wick-verify: trials=" << trials << " seed=" << seed << "\n";
  log << "  max |lhs-rhs| over strings:      " << io::fmt(max_string_gap) << "\n";
  log << "  max affine-in-gamma residual:    " << io::fmt(max_affine_resid)
      << "\n";
  log << "  max rdm2 wick-vs-bruteforce gap: " << io::fmt(max_rdm2_gap) << "\n";
  log << "  max rdm3 wick-vs-bruteforce gap: " << io::fmt(max_rdm3_gap) << "\n";
  log << "  max idempotency dev (integer):   " << io::fmt(max_integer_idem)
      << "\n";
  if (min_frac_idem < 1.0e300)
    log << "  min idempotency dev (fractional):" << io::fmt(min_frac_idem)
        << "\n";
  ok = max_string_gap < 1e-12 && max_affine_resid < 1e-12 &&
       max_rdm2_gap < 1e-12 && max_rdm3_gap < 1e-12 &&
       max_integer_idem < 1e-12;
  log << (ok ? "wick-verify: PASS\n" : "wick-verify: FAIL\n");
  return ok ? exit_ok : 1;
}

} // namespace lhfatom::cli
