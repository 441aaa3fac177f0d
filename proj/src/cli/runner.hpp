#pragma once

#include "io/config.hpp"
#include "lhf/scf.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lhfatom::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_noconv = 3;
inline constexpr int exit_unbound = 4;

//! Parsed run configuration (see README for the key set).
struct RunSetup {
  double Z{0.0};
  std::vector<occ::Subshell> shells_up;
  std::vector<occ::Subshell> shells_down;
  occ::SpinShell homo;
  std::optional<double> alpha;   //!< explicit HOMO fraction
  std::optional<double> n_total; //!< alternative: total electron number
  std::size_t grid_n{600};
  double grid_rmax{40.0};
  lhf::ScfParams scf;
  std::optional<double> scan_start, scan_stop, scan_step;
  std::string out_path; //!< empty = stdout
  bool profiles{false};
};

RunSetup load_setup(const io::Config &cfg);

//! Declared spin-shells in aufbau order; maps a total electron number onto
//! an occupation spec. At integer N the gauge side picks the representation
//! (alpha = 1 on the shell just filled, or alpha = 0 on the next one).
struct FillingScheme {
  double Z{0.0};
  std::vector<occ::SpinShell> order;

  double capacity() const;
  occ::OccupationSpec spec_at(double n_total, lhf::GaugeSide side) const;
};

FillingScheme make_filling(const RunSetup &setup);

//! Occupation spec for a single run: explicit alpha if given, otherwise
//! derived from N_total through the filling scheme.
occ::OccupationSpec resolve_spec(const RunSetup &setup, lhf::GaugeSide side);

int run_single(const RunSetup &setup, const std::string &out_override,
               lhf::GaugeSide side, std::ostream &err);
int run_scan(const RunSetup &setup, const std::string &out_override,
             lhf::GaugeSide side, std::ostream &err);
int run_jump(const RunSetup &setup, const std::string &out_override,
             double n_int, double delta, std::ostream &err);
int run_beta_table(const std::string &out_path, std::ostream &err);
int run_wick_verify(std::uint64_t seed, int trials, std::ostream &log);

} // namespace lhfatom::cli
