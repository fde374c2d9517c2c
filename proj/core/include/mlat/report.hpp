#ifndef MLAT_REPORT_HPP
#define MLAT_REPORT_HPP

#include <string>

#include "mlat/structure.hpp"

namespace mlat {

struct CommandOptions {
  std::string mult;     // "" = kind default (group: commutator, rng: product)
  std::string element;  // lattice element label; "" = top where one is needed
  std::string out;      // json | text | dot; "" = command default
  int bound = 0;        // enumeration cap; 0 = module defaults
  bool spec_order = false;  // dot: draw the spectrum's specialization order
};

struct CommandResult {
  std::string output;
  int exit_code = 0;  // 0 clean, 2 when falsification events were recorded
};

/// Dispatch a command on a parsed document. Commands: validate, lattice,
/// spec, classify, series, hyperabelian, brace-ybe, report, dot. User
/// problems (unknown command, inapplicable flags, bad labels) throw
/// mlat_error. A failed theorem check escapes as falsification_error,
/// except under `report`, which records every event, keeps going, and
/// returns exit_code 2. Output is deterministic: identical input and
/// flags give identical bytes.
CommandResult run_command(const StructureDoc& doc, const std::string& cmd,
                          const CommandOptions& opt);

}  // namespace mlat

#endif
