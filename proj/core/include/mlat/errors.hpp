#ifndef MLAT_ERRORS_HPP
#define MLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlat {

/// Error codes for contract violations reported to the caller.
enum class errc {
  not_a_partial_order,
  not_a_lattice,
  no_bounds,
  axiom_violation,
  size_mismatch,
  not_join_preserving,
  top_not_preserved,
  not_submultiplicative,
  empty_set,
  not_m_distributive,
  order_bound,
  not_normal,
  not_an_ideal,
  not_a_radical_ring,
  undefined_annihilator,
  precondition_failed,
  parse_error,
  validation_error,
  unknown_command,
  flag_conflict,
};

const char* errc_name(errc c);

/// User-facing error: bad input, violated precondition, out-of-bound size.
class mlat_error : public std::runtime_error {
 public:
  mlat_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

/// A verified theorem failed on a concrete instance. This never happens for
/// correct inputs; seeing it means the implementation (not the input) is wrong.
class falsification_error : public std::logic_error {
 public:
  explicit falsification_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mlat

#endif
