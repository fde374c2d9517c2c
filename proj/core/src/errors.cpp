#include "mlat/errors.hpp"

namespace mlat {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_partial_order: return "NotAPartialOrder";
    case errc::not_a_lattice: return "NotALattice";
    case errc::no_bounds: return "NoBounds";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_join_preserving: return "NotJoinPreserving";
    case errc::top_not_preserved: return "TopNotPreserved";
    case errc::not_submultiplicative: return "NotSubmultiplicative";
    case errc::empty_set: return "EmptySet";
    case errc::not_m_distributive: return "NotMDistributive";
    case errc::order_bound: return "OrderBound";
    case errc::not_normal: return "NotNormal";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_a_radical_ring: return "NotARadicalRing";
    case errc::undefined_annihilator: return "UndefinedAnnihilator";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::unknown_command: return "UnknownCommand";
    case errc::flag_conflict: return "FlagConflict";
  }
  return "UnknownError";
}

}  // namespace mlat
