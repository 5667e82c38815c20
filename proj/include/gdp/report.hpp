#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdp/positivity.hpp"
#include "gdp/surface_model.hpp"

namespace gdp {

/// Classification outcome for one catalog entry.
enum class SurfaceStatus {
  toric,
  toric_quotient,
  fails_cartier_bv,
  fails_weil_bv,
  cover_fails_bv,
  no_endomorphism_by_cover,
  open_question,
};

std::string to_string(SurfaceStatus status);

struct SurfaceVerdict {
  std::string surface;
  SurfaceStatus status{SurfaceStatus::open_question};
  std::string evidence;
};

struct ReportResult {
  std::vector<SurfaceVerdict> verdicts;   // one per model, input order
  std::vector<std::string> conflicts;     // metadata/computation disagreements
};

/// Formats a witness the way report evidence quotes it: "a=(1), chi=-1".
std::string witness_text(const Witness& witness);

/// Derives one verdict per model. The status comes from the metadata keys
/// (toric, quotient, cartier_bv_failure, expected_bv_failure, cover_fails_bv,
/// cover_blocks_endomorphism, open_problem) together with any computed
/// witnesses, keyed by surface name. A witness on a surface whose metadata
/// says toric, toric-quotient, or open is a conflict: those surfaces cannot
/// fail Bott vanishing for a Weil divisor. Conflicts are reported, never
/// silently resolved.
ReportResult build_report(const std::vector<SurfaceModel>& models,
                          const std::map<std::string, std::vector<Witness>>& witnesses);

}  // namespace gdp
