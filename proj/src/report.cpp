#include "gdp/report.hpp"

namespace gdp {

std::string to_string(SurfaceStatus status) {
  switch (status) {
    case SurfaceStatus::toric: return "toric";
    case SurfaceStatus::toric_quotient: return "toric_quotient";
    case SurfaceStatus::fails_cartier_bv: return "fails_cartier_bv";
    case SurfaceStatus::fails_weil_bv: return "fails_weil_bv";
    case SurfaceStatus::cover_fails_bv: return "cover_fails_bv";
    case SurfaceStatus::no_endomorphism_by_cover: return "no_endomorphism_by_cover";
    case SurfaceStatus::open_question: return "open";
  }
  return "open";
}

std::string witness_text(const Witness& witness) {
  std::string text = "a=(";
  for (std::size_t i = 0; i < witness.coefficients.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(witness.coefficients[i]);
  }
  text += "), chi=" + witness.chi_omega.pretty();
  return text;
}

namespace {

const std::string* meta_text(const SurfaceModel& model, const std::string& key) {
  const auto it = model.metadata.find(key);
  if (it == model.metadata.end()) return nullptr;
  return std::get_if<std::string>(&it->second);
}

bool meta_flag(const SurfaceModel& model, const std::string& key) {
  const auto it = model.metadata.find(key);
  if (it == model.metadata.end()) return false;
  const auto* value = std::get_if<bool>(&it->second);
  return value && *value;
}

}  // namespace

ReportResult build_report(const std::vector<SurfaceModel>& models,
                          const std::map<std::string, std::vector<Witness>>& witnesses) {
  ReportResult result;
  for (const SurfaceModel& model : models) {
    const auto found = witnesses.find(model.name);
    const Witness* witness =
        found != witnesses.end() && !found->second.empty() ? &found->second.front() : nullptr;

    const std::string* quotient = meta_text(model, "quotient");
    const std::string* cover = meta_text(model, "universal_cover");
    const std::string* note = meta_text(model, "note");

    std::vector<SurfaceStatus> claimed;
    if (meta_flag(model, "open_problem")) claimed.push_back(SurfaceStatus::open_question);
    if (meta_flag(model, "toric")) claimed.push_back(SurfaceStatus::toric);
    if (quotient) claimed.push_back(SurfaceStatus::toric_quotient);
    if (meta_flag(model, "cartier_bv_failure"))
      claimed.push_back(SurfaceStatus::fails_cartier_bv);
    if (meta_flag(model, "expected_bv_failure"))
      claimed.push_back(SurfaceStatus::fails_weil_bv);
    if (meta_flag(model, "cover_fails_bv")) claimed.push_back(SurfaceStatus::cover_fails_bv);
    if (meta_flag(model, "cover_blocks_endomorphism"))
      claimed.push_back(SurfaceStatus::no_endomorphism_by_cover);

    if (claimed.size() > 1)
      result.conflicts.push_back(model.name + ": " + std::to_string(claimed.size()) +
                                 " status-determining metadata keys");

    SurfaceVerdict verdict;
    verdict.surface = model.name;
    if (!claimed.empty()) {
      verdict.status = claimed.front();
    } else if (witness) {
      verdict.status = SurfaceStatus::fails_weil_bv;
    } else {
      verdict.status = SurfaceStatus::open_question;
      result.conflicts.push_back(model.name +
                                 ": no status-determining metadata and no witness");
    }

    switch (verdict.status) {
      case SurfaceStatus::toric:
        verdict.evidence = model.fan ? "complete fan encoded in catalog"
                                     : (note ? *note : "toric construction");
        break;
      case SurfaceStatus::toric_quotient:
        verdict.evidence = *quotient;
        break;
      case SurfaceStatus::fails_cartier_bv:
        verdict.evidence =
            note ? *note : "fails Bott vanishing for a Cartier divisor (cited)";
        break;
      case SurfaceStatus::fails_weil_bv:
        verdict.evidence = witness ? witness_text(*witness)
                                   : "cited computation; curve configuration not encoded";
        break;
      case SurfaceStatus::cover_fails_bv:
      case SurfaceStatus::no_endomorphism_by_cover:
        verdict.evidence = cover ? "universal cover: " + *cover
                                 : "universal-cover argument (cover not named)";
        break;
      case SurfaceStatus::open_question:
        verdict.evidence = note ? *note : "undecided";
        break;
    }

    if (witness) {
      // Toric surfaces and their torus-preserving quotients satisfy Bott
      // vanishing, and the open entry is certified Cartier-only; a computed
      // failure on one of those contradicts the catalog.
      if (verdict.status == SurfaceStatus::toric ||
          verdict.status == SurfaceStatus::toric_quotient ||
          verdict.status == SurfaceStatus::open_question) {
        result.conflicts.push_back(model.name + ": computed witness " +
                                   witness_text(*witness) + " contradicts status " +
                                   to_string(verdict.status));
      } else if (verdict.status != SurfaceStatus::fails_weil_bv) {
        verdict.evidence += "; computed Weil witness " + witness_text(*witness);
      }
    }

    result.verdicts.push_back(std::move(verdict));
  }
  return result;
}

}  // namespace gdp
