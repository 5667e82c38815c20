#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdp/catalog.hpp"
#include "gdp/intersection.hpp"
#include "gdp/positivity.hpp"
#include "gdp/report.hpp"
#include "gdp/riemann_roch.hpp"
#include "gdp/toric.hpp"

namespace {

using nlohmann::ordered_json;

/// Exit codes: 0 success, 1 domain refusal (unknown surface, unsupported
/// model, invalid catalog entry, report conflict), 2 malformed input
/// (arguments, coefficients, rays, catalog syntax).
constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kBadInput = 2;

struct DomainRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string catalog_path;
  std::string format{"table"};

  bool records() const { return format == "records"; }
};

std::vector<gdp::SurfaceModel> load_models(const Options& options) {
  std::string path = options.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv("GDP_CATALOG")) path = env;
  }
  if (path.empty()) return gdp::builtin_fixtures();
  return gdp::load_catalog_file(path);
}

const gdp::SurfaceModel& pick_model(const std::vector<gdp::SurfaceModel>& models,
                                    const std::string& name) {
  const gdp::SurfaceModel* model = gdp::find_model(models, name);
  if (!model) throw DomainRefusal("unknown surface '" + name + "'");
  return *model;
}

void require_curves(const gdp::SurfaceModel& model) {
  if (!model.curves_encoded())
    throw DomainRefusal("curve configuration not encoded for " + model.name);
}

std::vector<std::int64_t> parse_coefficients(const std::string& text,
                                             std::size_t expected) {
  std::vector<std::int64_t> values;
  if (!text.empty()) {
    if (text.back() == ',')  // getline would silently drop the empty last field
      throw std::invalid_argument("bad coefficient '' in '" + text + "'");
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient '" + token + "'");
      }
    }
  }
  if (values.empty()) values.assign(expected, 0);  // no --coeffs: the zero divisor
  if (values.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " coefficients, got " + std::to_string(values.size()));
  return values;
}

std::string coefficients_text(const std::vector<std::int64_t>& values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ",";
    text += std::to_string(values[i]);
  }
  return text;
}

/// Both output modes print "key = value" rows; records mode drops the
/// spaces so each line splits unambiguously on the first '='.
void emit(const Options& options, const std::string& key, const std::string& value) {
  std::cout << key << (options.records() ? "=" : " = ") << value << "\n";
}

void emit_lift(const Options& options, const gdp::SurfaceModel& model,
               const gdp::QDivisor& lift) {
  for (const gdp::Curve& curve : model.curves)
    emit(options, "pullback." + std::to_string(curve.id),
         lift.coeff(model, curve.id).str());
}

int run_validate(const Options& options, const std::string& name) {
  const auto models = load_models(options);
  std::vector<const gdp::SurfaceModel*> selected;
  if (name == "all") {
    for (const auto& model : models) selected.push_back(&model);
  } else {
    selected.push_back(&pick_model(models, name));
  }
  bool all_ok = true;
  for (const gdp::SurfaceModel* model : selected) {
    const gdp::ValidationReport report = gdp::validate(*model);
    std::string line = model->name + ": " + (report.ok() ? "ok" : "INVALID");
    if (report.ok() && report.unsupported_for_positivity)
      line += " (positivity unsupported)";
    std::cout << line << "\n";
    for (const std::string& violation : report.violations)
      std::cout << "  - " << violation << "\n";
    all_ok = all_ok && report.ok();
  }
  return all_ok ? kOk : kRefused;
}

int run_chi(const Options& options, const std::string& name, const std::string& coeffs) {
  const auto models = load_models(options);
  const gdp::SurfaceModel& model = pick_model(models, name);
  require_curves(model);
  const auto values = parse_coefficients(coeffs, gdp::minus_one_ids(model).size());
  const auto divisor = gdp::WeilClass::from_coefficients(model, values);
  const gdp::ChiBreakdown breakdown = gdp::chi_omega1(model, divisor);

  emit(options, "surface", model.name);
  emit(options, "coeffs", coefficients_text(values));
  emit_lift(options, model, breakdown.lift);
  emit(options, "self_int", breakdown.self_int.str());
  emit(options, "k_dot", breakdown.k_dot.str());
  for (const gdp::PointTerms& terms : breakdown.a_terms) {
    const std::string prefix = "point." + std::to_string(terms.point_index);
    emit(options, prefix + ".type",
         to_string(model.singular_points[terms.point_index].type));
    emit(options, prefix + ".cartier", terms.cartier ? "true" : "false");
    emit(options, prefix + ".a_O", terms.a_O.str());
    emit(options, prefix + ".a_omega", terms.a_omega.str());
    emit(options, prefix + ".c2_local", terms.c2_local.str());
  }
  emit(options, "c2_global", breakdown.c2_global.str());
  emit(options, "chi_structure", breakdown.chi_structure.str());
  emit(options, "chi_omega", breakdown.chi_omega.str());
  return kOk;
}

int run_lift(const Options& options, const std::string& name, const std::string& coeffs) {
  const auto models = load_models(options);
  const gdp::SurfaceModel& model = pick_model(models, name);
  require_curves(model);
  const auto values = parse_coefficients(coeffs, gdp::minus_one_ids(model).size());
  const auto divisor = gdp::WeilClass::from_coefficients(model, values);
  emit(options, "surface", model.name);
  emit(options, "coeffs", coefficients_text(values));
  emit_lift(options, model, gdp::pullback(model, divisor));
  return kOk;
}

int run_ample(const Options& options, const std::string& name, const std::string& coeffs) {
  const auto models = load_models(options);
  const gdp::SurfaceModel& model = pick_model(models, name);
  require_curves(model);
  const auto values = parse_coefficients(coeffs, gdp::minus_one_ids(model).size());
  const auto divisor = gdp::WeilClass::from_coefficients(model, values);
  const gdp::AmplenessCertificate certificate = gdp::is_ample(model, divisor);
  if (certificate.verdict == gdp::AmpleVerdict::unsupported)
    throw DomainRefusal("ampleness certification unsupported for " + model.name);

  emit(options, "surface", model.name);
  emit(options, "coeffs", coefficients_text(values));
  emit(options, "method", to_string(certificate.method));
  for (const auto& [id, value] : certificate.gram_values)
    emit(options, "gram." + std::to_string(id), value.str());
  emit(options, "verdict", to_string(certificate.verdict));
  return kOk;
}

ordered_json witness_json(const gdp::Witness& witness) {
  ordered_json gram = ordered_json::array();
  for (const auto& [id, value] : witness.certificate.gram_values)
    gram.push_back(value.str());
  return ordered_json{{"coefficients", witness.coefficients},
                      {"chi", witness.chi_omega.str()},
                      {"gram", std::move(gram)}};
}

int run_search(const Options& options, const std::string& name, int bound,
               std::optional<std::uint64_t> budget, unsigned threads) {
  const auto models = load_models(options);
  const gdp::SurfaceModel& model = pick_model(models, name);
  require_curves(model);
  const gdp::SearchResult result =
      gdp::search_bott_failures(model, bound, budget, threads);

  if (options.records()) {
    for (const gdp::Witness& witness : result.witnesses)
      std::cout << witness_json(witness).dump() << "\n";
    if (result.truncated)
      std::cout << ordered_json{{"truncated", true}, {"examined", result.examined}}.dump()
                << "\n";
  } else {
    emit(options, "surface", model.name);
    emit(options, "bound", std::to_string(bound));
    emit(options, "examined", std::to_string(result.examined));
    if (result.truncated) emit(options, "truncated", "true");
    for (const gdp::Witness& witness : result.witnesses) {
      std::string gram = "(";
      for (std::size_t i = 0; i < witness.certificate.gram_values.size(); ++i) {
        if (i > 0) gram += ",";
        gram += witness.certificate.gram_values[i].second.pretty();
      }
      gram += ")";
      std::cout << "witness: " << gdp::witness_text(witness) << ", gram=" << gram << "\n";
    }
    if (result.witnesses.empty())
      std::cout << "no witnesses\n";
    else
      emit(options, "witnesses", std::to_string(result.witnesses.size()));
  }
  if (result.truncated)
    std::cerr << "search truncated by budget after " << result.examined
              << " candidates; results are partial\n";
  return kOk;
}

std::vector<gdp::RayVec> parse_rays(const std::string& text) {
  std::vector<gdp::RayVec> rays;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("ray '" + part + "' is not of the form x,y");
    try {
      std::size_t used_x = 0;
      std::size_t used_y = 0;
      const std::string xs = part.substr(0, comma);
      const std::string ys = part.substr(comma + 1);
      const std::int64_t x = std::stoll(xs, &used_x);
      const std::int64_t y = std::stoll(ys, &used_y);
      if (used_x != xs.size() || used_y != ys.size())
        throw std::invalid_argument(part);
      rays.push_back({x, y});
    } catch (const std::exception&) {
      throw std::invalid_argument("ray '" + part + "' is not of the form x,y");
    }
  }
  if (rays.empty()) throw std::invalid_argument("no rays given");
  return rays;
}

int run_fan_sings(const Options& options, const std::string& rays_text) {
  const gdp::Fan2D fan = gdp::make_fan(parse_rays(rays_text));
  const auto labels = gdp::singularity_multiset(fan);
  if (options.records()) {
    std::cout << ordered_json{{"singularities", labels}}.dump() << "\n";
  } else if (labels.empty()) {
    std::cout << "no singularities\n";
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i)
      std::cout << labels[i] << (i + 1 < labels.size() ? " " : "\n");
  }
  return kOk;
}

int run_report(const Options& options) {
  const auto models = load_models(options);
  std::map<std::string, std::vector<gdp::Witness>> witnesses;
  for (const gdp::SurfaceModel& model : models) {
    if (!model.curves_encoded() || !gdp::positivity_supported(model)) continue;
    witnesses[model.name] = gdp::search_bott_failures(model, 1).witnesses;
  }
  const gdp::ReportResult report = gdp::build_report(models, witnesses);

  if (options.records()) {
    for (const gdp::SurfaceVerdict& verdict : report.verdicts) {
      std::cout << ordered_json{{"surface", verdict.surface},
                                {"status", to_string(verdict.status)},
                                {"evidence", verdict.evidence}}
                       .dump()
                << "\n";
    }
  } else {
    std::size_t name_width = 7;
    std::size_t status_width = 6;
    for (const gdp::SurfaceVerdict& verdict : report.verdicts) {
      name_width = std::max(name_width, verdict.surface.size());
      status_width = std::max(status_width, to_string(verdict.status).size());
    }
    const auto pad = [](const std::string& text, std::size_t width) {
      return text + std::string(width - text.size(), ' ');
    };
    std::cout << pad("surface", name_width) << "  " << pad("status", status_width)
              << "  evidence\n";
    for (const gdp::SurfaceVerdict& verdict : report.verdicts) {
      std::cout << pad(verdict.surface, name_width) << "  "
                << pad(to_string(verdict.status), status_width) << "  "
                << verdict.evidence << "\n";
    }
  }
  for (const std::string& conflict : report.conflicts)
    std::cerr << "conflict: " << conflict << "\n";
  return report.conflicts.empty() ? kOk : kRefused;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory, Riemann-Roch, ampleness, and "
               "Bott-vanishing search on Gorenstein del Pezzo surfaces"};
  app.require_subcommand(1);

  Options options;
  app.add_option("--catalog", options.catalog_path,
                 "Catalog JSON path (default: $GDP_CATALOG, else built-ins)");
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"table", "records"}));

  std::string surface;
  std::string coeffs;
  std::string rays_text;
  int bound = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Check structural invariants of a surface or all");
  cmd_validate->add_option("surface", surface, "Surface name or 'all'")->required();

  CLI::App* cmd_chi = app.add_subcommand(
      "chi", "Euler characteristics of O(D) and twisted differentials");
  cmd_chi->add_option("surface", surface)->required();
  cmd_chi->add_option("--coeffs", coeffs, "Comma-separated integers, one per (-1)-curve");

  CLI::App* cmd_lift = app.add_subcommand("lift", "Numerical pullback of a divisor");
  cmd_lift->add_option("surface", surface)->required();
  cmd_lift->add_option("--coeffs", coeffs);

  CLI::App* cmd_ample = app.add_subcommand("ample", "Ampleness certificate");
  cmd_ample->add_option("surface", surface)->required();
  cmd_ample->add_option("--coeffs", coeffs);

  CLI::App* cmd_search =
      app.add_subcommand("search", "Enumerate ample classes with negative chi");
  cmd_search->add_option("surface", surface)->required();
  cmd_search->add_option("--bound", bound, "Max-norm bound on coefficients")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_search->add_option("--budget", budget, "Cap on examined candidates");
  cmd_search->add_option("--threads", threads, "Worker threads (0 = auto)");

  CLI::App* cmd_fan =
      app.add_subcommand("fan-sings", "Classify the singularities of a complete 2D fan");
  cmd_fan->add_option("--rays", rays_text, "Rays as \"x,y;x,y;...\"")->required();

  CLI::App* cmd_report =
      app.add_subcommand("report", "Classification summary for the whole catalog");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (cmd_validate->parsed()) return run_validate(options, surface);
    if (cmd_chi->parsed()) return run_chi(options, surface, coeffs);
    if (cmd_lift->parsed()) return run_lift(options, surface, coeffs);
    if (cmd_ample->parsed()) return run_ample(options, surface, coeffs);
    if (cmd_search->parsed()) return run_search(options, surface, bound, budget, threads);
    if (cmd_fan->parsed()) return run_fan_sings(options, rays_text);
    if (cmd_report->parsed()) return run_report(options);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kBadInput;
  } catch (const gdp::CatalogParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kBadInput;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kRefused;
  }
  return kOk;
}
