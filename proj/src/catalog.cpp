#include "gdp/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <tuple>

#include <json.hpp>

namespace gdp {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw CatalogParseError("catalog: " + where + ": " + what);
}

int require_int(const json& value, const std::string& where, const std::string& key) {
  if (!value.contains(key) || !value[key].is_number_integer())
    parse_fail(where, "missing or non-integer field '" + key + "'");
  return value[key].get<int>();
}

std::string require_string(const json& value, const std::string& where,
                           const std::string& key) {
  if (!value.contains(key) || !value[key].is_string())
    parse_fail(where, "missing or non-string field '" + key + "'");
  return value[key].get<std::string>();
}

SurfaceModel parse_surface(const json& entry, std::size_t index) {
  const std::string where_base = "surface #" + std::to_string(index);
  if (!entry.is_object()) parse_fail(where_base, "not an object");
  SurfaceModel model;
  model.name = require_string(entry, where_base, "name");
  const std::string where = where_base + " (" + model.name + ")";
  model.degree = require_int(entry, where, "degree");

  if (!entry.contains("curves") || !entry["curves"].is_array())
    parse_fail(where, "missing or non-array field 'curves'");
  std::set<int> ids;
  for (const json& c : entry["curves"]) {
    Curve curve;
    curve.id = require_int(c, where, "id");
    curve.self = require_int(c, where, "self");
    if (!ids.insert(curve.id).second)
      parse_fail(where, "duplicate curve id " + std::to_string(curve.id));
    model.curves.push_back(curve);
  }

  const auto n = static_cast<Eigen::Index>(model.curves.size());
  model.intersections = IMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    model.intersections(i, i) = model.curves[static_cast<std::size_t>(i)].self;
  if (entry.contains("intersections")) {
    if (!entry["intersections"].is_array())
      parse_fail(where, "field 'intersections' is not an array");
    std::set<std::pair<int, int>> seen;
    for (const json& triple : entry["intersections"]) {
      if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
          !triple[1].is_number_integer() || !triple[2].is_number_integer())
        parse_fail(where, "intersection entries must be [id_a, id_b, multiplicity]");
      const int a = triple[0].get<int>();
      const int b = triple[1].get<int>();
      const auto mult = triple[2].get<std::int64_t>();
      if (a >= b) parse_fail(where, "intersection pair must have increasing ids");
      if (mult < 1) parse_fail(where, "intersection multiplicity must be >= 1");
      if (!ids.count(a) || !ids.count(b))
        parse_fail(where, "intersection pair references unknown curve id");
      if (!seen.emplace(a, b).second)
        parse_fail(where, "duplicate intersection pair");
      const auto pa = position_of(model, a);
      const auto pb = position_of(model, b);
      model.intersections(pa, pb) = mult;
      model.intersections(pb, pa) = mult;
    }
  }

  if (entry.contains("singular_points")) {
    if (!entry["singular_points"].is_array())
      parse_fail(where, "field 'singular_points' is not an array");
    for (const json& p : entry["singular_points"]) {
      SingularPoint point;
      try {
        point.type = parse_ade(require_string(p, where, "type"));
      } catch (const std::invalid_argument& error) {
        parse_fail(where, error.what());
      }
      if (!p.contains("curves") || !p["curves"].is_array())
        parse_fail(where, "singular point without 'curves' array");
      for (const json& id : p["curves"]) {
        if (!id.is_number_integer())
          parse_fail(where, "singular point curve ids must be integers");
        point.curve_ids.push_back(id.get<int>());
      }
      model.singular_points.push_back(std::move(point));
    }
  }

  if (entry.contains("metadata")) {
    if (!entry["metadata"].is_object())
      parse_fail(where, "field 'metadata' is not an object");
    for (const auto& [key, value] : entry["metadata"].items()) {
      if (value.is_boolean())
        model.metadata.emplace(key, value.get<bool>());
      else if (value.is_number_integer())
        model.metadata.emplace(key, value.get<std::int64_t>());
      else if (value.is_string())
        model.metadata.emplace(key, value.get<std::string>());
      else
        parse_fail(where, "metadata value for '" + key +
                              "' must be a boolean, integer, or string");
    }
  }

  if (entry.contains("fan")) {
    if (!entry["fan"].is_array()) parse_fail(where, "field 'fan' is not an array");
    std::vector<std::array<std::int64_t, 2>> rays;
    for (const json& ray : entry["fan"]) {
      if (!ray.is_array() || ray.size() != 2 || !ray[0].is_number_integer() ||
          !ray[1].is_number_integer())
        parse_fail(where, "fan rays must be [x, y] integer pairs");
      rays.push_back({ray[0].get<std::int64_t>(), ray[1].get<std::int64_t>()});
    }
    model.fan = std::move(rays);
  }

  return model;
}

}  // namespace

std::vector<SurfaceModel> parse_catalog(std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const nlohmann::json::parse_error& error) {
    throw CatalogParseError(std::string("catalog: ") + error.what());
  }
  if (!root.is_object() || !root.contains("surfaces") || !root["surfaces"].is_array())
    throw CatalogParseError("catalog: top level must be {\"surfaces\": [...]}");
  std::vector<SurfaceModel> models;
  std::set<std::string> names;
  for (std::size_t i = 0; i < root["surfaces"].size(); ++i) {
    SurfaceModel model = parse_surface(root["surfaces"][i], i);
    if (!names.insert(model.name).second)
      throw CatalogParseError("catalog: duplicate surface name '" + model.name + "'");
    models.push_back(std::move(model));
  }
  return models;
}

std::vector<SurfaceModel> load_catalog(std::istream& in) {
  std::vector<SurfaceModel> models = parse_catalog(in);
  for (const SurfaceModel& model : models) {
    const ValidationReport report = validate(model);
    if (!report.ok()) {
      std::string message = "catalog: surface '" + model.name + "' is invalid:";
      for (const std::string& violation : report.violations)
        message += "\n  - " + violation;
      throw CatalogValidationError(message);
    }
  }
  return models;
}

std::vector<SurfaceModel> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  return load_catalog(in);
}

void save_catalog(const std::vector<SurfaceModel>& models, std::ostream& out) {
  json surfaces = json::array();
  for (const SurfaceModel& model : models) {
    json entry = json::object();
    entry["name"] = model.name;
    entry["degree"] = model.degree;
    entry["curves"] = json::array();
    for (const Curve& curve : model.curves)
      entry["curves"].push_back(json{{"id", curve.id}, {"self", curve.self}});

    json pairs = json::array();
    const auto n = static_cast<Eigen::Index>(model.curves.size());
    std::vector<std::array<std::int64_t, 3>> triples;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (model.intersections(i, j) == 0) continue;
        std::int64_t a = model.curves[static_cast<std::size_t>(i)].id;
        std::int64_t b = model.curves[static_cast<std::size_t>(j)].id;
        if (a > b) std::swap(a, b);
        triples.push_back({a, b, model.intersections(i, j)});
      }
    }
    std::sort(triples.begin(), triples.end());
    for (const auto& t : triples) pairs.push_back(json::array({t[0], t[1], t[2]}));
    entry["intersections"] = std::move(pairs);

    entry["singular_points"] = json::array();
    for (const SingularPoint& point : model.singular_points) {
      entry["singular_points"].push_back(
          json{{"type", to_string(point.type)}, {"curves", point.curve_ids}});
    }

    json metadata = json::object();
    for (const auto& [key, value] : model.metadata) {
      if (const auto* b = std::get_if<bool>(&value))
        metadata[key] = *b;
      else if (const auto* i = std::get_if<std::int64_t>(&value))
        metadata[key] = *i;
      else
        metadata[key] = std::get<std::string>(value);
    }
    entry["metadata"] = std::move(metadata);

    if (model.fan) {
      json rays = json::array();
      for (const auto& ray : *model.fan) rays.push_back(json::array({ray[0], ray[1]}));
      entry["fan"] = std::move(rays);
    }
    surfaces.push_back(std::move(entry));
  }
  out << json{{"surfaces", std::move(surfaces)}}.dump(2) << "\n";
}

const SurfaceModel* find_model(const std::vector<SurfaceModel>& models,
                               std::string_view name) {
  for (const SurfaceModel& model : models) {
    if (model.name == name) return &model;
  }
  return nullptr;
}

namespace {

SurfaceModel stub(std::string name, int degree, std::string singularity_type,
                  Metadata extra) {
  Metadata metadata = std::move(extra);
  metadata.emplace("singularity_type", std::move(singularity_type));
  SurfaceModel model;
  model.name = std::move(name);
  model.degree = degree;
  model.intersections = IMatrix::Zero(0, 0);
  model.metadata = std::move(metadata);
  return model;
}

const char* kNotEncoded =
    "curve configuration not encoded; add curves/intersections/singular_points "
    "to run divisor computations";

}  // namespace

std::vector<SurfaceModel> builtin_fixtures() {
  std::vector<SurfaceModel> models;

  // --- Toric entries, each with its complete fan. ---
  {
    SurfaceModel p2;
    p2.name = "P2";
    p2.degree = 9;
    p2.intersections = IMatrix::Zero(0, 0);
    p2.metadata = {{"toric", true}, {"picard_rank", std::int64_t{1}}};
    p2.fan = {{{1, 0}, {0, 1}, {-1, -1}}};
    models.push_back(std::move(p2));
  }
  {
    SurfaceModel s = stub("S(A1)", 8, "A1",
                          {{"toric", true},
                           {"note", "weighted projective plane P(1,1,2); the projective "
                                    "closure of the quadric cone"}});
    s.fan = {{{1, 0}, {0, 1}, {-1, -2}}};
    models.push_back(std::move(s));
  }
  {
    SurfaceModel s = stub("S(A1+A2)", 6, "A1+A2",
                          {{"toric", true},
                           {"note", "weighted projective plane P(1,2,3)"}});
    s.fan = {{{1, 0}, {0, 1}, {-2, -3}}};
    models.push_back(std::move(s));
  }
  {
    SurfaceModel s = stub("S(2A1+A3)", 4, "2A1+A3",
                          {{"toric", true},
                           {"note", "also the quotient of the plane by Z/4 acting "
                                    "through diag(i, -i)"}});
    s.fan = {{{1, 2}, {1, -2}, {-1, 0}}};
    models.push_back(std::move(s));
  }
  {
    SurfaceModel s = stub("S(3A2)", 3, "3A2",
                          {{"toric", true},
                           {"note", "also the quotient of the plane by Z/3 acting "
                                    "through diag(w, w^2)"}});
    s.fan = {{{-2, 1}, {1, 1}, {1, -2}}};
    models.push_back(std::move(s));
  }

  // --- Quotients of toric surfaces by torus-preserving group actions. ---
  models.push_back(stub(
      "S(3A1+D4)", 2, "3A1+D4",
      {{"quotient", "the plane modulo the quaternion group Q8 acting through a "
                    "projective representation; the fifth-power map descends"}}));
  models.push_back(stub(
      "S(A1+2A3)", 2, "A1+2A3",
      {{"quotient", "P1 x P1 modulo Z/4 generated by ([x:y],[u:v]) -> ([u:v],[x:-y]); "
                    "the fifth-power map descends"}}));
  models.push_back(stub(
      "S(A1+A2+A5)", 1, "A1+A2+A5",
      {{"quotient", "the sextic del Pezzo surface (plane blown up at the three "
                    "torus-fixed points) modulo the Z/6 generated by the Cremona "
                    "involution and the coordinate rotation [x:y:z] -> [y:z:x]"}}));
  models.push_back(stub(
      "S(4A2)", 1, "4A2",
      {{"quotient", "the plane modulo Z/3 x Z/3 generated by [x:y:z] -> [x:wy:w^2 z] "
                    "and [x:y:z] -> [y:z:x]; the seventh-power map descends"}}));
  models.push_back(stub(
      "S(2A1+2A3)", 1, "2A1+2A3",
      {{"quotient", "P1 x P1 modulo Z/2 x Z/4 generated by ([x:y],[u:v]) -> "
                    "([x:-y],[u:-v]) and ([x:y],[u:v]) -> ([u:v],[y:-x]); the "
                    "fifth-power map descends"}}));

  // --- Failures of Bott vanishing already for Cartier divisors. ---
  models.push_back(stub(
      "S(E8)", 1, "E8",
      {{"cartier_bv_failure", true},
       {"note", "special surface X^5 Y + Z^3 + W^2 = 0 in P(1,1,2,3)"}}));
  models.push_back(stub("S(A1+E7)", 1, "A1+E7",
                        {{"cartier_bv_failure", true},
                         {"universal_cover",
                          "rank-2 Gorenstein del Pezzo with one E6 singularity"}}));
  models.push_back(stub("S(A2+E6)", 1, "A2+E6",
                        {{"cartier_bv_failure", true},
                         {"universal_cover",
                          "rank-3 Gorenstein del Pezzo with one D4 singularity"}}));
  models.push_back(stub(
      "St(2D4)", 1, "2D4",
      {{"cartier_bv_failure", true},
       {"note", "placeholder for the one-parameter family of surfaces with two D4 "
                "points; every member fails Bott vanishing for a Cartier divisor"}}));

  // --- No endomorphism of degree > 1, by lifting to the universal cover. ---
  models.push_back(stub("S(2A4)", 1, "2A4",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover", "smooth quintic del Pezzo surface"}}));
  models.push_back(stub("S(D8)", 1, "D8",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover",
                          "rank-3 Gorenstein del Pezzo with singularity type D5"}}));
  models.push_back(stub("S(A1+A7)", 1, "A1+A7",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover",
                          "rank-5 Gorenstein del Pezzo with singularity type A1"}}));
  models.push_back(stub("S(A8)", 1, "A8",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover",
                          "rank-5 Gorenstein del Pezzo with singularity type A2"}}));
  models.push_back(stub("S'(A2+E6)", 1, "A2+E6",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover",
                          "rank-3 Gorenstein del Pezzo with one D4 singularity"}}));
  models.push_back(stub("S'(A1+E7)", 1, "A1+E7",
                        {{"cover_blocks_endomorphism", true},
                         {"universal_cover",
                          "rank-2 Gorenstein del Pezzo with one E6 singularity"}}));

  // --- Failures of Bott vanishing for a Weil divisor. S(A4) carries the
  // ---  full curve configuration; its resolution has one (-1)-curve meeting
  // ---  the third curve of the A4 chain.
  models.push_back(make_model(
      "S(A4)", 5,
      {{0, -1}, {1, -2}, {2, -2}, {3, -2}, {4, -2}},
      {{0, 3, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}},
      {SingularPoint{AdeType{AdeSeries::A, 4}, {1, 2, 3, 4}}},
      {{"expected_bv_failure", true},
       {"picard_rank", std::int64_t{1}},
       {"singularity_type", "A4"},
       {"note", "degree-5 resolution: chain E1-E2-E3-E4 of (-2)-curves with the "
                "(-1)-curve meeting E3"}}));
  for (const auto& [name, degree, type] :
       std::vector<std::tuple<const char*, int, const char*>>{
           {"S(D5)", 4, "D5"},
           {"S(A1+A5)", 3, "A1+A5"},
           {"S(E6)", 3, "E6"},
           {"S(A7)", 2, "A7"},
           {"S(A1+D6)", 2, "A1+D6"},
           {"S(E7)", 2, "E7"},
           {"S(A2+A5)", 2, "A2+A5"},
       }) {
    models.push_back(stub(name, degree, type,
                          {{"expected_bv_failure", true}, {"note", kNotEncoded}}));
  }

  // --- Universal covers that fail Bott vanishing for a Weil divisor. ---
  models.push_back(stub(
      "S(2A1+D6)", 1, "2A1+D6",
      {{"cover_fails_bv", true},
       {"universal_cover",
        "degree-4 Gorenstein del Pezzo with one A3 singularity (two isomorphism "
        "classes; both fail Bott vanishing for a Weil divisor)"}}));
  models.push_back(stub(
      "S(A3+D5)", 1, "A3+D5",
      {{"cover_fails_bv", true},
       {"universal_cover", "rank-4 Gorenstein del Pezzo with singularity type A2"},
       {"cover_divisor_coeffs", "2,-2,-4,1,2,3,4,1"},
       {"note", "cover witness divisor 2C1-2C2-4C3+C4+2C5+3C6+4C7+C8; the cover's "
                "8-curve arrangement is not encoded"}}));

  // --- Open. ---
  models.push_back(stub(
      "S'(E8)", 1, "E8",
      {{"open_problem", true},
       {"note", "general surface X^5 Y + X^4 Z + Z^3 + W^2 = 0 in P(1,1,2,3); "
                "satisfies Bott vanishing for Weil divisors and has no nontrivial "
                "covers, so no technique here applies"}}));

  return models;
}

}  // namespace gdp
