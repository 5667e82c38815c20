#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdp/surface_model.hpp"

namespace gdp {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed catalog text or schema: bad JSON, missing/odd-typed fields,
/// duplicate curve ids, out-of-order intersection pairs, unknown ADE labels.
struct CatalogParseError : CatalogError {
  using CatalogError::CatalogError;
};

/// Structurally invalid surface: the message names the model and the first
/// violated invariants.
struct CatalogValidationError : CatalogError {
  using CatalogError::CatalogError;
};

/// Reads {"surfaces":[...]} without validating the models.
std::vector<SurfaceModel> parse_catalog(std::istream& in);

/// Reads and validates; every returned model passes validate().
std::vector<SurfaceModel> load_catalog(std::istream& in);
std::vector<SurfaceModel> load_catalog_file(const std::string& path);

/// Writes the same format load_catalog reads; loading the output reproduces
/// the models field for field.
void save_catalog(const std::vector<SurfaceModel>& models, std::ostream& out);

/// The built-in catalog: every degree-listed surface with its classification
/// metadata, complete fans for the toric entries, and the full curve
/// configuration where encoded.
std::vector<SurfaceModel> builtin_fixtures();

/// nullptr when no model has that name.
const SurfaceModel* find_model(const std::vector<SurfaceModel>& models,
                               std::string_view name);

}  // namespace gdp
