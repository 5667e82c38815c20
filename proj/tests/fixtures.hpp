#pragma once

// Shared test fixtures: small surface models with known curve configurations.

#include <gdp/catalog.hpp>
#include <gdp/surface_model.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gdp::testing {

// The degree-5 rank-one surface with a single A4 point.  Its resolution
// carries one (-1)-curve C meeting the chain E1-E2-E3-E4 at E3.
inline SurfaceModel a4_model() {
    static std::vector<SurfaceModel> data = builtin_fixtures();
    const SurfaceModel* m = find_model(data, "S(A4)");
    if (m == nullptr) throw std::runtime_error("builtin S(A4) missing");
    return *m;
}

// Synthetic configuration with two A1 points and two (-1)-curves.  Not a
// catalog surface; used to exercise code paths with several singular points
// and a Gram matrix larger than 1x1.
inline SurfaceModel two_point_model() {
    std::vector<Curve> curves = {{0, -1}, {1, -1}, {2, -2}, {3, -2}};
    std::vector<std::tuple<int, int, std::int64_t>> pairs = {
        {0, 1, 1}, {0, 2, 1}, {1, 3, 1}};
    std::vector<SingularPoint> points = {
        {AdeType{AdeSeries::A, 1}, {2}},
        {AdeType{AdeSeries::A, 1}, {3}},
    };
    Metadata meta;
    meta["note"] = std::string("synthetic two-point test configuration");
    return make_model("T(2A1)", 7, curves, pairs, points, meta);
}

// Configuration with a single (-1)-curve and no singular points at all.
inline SurfaceModel smooth_config_model() {
    std::vector<Curve> curves = {{0, -1}};
    Metadata meta;
    meta["note"] = std::string("synthetic smooth test configuration");
    return make_model("T(smooth)", 8, curves, {}, {}, meta);
}

}  // namespace gdp::testing
