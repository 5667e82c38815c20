#include "gdp/toric.hpp"

#include <algorithm>
#include <numeric>

#include "gdp/ade.hpp"

namespace gdp {

namespace {

std::int64_t cross(const RayVec& a, const RayVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

/// 0 for angles in [0, pi) measured from the positive x-axis, 1 for the
/// rest; within one half-plane, a positive cross product means "earlier".
int half_plane(const RayVec& r) {
  if (r[1] > 0 || (r[1] == 0 && r[0] > 0)) return 0;
  return 1;
}

std::string ray_text(const RayVec& r) {
  return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")";
}

}  // namespace

Fan2D make_fan(std::vector<RayVec> rays) {
  if (rays.size() < 3)
    throw FanError("a complete 2D fan needs at least three rays, got " +
                   std::to_string(rays.size()));
  for (const RayVec& r : rays) {
    if (r[0] == 0 && r[1] == 0) throw FanError("zero vector is not a ray");
    if (std::gcd(std::abs(r[0]), std::abs(r[1])) != 1)
      throw FanError("ray " + ray_text(r) + " is not primitive");
  }
  std::sort(rays.begin(), rays.end(), [](const RayVec& a, const RayVec& b) {
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
  });
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const RayVec& u = rays[i];
    const RayVec& v = rays[(i + 1) % rays.size()];
    if (u == v) throw FanError("duplicate ray " + ray_text(u));
    if (cross(u, v) <= 0)
      throw FanError("rays do not span a complete fan: the cone between " +
                     ray_text(u) + " and " + ray_text(v) + " is not strictly convex");
  }
  return Fan2D{std::move(rays)};
}

std::string ConeSingularity::label() const {
  if (order == 1) return "smooth";
  if (gorenstein) return "A" + std::to_string(order - 1);
  return "non-Gorenstein cyclic of order " + std::to_string(order);
}

std::vector<ConeSingularity> classify_fan(const Fan2D& fan) {
  std::vector<ConeSingularity> out;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const RayVec& u = fan.rays[i];
    const RayVec& v = fan.rays[(i + 1) % fan.rays.size()];
    ConeSingularity cone;
    cone.u = u;
    cone.v = v;
    cone.order = cross(u, v);
    if (cone.order <= 0)
      throw FanError("cone between " + ray_text(u) + " and " + ray_text(v) +
                     " is not positively oriented; build fans through make_fan");
    // The functional m with m(u) = m(v) = 1 solves a 2x2 system with
    // determinant `order`; Gorenstein means the solution is integral.
    cone.gorenstein = (v[1] - u[1]) % cone.order == 0 && (u[0] - v[0]) % cone.order == 0;
    out.push_back(cone);
  }
  return out;
}

std::vector<std::string> singularity_multiset(const Fan2D& fan) {
  std::vector<AdeType> types;
  for (const ConeSingularity& cone : classify_fan(fan)) {
    if (cone.order == 1) continue;
    if (!cone.gorenstein)
      throw FanError("cone between " + ray_text(cone.u) + " and " + ray_text(cone.v) +
                     " is " + cone.label());
    types.push_back(AdeType{AdeSeries::A, static_cast<int>(cone.order - 1)});
  }
  std::sort(types.begin(), types.end());
  std::vector<std::string> labels;
  for (const AdeType& t : types) labels.push_back(to_string(t));
  return labels;
}

}  // namespace gdp
