#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdp/riemann_roch.hpp"

namespace gdp {

enum class AmpleVerdict { ample, not_ample, unsupported };
enum class AmpleMethod { gram, rank1_shortcut };

std::string to_string(AmpleVerdict verdict);
std::string to_string(AmpleMethod method);

/// Outcome of an ampleness test. With the gram method, gram_values holds
/// (pi*D).C_i per (-1)-curve id; the verdict is ample iff all are positive.
/// The rank-1 shortcut decides by the sign of D.(-K) = sum a_i and records
/// no per-curve values.
struct AmplenessCertificate {
  AmpleVerdict verdict{AmpleVerdict::unsupported};
  AmpleMethod method{AmpleMethod::gram};
  std::vector<std::pair<int, Rational>> gram_values;
};

/// Raised for models outside the certification domain: no encoded curves,
/// or a configuration without both (-1)- and (-2)-curves (plane and
/// ruled-surface shapes).
struct UnsupportedSurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The symmetric matrix M_ij = C_i.C_j - sum over x of
/// c1(x, C_i).c1(x, C_j) over the (-1)-curves, equal to
/// (pi* pi_* C_i).C_j. Ampleness of sum a_i pi_*C_i is positivity of M a.
RMatrix gram_matrix(const SurfaceModel& model);

/// Certifies ampleness. The method defaults to the Gram criterion where
/// supported; a model with encoded curves and metadata picard_rank = 1 may
/// use the shortcut explicitly. Out-of-domain requests yield verdict
/// `unsupported` rather than throwing.
AmplenessCertificate is_ample(const SurfaceModel& model, const WeilClass& divisor);
AmplenessCertificate is_ample(const SurfaceModel& model, const WeilClass& divisor,
                              AmpleMethod method);

/// One Bott-vanishing failure found by the search: an ample divisor class
/// with negative chi of the twisted reflexive differentials.
struct Witness {
  std::vector<std::int64_t> coefficients;
  AmplenessCertificate certificate;
  Rational chi_omega;
};

struct SearchResult {
  std::vector<Witness> witnesses;  // lexicographic by coefficients
  bool truncated{false};           // true when the budget cut enumeration short
  std::uint64_t examined{0};
};

/// Enumerates every integer tuple with max-norm <= bound (lexicographic
/// order), keeping the tuples that are ample with chi < 0. A budget caps the
/// number of candidates examined (the first `budget` in lexicographic
/// order). The result is a pure function of (model, bound, budget); thread
/// count never changes it. threads = 0 picks a default.
SearchResult search_bott_failures(const SurfaceModel& model, int bound,
                                  std::optional<std::uint64_t> budget = std::nullopt,
                                  unsigned threads = 0);

}  // namespace gdp
