#include "gdp/positivity.hpp"

#include <algorithm>
#include <thread>

namespace gdp {

std::string to_string(AmpleVerdict verdict) {
  switch (verdict) {
    case AmpleVerdict::ample: return "ample";
    case AmpleVerdict::not_ample: return "not_ample";
    case AmpleVerdict::unsupported: return "unsupported";
  }
  return "unsupported";
}

std::string to_string(AmpleMethod method) {
  return method == AmpleMethod::gram ? "gram" : "rank1_shortcut";
}

namespace {

[[noreturn]] void refuse(const SurfaceModel& model) {
  if (!model.curves_encoded())
    throw UnsupportedSurfaceError("curve configuration not encoded for " + model.name);
  throw UnsupportedSurfaceError(
      "ampleness certification needs both (-1)- and (-2)-curves; " + model.name +
      " has a plane or ruled-surface configuration");
}

/// Pullbacks of the unit classes pi_*C_i, in minus_one_ids order.
std::vector<QDivisor> unit_pullbacks(const SurfaceModel& model) {
  std::vector<QDivisor> out;
  for (int id : minus_one_ids(model)) {
    WeilClass unit;
    unit.coefficients[id] = 1;
    out.push_back(pullback(model, unit));
  }
  return out;
}

bool rank1_metadata(const SurfaceModel& model) {
  const auto it = model.metadata.find("picard_rank");
  if (it == model.metadata.end()) return false;
  const auto* rank = std::get_if<std::int64_t>(&it->second);
  return rank && *rank == 1;
}

}  // namespace

RMatrix gram_matrix(const SurfaceModel& model) {
  if (!positivity_supported(model)) refuse(model);
  const auto ones = minus_one_positions(model);
  const auto m = static_cast<Eigen::Index>(ones.size());
  const auto lifts = unit_pullbacks(model);

  RMatrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Rational entry(model.intersections(ones[static_cast<std::size_t>(i)],
                                         ones[static_cast<std::size_t>(j)]));
      for (const SingularPoint& x : model.singular_points) {
        // c1(x, C_i).c1(x, C_j): the sign flips cancel, so pair the
        // exceptional restrictions of the pullbacks directly.
        QDivisor a = QDivisor::zero(model);
        QDivisor b = QDivisor::zero(model);
        for (int id : x.curve_ids) {
          const auto pos = position_of(model, id);
          a.coefficients(pos) = lifts[static_cast<std::size_t>(i)].coefficients(pos);
          b.coefficients(pos) = lifts[static_cast<std::size_t>(j)].coefficients(pos);
        }
        entry -= product_resolution(model, a, b);
      }
      gram(i, j) = entry;
    }
  }
  return gram;
}

namespace {

AmplenessCertificate certify_gram(const SurfaceModel& model, const RMatrix& gram,
                                  const std::vector<std::int64_t>& coeffs) {
  AmplenessCertificate cert;
  cert.method = AmpleMethod::gram;
  const auto ids = minus_one_ids(model);
  bool all_positive = true;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    Rational value(0);
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      value += gram(i, j) * Rational(coeffs[static_cast<std::size_t>(j)]);
    all_positive = all_positive && value.sign() > 0;
    cert.gram_values.emplace_back(ids[static_cast<std::size_t>(i)], value);
  }
  cert.verdict = all_positive ? AmpleVerdict::ample : AmpleVerdict::not_ample;
  return cert;
}

std::vector<std::int64_t> coefficient_vector(const SurfaceModel& model,
                                             const WeilClass& divisor) {
  std::vector<std::int64_t> coeffs;
  for (int id : minus_one_ids(model)) {
    const auto it = divisor.coefficients.find(id);
    coeffs.push_back(it == divisor.coefficients.end() ? 0 : it->second);
  }
  return coeffs;
}

}  // namespace

AmplenessCertificate is_ample(const SurfaceModel& model, const WeilClass& divisor,
                              AmpleMethod method) {
  AmplenessCertificate cert;
  cert.method = method;
  if (method == AmpleMethod::gram) {
    if (!positivity_supported(model)) return cert;  // verdict stays unsupported
    return certify_gram(model, gram_matrix(model), coefficient_vector(model, divisor));
  }
  if (!model.curves_encoded() || !rank1_metadata(model)) return cert;
  Rational anti_k_degree(0);  // D.(-K) = sum a_i
  for (const auto& [id, value] : divisor.coefficients) anti_k_degree += Rational(value);
  cert.verdict =
      anti_k_degree.sign() > 0 ? AmpleVerdict::ample : AmpleVerdict::not_ample;
  return cert;
}

AmplenessCertificate is_ample(const SurfaceModel& model, const WeilClass& divisor) {
  if (positivity_supported(model)) return is_ample(model, divisor, AmpleMethod::gram);
  if (model.curves_encoded() && rank1_metadata(model))
    return is_ample(model, divisor, AmpleMethod::rank1_shortcut);
  return AmplenessCertificate{};
}

SearchResult search_bott_failures(const SurfaceModel& model, int bound,
                                  std::optional<std::uint64_t> budget,
                                  unsigned threads) {
  if (bound < 0) throw std::invalid_argument("search bound must be non-negative");
  if (!positivity_supported(model)) refuse(model);

  const auto ids = minus_one_ids(model);
  const auto ones = minus_one_positions(model);
  const std::size_t m = ids.size();
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(bound) + 1;

  Int total(1);
  for (std::size_t i = 0; i < m; ++i) total *= radix;
  const Int capped = budget && Int(*budget) < total ? Int(*budget) : total;
  const auto limit = capped.convert_to<std::uint64_t>();

  SearchResult result;
  result.truncated = Int(limit) < total;
  result.examined = limit;
  if (limit == 0) return result;

  const RMatrix gram = gram_matrix(model);
  const auto lifts = unit_pullbacks(model);

  // Decode a lexicographic index into coefficients in [-bound, bound];
  // most significant digit first keeps index order equal to tuple order.
  const auto decode = [&](std::uint64_t index) {
    std::vector<std::int64_t> coeffs(m);
    for (std::size_t i = m; i-- > 0;) {
      coeffs[i] = static_cast<std::int64_t>(index % radix) - bound;
      index /= radix;
    }
    return coeffs;
  };

  const auto scan = [&](std::uint64_t begin, std::uint64_t end,
                        std::vector<Witness>& found) {
    for (std::uint64_t index = begin; index < end; ++index) {
      const auto coeffs = decode(index);
      AmplenessCertificate cert = certify_gram(model, gram, coeffs);
      if (cert.verdict != AmpleVerdict::ample) continue;

      WeilClass divisor;
      QDivisor tilde = QDivisor::zero(model);
      QDivisor pulled = QDivisor::zero(model);
      for (std::size_t i = 0; i < m; ++i) {
        if (coeffs[i] == 0) continue;
        divisor.coefficients[ids[i]] = coeffs[i];
        const Rational scale(coeffs[i]);
        tilde.coefficients(ones[i]) += scale;
        pulled.coefficients += (scale * lifts[i].coefficients).eval();
      }
      const ChiBreakdown chi = chi_from_pullback(model, divisor, tilde, pulled);
      if (chi.chi_omega.sign() < 0)
        found.push_back(Witness{coeffs, std::move(cert), chi.chi_omega});
    }
  };

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 8);
  if (limit < 64) workers = 1;

  if (workers == 1) {
    scan(0, limit, result.witnesses);
    return result;
  }

  std::vector<std::vector<Witness>> buckets(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (limit + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
    const std::uint64_t end = std::min(limit, begin + chunk);
    if (begin >= end) continue;
    pool.emplace_back([&, begin, end, w] { scan(begin, end, buckets[w]); });
  }
  for (auto& worker : pool) worker.join();
  // Chunks are consecutive index ranges, so concatenation keeps the overall
  // lexicographic order.
  for (auto& bucket : buckets) {
    for (auto& witness : bucket) result.witnesses.push_back(std::move(witness));
  }
  return result;
}

}  // namespace gdp
