#include "cyclezeta/field_census.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

mpz_class point_count(const Space& space, const PrimePower& q, unsigned m) {
  if (m < 1) throw DomainError("point_count: m must be >= 1");
  const mpz_class qm = mpz_pow(q.q(), m);
  mpz_class total = 1;
  for (int n : space.factors()) {
    // #P^n(F_Q) = 1 + Q + ... + Q^n
    mpz_class term = (mpz_pow(qm, static_cast<unsigned long>(n) + 1) - 1) / (qm - 1);
    total *= term;
  }
  return total;
}

ClosedPointCensus closed_point_census(const Space& space, const PrimePower& q, unsigned dmax) {
  if (dmax < 1) throw DomainError("closed_point_census: dmax must be >= 1");
  std::vector<mpz_class> n(dmax + 1);
  for (unsigned m = 1; m <= dmax; ++m) n[m] = point_count(space, q, m);

  ClosedPointCensus census{space, q, {}};
  census.b.reserve(dmax);
  for (unsigned d = 1; d <= dmax; ++d) {
    mpz_class acc = 0;
    for (unsigned e = 1; e <= d; ++e) {
      if (d % e) continue;
      acc += mobius(d / e) * n[e];
    }
    if (acc % d != 0 || acc < 0) {
      throw InternalError("closed_point_census: non-integral or negative b_" + std::to_string(d));
    }
    census.b.push_back(acc / d);
  }
  return census;
}

mpz_class irreducible_count(const PrimePower& q, unsigned d) {
  if (d < 1) throw DomainError("irreducible_count: d must be >= 1");
  mpz_class acc = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    acc += mobius(e) * mpz_pow(q.q(), d / e);
  }
  if (acc % d != 0) throw InternalError("irreducible_count: necklace sum not divisible by d");
  return acc / d;
}

ClosedPointCensus cached_closed_point_census(const Space& space, const PrimePower& q, unsigned dmax) {
  const char* dir = std::getenv("CYCLEZETA_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return closed_point_census(space, q, dmax);

  namespace fs = std::filesystem;
  const fs::path file = fs::path(dir) / ("census_" + space.to_string() + "_q" + q.to_string() + "_d" +
                                         std::to_string(dmax) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.value("space", "") == space.to_string() && doc.value("q", "") == q.to_string() &&
        doc.value("dmax", 0u) == dmax && doc.contains("b")) {
      ClosedPointCensus census{space, q, {}};
      for (const auto& v : doc["b"]) census.b.emplace_back(v.get<std::string>());
      if (census.b.size() == dmax) return census;
    }
  }

  ClosedPointCensus census = closed_point_census(space, q, dmax);
  std::error_code ec;
  fs::create_directories(dir, ec);
  nlohmann::json doc;
  doc["space"] = space.to_string();
  doc["q"] = q.to_string();
  doc["dmax"] = dmax;
  doc["b"] = nlohmann::json::array();
  for (const auto& v : census.b) doc["b"].push_back(v.get_str());
  std::ofstream out(file);
  if (out) out << doc.dump(2) << '\n';
  return census;
}

}  // namespace cyclezeta
