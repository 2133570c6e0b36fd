#pragma once

#include <string>

#include <json.hpp>

#include "walkspec/cospectral/certificate.hpp"

namespace walkspec::cospectral {

// Self-describing certificate document. Q is serialized as the integer
// matrix level*Q plus the level, so the round-trip is lossless; all numbers
// travel as decimal strings.

inline nlohmann::json certificateToJson(const GcmCertificate& c) {
  nlohmann::json j;
  j["schema"] = "walkspec/1";
  j["record"] = "gcm-certificate";
  j["order"] = c.graphG.order();
  j["graph_g"] = graph::encodeGraph6(c.graphG);
  j["graph_h"] = graph::encodeGraph6(c.graphH);
  j["level"] = c.level.get_str();
  nlohmann::json lq = nlohmann::json::array();
  exact::IntMatrix m = c.q.scaledToInt(c.level);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    lq.push_back(row);
  }
  j["level_q"] = lq;
  j["is_regular"] = c.isRegular;
  j["is_orthogonal"] = c.isOrthogonal;
  j["conjugation_holds"] = c.conjugationHolds;
  j["is_permutation"] = c.isPermutation;
  j["is_primitive"] = c.isPrimitive;
  j["valid"] = c.valid();
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& r : c.perPrimeRanks)
    ranks.push_back({{"prime", r.prime.get_str()}, {"rank_lq", r.rank}});
  j["per_prime_ranks"] = ranks;
  j["level_constraints"] = {
      {"divides_gcd_dn", c.levelConstraints.dividesGcdLastInvariants},
      {"level_odd", c.levelConstraints.levelOdd},
      {"level_square_free", c.levelConstraints.levelSquareFree}};
  return j;
}

inline GcmCertificate certificateFromJson(const nlohmann::json& j) {
  graph::Graph g = graph::parseGraph6(j.at("graph_g").get<std::string>());
  graph::Graph h = graph::parseGraph6(j.at("graph_h").get<std::string>());
  Int level(j.at("level").get<std::string>());
  const auto& lq = j.at("level_q");
  const std::size_t n = g.order();
  exact::RatMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      exact::Rat v(Int(lq.at(i).at(k).get<std::string>()), level);
      v.canonicalize();
      q(i, k) = v;
    }
  GcmCertificate c{g, h, q};
  c.level = level;
  c.isRegular = j.at("is_regular").get<bool>();
  c.isOrthogonal = j.at("is_orthogonal").get<bool>();
  c.conjugationHolds = j.at("conjugation_holds").get<bool>();
  c.isPermutation = j.at("is_permutation").get<bool>();
  c.isPrimitive = j.at("is_primitive").get<bool>();
  for (const auto& r : j.at("per_prime_ranks"))
    c.perPrimeRanks.push_back(
        {Int(r.at("prime").get<std::string>()), r.at("rank_lq").get<std::size_t>()});
  const auto& lc = j.at("level_constraints");
  c.levelConstraints.dividesGcdLastInvariants = lc.at("divides_gcd_dn").get<bool>();
  c.levelConstraints.levelOdd = lc.at("level_odd").get<bool>();
  c.levelConstraints.levelSquareFree = lc.at("level_square_free").get<bool>();
  return c;
}

inline std::string certificateToString(const GcmCertificate& c) {
  return certificateToJson(c).dump(2);
}

inline GcmCertificate certificateFromString(const std::string& s) {
  return certificateFromJson(nlohmann::json::parse(s));
}

}  // namespace walkspec::cospectral
