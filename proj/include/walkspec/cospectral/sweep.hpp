#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walkspec/cospectral/certificate.hpp"
#include "walkspec/cospectral/lemmas.hpp"
#include "walkspec/graph/enumerate.hpp"
#include "walkspec/spectral/classify.hpp"

namespace walkspec::cospectral {

// Graphs sharing one generalized spectrum, pairwise non-isomorphic.
struct MateGroup {
  spectral::GeneralizedSpectrumKey key;
  std::vector<graph::Graph> members;  // canonical representatives
  std::vector<spectral::FamilyClassification> perMemberClassification;
  bool uncertified = false;  // some member has singular W: no Q reconstruction
};

inline std::vector<MateGroup> groupByGeneralizedSpectrum(const std::vector<graph::Graph>& corpus) {
  std::map<spectral::GeneralizedSpectrumKey, MateGroup> groups;
  std::size_t order = 0;
  for (const auto& g : corpus) {
    if (order == 0) order = g.order();
    if (g.order() != order) throw DimensionError("groupByGeneralizedSpectrum: mixed orders");
    auto key = spectral::generalizedSpectrumKey(g);
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) it->second.key = key;
    graph::Graph rep = graph::canonicalGraph(g);
    bool dup = false;
    for (const auto& m : it->second.members)
      if (m == rep) dup = true;
    if (!dup) it->second.members.push_back(rep);
  }
  std::vector<MateGroup> out;
  out.reserve(groups.size());
  for (auto& [key, grp] : groups) {
    for (const auto& m : grp.members) {
      auto cls = spectral::classifyFamily(spectral::walkMatrixInfo(m));
      grp.perMemberClassification.push_back(cls);
    }
    out.push_back(std::move(grp));
  }
  return out;
}

struct LemmaStats {
  std::uint64_t levelDividesGcdDn = 0;   // level | gcd of last invariant factors
  std::uint64_t levelOdd = 0;
  std::uint64_t levelPrimeExclusion = 0; // level primes within squared support
  std::uint64_t primitive = 0;
  std::uint64_t sameLevelPermutation = 0;// applicable equal-level instances
  std::uint64_t corollarySquareFree = 0; // level square-free
};

struct BoundReport {
  std::size_t order = 0;
  std::size_t classCount = 0;
  std::size_t fnCount = 0;
  std::size_t hnCount = 0;
  std::size_t certifiedPairs = 0;
  std::map<std::size_t, std::size_t> groupSizeHistogram;
  std::vector<std::string> violations;  // expected empty
  LemmaStats lemmaStats;
};

namespace detail {

inline void checkCertifiedMate(const graph::Graph& g,
                               const spectral::FamilyClassification& cls,
                               const graph::Graph& h, BoundReport& report) {
  GcmCertificate cert = verifyPair(g, h);
  ++report.certifiedPairs;
  auto note = [&](const std::string& what) {
    report.violations.push_back("n=" + std::to_string(g.order()) + " pair " +
                                graph::encodeGraph6(g) + " / " + graph::encodeGraph6(h) +
                                ": " + what);
  };
  if (!cert.valid()) note("certificate invalid");
  if (cert.isPermutation) note("mate pair certified by a permutation (isomorphic?)");

  if (cert.levelConstraints.dividesGcdLastInvariants)
    ++report.lemmaStats.levelDividesGcdDn;
  else
    note("level does not divide gcd of last invariant factors");
  if (cert.levelConstraints.levelOdd)
    ++report.lemmaStats.levelOdd;
  else
    note("level is even");
  if (cert.levelConstraints.levelSquareFree)
    ++report.lemmaStats.corollarySquareFree;
  else
    note("level is not square-free");
  if (cert.isPrimitive)
    ++report.lemmaStats.primitive;
  else
    note("Q is not primitive");

  // level prime support must sit inside the k squared primes of det W(G),
  // and p^k-exact primes with full rank stay out of the level
  auto info = spectral::walkMatrixInfo(g);
  bool supportOk = true;
  for (const auto& [p, e] : exact::factor(cert.level)) {
    bool squared = false;
    for (const auto& [q, f] : info.oddPart)
      if (q == p && f >= 2) squared = true;
    if (!squared) supportOk = false;
  }
  if (supportOk)
    ++report.lemmaStats.levelPrimeExclusion;
  else
    note("level has a prime outside the squared-prime support of det W(G)");
  (void)cls;
}

}  // namespace detail

// One shard of the representative-collection phase: canonical class reps
// found in a contiguous labelled-index range. Shards overlap in the classes
// they discover; mergeClassReps dedupes before any group analysis.
inline std::vector<graph::Graph> collectClassReps(std::size_t n, std::uint64_t shardIndex,
                                                  std::uint64_t shardTotal) {
  if (shardTotal == 0 || shardIndex >= shardTotal)
    throw DimensionError("collectClassReps: bad shard spec");
  const std::uint64_t total = graph::labelledGraphCount(n);
  const std::uint64_t lo = total / shardTotal * shardIndex +
                           std::min<std::uint64_t>(shardIndex, total % shardTotal);
  const std::uint64_t hi = lo + total / shardTotal + (shardIndex < total % shardTotal ? 1 : 0);
  return graph::isomorphismClassReps(n, lo, hi);
}

inline std::vector<graph::Graph> mergeClassReps(const std::vector<std::vector<graph::Graph>>& shards) {
  std::map<graph::CanonicalForm, graph::Graph> merged;
  for (const auto& shard : shards)
    for (const auto& g : shard) merged.try_emplace(graph::canonicalForm(g), g);
  std::vector<graph::Graph> out;
  out.reserve(merged.size());
  for (const auto& [form, g] : merged) out.push_back(g);
  return out;
}

// Exhaustive mate-bound verification over the given isomorphism-class
// representatives: every F_n member's mate count obeys 2^k - 1, and every
// certified pair's level satisfies the lemma predicates.
inline BoundReport boundReportForReps(const std::vector<graph::Graph>& reps, std::size_t n) {
  BoundReport report;
  report.order = n;
  report.classCount = reps.size();
  auto groups = groupByGeneralizedSpectrum(reps);
  for (const auto& grp : groups) {
    ++report.groupSizeHistogram[grp.members.size()];
    for (std::size_t i = 0; i < grp.members.size(); ++i) {
      const auto& cls = grp.perMemberClassification[i];
      if (cls.inFn) ++report.fnCount;
      if (cls.inHn) ++report.hnCount;
      if (!cls.inFn) continue;
      const std::size_t mates = grp.members.size() - 1;
      if (mates > cls.mateBound)
        report.violations.push_back(
            "n=" + std::to_string(n) + " graph " + graph::encodeGraph6(grp.members[i]) +
            ": " + std::to_string(mates) + " mates exceeds bound " +
            std::to_string(cls.mateBound));
      for (std::size_t j = 0; j < grp.members.size(); ++j) {
        if (j == i) continue;
        detail::checkCertifiedMate(grp.members[i], cls, grp.members[j], report);
      }
    }
    // Equal-level cross-check: equal-level certificates for one base graph would
    // force isomorphic mates; with distinct members this stays NotApplicable
    // unless something is wrong upstream.
    for (std::size_t i = 0; i < grp.members.size(); ++i) {
      if (!grp.perMemberClassification[i].inFn || grp.members.size() < 3) continue;
      std::vector<exact::RatMatrix> qs;
      for (std::size_t j = 0; j < grp.members.size(); ++j)
        if (j != i) qs.push_back(reconstructQ(grp.members[i], grp.members[j]));
      for (std::size_t a = 0; a < qs.size(); ++a)
        for (std::size_t b = a + 1; b < qs.size(); ++b) {
          auto outcome = checkSameLevelPermutation(qs[a], qs[b]);
          if (outcome == LemmaOutcome::Verified)
            ++report.lemmaStats.sameLevelPermutation;
          else if (outcome == LemmaOutcome::Violated)
            report.violations.push_back("n=" + std::to_string(n) +
                                        ": same-level pair is not a permutation");
        }
    }
  }
  return report;
}

inline BoundReport verifyTheoremBound(std::size_t n) {
  return boundReportForReps(mergeClassReps({collectClassReps(n, 0, 1)}), n);
}

}  // namespace walkspec::cospectral
