// walkspec: classify graphs by the arithmetic of their walk matrices,
// certify generalized cospectral pairs, and sweep small orders exhaustively.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkspec/walkspec.hpp"

namespace ws = walkspec;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotCospectral = 3;
constexpr int kExitIsomorphic = 4;
constexpr int kExitInternal = 5;

enum class Format { Human, JsonLines, Csv };

Format parseFormat(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "json-lines") return Format::JsonLines;
  if (s == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "expected human, json-lines or csv");
}

std::string factorizationHuman(const ws::spectral::WalkMatrixInfo& info) {
  // e.g. "10224 = 2^4 × 3^2 × 71"
  std::ostringstream out;
  out << info.determinant.get_str() << " = ";
  std::vector<std::string> parts;
  if (info.determinant < 0) parts.push_back("(-1)");
  if (info.twoAdicValuation == 1)
    parts.push_back("2");
  else if (info.twoAdicValuation > 1)
    parts.push_back("2^" + std::to_string(info.twoAdicValuation));
  for (const auto& [p, e] : info.oddPart)
    parts.push_back(e == 1 ? p.get_str() : p.get_str() + "^" + std::to_string(e));
  if (parts.empty()) parts.push_back(info.determinant.get_str());
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " × " : "") << parts[i];
  return out.str();
}

struct AnalyzeRecord {
  std::string line;
  bool ok = false;
  std::string error;
  std::size_t errorOffset = 0;
  std::size_t order = 0;
  ws::spectral::WalkMatrixInfo info{ws::exact::IntMatrix(1, 1), 0};
  ws::spectral::FamilyClassification cls;
};

json analyzeToJson(const AnalyzeRecord& r) {
  json j;
  j["schema"] = "walkspec/1";
  j["record"] = "analyze";
  j["input"] = r.line;
  if (!r.ok) {
    j["error"] = r.error;
    j["error_offset"] = r.errorOffset;
    return j;
  }
  j["order"] = r.order;
  j["det_w"] = r.info.determinant.get_str();
  j["controllable"] = r.info.controllable;
  j["two_adic_valuation"] = r.info.twoAdicValuation;
  json odd = json::array();
  for (const auto& [p, e] : r.info.oddPart) odd.push_back({{"prime", p.get_str()}, {"exp", e}});
  j["odd_part"] = odd;
  if (r.info.normalizedDet) j["normalized_det"] = r.info.normalizedDet->get_str();
  json ranks = json::array();
  for (const auto& pr : r.cls.perPrimeRanks)
    ranks.push_back({{"prime", pr.prime.get_str()},
                     {"rank_w", pr.rank},
                     {"satisfied", pr.satisfied}});
  j["per_prime_ranks"] = ranks;
  j["in_hn"] = r.cls.inHn;
  j["in_fn"] = r.cls.inFn;
  j["k"] = r.cls.kOddPrimesSquared;
  j["k_from_dn"] = r.cls.kFromLastInvariant;
  if (r.cls.inFn) j["mate_bound"] = std::to_string(r.cls.mateBound);
  return j;
}

void printAnalyzeHuman(const AnalyzeRecord& r, std::ostream& out) {
  if (!r.ok) {
    out << r.line << ": parse error: " << r.error << "\n";
    return;
  }
  out << r.line << ": n=" << r.order;
  if (!r.info.controllable) {
    out << " det W = 0, not controllable\n";
    return;
  }
  out << " det W = " << factorizationHuman(r.info);
  for (const auto& pr : r.cls.perPrimeRanks)
    out << ", rank_" << pr.prime.get_str() << " W = " << pr.rank;
  out << (r.cls.inHn ? ", in Hn" : "") << (r.cls.inFn ? ", in Fn" : ", not in Fn");
  if (r.cls.inFn) out << ", k=" << r.cls.kOddPrimesSquared << ", mate bound " << r.cls.mateBound;
  out << "\n";
}

void printAnalyzeCsv(const AnalyzeRecord& r, std::ostream& out) {
  out << '"' << r.line << "\",";
  if (!r.ok) {
    out << "error,\"" << r.error << "\",,,,,,\n";
    return;
  }
  out << "ok,," << r.order << ',' << r.info.determinant.get_str() << ','
      << (r.info.controllable ? 1 : 0) << ',' << (r.cls.inHn ? 1 : 0) << ','
      << (r.cls.inFn ? 1 : 0) << ',' << r.cls.kOddPrimesSquared << ','
      << (r.cls.inFn ? std::to_string(r.cls.mateBound) : "") << "\n";
}

int runAnalyze(const std::string& path, Format fmt) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-" && !path.empty()) {
    file.open(path);
    if (!file) {
      std::cerr << "walkspec: cannot open " << path << "\n";
      return kExitUsage;
    }
    in = &file;
  }
  if (fmt == Format::Csv)
    std::cout << "input,status,error,order,det_w,controllable,in_hn,in_fn,k,mate_bound\n";
  bool anyError = false;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    AnalyzeRecord rec;
    rec.line = line;
    try {
      ws::graph::Graph g = ws::graph::parseGraph6(line);
      rec.order = g.order();
      rec.info = ws::spectral::walkMatrixInfo(g);
      rec.cls = ws::spectral::classifyFamily(rec.info);
      rec.ok = true;
    } catch (const ws::ParseError& e) {
      rec.error = e.what();
      rec.errorOffset = e.offset;
      anyError = true;
    }
    switch (fmt) {
      case Format::Human: printAnalyzeHuman(rec, std::cout); break;
      case Format::JsonLines: std::cout << analyzeToJson(rec).dump() << "\n"; break;
      case Format::Csv: printAnalyzeCsv(rec, std::cout); break;
    }
  }
  return anyError ? kExitParse : kExitOk;
}

int runCertify(const std::string& a, const std::string& b, Format fmt) {
  ws::graph::Graph g = ws::graph::parseGraph6(a);
  ws::graph::Graph h = ws::graph::parseGraph6(b);
  ws::cospectral::GcmCertificate cert = ws::cospectral::verifyPair(g, h);

  const bool isomorphic = cert.isPermutation;
  switch (fmt) {
    case Format::Human: {
      std::cout << "pair: " << a << " / " << b << "\n"
                << "level: " << cert.level.get_str() << "\n"
                << "orthogonal: " << cert.isOrthogonal << "  regular: " << cert.isRegular
                << "  conjugation: " << cert.conjugationHolds << "\n"
                << "permutation: " << cert.isPermutation
                << "  primitive: " << cert.isPrimitive << "\n"
                << "level | gcd(d_n): " << cert.levelConstraints.dividesGcdLastInvariants
                << "  level odd: " << cert.levelConstraints.levelOdd
                << "  level square-free: " << cert.levelConstraints.levelSquareFree << "\n"
                << "verdict: "
                << (!cert.valid() ? "invalid"
                                  : (isomorphic ? "isomorphic pair" : "generalized cospectral mate"))
                << "\n";
      break;
    }
    case Format::JsonLines:
      std::cout << ws::cospectral::certificateToJson(cert).dump() << "\n";
      break;
    case Format::Csv:
      std::cout << "graph_g,graph_h,level,valid,permutation,primitive\n"
                << '"' << a << "\",\"" << b << "\"," << cert.level.get_str() << ','
                << cert.valid() << ',' << cert.isPermutation << ',' << cert.isPrimitive << "\n";
      break;
  }
  if (!cert.valid()) return kExitInternal;
  return isomorphic ? kExitIsomorphic : kExitOk;
}

json boundReportToJson(const ws::cospectral::BoundReport& r) {
  json j;
  j["schema"] = "walkspec/1";
  j["record"] = "sweep-report";
  j["order"] = r.order;
  j["class_count"] = r.classCount;
  j["fn_count"] = r.fnCount;
  j["hn_count"] = r.hnCount;
  j["certified_pairs"] = r.certifiedPairs;
  json hist = json::object();
  for (const auto& [size, count] : r.groupSizeHistogram)
    hist[std::to_string(size)] = count;
  j["group_size_histogram"] = hist;
  j["violations"] = r.violations;
  j["lemma_stats"] = {{"level_divides_gcd_dn", r.lemmaStats.levelDividesGcdDn},
                      {"level_odd", r.lemmaStats.levelOdd},
                      {"level_square_free", r.lemmaStats.corollarySquareFree},
                      {"level_prime_exclusion", r.lemmaStats.levelPrimeExclusion},
                      {"primitive", r.lemmaStats.primitive},
                      {"same_level_permutation", r.lemmaStats.sameLevelPermutation}};
  return j;
}

void printBoundReportHuman(const ws::cospectral::BoundReport& r, std::ostream& out) {
  out << "order " << r.order << ": " << r.classCount << " isomorphism classes, " << r.fnCount
      << " in Fn, " << r.hnCount << " in Hn\n";
  out << "group sizes:";
  for (const auto& [size, count] : r.groupSizeHistogram)
    out << " " << size << "x" << count;
  out << "\ncertified pairs: " << r.certifiedPairs << "\n";
  out << "lemma checks: level|gcd(d_n) " << r.lemmaStats.levelDividesGcdDn << ", level odd "
      << r.lemmaStats.levelOdd << ", square-free " << r.lemmaStats.corollarySquareFree
      << ", prime support " << r.lemmaStats.levelPrimeExclusion << ", primitive "
      << r.lemmaStats.primitive << "\n";
  if (r.violations.empty()) {
    out << "bound violations: none\n";
  } else {
    out << "bound violations:\n";
    for (const auto& v : r.violations) out << "  " << v << "\n";
  }
}

std::size_t workerCount() {
  if (const char* env = std::getenv("WALKSPEC_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

std::vector<ws::graph::Graph> collectRepsParallel(std::size_t order) {
  const std::size_t workers = workerCount();
  if (workers <= 1) return ws::cospectral::collectClassReps(order, 0, 1);
  std::vector<std::vector<ws::graph::Graph>> shards(workers);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < workers; ++i)
    pool.emplace_back([&, i] { shards[i] = ws::cospectral::collectClassReps(order, i, workers); });
  for (auto& t : pool) t.join();
  return ws::cospectral::mergeClassReps(shards);
}

int runSweep(std::size_t order, const std::string& shardSpec, bool allowLong,
             const std::vector<std::string>& mergeFiles, Format fmt) {
  if (order > 7 || (order == 7 && !allowLong)) {
    std::cerr << "walkspec: sweep order " << order
              << " exceeds guardrail (max 6, 7 with --allow-long)\n";
    return kExitUsage;
  }

  if (!mergeFiles.empty()) {
    std::vector<std::vector<ws::graph::Graph>> shards;
    for (const auto& path : mergeFiles) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "walkspec: cannot open " << path << "\n";
        return kExitUsage;
      }
      json j = json::parse(in);
      if (j.value("record", "") != "sweep-shard" || j.at("order").get<std::size_t>() != order) {
        std::cerr << "walkspec: " << path << " is not an order-" << order << " shard file\n";
        return kExitUsage;
      }
      std::vector<ws::graph::Graph> reps;
      for (const auto& s : j.at("reps")) reps.push_back(ws::graph::parseGraph6(s.get<std::string>()));
      shards.push_back(std::move(reps));
    }
    auto report = ws::cospectral::boundReportForReps(ws::cospectral::mergeClassReps(shards), order);
    if (fmt == Format::Human)
      printBoundReportHuman(report, std::cout);
    else
      std::cout << boundReportToJson(report).dump() << "\n";
    return report.violations.empty() ? kExitOk : kExitInternal;
  }

  if (!shardSpec.empty()) {
    std::size_t slash = shardSpec.find('/');
    if (slash == std::string::npos) {
      std::cerr << "walkspec: --shard expects INDEX/TOTAL\n";
      return kExitUsage;
    }
    std::uint64_t index = std::stoull(shardSpec.substr(0, slash));
    std::uint64_t total = std::stoull(shardSpec.substr(slash + 1));
    if (total == 0 || index >= total) {
      std::cerr << "walkspec: shard index must be < total\n";
      return kExitUsage;
    }
    auto reps = ws::cospectral::collectClassReps(order, index, total);
    json j;
    j["schema"] = "walkspec/1";
    j["record"] = "sweep-shard";
    j["order"] = order;
    j["shard"] = {{"index", index}, {"total", total}};
    json list = json::array();
    for (const auto& g : reps) list.push_back(ws::graph::encodeGraph6(g));
    j["reps"] = list;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  auto report = ws::cospectral::boundReportForReps(collectRepsParallel(order), order);
  if (fmt == Format::Human)
    printBoundReportHuman(report, std::cout);
  else
    std::cout << boundReportToJson(report).dump() << "\n";
  return report.violations.empty() ? kExitOk : kExitInternal;
}

int runGroup(std::size_t order, const std::string& path, Format fmt) {
  std::vector<ws::graph::Graph> corpus;
  if (order > 0) {
    if (order > ws::graph::kEnumerateMaxOrder) {
      std::cerr << "walkspec: group order exceeds guardrail\n";
      return kExitUsage;
    }
    corpus = ws::graph::isomorphismClassReps(order);
  } else {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-" && !path.empty()) {
      file.open(path);
      if (!file) {
        std::cerr << "walkspec: cannot open " << path << "\n";
        return kExitUsage;
      }
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      if (line.empty()) continue;
      corpus.push_back(ws::graph::parseGraph6(line));
    }
  }
  auto groups = ws::cospectral::groupByGeneralizedSpectrum(corpus);
  for (const auto& grp : groups) {
    if (fmt == Format::Human) {
      std::cout << "group of " << grp.members.size() << ":";
      for (const auto& m : grp.members) std::cout << " " << ws::graph::encodeGraph6(m);
      std::cout << "\n";
    } else {
      json j;
      j["schema"] = "walkspec/1";
      j["record"] = "mate-group";
      json members = json::array();
      for (const auto& m : grp.members) members.push_back(ws::graph::encodeGraph6(m));
      j["members"] = members;
      json poly = json::array();
      for (const auto& c : grp.key.charPolyG) poly.push_back(c.get_str());
      j["char_poly_g"] = poly;
      std::cout << j.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walk-matrix arithmetic toolkit for generalized cospectral graphs"};
  app.require_subcommand(1);
  std::string format = "human";

  auto* analyze = app.add_subcommand("analyze", "classify graphs from graph6 input");
  std::string analyzePath = "-";
  analyze->add_option("--format", format, "human, json-lines or csv");
  analyze->add_option("file", analyzePath, "graph6 file, or - for stdin");

  auto* certify = app.add_subcommand("certify", "certify a generalized cospectral pair");
  std::string g6a, g6b;
  certify->add_option("--format", format, "human, json-lines or csv");
  certify->add_option("graph_a", g6a, "first graph (graph6)")->required();
  certify->add_option("graph_b", g6b, "second graph (graph6)")->required();

  auto* sweep = app.add_subcommand("sweep", "exhaustive bound verification at one order");
  std::size_t sweepOrder = 0;
  std::string shard;
  bool allowLong = false;
  std::vector<std::string> mergeFiles;
  sweep->add_option("--format", format, "human or json-lines");
  sweep->add_option("--order", sweepOrder, "graph order")->required();
  sweep->add_option("--shard", shard, "INDEX/TOTAL: emit this shard's class reps");
  sweep->add_option("--merge", mergeFiles, "shard files to merge into a full report");
  sweep->add_flag("--allow-long", allowLong, "permit order 7");

  auto* group = app.add_subcommand("group", "group graphs by generalized spectrum");
  std::size_t groupOrder = 0;
  std::string groupPath = "-";
  group->add_option("--format", format, "human or json-lines");
  group->add_option("--order", groupOrder, "enumerate all classes of this order");
  group->add_option("file", groupPath, "graph6 file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Format fmt = parseFormat(format);
    if (analyze->parsed()) return runAnalyze(analyzePath, fmt);
    if (certify->parsed()) return runCertify(g6a, g6b, fmt);
    if (sweep->parsed()) return runSweep(sweepOrder, shard, allowLong, mergeFiles, fmt);
    if (group->parsed()) return runGroup(groupOrder, groupPath, fmt);
    return kExitUsage;
  } catch (const ws::ParseError& e) {
    std::cerr << "walkspec: " << e.what() << "\n";
    return kExitParse;
  } catch (const ws::NotCospectralError& e) {
    std::cerr << "walkspec: " << e.what() << "\n";
    return kExitNotCospectral;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "walkspec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "walkspec: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
