#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "walkspec/graph/graph6.hpp"

#ifndef WALKSPEC_CLI_PATH
#error "WALKSPEC_CLI_PATH must point at the built binary"
#endif

using nlohmann::json;

namespace {

struct RunResult {
  int exitCode = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WALKSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exitCode = WEXITSTATUS(status);
  return r;
}

// graph6 bytes are in [63, 126]: never a single quote, so this is always safe
std::string shellQuote(const std::string& s) { return "'" + s + "'"; }

std::string writeTemp(const std::string& name, const std::string& content) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/walkspec_cli_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<json> jsonLines(const std::string& text) {
  std::vector<json> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (!line.empty()) records.push_back(json::parse(line));
    pos = nl + 1;
  }
  return records;
}

const std::string kG6G = "HCZJ}z{";
const std::string kG6H = "HCZNfj|";

}  // namespace

TEST_CASE("analyze") {
  SECTION("json-lines fields for a known graph") {
    std::string in = writeTemp("analyze_ok.g6", kG6G + "\n");
    auto r = run("analyze --format json-lines " + in);
    CHECK(r.exitCode == 0);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 1);
    const json& j = records[0];
    CHECK(j.at("schema") == "walkspec/1");
    CHECK(j.at("record") == "analyze");
    CHECK(j.at("order") == 9);
    CHECK(j.at("det_w") == "-1936");
    CHECK(j.at("controllable") == true);
    CHECK(j.at("in_hn") == true);
    CHECK(j.at("in_fn") == true);
    CHECK(j.at("k") == 1);
    CHECK(j.at("mate_bound") == "1");
    REQUIRE(j.at("per_prime_ranks").size() == 1);
    CHECK(j.at("per_prime_ranks")[0].at("prime") == "11");
    CHECK(j.at("per_prime_ranks")[0].at("rank_w") == 8);
  }

  SECTION("human output uses the multiplicative factorization style") {
    std::string in = writeTemp("analyze_human.g6", kG6G + "\n");
    auto r = run("analyze --format human " + in);
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("-1936 = (-1) × 2^4 × 11^2") != std::string::npos);
    CHECK(r.output.find("in Hn") != std::string::npos);
  }

  SECTION("malformed line: error record and exit code 2") {
    std::string in = writeTemp("analyze_bad.g6", kG6G + "\n!!notgraph6\n");
    auto r = run("analyze --format json-lines " + in);
    CHECK(r.exitCode == 2);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 2);
    CHECK_FALSE(records[0].contains("error"));
    CHECK(records[1].contains("error"));
    CHECK(records[1].contains("error_offset"));
  }
}

TEST_CASE("certify exit codes") {
  SECTION("genuine mate pair: 0, with a full json certificate") {
    auto r = run("certify --format json-lines " + shellQuote(kG6G) + " " + shellQuote(kG6H));
    CHECK(r.exitCode == 0);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 1);
    const json& j = records[0];
    CHECK(j.at("schema") == "walkspec/1");
    CHECK(j.at("record") == "gcm-certificate");
    CHECK(j.at("level") == "11");
    CHECK(j.at("is_permutation") == false);
    CHECK(j.at("is_primitive") == true);
  }

  SECTION("not cospectral: 3") {
    // triangle vs one edge plus an isolated vertex
    auto r = run("certify Bw BG");
    CHECK(r.exitCode == 3);
  }

  SECTION("isomorphic pair: 4") {
    walkspec::graph::Graph g = walkspec::graph::parseGraph6(kG6G);
    std::vector<std::size_t> perm{3, 1, 4, 0, 8, 2, 6, 5, 7};
    std::string relabelled = walkspec::graph::encodeGraph6(g.relabel(perm));
    auto r = run("certify " + shellQuote(kG6G) + " " + shellQuote(relabelled));
    CHECK(r.exitCode == 4);
  }

  SECTION("singular walk matrix: internal error 5") {
    auto r = run("certify Bw Bw");
    CHECK(r.exitCode == 5);
  }
}

TEST_CASE("sweep") {
  SECTION("order 4 report") {
    auto r = run("sweep --order 4 --format json-lines");
    CHECK(r.exitCode == 0);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 1);
    const json& j = records[0];
    CHECK(j.at("record") == "sweep-report");
    CHECK(j.at("class_count") == 11);
    CHECK(j.at("fn_count") == 0);
    CHECK(j.at("violations").empty());
  }

  SECTION("guardrail: order 7 needs --allow-long, 8 is refused") {
    CHECK(run("sweep --order 7").exitCode == 1);
    CHECK(run("sweep --order 8 --allow-long").exitCode == 1);
  }

  SECTION("four-way sharded run merges to the unsharded report") {
    auto whole = run("sweep --order 5 --format json-lines");
    REQUIRE(whole.exitCode == 0);

    std::vector<std::string> shardFiles;
    for (int i = 0; i < 4; ++i) {
      auto shard = run("sweep --order 5 --shard " + std::to_string(i) + "/4");
      REQUIRE(shard.exitCode == 0);
      json j = json::parse(shard.output);
      CHECK(j.at("record") == "sweep-shard");
      CHECK(j.at("shard").at("index") == i);
      shardFiles.push_back(writeTemp("shard5_" + std::to_string(i) + ".json", shard.output));
    }
    std::string mergeArgs;
    for (const auto& f : shardFiles) mergeArgs += " --merge " + f;
    auto merged = run("sweep --order 5 --format json-lines" + mergeArgs);
    REQUIRE(merged.exitCode == 0);

    json a = json::parse(whole.output);
    json b = json::parse(merged.output);
    CHECK(a.at("class_count") == b.at("class_count"));
    CHECK(a.at("group_size_histogram") == b.at("group_size_histogram"));
    CHECK(a.at("fn_count") == b.at("fn_count"));
    CHECK(b.at("class_count") == 34);
  }
}

TEST_CASE("group") {
  SECTION("stdin corpus with a genuine mate pair") {
    std::string in = writeTemp("group_pair.g6", kG6G + "\n" + kG6H + "\n");
    auto r = run("group --format json-lines " + in);
    CHECK(r.exitCode == 0);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 1);
    CHECK(records[0].at("record") == "mate-group");
    CHECK(records[0].at("members").size() == 2);
  }

  SECTION("order 3 gives four singleton groups") {
    auto r = run("group --order 3 --format json-lines");
    CHECK(r.exitCode == 0);
    auto records = jsonLines(r.output);
    REQUIRE(records.size() == 4);
    for (const auto& j : records) CHECK(j.at("members").size() == 1);
  }
}

TEST_CASE("usage errors") {
  CHECK(run("frobnicate").exitCode == 1);
  CHECK(run("analyze --format yaml /dev/null").exitCode == 1);
  CHECK(run("certify Ch").exitCode == 1);
}
