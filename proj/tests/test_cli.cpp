#include "qdp/cli.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace qdp;

namespace {

RunConfig make_config(std::initializer_list<std::pair<const char*, const char*>> entries) {
  RunConfig config;
  for (const auto& [key, value] : entries) config.set(key, value);
  return config;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Drops the timestamp line so two manifests can be compared byte-wise.
std::string without_timestamp(const std::string& text) {
  std::string out;
  for (const std::string& line : lines_of(text))
    if (line.find("generated_at") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("config round-trip and hash stability") {
  RunConfig config = make_config(
      {{"subcommand", "solve-qdp"}, {"field", "3"}, {"n", "100"}, {"omega", "0.05"}});
  const RunConfig reparsed = parse_config_text(serialize_config(config));
  CHECK(reparsed.values == config.values);
  CHECK(config_hash(reparsed) == config_hash(config));
  CHECK(config_hash(config).size() == 16);

  RunConfig tweaked = config;
  tweaked.set("omega", "0.06");
  CHECK(config_hash(tweaked) != config_hash(config));

  const RunConfig parsed = parse_config_text("# comment\n\n  n = 12 \nfield=2^2\n");
  CHECK(parsed.get("n", "") == "12");
  CHECK(parsed.get("field", "") == "2^2");
  CHECK(parsed.get_int("n", 0) == 12);
  CHECK_THROWS_AS(parse_config_text("no equals sign"), std::invalid_argument);
  CHECK_THROWS_AS(parsed.get_double("field", 0), std::invalid_argument);
  CHECK_THROWS_AS(load_config_file("/nonexistent/config"), std::invalid_argument);
}

TEST_CASE("threshold table values and schema") {
  const RunConfig config = make_config(
      {{"subcommand", "thresholds"}, {"field", "2"}, {"rate_min", "0.25"},
       {"rate_max", "0.75"}, {"points", "3"}});
  std::ostringstream out;
  CHECK(cmd_thresholds(config, out) == 0);
  const std::vector<std::string> lines = lines_of(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "# config " + config_hash(config));
  CHECK(lines[1] == "q,rate,easy_bound,classical_bound,tractable_bound");
  unsigned q = 0;
  double rate = 0, easy = 0, classical = 0, tractable = 0;
  REQUIRE(std::sscanf(lines[3].c_str(), "%u,%lf,%lf,%lf,%lf", &q, &rate, &easy, &classical,
                      &tractable) == 5);
  CHECK(q == 2);
  CHECK(rate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(easy == doctest::Approx(0.0670).epsilon(5e-3));
  CHECK(classical == doctest::Approx(0.1100).epsilon(5e-3));
  CHECK(tractable == doctest::Approx(0.1871).epsilon(5e-3));

  // High-rate limit: all three bounds collapse toward zero.
  const RunConfig high = make_config({{"subcommand", "thresholds"}, {"field", "2"},
                                      {"rate_min", "0.99"}, {"rate_max", "0.999"},
                                      {"points", "2"}, {"format", "json"}});
  std::ostringstream jout;
  CHECK(cmd_thresholds(high, jout) == 0);
  const auto parsed = nlohmann::json::parse(jout.str());
  CHECK(parsed["config"] == config_hash(high));
  for (const auto& row : parsed["rows"]) {
    CHECK(row["easy_bound"].get<double>() <= 0.01);
    CHECK(row["classical_bound"].get<double>() <= 0.01);
    CHECK(row["tractable_bound"].get<double>() <= 0.01);
  }

  std::ostringstream sink;
  CHECK_THROWS_AS(
      cmd_thresholds(make_config({{"field", "2"}, {"points", "1"}}), sink),
      std::invalid_argument);
  CHECK_THROWS_AS(
      cmd_thresholds(make_config({{"field", "2"}, {"rate_min", "0.9"}, {"rate_max", "0.1"}}),
                     sink),
      std::invalid_argument);
}

TEST_CASE("decoder command is deterministic and worker-independent") {
  const RunConfig config = make_config(
      {{"subcommand", "solve-qdp"}, {"field", "2"}, {"n", "60"}, {"k", "20"},
       {"omega", "0.05"}, {"trials", "20"}, {"seed", "7"}});
  std::ostringstream rec1, man1, rec2, man2;
  CHECK(cmd_solve_qdp(config, rec1, man1) == 0);
  CHECK(cmd_solve_qdp(config, rec2, man2) == 0);
  CHECK(rec1.str() == rec2.str());
  CHECK(without_timestamp(man1.str()) == without_timestamp(man2.str()));
  CHECK(rec1.str().find(config_hash(config)) != std::string::npos);

  RunConfig parallel = config;
  parallel.set("workers", "3");
  std::ostringstream rec3, man3;
  CHECK(cmd_solve_qdp(parallel, rec3, man3) == 0);
  // Same records modulo the embedded hash line (the workers key hashes in).
  const auto body = [](const std::string& text) {
    const std::vector<std::string> lines = lines_of(text);
    std::string rest;
    for (std::size_t i = 1; i < lines.size(); ++i) rest += lines[i] + "\n";
    return rest;
  };
  CHECK(body(rec3.str()) == body(rec1.str()));

  const auto manifest = nlohmann::json::parse(man1.str());
  CHECK(manifest["trials"] == 20);
  CHECK(manifest["recovered"].get<int>() + manifest["wrong_codeword"].get<int>() +
            manifest["abstain"].get<int>() ==
        20);
  CHECK(manifest["configuration"]["omega"] == "0.05");
}

TEST_CASE("noiseless channel solves every trial") {
  const RunConfig config = make_config(
      {{"subcommand", "solve-qdp"}, {"field", "3"}, {"n", "30"}, {"k", "10"},
       {"omega", "0"}, {"trials", "10"}, {"seed", "2"}, {"format", "csv"}});
  std::ostringstream rec, man;
  CHECK(cmd_solve_qdp(config, rec, man) == 0);
  const std::vector<std::string> lines = lines_of(rec.str());
  REQUIRE(lines.size() == 12);
  CHECK(lines[1] == "trial,outcome,revealed_count,rank_ok,success");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    CHECK(lines[i].find("Recovered") != std::string::npos);
    CHECK(lines[i].back() == '1');
  }
  CHECK(nlohmann::json::parse(man.str())["success_rate"] == 1.0);
}

TEST_CASE("phase readout mode") {
  const RunConfig good = make_config(
      {{"subcommand", "solve-qdp"}, {"field", "2"}, {"n", "80"}, {"k", "20"},
       {"omega", "0.1"}, {"theta", "1.5707963267948966"}, {"trials", "10"}, {"seed", "4"}});
  std::ostringstream rec, man;
  CHECK(cmd_solve_qdp(good, rec, man) == 0);
  // Orthogonal phases: every coordinate reads out, so every trial recovers.
  CHECK(nlohmann::json::parse(man.str())["recovered"] == 10);

  const RunConfig blocked = make_config(
      {{"subcommand", "solve-qdp"}, {"field", "2"}, {"n", "40"}, {"k", "10"},
       {"omega", "0.5"}, {"theta", "0"}, {"trials", "5"}, {"seed", "4"}});
  std::ostringstream rec2, man2;
  CHECK(cmd_solve_qdp(blocked, rec2, man2) == 0);
  CHECK(nlohmann::json::parse(man2.str())["abstain"] == 5);

  std::ostringstream sink, sink2;
  const RunConfig ternary = make_config(
      {{"field", "3"}, {"n", "20"}, {"k", "5"}, {"omega", "0.1"}, {"theta", "0.3"}});
  CHECK_THROWS_AS(cmd_solve_qdp(ternary, sink, sink2), std::invalid_argument);
}

TEST_CASE("reduction command over both variants") {
  const RunConfig config = make_config(
      {{"subcommand", "reduce"}, {"field", "2"}, {"n", "100"}, {"k", "50"},
       {"omega", "0.3"}, {"trials", "15"}, {"seed", "3"}});
  std::ostringstream rec, man;
  CHECK(cmd_reduce(config, rec, man) == 0);
  const std::vector<std::string> lines = lines_of(rec.str());
  REQUIRE(lines.size() == 16);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = nlohmann::json::parse(lines[i]);
    const std::string outcome = row["outcome"];
    CHECK((outcome == "Codeword" || outcome == "Zero"));
    CHECK(row["j_size"].get<int>() >= 55);
    CHECK(row["j_size"].get<int>() <= 60);
  }
  const auto manifest = nlohmann::json::parse(man.str());
  CHECK(manifest["codewords"].get<int>() + manifest["zeros"].get<int>() == 15);
  CHECK(manifest["short_codeword_bound"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));

  RunConfig counter = config;
  counter.set("variant", "counterexample");
  counter.set("n", "12");
  counter.set("k", "6");
  std::ostringstream rec2, man2;
  CHECK(cmd_reduce(counter, rec2, man2) == 0);
  const std::vector<std::string> lines2 = lines_of(rec2.str());
  REQUIRE(lines2.size() == 2);
  const auto row = nlohmann::json::parse(lines2[1]);
  CHECK(row["outcome"] == "Bottom");
  CHECK(row["branch_prob"].get<double>() >= 0.0);
  CHECK(row["branch_prob"].get<double>() <= 1.0);

  RunConfig bad = config;
  bad.set("variant", "mystery");
  std::ostringstream sink, sink2;
  CHECK_THROWS_AS(cmd_reduce(bad, sink, sink2), std::invalid_argument);
}

TEST_CASE("paired search command") {
  const RunConfig config = make_config(
      {{"subcommand", "prange"}, {"field", "2"}, {"n", "60"}, {"k", "30"},
       {"omega", "0.3"}, {"trials", "10"}, {"seed", "5"}});
  std::ostringstream out;
  CHECK(cmd_prange(config, out) == 0);
  const auto parsed = nlohmann::json::parse(out.str());
  CHECK(parsed["trials"] == 10);
  CHECK(parsed["target_weight"] == 15);
  CHECK(parsed["prange_hits"].get<int>() <= 10);
  for (const auto& pair : parsed["prange_hist"]) CHECK(pair[0].get<int>() == 15);

  RunConfig csv = config;
  csv.set("format", "csv");
  std::ostringstream cout_;
  CHECK(cmd_prange(csv, cout_) == 0);
  CHECK(lines_of(cout_.str())[1] == "weight,prange_count,usd_count");
}

TEST_CASE("spectrum command reproduces the repetition-code value") {
  const RunConfig config = make_config(
      {{"subcommand", "pgm"}, {"field", "2"}, {"n", "3"}, {"k", "1"},
       {"omega", "0.1"}, {"code", "repetition"}});
  std::ostringstream out;
  CHECK(cmd_pgm(config, out) == 0);
  const auto parsed = nlohmann::json::parse(out.str());
  CHECK(parsed["p_pgm"].get<double>() == doctest::Approx(0.98819).epsilon(1e-4));
  REQUIRE(parsed["norms"].size() == 2);  // one coset norm per message-space syndrome
  double sum_sq = 0;
  for (const auto& v : parsed["norms"]) sum_sq += v.get<double>() * v.get<double>();
  CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-12));

  RunConfig with_dist = config;
  with_dist.set("distribution", "plain");
  with_dist.set("format", "csv");
  std::ostringstream cout_;
  CHECK(cmd_pgm(with_dist, cout_) == 0);
  const std::vector<std::string> lines = lines_of(cout_.str());
  REQUIRE(lines.size() == 6);  // comment, header, t = 0..3
  CHECK(lines[1] == "t,p");
  double total = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    int t = 0;
    double p = 0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%d,%lf", &t, &p) == 2);
    total += p;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

  std::ostringstream sink;
  const RunConfig huge = make_config(
      {{"field", "2"}, {"n", "50"}, {"k", "30"}, {"omega", "0.1"}});
  CHECK_THROWS_AS(cmd_pgm(huge, sink), BudgetExceeded);
  const RunConfig bad_rep = make_config(
      {{"field", "2"}, {"n", "6"}, {"k", "2"}, {"omega", "0.1"}, {"code", "repetition"}});
  CHECK_THROWS_AS(cmd_pgm(bad_rep, sink), std::invalid_argument);
}

TEST_CASE("sweep command emits the success curve") {
  const RunConfig config = make_config(
      {{"subcommand", "sweep"}, {"field", "2"}, {"n", "16"}, {"k", "8"},
       {"omega_min", "0.05"}, {"omega_max", "0.3"}, {"points", "3"},
       {"trials", "50"}, {"seed", "2"}});
  std::ostringstream out;
  CHECK(cmd_sweep(config, out) == 0);
  const std::vector<std::string> lines = lines_of(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[1] == "omega,trials,successes,p_pgm,easy_bound,tractable_bound");
  double prev = 2;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    double omega = 0, p_pgm = 0, easy = 0, tractable = 0;
    int trials = 0, successes = 0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%d,%d,%lf,%lf,%lf", &omega, &trials, &successes,
                        &p_pgm, &easy, &tractable) == 6);
    CHECK(trials == 50);
    CHECK(p_pgm <= prev + 1e-9);
    prev = p_pgm;
  }

  std::ostringstream sink;
  const RunConfig bad = make_config(
      {{"field", "2"}, {"n", "16"}, {"k", "8"}, {"omega_min", "0.4"}, {"omega_max", "0.2"}});
  CHECK_THROWS_AS(cmd_sweep(bad, sink), std::invalid_argument);
}

TEST_CASE("oracle battery holds") {
  std::ostringstream out;
  CHECK(cmd_verify(out) == 0);
  CHECK(out.str().find("10/10 properties hold") != std::string::npos);
  CHECK(out.str().find("[FAIL]") == std::string::npos);
}

TEST_CASE("dispatcher maps errors to exit codes") {
  RunConfig unknown = make_config({{"subcommand", "frobnicate"}});
  CHECK(run_cli(unknown) == 1);

  const RunConfig huge = make_config(
      {{"subcommand", "pgm"}, {"field", "2"}, {"n", "50"}, {"k", "30"}, {"omega", "0.1"}});
  CHECK(run_cli(huge) == 2);

  const RunConfig missing = make_config({{"subcommand", "solve-qdp"}, {"field", "2"}});
  CHECK(run_cli(missing) == 1);
}
