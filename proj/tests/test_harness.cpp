#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motss/errors.hpp"
#include "motss/experiment.hpp"
#include "motss/instance_io.hpp"
#include "motss/random_instances.hpp"
#include "motss/serialize.hpp"
#include "support.hpp"

using namespace motss;

namespace {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MOTSS_TEST_DIR) / "fixtures" / name;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("instance files parse and round-trip") {
  const InputSequence seq = parse_instance_file(fixture("example1.txt").string());
  CHECK(seq.length() == 3);
  CHECK(seq.bounds().max_prices() == std::vector<double>{2, 2});
  CHECK(seq[0].values() == std::vector<double>{1, 2});

  std::ostringstream out;
  write_instance(seq, out);
  std::istringstream in(out.str());
  const InputSequence back = parse_instance(in);
  CHECK(back.length() == seq.length());
  for (int t = 0; t < seq.length(); ++t) CHECK(back[t] == seq[t]);

  // awkward but exactly representable values survive the trip
  const Bounds b = validate_bounds({0.1, 1e-7}, {3.0000000000000004, 9e20});
  const InputSequence tricky(b, {{0.30000000000000004, 123456.78901234567}});
  std::ostringstream buf;
  write_instance(tricky, buf);
  std::istringstream rein(buf.str());
  const InputSequence again = parse_instance(rein);
  CHECK(again[0].values() == tricky[0].values());
  CHECK(again.bounds().max_prices() == b.max_prices());
}

TEST_CASE("instance parsing rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("bounds 1,1\n"), ParseError);
  CHECK_THROWS_AS(parse("limits 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("bounds 1,1 2,2\n1,nan\n"), ParseError);
  CHECK_THROWS_AS(parse("bounds 1,1 inf,2\n"), ParseError);
  CHECK_THROWS_AS(parse("bounds 1,1 2,2\n1\n"), LengthMismatch);
  CHECK_THROWS_AS(parse("bounds 1,1 2,2\n1,2,1\n"), LengthMismatch);
  CHECK_THROWS_AS(parse("bounds 1,1 2,2\n3,1\n"), OutOfBounds);
  CHECK_THROWS_AS(parse("bounds 2,1 1,2\n"), InvertedInterval);
  CHECK_NOTHROW(parse("bounds 1,1 2,2\n1.5e0,2\n\n"));
}

TEST_CASE("random instances are seeded and respect bounds") {
  const Bounds b = validate_bounds({1, 2}, {9, 8});
  const auto a = generate_random_instances(b, 5, 20, 7);
  const auto c = generate_random_instances(b, 5, 20, 7);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].length() == c[i].length());
    CHECK(a[i].length() >= 1);
    CHECK(a[i].length() <= 5);
    for (int t = 0; t < a[i].length(); ++t) {
      CHECK(a[i][t] == c[i][t]);
      CHECK(b.contains(a[i][t].values()));
    }
  }
  const auto other = generate_random_instances(b, 5, 20, 8);
  bool any_difference = false;
  for (std::size_t i = 0; i < other.size() && !any_difference; ++i) {
    any_difference = other[i].length() != a[i].length() ||
                     other[i].prices() != a[i].prices();
  }
  CHECK(any_difference);

  const auto singletons = generate_random_instances(b, 1, 3, 1);
  for (const auto& s : singletons) CHECK(s.length() == 1);

  const Bounds degenerate = validate_bounds({2, 3}, {2, 3});
  for (const auto& s : generate_random_instances(degenerate, 3, 5, 2)) {
    for (int t = 0; t < s.length(); ++t) {
      CHECK(s[t] == PriceVector::min_of(degenerate));
    }
  }
}

TEST_CASE("zvalue mode emits the closed-form constant") {
  ExperimentConfig cfg;
  cfg.mode = "zvalue";
  cfg.scalarization = "gmean";
  cfg.bounds_min = {1, 1};
  cfg.bounds_max = {9, 4};
  std::ostringstream out, err;
  REQUIRE(run_experiment(cfg, out, err) == 0);
  const json doc = json::parse(out.str());
  CHECK(doc["result"]["z"]["value"].get<double>() ==
        doctest::Approx(2.449490).epsilon(1e-6));
  CHECK(doc["result"]["z"]["method"]["type"] == "closed_form");
}

TEST_CASE("simulate mode reports accept-first on the first revealed price") {
  ExperimentConfig cfg;
  cfg.mode = "simulate";
  cfg.scalarization = "max";
  cfg.policy = "accept-first";
  cfg.instance_path = fixture("example1.txt").string();
  std::ostringstream out, err;
  REQUIRE(run_experiment(cfg, out, err) == 0);
  CHECK(out.str().find("accepted,1,1,2") != std::string::npos);
}

TEST_CASE("ratio mode reproduces the non-maximal acceptance example") {
  ExperimentConfig cfg;
  cfg.mode = "ratio";
  cfg.scalarization = "max";
  cfg.policy = "accept-first";
  cfg.instance_path = fixture("example2.txt").string();
  std::ostringstream out, err;
  REQUIRE(run_experiment(cfg, out, err) == 0);
  const json doc = json::parse(out.str());
  CHECK(doc["result"]["report"]["value"].get<double>() == 2.0);
  CHECK(doc["result"]["report"]["witness"] == json::array({1.0, 2.0}));
}

TEST_CASE("verify mode over budget fails with a machine-readable error") {
  ExperimentConfig cfg;
  cfg.mode = "verify";
  cfg.scalarization = "max";
  cfg.bounds_min = {1, 1};
  cfg.bounds_max = {9, 4};
  cfg.grid_counts = {3, 3};
  cfg.horizon = 3;
  cfg.budget = 10;
  std::ostringstream out, err;
  CHECK(run_experiment(cfg, out, err) == 1);
  const json doc = json::parse(out.str());
  CHECK(doc["error"]["type"] == "budget_exceeded");
}

TEST_CASE("verify mode matches BPP to the minimax value") {
  ExperimentConfig cfg;
  cfg.mode = "verify";
  cfg.scalarization = "max";
  cfg.bounds_min = {1, 1};
  cfg.bounds_max = {9, 4};
  cfg.grid_counts = {3, 3};
  cfg.horizon = 2;
  std::ostringstream out, err;
  REQUIRE(run_experiment(cfg, out, err) == 0);
  const json doc = json::parse(out.str());
  CHECK(doc["result"]["difference"].get<double>() <= 1e-12);
  CHECK(doc["result"]["minimax"]["instance_space_size"].get<int>() == 90);
}

TEST_CASE("summaries are byte-identical apart from the timestamp field") {
  ExperimentConfig cfg;
  cfg.mode = "sweep";
  cfg.scalarization = "amean";
  cfg.sweep_steps = 3;
  cfg.count = 5;
  cfg.horizon = 4;
  cfg.resolution = 64;
  cfg.seed = 11;
  cfg.out_path = temp_file("motss_sweep_a.json").string();
  std::ostringstream out1, err1;
  REQUIRE(run_experiment(cfg, out1, err1) == 0);
  cfg.out_path = temp_file("motss_sweep_b.json").string();
  std::ostringstream out2, err2;
  REQUIRE(run_experiment(cfg, out2, err2) == 0);

  CHECK(out1.str() == out2.str());  // the CSV table itself

  std::ifstream a(temp_file("motss_sweep_a.json"));
  std::ifstream b(temp_file("motss_sweep_b.json"));
  json ja = json::parse(a);
  json jb = json::parse(b);
  ja["meta"].erase("timestamp");
  jb["meta"].erase("timestamp");
  CHECK(ja.dump() == jb.dump());

  // CSV detail landed next to the summary
  std::ifstream csv(temp_file("motss_sweep_a.csv"));
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "phi_1,phi_2,z_closed,z_numeric,empirical_worst_cr,instances");
}

TEST_CASE("adversary mode realizes the two-branch game") {
  ExperimentConfig cfg;
  cfg.mode = "adversary";
  cfg.scalarization = "min";
  cfg.bounds_min = {1, 1};
  cfg.bounds_max = {9, 4};
  cfg.policy = "reject-all";
  std::ostringstream out, err;
  REQUIRE(run_experiment(cfg, out, err) == 0);
  const json doc = json::parse(out.str());
  CHECK(doc["result"]["play"]["realized_instance"].size() == 1);
  CHECK(doc["result"]["play"]["report"]["value"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("unknown configuration is a config error, not a crash") {
  ExperimentConfig cfg;
  cfg.mode = "zvalue";
  cfg.scalarization = "median";
  cfg.bounds_min = {1};
  cfg.bounds_max = {4};
  std::ostringstream out, err;
  CHECK(run_experiment(cfg, out, err) == 1);
  CHECK(json::parse(out.str())["error"]["type"] == "config_error");
}
