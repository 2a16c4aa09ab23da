#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "shortcut_forge/bench.hpp"

using namespace sforge;

namespace {

BenchConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_bench_config(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

std::string csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  write_csv_header(out);
  for (const BenchRow& r : rows) write_csv_row(out, r);
  return out.str();
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("a single cell produces one verified row") {
    const BenchConfig config = parse("algorithm=folklore\nfamily=random_dag\nn=64\np=0.05\nD=4\nseed=1\ntiming=off\n");
    const auto rows = run_bench(config, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].verified);
    CHECK(rows[0].error.empty());
    CHECK_FALSE(rows[0].wall_ms);
    CHECK(rows[0].h_by_provenance.rfind("baseline=", 0) == 0);
  }

  TEST_CASE("grid expansion and seed ranges") {
    const BenchConfig config = parse("# two diameters, three seeds\nalgorithms=folklore\nfamily=random_dag\nn=27\np=0.1\nD=3,5\nseeds=4..6\n");
    CHECK(config.seeds == std::vector<std::uint64_t>{4, 5, 6});
    const auto rows = expand_grid(config);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].diameter == 3);
    CHECK(rows[0].seed == 4);
    CHECK(rows[2].seed == 6);
    CHECK(rows[3].diameter == 5);
  }

  TEST_CASE("hopset grid defaults eps to 1/4") {
    const BenchConfig config = parse("algorithms=hopset_small\nfamily=weighted_random\nn=32\np=0.1\nW=5\nbeta=2\nseeds=1\n");
    REQUIRE(config.epsilons.size() == 1);
    CHECK(config.epsilons[0].str() == "1/4");
    const auto rows = expand_grid(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].beta == 2);
    CHECK(rows[0].max_weight == 5);
  }

  TEST_CASE("config errors carry line numbers") {
    CHECK(error_line("algorithms=folklore\nbogus=1\n") == 2);
    CHECK(error_line("algorithms=folklore\nalgorithms=large_d\n") == 2);
    CHECK(error_line("algorithms=folklore\nfamily=random_dag\nn=10\np=0.1\ndensity=2\nD=3\nseeds=1\n") == 5);
    CHECK(error_line("algorithms=nope\n") == 1);
    CHECK(error_line("seeds=9..3\n") == 1);
    CHECK(error_line("n=abc\n") == 1);
    CHECK_THROWS_AS(parse("algorithms=folklore\nfamily=random_dag\nn=10\np=0.1\nseeds=1\n"), ConfigError);
    CHECK_THROWS_AS(parse("algorithms=hopset_small\nfamily=random_dag\nn=10\np=0.1\nseeds=1\n"), ConfigError);
  }

  TEST_CASE("rejected parameters become an error row") {
    const BenchConfig config = parse("algorithms=small_diam\nfamily=random_dag\nn=64\np=0.05\nD=9\nseeds=1\ntiming=off\n");
    const auto rows = run_bench(config, 1);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].verified);
    CHECK_FALSE(rows[0].error.empty());
  }

  TEST_CASE("rows do not depend on the thread count") {
    const BenchConfig config = parse(
        "algorithms=folklore,small_diam,hopset_small,hopset_large\nfamily=random_dag\nn=64\ndensity=2\nW=1,4\nD=4\nbeta=12\n"
        "seeds=1..3\ntiming=off\n");
    const std::string one = csv(run_bench(config, 1));
    CHECK(one == csv(run_bench(config, 3)));
  }

  TEST_CASE("csv header") {
    std::ostringstream out;
    write_csv_header(out);
    CHECK(out.str() ==
          "algorithm,family,n,p,W,D,beta,eps,c,seed,graph_edges,h_size,h_by_provenance,achieved_diameter,"
          "achieved_hops,achieved_stretch,verified,wall_ms,error\n");
  }

  TEST_CASE("verification budgets") {
    BenchRow row;
    row.algorithm = Algorithm::large_d;
    row.diameter = 10;
    CHECK(verification_budget(row) == 40);
    row.algorithm = Algorithm::small_diam;
    CHECK(verification_budget(row) == 10);
    row.algorithm = Algorithm::hopset_small;
    row.beta = 3;
    CHECK(verification_budget(row) == 3);
    row.algorithm = Algorithm::hopset_large;
    CHECK(verification_budget(row) == 12);
  }
}
