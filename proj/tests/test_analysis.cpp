#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "surfsub/analysis.hpp"

using namespace surfsub;

TEST_CASE("named words") {
  auto d = analyze("ababaBB", 2);
  REQUIRE(d.criterion("D"));
  CHECK(d.criterion("D")->fired);
  CHECK(d.certified);
  CHECK(d.one_ended == true);

  auto baumslag = analyze("AABAbaBab", 2);
  for (auto const& c : baumslag.criteria) {
    CHECK_FALSE(c.fired);
  }
  CHECK_FALSE(baumslag.certified);
  CHECK_FALSE(baumslag.notes.empty());

  auto bs = analyze("Ba^2ba^3", 2);
  CHECK_FALSE(bs.criterion("D")->fired);
  CHECK_FALSE(bs.criterion("E")->fired);
  CHECK_FALSE(bs.criterion("C16")->fired);
  CHECK(bs.criterion("BS")->fired);
  CHECK(bs.certified);
  // The same pattern under a <-> A and rotation.
  CHECK(analyze("bA^2BA^3", 2).criterion("BS")->fired);

  auto comm = analyze("abAB", 2);
  CHECK(comm.commutator);
  CHECK(comm.betti2_double == 1);
  CHECK(comm.certified);

  auto pp = analyze("abab", 2);
  CHECK(pp.proper_power);
  CHECK(pp.power_exponent == 2);
  CHECK(pp.one_ended == false);
  CHECK_FALSE(pp.certified);

  CHECK_THROWS_AS(analyze("abc", 2), std::invalid_argument);
  CHECK_THROWS_AS(analyze("", 2), std::invalid_argument);
}

TEST_CASE("rank three and fixed maps") {
  auto r = analyze("abAcBC", 3);
  CHECK(r.rank == 3);
  CHECK(r.criterion("E") != nullptr);
  CHECK_FALSE(r.criterion("E")->applicable);
  AnalyzeOptions opt;
  opt.phi = std::vector<long long>{0, 1};
  auto fixed = analyze("ababaBB", 2, opt);
  CHECK(fixed.criterion("D")->fired);
}

TEST_CASE("JSON round trip") {
  for (auto const* w : {"ababaBB", "AABAbaBab", "Ba^2ba^3", "abAB", "abab", "aab", "abAcBC"}) {
    std::size_t rank = std::string_view(w).find_first_of("cC") == std::string_view::npos ? 2 : 3;
    auto        r    = analyze(w, rank);
    auto        j    = to_json(r);
    auto        back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);
    CHECK(to_json(back) == j);
    CHECK_FALSE(to_text(r).empty());
  }
  for (int i = 0; i < 40; ++i) {
    auto w = oracle::random_cyclic_word(2, 2 + i % 12);
    auto r = analyze(to_string(w), 2);
    CHECK(report_from_json(to_json(r)) == r);
  }
}

TEST_CASE("census") {
  CHECK(census(2, 0).rows.empty());
  auto tiny = census(2, 2);
  CHECK(tiny.rows.size() == 3);
  auto one = census(2, 8, 1);
  auto many = census(2, 8, 4);
  REQUIRE(one.rows.size() == many.rows.size());
  CHECK(to_csv(one) == to_csv(many));
  std::size_t certified = 0;
  for (auto const& row : one.rows) {
    certified += row.certified;
    if (row.proper_power) {
      CHECK_FALSE(row.crit_c16);
    }
  }
  CHECK(certified == one.count_certified);
  CHECK(to_csv(tiny).rfind("word,len,proper_power,commutator,one_ended,crit_D,crit_E,crit_C16,crit_BS,certified", 0) == 0);
  CHECK_THROWS_AS(census(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(census(2, census_max_length + 1), std::invalid_argument);
}

TEST_CASE("cover experiments") {
  auto comm = cover_experiment("abAB", 2, "cyclic:1");
  CHECK(comm.betti1 == 2);
  CHECK(comm.betti2 == 1);
  CHECK(comm.identity_holds);
  CHECK(cover_experiment("ab", 2, "cyclic:1").betti2 == 0);
  auto d = cover_experiment("ababaBB", 2, "cyclic:3");
  CHECK(d.betti1 == 3);
  REQUIRE(d.alexander_prediction);
  CHECK(*d.alexander_prediction == 3);
  auto perm = cover_experiment("abAB", 2, "perm:(1 2);(1 2)");
  CHECK(perm.index == 2);
  CHECK(perm.identity_holds);
  CHECK_THROWS_AS(cover_experiment("ab", 2, "cyclic:0"), std::invalid_argument);
  CHECK_THROWS_AS(cover_experiment("ab", 2, "perm:(1 2);(3 4)"), std::invalid_argument);
  CHECK_THROWS_AS(cover_experiment("ab", 2, "nonsense"), std::invalid_argument);
  auto j = to_json(d);
  CHECK(j["betti1"] == 3);
}
