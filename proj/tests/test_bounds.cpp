#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "delbound/bounds.hpp"
#include "delbound/codec.hpp"
#include "delbound/errors.hpp"
#include "naive.hpp"

using namespace delbound;

TEST_CASE("edge count upper bound") {
  CHECK(edge_count_upper(2, 1, 1, 0) == 6);
  CHECK(edge_count_upper(3, 4, 0, 0) == 81);
  CHECK(edge_count_upper(2, 2, 1, 1) == 64);
  for (int q : {2, 3})
    for (int l = 0; l <= 5; ++l)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
          const auto e = edge_count(q, l, a, b);
          CHECK(BigInt(e) <= edge_count_upper(q, l, a, b));
          CHECK(BigInt(e) >= parameter_count_closed(q, l, a, b));
        }
}

TEST_CASE("degree lower bound") {
  CHECK(degree_lower_bound(2, 12, 8, 2, 1, 1) == 1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& x : all_strings(2, n)) {
      const auto st = string_stats(x.symbols());
      for (int a = 0; a <= std::min(n, 2); ++a)
        for (int b = 0; a + b <= 2; ++b)
          CHECK(degree_lower_bound(2, n, st.runs, st.longest_alternating, a, b) <=
                channel_output_set(x, a, b).size());
    }
  // a constant string has one deletion output
  const QaryString zeros = QaryString::parse("000000", 2);
  CHECK(degree_lower_bound(2, 6, 1, 1, 1, 0) == 0);
  CHECK(channel_output_set(zeros, 1, 0).size() == 1);
}

TEST_CASE("alternating window bound") {
  CHECK(alternating_interval_bound(2, 6, 4) == 24);
  CHECK(alternating_interval_bound(3, 5, 3) == 162);
  for (int n = 2; n <= 9; ++n) CHECK(alternating_interval_bound(2, n, n) == 2);
  CHECK_THROWS_AS(alternating_interval_bound(2, 6, 1), DomainError);
  CHECK_THROWS_AS(alternating_interval_bound(2, 6, 7), DomainError);

  std::uint64_t count = 0;
  for (const auto& x : naive::all_words(2, 6)) count += naive::longest_alternating(x) >= 4;
  CHECK(count <= 24);
}

TEST_CASE("few runs bound") {
  CHECK(few_runs_bound(2, 10, 0.2) == doctest::Approx(1024 * std::exp(-0.72)));
  CHECK(few_runs_bound(2, 7, 0.0) == doctest::Approx(128));
  CHECK(few_runs_threshold(2, 10, 0.2) == 3);
  CHECK(few_runs_threshold(2, 5, 0.5) == 1);
  CHECK(runs_distribution(2, 10, 1) + runs_distribution(2, 10, 2) + runs_distribution(2, 10, 3) == 92);
}

TEST_CASE("code size bounds") {
  CHECK(generalized_code_bound(2, 10, 2, 0) == Rational(1024, 45));
  CHECK(levenshtein_bound(2, 10, 2) == Rational(1024, 45));
  CHECK(generalized_code_bound(2, 20, 2, 1) / levenshtein_bound(2, 20, 3) == Rational(2, 3));
  CHECK(insertion_code_bound(2, 10, 1) == Rational(1024, 5));
  CHECK(insertion_code_bound(3, 6, 0) == 729);
  CHECK_THROWS_AS(generalized_code_bound(2, 3, 2, 2), DomainError);
  for (int q : {2, 3, 5})
    for (int n = 1; n <= 12; ++n)
      for (int s = 0; s <= n; ++s)
        CHECK(insertion_code_bound(q, n, s) == Rational(ipow(q, s)) * generalized_code_bound(q, n, s, 0));
}

TEST_CASE("optimal b") {
  CHECK(optimal_b(2, 3) == 1);
  CHECK(optimal_b(2, 2) == 0);
  CHECK(optimal_b(2, 10) == 3);
  CHECK(optimal_b(4, 3) == 0);
  CHECK(improvement_factor(2, 3, 1) == Rational(3, 2));
  CHECK(improvement_factor(7, 5, 0) == 1);
  CHECK(improvement_factor(2, 10, 3) == 15);
  for (int q = 2; q <= 10; ++q)
    for (int s = 0; s <= 30; ++s) {
      Rational best = -1;
      for (int b = 0; b <= s; ++b) {
        const Rational v = Rational(ipow(q, b), binom(s, b));
        if (best < 0 || v < best) best = v;
      }
      const int b = optimal_b(q, s);
      CHECK(Rational(ipow(q, b), binom(s, b)) == best);
      if (b >= 1) CHECK(to_double(improvement_factor(q, s, b)) >= std::exp(b - 1) / std::sqrt(b) - 1e-9);
    }
}

TEST_CASE("typicality split") {
  const auto t = typicality_split(2, 10, 1, 0);
  CHECK(t.c_threshold == doctest::Approx(3 * std::log2(10.0)));
  CHECK(t.eps == doctest::Approx(std::sqrt(2 * std::log(10.0) / 18)));
  REQUIRE(t.sizes.has_value());
  CHECK(t.sizes->typical + t.sizes->long_alternating + t.sizes->few_runs >= 1024 - 0);
}

TEST_CASE("average degree") {
  const auto d = average_degree(2, 5, 0, 0);
  CHECK(d.exact == 1);
  std::uint64_t total = 0;
  for (const auto& x : naive::all_words(2, 6)) total += naive::channel(x, 1, 1, 2).size();
  CHECK(average_degree(2, 6, 1, 1).exact == Rational(total, 64));
  CHECK(average_degree(2, 6, 1, 1).asymptote == Rational(15 * 2, 2));
}

TEST_CASE("bound table writers") {
  const auto rows = bound_table({2}, {15}, {1});
  REQUIRE(rows.size() == 2);
  std::ostringstream csv;
  write_bounds_csv(csv, rows);
  CHECK(csv.str() ==
        "q,n,a,b,s,levenshtein,generalized,insertion_bound,best_b,improvement\n"
        "2,15,1,0,1,32768/15,32768/15,65536/15,0,1\n"
        "2,15,0,1,1,32768/15,65536/15,65536/15,0,1\n");

  std::ostringstream js;
  write_bounds_json(js, rows);
  const auto j = nlohmann::json::parse(js.str());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["levenshtein"]["num"] == "32768");
  CHECK(j[0]["levenshtein"]["den"] == "15");

  const auto r = bound_table({2}, {20}, {3});
  CHECK(r[0].best_b == 1);
  CHECK(r[1].generalized * Rational(3, 2) == r[0].generalized);
  CHECK(bound_table({4}, {30}, {3})[0].best_b == 0);
}
