#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "delbound/bounds.hpp"
#include "delbound/errors.hpp"
#include "delbound/independent_set.hpp"
#include "delbound/oracle.hpp"
#include "naive.hpp"

using namespace delbound;

namespace {
// Exponential subset search; fine up to ~20 vertices.
std::size_t brute_independence(const BitMatrix& m) {
  const std::size_t n = m.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = i + 1; ok && j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && m.test(i, j)) ok = false;
    if (ok) best = k;
  }
  return best;
}
}  // namespace

TEST_CASE("maximum independent set against subset search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    BitMatrix m(n);
    const unsigned density = rng() % 100;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 100 < density) {
          m.set(i, j);
          m.set(j, i);
        }
    const auto r = maximum_independent_set(m);
    CHECK(r.optimal);
    CHECK(r.vertices.size() == brute_independence(m));
    for (auto u : r.vertices)
      for (auto v : r.vertices) CHECK_FALSE(m.test(u, v));
  }
}

TEST_CASE("exact maximum codes") {
  const auto c4 = max_code_exact(build_conflict_graph(2, 4, 1));
  CHECK(c4.codewords.size() == 4);
  CHECK(c4.verified);
  CHECK(c4.optimal);
  CHECK(max_code_exact(build_conflict_graph(2, 4, 1)).codewords.size() ==
        brute_independence(build_conflict_graph(2, 4, 1).conflicts));
  CHECK(max_code_exact(build_conflict_graph(2, 5, 0)).codewords.size() == 32);
  CHECK(max_code_exact(build_conflict_graph(3, 3, 0)).codewords.size() == 27);
  for (int n = 1; n <= 4; ++n) CHECK(max_code_exact(build_conflict_graph(2, n, n)).codewords.size() == 1);

  // The same code sizes arise for any split of s into deletions and insertions.
  for (int n = 2; n <= 5; ++n) {
    const auto d = max_code_exact(build_conflict_graph(2, n, 1)).codewords.size();
    CHECK(max_code_exact(build_conflict_graph(2, n, 0, 1, {})).codewords.size() == d);
  }
}

TEST_CASE("empty conflict graph at zero errors") {
  const auto g = build_conflict_graph(2, 4, 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j) CHECK_FALSE(g.conflicts.test(i, j));
}

TEST_CASE("vt codes") {
  const auto v = vt_code(4, 0);
  std::vector<QaryString> want;
  for (auto t : {"0000", "0110", "1001", "1111"}) want.push_back(QaryString::parse(t, 2));
  CHECK(v.codewords == want);
  CHECK(v.verified);
  const std::size_t sizes[] = {0, 0, 0, 0, 4, 6, 10, 16, 30};
  for (int n = 4; n <= 8; ++n) CHECK(best_vt_code(n).codewords.size() == sizes[n]);
}

TEST_CASE("code verification") {
  const ChannelSpec spec{2, 4, 1, 0};
  CHECK(verify_code(spec, vt_code(4, 0).codewords));
  std::vector<QaryString> bad{QaryString::parse("0000", 2), QaryString::parse("0001", 2)};
  CHECK_FALSE(verify_code(spec, bad));
}

TEST_CASE("certificate round trip") {
  const auto c = max_code_exact(build_conflict_graph(2, 6, 1));
  std::ostringstream os;
  write_certificate(os, c);
  std::istringstream is(os.str());
  const auto back = read_certificate(is);
  CHECK(back.codewords == c.codewords);
  CHECK(back.spec.n == 6);
  CHECK(os.str().rfind("2 6 1 10 1\n", 0) == 0);
}

TEST_CASE("lcs edge count agrees with the graph") {
  for (int q : {2, 3})
    for (int l = 0; l <= 5; ++l)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) CHECK(count_edges_by_lcs(q, l, a, b) == edge_count(q, l, a, b));
  std::uint64_t brute = 0;
  for (const auto& x : naive::all_words(2, 2))
    for (const auto& y : naive::all_words(2, 1)) brute += naive::lcs(x, y) >= 1;
  CHECK(brute == 6);
  CHECK(count_edges_by_lcs(2, 1, 1, 0) == 6);
}

TEST_CASE("packing bound dominates the exact maximum") {
  for (int n = 3; n <= 7; ++n) {
    const auto exact = max_code_exact(build_conflict_graph(2, n, 1)).codewords.size();
    CHECK(packing_bound(2, n, 1, 0) >= exact);
    CHECK(packing_bound(2, n, 0, 1) >= exact);
  }
}

TEST_CASE("timeouts return a flagged lower bound") {
  SearchOptions opt;
  opt.time_limit = std::chrono::milliseconds(0);
  const auto c = max_code_exact(build_conflict_graph(2, 9, 1), opt);
  CHECK_FALSE(c.optimal);
  CHECK(c.verified);
  CHECK(c.codewords.size() >= 1);
  SearchOptions small;
  small.max_vertices = 8;
  CHECK_THROWS_AS(max_code_exact(build_conflict_graph(2, 4, 1), small), ResourceError);
}

TEST_CASE("verifier") {
  VerifyConfig cfg;
  cfg.max_n = 5;
  const auto r = verify_all_properties(2, cfg);
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 9);
  cfg.max_n = 4;
  CHECK(verify_all_properties(3, cfg).all_passed());
}

TEST_CASE("verifier catches a broken delete step") {
  VerifyConfig cfg;
  cfg.max_n = 5;
  // Always undo on the left: wrong whenever the insertion was on the right.
  cfg.delete_fn = [](const QaryString& x, const QaryString& y) {
    try {
      auto r = delete_step(x, y);
      if (r.triple.side == Side::Left) return r;
    } catch (const AmbiguousDeletion&) {
    }
    const int q = x.q();
    const Symbol g = static_cast<Symbol>((x.head() - y.head() + q) % q);
    const auto m = match(x.tail(), y);
    return DeleteResult{{Side::Left, g, m.prefix}, m.rest_x, m.rest_y};
  };
  const auto r = verify_all_properties(2, cfg);
  CHECK_FALSE(r.all_passed());
  bool codec_failed = false;
  for (const auto& c : r.checks)
    if (c.name == "codec-round-trip") {
      codec_failed = !c.passed;
      CHECK_FALSE(c.counterexamples.empty());
    }
  CHECK(codec_failed);
}

TEST_CASE("verifier preflight") {
  VerifyConfig cfg;
  cfg.max_n = 40;
  CHECK_THROWS_AS(verify_preflight(2, cfg), ResourceError);
}
