#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <ostream>
#include <set>
#include <sstream>

#include "delbound/bounds.hpp"
#include "delbound/errors.hpp"
#include "delbound/oracle.hpp"

namespace delbound {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;
constexpr double kRealSlack = 1e-12;

void fail(PropertyCheck& check, const std::string& what) {
  check.passed = false;
  if (check.counterexamples.size() < kMaxCounterexamples) check.counterexamples.push_back(what);
}

std::string instance(int q, int l, int a, int b) {
  std::ostringstream os;
  os << "(q,l,a,b)=(" << q << ',' << l << ',' << a << ',' << b << ')';
  return os.str();
}

PropertyCheck check_parallelogram_all(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"parallelogram", true, 0, {}};
  for (int m = 1; m <= cfg.max_n; ++m)
    for (int n = 1; n <= cfg.max_n; ++n)
      for (int l = 0; l < std::min(m, n); ++l) {
        const CheckResult r = check_parallelogram(q, l, m, n, cfg.caps);
        check.instances += r.instances;
        if (!r) fail(check, r.counterexample);
      }
  return check;
}

PropertyCheck check_channel_equivalence_all(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"channel-equivalence", true, 0, {}};
  for (int n = 1; n <= cfg.max_n; ++n)
    for (int s = 0; s <= n; ++s)
      for (int a = 0; a <= s; ++a) {
        const CheckResult r = check_channel_equivalence(q, n, a, s - a, cfg.caps);
        check.instances += r.instances;
        if (!r) fail(check, r.counterexample);
      }
  return check;
}

PropertyCheck check_edge_sandwich(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"edge-upper-bound", true, 0, {}};
  for (int l = 0; l <= cfg.max_n; ++l)
    for (int s = 0; s <= cfg.max_s; ++s)
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        const ChannelGraph g = build_channel_graph(q, l, a, b, cfg.caps);
        const std::uint64_t by_lcs = count_edges_by_lcs(q, l, a, b, cfg.caps);
        const BigInt upper = edge_count_upper(q, l, a, b);
        const BigInt params = parameter_count_closed(q, l, a, b);
        ++check.instances;
        if (g.edge_count() != by_lcs)
          fail(check, instance(q, l, a, b) + ": graph has " + std::to_string(g.edge_count()) +
                          " edges, LCS enumeration finds " + std::to_string(by_lcs));
        if (BigInt(g.edge_count()) > upper)
          fail(check, instance(q, l, a, b) + ": |E|=" + std::to_string(g.edge_count()) + " > " + upper.str());
        if (params > BigInt(g.edge_count()))
          fail(check, instance(q, l, a, b) + ": |P|=" + params.str() + " > |E|=" + std::to_string(g.edge_count()));
      }
  return check;
}

PropertyCheck check_insert_delete(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"insert-delete-local", true, 0, {}};
  std::vector<QaryString> tails;
  for (std::size_t len = 0; len <= 3; ++len)
    for (auto& t : all_strings(q, len)) tails.push_back(std::move(t));

  const int max_w = std::max(2, std::min(6, cfg.max_n));
  for (int m = 2; m <= max_w; ++m)
    for (const auto& w : all_strings(q, static_cast<std::size_t>(m))) {
      if (is_alternating(w)) continue;
      for (Side side : {Side::Left, Side::Right})
        for (int d = 1; d < q; ++d) {
          const InsertTriple t{side, static_cast<Symbol>(d), w};
          const auto [x, y] = insert_step(t);
          for (const auto& u : tails)
            for (const auto& v : tails) {
              if (!u.empty() && !v.empty() && u.head() == v.head()) continue;
              ++check.instances;
              std::string got;
              try {
                const DeleteResult r = cfg.delete_fn(x + u, y + v);
                if (r.triple == t && r.rest_x == u && r.rest_y == v) continue;
                got = format_trace_line(r);
              } catch (const std::exception& e) {
                got = e.what();
              }
              fail(check, "delete(" + (x + u).str() + ", " + (y + v).str() + ") expected " + std::string(to_string(side)) +
                              ' ' + std::to_string(d) + ' ' + w.str() + " | " + u.str() + ' ' + v.str() + ", got " + got);
            }
        }
    }
  return check;
}

PropertyCheck check_round_trip(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"codec-round-trip", true, 0, {}};
  for (int l = 0; l <= cfg.max_n; ++l)
    for (int s = 0; s <= cfg.max_s; ++s)
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
        std::uint64_t count = 0;
        for_each_parameter(
            q, l, a, b,
            [&](const EdgeParameter& p) {
              ++count;
              ++check.instances;
              const auto [x, y] = construct(p);
              const std::string edge = instance(q, l, a, b) + " z0=" + p.z0().str() + " edge (" + x.str() + ", " +
                                       y.str() + ")";
              if (static_cast<int>(x.size()) != l + a || static_cast<int>(y.size()) != l + b ||
                  lcs_length(x.symbols(), y.symbols()) < static_cast<std::size_t>(l)) {
                fail(check, edge + " is not an edge of the channel graph");
                return;
              }
              edges.emplace(x.rank(), y.rank());
              try {
                const DecodedEdge back = deconstruct(x, y, nullptr, cfg.delete_fn);
                const auto triples = p.triples();
                if (!(back.z0 == p.z0() && back.triples == triples))
                  fail(check, edge + " deconstructs to " + format_decoded(back));
              } catch (const std::exception& e) {
                fail(check, edge + ": " + e.what());
              }
            },
            cfg.caps);
        if (edges.size() != count)
          fail(check, instance(q, l, a, b) + ": " + std::to_string(count) + " parameters give only " +
                          std::to_string(edges.size()) + " distinct edges");
      }
  return check;
}

PropertyCheck check_degree_lower_bound(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"degree-lower-bound", true, 0, {}};
  std::vector<std::uint64_t> outs;
  for (int n = 1; n <= cfg.max_n; ++n)
    for (int s = 0; s <= cfg.max_s; ++s)
      for (int a = 0; a <= std::min(s, n); ++a) {
        const int b = s - a;
        std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
        do {
          ++check.instances;
          const StringStats st = string_stats(x);
          const BigInt lb = degree_lower_bound(q, n, static_cast<int>(st.runs),
                                               static_cast<int>(st.longest_alternating), a, b);
          channel_output_ranks(x, q, a, b, outs);
          if (lb > BigInt(outs.size()))
            fail(check, "x=" + QaryString(q, x).str() + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                            ": bound " + lb.str() + " > degree " + std::to_string(outs.size()));
        } while (next_string(x, q));
      }
  return check;
}

PropertyCheck check_alternating_windows(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"alternating-window-count", true, 0, {}};
  for (int n = 2; n <= cfg.max_n; ++n) {
    std::vector<std::uint64_t> at_least(static_cast<std::size_t>(n) + 2, 0);
    std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
    do {
      ++at_least[longest_alternating_interval(x)];
    } while (next_string(x, q));
    for (int c = n; c >= 1; --c) at_least[static_cast<std::size_t>(c)] += at_least[static_cast<std::size_t>(c) + 1];
    for (int c = 2; c <= n; ++c) {
      ++check.instances;
      const BigInt bound = alternating_interval_bound(q, n, c);
      if (BigInt(at_least[static_cast<std::size_t>(c)]) > bound)
        fail(check, "n=" + std::to_string(n) + " c=" + std::to_string(c) + ": " +
                        std::to_string(at_least[static_cast<std::size_t>(c)]) + " strings > bound " + bound.str());
    }
  }
  return check;
}

PropertyCheck check_few_runs(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"few-runs-count", true, 0, {}};
  for (int n = 1; n <= cfg.max_n; ++n) {
    std::vector<std::uint64_t> by_runs(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
    do {
      ++by_runs[run_count(x)];
    } while (next_string(x, q));
    for (double eps : {0.1, 0.2, 0.3, 0.5}) {
      ++check.instances;
      const std::int64_t threshold = few_runs_threshold(q, n, eps);
      std::uint64_t count = 0;
      for (std::int64_t r = 0; r <= std::min<std::int64_t>(threshold, n); ++r) count += by_runs[static_cast<std::size_t>(r)];
      const double bound = few_runs_bound(q, n, eps);
      if (static_cast<double>(count) > bound * (1 + kRealSlack))
        fail(check, "n=" + std::to_string(n) + " eps=" + std::to_string(eps) + ": " + std::to_string(count) +
                        " strings > bound " + std::to_string(bound));
    }
  }
  return check;
}

PropertyCheck check_superstring_count(int q, const VerifyConfig& cfg) {
  PropertyCheck check{"superstring-count", true, 0, {}};
  for (int len = 0; len <= cfg.max_n; ++len)
    for (int s = 0; s <= cfg.max_s; ++s) {
      const BigInt expected = insertion_count(q, s, len + s);
      const auto supers = all_strings(q, static_cast<std::size_t>(len + s));
      std::vector<Symbol> x(static_cast<std::size_t>(len), 0);
      do {
        ++check.instances;
        std::uint64_t count = 0;
        for (const auto& w : supers) count += is_subsequence(x, w.symbols());
        if (BigInt(count) != expected)
          fail(check, "x=" + QaryString(q, x).str() + " s=" + std::to_string(s) + ": " + std::to_string(count) +
                          " superstrings, formula " + expected.str());
      } while (next_string(x, q));
    }
  return check;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

void verify_preflight(int q, const VerifyConfig& cfg) {
  check_alphabet(q);
  if (cfg.max_n < 1) throw DomainError("verify: max_n must be >= 1");
  if (cfg.max_s < 0) throw DomainError("verify: max_s must be >= 0");
  const auto n = static_cast<std::uint64_t>(cfg.max_n);
  const auto s = static_cast<std::uint64_t>(cfg.max_s);
  const std::string at = " at q=" + std::to_string(q) + ", max-n=" + std::to_string(cfg.max_n);

  require_string_space(q, n + s, cfg.caps, "verify: channel graph" + at);
  require_string_space(q, 2 * n, cfg.caps, "verify: pure-insertion outputs" + at);
  const std::uint64_t pairs = saturating_pow(q, 2 * n + s);
  if (pairs > cfg.caps.max_pairs) throw ResourceError("verify: vertex pairs" + at, pairs, cfg.caps.max_pairs);
  const std::uint64_t words = saturating_pow(q, 2 * n) * ((saturating_pow(q, n) + 63) / 64);
  if (words > cfg.caps.max_matrix_words)
    throw ResourceError("verify: channel-equivalence preimage storage" + at, words, cfg.caps.max_matrix_words);
  for (std::uint64_t b = 0; b <= s; ++b) {
    const BigInt params = parameter_count_closed(q, cfg.max_n, static_cast<int>(s - b), static_cast<int>(b));
    if (params > cfg.caps.max_strings)
      throw ResourceError("verify: parameter set" + at, params.convert_to<std::uint64_t>(), cfg.caps.max_strings);
  }
}

VerifyReport verify_all_properties(int q, const VerifyConfig& cfg) {
  verify_preflight(q, cfg);
  VerifyReport report;
  report.q = q;
  report.max_n = cfg.max_n;
  using CheckFn = PropertyCheck (*)(int, const VerifyConfig&);
  const std::vector<CheckFn> tasks = {check_parallelogram_all, check_channel_equivalence_all,
                                      check_edge_sandwich,     check_insert_delete,
                                      check_round_trip,        check_degree_lower_bound,
                                      check_alternating_windows, check_few_runs,
                                      check_superstring_count};
  report.checks.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        report.checks[i] = tasks[i](q, cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(cfg.workers, 1, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

void write_verify_report(std::ostream& os, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " instances=" << c.instances << '\n';
    for (const auto& ce : c.counterexamples) os << "  counterexample: " << ce << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << " (q=" << report.q
     << ", max-n=" << report.max_n << ")\n";
}

}  // namespace delbound
