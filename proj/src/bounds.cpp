#include "delbound/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "delbound/errors.hpp"

namespace delbound {

BigInt edge_count_upper(int q, int l, int a, int b) {
  check_alphabet(q);
  if (l < 0 || a < 0 || b < 0) throw DomainError("edge_count_upper: negative argument");
  return ipow(q, l) * insertion_count(q, a, l + a) * insertion_count(q, b, l + b);
}

BigInt edge_count_asymptote(int q, int l, int a, int b) {
  check_alphabet(q);
  const int s = a + b;
  return ipow(q, l) * binom(l, s) * binom(s, a) * ipow(q - 1, s);
}

BigInt degree_lower_bound(int q, int n, int r, int c, int a, int b) {
  check_alphabet(q);
  if (a < 0 || b < 0) throw DomainError("degree_lower_bound: negative a or b");
  const std::int64_t N = n, R = r, C = c, A = a, B = b;
  return binom(R - A - 2 - (A + 1) * C, A) * binom(N - 2 * A - 1 - (2 * A + B + 1) * C, B) * ipow(q - 1, b);
}

BigInt alternating_interval_bound(int q, int n, int c) {
  check_alphabet(q);
  if (c < 2 || c > n) throw DomainError("alternating_interval_bound: window length must satisfy 2 <= c <= n");
  return (n - c + 1) * ipow(q, n - c + 1) * (q - 1);
}

double few_runs_bound(int q, int n, double eps) {
  check_alphabet(q);
  if (n < 1) throw DomainError("few_runs_bound: n must be >= 1");
  if (!(eps >= 0)) throw DomainError("few_runs_bound: eps must be >= 0");
  return std::pow(static_cast<double>(q), n) * std::exp(-2.0 * (n - 1) * eps * eps);
}

std::int64_t few_runs_threshold(int q, int n, double eps) {
  const double p = static_cast<double>(q - 1) / q;
  return static_cast<std::int64_t>(std::floor((p - eps) * (n - 1) + 1 + 1e-9));
}

Rational generalized_code_bound(int q, int n, int a, int b) {
  check_alphabet(q);
  if (a < 0 || b < 0) throw DomainError("generalized_code_bound: negative a or b");
  const int s = a + b;
  if (s > n) throw DomainError("generalized_code_bound: s = a + b exceeds n");
  return Rational(ipow(q, n + b), ipow(q - 1, s) * binom(n, s) * binom(s, b));
}

Rational levenshtein_bound(int q, int n, int s) { return generalized_code_bound(q, n, s, 0); }

Rational insertion_code_bound(int q, int n, int s) {
  check_alphabet(q);
  if (s < 0 || s > n) throw DomainError("insertion_code_bound: need 0 <= s <= n");
  return Rational(ipow(q, n + s), binom(n, s) * ipow(q - 1, s));
}

int optimal_b(int q, int s) {
  check_alphabet(q);
  if (s < 0) throw DomainError("optimal_b: s must be >= 0");
  if (s <= q) return 0;
  return s / (q + 1);  // ceil((s - q) / (q + 1))
}

Rational improvement_factor(int q, int s, int b) {
  check_alphabet(q);
  if (b < 0 || b > s) throw DomainError("improvement_factor: need 0 <= b <= s");
  return Rational(binom(s, b), ipow(q, b));
}

TypicalitySplit typicality_split(int q, int n, int a, int b, const EnumerationCaps& caps) {
  check_alphabet(q);
  if (n < 2) throw DomainError("typicality_split: n must be >= 2");
  const int s = a + b;
  TypicalitySplit out;
  out.c_threshold = (s + 2) * std::log(static_cast<double>(n)) / std::log(static_cast<double>(q));
  out.eps = std::sqrt((s + 1) * std::log(static_cast<double>(n)) / (2.0 * (n - 1)));
  out.min_window = static_cast<int>(std::ceil(out.c_threshold - 1e-9));
  out.run_threshold = few_runs_threshold(q, n, out.eps);

  if (saturating_pow(q, n) > caps.max_strings) return out;
  ClassSizes sizes;
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  do {
    const auto st = string_stats(x);
    const bool c2 = static_cast<int>(st.longest_alternating) >= out.min_window;
    const bool c3 = static_cast<std::int64_t>(st.runs) <= out.run_threshold;
    sizes.long_alternating += c2;
    sizes.few_runs += c3;
    sizes.typical += !c2 && !c3;
  } while (next_string(x, q));
  out.sizes = sizes;
  return out;
}

std::uint64_t edge_count(int q, int l, int a, int b, const EnumerationCaps& caps) {
  check_alphabet(q);
  if (l < 0 || a < 0 || b < 0) throw DomainError("edge_count: negative argument");
  require_string_space(q, static_cast<std::uint64_t>(l + a), caps, "edge count left vertices");
  require_string_space(q, static_cast<std::uint64_t>(l + b), caps, "edge count right vertices");
  std::uint64_t total = 0;
  std::vector<std::uint64_t> outs;
  std::vector<Symbol> x(static_cast<std::size_t>(l + a), 0);
  do {
    channel_output_ranks(x, q, a, b, outs);
    total += outs.size();
  } while (next_string(x, q));
  return total;
}

AverageDegree average_degree(int q, int n, int a, int b, const EnumerationCaps& caps) {
  ChannelSpec{q, n, a, b}.validate();
  const std::uint64_t total = edge_count(q, n - a, a, b, caps);
  AverageDegree out;
  out.exact = Rational(BigInt(total), ipow(q, n));
  const int s = a + b;
  out.asymptote = Rational(binom(n, s) * binom(s, a) * ipow(q - 1, s), ipow(q, a));
  out.ratio = out.asymptote == 0 ? Rational(0) : out.exact / out.asymptote;
  return out;
}

BoundReport bound_report(int q, int n, int a, int b) {
  const int s = a + b;
  BoundReport r;
  r.spec = {q, n, a, b};
  r.levenshtein = levenshtein_bound(q, n, s);
  r.generalized = generalized_code_bound(q, n, a, b);
  r.insertion_bound = insertion_code_bound(q, n, s);
  r.best_b = optimal_b(q, s);
  r.improvement = improvement_factor(q, s, r.best_b);
  return r;
}

std::vector<BoundReport> bound_table(const std::vector<int>& qs, const std::vector<int>& ns,
                                     const std::vector<int>& ss) {
  std::vector<BoundReport> rows;
  for (int q : qs)
    for (int n : ns)
      for (int s : ss) {
        if (s < 0 || s > n)
          throw DomainError("bound table: s=" + std::to_string(s) + " outside [0, n=" + std::to_string(n) + "]");
        for (int b = 0; b <= s; ++b) rows.push_back(bound_report(q, n, s - b, b));
      }
  return rows;
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& rows) {
  os << "q,n,a,b,s,levenshtein,generalized,insertion_bound,best_b,improvement\n";
  for (const auto& r : rows) {
    os << r.spec.q << ',' << r.spec.n << ',' << r.spec.a << ',' << r.spec.b << ',' << r.spec.s() << ','
       << to_fraction_string(r.levenshtein) << ',' << to_fraction_string(r.generalized) << ','
       << to_fraction_string(r.insertion_bound) << ',' << r.best_b << ',' << to_fraction_string(r.improvement)
       << '\n';
  }
}

namespace {

nlohmann::json rational_json(const Rational& v) {
  return {{"num", boost::multiprecision::numerator(v).str()}, {"den", boost::multiprecision::denominator(v).str()}};
}

std::string both(const Rational& v) { return to_fraction_string(v) + " (" + to_decimal_string(v) + ")"; }

}  // namespace

void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"q", r.spec.q},
                   {"n", r.spec.n},
                   {"a", r.spec.a},
                   {"b", r.spec.b},
                   {"s", r.spec.s()},
                   {"levenshtein", rational_json(r.levenshtein)},
                   {"generalized", rational_json(r.generalized)},
                   {"insertion_bound", rational_json(r.insertion_bound)},
                   {"best_b", r.best_b},
                   {"improvement", rational_json(r.improvement)}});
  }
  os << arr.dump(2) << '\n';
}

void write_bounds_text(std::ostream& os, const std::vector<BoundReport>& rows) {
  std::vector<std::array<std::string, 8>> cells;
  cells.push_back({"q", "n", "s", "b", "generalized", "levenshtein", "insertion", "improvement"});
  for (const auto& r : rows) {
    const bool best = r.spec.b == r.best_b;
    cells.push_back({std::to_string(r.spec.q), std::to_string(r.spec.n), std::to_string(r.spec.s()),
                     std::to_string(r.spec.b) + (best ? "*" : ""), both(r.generalized), both(r.levenshtein),
                     both(r.insertion_bound), best ? both(r.improvement) : ""});
  }
  std::array<std::size_t, 8> width{};
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::ostringstream cell;
      cell << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      line += cell.str();
      if (i + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  os << "* marks the b minimizing q^b/binom(s,b); improvement is binom(s,b)/q^b at that b\n";
}

}  // namespace delbound
