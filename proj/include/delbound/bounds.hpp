#pragma once

// Closed-form counting bounds for the deletion/insertion channel graph and
// the resulting code-size bounds.
//
// Integer and rational quantities are exact. The concentration bound on
// few-run strings and the typicality thresholds are real-valued doubles.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "delbound/caps.hpp"
#include "delbound/channel.hpp"
#include "delbound/numeric.hpp"

namespace delbound {

/// q^l * I_{q,a,l+a} * I_{q,b,l+b}; every edge of B_{q,l,a,b} arises from at
/// least one (common subsequence, left insertions, right insertions) triple.
BigInt edge_count_upper(int q, int l, int a, int b);

/// q^l * binom(l,s) * binom(s,a) * (q-1)^s, the growth rate shared by the
/// upper bound and the constructable parameter count.
BigInt edge_count_asymptote(int q, int l, int a, int b);

/// Lower bound on |S_{a,b}(x)| for x in [q]^n with r runs and longest
/// alternating window c:
///   binom(r-a-2-(a+1)c, a) * binom(n-2a-1-(2a+b+1)c, b) * (q-1)^b
/// with clamped binomials.
BigInt degree_lower_bound(int q, int n, int r, int c, int a, int b);

/// (n-c+1) q^{n-c+1} (q-1): strings of length n with an alternating window of
/// length >= c. Requires 2 <= c <= n.
BigInt alternating_interval_bound(int q, int n, int c);

/// q^n exp(-2(n-1) eps^2): strings with at most ((q-1)/q - eps)(n-1) + 1 runs.
double few_runs_bound(int q, int n, double eps);

/// Largest integer run count covered by few_runs_bound, i.e.
/// floor(((q-1)/q - eps)(n-1) + 1), with 1e-9 slack so values that are
/// integers up to rounding are included. May be negative.
std::int64_t few_runs_threshold(int q, int n, double eps);

/// q^{n+b} / ((q-1)^s binom(n,s) binom(s,b)), the generalized code-size
/// formula evaluated at finite n. Requires s = a+b <= n. This is an
/// asymptotic bound; finite-n values are not certified.
Rational generalized_code_bound(int q, int n, int a, int b);

/// The b = 0 case: q^n / ((q-1)^s binom(n,s)).
Rational levenshtein_bound(int q, int n, int s);

/// q^{n+s} / (binom(n,s) (q-1)^s), the s-insertion packing bound.
Rational insertion_code_bound(int q, int n, int s);

/// max(0, ceil((s-q)/(q+1))), the b minimizing q^b / binom(s,b).
int optimal_b(int q, int s);

/// binom(s,b) / q^b, the factor by which the bound at b beats b = 0.
Rational improvement_factor(int q, int s, int b);

struct ClassSizes {
  std::uint64_t typical = 0;          // C1: in neither C2 nor C3
  std::uint64_t long_alternating = 0; // C2
  std::uint64_t few_runs = 0;         // C3
};

/// The three-way split used to bound code size: typical strings, strings
/// with an alternating window of length >= c_threshold, strings with few runs.
struct TypicalitySplit {
  double c_threshold = 0;         // (s+2) log_q n
  double eps = 0;                 // sqrt((s+1) ln n / (2(n-1)))
  int min_window = 0;             // ceil(c_threshold)
  std::int64_t run_threshold = 0; // few_runs_threshold(q, n, eps)
  std::optional<ClassSizes> sizes;
};

/// Class sizes are filled in when [q]^n fits under the enumeration cap.
TypicalitySplit typicality_split(int q, int n, int a, int b, const EnumerationCaps& caps = {});

struct AverageDegree {
  Rational exact;      // mean of |S_{a,b}(x)| over [q]^n
  Rational asymptote;  // binom(n,s) binom(s,a) (q-1)^s q^{-a}
  Rational ratio;      // exact / asymptote (zero when the asymptote is)
};

AverageDegree average_degree(int q, int n, int a, int b, const EnumerationCaps& caps = {});

/// Sum of |S_{a,b}(x)| over x in [q]^{l+a}, i.e. |E(B_{q,l,a,b})|, without
/// materializing the graph.
std::uint64_t edge_count(int q, int l, int a, int b, const EnumerationCaps& caps = {});

struct BoundReport {
  ChannelSpec spec;
  Rational levenshtein;
  Rational generalized;
  Rational insertion_bound;
  int best_b = 0;
  Rational improvement;
};

BoundReport bound_report(int q, int n, int a, int b);

/// One row per (q, n, s, b) with b in [0, s], in input order with b innermost.
std::vector<BoundReport> bound_table(const std::vector<int>& qs, const std::vector<int>& ns,
                                     const std::vector<int>& ss);

/// Header q,n,a,b,s,levenshtein,generalized,insertion_bound,best_b,improvement
/// with rationals as exact fractions.
void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& rows);
/// Array of objects; rationals as {"num": "...", "den": "..."}.
void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& rows);
/// Aligned table with exact and 6-digit values; the best b of each group is
/// marked with '*'.
void write_bounds_text(std::ostream& os, const std::vector<BoundReport>& rows);

}  // namespace delbound
