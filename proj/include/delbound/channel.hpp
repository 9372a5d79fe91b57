#pragma once

// Deletion/insertion output sets, the subsequence order, and the bipartite
// channel graph linking [q]^{l+a} to [q]^{l+b}.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "delbound/bitmatrix.hpp"
#include "delbound/caps.hpp"
#include "delbound/qstring.hpp"

namespace delbound {

/// One a-deletion b-insertion channel on length-n inputs over [q].
struct ChannelSpec {
  int q = 2;
  int n = 0;
  int a = 0;
  int b = 0;

  int s() const noexcept { return a + b; }
  int output_length() const noexcept { return n - a + b; }
  /// Throws DomainError unless q >= 2, n >= a >= 0, b >= 0.
  void validate() const;
};

bool is_subsequence(const QaryString& z, const QaryString& x);
bool is_subsequence(std::span<const Symbol> z, std::span<const Symbol> x);

/// Longest common subsequence length, quadratic dynamic program.
std::size_t lcs_length(std::span<const Symbol> x, std::span<const Symbol> y);
/// Shortest common supersequence length, its own dynamic program.
std::size_t scs_length(std::span<const Symbol> x, std::span<const Symbol> y);

/// True iff x and y share a common subsequence of length l.
bool adjacent(const QaryString& x, const QaryString& y, std::size_t l);

namespace detail {

// Distinct subsequences of x of length `len`, in lexicographic order. Each is
// produced once, following its leftmost embedding.
template <class Fn>
void for_each_subsequence(std::span<const Symbol> x, int q, std::size_t len, Fn&& fn) {
  const std::size_t n = x.size();
  if (len > n) return;
  const std::size_t qs = static_cast<std::size_t>(q);
  std::vector<std::uint32_t> next((n + 1) * qs, static_cast<std::uint32_t>(n));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < qs; ++c) next[i * qs + c] = next[(i + 1) * qs + c];
    next[i * qs + x[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Symbol> buf(len);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t depth) -> void {
    if (depth == len) {
      fn(std::span<const Symbol>(buf));
      return;
    }
    for (std::size_t c = 0; c < qs; ++c) {
      const std::size_t p = next[pos * qs + c];
      if (p >= n || n - p - 1 < len - depth - 1) continue;
      buf[depth] = static_cast<Symbol>(c);
      self(self, p + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

// Distinct supersequences of z of length `len`, in lexicographic order. Each
// is produced once, following the greedy leftmost embedding of z.
template <class Fn>
void for_each_supersequence(std::span<const Symbol> z, int q, std::size_t len, Fn&& fn) {
  const std::size_t m = z.size();
  if (len < m) return;
  std::vector<Symbol> buf(len);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t matched) -> void {
    if (depth == len) {
      fn(std::span<const Symbol>(buf));
      return;
    }
    for (int c = 0; c < q; ++c) {
      const std::size_t next = (matched < m && z[matched] == c) ? matched + 1 : matched;
      if (len - depth - 1 < m - next) continue;
      buf[depth] = static_cast<Symbol>(c);
      self(self, depth + 1, next);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// Sorted ranks of S_{a,b}(x), the possible outputs of the a-deletion
/// b-insertion channel on input x. Requires a <= |x|.
void channel_output_ranks(std::span<const Symbol> x, int q, int a, int b,
                          std::vector<std::uint64_t>& out);

/// D_s(x) = S_{s,0}(x), sorted. Throws DomainError when s > |x|.
std::vector<QaryString> deletion_set(const QaryString& x, int s);
/// S_{0,s}(x), sorted.
std::vector<QaryString> insertion_set(const QaryString& x, int s);
/// S_{a,b}(x), sorted. Throws DomainError when a > |x|.
std::vector<QaryString> channel_output_set(const QaryString& x, int a, int b);

/// Explicit B_{q,l,a,b}: left [q]^{l+a}, right [q]^{l+b}, adjacency iff a
/// common subsequence of length l. Vertices are identified by rank and the
/// adjacency is stored as sorted per-left-vertex lists.
class ChannelGraph {
 public:
  ChannelGraph(int q, int l, int a, int b, std::vector<std::uint64_t> offsets,
               std::vector<std::uint32_t> targets);

  int q() const noexcept { return q_; }
  int l() const noexcept { return l_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

  std::uint64_t left_count() const noexcept { return offsets_.size() - 1; }
  std::uint64_t right_count() const noexcept { return right_count_; }
  std::uint64_t edge_count() const noexcept { return targets_.size(); }

  std::span<const std::uint32_t> neighbors(std::uint64_t left_rank) const;
  std::uint64_t degree(std::uint64_t left_rank) const { return neighbors(left_rank).size(); }
  bool has_edge(std::uint64_t left_rank, std::uint64_t right_rank) const;

  QaryString left_vertex(std::uint64_t rank) const;
  QaryString right_vertex(std::uint64_t rank) const;

  /// Header "q l a b", then one "x y" line per edge in rank order.
  void write_edge_list(std::ostream& os) const;

 private:
  int q_, l_, a_, b_;
  std::uint64_t right_count_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

ChannelGraph build_channel_graph(int q, int l, int a, int b, const EnumerationCaps& caps = {});

struct DegreeStats {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  Rational mean = 0;
};

DegreeStats left_degree_stats(const ChannelGraph& g);

/// Outcome of an exhaustive equivalence check; the counterexample names the
/// first offending instance.
struct CheckResult {
  bool holds = true;
  std::uint64_t instances = 0;
  std::string counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// For every x in [q]^m, y in [q]^n: a common subsequence of length l exists
/// iff a common supersequence of length m+n-l exists. Requires l < m, l < n.
CheckResult check_parallelogram(int q, int l, int m, int n, const EnumerationCaps& caps = {});

/// Conflict relation on [q]^n: x ~ y (x != y) iff S_{a,b}(x) and S_{a,b}(y)
/// intersect.
BitMatrix conflict_matrix(int q, int n, int a, int b, const EnumerationCaps& caps = {});

/// For all x, y in [q]^n: D_{a+b}(x), D_{a+b}(y) disjoint iff S_{a,b}(x),
/// S_{a,b}(y) disjoint.
CheckResult check_channel_equivalence(int q, int n, int a, int b, const EnumerationCaps& caps = {});

}  // namespace delbound
