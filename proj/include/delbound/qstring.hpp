#pragma once

// q-ary strings and the elementary counting formulas over [q]^n.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delbound/numeric.hpp"

namespace delbound {

using Symbol = std::uint8_t;
inline constexpr int kMaxAlphabet = 256;

/// Throws DomainError unless 2 <= q <= kMaxAlphabet.
void check_alphabet(int q);

/// A string over [q] = {0, ..., q-1}.
///
/// Text format: base-10 digits with no separator when q <= 10 ("0211"),
/// comma-separated integers when q > 10 ("3,11,0"). The empty string is
/// written "-".
class QaryString {
 public:
  QaryString() = default;
  explicit QaryString(int q);
  QaryString(int q, std::vector<Symbol> symbols);

  static QaryString parse(std::string_view text, int q);
  /// Inverse of rank(): the length-`length` string whose base-q value is `rank`.
  static QaryString from_rank(std::uint64_t rank, std::size_t length, int q);

  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Symbol head() const;
  QaryString tail() const;
  QaryString substr(std::size_t pos, std::size_t len) const;
  QaryString reversed() const;

  /// Base-q value with the first symbol most significant, so rank order is
  /// lexicographic order among strings of one length.
  std::uint64_t rank() const;

  std::string str() const;

  void push_back(Symbol s);
  QaryString& operator+=(const QaryString& other);
  friend QaryString operator+(QaryString lhs, const QaryString& rhs) { return lhs += rhs; }

  friend auto operator<=>(const QaryString&, const QaryString&) = default;
  friend bool operator==(const QaryString&, const QaryString&) = default;

 private:
  int q_ = 2;
  std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const QaryString& x);

/// Base-q rank of a raw symbol sequence.
std::uint64_t rank_of(std::span<const Symbol> x, int q);

/// Advances `x` to the next string of [q]^len in lexicographic order.
/// Returns false (leaving x all zeros) after the last one.
bool next_string(std::vector<Symbol>& x, int q);

/// Every [q]^n string in lexicographic order. Intended for small n.
std::vector<QaryString> all_strings(int q, std::size_t n);

bool is_alternating(std::span<const Symbol> x);
inline bool is_alternating(const QaryString& x) { return is_alternating(x.symbols()); }

/// |A_{q,n}|: 1 for n = 0, q for n = 1, q(q-1) otherwise.
std::uint64_t alternating_count(int q, int n);

std::size_t run_count(std::span<const Symbol> x);
inline std::size_t run_count(const QaryString& x) { return run_count(x.symbols()); }

/// Longest contiguous window that is alternating as a standalone string.
std::size_t longest_alternating_interval(std::span<const Symbol> x);
inline std::size_t longest_alternating_interval(const QaryString& x) {
  return longest_alternating_interval(x.symbols());
}

struct StringStats {
  std::size_t runs = 0;
  std::size_t longest_alternating = 0;
};

StringStats string_stats(std::span<const Symbol> x);

/// An ordered tuple of `parts.size()` integers, each >= min_part, summing to total.
struct Composition {
  std::vector<int> parts;
  int total = 0;
  int min_part = 0;
};

/// Lexicographic stream over M(t, l, k).
class CompositionEnumerator {
 public:
  CompositionEnumerator(int t, int l, int k);

  /// Writes the next composition into `parts`; false once exhausted.
  bool next(std::vector<int>& parts);

 private:
  int t_, l_, k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

std::vector<Composition> enumerate_compositions(int t, int l, int k);

/// |M(t,l,k)| = binom(l + (1-k)t - 1, t - 1), clamped.
BigInt composition_count(int t, int l, int k);

/// I_{q,s,n} = sum_{i<=s} binom(n,i)(q-1)^i, the number of length-n
/// superstrings of any length-(n-s) string.
BigInt insertion_count(int q, int s, int n);

/// Number of strings in [q]^n with exactly r runs; zero for r outside [1, n].
BigInt runs_distribution(int q, int n, int r);

}  // namespace delbound
