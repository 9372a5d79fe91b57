#pragma once

// Edge construction and deconstruction for the channel graph B_{q,l,a,b}.
//
// An edge is built from a non-alternating starting interval z0 followed by s
// (side, offset, interval) triples. Each triple prepends the symbol
// offset + head(interval) (mod q) to the interval on one side only, so the
// two endpoints differ in their first symbol at each insertion point.
// Deconstruction walks the pair left to right and undoes one insertion per
// step by keeping whichever deletion yields the longer common prefix.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delbound/caps.hpp"
#include "delbound/qstring.hpp"

namespace delbound {

enum class Side { Left, Right };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

struct InsertTriple {
  Side side = Side::Left;
  Symbol offset = 1;
  QaryString interval;

  friend bool operator==(const InsertTriple&, const InsertTriple&) = default;
};

/// A construction parameter split into its gap choices, offsets and the
/// s+1 intervals w_0..w_s.
struct EdgeParameter {
  std::vector<Side> gap_sides;
  std::vector<Symbol> offsets;
  std::vector<QaryString> intervals;

  int a() const;
  int b() const;
  int s() const { return static_cast<int>(gap_sides.size()); }
  int l() const;

  QaryString z0() const { return intervals.front(); }
  std::vector<InsertTriple> triples() const;
  static EdgeParameter from_triples(const QaryString& z0, std::span<const InsertTriple> triples);

  /// Throws DomainError unless every membership condition of the parameter
  /// set holds (offsets in [1,q-1], no interval alternating).
  void validate(int q) const;

  friend bool operator==(const EdgeParameter&, const EdgeParameter&) = default;
};

std::pair<QaryString, QaryString> insert_step(const InsertTriple& t);

std::pair<QaryString, QaryString> construct(const QaryString& z0, std::span<const InsertTriple> triples);
std::pair<QaryString, QaryString> construct(const EdgeParameter& p);

struct MatchResult {
  QaryString prefix;
  QaryString rest_x;
  QaryString rest_y;
};

/// Longest common prefix and the two leftover suffixes.
MatchResult match(const QaryString& x, const QaryString& y);

struct DeleteResult {
  InsertTriple triple;
  QaryString rest_x;
  QaryString rest_y;
};

/// Undoes one insertion. Requires nonempty x, y with different heads.
/// Throws AmbiguousDeletion when both candidate matches have equal length.
DeleteResult delete_step(const QaryString& x, const QaryString& y);

using DeleteStepFn = std::function<DeleteResult(const QaryString&, const QaryString&)>;

struct DecodedEdge {
  QaryString z0;
  std::vector<InsertTriple> triples;

  friend bool operator==(const DecodedEdge&, const DecodedEdge&) = default;
};

/// Recovers (z0, triples). Throws NotDeconstructable when the walk does not
/// consume both strings together or a delete step is ambiguous. When `trace`
/// is given, every completed delete step is appended to it.
DecodedEdge deconstruct(const QaryString& x, const QaryString& y, std::vector<DeleteResult>* trace = nullptr,
                        const DeleteStepFn& step = delete_step);

/// "side offset interval | remainder_x remainder_y"
std::string format_trace_line(const DeleteResult& r);

/// "z0=00; LEFT 1 00; RIGHT 1 011"
std::string format_decoded(const DecodedEdge& e);
/// Parses format_decoded output; newlines may replace the "; " separators.
DecodedEdge parse_decoded(std::string_view text, int q);

/// Visits each element of P_{q,l,a,b} exactly once: gap-side subsets in colex
/// order, then offsets lexicographically, then compositions of l into s+1
/// parts lexicographically, then interval strings in base-q order.
void for_each_parameter(int q, int l, int a, int b, const std::function<void(const EdgeParameter&)>& visit,
                        const EnumerationCaps& caps = {});

std::vector<EdgeParameter> enumerate_parameters(int q, int l, int a, int b, const EnumerationCaps& caps = {});

/// |P_{q,l,a,b}| from the product-sum over compositions with parts >= 2.
BigInt parameter_count_closed(int q, int l, int a, int b);

/// |P_{q,l,a,b}| by enumeration; throws if it disagrees with the closed form.
std::uint64_t constructable_edge_count(int q, int l, int a, int b, const EnumerationCaps& caps = {});

}  // namespace delbound
