#pragma once

// Brute-force ground truth: conflict graphs, exact maximum codes, VT codes,
// the direct LCS edge count, certified packing bounds and the exhaustive
// property verifier.

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delbound/bitmatrix.hpp"
#include "delbound/caps.hpp"
#include "delbound/channel.hpp"
#include "delbound/codec.hpp"

namespace delbound {

/// [q]^n with x ~ y iff their channel output sets intersect.
struct ConflictGraph {
  ChannelSpec spec;
  BitMatrix conflicts;

  std::size_t vertex_count() const { return conflicts.size(); }
  QaryString vertex(std::size_t rank) const {
    return QaryString::from_rank(rank, static_cast<std::size_t>(spec.n), spec.q);
  }
};

/// s-deletion conflicts, the cheapest formulation.
ConflictGraph build_conflict_graph(int q, int n, int s, const EnumerationCaps& caps = {});
/// Conflicts under the a-deletion b-insertion channel.
ConflictGraph build_conflict_graph(int q, int n, int a, int b, const EnumerationCaps& caps);

struct CodeCertificate {
  ChannelSpec spec;
  std::vector<QaryString> codewords;  // sorted
  bool verified = false;              // pairwise disjointness re-checked
  bool optimal = true;                // false: search timed out, size is a lower bound
};

/// True iff the codewords are distinct, have length n, and have pairwise
/// disjoint S_{a,b} sets. Computed from the output sets directly.
bool verify_code(const ChannelSpec& spec, const std::vector<QaryString>& codewords);

struct SearchOptions {
  std::uint64_t max_vertices = 4096;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// A maximum independent set of the conflict graph. Throws ResourceError
/// above max_vertices. On timeout the best code found is returned with
/// optimal = false.
CodeCertificate max_code_exact(const ConflictGraph& graph, const SearchOptions& options = {});

/// Binary strings with sum_{i=1..n} i*x_i = residue (mod n+1), verified for a
/// single deletion.
CodeCertificate vt_code(int n, int residue);
/// The largest vt_code(n, r) over residues; ties go to the smallest residue.
CodeCertificate best_vt_code(int n);

/// Header "q n s size verified" (values, verified as 0/1), then one codeword
/// per line.
void write_certificate(std::ostream& os, const CodeCertificate& cert);
CodeCertificate read_certificate(std::istream& is);

/// |E(B_{q,l,a,b})| by testing every (x, y) pair for a length-l common
/// subsequence with a bit-parallel LCS, sharing work across prefixes of y.
/// Requires l + a <= 64.
std::uint64_t count_edges_by_lcs(int q, int l, int a, int b, const EnumerationCaps& caps = {});

/// Certified finite-n packing bound for a-deletion b-insertion codes:
/// min over degree thresholds d of floor(q^{n-a+b} / d) + #{x : |S_{a,b}(x)| < d}.
std::uint64_t packing_bound(int q, int n, int a, int b, const EnumerationCaps& caps = {});

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::vector<std::string> counterexamples;  // first few only
};

struct VerifyReport {
  int q = 2;
  int max_n = 0;
  std::vector<PropertyCheck> checks;

  bool all_passed() const;
};

struct VerifyConfig {
  int max_n = 7;
  int max_s = 2;
  EnumerationCaps caps;
  DeleteStepFn delete_fn = delete_step;
  // Independent checks run on up to this many threads; the report order is fixed.
  unsigned workers = 1;
};

/// Throws ResourceError naming the first instance that would exceed the caps.
void verify_preflight(int q, const VerifyConfig& config);

/// Runs every exhaustive check at lengths up to config.max_n.
VerifyReport verify_all_properties(int q, const VerifyConfig& config = {});

/// One "PASS|FAIL name instances=N" line per check plus counterexamples.
void write_verify_report(std::ostream& os, const VerifyReport& report);

}  // namespace delbound
