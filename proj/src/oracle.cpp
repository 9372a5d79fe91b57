#include "delbound/oracle.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "delbound/errors.hpp"
#include "delbound/independent_set.hpp"

namespace delbound {

ConflictGraph build_conflict_graph(int q, int n, int s, const EnumerationCaps& caps) {
  return build_conflict_graph(q, n, s, 0, caps);
}

ConflictGraph build_conflict_graph(int q, int n, int a, int b, const EnumerationCaps& caps) {
  ChannelSpec spec{q, n, a, b};
  spec.validate();
  return {spec, conflict_matrix(q, n, a, b, caps)};
}

bool verify_code(const ChannelSpec& spec, const std::vector<QaryString>& codewords) {
  spec.validate();
  std::vector<std::vector<std::uint64_t>> outputs;
  outputs.reserve(codewords.size());
  for (const auto& c : codewords) {
    if (c.q() != spec.q || static_cast<int>(c.size()) != spec.n) return false;
    outputs.emplace_back();
    channel_output_ranks(c.symbols(), spec.q, spec.a, spec.b, outputs.back());
  }
  for (std::size_t i = 0; i < codewords.size(); ++i)
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      if (codewords[i] == codewords[j]) return false;
      const auto& u = outputs[i];
      const auto& v = outputs[j];
      std::size_t p = 0, r = 0;
      while (p < u.size() && r < v.size()) {
        if (u[p] == v[r]) return false;
        if (u[p] < v[r])
          ++p;
        else
          ++r;
      }
    }
  return true;
}

CodeCertificate max_code_exact(const ConflictGraph& graph, const SearchOptions& options) {
  const std::uint64_t n = graph.vertex_count();
  if (n > options.max_vertices)
    throw ResourceError("exact code search over " + std::to_string(n) + " vertices", n, options.max_vertices);
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.time_limit) deadline = std::chrono::steady_clock::now() + *options.time_limit;
  const IndependentSetResult found = maximum_independent_set(graph.conflicts, deadline);

  CodeCertificate cert;
  cert.spec = graph.spec;
  for (std::size_t v : found.vertices) cert.codewords.push_back(graph.vertex(v));
  std::sort(cert.codewords.begin(), cert.codewords.end());
  cert.optimal = found.optimal;
  cert.verified = verify_code(cert.spec, cert.codewords);
  return cert;
}

CodeCertificate vt_code(int n, int residue) {
  if (n < 1) throw DomainError("vt_code: n must be >= 1");
  if (residue < 0 || residue > n) throw DomainError("vt_code: residue must lie in [0, n]");
  CodeCertificate cert;
  cert.spec = {2, n, 1, 0};
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  do {
    long long weighted = 0;
    for (int i = 0; i < n; ++i) weighted += static_cast<long long>(i + 1) * x[static_cast<std::size_t>(i)];
    if (weighted % (n + 1) == residue) cert.codewords.emplace_back(2, x);
  } while (next_string(x, 2));
  cert.verified = verify_code(cert.spec, cert.codewords);
  cert.optimal = false;
  return cert;
}

CodeCertificate best_vt_code(int n) {
  CodeCertificate best = vt_code(n, 0);
  for (int r = 1; r <= n; ++r) {
    CodeCertificate c = vt_code(n, r);
    if (c.codewords.size() > best.codewords.size()) best = std::move(c);
  }
  return best;
}

void write_certificate(std::ostream& os, const CodeCertificate& cert) {
  os << cert.spec.q << ' ' << cert.spec.n << ' ' << cert.spec.s() << ' ' << cert.codewords.size() << ' '
     << (cert.verified ? 1 : 0) << '\n';
  for (const auto& c : cert.codewords) os << c << '\n';
}

CodeCertificate read_certificate(std::istream& is) {
  CodeCertificate cert;
  std::size_t size = 0;
  int verified = 0;
  if (!(is >> cert.spec.q >> cert.spec.n >> cert.spec.a >> size >> verified))
    throw DomainError("certificate: malformed header");
  cert.spec.b = 0;
  cert.spec.validate();
  cert.verified = verified != 0;
  std::string word;
  for (std::size_t i = 0; i < size; ++i) {
    if (!(is >> word)) throw DomainError("certificate: fewer codewords than the header declares");
    cert.codewords.push_back(QaryString::parse(word, cert.spec.q));
  }
  return cert;
}

std::uint64_t count_edges_by_lcs(int q, int l, int a, int b, const EnumerationCaps& caps) {
  check_alphabet(q);
  if (l < 0 || a < 0 || b < 0) throw DomainError("count_edges_by_lcs: negative argument");
  const int m = l + a;
  const int len = l + b;
  if (m > 64) throw DomainError("count_edges_by_lcs: left strings longer than 64 symbols");
  require_string_space(q, static_cast<std::uint64_t>(m), caps, "LCS edge count left vertices");
  require_string_space(q, static_cast<std::uint64_t>(len), caps, "LCS edge count right vertices");
  const std::uint64_t pairs = saturating_pow(q, static_cast<std::uint64_t>(m + len));
  if (pairs > caps.max_pairs) throw ResourceError("LCS edge count: too many vertex pairs", pairs, caps.max_pairs);

  std::vector<std::uint64_t> pow(static_cast<std::size_t>(len) + 1, 1);
  for (int i = 1; i <= len; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i) - 1] * q;
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  const int target = l;

  std::uint64_t total = 0;
  std::vector<std::uint64_t> match(static_cast<std::size_t>(q));
  std::vector<Symbol> x(static_cast<std::size_t>(m), 0);
  do {
    std::fill(match.begin(), match.end(), 0);
    for (int i = 0; i < m; ++i) match[x[static_cast<std::size_t>(i)]] |= std::uint64_t{1} << i;
    // Walk the prefixes of y; V holds the bit-parallel LCS column.
    auto walk = [&](auto&& self, int depth, std::uint64_t v) -> void {
      const int lcs = m - std::popcount(v);
      const int remaining = len - depth;
      if (lcs >= target) {
        total += pow[static_cast<std::size_t>(remaining)];
        return;
      }
      if (lcs + remaining < target) return;
      for (int c = 0; c < q; ++c) {
        const std::uint64_t u = v & match[static_cast<std::size_t>(c)];
        self(self, depth + 1, ((v + u) | (v - u)) & full);
      }
    };
    walk(walk, 0, full);
  } while (next_string(x, q));
  return total;
}

std::uint64_t packing_bound(int q, int n, int a, int b, const EnumerationCaps& caps) {
  ChannelSpec{q, n, a, b}.validate();
  require_string_space(q, static_cast<std::uint64_t>(n), caps, "packing bound inputs");
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> outs;
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  do {
    channel_output_ranks(x, q, a, b, outs);
    degrees.push_back(outs.size());
  } while (next_string(x, q));
  std::sort(degrees.begin(), degrees.end());

  const std::uint64_t outputs = saturating_pow(q, static_cast<std::uint64_t>(n - a + b));
  std::uint64_t best = degrees.size();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] == degrees[i - 1]) continue;
    // Inputs before index i have degree < degrees[i].
    best = std::min<std::uint64_t>(best, outputs / degrees[i] + i);
  }
  return best;
}

}  // namespace delbound
