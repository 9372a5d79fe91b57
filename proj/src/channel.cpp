#include "delbound/channel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "delbound/errors.hpp"

namespace delbound {

void ChannelSpec::validate() const {
  check_alphabet(q);
  if (a < 0 || b < 0) throw DomainError("channel: negative deletion or insertion count");
  if (a > n) throw DomainError("channel: more deletions (" + std::to_string(a) + ") than input symbols (" +
                               std::to_string(n) + ")");
}

bool is_subsequence(std::span<const Symbol> z, std::span<const Symbol> x) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size() && j < z.size(); ++i)
    if (x[i] == z[j]) ++j;
  return j == z.size();
}

bool is_subsequence(const QaryString& z, const QaryString& x) { return is_subsequence(z.symbols(), x.symbols()); }

std::size_t lcs_length(std::span<const Symbol> x, std::span<const Symbol> y) {
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j)
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::size_t scs_length(std::span<const Symbol> x, std::span<const Symbol> y) {
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j)
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::min(prev[j], cur[j - 1]) + 1;
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

bool adjacent(const QaryString& x, const QaryString& y, std::size_t l) {
  return lcs_length(x.symbols(), y.symbols()) >= l;
}

void channel_output_ranks(std::span<const Symbol> x, int q, int a, int b, std::vector<std::uint64_t>& out) {
  ChannelSpec{q, static_cast<int>(x.size()), a, b}.validate();
  out.clear();
  const std::size_t n = x.size();
  const std::size_t out_len = n - static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
  auto push = [&](std::span<const Symbol> w) { out.push_back(rank_of(w, q)); };
  if (a == 0) {
    detail::for_each_supersequence(x, q, out_len, push);
    return;
  }
  if (b == 0) {
    detail::for_each_subsequence(x, q, out_len, push);
    return;
  }
  detail::for_each_subsequence(x, q, n - static_cast<std::size_t>(a), [&](std::span<const Symbol> z) {
    detail::for_each_supersequence(z, q, out_len, push);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

namespace {

std::vector<QaryString> ranks_to_strings(const std::vector<std::uint64_t>& ranks, std::size_t len, int q) {
  std::vector<QaryString> out;
  out.reserve(ranks.size());
  for (std::uint64_t r : ranks) out.push_back(QaryString::from_rank(r, len, q));
  return out;
}

}  // namespace

std::vector<QaryString> channel_output_set(const QaryString& x, int a, int b) {
  std::vector<std::uint64_t> ranks;
  channel_output_ranks(x.symbols(), x.q(), a, b, ranks);
  return ranks_to_strings(ranks, x.size() - static_cast<std::size_t>(a) + static_cast<std::size_t>(b), x.q());
}

std::vector<QaryString> deletion_set(const QaryString& x, int s) { return channel_output_set(x, s, 0); }

std::vector<QaryString> insertion_set(const QaryString& x, int s) { return channel_output_set(x, 0, s); }

ChannelGraph::ChannelGraph(int q, int l, int a, int b, std::vector<std::uint64_t> offsets,
                           std::vector<std::uint32_t> targets)
    : q_(q),
      l_(l),
      a_(a),
      b_(b),
      right_count_(saturating_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(l + b))),
      offsets_(std::move(offsets)),
      targets_(std::move(targets)) {}

std::span<const std::uint32_t> ChannelGraph::neighbors(std::uint64_t left_rank) const {
  if (left_rank >= left_count()) throw DomainError("left vertex rank out of range");
  return {targets_.data() + offsets_[left_rank], offsets_[left_rank + 1] - offsets_[left_rank]};
}

bool ChannelGraph::has_edge(std::uint64_t left_rank, std::uint64_t right_rank) const {
  const auto nb = neighbors(left_rank);
  return std::binary_search(nb.begin(), nb.end(), right_rank);
}

QaryString ChannelGraph::left_vertex(std::uint64_t rank) const {
  return QaryString::from_rank(rank, static_cast<std::size_t>(l_ + a_), q_);
}

QaryString ChannelGraph::right_vertex(std::uint64_t rank) const {
  return QaryString::from_rank(rank, static_cast<std::size_t>(l_ + b_), q_);
}

void ChannelGraph::write_edge_list(std::ostream& os) const {
  os << q_ << ' ' << l_ << ' ' << a_ << ' ' << b_ << '\n';
  for (std::uint64_t x = 0; x < left_count(); ++x) {
    const std::string xs = left_vertex(x).str();
    for (std::uint32_t y : neighbors(x)) os << xs << ' ' << right_vertex(y).str() << '\n';
  }
}

ChannelGraph build_channel_graph(int q, int l, int a, int b, const EnumerationCaps& caps) {
  check_alphabet(q);
  if (l < 0 || a < 0 || b < 0) throw DomainError("channel graph: negative parameter");
  const std::uint64_t left = saturating_pow(q, static_cast<std::uint64_t>(l + a));
  const std::uint64_t right = saturating_pow(q, static_cast<std::uint64_t>(l + b));
  const std::uint64_t total = left > UINT64_MAX - right ? UINT64_MAX : left + right;
  if (total > caps.max_strings)
    throw ResourceError("channel graph B(" + std::to_string(q) + "," + std::to_string(l) + "," + std::to_string(a) +
                            "," + std::to_string(b) + ") has too many vertices",
                        total, caps.max_strings);

  std::vector<std::uint64_t> offsets{0};
  offsets.reserve(left + 1);
  std::vector<std::uint32_t> targets;
  std::vector<std::uint64_t> outs;
  std::vector<Symbol> x(static_cast<std::size_t>(l + a), 0);
  do {
    channel_output_ranks(x, q, a, b, outs);
    for (std::uint64_t y : outs) targets.push_back(static_cast<std::uint32_t>(y));
    offsets.push_back(targets.size());
  } while (next_string(x, q));
  return ChannelGraph(q, l, a, b, std::move(offsets), std::move(targets));
}

DegreeStats left_degree_stats(const ChannelGraph& g) {
  DegreeStats st;
  st.min = UINT64_MAX;
  for (std::uint64_t x = 0; x < g.left_count(); ++x) {
    const std::uint64_t d = g.degree(x);
    st.min = std::min(st.min, d);
    st.max = std::max(st.max, d);
  }
  st.mean = Rational(BigInt(g.edge_count()), BigInt(g.left_count()));
  return st;
}

CheckResult check_parallelogram(int q, int l, int m, int n, const EnumerationCaps& caps) {
  check_alphabet(q);
  if (l < 0 || l >= m || l >= n) throw DomainError("parallelogram check needs 0 <= l < m and l < n");
  require_string_space(q, m, caps, "parallelogram check");
  require_string_space(q, n, caps, "parallelogram check");
  const std::uint64_t pairs = saturating_pow(q, static_cast<std::uint64_t>(m + n));
  if (pairs > caps.max_pairs) throw ResourceError("parallelogram check: too many string pairs", pairs, caps.max_pairs);

  CheckResult res;
  const std::size_t super_len = static_cast<std::size_t>(m + n - l);
  std::vector<Symbol> x(static_cast<std::size_t>(m), 0);
  do {
    std::vector<Symbol> y(static_cast<std::size_t>(n), 0);
    do {
      ++res.instances;
      const bool common_sub = lcs_length(x, y) >= static_cast<std::size_t>(l);
      const bool common_super = scs_length(x, y) <= super_len;
      if (common_sub != common_super && res.holds) {
        res.holds = false;
        std::ostringstream os;
        os << "x=" << QaryString(q, x) << " y=" << QaryString(q, y) << " l=" << l << " common_sub=" << common_sub
           << " common_super=" << common_super;
        res.counterexample = os.str();
      }
    } while (next_string(y, q));
  } while (next_string(x, q));
  return res;
}

BitMatrix conflict_matrix(int q, int n, int a, int b, const EnumerationCaps& caps) {
  ChannelSpec{q, n, a, b}.validate();
  require_string_space(q, static_cast<std::uint64_t>(n), caps, "conflict matrix inputs");
  const int out_len = n - a + b;
  require_string_space(q, static_cast<std::uint64_t>(out_len), caps, "conflict matrix outputs");

  const std::uint64_t inputs = saturating_pow(q, n);
  const std::uint64_t outputs = saturating_pow(q, out_len);
  const std::uint64_t words = (inputs + 63) / 64;
  if (outputs * words > caps.max_matrix_words)
    throw ResourceError("conflict matrix for (q,n,a,b)=(" + std::to_string(q) + "," + std::to_string(n) + "," +
                            std::to_string(a) + "," + std::to_string(b) + ") needs too much preimage storage",
                        outputs * words, caps.max_matrix_words);

  // preimage[w] = set of inputs x with w in S_{a,b}(x)
  std::vector<std::uint64_t> preimage(outputs * words, 0);
  std::vector<std::uint64_t> outs;
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  std::uint64_t idx = 0;
  do {
    channel_output_ranks(x, q, a, b, outs);
    for (std::uint64_t w : outs) preimage[w * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
    ++idx;
  } while (next_string(x, q));

  BitMatrix conflicts(inputs);
  idx = 0;
  do {
    channel_output_ranks(x, q, a, b, outs);
    auto row = conflicts.row(idx);
    for (std::uint64_t w : outs) {
      const std::uint64_t* src = preimage.data() + w * words;
      for (std::uint64_t k = 0; k < words; ++k) row[k] |= src[k];
    }
    conflicts.reset(idx, idx);
    ++idx;
  } while (next_string(x, q));
  return conflicts;
}

CheckResult check_channel_equivalence(int q, int n, int a, int b, const EnumerationCaps& caps) {
  if (a + b > n) throw DomainError("channel equivalence needs a + b <= n");
  const BitMatrix by_deletion = conflict_matrix(q, n, a + b, 0, caps);
  const BitMatrix by_channel = conflict_matrix(q, n, a, b, caps);
  CheckResult res;
  const std::uint64_t N = by_deletion.size();
  res.instances = N * (N - 1) / 2;
  for (std::uint64_t i = 0; i < N && res.holds; ++i) {
    for (std::uint64_t j = i + 1; j < N; ++j) {
      if (by_deletion.test(i, j) != by_channel.test(i, j)) {
        res.holds = false;
        std::ostringstream os;
        os << "x=" << QaryString::from_rank(i, n, q) << " y=" << QaryString::from_rank(j, n, q)
           << " deletion_conflict=" << by_deletion.test(i, j) << " channel_conflict=" << by_channel.test(i, j);
        res.counterexample = os.str();
        break;
      }
    }
  }
  return res;
}

}  // namespace delbound
