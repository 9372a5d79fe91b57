#include "delbound/independent_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace delbound {

namespace {

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

class Search {
 public:
  Search(const BitMatrix& g, std::optional<std::chrono::steady_clock::time_point> deadline)
      : n_(g.size()), words_((n_ + 63) / 64), deadline_(deadline) {
    order_ = degeneracy_order(g);
    // Conflict rows renumbered so bit i is vertex order_[i].
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    rows_.assign(n_, Words(words_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (g.test(order_[i], order_[j])) rows_[i][j / 64] |= std::uint64_t{1} << (j % 64);
  }

  IndependentSetResult run() {
    seed_greedy();
    Words all(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    if (n_ > 0) expand(all);
    IndependentSetResult r;
    for (std::size_t v : best_) r.vertices.push_back(order_[v]);
    std::sort(r.vertices.begin(), r.vertices.end());
    r.optimal = !timed_out_;
    r.nodes = nodes_;
    return r;
  }

 private:
  // Repeatedly removes a vertex of largest remaining conflict degree and
  // places it last, so the front holds the sparsest core.
  static std::vector<std::size_t> degeneracy_order(const BitMatrix& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g.row_count(i);
    std::vector<bool> gone(n, false);
    std::vector<std::size_t> order(n);
    for (std::size_t k = n; k-- > 0;) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!gone[v] && (pick == n || deg[v] > deg[pick])) pick = v;
      gone[pick] = true;
      order[k] = pick;
      for (std::size_t v = 0; v < n; ++v)
        if (!gone[v] && g.test(pick, v)) --deg[v];
    }
    return order;
  }

  void seed_greedy() {
    Words blocked(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      if ((blocked[v / 64] >> (v % 64)) & 1) continue;
      best_.push_back(v);
      for (std::size_t k = 0; k < words_; ++k) blocked[k] |= rows_[v][k];
    }
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  void expand(Words candidates) {
    ++nodes_;
    if (out_of_time()) return;

    // Greedy clique cover of the candidates: each class is pairwise
    // conflicting, so an independent set takes at most one per class.
    std::vector<std::size_t> vertex;
    std::vector<std::size_t> color;
    Words uncolored = candidates;
    std::size_t k = 0;
    while (any(uncolored)) {
      ++k;
      Words open = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (open[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
          vertex.push_back(v);
          color.push_back(k);
          uncolored[w] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t j = w; j < words_; ++j) open[j] &= rows_[v][j];
          open[w] &= ~(std::uint64_t{1} << (v % 64));
        }
      }
    }

    for (std::size_t i = vertex.size(); i-- > 0;) {
      if (current_.size() + color[i] <= best_.size()) return;
      const std::size_t v = vertex[i];
      Words next(words_);
      for (std::size_t j = 0; j < words_; ++j) next[j] = candidates[j] & ~rows_[v][j];
      next[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      current_.push_back(v);
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (timed_out_) return;
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<std::size_t> order_;
  std::vector<Words> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

IndependentSetResult maximum_independent_set(const BitMatrix& graph,
                                             std::optional<std::chrono::steady_clock::time_point> deadline) {
  return Search(graph, deadline).run();
}

}  // namespace delbound
