#include "delbound/qstring.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "delbound/errors.hpp"

namespace delbound {

void check_alphabet(int q) {
  if (q < 2 || q > kMaxAlphabet)
    throw DomainError("alphabet size must be in [2, 256], got " + std::to_string(q));
}

QaryString::QaryString(int q) : q_(q) { check_alphabet(q); }

QaryString::QaryString(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q);
  for (Symbol s : symbols_)
    if (s >= q) throw DomainError("symbol " + std::to_string(s) + " outside [q] for q=" + std::to_string(q));
}

QaryString QaryString::parse(std::string_view text, int q) {
  check_alphabet(q);
  QaryString out(q);
  if (text.empty() || text == "-") return out;
  auto bad = [&] { return DomainError("malformed string '" + std::string(text) + "' for q=" + std::to_string(q)); };
  if (q <= 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw bad();
      const int v = ch - '0';
      if (v >= q) throw bad();
      out.symbols_.push_back(static_cast<Symbol>(v));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int v = -1;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v < 0 || v >= q) throw bad();
    out.symbols_.push_back(static_cast<Symbol>(v));
    pos = comma + 1;
  }
  return out;
}

QaryString QaryString::from_rank(std::uint64_t rank, std::size_t length, int q) {
  check_alphabet(q);
  std::vector<Symbol> s(length);
  for (std::size_t i = length; i-- > 0;) {
    s[i] = static_cast<Symbol>(rank % static_cast<std::uint64_t>(q));
    rank /= static_cast<std::uint64_t>(q);
  }
  if (rank != 0) throw DomainError("rank out of range for the requested length");
  QaryString out(q);
  out.symbols_ = std::move(s);
  return out;
}

Symbol QaryString::head() const {
  if (symbols_.empty()) throw DomainError("head of empty string");
  return symbols_.front();
}

QaryString QaryString::tail() const {
  if (symbols_.empty()) throw DomainError("tail of empty string");
  return substr(1, symbols_.size() - 1);
}

QaryString QaryString::substr(std::size_t pos, std::size_t len) const {
  QaryString out(q_);
  const std::size_t end = std::min(symbols_.size(), pos + len);
  if (pos < end) out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     symbols_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

QaryString QaryString::reversed() const {
  QaryString out = *this;
  std::reverse(out.symbols_.begin(), out.symbols_.end());
  return out;
}

std::uint64_t QaryString::rank() const { return rank_of(symbols_, q_); }

std::string QaryString::str() const {
  if (symbols_.empty()) return "-";
  std::string out;
  if (q_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

void QaryString::push_back(Symbol s) {
  if (s >= q_) throw DomainError("symbol outside alphabet");
  symbols_.push_back(s);
}

QaryString& QaryString::operator+=(const QaryString& other) {
  if (other.q_ != q_) throw DomainError("concatenating strings over different alphabets");
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QaryString& x) { return os << x.str(); }

std::uint64_t rank_of(std::span<const Symbol> x, int q) {
  std::uint64_t r = 0;
  for (Symbol s : x) r = r * static_cast<std::uint64_t>(q) + s;
  return r;
}

bool next_string(std::vector<Symbol>& x, int q) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] + 1 < q) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

std::vector<QaryString> all_strings(int q, std::size_t n) {
  check_alphabet(q);
  std::vector<QaryString> out;
  std::vector<Symbol> x(n, 0);
  do {
    out.emplace_back(q, x);
  } while (next_string(x, q));
  return out;
}

bool is_alternating(std::span<const Symbol> x) {
  if (x.size() < 2) return true;
  if (x[0] == x[1]) return false;
  for (std::size_t i = 2; i < x.size(); ++i)
    if (x[i] != x[i - 2]) return false;
  return true;
}

std::uint64_t alternating_count(int q, int n) {
  check_alphabet(q);
  if (n < 0) throw DomainError("alternating_count: negative length");
  if (n == 0) return 1;
  if (n == 1) return static_cast<std::uint64_t>(q);
  return static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q - 1);
}

std::size_t run_count(std::span<const Symbol> x) {
  if (x.empty()) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] != x[i - 1]) ++r;
  return r;
}

std::size_t longest_alternating_interval(std::span<const Symbol> x) {
  if (x.empty()) return 0;
  std::size_t best = 1, cur = 1;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] == x[i - 1])
      cur = 1;
    else if (cur >= 2 && x[i] == x[i - 2])
      ++cur;
    else
      cur = 2;
    best = std::max(best, cur);
  }
  return best;
}

StringStats string_stats(std::span<const Symbol> x) {
  return {run_count(x), longest_alternating_interval(x)};
}

CompositionEnumerator::CompositionEnumerator(int t, int l, int k) : t_(t), l_(l), k_(k) {
  if (t < 1) throw DomainError("compositions need at least one part");
  if (l < 0 || k < 0) throw DomainError("compositions need l >= 0 and k >= 0");
  if (static_cast<long long>(k) * t > l) done_ = true;
}

bool CompositionEnumerator::next(std::vector<int>& parts) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_.assign(static_cast<std::size_t>(t_), k_);
    current_.back() = l_ - k_ * (t_ - 1);
    parts = current_;
    return true;
  }
  // Rightmost position that can grow by taking one unit from its suffix.
  int suffix = current_.back();
  for (int i = t_ - 2; i >= 0; --i) {
    const int slots = t_ - 1 - i;
    if (suffix - 1 >= k_ * slots) {
      ++current_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t_ - 1; ++j) current_[static_cast<std::size_t>(j)] = k_;
      current_.back() = suffix - 1 - k_ * (slots - 1);
      parts = current_;
      return true;
    }
    suffix += current_[static_cast<std::size_t>(i)];
  }
  done_ = true;
  return false;
}

std::vector<Composition> enumerate_compositions(int t, int l, int k) {
  std::vector<Composition> out;
  CompositionEnumerator it(t, l, k);
  std::vector<int> parts;
  while (it.next(parts)) out.push_back({parts, l, k});
  return out;
}

BigInt composition_count(int t, int l, int k) {
  if (t < 1) throw DomainError("composition_count: t must be >= 1");
  return binom(static_cast<std::int64_t>(l) + static_cast<std::int64_t>(1 - k) * t - 1, t - 1);
}

BigInt insertion_count(int q, int s, int n) {
  check_alphabet(q);
  if (s < 0 || n < 0) throw DomainError("insertion_count: negative argument");
  BigInt total = 0;
  for (int i = 0; i <= s; ++i) total += binom(n, i) * ipow(q - 1, i);
  return total;
}

BigInt runs_distribution(int q, int n, int r) {
  check_alphabet(q);
  if (r < 1 || r > n) return 0;
  return q * binom(n - 1, r - 1) * ipow(q - 1, r - 1);
}

}  // namespace delbound
