#include "delbound/codec.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "delbound/errors.hpp"

namespace delbound {

std::string_view to_string(Side side) { return side == Side::Left ? "LEFT" : "RIGHT"; }

Side parse_side(std::string_view text) {
  if (text == "LEFT" || text == "L") return Side::Left;
  if (text == "RIGHT" || text == "R") return Side::Right;
  throw DomainError("unknown side '" + std::string(text) + "'");
}

int EdgeParameter::a() const {
  int n = 0;
  for (Side s : gap_sides) n += s == Side::Left;
  return n;
}

int EdgeParameter::b() const { return s() - a(); }

int EdgeParameter::l() const {
  int total = 0;
  for (const auto& w : intervals) total += static_cast<int>(w.size());
  return total;
}

std::vector<InsertTriple> EdgeParameter::triples() const {
  std::vector<InsertTriple> out;
  out.reserve(gap_sides.size());
  for (std::size_t i = 0; i < gap_sides.size(); ++i) out.push_back({gap_sides[i], offsets[i], intervals[i + 1]});
  return out;
}

EdgeParameter EdgeParameter::from_triples(const QaryString& z0, std::span<const InsertTriple> triples) {
  EdgeParameter p;
  p.intervals.push_back(z0);
  for (const auto& t : triples) {
    p.gap_sides.push_back(t.side);
    p.offsets.push_back(t.offset);
    p.intervals.push_back(t.interval);
  }
  return p;
}

void EdgeParameter::validate(int q) const {
  check_alphabet(q);
  if (offsets.size() != gap_sides.size() || intervals.size() != gap_sides.size() + 1)
    throw DomainError("edge parameter: component lengths disagree");
  for (Symbol d : offsets)
    if (d == 0 || d >= q) throw DomainError("edge parameter: offset outside [1, q-1]");
  for (const auto& w : intervals) {
    if (w.q() != q) throw DomainError("edge parameter: interval over a different alphabet");
    if (is_alternating(w)) throw DomainError("edge parameter: interval '" + w.str() + "' is alternating");
  }
}

std::pair<QaryString, QaryString> insert_step(const InsertTriple& t) {
  if (t.interval.empty()) throw DomainError("insert_step: empty interval has no head");
  const int q = t.interval.q();
  if (t.offset == 0 || t.offset >= q) throw DomainError("insert_step: offset outside [1, q-1]");
  QaryString widened(q);
  widened.push_back(static_cast<Symbol>((t.offset + t.interval.head()) % q));
  widened += t.interval;
  if (t.side == Side::Left) return {widened, t.interval};
  return {t.interval, widened};
}

std::pair<QaryString, QaryString> construct(const QaryString& z0, std::span<const InsertTriple> triples) {
  QaryString x = z0, y = z0;
  for (const auto& t : triples) {
    auto [u, v] = insert_step(t);
    x += u;
    y += v;
  }
  return {x, y};
}

std::pair<QaryString, QaryString> construct(const EdgeParameter& p) {
  const auto t = p.triples();
  return construct(p.z0(), t);
}

MatchResult match(const QaryString& x, const QaryString& y) {
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
  return {x.substr(0, k), x.substr(k, x.size() - k), y.substr(k, y.size() - k)};
}

DeleteResult delete_step(const QaryString& x, const QaryString& y) {
  if (x.empty() || y.empty()) throw DomainError("delete_step: both strings must be nonempty");
  if (x.head() == y.head()) throw DomainError("delete_step: heads must differ");
  const int q = x.q();
  const Symbol g = static_cast<Symbol>((x.head() + q - y.head()) % q);
  MatchResult drop_x = match(x.tail(), y);
  MatchResult drop_y = match(x, y.tail());
  if (drop_x.prefix.size() == drop_y.prefix.size())
    throw AmbiguousDeletion("delete_step: both deletions match " + std::to_string(drop_x.prefix.size()) +
                            " symbols for (" + x.str() + ", " + y.str() + ")");
  if (drop_x.prefix.size() > drop_y.prefix.size())
    return {{Side::Left, g, std::move(drop_x.prefix)}, std::move(drop_x.rest_x), std::move(drop_x.rest_y)};
  return {{Side::Right, static_cast<Symbol>((q - g) % q), std::move(drop_y.prefix)}, std::move(drop_y.rest_x),
          std::move(drop_y.rest_y)};
}

DecodedEdge deconstruct(const QaryString& x, const QaryString& y, std::vector<DeleteResult>* trace,
                        const DeleteStepFn& step) {
  MatchResult m = match(x, y);
  DecodedEdge out{std::move(m.prefix), {}};
  QaryString rx = std::move(m.rest_x), ry = std::move(m.rest_y);
  while (!rx.empty() && !ry.empty()) {
    DeleteResult r;
    try {
      r = step(rx, ry);
    } catch (const AmbiguousDeletion& e) {
      throw NotDeconstructable(e.what());
    }
    if (trace) trace->push_back(r);
    out.triples.push_back(r.triple);
    rx = std::move(r.rest_x);
    ry = std::move(r.rest_y);
  }
  if (!rx.empty() || !ry.empty())
    throw NotDeconstructable("deconstruct: leftover '" + rx.str() + "' / '" + ry.str() + "' after the last step");
  return out;
}

std::string format_trace_line(const DeleteResult& r) {
  std::ostringstream os;
  os << to_string(r.triple.side) << ' ' << int(r.triple.offset) << ' ' << r.triple.interval << " | " << r.rest_x << ' '
     << r.rest_y;
  return os.str();
}

std::string format_decoded(const DecodedEdge& e) {
  std::ostringstream os;
  os << "z0=" << e.z0;
  for (const auto& t : e.triples) os << "; " << to_string(t.side) << ' ' << int(t.offset) << ' ' << t.interval;
  return os.str();
}

DecodedEdge parse_decoded(std::string_view text, int q) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : text) {
    if (ch == ';' || ch == '\n') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
  };
  DecodedEdge out;
  bool have_z0 = false;
  for (auto& f : fields) {
    f = trim(f);
    if (f.empty()) continue;
    if (!have_z0) {
      if (f.rfind("z0=", 0) != 0) throw DomainError("parameter text must start with 'z0='");
      out.z0 = QaryString::parse(f.substr(3), q);
      have_z0 = true;
      continue;
    }
    std::istringstream is(f);
    std::string side, interval;
    int offset = -1;
    if (!(is >> side >> offset >> interval)) throw DomainError("malformed triple '" + f + "'");
    if (offset < 1 || offset >= q) throw DomainError("triple offset outside [1, q-1]: '" + f + "'");
    out.triples.push_back({parse_side(side), static_cast<Symbol>(offset), QaryString::parse(interval, q)});
  }
  if (!have_z0) throw DomainError("empty parameter text");
  return out;
}

BigInt parameter_count_closed(int q, int l, int a, int b) {
  check_alphabet(q);
  if (l < 0 || a < 0 || b < 0) throw DomainError("parameter count: negative argument");
  const int s = a + b;
  BigInt strings = 0;
  CompositionEnumerator it(s + 1, l, 2);
  std::vector<int> parts;
  while (it.next(parts)) {
    BigInt prod = 1;
    for (int c : parts) prod *= ipow(q, c) - q * (q - 1);
    strings += prod;
  }
  return binom(s, a) * ipow(q - 1, s) * strings;
}

void for_each_parameter(int q, int l, int a, int b, const std::function<void(const EdgeParameter&)>& visit,
                        const EnumerationCaps& caps) {
  const BigInt expected = parameter_count_closed(q, l, a, b);
  if (expected > caps.max_strings)
    throw ResourceError("parameter set P(" + std::to_string(q) + "," + std::to_string(l) + "," + std::to_string(a) +
                            "," + std::to_string(b) + ") is too large to enumerate",
                        expected > UINT64_MAX ? UINT64_MAX : expected.convert_to<std::uint64_t>(), caps.max_strings);
  const int s = a + b;

  // Non-alternating strings of each length, in base-q order.
  std::vector<std::vector<QaryString>> pool(static_cast<std::size_t>(l) + 1);
  for (int len = 2; len <= l; ++len)
    for (auto& w : all_strings(q, static_cast<std::size_t>(len)))
      if (!is_alternating(w)) pool[static_cast<std::size_t>(len)].push_back(std::move(w));

  std::vector<std::vector<int>> compositions;
  {
    CompositionEnumerator it(s + 1, l, 0);
    std::vector<int> parts;
    while (it.next(parts)) {
      bool usable = true;
      for (int c : parts) usable = usable && c >= 2;
      if (usable) compositions.push_back(parts);
    }
  }

  EdgeParameter p;
  p.gap_sides.resize(static_cast<std::size_t>(s));
  p.offsets.resize(static_cast<std::size_t>(s));
  p.intervals.resize(static_cast<std::size_t>(s) + 1);

  // Gap subsets as bitmasks: increasing numeric order is colex order.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    if (std::popcount(mask) != a) continue;
    for (int i = 0; i < s; ++i) p.gap_sides[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Side::Left : Side::Right;

    std::vector<Symbol> offsets(static_cast<std::size_t>(s), 1);
    while (true) {
      p.offsets = offsets;
      for (const auto& parts : compositions) {
        std::vector<std::size_t> pick(parts.size(), 0);
        while (true) {
          for (std::size_t i = 0; i < parts.size(); ++i)
            p.intervals[i] = pool[static_cast<std::size_t>(parts[i])][pick[i]];
          visit(p);
          std::size_t i = parts.size();
          while (i-- > 0) {
            if (++pick[i] < pool[static_cast<std::size_t>(parts[i])].size()) break;
            pick[i] = 0;
          }
          if (i == static_cast<std::size_t>(-1)) break;
        }
      }
      std::size_t i = offsets.size();
      while (i-- > 0) {
        if (++offsets[i] < q) break;
        offsets[i] = 1;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
}

std::vector<EdgeParameter> enumerate_parameters(int q, int l, int a, int b, const EnumerationCaps& caps) {
  std::vector<EdgeParameter> out;
  for_each_parameter(q, l, a, b, [&](const EdgeParameter& p) { out.push_back(p); }, caps);
  return out;
}

std::uint64_t constructable_edge_count(int q, int l, int a, int b, const EnumerationCaps& caps) {
  std::uint64_t count = 0;
  for_each_parameter(q, l, a, b, [&](const EdgeParameter&) { ++count; }, caps);
  if (BigInt(count) != parameter_count_closed(q, l, a, b))
    throw std::logic_error("parameter enumeration disagrees with the closed-form count");
  return count;
}

}  // namespace delbound
