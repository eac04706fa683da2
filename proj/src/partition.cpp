#include "modmaj/partition.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

namespace modmaj {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw std::invalid_argument("bad partition \"" + std::string(whole) + "\"");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(prefix));
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = trim(text.substr(start, comma - start));
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token, text));
    } else {
      int part = parse_int(trim(token.substr(0, caret)), text);
      int times = parse_int(trim(token.substr(caret + 1)), text);
      if (times < 1) throw std::invalid_argument("bad exponent in \"" + std::string(text) + "\"");
      parts.insert(parts.end(), static_cast<std::size_t>(times), part);
    }
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::hook(int n, int leg) {
  if (n < 1 || leg < 0 || leg >= n) throw std::invalid_argument("bad hook shape");
  std::vector<int> parts{n - leg};
  parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int width, int height) {
  if (width < 0 || height < 0) throw std::invalid_argument("bad rectangle");
  if (width == 0 || height == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

int Partition::row(int b) const {
  return (b >= 1 && b <= length()) ? parts_[static_cast<std::size_t>(b - 1)] : 0;
}

int Partition::column(int a) const {
  if (a < 1) return 0;
  int count = 0;
  for (int part : parts_) {
    if (part < a) break;
    ++count;
  }
  return count;
}

bool Partition::contains(Cell c) const {
  return c.b >= 1 && c.b <= length() && c.a >= 1 && c.a <= row(c.b);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int b = 1; b <= inner.length(); ++b) {
    if (inner.row(b) > row(b)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  const int width = empty() ? 0 : parts_.front();
  cols.reserve(static_cast<std::size_t>(width));
  for (int a = 1; a <= width; ++a) cols.push_back(column(a));
  return Partition(std::move(cols));
}

bool Partition::is_rectangle() const {
  return empty() || parts_.front() == parts_.back();
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int b = 1; b <= length(); ++b) {
    for (int a = 1; a <= row(b); ++a) out.push_back({a, b});
  }
  return out;
}

int Partition::hook_length(Cell c) const {
  if (!contains(c)) throw std::invalid_argument("cell outside the diagram");
  const int arm = row(c.b) - c.a + 1;
  const int leg = column(c.a) - c.b + 1;
  return arm + leg - 1;
}

std::vector<int> Partition::hook_lengths() const {
  std::vector<int> cols = conjugate().parts();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int b = 1; b <= length(); ++b) {
    for (int a = 1; a <= row(b); ++a) {
      out.push_back((row(b) - a) + (cols[static_cast<std::size_t>(a - 1)] - b) + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Partition::opposite_hook_lengths() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const Cell& c : cells()) out.push_back(opposite_hook_length(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<int> prefix;
  enumerate(n, n, prefix, visit);
}

BigInt dimension(const Partition& shape) {
  BigInt hooks = 1;
  for (int h : shape.hook_lengths()) hooks *= h;
  return exact_quotient(factorial(static_cast<unsigned>(shape.size())), hooks,
                        "hook length formula");
}

std::vector<RibbonStep> removable_ribbons(const Partition& shape, int ell) {
  if (ell < 1) throw std::invalid_argument("ribbon length must be >= 1");
  std::vector<RibbonStep> steps;
  const auto& rows = shape.parts();
  const auto cols = shape.conjugate().parts();
  const int len = shape.length();
  // Corner cell (i, j) in 0-based row/column; its rim hook runs from the end
  // of row i down to the bottom of column j.
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
      const int arm = rows[static_cast<std::size_t>(i)] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      if (arm + leg + 1 != ell) continue;
      std::vector<int> next(rows);
      for (int r = i; r < i + leg; ++r) {
        next[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(r + 1)] - 1;
      }
      next[static_cast<std::size_t>(i + leg)] = j;
      while (!next.empty() && next.back() == 0) next.pop_back();
      steps.push_back({Partition(std::move(next)), leg});
    }
  }
  return steps;
}

Partition ell_core(const Partition& shape, int ell) {
  if (ell < 1) throw std::invalid_argument("core modulus must be >= 1");
  const int len = shape.length();
  std::vector<int> beads_on_runner(static_cast<std::size_t>(ell), 0);
  for (int i = 0; i < len; ++i) {
    const int beta = shape.parts()[static_cast<std::size_t>(i)] + (len - 1 - i);
    ++beads_on_runner[static_cast<std::size_t>(beta % ell)];
  }
  std::vector<int> betas;
  betas.reserve(static_cast<std::size_t>(len));
  for (int runner = 0; runner < ell; ++runner) {
    for (int k = 0; k < beads_on_runner[static_cast<std::size_t>(runner)]; ++k) {
      betas.push_back(runner + k * ell);
    }
  }
  std::sort(betas.rbegin(), betas.rend());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = betas[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition ell_core_greedy(const Partition& shape, int ell, RemovalOrder order) {
  Partition current = shape;
  for (;;) {
    auto steps = removable_ribbons(current, ell);
    if (steps.empty()) return current;
    current = order == RemovalOrder::first ? steps.front().result : steps.back().result;
  }
}

bool is_ribbon(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) {
    throw std::invalid_argument("is_ribbon: inner shape does not fit in outer shape");
  }
  std::set<std::pair<int, int>> skew;
  for (int b = 1; b <= outer.length(); ++b) {
    for (int a = inner.row(b) + 1; a <= outer.row(b); ++a) skew.insert({a, b});
  }
  if (skew.empty()) return false;
  auto in = [&](int a, int b) { return skew.count({a, b}) > 0; };
  for (auto [a, b] : skew) {
    if (in(a + 1, b) && in(a, b + 1) && in(a + 1, b + 1)) return false;
  }
  std::set<std::pair<int, int>> seen{*skew.begin()};
  std::vector<std::pair<int, int>> frontier{*skew.begin()};
  while (!frontier.empty()) {
    auto [a, b] = frontier.back();
    frontier.pop_back();
    const std::pair<int, int> nbrs[] = {{a + 1, b}, {a - 1, b}, {a, b + 1}, {a, b - 1}};
    for (const auto& nb : nbrs) {
      if (in(nb.first, nb.second) && seen.insert(nb).second) frontier.push_back(nb);
    }
  }
  return seen.size() == skew.size();
}

std::vector<int> diagonal_fibers(const Partition& shape) {
  std::vector<int> fibers;
  for (const Cell& c : shape.cells()) {
    const auto i = static_cast<std::size_t>(Partition::opposite_hook_length(c));
    if (fibers.size() < i) fibers.resize(i, 0);
    ++fibers[i - 1];
  }
  return fibers;
}

int diagonal_excess(const Partition& shape) {
  int max_op = 0;
  for (int b = 1; b <= shape.length(); ++b) max_op = std::max(max_op, shape.row(b) + b - 1);
  return shape.size() - max_op;
}

int capped_excess(const Partition& shape) {
  const int n = shape.size();
  const int excess = diagonal_excess(shape);
  return 2 * excess + 1 <= n ? excess : (n - 1) / 2;
}

namespace {

std::vector<int> tail_counts(const Partition& shape, std::size_t length) {
  auto fibers = diagonal_fibers(shape);
  fibers.resize(length, 0);
  std::vector<int> tails(length + 1, 0);
  for (std::size_t i = length; i-- > 0;) tails[i] = tails[i + 1] + fibers[i];
  return tails;
}

}  // namespace

DiagOrder diag_compare(const Partition& lhs, const Partition& rhs) {
  const std::size_t length =
      std::max(diagonal_fibers(lhs).size(), diagonal_fibers(rhs).size());
  const auto x = tail_counts(lhs, length);
  const auto y = tail_counts(rhs, length);
  bool leq = true;
  bool geq = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) leq = false;
    if (x[i] < y[i]) geq = false;
  }
  if (leq && geq) return DiagOrder::equivalent;
  if (leq) return DiagOrder::less_or_equal;
  if (geq) return DiagOrder::greater_or_equal;
  return DiagOrder::incomparable;
}

bool diag_leq(const Partition& lhs, const Partition& rhs) {
  const auto order = diag_compare(lhs, rhs);
  return order == DiagOrder::less_or_equal || order == DiagOrder::equivalent;
}

int staircase_peak(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("staircase_peak: empty partition");
  const auto fibers = diagonal_fibers(shape);
  int m = 0;
  while (static_cast<std::size_t>(m) < fibers.size() &&
         fibers[static_cast<std::size_t>(m)] == m + 1) {
    ++m;
  }
  return m;
}

const char* to_string(DiagOrder order) {
  switch (order) {
    case DiagOrder::less_or_equal: return "less-or-equal";
    case DiagOrder::greater_or_equal: return "greater-or-equal";
    case DiagOrder::equivalent: return "equivalent";
    case DiagOrder::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace modmaj
