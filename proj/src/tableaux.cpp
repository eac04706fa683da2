#include "modmaj/tableaux.hpp"

#include <stdexcept>
#include <utility>

namespace modmaj {

const BigInt& ModularClassVector::operator[](int r) const {
  const int idx = ((r % n) + n) % n;
  return counts[static_cast<std::size_t>(idx)];
}

BigInt ModularClassVector::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::vector<int> ModularClassVector::zero_residues() const {
  std::vector<int> out;
  for (int r = 0; r < n; ++r) {
    if (counts[static_cast<std::size_t>(r)] == 0) out.push_back(r);
  }
  return out;
}

StandardTableau::StandardTableau(Partition shape, std::vector<int> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.size()) {
    throw std::invalid_argument("row word length differs from shape size");
  }
  std::vector<int> filled(static_cast<std::size_t>(shape_.length()), 0);
  columns_.reserve(rows_.size());
  for (int row : rows_) {
    if (row < 1 || row > shape_.length()) throw std::invalid_argument("row out of range");
    auto& here = filled[static_cast<std::size_t>(row - 1)];
    if (here >= shape_.row(row)) throw std::invalid_argument("row overfilled");
    if (row > 1 && filled[static_cast<std::size_t>(row - 2)] <= here) {
      throw std::invalid_argument("column condition violated");
    }
    ++here;
    columns_.push_back(here);
  }
}

int StandardTableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::invalid_argument("cell outside the tableau");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] == c.b && columns_[k] == c.a) return static_cast<int>(k) + 1;
  }
  throw InternalError("tableau cell without an entry");
}

SytStream::SytStream(Partition shape)
    : shape_(std::move(shape)),
      word_(static_cast<std::size_t>(shape_.size()), 0),
      filled_(static_cast<std::size_t>(shape_.length()), 0) {}

bool SytStream::fits(int row) const {
  const auto r = static_cast<std::size_t>(row);
  if (filled_[r] >= shape_.parts()[r]) return false;
  return row == 0 || filled_[r - 1] > filled_[r];
}

void SytStream::place(std::size_t from) {
  for (std::size_t k = from; k < word_.size(); ++k) {
    int row = 0;
    while (!fits(row)) ++row;
    word_[k] = row + 1;
    ++filled_[static_cast<std::size_t>(row)];
  }
}

bool SytStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    place(0);
    return true;
  }
  for (std::size_t k = word_.size(); k-- > 0;) {
    const int row = word_[k] - 1;
    --filled_[static_cast<std::size_t>(row)];
    for (int alt = row + 1; alt < shape_.length(); ++alt) {
      if (!fits(alt)) continue;
      word_[k] = alt + 1;
      ++filled_[static_cast<std::size_t>(alt)];
      place(k + 1);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  SytStream stream(shape);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::vector<int> descent_set(const StandardTableau& t) {
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) out.push_back(i);
  }
  return out;
}

int maj(const StandardTableau& t) {
  int total = 0;
  for (int i : descent_set(t)) total += i;
  return total;
}

StandardTableau transpose(const StandardTableau& t) {
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(t.size()));
  for (int k = 1; k <= t.size(); ++k) rows.push_back(t.column_of(k));
  return StandardTableau(t.shape().conjugate(), std::move(rows));
}

namespace {

void check_budget(const Partition& shape, std::uint64_t budget) {
  const BigInt f = dimension(shape);
  if (f > BigInt(std::to_string(budget))) {
    throw BudgetExceeded("shape " + shape.to_string() + " has " + f.get_str() +
                         " tableaux, over the enumeration budget of " +
                         std::to_string(budget));
  }
}

int word_maj(const std::vector<int>& word) {
  int total = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] > word[i - 1]) total += static_cast<int>(i);
  }
  return total;
}

}  // namespace

ModularClassVector amod_by_enumeration(const Partition& shape, std::uint64_t budget) {
  if (shape.empty()) throw std::invalid_argument("amod_by_enumeration: empty shape");
  check_budget(shape, budget);
  const int n = shape.size();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  SytStream stream(shape);
  while (stream.next()) ++counts[static_cast<std::size_t>(word_maj(stream.row_word()) % n)];
  ModularClassVector out{n, {}};
  for (auto c : counts) out.counts.emplace_back(std::to_string(c));
  return out;
}

std::vector<BigInt> maj_counts_by_enumeration(const Partition& shape, std::uint64_t budget) {
  check_budget(shape, budget);
  const int n = shape.size();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  SytStream stream(shape);
  while (stream.next()) ++counts[static_cast<std::size_t>(word_maj(stream.row_word()))];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  std::vector<BigInt> out;
  for (auto c : counts) out.emplace_back(std::to_string(c));
  return out;
}

}  // namespace modmaj
