#include "modmaj/characters.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace modmaj {

namespace {

void require_divisor(int n, int ell) {
  if (ell < 1 || n % ell != 0) {
    throw std::invalid_argument(std::to_string(ell) + " does not divide " + std::to_string(n));
  }
}

class MnEvaluator {
 public:
  explicit MnEvaluator(const Partition& cycle_type) : cycles_(cycle_type.parts()) {}

  BigInt eval(const Partition& shape, std::size_t next) {
    if (next == cycles_.size()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape.parts(), next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (const auto& step : removable_ribbons(shape, cycles_[next])) {
      BigInt term = eval(step.result, next + 1);
      if (step.height % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_;
};

}  // namespace

BigInt mn_character(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size()) {
    throw std::invalid_argument("mn_character: shape size " + std::to_string(shape.size()) +
                                " differs from cycle type size " +
                                std::to_string(cycle_type.size()));
  }
  MnEvaluator evaluator(cycle_type);
  return evaluator.eval(shape, 0);
}

Partition rectangular_cycle_type(int n, int ell) {
  require_divisor(n, ell);
  return Partition::rectangle(ell, n / ell);
}

BigInt rect_character_magnitude(const Partition& shape, int ell) {
  const int n = shape.size();
  require_divisor(n, ell);
  if (!ell_core(shape, ell).empty()) return 0;
  BigInt numerator = 1;
  for (int i = ell; i <= n; i += ell) numerator *= i;
  BigInt denominator = 1;
  int divisible_hooks = 0;
  for (int h : shape.hook_lengths()) {
    if (h % ell != 0) continue;
    denominator *= h;
    ++divisible_hooks;
  }
  if (divisible_hooks != n / ell) {
    throw InternalError("rect_character_magnitude: " + std::to_string(divisible_hooks) +
                        " hooks divisible by " + std::to_string(ell) + " in " +
                        shape.to_string() + ", expected " + std::to_string(n / ell));
  }
  return exact_quotient(numerator, denominator, "rect_character_magnitude");
}

int rect_character_sign(const Partition& shape, int ell, RemovalOrder order) {
  require_divisor(shape.size(), ell);
  int sign = 1;
  Partition current = shape;
  while (!current.empty()) {
    auto steps = removable_ribbons(current, ell);
    if (steps.empty()) {
      throw std::invalid_argument("rect_character_sign: " + shape.to_string() +
                                  " has a nonempty " + std::to_string(ell) + "-core");
    }
    const auto& step = order == RemovalOrder::first ? steps.front() : steps.back();
    if (step.height % 2 != 0) sign = -sign;
    current = step.result;
  }
  return sign;
}

BigInt rect_character(const Partition& shape, int ell) {
  BigInt magnitude = rect_character_magnitude(shape, ell);
  if (magnitude == 0) return 0;
  return rect_character_sign(shape, ell) * magnitude;
}

}  // namespace modmaj
