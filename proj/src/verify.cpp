#include "modmaj/verify.hpp"

#include <stdexcept>

#include "modmaj/bounds.hpp"
#include "modmaj/characters.hpp"
#include "modmaj/modmaj.hpp"
#include "modmaj/numtheory.hpp"
#include "modmaj/qpoly.hpp"

namespace modmaj {

namespace {

constexpr std::size_t kMaxFailures = 20;

/// Accumulator filled by one shape's checks; merged in shape order.
struct ShapeOutcome {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::string> failures;
  std::optional<ShapeRecord> record;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++violations;
    if (failures.size() < kMaxFailures) failures.push_back(what);
  }
};

void merge(SuiteResult& into, ShapeOutcome&& part) {
  into.checks += part.checks;
  into.violations += part.violations;
  for (const auto& [key, value] : part.counters) into.counters[key] += value;
  for (auto& msg : part.failures) {
    if (into.failures.size() < kMaxFailures) into.failures.push_back(std::move(msg));
  }
  if (part.record) into.records.push_back(std::move(*part.record));
}

template <typename Fn>
SuiteResult per_shape(const std::string& suite, int n, const SweepOptions& options, Fn fn) {
  SuiteResult result;
  result.suite = suite;
  result.n = n;
  const auto shapes = partitions_of(n);
  result.shapes = shapes.size();
  auto outcomes = parallel_map(shapes, options.jobs, [&](const Partition& shape) {
    ShapeOutcome out;
    fn(shape, out);
    return out;
  });
  for (auto& o : outcomes) merge(result, std::move(o));
  return result;
}

std::string at(const Partition& shape) { return "λ=(" + shape.to_string() + ")"; }

/// #{c : h_c ≡ ±a (mod ℓ)}.
int pm_count(const Partition& shape, int ell, int a) {
  const int pos = ((a % ell) + ell) % ell;
  const int neg = (ell - pos) % ell;
  int count = 0;
  for (int h : shape.hook_lengths()) {
    const int x = h % ell;
    if (x == pos || x == neg) ++count;
  }
  return count;
}

/// #{a, -a (mod ℓ)}.
int pair_size(int ell, int a) {
  const int pos = ((a % ell) + ell) % ell;
  const int neg = ((-a % ell) + ell) % ell;
  return pos == neg ? 1 : 2;
}

bool fiber_pair_law(const Partition& shape, int ell) {
  const int s = shape.size() / ell;
  for (int a = 0; a < ell; ++a) {
    if (pm_count(shape, ell, a) != s * pair_size(ell, a)) return false;
  }
  return true;
}

void classification_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  const BigInt f = dimension(shape);
  const auto a = amod_by_qhook(shape);
  ShapeRecord record = make_record(shape, f, a);
  for (int r = 0; r < n; ++r) {
    const bool zero = a[r] == 0;
    out.expect(zero == expected_zero(shape, r),
               at(shape) + " r=" + std::to_string(r) + (zero ? " is zero" : " is nonzero") +
                   " against the prediction");
  }
  if (f < BigInt(n) * n * n) out.counters["census"] += 1;
  if (!record.zero_residues.empty() || !record.predicted_residues.empty()) {
    out.record = std::move(record);
  }
}

void census_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  if (dimension(shape) < BigInt(n) * n * n) out.counters["census"] += 1;
}

void residue_zero_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  const bool zero = amod_by_qhook(shape)[0] == 0;
  bool predicted = false;
  if (n > 1) {
    predicted = shape == Partition::hook(n, 1) ||
                (n % 2 == 1 && shape == Partition::hook(n, n - 2)) ||
                (n % 2 == 0 && shape == Partition::hook(n, n - 1));
  }
  out.expect(zero == predicted, at(shape) + " a_0 zero-ness differs from the r=0 list");
}

void agreement_check(const Partition& shape, ShapeOutcome& out, std::uint64_t budget) {
  const int n = shape.size();
  const auto q = amod_by_qhook(shape);
  out.expect(q == amod_by_character_formula(shape), at(shape) + " q-hook vs character formula");
  if (dimension(shape) <= BigInt(std::to_string(budget))) {
    out.counters["enumerated"] += 1;
    out.expect(q == amod_by_enumeration(shape, budget), at(shape) + " q-hook vs enumeration");
  }
  for (int r = 0; r < n; ++r) {
    const int g = static_cast<int>(numtheory::gcd(n, r));
    out.expect(q[r] == q[g], at(shape) + " gcd law at r=" + std::to_string(r));
  }
  const auto qt = amod_by_qhook(shape.conjugate());
  const int shift = n * (n - 1) / 2;
  for (int r = 0; r < n; ++r) {
    out.expect(q[r] == qt[shift - r], at(shape) + " transpose symmetry at r=" + std::to_string(r));
  }
}

void characters_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  const auto a = amod_by_qhook(shape);
  for (auto ell64 : numtheory::divisors(n)) {
    const int ell = static_cast<int>(ell64);
    const std::string where = at(shape) + " ℓ=" + std::to_string(ell);
    const BigInt chi = rect_character(shape, ell);
    const BigInt mn = mn_character(shape, rectangular_cycle_type(n, ell));
    out.expect(chi == mn, where + " hook quotient " + chi.get_str() + " vs MN " + mn.get_str());

    const bool nonzero = mn != 0;
    const bool core_empty = ell_core(shape, ell).empty();
    int divisible = 0;
    for (int h : shape.hook_lengths()) divisible += h % ell == 0 ? 1 : 0;
    const bool count_ok = divisible == n / ell;
    const bool pairs_ok = fiber_pair_law(shape, ell);
    out.expect(nonzero == core_empty && core_empty == count_ok && count_ok == pairs_ok,
               where + " equivalent conditions disagree");
    if (core_empty) {
      out.expect(rect_character_sign(shape, ell, RemovalOrder::first) ==
                     rect_character_sign(shape, ell, RemovalOrder::last),
                 where + " greedy sign depends on removal order");
    }
    // χ^λ((n/s)^s) = sum_{r | n} a_{λ,r} c_{n/r}(s) with n/s = ℓ.
    const int s = n / ell;
    BigInt rhs = 0;
    for (auto r : numtheory::divisors(n)) {
      rhs += a[static_cast<int>(r)] * static_cast<long>(numtheory::ramanujan_sum(n / r, s));
    }
    out.expect(mn == rhs, where + " cyclic exponent evaluation");
  }
}

void fiber_laws_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  for (int ell = 1; ell <= n; ++ell) {
    const std::string where = at(shape) + " ℓ=" + std::to_string(ell);
    const Partition core = ell_core(shape, ell);
    out.expect(core == ell_core_greedy(shape, ell, RemovalOrder::first) &&
                   core == ell_core_greedy(shape, ell, RemovalOrder::last),
               where + " abacus core differs from greedy removal");
    if (n % ell == 0 && core.empty()) {
      out.expect(fiber_pair_law(shape, ell), where + " fiber-pair law");
    }
    for (const auto& step : removable_ribbons(shape, ell)) {
      out.expect(shape.size() - step.result.size() == ell && is_ribbon(shape, step.result),
                 where + " removed cells are not a ribbon");
      for (int a = 0; a < ell; ++a) {
        out.expect(pm_count(shape, ell, a) - pm_count(step.result, ell, a) == pair_size(ell, a),
                   where + " ribbon step to (" + step.result.to_string() + ") at a=" +
                       std::to_string(a));
      }
    }
  }
}

void structure_check(const Partition& shape, ShapeOutcome& out) {
  const int n = shape.size();
  const auto hooks = shape.hook_lengths();
  const auto ops = shape.opposite_hook_lengths();
  long hook_sum = 0;
  long op_sum = 0;
  BigInt hook_prod = 1;
  BigInt op_prod = 1;
  for (int h : hooks) { hook_sum += h; hook_prod *= h; }
  for (int h : ops) { op_sum += h; op_prod *= h; }
  out.expect(hook_sum == op_sum, at(shape) + " hook sums differ");
  out.expect(op_prod >= hook_prod, at(shape) + " opposite hook product below hook product");
  out.expect((op_prod == hook_prod) == shape.is_rectangle(),
             at(shape) + " product equality does not match rectangularity");

  const auto fibers = diagonal_fibers(shape);
  const int m = staircase_peak(shape);
  bool shape_ok = m >= 1;
  for (std::size_t i = static_cast<std::size_t>(m); i < fibers.size(); ++i) {
    if (fibers[i] > fibers[i - 1]) shape_ok = false;
  }
  out.expect(shape_ok, at(shape) + " fibers are not 1<2<...<m>=...");
  int staircase = 0;
  while (staircase < shape.length() && shape.row(staircase + 1) >= 1) {
    const int k = staircase + 1;
    bool fits = true;
    for (int b = 1; b <= k; ++b) fits = fits && shape.row(b) >= k + 1 - b;
    if (!fits) break;
    staircase = k;
  }
  out.expect(staircase == m, at(shape) + " peak differs from the largest staircase");

  const int capped = capped_excess(shape);
  out.expect(diag_leq(shape, Partition::hook(n, capped)),
             at(shape) + " not below the hook with capped excess " + std::to_string(capped));
}

/// Opposite-hook products respect the diagonal preorder, over all comparable
/// pairs of one size.
void preorder_product_check(int n, SuiteResult& result) {
  const auto shapes = partitions_of(n);
  std::vector<BigInt> products;
  for (const auto& shape : shapes) {
    BigInt p = 1;
    for (int h : shape.opposite_hook_lengths()) p *= h;
    products.push_back(std::move(p));
  }
  std::vector<std::vector<int>> tails;
  for (const auto& shape : shapes) {
    auto fibers = diagonal_fibers(shape);
    fibers.resize(static_cast<std::size_t>(n), 0);
    std::vector<int> t(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = static_cast<std::size_t>(n); i-- > 0;) t[i] = t[i + 1] + fibers[i];
    tails.push_back(std::move(t));
  }
  for (std::size_t x = 0; x < shapes.size(); ++x) {
    for (std::size_t y = 0; y < shapes.size(); ++y) {
      bool leq = true;
      for (std::size_t i = 0; i < tails[x].size() && leq; ++i) leq = tails[x][i] <= tails[y][i];
      if (!leq) continue;
      ++result.checks;
      if (products[x] <= products[y]) continue;
      ++result.violations;
      if (result.failures.size() < kMaxFailures) {
        result.failures.push_back(at(shapes[x]) + " <=diag (" + shapes[y].to_string() +
                                  ") but its opposite hook product is larger");
      }
    }
  }
}

SuiteResult ramanujan_suite(int n) {
  SuiteResult result;
  result.suite = "ramanujan";
  result.n = n;
  const auto j = static_cast<numtheory::Int>(n);
  for (numtheory::Int s = -2 * j; s <= 2 * j; ++s) {
    const auto c = numtheory::ramanujan_sum(j, s);
    const std::string where = "c_" + std::to_string(j) + "(" + std::to_string(s) + ")";
    ++result.checks;
    bool ok = c == numtheory::ramanujan_sum_oracle(j, s) &&
              c == numtheory::ramanujan_sum(j, numtheory::gcd(j, s)) &&
              (c < 0 ? -c : c) <= numtheory::totient(j);
    if (!ok) {
      ++result.violations;
      if (result.failures.size() < kMaxFailures) result.failures.push_back(where);
    }
  }
  ++result.checks;
  if (!numtheory::ramanujan_matrix_square(j).is_scalar(j)) {
    ++result.violations;
    result.failures.push_back("C^2 != " + std::to_string(n) + " I");
  }
  return result;
}

SuiteResult bound_suite(const std::string& suite, int n, const SweepOptions& options) {
  return per_shape(suite, n, options, [&](const Partition& shape, ShapeOutcome& out) {
    const ShapeData data = analyze(shape);
    if (suite == "fl") {
      for (const auto& [ell, chi] : data.rect_chars) {
        out.expect(fl_bound_check(shape, ell, chi, data.f),
                   at(shape) + " ℓ=" + std::to_string(ell) + " character bound");
      }
    } else if (suite == "fl-log") {
      out.expect(fl_log_check(data), at(shape) + " logarithmic character bound");
    } else if (suite == "equidist") {
      out.expect(equidistribution_check(data), at(shape) + " 2n^{3/2}/sqrt(f) bound");
    } else if (suite == "dist") {
      if (auto verdict = dist_check(data)) {
        out.counters["applicable"] += 1;
        out.expect(*verdict, at(shape) + " 1/n^2 bound with f >= n^5");
      }
    } else if (suite == "phi-d") {
      for (int d : {1, 2}) {
        if (auto verdict = phi_d_check(data, d)) {
          out.counters["applicable_d" + std::to_string(d)] += 1;
          out.expect(*verdict, at(shape) + " d=" + std::to_string(d) + " conclusion");
        }
      }
    } else if (suite == "n-cubed") {
      if (n_cubed_criterion(data)) out.counters["applicable"] += 1;
      out.expect(n_cubed_check(data), at(shape) + " f >= n^3 but some a_r = 0");
    } else if (suite == "excess") {
      out.expect(excess_binomial_check(data), at(shape) + " capped excess lower bound");
    } else if (suite == "a1-gap") {
      out.expect(first_residue_gap_check(data), at(shape) + " a_1 gap");
    }
  });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{
      "classification", "fdim-census", "residue-zero", "agreement",
      "characters",     "fiber-laws",  "structure", "ramanujan"};
  return names;
}

const std::vector<std::string>& bound_suites() {
  static const std::vector<std::string> names{"fl",    "fl-log",  "equidist", "dist",
                                              "phi-d", "n-cubed", "excess",   "a1-gap"};
  return names;
}

ShapeRecord make_record(const Partition& shape, const BigInt& f, const ModularClassVector& a) {
  ShapeRecord record{shape, f, a, a.zero_residues(), {}, {}};
  for (int r = 0; r < a.n; ++r) {
    if (expected_zero(shape, r)) record.predicted_residues.push_back(r);
  }
  record.flags["classification_ok"] = record.zero_residues == record.predicted_residues;
  record.flags["f_at_least_n_cubed"] = f >= BigInt(a.n) * a.n * a.n;
  return record;
}

SuiteResult run_suite(const std::string& suite, int n, const SweepOptions& options) {
  if (n < 1) throw std::invalid_argument("run_suite: n must be >= 1");
  if (suite == "classification") return per_shape(suite, n, options, classification_check);
  if (suite == "fdim-census") return per_shape(suite, n, options, census_check);
  if (suite == "residue-zero") return per_shape(suite, n, options, residue_zero_check);
  if (suite == "agreement") {
    return per_shape(suite, n, options, [&](const Partition& shape, ShapeOutcome& out) {
      agreement_check(shape, out, options.enumeration_budget);
    });
  }
  if (suite == "characters") return per_shape(suite, n, options, characters_check);
  if (suite == "fiber-laws") return per_shape(suite, n, options, fiber_laws_check);
  if (suite == "structure") {
    SuiteResult result = per_shape(suite, n, options, structure_check);
    preorder_product_check(n, result);
    return result;
  }
  if (suite == "ramanujan") return ramanujan_suite(n);
  for (const auto& name : bound_suites()) {
    if (suite == name) return bound_suite(suite, n, options);
  }
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

TheoremReport verify_main_theorem(int n_max, int jobs) {
  if (n_max < 1) throw std::invalid_argument("verify_main_theorem: n_max must be >= 1");
  TheoremReport report;
  report.n_max = n_max;
  SweepOptions options;
  options.jobs = jobs;
  for (int n = 1; n <= n_max; ++n) {
    SuiteResult result = run_suite("classification", n, options);
    report.shapes += result.shapes;
    report.mismatches += result.violations;
    report.small_dimension_shapes += result.counters["census"];
    for (auto& record : result.records) {
      if (!record.flags["classification_ok"]) report.mismatch_records.push_back(record);
      report.exception_records.push_back(std::move(record));
    }
  }
  return report;
}

}  // namespace modmaj
