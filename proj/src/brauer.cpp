#include "jinv/brauer.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jinv {

BrauerModel::BrauerModel(FiniteAbelianGroup group, std::vector<std::int64_t> ind, std::int64_t prime)
    : group_(std::move(group)), ind_(std::move(ind)), prime_(prime) {
  if (ind_.size() != group_.order())
    throw std::invalid_argument("index map has " + std::to_string(ind_.size()) +
                                " entries but the group has order " + std::to_string(group_.order()));
  for (std::size_t i = 0; i < ind_.size(); ++i)
    if (ind_[i] < 1)
      throw std::invalid_argument("index of element " + std::to_string(i) + " must be positive");
  if (prime_ < 2) throw std::invalid_argument("prime must be >= 2");
}

BrauerModel BrauerModel::split(const FiniteAbelianGroup& group, std::int64_t prime) {
  return BrauerModel(group, std::vector<std::int64_t>(group.order(), 1), prime);
}

BrauerModel BrauerModel::uniform(const FiniteAbelianGroup& group, std::int64_t prime,
                                 std::int64_t index) {
  std::vector<std::int64_t> ind(group.order(), index);
  ind[group.label(group.identity())] = 1;
  return BrauerModel(group, std::move(ind), prime);
}

std::vector<std::string> validate(const BrauerModel& model) {
  std::vector<std::string> problems;
  const auto& g = model.group();
  const std::size_t order = g.order();
  const std::size_t zero = g.label(g.identity());
  if (model.ind(zero) != 1)
    problems.push_back("ind(0) = " + std::to_string(model.ind(zero)) + ", expected 1");
  for (std::size_t a = 0; a < order; ++a) {
    const auto ea = g.element(a);
    const std::size_t neg = g.label(g.negate(ea));
    if (neg > a && model.ind(a) != model.ind(neg)) {
      problems.push_back("ind(" + std::to_string(a) + ") = " + std::to_string(model.ind(a)) +
                         " differs from ind(-" + std::to_string(a) + ") = ind(" +
                         std::to_string(neg) + ") = " + std::to_string(model.ind(neg)));
    }
    for (std::size_t b = a; b < order; ++b) {
      const std::size_t sum = g.label(g.add(ea, g.element(b)));
      const std::int64_t bound = model.ind(a) * model.ind(b);
      if (bound % model.ind(sum) != 0) {
        problems.push_back("ind(" + std::to_string(a) + " + " + std::to_string(b) + ") = ind(" +
                           std::to_string(sum) + ") = " + std::to_string(model.ind(sum)) +
                           " does not divide ind(" + std::to_string(a) + ") * ind(" +
                           std::to_string(b) + ") = " + std::to_string(bound));
      }
    }
  }
  return problems;
}

void require_valid(const BrauerModel& model) {
  const auto problems = validate(model);
  if (problems.empty()) return;
  std::ostringstream os;
  os << "invalid Brauer model:";
  for (const auto& p : problems) os << "\n  " << p;
  throw std::invalid_argument(os.str());
}

void require_compatible(const BrauerModel& model, const RootSystem& rs) {
  const auto& expected = rs.fundamental_group().group();
  if (!(model.group() == expected))
    throw std::invalid_argument("Brauer model group " + model.group().describe() +
                                " does not match the fundamental group " + expected.describe() +
                                " of " + rs.name());
}

bool split_on_lattice(const BrauerModel& model, const CharacterLattice& lattice) {
  for (auto label : lattice.subgroup_labels())
    if (model.ind(label) != 1) return false;
  return true;
}

std::int64_t tits_index(const BrauerModel& model, const RootSystem& rs, const Weight& lambda) {
  require_compatible(model, rs);
  return model.ind(rs.fundamental_group().classify(lambda));
}

int vp(std::int64_t n, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("valuation needs a positive integer");
  if (p < 2) throw std::invalid_argument("valuation needs p >= 2");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

CommonIndexReport common_index(const BrauerModel& model, const RootSystem& rs,
                               std::span<const std::size_t> generators) {
  require_compatible(model, rs);
  CommonIndexReport report;
  report.generators.assign(generators.begin(), generators.end());
  if (generators.empty()) return report;

  const auto& g = model.group();
  const auto& pi = rs.fundamental_group();
  const std::int64_t p = model.prime();
  const std::int64_t e = g.exponent();
  std::vector<FiniteAbelianGroup::Element> classes;
  for (auto i : generators) classes.push_back(pi.classify(rs.fundamental_weight(i)));

  // A residue a mod e contains an integer prime to p unless p divides both e and a.
  auto can_be_prime_to_p = [&](std::int64_t a) { return !(e % p == 0 && a % p == 0); };

  const std::size_t s = generators.size();
  std::vector<std::int64_t> a(s, 0);
  std::int64_t best = 0;
  std::int64_t gcd_acc = 0;
  for (;;) {
    bool admissible = false;
    for (auto x : a) admissible = admissible || can_be_prime_to_p(x);
    if (admissible) {
      auto sum = g.identity();
      for (std::size_t l = 0; l < s; ++l) sum = g.add(sum, g.scale(a[l], classes[l]));
      const std::int64_t ind = model.ind(sum);
      gcd_acc = std::gcd(gcd_acc, ind);
      if (best == 0 || ind < best) {
        best = ind;
        report.witness = a;
      }
      ++report.tuples_considered;
    }
    std::size_t pos = s;
    while (pos > 0) {
      --pos;
      if (++a[pos] < e) break;
      a[pos] = 0;
      if (pos == 0) {
        pos = s;
        break;
      }
    }
    if (pos == s) break;
  }

  report.defined = true;
  report.i_c = gcd_acc;
  report.v_p = vp(gcd_acc, p);
  return report;
}

}  // namespace jinv
