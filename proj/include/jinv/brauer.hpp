#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jinv/rootdata.hpp"

namespace jinv {

// Abstract Tits map: every class of Lambda/Lambda_r carries the index of its
// Tits algebra. No algebra arithmetic, only (group element, index).
class BrauerModel {
public:
  // ind is indexed by element label of `group`.
  BrauerModel(FiniteAbelianGroup group, std::vector<std::int64_t> ind, std::int64_t prime);

  static BrauerModel split(const FiniteAbelianGroup& group, std::int64_t prime);
  // index on every non-identity element
  static BrauerModel uniform(const FiniteAbelianGroup& group, std::int64_t prime, std::int64_t index);

  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t prime() const { return prime_; }
  const std::vector<std::int64_t>& indices() const { return ind_; }
  std::int64_t ind(std::size_t label) const { return ind_.at(label); }
  std::int64_t ind(const FiniteAbelianGroup::Element& e) const { return ind_.at(group_.label(e)); }

private:
  FiniteAbelianGroup group_;
  std::vector<std::int64_t> ind_;
  std::int64_t prime_;
};

// Checks ind(0) = 1, ind(g) = ind(-g), ind(g+h) | ind(g) ind(h); one message per violation.
std::vector<std::string> validate(const BrauerModel& model);
void require_valid(const BrauerModel& model);

// Throws if the model's group is not Lambda/Lambda_r of rs.
void require_compatible(const BrauerModel& model, const RootSystem& rs);

// True when every class of T*/Lambda_r has index 1, as for Tits algebras of a
// torsor under the group with character lattice T*.
bool split_on_lattice(const BrauerModel& model, const CharacterLattice& lattice);

// Index of the Tits algebra of the class of lambda.
std::int64_t tits_index(const BrauerModel& model, const RootSystem& rs, const Weight& lambda);

// Largest e with p^e | n.
int vp(std::int64_t n, std::int64_t p);

struct CommonIndexReport {
  bool defined = false;            // false when there are no degree-one generators
  std::int64_t i_c = 0;
  int v_p = 0;
  std::vector<std::int64_t> witness;  // exponent tuple attaining the smallest index
  std::vector<std::size_t> generators;  // fundamental weight indices i_1..i_s
  std::size_t tuples_considered = 0;
};

// gcd of ind(a_1 w_{i_1} + ... + a_s w_{i_s}) over exponent tuples modulo the
// group exponent in which at least one a_l can be chosen prime to p.
CommonIndexReport common_index(const BrauerModel& model, const RootSystem& rs,
                               std::span<const std::size_t> generators);

}  // namespace jinv
