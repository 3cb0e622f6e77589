#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jinv/integer_matrix.hpp"

namespace jinv {

// A weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
};

struct PositiveRoot {
  Weight weight;                             // omega-coordinates
  std::vector<std::int64_t> simple_coords;   // in the simple-root basis
  std::vector<std::int64_t> coroot_coords;   // coroot in the simple-coroot basis
  std::int64_t height = 0;

  // <lambda, alpha^vee>
  std::int64_t pair(const Weight& lambda) const;
};

// Finite abelian group  Z/d_1 x ... x Z/d_k  with 1 < d_1 | d_2 | ... | d_k.
// Elements are residue vectors; labels enumerate elements in mixed radix
// with the last factor varying fastest.
class FiniteAbelianGroup {
public:
  using Element = std::vector<std::int64_t>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t order() const;
  std::int64_t exponent() const;
  bool trivial() const { return factors_.empty(); }

  Element identity() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(std::int64_t k, const Element& a) const;
  Element normalize(const Element& a) const;

  std::size_t label(const Element& e) const;
  Element element(std::size_t label) const;

  // Human-readable structure, e.g. "Z/2 x Z/2", or "trivial".
  std::string describe() const;

  bool operator==(const FiniteAbelianGroup&) const = default;

private:
  std::vector<std::int64_t> factors_;
};

// Z^n modulo the lattice spanned by a full-rank set of integer vectors,
// realised through a Smith normal form.
class LatticeQuotient {
public:
  LatticeQuotient() = default;
  // generators: columns span the sublattice of Z^n.
  explicit LatticeQuotient(const IntMatrix& generators);

  const FiniteAbelianGroup& group() const { return group_; }
  FiniteAbelianGroup::Element classify(std::span<const std::int64_t> v) const;
  FiniteAbelianGroup::Element classify(const Weight& w) const { return classify(w.coords); }
  // A representative in Z^n of the given class.
  std::vector<std::int64_t> lift(const FiniteAbelianGroup::Element& e) const;

private:
  FiniteAbelianGroup group_;
  IntMatrix u_;        // only rows of non-trivial components are kept
  IntMatrix u_inverse_;  // matching columns
  std::vector<std::int64_t> scale_;
  std::size_t dim_ = 0;
};

class RootSystem {
public:
  // type in {A,...,G}; rank within the standard ranges and <= 8.
  static RootSystem build(char type, int rank);
  // Parses "E6", "A2", "b3", ...
  static RootSystem parse(const std::string& name);

  char type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string name() const;
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

  // Indices are 0-based throughout the library.
  Weight simple_root(std::size_t i) const;
  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const;

  // Root lookup by omega-coordinates: index into positive_roots() and sign.
  struct RootRef {
    std::size_t index;
    int sign;
  };
  std::optional<RootRef> find_root(const Weight& w) const;

  const LatticeQuotient& fundamental_group() const { return fundamental_group_; }

  // Degrees of the basic invariants; |W| is their product.
  std::vector<int> fundamental_degrees() const;
  std::uint64_t weyl_order() const;

private:
  RootSystem(char type, std::size_t rank, IntMatrix cartan);
  void close_roots();

  char type_ = 'A';
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  std::vector<PositiveRoot> roots_;
  std::unordered_map<std::vector<std::int64_t>, RootRef, VectorHash> root_index_;
  LatticeQuotient fundamental_group_;
};

IntMatrix cartan_matrix(char type, int rank);

// A lattice T* with Lambda_r <= T* <= Lambda, selected by a subgroup of Lambda/Lambda_r.
class CharacterLattice {
public:
  static CharacterLattice simply_connected(const RootSystem& rs);
  static CharacterLattice adjoint(const RootSystem& rs);
  // Subgroup of the fundamental group generated by the given element labels.
  static CharacterLattice from_subgroup(const RootSystem& rs,
                                        const std::vector<std::size_t>& generator_labels);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& basis() const { return basis_; }
  // Labels (in Lambda/Lambda_r) of the subgroup T*/Lambda_r, sorted.
  const std::vector<std::size_t>& subgroup_labels() const { return subgroup_; }
  // Lambda/T*
  const LatticeQuotient& quotient() const { return quotient_; }
  bool contains(const Weight& w) const;

private:
  CharacterLattice(const RootSystem& rs, std::vector<std::size_t> generator_labels,
                   std::string name);

  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Weight> basis_;
  std::vector<std::size_t> subgroup_;
  LatticeQuotient quotient_;
};

// Image of lambda in the finite quotient Lambda/T*.
FiniteAbelianGroup::Element class_mod_lattice(const Weight& lambda, const CharacterLattice& l);

}  // namespace jinv
