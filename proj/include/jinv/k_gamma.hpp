#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "jinv/brauer.hpp"
#include "jinv/fp_subspace.hpp"
#include "jinv/rootdata.hpp"
#include "jinv/schubert.hpp"
#include "jinv/weyl.hpp"

namespace jinv {

// rho_w = w(sum of omega_i over the descent set of w)
Weight steinberg_weight(const WeylGroup& group, std::size_t element);

struct SteinbergEntry {
  std::size_t element = 0;  // index in the full Weyl table
  Weight rho;
  // c_1(g_w) in h-coordinates, h_i = c_1(L(omega_i))
  std::vector<std::int64_t> c1;
  FiniteAbelianGroup::Element brauer_class;  // class of rho_w in Lambda/Lambda_r
};

class SteinbergTable {
public:
  // group must be the complete Weyl group.
  explicit SteinbergTable(const WeylGroup& group);

  std::size_t size() const { return entries_.size(); }
  const SteinbergEntry& operator[](std::size_t element) const { return entries_[element]; }
  const std::vector<SteinbergEntry>& entries() const { return entries_; }

private:
  std::vector<SteinbergEntry> entries_;
};

// Multisets {w_1 <= ... <= w_m} of Weyl elements indexing the degree-m
// products gamma_1(g_{w_1}) ... gamma_1(g_{w_m}).
class GammaGeneratorProducts {
public:
  GammaGeneratorProducts(std::size_t group_size, int m);

  int degree() const { return m_; }
  // binom(|W| + m - 1, m); saturates at UINT64_MAX
  std::uint64_t count() const;
  // Advances to the next multiset in lexicographic order; false when exhausted.
  bool next(std::vector<std::size_t>& out);

private:
  std::size_t n_;
  int m_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool done_ = false;
};

GammaGeneratorProducts gamma_generator_products(const WeylGroup& group, int m);

// Restriction image data for a fixed Schubert calculus and full Weyl group.
// Generator spans are cached per (model, p) and safe to read concurrently.
class GammaEngine {
public:
  GammaEngine(const SchubertCalculus& chow, const WeylGroup& full_group);

  const SchubertCalculus& chow() const { return *chow_; }
  const SteinbergTable& steinberg() const { return table_; }

  // Index of the Tits algebra attached to the class of rho_w.
  std::int64_t restriction_index(std::size_t element, const BrauerModel& model) const;

  // Image of res^(m) in CH^m (x) F_p, 1 <= m <= p.
  SubspaceBasis restriction_image_degree(int m, const BrauerModel& model,
                                         const CharacterLattice& lattice, std::int64_t p) const;
  // sum_{j<m} CH^{m-j} . im(res^(j)) + im(res^(m))
  SubspaceBasis ideal_Ixi_degree(int m, const BrauerModel& model,
                                 const CharacterLattice& lattice, std::int64_t p) const;

private:
  struct PolySpan;
  std::shared_ptr<const std::vector<PolySpan>> restriction_polys(int m, const BrauerModel& model,
                                                                 std::int64_t p) const;
  void check_request(int m, const BrauerModel& model, std::int64_t p) const;

  const SchubertCalculus* chow_;
  const WeylGroup* group_;
  SteinbergTable table_;

  using CacheKey = std::tuple<std::vector<std::int64_t>, std::int64_t>;
  mutable std::mutex mutex_;
  mutable std::map<CacheKey, std::shared_ptr<std::vector<PolySpan>>> poly_cache_;
};

// Root system with its low-degree Chow data, full Weyl group and restriction
// engine; the expensive parts are built on first use.
class Workspace {
public:
  explicit Workspace(RootSystem rs, int max_degree = SchubertCalculus::kDefaultMaxDegree,
                     std::size_t guard = kDefaultWeylGuard);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const RootSystem& root_system() const { return *rs_; }
  const SchubertCalculus& chow() const;
  const WeylGroup& weyl() const;
  const GammaEngine& gamma() const;

private:
  std::unique_ptr<RootSystem> rs_;
  int max_degree_;
  std::size_t guard_;
  mutable std::once_flag chow_once_, weyl_once_, gamma_once_;
  mutable std::unique_ptr<SchubertCalculus> chow_;
  mutable std::unique_ptr<WeylGroup> weyl_;
  mutable std::unique_ptr<GammaEngine> gamma_;
};

}  // namespace jinv
