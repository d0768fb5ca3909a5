#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "disposition/group.hpp"

namespace disposition {

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

/// A finite subgroup held as an explicit element set, plus the generators it was
/// built from (empty for sets obtained by filtering or intersection).
///
/// Iteration order is the deterministic BFS discovery order. Construction
/// asserts Lagrange: the size is a power of p dividing |G|.
class SubgroupSet {
 public:
  SubgroupSet(std::shared_ptr<const DispositionGroup> group, std::vector<Coords> elements,
              std::vector<GroupElement> generators);

  const DispositionGroup& group() const { return *group_; }
  const std::shared_ptr<const DispositionGroup>& group_ptr() const { return group_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<Coords>& coords() const { return order_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  bool contains(const Coords& coords) const { return index_.count(coords) != 0; }
  bool contains(const GroupElement& g) const { return contains(g.coords()); }
  std::vector<GroupElement> elements() const;

  /// |H| = p^e.
  PrimePowerOrder order() const;
  unsigned long order_exponent() const;

  bool is_subset_of(const SubgroupSet& other) const;
  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b);

  /// Sorted coordinate vectors as a JSON array of arrays of decimal strings.
  std::string to_json() const;

 private:
  std::shared_ptr<const DispositionGroup> group_;
  std::vector<Coords> order_;
  std::unordered_set<Coords, CoordsHash> index_;
  std::vector<GroupElement> generators_;
};

/// Smallest subgroup containing gens and closed under conjugation by every
/// conjugator; with conjugators = group generators this is the normal closure.
/// Throws CapExceeded once more than cap elements are found.
SubgroupSet subgroup_closure(const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& conjugators,
                             std::size_t cap = kDefaultClosureCap);

/// Overload usable with an empty generator list.
SubgroupSet subgroup_closure(const std::shared_ptr<const DispositionGroup>& group,
                             const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& conjugators,
                             std::size_t cap = kDefaultClosureCap);

SubgroupSet whole_group(const std::shared_ptr<const DispositionGroup>& group,
                        std::size_t cap = kDefaultClosureCap);

SubgroupSet intersection(const SubgroupSet& a, const SubgroupSet& b);

struct SeriesOptions {
  std::size_t cap = kDefaultClosureCap;
  /// When false, a term that outgrows the cap keeps only its generators and the
  /// series continues; when true, CapExceeded propagates.
  bool strict = true;
};

/// One term of a central series: its normal generators and, if enumerated, the set.
struct SeriesTerm {
  unsigned index = 1;
  std::vector<GroupElement> generators;
  std::optional<SubgroupSet> subgroup;
  std::size_t partial_size = 0;  // elements reached before the cap, when not enumerated
};

/// gamma_1 >= ... >= gamma_{c+1}, gamma_{i+1} = normal closure of [gens(gamma_i), X].
std::vector<SeriesTerm> lower_central_series(const std::shared_ptr<const DispositionGroup>& group,
                                             const SeriesOptions& options = {});

/// lambda_1 >= ... >= lambda_{c+1}, lambda_{j+1} = normal closure of
/// [gens(lambda_j), X] together with the p-th powers of gens(lambda_j).
std::vector<SeriesTerm> lambda_series(const std::shared_ptr<const DispositionGroup>& group,
                                      const SeriesOptions& options = {});

/// Elements commuting with every generator; enumerates the whole group.
SubgroupSet center(const std::shared_ptr<const DispositionGroup>& group,
                   std::size_t cap = kDefaultClosureCap);

/// Z_0 <= Z_1 <= ... up to the first term equal to G, by brute-force commutation.
std::vector<SubgroupSet> upper_central_series(const std::shared_ptr<const DispositionGroup>& group,
                                              std::size_t cap = kDefaultClosureCap);

/// True if every element of the set commutes with every generator of G.
bool is_central(const SubgroupSet& set);

}  // namespace disposition
