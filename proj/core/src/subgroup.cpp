#include "disposition/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "disposition/errors.hpp"

namespace disposition {
namespace {

// Incrementally grown subgroup: BFS under right multiplication by the generators.
class ClosureBuilder {
 public:
  ClosureBuilder(std::shared_ptr<const DispositionGroup> group, std::size_t cap)
      : group_(std::move(group)), cap_(cap) {
    insert(Coords(group_->dimension(), 0));
  }

  bool contains(const Coords& x) const { return index_.count(x) != 0; }

  // Adds a generator and closes: old elements only need the new generator.
  void add_generator(const Coords& gen) {
    if (contains(gen)) return;
    gens_.push_back(gen);
    std::deque<std::size_t> queue;
    const std::size_t old_size = order_.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      Coords next = group_->multiply(order_[i], gen);
      if (!contains(next)) queue.push_back(insert(std::move(next)));
    }
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (const Coords& g : gens_) {
        Coords next = group_->multiply(order_[i], g);
        if (!contains(next)) queue.push_back(insert(std::move(next)));
      }
    }
  }

  const std::vector<Coords>& gens() const { return gens_; }
  std::vector<Coords> take_elements() { return std::move(order_); }

 private:
  std::size_t insert(Coords x) {
    if (order_.size() >= cap_) throw CapExceeded(order_.size() + 1, cap_);
    index_.insert(x);
    order_.push_back(std::move(x));
    return order_.size() - 1;
  }

  std::shared_ptr<const DispositionGroup> group_;
  std::size_t cap_;
  std::vector<Coords> order_;
  std::unordered_set<Coords, CoordsHash> index_;
  std::vector<Coords> gens_;
};

bool is_power_of(std::size_t n, std::uint64_t p, unsigned long& exponent) {
  exponent = 0;
  while (n > 1) {
    if (n % p != 0) return false;
    n /= p;
    ++exponent;
  }
  return n == 1;
}

void check_same_group(const std::shared_ptr<const DispositionGroup>& group,
                      const std::vector<GroupElement>& elements) {
  for (const GroupElement& g : elements) {
    if (g.group_ptr() != group) throw DomainError("element from a different group context");
  }
}

}  // namespace

SubgroupSet::SubgroupSet(std::shared_ptr<const DispositionGroup> group,
                         std::vector<Coords> elements, std::vector<GroupElement> generators)
    : group_(std::move(group)), order_(std::move(elements)), generators_(std::move(generators)) {
  index_.reserve(order_.size());
  for (const Coords& x : order_) index_.insert(x);
  if (index_.size() != order_.size()) throw std::logic_error("SubgroupSet: duplicate elements");
  unsigned long e = 0;
  if (!is_power_of(order_.size(), group_->params().p, e) || e > group_->order_exponent()) {
    throw std::logic_error("SubgroupSet: size " + std::to_string(order_.size()) +
                           " does not divide the group order (Lagrange)");
  }
}

std::vector<GroupElement> SubgroupSet::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_.size());
  for (const Coords& x : order_) out.emplace_back(group_, x);
  return out;
}

unsigned long SubgroupSet::order_exponent() const {
  unsigned long e = 0;
  is_power_of(order_.size(), group_->params().p, e);
  return e;
}

PrimePowerOrder SubgroupSet::order() const {
  return PrimePowerOrder{group_->params().p, BigNat(order_exponent())};
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
  if (group_ != other.group_) return false;
  return std::all_of(order_.begin(), order_.end(),
                     [&](const Coords& x) { return other.contains(x); });
}

bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
  return a.size() == b.size() && a.is_subset_of(b);
}

std::string SubgroupSet::to_json() const {
  std::vector<Coords> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out << (i ? "," : "") << "[";
    for (std::size_t k = 0; k < sorted[i].size(); ++k) {
      out << (k ? "," : "") << '"' << sorted[i][k] << '"';
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

SubgroupSet subgroup_closure(const std::shared_ptr<const DispositionGroup>& group,
                             const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& conjugators, std::size_t cap) {
  if (cap < 1) throw DomainError("closure cap must be >= 1");
  check_same_group(group, gens);
  check_same_group(group, conjugators);

  ClosureBuilder builder(group, cap);
  std::deque<Coords> pending;
  for (const GroupElement& g : gens) pending.push_back(g.coords());

  std::size_t checked = 0;  // generators whose conjugates were already examined
  while (true) {
    while (!pending.empty()) {
      builder.add_generator(pending.front());
      pending.pop_front();
    }
    const auto& current = builder.gens();
    for (; checked < current.size(); ++checked) {
      for (const GroupElement& x : conjugators) {
        Coords y = group->conjugate(current[checked], x.coords());
        if (!builder.contains(y)) pending.push_back(std::move(y));
      }
    }
    if (pending.empty()) break;
  }

  std::vector<GroupElement> recorded = gens;
  return SubgroupSet(group, builder.take_elements(), std::move(recorded));
}

SubgroupSet subgroup_closure(const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& conjugators, std::size_t cap) {
  if (gens.empty()) throw DomainError("subgroup_closure: empty generator list needs a group");
  return subgroup_closure(gens.front().group_ptr(), gens, conjugators, cap);
}

SubgroupSet whole_group(const std::shared_ptr<const DispositionGroup>& group, std::size_t cap) {
  return subgroup_closure(group, group->generators(), {}, cap);
}

SubgroupSet intersection(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.group_ptr() != b.group_ptr()) throw DomainError("intersection across group contexts");
  std::vector<Coords> common;
  for (const Coords& x : a.coords()) {
    if (b.contains(x)) common.push_back(x);
  }
  return SubgroupSet(a.group_ptr(), std::move(common), {});
}

namespace {

SeriesTerm make_term(const std::shared_ptr<const DispositionGroup>& group, unsigned index,
                     std::vector<GroupElement> gens, const SeriesOptions& options) {
  SeriesTerm term;
  term.index = index;
  term.generators = std::move(gens);
  try {
    term.subgroup = subgroup_closure(group, term.generators, group->generators(), options.cap);
  } catch (const CapExceeded& e) {
    if (options.strict) throw;
    term.partial_size = e.partial_size();
  }
  return term;
}

std::vector<GroupElement> commutators_with_generators(
    const std::shared_ptr<const DispositionGroup>& group, const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> out;
  for (const GroupElement& g : gens) {
    for (const GroupElement& x : group->generators()) {
      GroupElement comm = commutator(g, x);
      if (!comm.is_identity() && std::find(out.begin(), out.end(), comm) == out.end()) {
        out.push_back(std::move(comm));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SeriesTerm> lower_central_series(const std::shared_ptr<const DispositionGroup>& group,
                                             const SeriesOptions& options) {
  std::vector<SeriesTerm> series;
  series.push_back(make_term(group, 1, group->generators(), options));
  for (unsigned i = 2; i <= group->params().c + 1; ++i) {
    series.push_back(
        make_term(group, i, commutators_with_generators(group, series.back().generators), options));
  }
  return series;
}

std::vector<SeriesTerm> lambda_series(const std::shared_ptr<const DispositionGroup>& group,
                                      const SeriesOptions& options) {
  const auto p = static_cast<std::int64_t>(group->params().p);
  std::vector<SeriesTerm> series;
  series.push_back(make_term(group, 1, group->generators(), options));
  for (unsigned j = 2; j <= group->params().c + 1; ++j) {
    const auto& previous = series.back().generators;
    std::vector<GroupElement> gens = commutators_with_generators(group, previous);
    for (const GroupElement& g : previous) {
      GroupElement pth = power(g, p);
      if (!pth.is_identity() && std::find(gens.begin(), gens.end(), pth) == gens.end()) {
        gens.push_back(std::move(pth));
      }
    }
    series.push_back(make_term(group, j, std::move(gens), options));
  }
  return series;
}

bool is_central(const SubgroupSet& set) {
  const DispositionGroup& group = set.group();
  const auto generators = group.generators();
  for (const Coords& x : set.coords()) {
    for (const GroupElement& g : generators) {
      if (!group.is_identity(group.commutator(x, g.coords()))) return false;
    }
  }
  return true;
}

SubgroupSet center(const std::shared_ptr<const DispositionGroup>& group, std::size_t cap) {
  const SubgroupSet all = whole_group(group, cap);
  const auto generators = group->generators();
  std::vector<Coords> central;
  for (const Coords& x : all.coords()) {
    bool commutes = true;
    for (const GroupElement& g : generators) {
      if (!group->is_identity(group->commutator(x, g.coords()))) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(x);
  }
  return SubgroupSet(group, std::move(central), {});
}

std::vector<SubgroupSet> upper_central_series(const std::shared_ptr<const DispositionGroup>& group,
                                              std::size_t cap) {
  const SubgroupSet all = whole_group(group, cap);
  const auto generators = group->generators();
  std::vector<SubgroupSet> series;
  series.emplace_back(group, std::vector<Coords>{Coords(group->dimension(), 0)},
                      std::vector<GroupElement>{});
  // Z_{i+1} = { g : [g, x] in Z_i for every generator x }
  while (series.back().size() < all.size()) {
    const SubgroupSet& below = series.back();
    std::vector<Coords> next;
    for (const Coords& x : all.coords()) {
      bool ok = true;
      for (const GroupElement& g : generators) {
        if (!below.contains(group->commutator(x, g.coords()))) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(x);
    }
    if (next.size() == below.size()) throw std::logic_error("upper central series stalled");
    series.emplace_back(group, std::move(next), std::vector<GroupElement>{});
  }
  return series;
}

}  // namespace disposition
