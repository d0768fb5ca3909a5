#include <gtest/gtest.h>

#include "disposition/errors.hpp"
#include "disposition/invariants.hpp"
#include "disposition/subgroup.hpp"

using namespace disposition;

namespace {

std::shared_ptr<const DispositionGroup> G(std::uint64_t p, unsigned d, unsigned c) {
  return DispositionGroup::get(GroupParams::make(p, d, c));
}

std::vector<std::size_t> sizes(const std::vector<SeriesTerm>& series) {
  std::vector<std::size_t> out;
  for (const auto& term : series) out.push_back(term.subgroup ? term.subgroup->size() : 0);
  return out;
}

std::size_t pow_size(std::uint64_t p, const BigNat& e) {
  std::size_t out = 1;
  for (unsigned long i = 0; i < e.get_ui(); ++i) out *= p;
  return out;
}

}  // namespace

TEST(Closure, Examples) {
  const auto group = G(3, 2, 2);
  EXPECT_EQ(subgroup_closure(group, {}, {}).size(), 1u);
  const auto x1 = group->generator(0);
  const auto x2 = group->generator(1);
  EXPECT_EQ(subgroup_closure({commutator(x1, x2)}, {x1, x2}).size(), 3u);
  EXPECT_EQ(subgroup_closure({x1, x2}, {x1, x2}).size(), 243u);
  EXPECT_EQ(subgroup_closure({x1}, {}).size(), 9u);
  // normal closure of <x1> is all of x1 and the commutator layer
  EXPECT_EQ(subgroup_closure({x1}, {x1, x2}).size(), 27u);
}

TEST(Closure, DeterministicOrder) {
  const auto group = G(3, 2, 2);
  const auto a = whole_group(group);
  const auto b = whole_group(group);
  EXPECT_EQ(a.coords(), b.coords());
  EXPECT_TRUE(group->is_identity(a.coords().front()));
}

TEST(Closure, CapExceeded) {
  const auto group = G(3, 2, 2);
  try {
    whole_group(group, 100);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.partial_size(), 101u);
    EXPECT_EQ(e.cap(), 100u);
  }
  EXPECT_THROW(subgroup_closure(group, {}, {}, 0), DomainError);
}

TEST(SubgroupSet, LagrangeIsAsserted) {
  const auto group = G(3, 2, 2);
  std::vector<Coords> bogus{Coords{0, 0, 0}, Coords{1, 0, 0}};
  EXPECT_THROW(SubgroupSet(group, bogus, {}), std::logic_error);
}

TEST(SubgroupSet, JsonDumpIsSorted) {
  const auto group = G(3, 2, 2);
  const auto set = subgroup_closure({commutator(group->generator(0), group->generator(1))}, {});
  EXPECT_EQ(set.to_json(), R"([["0","0","0"],["0","0","1"],["0","0","2"]])");
}

TEST(LowerCentral, Small) {
  const auto series = lower_central_series(G(3, 2, 2));
  EXPECT_EQ(sizes(series), (std::vector<std::size_t>{243, 3, 1}));
}

TEST(LowerCentral, SkipsWholeGroupBeyondCap) {
  SeriesOptions options;
  options.cap = 100'000;
  options.strict = false;
  const auto series = lower_central_series(G(5, 2, 3), options);
  ASSERT_EQ(series.size(), 4u);
  EXPECT_FALSE(series[0].subgroup.has_value());
  EXPECT_EQ(series[0].partial_size, 100'001u);
  EXPECT_EQ(series[1].subgroup->size(), 625u);
  EXPECT_EQ(series[2].subgroup->size(), 25u);
  EXPECT_EQ(series[3].subgroup->size(), 1u);
  options.strict = true;
  EXPECT_THROW(lower_central_series(G(5, 2, 3), options), CapExceeded);
}

TEST(LowerCentral, MatchesFormulaAcrossContexts) {
  for (auto [p, d, c] : {std::tuple{5ull, 2u, 2u}, std::tuple{5ull, 3u, 2u}, std::tuple{7ull, 2u, 3u},
                         std::tuple{5ull, 2u, 4u}}) {
    const auto params = GroupParams::make(p, d, c);
    const auto series = lower_central_series(G(p, d, c), {300'000, false});
    for (const auto& term : series) {
      if (!term.subgroup) continue;
      EXPECT_EQ(term.subgroup->size(), pow_size(p, gamma_order_exponent(params, term.index)))
          << to_string(params) << " gamma_" << term.index;
    }
  }
}

TEST(LambdaSeries, Small) {
  const auto series = lambda_series(G(3, 2, 2));
  EXPECT_EQ(sizes(series), (std::vector<std::size_t>{243, 27, 1}));
}

TEST(LambdaSeries, CentralWithElementaryFactors) {
  for (auto [p, d, c] : {std::tuple{3ull, 2u, 2u}, std::tuple{5ull, 2u, 2u}, std::tuple{3ull, 3u, 2u}}) {
    const auto group = G(p, d, c);
    const auto series = lambda_series(group);
    for (std::size_t j = 0; j + 1 < series.size(); ++j) {
      const auto& upper = *series[j].subgroup;
      const auto& lower = *series[j + 1].subgroup;
      EXPECT_TRUE(lower.is_subset_of(upper));
      for (const Coords& x : upper.coords()) {
        EXPECT_TRUE(lower.contains(group->power(x, static_cast<std::int64_t>(p))));
        for (const auto& g : group->generators()) {
          EXPECT_TRUE(lower.contains(group->commutator(x, g.coords())));
        }
      }
    }
  }
}

TEST(LambdaSeries, SizesAtClassThreeWithinCap) {
  const auto params = GroupParams::make(5, 2, 3);
  const auto series = lambda_series(G(5, 2, 3), {100'000, false});
  EXPECT_FALSE(series[0].subgroup.has_value());
  EXPECT_FALSE(series[1].subgroup.has_value());  // 5^8 > cap
  ASSERT_TRUE(series[2].subgroup.has_value());
  EXPECT_EQ(series[2].subgroup->size(), pow_size(5, lambda_order_exponent(params, 3)));
  EXPECT_TRUE(is_central(*series[2].subgroup));
  EXPECT_EQ(series[3].subgroup->size(), 1u);
}

TEST(Center, Examples) {
  const auto group = G(3, 2, 2);
  const auto z = center(group);
  EXPECT_EQ(z.size(), 27u);
  EXPECT_EQ(z, *lambda_series(group)[1].subgroup);
  EXPECT_EQ(center(G(3, 2, 1)).size(), 9u);
  EXPECT_EQ(center(G(5, 2, 2)).size(), 125u);
}

TEST(UpperCentral, EqualsLambdaSeries) {
  const auto group = G(3, 2, 2);
  const auto upper = upper_central_series(group);
  const auto lambda = lambda_series(group);
  ASSERT_EQ(upper.size(), 3u);
  EXPECT_EQ(upper[0].size(), 1u);
  EXPECT_EQ(upper[1], *lambda[1].subgroup);
  EXPECT_EQ(upper[2], *lambda[0].subgroup);
}

TEST(UpperCentral, ClassTwoRankThree) {
  const auto params = GroupParams::make(3, 3, 2);
  const auto group = G(3, 3, 2);
  const auto upper = upper_central_series(group);
  ASSERT_EQ(upper.size(), 3u);
  EXPECT_EQ(upper[1].size(), pow_size(3, upper_central_exponent(params, 1)));
}

TEST(Intersection, LambdaGammaLayer) {
  const auto group = G(3, 2, 2);
  const auto gamma = lower_central_series(group);
  const auto lambda = lambda_series(group);
  const auto top = intersection(*lambda[1].subgroup, *gamma[1].subgroup);
  const auto bottom = intersection(*lambda[2].subgroup, *gamma[1].subgroup);
  EXPECT_EQ(top.size() / bottom.size(), pow_size(3, lambda_layer_exponent(2, 2, 2)));
}

TEST(FrattiniCommutators, MatchFormula) {
  // [Phi(G), _{i-1} G] has order p^{k_i}; Phi(G) = lambda_2.
  const auto params = GroupParams::make(5, 2, 3);
  const auto group = G(5, 2, 3);
  const auto lambda = lambda_series(group, {100'000, false});
  std::vector<GroupElement> gens = lambda[1].generators;
  for (unsigned i = 2; i <= 3; ++i) {
    std::vector<GroupElement> next;
    for (const auto& g : gens) {
      for (const auto& x : group->generators()) next.push_back(commutator(g, x));
    }
    gens = next;
    const auto set = subgroup_closure(group, gens, group->generators());
    EXPECT_EQ(set.size(), pow_size(5, frattini_commutator_exponent(params, i))) << "i=" << i;
  }
}

TEST(FrattiniCommutators, LambdaTwoAgainstGammaPowers) {
  // [lambda_2(G), G] = gamma_2(G)^p gamma_3(G) in G_2^3 at p = 5
  const auto group = G(5, 2, 3);
  const auto lambda = lambda_series(group, {100'000, false});
  const auto gamma = lower_central_series(group, {100'000, false});

  std::vector<GroupElement> lhs_gens;
  for (const auto& g : lambda[1].generators) {
    for (const auto& x : group->generators()) lhs_gens.push_back(commutator(g, x));
  }
  const auto lhs = subgroup_closure(group, lhs_gens, group->generators());

  std::vector<GroupElement> rhs_gens;
  for (const auto& g : gamma[1].generators) rhs_gens.push_back(power(g, 5));
  for (const auto& g : gamma[2].generators) rhs_gens.push_back(g);
  const auto rhs = subgroup_closure(group, rhs_gens, group->generators());

  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.size(), 125u);
}
