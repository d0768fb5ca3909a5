#include <gtest/gtest.h>

#include <random>

#include "disposition/errors.hpp"
#include "disposition/group.hpp"

using namespace disposition;

namespace {

std::shared_ptr<const DispositionGroup> G(std::uint64_t p, unsigned d, unsigned c) {
  return DispositionGroup::get(GroupParams::make(p, d, c));
}

GroupElement random_element(const std::shared_ptr<const DispositionGroup>& group, std::mt19937_64& rng) {
  Coords coords(group->dimension());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    coords[k] = std::uniform_int_distribution<std::uint64_t>(0, group->modulus(k) - 1)(rng);
  }
  return group->element(std::move(coords));
}

HallIndex find_word(const FreeLieAlgebra& a, const Word& w) {
  for (const auto& e : a.basis()) {
    if (e.word == w) return e.index;
  }
  ADD_FAILURE() << "word not in basis";
  return 0;
}

const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> kContexts = {
    {3, 2, 2}, {5, 2, 2}, {5, 2, 3}, {7, 2, 3}, {5, 3, 3}, {7, 2, 4}};

}  // namespace

TEST(Group, RejectsOutsideLazardRange) {
  EXPECT_THROW(G(2, 2, 2), LazardRangeError);
  EXPECT_THROW(G(3, 2, 3), LazardRangeError);
  EXPECT_THROW(reduce(LiePolynomial(FreeLieAlgebra::get(2, 3)), GroupParams::make(2, 2, 3)),
               LazardRangeError);
}

TEST(Group, CoordinateModuli) {
  const auto group = G(3, 2, 2);
  EXPECT_EQ(group->ring_modulus(), 9u);
  EXPECT_EQ(group->modulus(0), 9u);
  EXPECT_EQ(group->modulus(2), 3u);
  EXPECT_EQ(group->order_exponent(), 5u);
  EXPECT_EQ(G(5, 2, 3)->order_exponent(), 10u);
}

TEST(Reduce, Examples) {
  const auto group = G(3, 2, 2);
  const auto algebra = group->algebra_ptr();
  EXPECT_TRUE(reduce(LiePolynomial(algebra), group).is_identity());

  const HallIndex x1x2 = find_word(*algebra, {0, 1});
  const auto half = LiePolynomial::basis_element(algebra, x1x2, Rational(1, 2));
  EXPECT_EQ(reduce(half, group).coordinate(x1x2), 2u);

  const auto big = LiePolynomial::basis_element(algebra, 0, 9);
  EXPECT_TRUE(reduce(big, group).is_identity());
}

TEST(Multiply, Examples) {
  const auto group = G(3, 2, 2);
  const auto x1 = group->generator(0);
  const auto x2 = group->generator(1);
  const auto product = multiply(x1, x2);
  EXPECT_EQ(product.coords(), (Coords{1, 1, 2}));
  EXPECT_EQ(multiply(x1, group->identity()), x1);
  EXPECT_TRUE(multiply(x1, inverse(x1)).is_identity());
}

TEST(Multiply, TemplateMatchesExactRoute) {
  std::mt19937_64 rng(1);
  for (auto [p, d, c] : kContexts) {
    const auto group = G(p, d, c);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = random_element(group, rng);
      const auto h = random_element(group, rng);
      EXPECT_EQ(multiply(g, h), multiply_reference(g, h)) << to_string(group->params());
    }
  }
}

TEST(Multiply, LiftIndependence) {
  std::mt19937_64 rng(2);
  for (auto [p, d, c] : kContexts) {
    const auto group = G(p, d, c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = random_element(group, rng);
      const auto h = random_element(group, rng);
      // Exact route: shift integer lifts by multiples of p^{c+1-w}.
      LiePolynomial lg = lift(g), lh = lift(h);
      Coords shifted_g = g.coords(), shifted_h = h.coords();
      for (std::size_t k = 0; k < group->dimension(); ++k) {
        const long a = std::uniform_int_distribution<long>(-3, 3)(rng);
        const long b = std::uniform_int_distribution<long>(-3, 3)(rng);
        lg.add_term(k, Rational(a) * Rational(static_cast<unsigned long>(group->modulus(k))));
        lh.add_term(k, Rational(b) * Rational(static_cast<unsigned long>(group->modulus(k))));
        shifted_g[k] += static_cast<std::uint64_t>(a + 3) * group->modulus(k);
        shifted_h[k] += static_cast<std::uint64_t>(b + 3) * group->modulus(k);
      }
      if (trial < 20) {
        EXPECT_EQ(reduce(bch_log_product(lg, lh), group), multiply(g, h));
      }
      // Modular route: non-canonical nonnegative lifts.
      EXPECT_EQ(group->multiply(shifted_g, shifted_h), multiply(g, h).coords());
    }
  }
}

TEST(Multiply, GroupAxioms) {
  std::mt19937_64 rng(4);
  for (auto [p, d, c] : {std::tuple{3ull, 2u, 2u}, std::tuple{5ull, 2u, 2u}, std::tuple{5ull, 2u, 3u}}) {
    const auto group = G(p, d, c);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = random_element(group, rng);
      const auto b = random_element(group, rng);
      const auto e = random_element(group, rng);
      EXPECT_EQ(multiply(multiply(a, b), e), multiply(a, multiply(b, e)));
      EXPECT_EQ(multiply(a, group->identity()), a);
      EXPECT_EQ(multiply(group->identity(), a), a);
      EXPECT_TRUE(multiply(a, inverse(a)).is_identity());
      EXPECT_TRUE(multiply(inverse(a), a).is_identity());
    }
  }
}

TEST(Power, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(6);
  for (auto [p, d, c] : kContexts) {
    const auto group = G(p, d, c);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_element(group, rng);
      auto acc = group->identity();
      for (std::int64_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(power(g, n), acc);
        acc = multiply(acc, g);
      }
      EXPECT_EQ(power(g, -1), inverse(g));
    }
  }
}

TEST(Power, Examples) {
  const auto group = G(3, 2, 2);
  const auto x1 = group->generator(0);
  EXPECT_TRUE(power(x1, 9).is_identity());
  EXPECT_FALSE(power(x1, 3).is_identity());
  EXPECT_EQ(power(x1, 1), x1);
  EXPECT_TRUE(power(x1, 0).is_identity());
  EXPECT_TRUE(inverse(group->identity()).is_identity());
}

TEST(Commutator, Examples) {
  const auto group = G(3, 2, 2);
  const auto x1 = group->generator(0);
  const auto x2 = group->generator(1);
  EXPECT_TRUE(commutator(x1, x1).is_identity());
  EXPECT_TRUE(commutator(x1, group->identity()).is_identity());
  EXPECT_EQ(commutator(x1, x2).coords(), (Coords{0, 0, 1}));
}

TEST(Commutator, LeadingTermIsLieBracket) {
  // [exp u, exp v] = exp([u, v] + higher brackets): in class 3 the weight-2 part
  // of the commutator of two generators is exactly [x_i, x_j].
  const auto group = G(5, 3, 3);
  const auto& algebra = group->algebra();
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      const auto comm = commutator(group->generator(i), group->generator(j));
      const IntCombination& bracket = algebra.bracket(i, j);
      for (const HallElement& e : algebra.basis()) {
        if (e.weight != 2) continue;
        std::int64_t expected = 0;
        for (const auto& [k, v] : bracket) {
          if (k == e.index) expected = v;
        }
        const auto m = static_cast<std::int64_t>(group->modulus(e.index));
        EXPECT_EQ(static_cast<std::int64_t>(comm.coordinate(e.index)), ((expected % m) + m) % m);
      }
    }
  }
}

TEST(ElementOrder, Examples) {
  const auto group = G(3, 2, 2);
  EXPECT_EQ(element_order(group->identity()), (PrimePowerOrder{3, 0}));
  EXPECT_EQ(element_order(group->generator(0)), (PrimePowerOrder{3, 2}));
  std::mt19937_64 rng(8);
  for (auto [p, d, c] : kContexts) {
    const auto g = G(p, d, c);
    for (int trial = 0; trial < 50; ++trial) {
      EXPECT_LE(element_order(random_element(g, rng)).exponent, c);
    }
    // exponent p^c is attained by the generators
    EXPECT_EQ(element_order(g->generator(0)).exponent, c);
  }
}

TEST(Truncation, IsHomomorphismOntoLowerClass) {
  // G_d^{c+1} / lambda_{c+1} = G_d^c: drop the top weight, reduce the rest.
  const auto big = G(5, 2, 3);
  const auto small = G(5, 2, 2);
  auto truncate = [&](const GroupElement& g) {
    Coords out(small->dimension());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = g.coordinate(k) % small->modulus(k);
    return small->element(std::move(out));
  };
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_element(big, rng);
    const auto h = random_element(big, rng);
    EXPECT_EQ(truncate(multiply(g, h)), multiply(truncate(g), truncate(h)));
  }
}

TEST(Group, ContextMismatchAndValidation) {
  const auto a = G(3, 2, 2)->generator(0);
  const auto b = G(5, 2, 2)->generator(0);
  EXPECT_THROW(multiply(a, b), DomainError);
  EXPECT_THROW(G(3, 2, 2)->element(Coords{9, 0, 0}), DomainError);
  EXPECT_THROW(G(3, 2, 2)->element(Coords{0, 0}), DomainError);
  EXPECT_THROW(G(3, 2, 2)->generator(2), DomainError);
}

TEST(Group, RankOneIsCyclic) {
  const auto group = G(5, 1, 3);
  EXPECT_EQ(group->dimension(), 1u);
  EXPECT_EQ(multiply(group->generator(0), group->generator(0)).coords(), (Coords{2}));
  EXPECT_EQ(element_order(group->generator(0)).exponent, 3);
}
