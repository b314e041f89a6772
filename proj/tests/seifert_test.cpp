#include "tdual/seifert.hpp"

#include "oracles.hpp"
#include "tdual/errors.hpp"
#include "tdual/gamma_point.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace tdual {
namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

SeifertPair make_pair(std::vector<std::int64_t> cones, long long e, std::vector<std::int64_t> chi,
                      long long f, std::vector<std::int64_t> a, std::int64_t genus = 0) {
  return {{genus, std::move(cones)}, e, std::move(chi), f, std::move(a)};
}

TEST(CohomologyBase, Table) {
  EXPECT_EQ(cohomology_base({2, {}}, 1), FgAbGroup::free(4));
  EXPECT_EQ(cohomology_base({0, {2, 3, 7}}, 2), FgAbGroup(1, ints({42})));
  EXPECT_EQ(cohomology_base({1, {5}}, 3), FgAbGroup::trivial());
  EXPECT_EQ(cohomology_base({3, {2, 4}}, 0), FgAbGroup::free(1));
  EXPECT_EQ(cohomology_base({3, {2, 4}}, 4), FgAbGroup(0, ints({2, 4})));
  EXPECT_EQ(cohomology_base({3, {2, 4}}, 6), FgAbGroup(0, ints({2, 4})));
  EXPECT_EQ(cohomology_base({0, {}}, 2), FgAbGroup::free(1));
  EXPECT_THROW(cohomology_base({0, {}}, -1), InputError);
  EXPECT_THROW(cohomology_base({-1, {}}, 0), ValidationError);
  EXPECT_THROW(cohomology_base({0, {0}}, 0), ValidationError);
}

TEST(CohomologyBase, EvenDegreesCarryConeTorsion) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::int64_t> order(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertBase base{trial % 4, std::vector<std::int64_t>(trial % 5)};
    Integer product = 1;
    for (auto& n : base.cone_orders) product *= (n = order(rng));
    const FgAbGroup h2 = cohomology_base(base, 2);
    const FgAbGroup h4 = cohomology_base(base, 4);
    EXPECT_EQ(h2.free_rank(), 1u);
    EXPECT_EQ(h2.torsion_order(), product);
    EXPECT_EQ(h4.free_rank(), 0u);
    EXPECT_EQ(h4.torsion(), h2.torsion());
  }
}

TEST(H3Total, Examples) {
  EXPECT_EQ(h3_total(make_pair({12}, 0, {4}, 0, {0})), FgAbGroup(1, ints({4})));
  EXPECT_EQ(h3_total(make_pair({}, 7, {}, -3, {})), FgAbGroup::free(1));
  EXPECT_EQ(h3_total(make_pair({5, 7}, 0, {1, 1}, 0, {0, 0})), FgAbGroup::free(1));
  EXPECT_THROW(h3_total(make_pair({12}, 0, {4}, 0, {1})), ValidationError);
}

TEST(H3Total, AnnihilatorOrdersByEnumeration) {
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t chi = 0; chi < n; ++chi) {
      std::int64_t ann = 0;
      for (std::int64_t x = 0; x < n; ++x) ann += (x * chi) % n == 0;
      EXPECT_EQ(h3_total(make_pair({n}, 0, {chi}, 0, {0})).torsion_order(), ann);
    }
}

TEST(ChernFromConstruction, Examples) {
  const ChernClass smooth = chern_from_construction({{0, {}}, 5, {}});
  EXPECT_EQ(smooth.e, 5);
  EXPECT_TRUE(smooth.chi.empty());

  const ChernClass c23 = chern_from_construction({{0, {2, 3}}, 0, ints({1, 1})});
  EXPECT_EQ(c23.e, 5);
  EXPECT_EQ(c23.chi, (std::vector<std::int64_t>{1, 1}));
  EXPECT_FALSE(c23.degenerate_kernel);

  const ChernClass flat = chern_from_construction({{0, {2, 2}}, -1, ints({1, 1})});
  EXPECT_EQ(flat.e, 0);
  EXPECT_EQ(flat.chi, (std::vector<std::int64_t>{1, 1}));
  EXPECT_TRUE(flat.degenerate_kernel);

  const ChernClass negative = chern_from_construction({{0, {4}}, 0, ints({-6})});
  EXPECT_EQ(negative.chi, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(negative.e, -3);  // x = 2, b = 2 * (-6/4)

  EXPECT_THROW(chern_from_construction({{0, {2}}, 0, {}}), ValidationError);
}

TEST(ChernFromConstruction, MatchesBruteForceOnSample) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> order(1, 12), degree(-12, 12), c(-5, 5);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t r = trial % 4;
    SeifertConstruction con{{0, {}}, c(rng), {}};
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i < r; ++i) {
      con.base.cone_orders.push_back(order(rng));
      degrees.push_back(degree(rng));
      con.phi_degrees.emplace_back(degrees.back());
    }
    const auto expected = oracle::chern_e_brute_force(static_cast<std::int64_t>(con.c),
                                                      con.base.cone_orders, degrees);
    const ChernClass got = chern_from_construction(con);
    EXPECT_EQ(got.e, expected);
    for (std::size_t i = 0; i < r; ++i)
      EXPECT_EQ(got.chi[i], mod_floor(degrees[i], con.base.cone_orders[i]));
  }
}

TEST(ChernFromConstruction, BeyondSixtyFourBits) {
  const Integer big = Integer(1) << 70;
  EXPECT_EQ(chern_from_construction({{0, {2, 3}}, big, ints({1, 1})}).e, 6 * big + 5);

  // lcm of three large primes overflows 64 bits.
  const std::vector<std::int64_t> primes = {1000000007, 998244353, 1000000009};
  const Integer step = Integer(primes[0]) * primes[1] * primes[2];
  Integer expected = -step;
  for (std::int64_t p : primes) expected += step / p;
  const ChernClass c = chern_from_construction({{0, primes}, -1, ints({1, 1, 1})});
  EXPECT_EQ(c.e, expected);
  EXPECT_EQ(c.chi, (std::vector<std::int64_t>{1, 1, 1}));

  const Integer huge_degree = (Integer(1) << 80) + 3;  // congruent to 3 mod 4
  const ChernClass h = chern_from_construction({{0, {4}}, 0, {huge_degree}});
  EXPECT_EQ(h.chi, (std::vector<std::int64_t>{static_cast<std::int64_t>(huge_degree % 4)}));
  EXPECT_EQ(h.e, huge_degree);  // x = 4
}

TEST(ChernFromConstruction, SymmetricInConePoints) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::int64_t> order(1, 12), degree(-12, 12), c(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    SeifertConstruction con{{0, {order(rng), order(rng), order(rng)}}, c(rng),
                            ints({degree(rng), degree(rng), degree(rng)})};
    const ChernClass base = chern_from_construction(con);
    std::swap(con.base.cone_orders[0], con.base.cone_orders[2]);
    std::swap(con.phi_degrees[0], con.phi_degrees[2]);
    const ChernClass swapped = chern_from_construction(con);
    EXPECT_EQ(swapped.e, base.e);
    EXPECT_EQ(swapped.chi[0], base.chi[2]);
    EXPECT_EQ(swapped.chi[2], base.chi[0]);
  }
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_seifert(make_pair({12}, 0, {4}, 0, {3})));
  EXPECT_FALSE(validate_seifert(make_pair({12}, 0, {4}, 0, {1})));
  EXPECT_TRUE(validate_seifert(make_pair({}, 17, {}, -4, {})));
  EXPECT_FALSE(validate_seifert(make_pair({12}, 0, {4, 1}, 0, {3})));
  EXPECT_FALSE(validate_seifert(make_pair({12}, 0, {12}, 0, {0})));
  EXPECT_FALSE(validate_seifert(make_pair({}, 0, {}, 0, {}, -2)));
  EXPECT_EQ(*seifert_violation(make_pair({12}, 0, {4}, 0, {1})),
            "h not in H3 at cone point 1: 12 does not divide 4");
}

TEST(Classification, Invariants) {
  const auto inv = classification_invariants(make_pair({2, 3}, 5, {1, 1}, 0, {0, 0}));
  EXPECT_EQ(inv.c1, (H2Element{5, {1, 1}}));
  EXPECT_EQ(inv.pushforward, (H2Element{0, {0, 0}}));
  EXPECT_NE(inv, classification_invariants(make_pair({2, 3}, -5, {1, 1}, 0, {0, 0})));
  EXPECT_THROW(classification_invariants(make_pair({12}, 0, {4}, 0, {1})), ValidationError);
}

TEST(TDualize, Examples) {
  EXPECT_EQ(tdualize_seifert(make_pair({12}, 5, {4}, 2, {3})), make_pair({12}, -2, {9}, -5, {8}));
  EXPECT_EQ(tdualize_seifert(make_pair({}, 3, {}, -8, {}, 2)), make_pair({}, 8, {}, -3, {}, 2));
  const auto zero = make_pair({4, 6}, 0, {0, 0}, 0, {0, 0});
  EXPECT_EQ(tdualize_seifert(zero), zero);
  EXPECT_THROW(tdualize_seifert(make_pair({12}, 0, {4}, 0, {1})), ValidationError);
}

SeifertPair random_valid_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cones(0, 4);
  std::uniform_int_distribution<std::int64_t> order(1, 30), free_part(-100, 100);
  SeifertPair p;
  p.base.genus = cones(rng);
  const int r = cones(rng);
  for (int i = 0; i < r; ++i) {
    const std::int64_t n = order(rng);
    const std::int64_t chi = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
    // Ann(chi) is generated by n / gcd(n, chi).
    const std::int64_t gen = n / std::gcd(n, chi);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
    p.base.cone_orders.push_back(n);
    p.chi.push_back(chi);
    p.a.push_back(gen * k % n);
  }
  p.e = free_part(rng);
  p.f = free_part(rng);
  return p;
}

TEST(TDualize, InvolutionClosureAndRestriction) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const SeifertPair p = random_valid_pair(rng);
    ASSERT_TRUE(validate_seifert(p));
    const SeifertPair d = tdualize_seifert(p);
    ASSERT_TRUE(validate_seifert(d));
    EXPECT_EQ(tdualize_seifert(d), p);

    const auto inv = classification_invariants(p);
    const auto dual_inv = classification_invariants(d);
    EXPECT_EQ(dual_inv.c1.free_part, -inv.pushforward.free_part);
    EXPECT_EQ(dual_inv.pushforward.free_part, -inv.c1.free_part);

    for (std::size_t i = 0; i < p.base.cone_count(); ++i) {
      const GammaPointPair local{p.base.cone_orders[i], p.chi[i], p.a[i]};
      const GammaPointPair local_dual = tdualize_gamma_point(local);
      EXPECT_EQ(local_dual.q, d.chi[i]);
      EXPECT_EQ(local_dual.s, d.a[i]);
    }
  }
}

TEST(Normalize, ReducesAndChecksShape) {
  const SeifertPair p = SeifertPair::normalized({0, {12}}, 1, {-8}, 2, {15});
  EXPECT_EQ(p.chi, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(p.a, (std::vector<std::int64_t>{3}));
  EXPECT_THROW(SeifertPair::normalized({0, {12}}, 1, {}, 2, {3}), ValidationError);
}

}  // namespace
}  // namespace tdual
