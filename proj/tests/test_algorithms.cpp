#include <doctest.h>

#include <cmath>
#include <random>

#include "motss/algorithms.hpp"
#include "motss/errors.hpp"
#include "support.hpp"

using namespace motss;

TEST_CASE("bpp_decide balances upside against downside") {
  const Bounds b = validate_bounds({1, 1}, {4, 4});
  const auto f1 = Scalarization::worst_component(2);
  // the geometric-mean point balances exactly and equality accepts
  CHECK(bpp_decide(f1, b, PriceVector({2, 2}, b)));
  CHECK_FALSE(bpp_decide(f1, b, PriceVector({1, 1}, b)));
  CHECK(bpp_decide(f1, b, PriceVector({4, 4}, b)));
  CHECK_THROWS_AS(bpp_decide(Scalarization::worst_component(3), b,
                             PriceVector({2, 2}, b)),
                  ArityMismatch);
}

TEST_CASE("run_bpp accepts at the earliest balancing step") {
  const Bounds b = validate_bounds({1, 1}, {4, 4});
  const auto f1 = Scalarization::worst_component(2);

  const InputSequence seq(b, {{1, 1}, {2, 2}, {4, 4}});
  const RunOutcome out = run_bpp(f1, seq);
  REQUIRE(out.accepted());
  CHECK(*out.accepted_at == 2);
  CHECK(out.returned.values() == std::vector<double>{2, 2});
  CHECK(out.trace == std::vector<bool>{false, true});

  const RunOutcome rejected = run_bpp(f1, InputSequence(b, {{1, 1}, {1, 2}}));
  CHECK_FALSE(rejected.accepted());
  CHECK(rejected.returned.values() == std::vector<double>{1, 1});
  CHECK(rejected.trace == std::vector<bool>{false, false});

  const RunOutcome empty = run_bpp(f1, InputSequence(b, {}));
  CHECK_FALSE(empty.accepted());
  CHECK(empty.returned == PriceVector::min_of(b));
  CHECK(empty.trace.empty());
}

TEST_CASE("rpp accepts prices at or above sqrt(Mm)") {
  const Bounds b = validate_bounds({1}, {100});
  CHECK(rpp_decide(b, 10.0));
  CHECK_FALSE(rpp_decide(b, 9.99));
  const Bounds degenerate = validate_bounds({4}, {4});
  CHECK(rpp_decide(degenerate, 4.0));
  const Bounds two = validate_bounds({1, 1}, {4, 4});
  CHECK_THROWS_AS(rpp_decide(two, 2.0), ArityMismatch);
}

TEST_CASE("run_generic hosts baseline policies") {
  const Bounds b = validate_bounds({1, 1}, {2, 2});
  const InputSequence s1(b, {{1, 2}, {2, 1}, {1, 1}});
  const RunOutcome first = run_generic(accept_first_policy(), s1);
  REQUIRE(first.accepted());
  CHECK(*first.accepted_at == 1);
  CHECK(first.returned.values() == std::vector<double>{1, 2});

  const RunOutcome none = run_generic(reject_all_policy(), s1);
  CHECK_FALSE(none.accepted());
  CHECK(none.returned == PriceVector::min_of(b));

  const InputSequence sigma(b, {{1, 1}, {1, 2}, {2, 1}});
  const RunOutcome greedy = run_generic(accept_first_policy(), sigma);
  REQUIRE(greedy.accepted());
  CHECK(*greedy.accepted_at == 1);
  CHECK(greedy.returned.values() == std::vector<double>{1, 1});
}

TEST_CASE("policies only see the revealed prefix") {
  const Bounds b = validate_bounds({1}, {100});
  std::size_t max_seen = 0;
  Policy probe = [&](std::span<const PriceVector> history,
                     const PriceVector&) {
    max_seen = std::max(max_seen, history.size());
    return false;
  };
  run_generic(probe, InputSequence(b, {{2}, {3}, {4}}));
  CHECK(max_seen == 2);  // at the last step the prefix holds T-1 elements
}

TEST_CASE("single-objective BPP with identity coincides with RPP") {
  const Bounds b = validate_bounds({1}, {100});
  const auto id = Scalarization::identity();
  for (int j = 0; j <= 2000; ++j) {
    const double p = 1.0 + 99.0 * j / 2000.0;
    CHECK(bpp_decide(id, b, PriceVector({p}, b)) == rpp_decide(b, p));
  }
}

TEST_CASE("plateau-max BPP accepts exactly p >= sqrt(Mm)/c") {
  const Bounds b = validate_bounds({1}, {100});
  const auto g = Scalarization::plateau_max(2.0, b);
  for (int j = 0; j <= 2000; ++j) {
    const double p = 1.0 + 99.0 * j / 2000.0;
    CHECK(bpp_decide(g, b, PriceVector({p}, b)) == (p >= 5.0));
  }
  // disagreement with RPP exactly on [5, 10)
  CHECK(bpp_decide(g, b, PriceVector({6}, b)));
  CHECK_FALSE(rpp_decide(b, 6.0));
  CHECK(bpp_decide(g, b, PriceVector({10}, b)));
  CHECK(rpp_decide(b, 10.0));
}

TEST_CASE("acceptance time is minimal and runs are deterministic") {
  std::mt19937_64 rng(17);
  const auto f2 = Scalarization::arithmetic_mean(2);
  for (int it = 0; it < 200; ++it) {
    const Bounds b = test::random_canonical_bounds2(rng);
    const InputSequence seq =
        test::random_sequence(rng, b, 1 + static_cast<int>(test::u01(rng) * 10));
    const RunOutcome out = run_bpp(f2, seq);
    const RunOutcome again = run_bpp(f2, seq);
    CHECK(out.accepted_at == again.accepted_at);
    CHECK(out.returned == again.returned);
    const int upto = out.accepted() ? *out.accepted_at - 1 : seq.length();
    for (int t = 0; t < upto; ++t) {
      CHECK_FALSE(bpp_decide(f2, b, seq[t]));
      CHECK_FALSE(out.trace[static_cast<std::size_t>(t)]);
    }
    if (out.accepted()) {
      CHECK(out.returned == seq[*out.accepted_at - 1]);
      CHECK(out.trace.back());
      CHECK(static_cast<int>(out.trace.size()) == *out.accepted_at);
    }
  }
}
