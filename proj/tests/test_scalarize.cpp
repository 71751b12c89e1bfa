#include <doctest.h>

#include <cmath>
#include <random>

#include "motss/errors.hpp"
#include "motss/scalarize.hpp"
#include "support.hpp"

using namespace motss;

TEST_CASE("built-in evaluations") {
  const auto f1 = Scalarization::worst_component(3);
  CHECK(f1({std::vector<double>{1, 2, 3}}) == 3.0);

  const auto f3 = Scalarization::geometric_mean(2);
  CHECK(f3({std::vector<double>{4, 9}}) == doctest::Approx(6.0).epsilon(1e-14));

  const Bounds single = validate_bounds({1}, {100});
  const auto g = Scalarization::plateau_max(2.0, single);
  CHECK(g({std::vector<double>{3}}) == 20.0);  // c*sqrt(M/m) dominates
  CHECK(g({std::vector<double>{25}}) == 25.0);

  const auto f4 = Scalarization::best_component(2);
  CHECK(f4({std::vector<double>{3, 2}}) == 2.0);

  const auto id = Scalarization::identity();
  CHECK(id({std::vector<double>{7.5}}) == 7.5);
}

TEST_CASE("evaluation errors") {
  const auto f2 = Scalarization::arithmetic_mean(2);
  CHECK_THROWS_AS(f2({std::vector<double>{1, 2, 3}}), ArityMismatch);
  const auto f3 = Scalarization::geometric_mean(2);
  CHECK_THROWS_AS(f3({std::vector<double>{1, -2}}), NonPositiveInput);
  const Bounds single = validate_bounds({1}, {100});
  const auto g = Scalarization::plateau_max(2.0, single);
  CHECK_THROWS_AS(g({std::vector<double>{0.0}}), NonPositiveInput);
}

TEST_CASE("plateau-max parameter range") {
  const Bounds single = validate_bounds({1}, {100});
  CHECK_THROWS_AS(Scalarization::plateau_max(1.0, single), InvalidParameter);
  CHECK_THROWS_AS(Scalarization::plateau_max(10.0, single), InvalidParameter);
  CHECK_THROWS_AS(Scalarization::plateau_max(0.5, single), InvalidParameter);
  const Bounds two = validate_bounds({1, 1}, {4, 4});
  CHECK_THROWS_AS(Scalarization::plateau_max(1.5, two), ArityMismatch);
}

TEST_CASE("geometric mean survives products that would overflow") {
  const auto f3 = Scalarization::geometric_mean(2);
  CHECK(f3({std::vector<double>{1e300, 1e300}}) ==
        doctest::Approx(1e300).epsilon(1e-12));
}

TEST_CASE("min <= gmean <= amean <= max pointwise") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    const int k = 1 + static_cast<int>(test::u01(rng) * 4);
    const auto f1 = Scalarization::worst_component(k);
    const auto f2 = Scalarization::arithmetic_mean(k);
    const auto f3 = Scalarization::geometric_mean(k);
    const auto f4 = Scalarization::best_component(k);
    std::vector<double> v(static_cast<std::size_t>(k));
    for (double& x : v) x = test::log_uniform(rng, 0.01, 100.0);
    CHECK(f4(v) <= f3(v) + 1e-12);
    CHECK(f3(v) <= f2(v) + 1e-12);
    CHECK(f2(v) <= f1(v) + 1e-12);
  }
}

TEST_CASE("unit vector maps to 1; plateau g(1) = c*sqrt(M/m)") {
  for (int k = 1; k <= 4; ++k) {
    const std::vector<double> ones(static_cast<std::size_t>(k), 1.0);
    CHECK(Scalarization::worst_component(k)(ones) == 1.0);
    CHECK(Scalarization::arithmetic_mean(k)(ones) == 1.0);
    CHECK(Scalarization::geometric_mean(k)(ones) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(Scalarization::best_component(k)(ones) == 1.0);
  }
  const Bounds single = validate_bounds({1}, {100});
  const auto g = Scalarization::plateau_max(2.0, single);
  CHECK(g({std::vector<double>{1.0}}) == 20.0);
}

TEST_CASE("plateau-max reproduces the three comparison regimes") {
  const double m = 1.0, M = 100.0, c = 2.0;
  const Bounds single = validate_bounds({m}, {M});
  const auto g = Scalarization::plateau_max(c, single);
  const double root = std::sqrt(M * m);  // 10
  auto lhs = [&](double p) { return g({std::vector<double>{M / p}}); };
  auto rhs = [&](double p) { return g({std::vector<double>{p / m}}); };

  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const double below = test::log_uniform(rng, m, root / c * 0.999);
    CHECK(lhs(below) > rhs(below));
    const double inside = test::log_uniform(rng, root / c, c * root);
    CHECK(lhs(inside) == rhs(inside));
    const double above = test::log_uniform(rng, c * root * 1.001, M);
    CHECK(lhs(above) < rhs(above));
  }
}

TEST_CASE("f1..f4 are symmetric under argument permutation") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const int k = 2 + static_cast<int>(test::u01(rng) * 3);
    std::vector<double> v(static_cast<std::size_t>(k));
    for (double& x : v) x = test::log_uniform(rng, 0.1, 10.0);
    std::vector<double> w = v;
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(Scalarization::worst_component(k)(v) ==
          Scalarization::worst_component(k)(w));
    CHECK(Scalarization::best_component(k)(v) ==
          Scalarization::best_component(k)(w));
    CHECK(Scalarization::arithmetic_mean(k)(v) ==
          doctest::Approx(Scalarization::arithmetic_mean(k)(w)).epsilon(1e-14));
    CHECK(Scalarization::geometric_mean(k)(v) ==
          doctest::Approx(Scalarization::geometric_mean(k)(w)).epsilon(1e-14));
  }
}

TEST_CASE("check_monotone accepts the built-ins and flags an antitone double") {
  CHECK(check_monotone(Scalarization::arithmetic_mean(3), 1000, 42));
  CHECK(check_monotone(Scalarization::best_component(3), 1000, 42));
  CHECK(check_monotone(Scalarization::worst_component(2), 1000, 42));
  CHECK(check_monotone(Scalarization::geometric_mean(2), 1000, 42));

  const auto negated = Scalarization::custom(
      2,
      [](std::span<const double> v) {
        return -*std::max_element(v.begin(), v.end());
      },
      true, "negated_max");
  CHECK_FALSE(check_monotone(negated, 1000, 42));

  // deterministic for a fixed seed
  CHECK(check_monotone(Scalarization::arithmetic_mean(2), 100, 9) ==
        check_monotone(Scalarization::arithmetic_mean(2), 100, 9));
  CHECK_THROWS_AS(check_monotone(Scalarization::identity(), 0, 1),
                  InvalidParameter);
}
