#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "facsum/identities.hpp"
#include "facsum/sequences.hpp"
#include "oracles.hpp"

using namespace facsum;

TEST_CASE("y-shift checker") {
  IdentityResult r = check_y_shift(2, 1, Rat(1));
  CHECK(r.passed);
  CHECK(r.lhs == 11);
  CHECK(r.rhs == 11);
  CHECK(check_y_shift(5, 0, Rat(7, 3)).passed);
  CHECK(check_y_shift(3, 2, Rat(1, 2)).passed);
}

TEST_CASE("unfolded binomial checker") {
  CHECK(check_unfolded_binomial(1, 4, Rat(3, 2)).passed);
  IdentityResult r = check_unfolded_binomial(2, 0, Rat(1));
  CHECK(r.passed);
  CHECK(r.lhs == 5);
  CHECK(check_unfolded_binomial(4, 2, Rat(3, 2)).passed);
  CHECK_THROWS_AS(check_unfolded_binomial(0, 1, Rat(1)), DomainError);
}

TEST_CASE("delta relation checker") {
  IdentityResult r = check_delta_relation(2, 1);
  CHECK(r.passed);
  CHECK(r.lhs == 11);  // 16 - 5
  for (std::size_t m = 1; m <= 6; ++m) {
    IdentityResult base = check_delta_relation(0, m);
    CHECK(base.passed);
    CHECK(base.lhs == Rat(static_cast<unsigned long>(m)));
  }
  CHECK(check_delta_relation(3, 2).passed);
}

TEST_CASE("inverse pair checker") {
  // Y(2,1)(x) = 1 + 3x + x^2 = T_3(x)/x.
  IdentityResult r = check_stirling_touchard_inverse(2, 1, Rat(2));
  CHECK(r.passed);
  CHECK(r.lhs == Rat(1) + Rat(6) + Rat(4));
  REQUIRE(r.paper_variant_lhs.has_value());
  CHECK_FALSE(r.note.empty());

  // k = 0 collapses to Y(n,0) = T_n; the printed variant gives T_{n-1}.
  IdentityResult k0 = check_stirling_touchard_inverse(3, 0, Rat(2));
  CHECK(k0.passed);
  CHECK(k0.lhs == poly_eval(touchard_poly(3), Rat(2)));
  REQUIRE(k0.paper_variant_lhs.has_value());
  CHECK(*k0.paper_variant_lhs == poly_eval(touchard_poly(2), Rat(2)));

  // Documented counterexample to the printed index at (2,1,x=1):
  // the variant reads T_2(1)/1 = 2 while the recurrence value is 5.
  IdentityResult c = check_stirling_touchard_inverse(2, 1, Rat(1));
  CHECK(c.passed);
  CHECK(c.lhs == 5);
  REQUIRE(c.paper_variant_lhs.has_value());
  CHECK(*c.paper_variant_lhs == 2);
  CHECK_FALSE(c.note.empty());

  IdentityResult undefined = check_stirling_touchard_inverse(0, 0, Rat(1));
  CHECK(undefined.passed);
  CHECK_FALSE(undefined.paper_variant_lhs.has_value());

  CHECK_THROWS_AS(check_stirling_touchard_inverse(2, 1, Rat(0)), DomainError);
}

TEST_CASE("r-Stirling composition checker") {
  auto results = check_rstirling_composition(2, 2);
  REQUIRE(results.size() == 5);
  const IdentityResult& m2 = results[2];
  CHECK(m2.passed);
  CHECK(m2.lhs == 7);
  CHECK(m2.rhs == 7);
  REQUIRE(m2.paper_variant_lhs.has_value());
  CHECK(*m2.paper_variant_lhs == 3);  // printed row gives {3,2} = 3, not 7
  CHECK_FALSE(m2.note.empty());

  for (const auto& r : check_rstirling_composition(4, 0)) CHECK(r.passed);

  auto small = check_rstirling_composition(1, 1);
  REQUIRE(small.size() == 3);
  CHECK(small[1].passed);
  CHECK(small[1].lhs == 1);  // {2,1} = 1

  auto trivial = check_rstirling_composition(0, 0);
  CHECK(trivial[0].passed);
  CHECK_FALSE(trivial[0].paper_variant_lhs.has_value());
}

TEST_CASE("lhs of the composition against the partition oracle") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& r : check_rstirling_composition(n, k)) {
        const std::size_t m = std::stoul(r.parameters[2].second);
        CHECK(r.lhs == Rat(BigInt(oracle::count_partitions(
                          static_cast<int>(n + k), static_cast<int>(m)))));
      }
}

TEST_CASE("diagonal checker") {
  CHECK(check_diagonal(SuperRecurrence::binomial(), 5).passed);
  CHECK(check_diagonal(SuperRecurrence::stirling2(), 4).passed);
  SuperRecurrence custom{{AffineFn::constant(Rat(1)), AffineFn{Rat(0), Rat(1), Rat(0)}},
                         0,
                         BigInt(1)};
  IdentityResult r = check_diagonal(custom, 3);
  CHECK(r.passed);
  CHECK(r.lhs == 6);
}

TEST_CASE("full default suite holds") {
  auto results = run_suite();
  CHECK(results.size() > 2000);
  for (const auto& r : results) CHECK(r.passed);

  // The printed-variant detection must have fired somewhere (discrepancies
  // are data, not failures).
  bool saw_discrepancy = false;
  for (const auto& r : results)
    if (r.paper_variant_lhs && *r.paper_variant_lhs != r.lhs &&
        r.identity_id == "touchard-inverse-pair")
      saw_discrepancy = true;
  CHECK(saw_discrepancy);
}

TEST_CASE("empty grid gives an empty report") {
  SuiteConfig config;
  config.n_values.clear();
  config.k_values.clear();
  config.x_points.clear();
  config.delta_m_values.clear();
  CHECK(run_suite(config).empty());
}

TEST_CASE("suite order is deterministic") {
  SuiteConfig config;
  config.n_values = index_range(0, 3);
  config.k_values = index_range(0, 2);
  auto a = run_suite(config);
  auto b = run_suite(config);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity_id == b[i].identity_id);
    CHECK(a[i].parameters == b[i].parameters);
    CHECK(a[i].lhs == b[i].lhs);
  }
}
