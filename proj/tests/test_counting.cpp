#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cubal/counting.hpp"
#include "cubal/cubic.hpp"
#include "cubal/free_construction.hpp"

using namespace cubal;

TEST_CASE("atom counts per stage") {
  const long expect[] = {1, 4, 13, 40, 121, 364, 1093, 3280};
  for (unsigned k = 0; k <= 7; ++k) CHECK(alpha_total(k) == expect[k]);
  // the recurrence 3n+1, pushed far beyond what build() covers
  BigCount prev = alpha_total(0);
  for (unsigned k = 1; k <= 40; ++k) {
    BigCount cur = alpha_total(k);
    CHECK(cur == 3 * prev + 1);
    prev = cur;
  }
}

TEST_CASE("atoms below a meet of distinct mid-terms") {
  CHECK(alpha_distinct_meet(1, 0) == 4);
  CHECK(alpha_distinct_meet(1, 1) == 1);
  CHECK(alpha_distinct_meet(1, 2) == 0);
  CHECK(alpha_distinct_meet(3, 2) == 4);
  CHECK_THROWS_AS(alpha_distinct_meet(1, 3), std::invalid_argument);

  // n = 1 at k = 1: the single atom below ¬s1 ∧ t1
  FreeInstance one = build(1);
  Element mid1 = difference(one.t(1), one.s(1));
  CHECK(atoms_below(mid1) == 1);
  // n = k+1 forces the j = 0 term in, and t0 ∧ (¬s1 ∧ t1) vanishes
  Element mid0 = difference(one.t(0), one.s(0));
  CHECK(meet(mid0, mid1).is_bottom());
  // k = 3, n = 2: every pair of distinct mid-terms with j >= 1
  FreeInstance three = build(3);
  for (unsigned a = 1; a <= 3; ++a) {
    for (unsigned b = a + 1; b <= 3; ++b) {
      Element m = meet(difference(three.t(a), three.s(a)),
                       difference(three.t(b), three.s(b)));
      CHECK(atoms_below(m) == 4);
    }
  }
}

TEST_CASE("atoms in an upper interval and the localization size") {
  FreeInstance one = build(1);
  const BoolAlg& B = one.algebra;
  CHECK(atoms_in_upper_interval(B, interval_top(B)) == 0);
  CHECK(atoms_in_upper_interval(B, Interval(B.bottom(), B.bottom())) == 4);
  CHECK(atoms_in_upper_interval(B, one.gens[0]) == 3);
  CHECK(localization_size(B, one.gens[0]) == 27);
  CHECK(localization_size(B, one.gens[0]) ==
        BigCount(long(localization(B, one.gens[0]).size())));

  BoolAlg P = BoolAlg::power_set(3);
  for (const auto& x : all_intervals(P)) {
    BigCount expect(long(localization(P, x).size()));
    CHECK(localization_size(P, x) == expect);
    // the counted atoms are the ones not strictly inside the interval
    BigCount strict = atoms_below(difference(x.hi(), x.lo()));
    CHECK(atoms_in_upper_interval(P, x) == BigCount(3) - strict);
  }

  FreeInstance two = build(2);
  for (const auto& g : two.gens) {
    CHECK(atoms_in_upper_interval(two.algebra, g) == 9);
    CHECK(localization_size(two.algebra, g) == 19683);
  }
  CHECK_THROWS_AS(atoms_in_upper_interval(P, one.gens[0]), std::invalid_argument);
}

TEST_CASE("eta: recurrence, closed form, and the intersection of localizations") {
  FreeInstance one = build(1);
  {
    auto e = eta(one, {1});
    REQUIRE(e.size() == 1);
    CHECK(e[0] == one.gens[1]);
  }
  {
    auto e = eta(one, {0, 1});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == one.gens[0]);
    Element hi = join(one.t(0), difference(one.t(1), one.s(1)));
    CHECK(e[1] == Interval(one.algebra.bottom(), hi));
    // L_{I0} ∩ L_{I1} is exactly L_{eta_1}
    auto L0 = localization(one.algebra, one.gens[0]);
    auto L1 = localization(one.algebra, one.gens[1]);
    std::vector<Interval> inter;
    std::set_intersection(L0.begin(), L0.end(), L1.begin(), L1.end(),
                          std::back_inserter(inter));
    CHECK(inter == localization(one.algebra, e[1]));
  }
  for (unsigned k = 0; k <= 3; ++k) {
    FreeInstance inst = build(k);
    for (uint32_t mask = 1; mask < (1u << (k + 1)); ++mask) {
      std::vector<unsigned> J;
      for (unsigned j = 0; j <= k; ++j)
        if ((mask >> j) & 1u) J.push_back(j);
      auto e = eta(inst, J);
      REQUIRE(e.size() == J.size());
      for (unsigned i = 0; i < J.size(); ++i)
        CHECK(e[i] == eta_closed_form(inst, J, i));
    }
  }
  CHECK_THROWS_AS(eta(one, {}), std::invalid_argument);
  CHECK_THROWS_AS(eta(one, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(eta(one, {2}), std::invalid_argument);
  CHECK_THROWS_AS(eta_closed_form(one, {0, 1}, 2), std::out_of_range);
}

TEST_CASE("phi") {
  CHECK(phi(2, 0) == 9);
  CHECK(phi(2, 1) == 6);
  CHECK(phi(2, 2) == 4);
  BigCount p3 = 1, p2 = 1;
  for (unsigned k = 0; k <= 8; ++k) {
    CHECK(phi(k, 0) == p3);
    CHECK(phi(k, k) == p2);
    p3 *= 3;
    p2 *= 2;
  }
  CHECK_THROWS_AS(phi(2, 3), std::invalid_argument);
}

TEST_CASE("the eta chains carry phi-many upper atoms") {
  for (unsigned k = 0; k <= 3; ++k) {
    FreeInstance inst = build(k);
    for (uint32_t mask = 1; mask < (1u << (k + 1)); ++mask) {
      std::vector<unsigned> J;
      for (unsigned j = 0; j <= k; ++j)
        if ((mask >> j) & 1u) J.push_back(j);
      auto e = eta(inst, J);
      for (unsigned i = 0; i < J.size(); ++i)
        CHECK(atoms_in_upper_interval(inst.algebra, e[i]) == phi(k, i));
    }
  }
}

TEST_CASE("free algebra sizes") {
  CHECK(free_algebra_size(1) == 3);
  CHECK(free_algebra_size(2) == 45);
  CHECK(free_algebra_size(3) == 56943);
  CHECK(free_algebra_size(12) > 0);
  CHECK_THROWS_AS(free_algebra_size(0), std::invalid_argument);
  CHECK_THROWS_AS(free_algebra_size(13), std::invalid_argument);
}

TEST_CASE("embedding bound dominates the exact size") {
  CHECK(embedding_upper_bound(1) == 81);
  CHECK(embedding_upper_bound(2) == 43046721);
  for (unsigned m = 1; m <= 8; ++m)
    CHECK(free_algebra_size(m) <= embedding_upper_bound(m));
  CHECK_THROWS_AS(embedding_upper_bound(0), std::invalid_argument);
}

TEST_CASE("the inclusion-exclusion identity behind the size formula") {
  // sum_j C(i+1, j) (-1)^j (3^(k+1-j) - 1)  ==  3^(k-i) * 2^(i+1)
  for (unsigned k = 0; k <= 6; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      BigCount sum = 0;
      for (unsigned j = 0; j <= i + 1; ++j) {
        BigCount binom;
        mpz_bin_uiui(binom.get_mpz_t(), i + 1, j);
        BigCount term = binom * (2 * alpha_distinct_meet(k, j));
        if (j % 2 == 0)
          sum += term;
        else
          sum -= term;
      }
      BigCount rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), 3, k - i);
      BigCount two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, i + 1);
      CHECK(sum == rhs * two);
    }
  }
}

TEST_CASE("size tables") {
  std::string text = size_table_text(3);
  CHECK(text.find("free_size") != std::string::npos);
  CHECK(text.find("upper_bound") != std::string::npos);
  CHECK(text.find("56943") != std::string::npos);
  CHECK(text == size_table_text(3));
  // bounds beyond 24 digits are elided with their digit count
  std::string wide = size_table_text(5);
  CHECK(wide.find("digits)") != std::string::npos);

  nlohmann::json j = size_table_json(2);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["m"] == 1);
  CHECK(j["rows"][0]["atoms"] == "1");
  CHECK(j["rows"][0]["free_size"] == "3");
  CHECK(j["rows"][0]["upper_bound"] == "81");
  CHECK(j["rows"][1]["atoms"] == "4");
  CHECK(j["rows"][1]["free_size"] == "45");
  CHECK(j["rows"][1]["upper_bound"] == "43046721");
}
