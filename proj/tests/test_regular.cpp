#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "wlift/classes.hpp"
#include "wlift/element_io.hpp"
#include "wlift/regular.hpp"

using namespace wlift;
using testing_support::to_oracle;

namespace {

bool has(const std::vector<int>& v, int d) { return std::find(v.begin(), v.end(), d) != v.end(); }

std::vector<TwistedWeylElt> all_elements(const RootDatum& rd) {
  std::vector<TwistedWeylElt> out;
  for (int j = 0; j < rd.delta_order(); ++j)
    for (const auto& w : enumerate_weyl_group(rd)) out.push_back({w, j});
  return out;
}

}  // namespace

TEST_SUITE("regular") {
  TEST_CASE("Coxeter elements are regular of order h") {
    for (const char* t : {"A1", "A4", "A7", "B3", "B6", "C4", "D4", "D6", "G2", "F4", "E6", "E7", "E8"}) {
      RootDatum rd = build_root_datum(t, "simply_connected", "none");
      TwistedWeylElt cox = untwisted(coxeter_element(rd));
      RegularityReport r = regularity(rd, cox);
      CAPTURE(t);
      CHECK(r.z_regular);
      CHECK(has(r.regular_orders, static_cast<int>(r.order)));
      CHECK(order_lcm_check(rd, cox, static_cast<int>(r.order)));
      if (r.order > 1) CHECK(verify_regular_power(rd, cox, static_cast<int>(r.order)));
    }
  }

  TEST_CASE("identity is 1-regular") {
    RootDatum rd = parse_datum("SL4");
    RegularityReport r = regularity(rd, untwisted(weyl_identity(rd)));
    CHECK(r.regular_orders == std::vector<int>{1});
    auto u = conjugator_to_delta(rd, untwisted(weyl_identity(rd)));
    REQUIRE(u);
    CHECK(conjugate(rd, *u, untwisted(weyl_identity(rd))) == untwisted(weyl_identity(rd)));
    CHECK_THROWS(verify_regular_power(rd, untwisted(weyl_identity(rd)), 1));
  }

  TEST_CASE("twisted A5 example") {
    RootDatum rd = parse_datum("2A5");
    TwistedWeylElt x = parse_element(rd, "13524-13524d");
    RegularityReport r = regularity(rd, x);
    CHECK(r.order == 6);
    CHECK(has(r.regular_orders, 3));
    CHECK(order_lcm_check(rd, x, 3));
    CHECK(verify_regular_power(rd, x, 3));
    CHECK(is_identity(sigma_power(rd, x)));
    CHECK(z_G(rd) != torus_identity(rd));
    CHECK(is_identity(torus_scale(rd, z_G(rd), 2)));
  }

  TEST_CASE("twisted Coxeter of 2A3") {
    RootDatum rd = parse_datum("2A3");
    TwistedWeylElt x = from_word(rd, Word{1, 2}, 1);
    RegularityReport r = regularity(rd, x);
    REQUIRE_FALSE(r.regular_orders.empty());
    for (int d : r.regular_orders) {
      CHECK(d % 2 == 0);
      CHECK(order_lcm_check(rd, x, d));
    }
    CHECK(r.z_regular);
    CHECK(r.order == 6);
  }

  TEST_CASE("lcm check rejects non-regular orders") {
    RootDatum rd = parse_datum("SL3");
    CHECK(is_d_regular(rd, from_word(rd, Word{1}, 0), 2));
    CHECK_THROWS(order_lcm_check(rd, from_word(rd, Word{1}, 0), 3));
  }

  TEST_CASE("eigenspace dimension equals cyclotomic multiplicity") {
    for (const char* g : {"A3", "B3", "C3", "G2", "A1xA2"}) {
      RootDatum rd = build_root_datum(g, "simply_connected", "none");
      for (const auto& x : all_elements(rd)) {
        RegularityReport r = regularity(rd, x);
        REQUIRE(r.eigenspace_dim.size() == r.charpoly_multiplicity.size());
        for (const auto& [d, dim] : r.eigenspace_dim) CHECK(dim == r.charpoly_multiplicity.at(d));
      }
    }
  }

  TEST_CASE("floating-point eigenvectors agree") {
    for (const char* g : {"SL4", "Spin7", "Sp6", "G2", "2A3", "2D4"}) {
      RootDatum rd = parse_datum(g);
      oracle::IMat cartan = to_oracle(rd.cartan());
      for (const auto& x : all_elements(rd)) {
        RegularityReport r = regularity(rd, x);
        oracle::IMat m = to_oracle(action_matrix(rd, x));
        for (const auto& [d, dim] : r.eigenspace_dim) {
          CAPTURE(g);
          CAPTURE(format_element(rd, x));
          CAPTURE(d);
          CHECK(oracle::numerically_regular(m, cartan, d) == has(r.regular_orders, d));
        }
      }
    }
  }

  TEST_CASE("untwisted regular elements have d = o(w)") {
    for (const char* g : {"A3", "B3", "C3", "G2", "A1xA1"}) {
      RootDatum rd = build_root_datum(g, "simply_connected", "none");
      for (const auto& w : enumerate_weyl_group(rd)) {
        RegularityReport r = regularity(rd, untwisted(w));
        for (int d : r.regular_orders) CHECK(d == r.order);
        CHECK(r.z_regular == !r.regular_orders.empty());
      }
    }
  }

  TEST_CASE("d = 1 means conjugate to delta") {
    for (const char* g : {"SL3", "Spin7", "2A3", "2A2"}) {
      RootDatum rd = parse_datum(g);
      for (const auto& x : all_elements(rd)) {
        RegularityReport r = regularity(rd, x);
        auto u = conjugator_to_delta(rd, x);
        CHECK(has(r.regular_orders, 1) == u.has_value());
        if (u) CHECK(conjugate(rd, *u, x) == TwistedWeylElt{weyl_identity(rd), x.j});
      }
    }
  }

  TEST_CASE("regular orders divide the element order") {
    std::mt19937_64 rng(41);
    for (const char* g : {"E6", "2E6", "F4", "Spin9", "2D5"}) {
      RootDatum rd = parse_datum(g);
      std::uniform_int_distribution<int> jd(0, rd.delta_order() - 1);
      for (int k = 0; k < 40; ++k) {
        TwistedWeylElt x{random_element(rd, rng), jd(rng)};
        RegularityReport r = regularity(rd, x);
        for (int d : r.regular_orders) {
          CHECK(r.order % d == 0);
          CHECK(order_lcm_check(rd, x, d));
        }
      }
    }
  }

  TEST_CASE("regularity is conjugation invariant") {
    std::mt19937_64 rng(42);
    for (const char* g : {"SL5", "Sp6", "2A4", "F4", "2D4"}) {
      RootDatum rd = parse_datum(g);
      std::uniform_int_distribution<int> jd(0, rd.delta_order() - 1);
      for (int k = 0; k < 40; ++k) {
        TwistedWeylElt x{random_element(rd, rng), jd(rng)};
        TwistedWeylElt y = conjugate(rd, random_element(rd, rng), x);
        CHECK(regularity(rd, x).regular_orders == regularity(rd, y).regular_orders);
      }
    }
  }
}
