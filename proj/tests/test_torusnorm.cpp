#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wlift/element_io.hpp"
#include "wlift/normalizer.hpp"

using namespace wlift;
using testing_support::random_normalizer;
using testing_support::random_torus;

namespace {

/// Diagonal of exp(2 pi i mu) on the standard basis, entries +-1 expected; mu in coroot coordinates.
std::vector<std::int64_t> sl_signs(const RatVec& mu) {
  std::size_t n = mu.size() + 1;
  std::vector<std::int64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational v = (k < mu.size() ? mu[k] : Rational(0)) - (k ? mu[k - 1] : Rational(0));
    Rational twice = 2 * v;
    REQUIRE(twice.get_den() == 1);
    out[k] = mpz_class(twice.get_num()) % 2 == 0 ? 1 : -1;
  }
  return out;
}

std::vector<std::int64_t> sp_signs(const RatVec& mu) {
  std::size_t r = mu.size();
  std::vector<std::int64_t> out(2 * r);
  for (std::size_t k = 0; k < r; ++k) {
    Rational v = mu[k] - (k ? mu[k - 1] : Rational(0));
    Rational twice = 2 * v;
    REQUIRE(twice.get_den() == 1);
    out[k] = out[r + k] = mpz_class(twice.get_num()) % 2 == 0 ? 1 : -1;
  }
  return out;
}

std::vector<std::int64_t> diagonal(const oracle::IMat& m) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) REQUIRE(m[i][j] == 0);
    d.push_back(m[i][i]);
  }
  return d;
}

}  // namespace

TEST_SUITE("torusnorm") {
  TEST_CASE("sigma basics") {
    for (const char* t : {"A1", "A3", "B3", "C3", "G2", "F4", "E7"}) {
      RootDatum rd = build_root_datum(t, "simply_connected", "none");
      CHECK(sigma(rd, untwisted(weyl_identity(rd))) == normalizer_identity(rd));
      for (int i = 1; i <= rd.rank(); ++i) {
        NormalizerElt s = sigma(rd, from_word(rd, {i}, 0));
        NormalizerElt sq = multiply(rd, s, s);
        CHECK(sq.t == m_alpha(rd, i));
        CHECK(sq.w == weyl_identity(rd));
        CHECK(sq.j == 0);
      }
      RootDatum ad = build_root_datum(t, "adjoint", "none");
      NormalizerElt s0 = sigma(ad, untwisted(longest_element(ad)));
      CHECK(power(ad, s0, 2) == normalizer_identity(ad));
    }
  }

  TEST_CASE("multiply examples") {
    RootDatum sl2 = build_root_datum("A1", "simply_connected", "none");
    NormalizerElt s = sigma(sl2, from_word(sl2, {1}, 0));
    NormalizerElt sq = multiply(sl2, s, s);
    CHECK(sq.t.coords == RatVec{Rational(1, 2)});
    CHECK(order_torus(sl2, sq.t) == 2);
    CHECK(multiply(sl2, s, normalizer_identity(sl2)) == s);
    RootDatum a2 = build_root_datum("A2", "simply_connected", "none");
    NormalizerElt s1 = sigma(a2, from_word(a2, {1}, 0)), s2 = sigma(a2, from_word(a2, {2}, 0));
    CHECK(multiply(a2, multiply(a2, s1, s2), s1) == multiply(a2, multiply(a2, s2, s1), s2));
  }

  TEST_CASE("order_elt examples") {
    RootDatum a2 = build_root_datum("A2", "adjoint", "none");
    CHECK(order_elt(a2, sigma(a2, untwisted(coxeter_element(a2)))) == 3);
    RootDatum sl2 = build_root_datum("A1", "simply_connected", "none");
    CHECK(order_elt(sl2, sigma(sl2, untwisted(coxeter_element(sl2)))) == 4);
    CHECK(order_elt(sl2, normalizer_identity(sl2)) == 1);
  }

  TEST_CASE("involution_square examples") {
    for (const char* t : {"A4", "B3", "C3", "D5", "E6", "E7", "F4", "G2"}) {
      for (const char* iso : {"simply_connected", "adjoint"}) {
        RootDatum rd = build_root_datum(t, iso, "none");
        TwistedWeylElt w0 = untwisted(longest_element(rd));
        CHECK(involution_square(rd, w0) == z_G(rd));
        for (int i = 1; i <= rd.rank(); ++i) CHECK(involution_square(rd, from_word(rd, {i}, 0)) == m_alpha(rd, i));
      }
    }
    for (const char* t : {"A3", "A4", "D5", "E6"}) {
      RootDatum rd = build_root_datum(t, "simply_connected", "flip");
      TwistedWeylElt w0d{longest_element(rd), 1};
      NormalizerElt sq = power(rd, sigma(rd, w0d), 2);
      CHECK(sq.j == 0);
      CHECK(sq.t == z_G(rd));
    }
    RootDatum f4 = build_root_datum("F4", "simply_connected", "none");
    TorusElt t = involution_square(f4, untwisted(longest_element(f4, {2, 3})));
    CHECK(t == torus_from_cochar(f4, f4.rho_check({2, 3})));
    CHECK_FALSE(is_identity(t));
    CHECK_THROWS(involution_square(f4, from_word(f4, {1, 2}, 0)));
  }

  TEST_CASE("good-data powers") {
    RootDatum f4 = build_root_datum("F4", "simply_connected", "none");
    CHECK(is_identity(sigma_power_via_good_data(f4, {{{1, 2, 3, 4}, 2}})));
    TorusElt a = sigma_power_via_good_data(f4, {{{1, 2, 3, 4}, 2}, {{2, 3}, 2}});
    CHECK(order_torus(f4, a) == 2);
    RootDatum e7 = build_root_datum("E7", "simply_connected", "none");
    CHECK(is_identity(sigma_power_via_good_data(e7, {{{1, 2, 3, 4, 5, 6, 7}, 2}, {{2, 5, 7}, 2}})));
    CHECK_THROWS(sigma_power_via_good_data(f4, {{{1, 2, 3, 4}, 3}}));
    CHECK_THROWS(sigma_power_via_good_data(f4, {{{2, 3}, 2}, {{1, 2, 3, 4}, 2}}));
    CHECK_THROWS(sigma_power_via_good_data(f4, {{{1, 2}, 2}, {{3}, 2}}));
  }

  TEST_CASE("matrix Tits lifts in SL(n)") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; ++n) {
      RootDatum rd = build_root_datum("A" + std::to_string(n - 1), "simply_connected", "none");
      std::uniform_int_distribution<int> letter(1, n - 1);
      for (int k = 0; k < 60; ++k) {
        Word w(1 + k % 15);
        for (int& x : w) x = letter(rng);
        Word r = reduced_word(rd, from_word(rd, w));
        oracle::IMat m = oracle::sl_lift(n, r);
        TwistedWeylElt x = from_word(rd, r, 0);
        CHECK(order_elt(rd, sigma(rd, x)) == oracle::matrix_order(m));
        std::int64_t o = order(rd, x);
        CHECK(diagonal(oracle::matrix_power(m, o)) == sl_signs(sigma_power(rd, x).coords));
      }
    }
  }

  TEST_CASE("matrix Tits lifts in Sp(2r)") {
    std::mt19937_64 rng(4);
    for (int r = 2; r <= 4; ++r) {
      RootDatum rd = build_root_datum("C" + std::to_string(r), "simply_connected", "none");
      std::uniform_int_distribution<int> letter(1, r);
      for (int k = 0; k < 60; ++k) {
        Word w(1 + k % 17);
        for (int& x : w) x = letter(rng);
        Word red = reduced_word(rd, from_word(rd, w));
        oracle::IMat m = oracle::sp_lift(r, red);
        TwistedWeylElt x = from_word(rd, red, 0);
        CHECK(order_elt(rd, sigma(rd, x)) == oracle::matrix_order(m));
        std::int64_t o = order(rd, x);
        CHECK(diagonal(oracle::matrix_power(m, o)) == sp_signs(sigma_power(rd, x).coords));
      }
    }
  }

  TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(21);
    for (const char* g : {"SL3", "PSp4", "2A3", "3D4", "G2"}) {
      RootDatum rd = parse_datum(g);
      for (int k = 0; k < 100; ++k) {
        NormalizerElt a = random_normalizer(rd, rng), b = random_normalizer(rd, rng), c = random_normalizer(rd, rng);
        CHECK(multiply(rd, multiply(rd, a, b), c) == multiply(rd, a, multiply(rd, b, c)));
        CHECK(multiply(rd, a, inverse(rd, a)) == normalizer_identity(rd));
      }
    }
  }

  TEST_CASE("conjugation acts on the torus through W") {
    std::mt19937_64 rng(22);
    for (const char* g : {"SL4", "Spin7", "PSp6", "G2", "E6"}) {
      RootDatum rd = parse_datum(g);
      for (int k = 0; k < 50; ++k) {
        WeylElt w = random_element(rd, rng);
        TorusElt t = random_torus(rd, rng);
        NormalizerElt c = conjugate(rd, sigma(rd, untwisted(w)), torus_part(rd, t));
        CHECK(c == torus_part(rd, torus_from_cochar(rd, act(w, t.coords))));
      }
    }
  }

  TEST_CASE("projection is a homomorphism") {
    std::mt19937_64 rng(23);
    RootDatum rd = parse_datum("2E6");
    for (int k = 0; k < 50; ++k) {
      NormalizerElt a = random_normalizer(rd, rng), b = random_normalizer(rd, rng);
      CHECK(projection(multiply(rd, a, b)) == multiply(rd, projection(a), projection(b)));
    }
  }
}
