#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wlift/normalizer.hpp"
#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace testing_support {

inline oracle::IMat to_oracle(const wlift::IntMat& m) {
  oracle::IMat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Random torsion point with coordinates in (1/den) Z.
inline wlift::TorusElt random_torus(const wlift::RootDatum& rd, std::mt19937_64& rng, int den = 4) {
  std::uniform_int_distribution<int> u(0, 4 * den - 1);
  wlift::RatVec mu(rd.rank());
  for (auto& x : mu) x = wlift::Rational(u(rng), den);
  return wlift::torus_from_cochar(rd, mu);
}

inline wlift::NormalizerElt random_normalizer(const wlift::RootDatum& rd, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> j(0, rd.delta_order() - 1);
  return {random_torus(rd, rng), wlift::random_element(rd, rng), j(rng)};
}

/// Every w (or w delta) with x^2 = 1.
inline std::vector<wlift::TwistedWeylElt> twisted_involutions(const wlift::RootDatum& rd, int j) {
  std::vector<wlift::TwistedWeylElt> out;
  for (const auto& w : wlift::enumerate_weyl_group(rd)) {
    wlift::TwistedWeylElt x{w, j};
    if (wlift::twisted_involution_test(rd, x)) out.push_back(x);
  }
  return out;
}

}  // namespace testing_support
