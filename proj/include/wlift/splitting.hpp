#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlift/normalizer.hpp"
#include "wlift/root_datum.hpp"

namespace wlift {

/// alpha (1-based simple index) -> t_alpha; the lift of s_alpha is t_alpha sigma_alpha.
using SplittingCertificate = std::map<int, TorusElt>;

struct Obstruction {
  enum class Kind { RhoCheck, EllipticClass } kind = Kind::RhoCheck;
  std::string label;
  bool twisted = false;
  std::int64_t weyl_order = 0;
  std::int64_t lift_order = 0;
  std::string describe() const;
};

enum class VerdictSource { Classification, SearchCertificate, Obstruction, Unknown };
std::string to_string(VerdictSource s);

struct SplittingVerdict {
  /// Unset when nothing is decided (unrecognized isogeny, or a search without a certificate).
  std::optional<bool> splits;
  VerdictSource source = VerdictSource::Unknown;
  std::vector<Obstruction> obstructions;
  std::optional<SplittingCertificate> certificate;
  /// Named group recognized by lattice comparison, or a note on why none was.
  std::string group;
  std::string note;
};

/// Case list for simple data: A (|Z| odd or SL(4)/mu_2), B adjoint, C adjoint with n <= 2,
/// D (SO, adjoint, Semispin(8)), G2; no for F4, E6, E7, E8. char2 = true always splits.
SplittingVerdict splits_classification(const RootDatum& rd, bool char2 = false);

/// Name of the isogeny recognized by comparing X_* with the standard lattices of the type.
std::string recognize_isogeny(const RootDatum& rd);

/// (a) rho-check not in X_*; (b) elliptic classes, twisted ones included when delta preserves X_*,
/// with a nontrivial sigma power.
std::vector<Obstruction> obstruction_report(const RootDatum& rd);

/// Checks t_alpha sigma_alpha squares to 1 and every braid relation (g_a g_b)^{m_ab} = 1.
bool verify_certificate(const RootDatum& rd, const SplittingCertificate& cert);

struct SearchOptions {
  int torsion_bound = 2;
  /// Stop after this many pairwise-inequivalent certificates.
  int max_certificates = 1;
};

struct SearchResult {
  std::vector<SplittingCertificate> certificates;
  bool heuristic_used = false;
  bool full_search_used = false;
  std::size_t candidates_checked = 0;
};

/// Searches t_alpha in (1/k) X_* / X_*. Throws when the per-root candidate space exceeds 10^7.
SearchResult search_splittings(const RootDatum& rd, const SearchOptions& opts);
SplittingVerdict search_splitting(const RootDatum& rd, int torsion_bound);

/// Exists a central z, constant on conjugate simple roots, and mu with
/// t'_alpha - t_alpha - z_alpha = mu - s_alpha(mu) mod X_* for every alpha.
bool splittings_equivalent(const RootDatum& rd, const SplittingCertificate& a, const SplittingCertificate& b);

std::string to_string(const SplittingCertificate& c);

}  // namespace wlift
