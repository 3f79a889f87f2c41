#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlift/matrix.hpp"
#include "wlift/rational.hpp"

namespace wlift {

/// One simple factor of the Dynkin diagram. Nodes offset+1 .. offset+rank.
struct SimpleComponent {
  char family = 'A';
  int rank = 0;
  int offset = 0;
};

/// Cartan matrix of a simple type, Bourbaki numbering, C[i][j] = <alpha_i, coroot_j>.
IntMat cartan_matrix(char family, int rank);

/// Parses "A3", "E7", "A1xA1", "B2xG2". Throws on unknown or invalid types.
std::vector<SimpleComponent> parse_type_label(const std::string& label);

/// Throws std::invalid_argument unless the matrix is a Cartan matrix of finite type.
void validate_cartan(const IntMat& c);

/// Lattice spanned by the given rational vectors (must have full rank); columns of the result.
RatMat lattice_basis(const std::vector<RatVec>& generators, int dim);

class RootDatum {
 public:
  /// Validates all invariants. `delta` is a 0-based permutation (empty for none).
  RootDatum(IntMat cartan, RatMat cochar_basis, std::vector<int> delta, std::string type_label,
            std::vector<SimpleComponent> components, std::string isogeny_name);

  int rank() const { return n_; }
  const IntMat& cartan() const { return cartan_; }
  const std::string& type_label() const { return type_label_; }
  const std::string& isogeny_name() const { return isogeny_name_; }
  const std::vector<SimpleComponent>& components() const { return components_; }
  bool is_simple() const { return components_.size() == 1; }
  /// Family letter of a simple datum, '?' otherwise.
  char family() const { return is_simple() ? components_[0].family : '?'; }

  const RatMat& cochar_basis() const { return basis_; }
  const RatMat& cochar_basis_inverse() const { return basis_inv_; }

  bool has_delta() const { return !delta_.empty(); }
  /// 0-based permutation; identity when absent.
  const std::vector<int>& delta() const { return delta_perm_; }
  int delta_order() const { return delta_order_; }
  /// Action of delta^j on simple-coroot coordinates.
  const IntMat& delta_matrix(int j = 1) const;
  /// delta^j applied to a 1-based simple index.
  int delta_index(int i, int j) const;

  /// 0-based reflection matrix; s_i(mu) = mu - <alpha_i, mu> coroot_i.
  const IntMat& reflection0(int i) const { return refl_[i]; }
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  /// Row vector a^T C: the functional mu -> <alpha, mu> for the root with coefficients a.
  const std::vector<IntVec>& root_functionals() const { return root_fun_; }

  /// One-half the sum of positive coroots of the subsystem on S (1-based indices).
  RatVec rho_check(const std::vector<int>& S) const;
  RatVec rho_check() const;

  /// Coordinates of mu in the cochar basis.
  RatVec lattice_coords(const RatVec& mu) const;
  bool in_cochar_lattice(const RatVec& mu) const;
  /// Simple-coroot coordinates of the fundamental coweights (columns).
  const RatMat& coweights() const { return coweights_; }

  /// [P-check : X_*], the order of the center.
  Integer center_order() const;

  std::string describe_name() const;

 private:
  int n_;
  IntMat cartan_;
  RatMat basis_;
  RatMat basis_inv_;
  RatMat coweights_;
  std::vector<int> delta_;
  std::vector<int> delta_perm_;
  int delta_order_ = 1;
  std::vector<IntMat> delta_pows_;
  std::string type_label_;
  std::vector<SimpleComponent> components_;
  std::string isogeny_name_;
  std::vector<IntMat> refl_;
  std::vector<IntVec> pos_coroots_;
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> root_fun_;
};

/// Finite-order torus point: coroot coordinates reduced modulo X_*.
struct TorusElt {
  RatVec coords;
  bool operator==(const TorusElt& o) const { return coords == o.coords; }
  bool operator!=(const TorusElt& o) const { return !(*this == o); }
  bool operator<(const TorusElt& o) const { return coords < o.coords; }
};

/// Builds a datum from a type label, an isogeny keyword and a delta keyword.
/// Isogeny: "simply_connected" | "sc" | "adjoint" | "ad" | "SO(2n)" | "SO" | "Semispin" |
/// "SL(n)/mu_k" | explicit basis "[[p/q,..],..]" (columns are basis vectors).
/// Delta: "none" | "flip" | "triality" | explicit 1-based permutation "2,1,3".
RootDatum build_root_datum(const std::string& type_label, const std::string& isogeny_spec,
                           const std::string& delta_spec = "none");

/// Same lattice with a new diagram automorphism ("none", "flip", "triality" or a permutation).
/// Throws when delta does not preserve X_*.
RootDatum with_delta(const RootDatum& rd, const std::string& delta_spec);

/// Named groups and shorthands: "SL4", "Spin8", "PSp6", "SO7", "PGL2", "PSL4", "G2",
/// "2A5", "3D4", "2E6", "C3:adjoint", "F4 adjoint", "E7 sc".
RootDatum parse_datum(const std::string& text);

/// JSON document with fields type, rank, cartan, isogeny, delta.
RootDatum root_datum_from_json(const std::string& json_text);
std::string root_datum_to_json(const RootDatum& rd);

TorusElt torus_from_cochar(const RootDatum& rd, const RatVec& mu);
TorusElt torus_identity(const RootDatum& rd);
TorusElt torus_add(const RootDatum& rd, const TorusElt& a, const TorusElt& b);
TorusElt torus_neg(const RootDatum& rd, const TorusElt& a);
TorusElt torus_scale(const RootDatum& rd, const TorusElt& a, const Integer& k);
bool is_identity(const TorusElt& t);

/// <chi, t> mod 1 where chi is given in the basis dual to the cochar basis.
Rational evaluate(const RootDatum& rd, const IntVec& chi, const TorusElt& t);
/// alpha(t) mod 1 for a root given by simple-root coefficients.
Rational evaluate_root(const RootDatum& rd, const IntVec& root, const TorusElt& t);

Integer order_torus(const RootDatum& rd, const TorusElt& t);

/// m_alpha = coroot(-1) for the simple root with 1-based index i.
TorusElt m_alpha(const RootDatum& rd, int i);
/// m_alpha for an arbitrary coroot.
TorusElt m_alpha(const RootDatum& rd, const IntVec& coroot);
/// z_G = (2 rho-check)(-1).
TorusElt z_G(const RootDatum& rd);
/// (2 rho-check(S))(-1).
TorusElt z_S(const RootDatum& rd, const std::vector<int>& S);

bool rho_in_cochar_lattice(const RootDatum& rd);
bool is_central(const RootDatum& rd, const TorusElt& t);
/// All elements of Z(G) = P-check / X_*, sorted.
std::vector<TorusElt> center_elements(const RootDatum& rd);

std::string to_string(const TorusElt& t);

}  // namespace wlift
