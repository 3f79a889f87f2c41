#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wlift/classical.hpp"
#include "wlift/normalizer.hpp"
#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace wlift {

struct EllipticClassRecord {
  std::string label;
  bool twisted = false;
  std::optional<Word> rep_word;
  /// delta exponent of the representative.
  int rep_j = 0;
  /// Tabulated order (exceptional tables) or the formula 2 lcm(a_i) (classical).
  std::int64_t order = 0;
  std::optional<GoodData> good_data;
  std::optional<Partition> partition;
  /// Cyclotomic factorization of the characteristic polynomial, when known.
  std::optional<std::string> charpoly;
  /// "table", "construction", "enumeration", "sampled" or "user"; empty without a representative.
  std::string rep_source;
};

/// Elliptic classes of W (twisted = false) or of the coset W delta (twisted = true).
std::vector<EllipticClassRecord> elliptic_classes(const RootDatum& rd, bool twisted);

/// Label lookup; accepts "label@order" for labels that occur twice and partitions "[2,1]".
const EllipticClassRecord& find_class(const std::vector<EllipticClassRecord>& records,
                                      const std::string& label);

TwistedWeylElt representative(const RootDatum& rd, const EllipticClassRecord& record);

/// Integer characteristic polynomial of the action, low degree first.
std::vector<std::int64_t> integer_charpoly(const IntMat& m);

/// Attaches representatives to records that have a characteristic polynomial but no word, by
/// drawing seeded random elements. Returns the number attached.
int attach_sampled_representatives(const RootDatum& rd, std::vector<EllipticClassRecord>& records,
                                   int samples, std::uint64_t seed);

/// Parses "label: word" lines, validates each word against its record (ellipticity, order,
/// characteristic polynomial) and attaches it. Returns one message per rejected line.
std::vector<std::string> apply_word_file(const RootDatum& rd, std::vector<EllipticClassRecord>& records,
                                         std::istream& in);

enum class LiftMethod { EllipticTits, OddOrder, TorsionSearch };
std::string to_string(LiftMethod m);

struct LiftOrderOptions {
  int torsion_bound = 2;
};

struct LiftOrderReport {
  std::int64_t weyl_order = 0;
  std::int64_t lift_order = 0;
  bool exact = false;
  LiftMethod method = LiftMethod::EllipticTits;
  NormalizerElt witness;
};

LiftOrderReport lift_order(const RootDatum& rd, const TwistedWeylElt& x, const LiftOrderOptions& opts = {});

enum class SigmaKind { Trivial, ZG, Nontrivial };
std::string to_string(SigmaKind k);

struct ClosedFormResult {
  TorusElt value;
  SigmaKind kind = SigmaKind::Trivial;
  /// Types B, C, D: sigma(w)^{o(w)} = exp(2 pi i tau), tau in simple-coroot coordinates.
  std::optional<RatVec> tau;
  std::optional<RatVec> tau_standard;
  std::string rule;
};

SigmaKind classify_sigma_power(const RootDatum& rd, const TorusElt& t);

/// sigma(w)^{o(w)} from the closed form for the record's class.
ClosedFormResult theorem_c_classification(const RootDatum& rd, const EllipticClassRecord& record);

/// All parts carry the same power of 2.
bool same_two_power(const Partition& p);

/// sigma(w_0) delta for type A with the flip; its square is z_G.
NormalizerElt epsilon_element(const RootDatum& rd);

struct IsogenyColumn {
  std::string isogeny;
  TorusElt sigma_power;
  Integer sigma_power_order;
  SigmaKind kind = SigmaKind::Trivial;
  std::int64_t lift_order = 0;
  bool exact = true;
  /// Method name -> value, for every method available on this row.
  std::vector<std::pair<std::string, TorusElt>> methods;
  std::optional<SigmaKind> expected;
};

struct TableRow {
  std::string label;
  std::optional<Partition> partition;
  std::int64_t tabulated_order = 0;
  std::optional<std::int64_t> computed_order;
  std::optional<std::string> rep;
  std::string rep_source;
  std::optional<bool> length_identity;
  std::optional<bool> same_two_power;
  std::vector<IsogenyColumn> columns;
  std::vector<std::string> mismatches;
};

struct TableReport {
  std::string table_id;
  std::string type_label;
  bool twisted = false;
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
  bool ok() const;
};

struct VerifyOptions {
  /// Empty: every standard isogeny of the type.
  std::vector<std::string> isogenies;
  /// Random elements drawn per exceptional table without printed words (E7, E8).
  int samples = -1;
  std::uint64_t seed = 20240601;
  std::string word_file;
};

/// Table ids: F4, 2E6, E7, E8, E6, 3D4, An, 2An, Bn, Cn, Dn, 2Dn with n <= 8.
TableReport verify_table(const std::string& table_id, const VerifyOptions& opts = {});

/// Standard isogeny names for a table id, in report order.
std::vector<std::string> standard_isogenies(const std::string& table_id);

}  // namespace wlift
