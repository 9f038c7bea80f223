#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmotive/group_form.hpp"

namespace jmotive {

/// Generators of Ch*(BG) modulo p: r generators of codimension d[i] with
/// x_i^{p^{k[i]}} = 0. Indices in this struct are 0-based; rule and J-tuple
/// indices elsewhere in the library are 1-based as in the constraint table.
struct TorsionData {
  int p = 2;
  std::vector<int> d;
  std::vector<int> k;

  int r() const noexcept { return static_cast<int>(d.size()); }
  // Σ k_i
  int k_sum() const;

  // Checks p prime, equal lengths, d nondecreasing and coprime to p, k >= 0.
  void validate() const;

  friend bool operator==(const TorsionData&, const TorsionData&) = default;
};

/// Binomial gate: the rule applies only when C(top, bottom) is nonzero mod p.
struct BinomialGate {
  int top = 0;
  int bottom = 0;
  friend bool operator==(const BinomialGate&, const BinomialGate&) = default;
};

/// One inequality between J-invariant components (1-based indices).
///   GE: j_lhs >= j_rhs, active only if the gate (when present) is open.
///   LE: j_lhs <= j_rhs + offset.
struct ConstraintRule {
  enum class Kind { GE, LE };
  Kind kind = Kind::GE;
  int lhs = 1;
  int rhs = 1;
  int offset = 0;
  std::optional<BinomialGate> gate;

  std::string to_string() const;
  friend bool operator==(const ConstraintRule&, const ConstraintRule&) = default;
};

std::vector<int> torsion_primes(const GroupForm& form);

TorsionData torsion_data(const GroupForm& form, int p);

std::vector<ConstraintRule> constraint_rules(const GroupForm& form, int p);

/// Parametric rows, keyed by the matrix size n as in the table headings.
/// These are total for every n where the row makes sense and are used by the
/// GroupForm-level lookups above.
TorsionData so_row(int n);
TorsionData spin_row(int n);
TorsionData pgo_row(int n);        // PGO_{2n}
TorsionData half_spin_row(int n);  // Spin±_{2n}, n even

/// One row of the expanded table.
struct TableRow {
  GroupForm form;
  TorsionData data;
  std::vector<ConstraintRule> rules;
};

/// All (form, torsion prime) rows for classical ranks 1..max_classical_rank
/// plus every exceptional form, in a fixed order.
std::vector<TableRow> expanded_table(int max_classical_rank);

/// Every supported group form up to the classical rank bound (including forms
/// with no torsion primes).
std::vector<GroupForm> supported_forms(int max_classical_rank);

}  // namespace jmotive
