#pragma once

#include <cstdint>
#include <vector>

#include "jmotive/jvalue.hpp"
#include "jmotive/kac_table.hpp"

namespace jmotive {

// Componentwise order. Throws ContextMismatch for different torsion data.
bool leq(const JInvariant& a, const JInvariant& b);

// Checks a single rule; gates are evaluated with Lucas' theorem mod p.
bool satisfies(const JInvariant& j, const ConstraintRule& rule);

// True iff every rule of the table row for (form, J.p) holds.
bool is_admissible(const JInvariant& j, const GroupForm& form);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// All admissible J for the row, in lexicographic order of the tuples. Throws
// BudgetExceeded when the box prod(k_i + 1) exceeds the budget.
std::vector<JInvariant> enumerate_admissible(const GroupForm& form, int p,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// A Steenrod datum S^l(x_source) = x_target^{p^shift}, with x_target
/// dominating S^l of every earlier generator in DegLex order.
struct SteenrodDatum {
  int source = 1;
  int shift = 0;
  int target = 1;
};

// The derived bound j_target <= j_source + shift as an LE rule. r is the
// number of generators; indices outside 1..r throw IndexOutOfRange.
ConstraintRule apply_steenrod_rule(const SteenrodDatum& datum, int r);

}  // namespace jmotive
