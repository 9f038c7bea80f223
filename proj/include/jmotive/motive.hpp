#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jmotive/arith.hpp"
#include "jmotive/group_form.hpp"
#include "jmotive/jvalue.hpp"
#include "jmotive/poly.hpp"
#include "jmotive/root_data.hpp"

namespace jmotive {

/// total = summand * multiplicities, all coefficients nonnegative.
struct MotiveDecomposition {
  Poly summand;
  Poly multiplicities;
  Poly total;

  friend bool operator==(const MotiveDecomposition&, const MotiveDecomposition&) = default;
};

// ∏ (1 - t^{d_i p^{j_i}}) / (1 - t^{d_i}). Throws ContextMismatch when J was
// built for other torsion data.
Poly rost_poincare(const TorsionData& data, const JInvariant& j);

// Divides the Poincaré polynomial of X_Θ by the Rost polynomial. Throws
// NotDivisible or NegativeCoefficient for inconsistent inputs.
MotiveDecomposition decompose(const GroupForm& form, int p, const JInvariant& j, const ParabolicSubset& theta);

// Σ d_i (p^{j_i} - 1)
std::int64_t canonical_p_dimension(const TorsionData& data, const JInvariant& j);

// p^{Σ j_i}
BigInt torsion_index_bound(const JInvariant& j, int p);

struct RationalCycleCounts {
  BigInt rk_r;
  BigInt rank_a;
  BigInt rank_b;
  friend bool operator==(const RationalCycleCounts&, const RationalCycleCounts&) = default;
};

// rk_R = flag_rank / p^{|K|}; throws NonIntegralRank unless that is a
// positive integer.
RationalCycleCounts rational_cycle_counts(const TorsionData& data, const JInvariant& j, const BigInt& flag_rank);
// Same with flag_rank = |W|.
RationalCycleCounts rational_cycle_counts(const GroupForm& form, const JInvariant& j);

// prime -> P(R_p)
using SummandTable = std::map<int, Poly>;

// Throws MissingPrime when some p | m has no entry.
bool is_m_positive(const Poly& g, std::int64_t m, const SummandTable& summands);

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

struct IntegralDecomposition {
  Poly divisor;
  Poly multiplicities;
  // Every sum-indecomposable m-positive divisor of the minimal degree, in
  // preference order; filled only on request.
  std::vector<Poly> candidates;
};

// Smallest-degree m-positive divisor f of total that is not a sum of two
// m-positive polynomials and has a nonnegative cofactor. Among several of that
// degree the lexicographically largest coefficient sequence wins. Throws
// SearchBudgetExceeded or NoDivisor.
IntegralDecomposition integral_decomposition(const Poly& total, std::int64_t m, const SummandTable& summands,
                                             std::uint64_t budget = kDefaultSearchBudget, bool all = false);

// True iff f = g + (f - g) for some m-positive g, f - g. Throws
// SearchBudgetExceeded.
bool is_m_decomposable(const Poly& f, std::int64_t m, const SummandTable& summands,
                       std::uint64_t budget = kDefaultSearchBudget);

// Multiplicities of Φ_n in f; throws InvalidArgument when f is not a product
// of cyclotomic polynomials.
std::map<int, int> cyclotomic_factorization(const Poly& f);

}  // namespace jmotive
