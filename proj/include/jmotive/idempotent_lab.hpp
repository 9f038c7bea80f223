#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jmotive/arith.hpp"

namespace jmotive {

/// Square matrix over Z/m with entries kept in 0..m-1.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::int64_t modulus, int size);
  // Entries are reduced; throws InvalidArgument unless the rows form a square.
  ModMatrix(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows);

  static ModMatrix identity(std::int64_t modulus, int size);

  std::int64_t modulus() const noexcept { return m_; }
  int size() const noexcept { return l_; }
  std::int64_t at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, std::int64_t v);
  std::vector<std::vector<std::int64_t>> rows() const;

  // Reduction to Z/q for q | m.
  ModMatrix reduce(std::int64_t q) const;
  bool is_zero() const noexcept;
  bool is_idempotent() const;

  ModMatrix& operator+=(const ModMatrix& o);
  ModMatrix& operator-=(const ModMatrix& o);
  friend ModMatrix operator+(ModMatrix a, const ModMatrix& b) { return a += b; }
  friend ModMatrix operator-(ModMatrix a, const ModMatrix& b) { return a -= b; }
  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  ModMatrix scaled(std::int64_t c) const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  // "mod m size l" header, then rows separated by ';' and entries by ','.
  std::string to_text() const;
  static ModMatrix parse(const std::string& text);

 private:
  std::size_t idx(int i, int j) const;
  void check_compatible(const ModMatrix& o) const;
  std::int64_t m_ = 1;
  int l_ = 0;
  std::vector<std::int64_t> a_;
};

/// A matrix acting on a graded free module: index i sits in degree
/// slot_degree[i]. The degree-d part sends index j to index i when
/// slot_degree[i] = slot_degree[j] - d.
struct GradedEndo {
  ModMatrix matrix;
  std::vector<int> slot_degree;

  GradedEndo() = default;
  // Throws LengthMismatch when the grading does not cover every index.
  GradedEndo(ModMatrix m, std::vector<int> degrees);

  // The common degree of all nonzero entries, 0 for the zero matrix, nullopt
  // when the entries have mixed degrees.
  std::optional<int> homogeneous_degree() const;
};

// e^2 = e over Z/p^n with e ≡ a (mod p). Throws NotAlmostIdempotent, or
// InvalidArgument when the modulus is not a prime power.
ModMatrix lift_idempotent(const ModMatrix& a);

// Pairwise orthogonal idempotents summing to 1 over Z/p^n, each lifting its
// input. Throws NotAFamily.
std::vector<ModMatrix> lift_orthogonal_family(const std::vector<ModMatrix>& family);

struct IzvratResult {
  ModMatrix theta12;
  ModMatrix theta21;
  int nilpotency_order = 0;  // least n with α^n = 0
};

// θ21 θ12 = φ1 and θ12 θ21 = φ2 exactly, from mutually inverse ψ's modulo p.
// Throws HypothesisViolated naming the failing equation.
IzvratResult lift_isomorphism_izvrat(const ModMatrix& phi1, const ModMatrix& phi2, const ModMatrix& psi12,
                                     const ModMatrix& psi21);

// Graded variant: additionally needs φ's of degree 0 and ψ's homogeneous of
// opposite degrees.
std::pair<GradedEndo, GradedEndo> lift_isomorphism_izvrat(const GradedEndo& phi1, const GradedEndo& phi2,
                                                          const GradedEndo& psi12, const GradedEndo& psi21);

/// Z/m ≅ ∏ Z/p_i^{n_i} on matrices.
struct CrtSplit {
  std::int64_t modulus = 1;
  std::vector<std::pair<std::int64_t, int>> factors;

  std::vector<std::int64_t> moduli() const;
  std::vector<ModMatrix> split(const ModMatrix& a) const;
  ModMatrix reconstruct(const std::vector<ModMatrix>& parts) const;
};

// Throws InvalidArgument for m < 2.
CrtSplit crt_split(std::int64_t m);

using IntMatrix = std::vector<std::vector<BigInt>>;

BigInt determinant(const IntMatrix& a);

// Integer matrix of determinant 1 reducing to a. Throws DeterminantNotOne.
IntMatrix sl_lift(const ModMatrix& a);

}  // namespace jmotive
