#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmotive/arith.hpp"
#include "jmotive/poly.hpp"

namespace jmotive {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Connected Dynkin diagram with Bourbaki vertex numbering.
///
/// D3 is stored as A3: the diagrams coincide and the D3 vertex 1 (the branch
/// vertex) becomes the middle vertex 2 of A3.
class DynkinType {
 public:
  // Throws InvalidArgument on an illegal (series, rank) pair.
  DynkinType(Series series, int rank);

  static DynkinType parse(const std::string& text);

  Series series() const noexcept { return series_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  Series series_;
  int rank_;
};

/// Subset Θ of the vertices 1..rank. The empty set is the Borel subgroup.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(const DynkinType& type, std::vector<int> theta);

  static ParabolicSubset borel(const DynkinType& type) { return ParabolicSubset(type, {}); }
  static ParabolicSubset full(const DynkinType& type);
  // Θ = 𝒟 minus the listed vertices.
  static ParabolicSubset complement_of(const DynkinType& type, const std::vector<int>& removed);
  // Subset from a bit mask over the vertices (bit i-1 = vertex i).
  static ParabolicSubset from_mask(const DynkinType& type, std::uint64_t mask);

  const std::vector<int>& vertices() const noexcept { return theta_; }
  int rank() const noexcept { return rank_; }
  bool contains(int v) const;
  std::vector<int> complement() const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  int rank_ = 0;
  std::vector<int> theta_;
};

std::vector<int> weyl_degrees(const DynkinType& type);
int positive_root_count(const DynkinType& type);
// Closed-form order of the Weyl group, independent of the degree table.
BigInt weyl_group_order(const DynkinType& type);

// Adjacency of the Bourbaki-numbered diagram; entry [v] lists the neighbours of
// vertex v (1-based, index 0 unused). Bond multiplicities are not recorded.
std::vector<std::vector<int>> dynkin_adjacency(const DynkinType& type);

// Connected components of the sub-diagram on Θ, each identified by type.
std::vector<DynkinType> parabolic_components(const DynkinType& type, const ParabolicSubset& theta);

Poly poincare_complete_flag(const DynkinType& type);
// Poincaré polynomial of the Weyl group W_Θ of the Levi subgroup.
Poly poincare_levi(const DynkinType& type, const ParabolicSubset& theta);
Poly poincare_homogeneous(const DynkinType& type, const ParabolicSubset& theta);

// Verifies prod(degrees) == |W| and sum(degrees - 1) == #positive roots for
// the given type. Throws InternalInconsistency on a mismatch.
void self_check_degrees(const DynkinType& type);

}  // namespace jmotive
