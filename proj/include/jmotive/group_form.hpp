#pragma once

#include <string>

#include "jmotive/root_data.hpp"

namespace jmotive {

enum class Isogeny { SimplyConnected, Adjoint, SLmodMu, PGSp, SO, Spin, HalfSpin, PGO };

/// A split semisimple group up to isogeny: a Dynkin type plus an isogeny class.
///
/// Construction normalizes aliases so that each group has exactly one
/// representation: SL_{n+1} is SLmodMu(1) and PGL_{n+1} is SLmodMu(n+1); Spin
/// and SO replace sc/ad for B; Spin and PGO replace sc/ad for D; PGSp replaces
/// ad for C; G2, F4 and E8 are always SimplyConnected. D3 forms are rewritten
/// as the corresponding A3 forms.
class GroupForm {
 public:
  // Throws UnsupportedForm when the isogeny class is not legal for the series.
  GroupForm(DynkinType base, Isogeny isogeny, int mu = 0);

  // Accepts SL4, SL6/mu2, PGL3, Sp6, PGSp6, SO7, Spin8, PGO8, HalfSpin8, G2,
  // F4, E6sc, E6ad, E7sc, E7ad, E8 and the generic <Type>sc / <Type>ad.
  static GroupForm parse(const std::string& text);

  const DynkinType& base() const noexcept { return base_; }
  Isogeny isogeny() const noexcept { return isogeny_; }
  // m for SL_{n+1}/mu_m; 0 for other isogeny classes.
  int mu() const noexcept { return mu_; }
  // Matrix size of the natural representation for classical series.
  int matrix_size() const;

  std::string name() const;

  friend bool operator==(const GroupForm&, const GroupForm&) = default;

 private:
  DynkinType base_;
  Isogeny isogeny_;
  int mu_ = 0;
};

/// Three-valued answer of the generic-splitness table.
enum class Splitness { Split, NotSplit, Unknown };

std::string to_string(Splitness s);

/// Whether G splits over the function field of X_Θ, read off the vertex table
/// for inner forms. tits_index is the index d of the Tits algebra (the vector
/// representation one for type D), splitting_degree the degree q of a
/// splitting field. The B and D rows have a "Pfister case" clause that cannot
/// be decided from (d, q); pass pfister_case to decide it, otherwise such
/// inputs yield Unknown.
Splitness is_generically_split(const GroupForm& form, const ParabolicSubset& theta, int tits_index,
                               int splitting_degree, std::optional<bool> pfister_case = std::nullopt);

}  // namespace jmotive
