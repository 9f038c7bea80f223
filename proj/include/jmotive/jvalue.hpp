#pragma once

#include <string>
#include <vector>

#include "jmotive/kac_table.hpp"

namespace jmotive {

/// A candidate J-invariant (j_1, ..., j_r) with 0 <= j_i <= k_i.
class JInvariant {
 public:
  // Throws LengthMismatch or IndexOutOfRange when the tuple does not fit.
  JInvariant(TorsionData data, std::vector<int> j);

  static JInvariant zero(TorsionData data);
  // (k_1, ..., k_r), the value of a generic torsor.
  static JInvariant maximal(TorsionData data);

  const TorsionData& data() const noexcept { return data_; }
  const std::vector<int>& values() const noexcept { return j_; }
  int operator[](int i) const { return j_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  int r() const noexcept { return static_cast<int>(j_.size()); }
  int sum() const;

  std::string to_string() const;

  friend bool operator==(const JInvariant&, const JInvariant&) = default;

 private:
  TorsionData data_;
  std::vector<int> j_;
};

}  // namespace jmotive
