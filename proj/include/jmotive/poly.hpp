#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jmotive {

/// Integer polynomial in one variable t, stored densely by degree.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and equality is plain vector equality. Arithmetic is
/// checked: any 64-bit overflow throws ErrorCode::Overflow.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<std::int64_t> coeffs);
  explicit Poly(std::vector<std::int64_t> coeffs);

  static Poly constant(std::int64_t c);
  static Poly monomial(int degree, std::int64_t c = 1);
  // 1 + t + ... + t^(n-1), i.e. (1 - t^n)/(1 - t).
  static Poly geometric(int n);
  // 1 + t^step + t^(2 step) + ... + t^((count-1) step).
  static Poly geometric(int count, int step);
  // (1 - t^a)/(1 - t^b) for b | a.
  static Poly ratio(int a, int b);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }

  std::int64_t value_at_one() const;
  bool has_nonnegative_coefficients() const noexcept;
  bool is_palindromic() const noexcept;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Exact division. Returns the quotient when divisor * quotient == dividend,
/// std::nullopt as soon as a remainder coefficient is nonzero.
std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor);

/// Same as divide_exact but throws ErrorCode::NotDivisible.
Poly divide_or_throw(const Poly& dividend, const Poly& divisor);

/// n-th cyclotomic polynomial.
Poly cyclotomic(int n);

/// Lexicographic order on coefficient sequences (degree 0 first).
bool lex_less(const Poly& a, const Poly& b);

}  // namespace jmotive
