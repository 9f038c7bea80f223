#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jmotive/jvalue.hpp"
#include "jmotive/kac_table.hpp"

namespace jmotive {

// Lucas' theorem: C(n, m) mod p from base-p digits.
std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t m, std::uint32_t p);

// Product of componentwise binomials mod p; zero when some l_i > m_i.
std::uint32_t multi_binom(const std::vector<std::uint64_t>& m, const std::vector<std::uint64_t>& l,
                          std::uint32_t p);

using Exponents = std::vector<std::uint32_t>;

/// Shared description of the ring (Z/p)[x_1..x_r]/(x_i^{p^{k_i}}).
class RingContext {
 public:
  explicit RingContext(TorsionData data);

  const TorsionData& data() const noexcept { return data_; }
  std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(data_.p); }
  int r() const noexcept { return data_.r(); }
  // p^{k_i}: the first vanishing power of x_i.
  std::uint32_t bound(int i) const { return bounds_[static_cast<std::size_t>(i)]; }
  // Number of monomials, p^{Σk}.
  std::uint64_t dimension() const noexcept { return dimension_; }

  int codimension(const Exponents& m) const;
  bool in_range(const Exponents& m) const;

  friend bool operator==(const RingContext& a, const RingContext& b) { return a.data_ == b.data_; }

 private:
  TorsionData data_;
  std::vector<std::uint32_t> bounds_;
  std::uint64_t dimension_ = 1;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(TorsionData data);

/// Monomial x^M bound to a ring context.
class Monomial {
 public:
  // Throws IndexOutOfRange if some m_i >= p^{k_i} or the length is not r.
  Monomial(ContextPtr ctx, Exponents exps);

  const Exponents& exponents() const noexcept { return exps_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  int codimension() const { return ctx_->codimension(exps_); }

 private:
  ContextPtr ctx_;
  Exponents exps_;
};

// DegLex: by codimension, then at the greatest index where the exponents
// differ. Throws ContextMismatch for monomials of different rings.
std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b);
std::strong_ordering deglex_compare(const RingContext& ctx, const Exponents& a, const Exponents& b);

/// Finite F_p-linear combination of monomials.
class RingElement {
 public:
  explicit RingElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static RingElement one(ContextPtr ctx);
  static RingElement constant(ContextPtr ctx, std::int64_t c);
  static RingElement term(ContextPtr ctx, Exponents exps, std::int64_t c = 1);
  // x_i (1-based), zero when p^{k_i} = 1.
  static RingElement generator(ContextPtr ctx, int i);

  // Text form "1 + 2*x1^3*x2". Coefficients must lie in 0..p-1 and exponents
  // below p^{k_i}.
  static RingElement parse(ContextPtr ctx, const std::string& text);
  std::string to_string() const;

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::map<Exponents, std::uint32_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // DegLex-greatest monomial; must not be called on zero.
  const Exponents& leading_monomial() const;
  std::uint32_t leading_coefficient() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement scaled(std::uint32_t c) const;
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }
  static RingElement multiply(const RingElement& a, const RingElement& b);

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& m, std::uint32_t c);
  ContextPtr ctx_;
  std::map<Exponents, std::uint32_t> terms_;
};

/// F_p-basis of the smallest unital subring containing the generators, in
/// echelon form: leading coefficients are 1, leading monomials are pairwise
/// distinct, and the list is sorted by descending leading monomial.
std::vector<RingElement> subring_closure(ContextPtr ctx, const std::vector<RingElement>& gens);

/// j_i = least j with x_i^{p^j} occurring as a leading monomial of the span,
/// or k_i when there is none.
JInvariant j_from_subring(const std::vector<RingElement>& basis, const RingContext& ctx);

}  // namespace jmotive
