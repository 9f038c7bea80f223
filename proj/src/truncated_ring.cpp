#include "jmotive/truncated_ring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "jmotive/arith.hpp"
#include "jmotive/error.hpp"

namespace jmotive {

std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t m, std::uint32_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  std::uint64_t result = 1;
  while (m > 0 || n > 0) {
    const std::uint64_t ni = n % p, mi = m % p;
    if (mi > ni) return 0;
    // C(ni, mi) mod p for single digits; digits are < p so a direct product
    // with modular inverses of the small denominator is exact.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < mi; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    result = result * num % p * static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(den), p)) % p;
    n /= p;
    m /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t multi_binom(const std::vector<std::uint64_t>& m, const std::vector<std::uint64_t>& l,
                          std::uint32_t p) {
  if (m.size() != l.size()) throw Error(ErrorCode::LengthMismatch, "multi-index lengths differ");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (l[i] > m[i]) return 0;
    r = r * lucas_binom(m[i], l[i], p) % p;
  }
  return static_cast<std::uint32_t>(r);
}

RingContext::RingContext(TorsionData data) : data_(std::move(data)) {
  data_.validate();
  for (int k : data_.k) {
    const std::int64_t b = ipow(data_.p, k);
    if (b > (1 << 24)) throw Error(ErrorCode::BudgetExceeded, "truncation exponent too large for a dense ring");
    bounds_.push_back(static_cast<std::uint32_t>(b));
    dimension_ = static_cast<std::uint64_t>(checked_mul(static_cast<std::int64_t>(dimension_), b));
  }
}

ContextPtr make_context(TorsionData data) { return std::make_shared<const RingContext>(std::move(data)); }

int RingContext::codimension(const Exponents& m) const {
  int c = 0;
  for (std::size_t i = 0; i < m.size(); ++i) c += data_.d[i] * static_cast<int>(m[i]);
  return c;
}

bool RingContext::in_range(const Exponents& m) const {
  if (m.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] >= bounds_[i]) return false;
  return true;
}

Monomial::Monomial(ContextPtr ctx, Exponents exps) : ctx_(std::move(ctx)), exps_(std::move(exps)) {
  if (static_cast<int>(exps_.size()) != ctx_->r()) throw Error(ErrorCode::LengthMismatch, "monomial length differs from r");
  if (!ctx_->in_range(exps_)) throw Error(ErrorCode::IndexOutOfRange, "exponent at or above p^{k_i}");
}

std::strong_ordering deglex_compare(const RingContext& ctx, const Exponents& a, const Exponents& b) {
  if (auto c = ctx.codimension(a) <=> ctx.codimension(b); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (!(*a.context() == *b.context())) throw Error(ErrorCode::ContextMismatch, "monomials of different rings");
  return deglex_compare(*a.context(), a.exponents(), b.exponents());
}

void RingElement::add_term(const Exponents& m, std::uint32_t c) {
  const std::uint32_t p = ctx_->p();
  c %= p;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement RingElement::one(ContextPtr ctx) { return constant(std::move(ctx), 1); }

RingElement RingElement::constant(ContextPtr ctx, std::int64_t c) {
  const int r = ctx->r();
  return term(std::move(ctx), Exponents(static_cast<std::size_t>(r), 0), c);
}

RingElement RingElement::term(ContextPtr ctx, Exponents exps, std::int64_t c) {
  RingElement e(ctx);
  if (static_cast<int>(exps.size()) != ctx->r()) throw Error(ErrorCode::LengthMismatch, "monomial length differs from r");
  if (!ctx->in_range(exps)) return e;  // x_i^{p^{k_i}} = 0
  e.add_term(exps, static_cast<std::uint32_t>(mod_floor(c, ctx->p())));
  return e;
}

RingElement RingElement::generator(ContextPtr ctx, int i) {
  if (i < 1 || i > ctx->r()) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  Exponents e(static_cast<std::size_t>(ctx->r()), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return term(std::move(ctx), std::move(e), 1);
}

const Exponents& RingElement::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero element has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (deglex_compare(*ctx_, it->first, best->first) > 0) best = it;
  return best->first;
}

std::uint32_t RingElement::leading_coefficient() const { return terms_.at(leading_monomial()); }

RingElement& RingElement::operator+=(const RingElement& o) {
  if (!(*ctx_ == *o.ctx_)) throw Error(ErrorCode::ContextMismatch, "elements of different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (!(*ctx_ == *o.ctx_)) throw Error(ErrorCode::ContextMismatch, "elements of different rings");
  const std::uint32_t p = ctx_->p();
  for (const auto& [m, c] : o.terms_) add_term(m, p - c);
  return *this;
}

RingElement RingElement::scaled(std::uint32_t c) const {
  RingElement out(ctx_);
  const std::uint64_t p = ctx_->p();
  for (const auto& [m, v] : terms_) out.add_term(m, static_cast<std::uint32_t>(std::uint64_t{v} * (c % p) % p));
  return out;
}

RingElement RingElement::multiply(const RingElement& a, const RingElement& b) {
  if (!(*a.ctx_ == *b.ctx_)) throw Error(ErrorCode::ContextMismatch, "elements of different rings");
  RingElement out(a.ctx_);
  const std::uint64_t p = a.ctx_->p();
  Exponents prod(static_cast<std::size_t>(a.ctx_->r()));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      bool vanishes = false;
      for (std::size_t i = 0; i < prod.size(); ++i) {
        prod[i] = ma[i] + mb[i];
        if (prod[i] >= a.ctx_->bound(static_cast<int>(i))) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) out.add_term(prod, static_cast<std::uint32_t>(std::uint64_t{ca} * cb % p));
    }
  }
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Exponents> order;
  for (const auto& [m, c] : terms_) order.push_back(m);
  std::sort(order.begin(), order.end(),
            [&](const Exponents& x, const Exponents& y) { return deglex_compare(*ctx_, x, y) < 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& m : order) {
    const std::uint32_t c = terms_.at(m);
    if (!first) os << " + ";
    first = false;
    bool is_const = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    if (is_const) {
      os << c;
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      os << c;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

RingElement RingElement::parse(ContextPtr ctx, const std::string& text) {
  RingElement out(ctx);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty ring element");
  auto fail = [&](const std::string& why) -> RingElement {
    throw Error(ErrorCode::ParseError, why + " in '" + text + "'");
  };
  auto read_uint = [&](std::size_t& pos) -> std::uint64_t {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (1ULL << 40)) fail("number too large");
      ++pos;
    }
    return v;
  };
  std::size_t pos = 0;
  while (true) {
    std::uint64_t coeff = 1;
    Exponents exps(static_cast<std::size_t>(ctx->r()), 0);
    bool any_factor = false;
    while (true) {
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        std::uint64_t idx = read_uint(pos);
        if (idx < 1 || idx > static_cast<std::uint64_t>(ctx->r())) fail("generator index out of range");
        std::uint64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = read_uint(pos);
        }
        if (e + exps[idx - 1] >= ctx->bound(static_cast<int>(idx - 1)))
          throw Error(ErrorCode::ParseError, "exponent of x" + std::to_string(idx) + " is not below p^k in '" + text + "'");
        exps[idx - 1] += static_cast<std::uint32_t>(e);
      } else {
        std::uint64_t c = read_uint(pos);
        if (c >= ctx->p()) fail("coefficient " + std::to_string(c) + " not in 0..p-1");
        coeff = coeff * c % ctx->p();
      }
      any_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) fail("empty term");
    out.add_term(exps, static_cast<std::uint32_t>(coeff));
    if (pos == s.size()) break;
    if (s[pos] != '+') fail("expected '+'");
    ++pos;
  }
  return out;
}

std::vector<RingElement> subring_closure(ContextPtr ctx, const std::vector<RingElement>& gens) {
  for (const auto& g : gens)
    if (!(*g.context() == *ctx)) throw Error(ErrorCode::ContextMismatch, "generator from a different ring");
  const std::uint32_t p = ctx->p();
  // Echelon basis keyed by leading monomial; every stored element is monic.
  std::map<Exponents, RingElement> pivots;
  auto reduce = [&](RingElement v) {
    while (!v.is_zero()) {
      const Exponents lead = v.leading_monomial();
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      v -= it->second.scaled(v.leading_coefficient());
    }
    return v;
  };
  std::deque<RingElement> pending;
  auto insert = [&](RingElement v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return;
    v = v.scaled(static_cast<std::uint32_t>(inv_mod(v.leading_coefficient(), p)));
    pivots.emplace(v.leading_monomial(), v);
    pending.push_back(std::move(v));
  };
  insert(RingElement::one(ctx));
  for (const auto& g : gens) insert(g);
  // Products of each newly added vector with the whole current basis; the
  // span is multiplicatively closed once the queue drains.
  while (!pending.empty()) {
    RingElement v = pending.front();
    pending.pop_front();
    std::vector<RingElement> current;
    for (const auto& [lead, b] : pivots) current.push_back(b);
    for (const auto& b : current) insert(v * b);
  }
  std::vector<RingElement> basis;
  for (auto& [lead, b] : pivots) basis.push_back(std::move(b));
  std::sort(basis.begin(), basis.end(), [&](const RingElement& a, const RingElement& b) {
    return deglex_compare(*ctx, a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return basis;
}

JInvariant j_from_subring(const std::vector<RingElement>& basis, const RingContext& ctx) {
  const TorsionData& data = ctx.data();
  std::vector<int> j(data.k.begin(), data.k.end());
  for (const auto& b : basis) {
    if (!(*b.context() == ctx)) throw Error(ErrorCode::ContextMismatch, "basis from a different ring");
    if (b.is_zero()) continue;
    const Exponents& lead = b.leading_monomial();
    int nonzero = -1;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      if (lead[i] == 0) continue;
      if (nonzero >= 0) {
        nonzero = -2;
        break;
      }
      nonzero = static_cast<int>(i);
    }
    if (nonzero < 0) continue;
    // is the exponent a power of p?
    std::uint64_t e = lead[static_cast<std::size_t>(nonzero)];
    int s = 0;
    while (e % ctx.p() == 0) {
      e /= ctx.p();
      ++s;
    }
    if (e == 1) j[static_cast<std::size_t>(nonzero)] = std::min(j[static_cast<std::size_t>(nonzero)], s);
  }
  return JInvariant(data, std::move(j));
}

}  // namespace jmotive
