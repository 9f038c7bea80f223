#include "jmotive/jinvariant.hpp"

#include <numeric>
#include <sstream>

#include "jmotive/error.hpp"
#include "jmotive/truncated_ring.hpp"

namespace jmotive {

JInvariant::JInvariant(TorsionData data, std::vector<int> j) : data_(std::move(data)), j_(std::move(j)) {
  if (static_cast<int>(j_.size()) != data_.r())
    throw Error(ErrorCode::LengthMismatch,
                "J has " + std::to_string(j_.size()) + " entries but r = " + std::to_string(data_.r()));
  for (std::size_t i = 0; i < j_.size(); ++i)
    if (j_[i] < 0 || j_[i] > data_.k[i])
      throw Error(ErrorCode::IndexOutOfRange, "j" + std::to_string(i + 1) + " = " + std::to_string(j_[i]) +
                                                  " is outside 0.." + std::to_string(data_.k[i]));
}

JInvariant JInvariant::zero(TorsionData data) {
  std::vector<int> z(static_cast<std::size_t>(data.r()), 0);
  return JInvariant(std::move(data), std::move(z));
}

JInvariant JInvariant::maximal(TorsionData data) {
  std::vector<int> k = data.k;
  return JInvariant(std::move(data), std::move(k));
}

int JInvariant::sum() const { return std::accumulate(j_.begin(), j_.end(), 0); }

std::string JInvariant::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < j_.size(); ++i) os << (i ? "," : "") << j_[i];
  os << ")";
  return os.str();
}

bool leq(const JInvariant& a, const JInvariant& b) {
  if (!(a.data() == b.data())) throw Error(ErrorCode::ContextMismatch, "J-invariants of different rows");
  for (int i = 1; i <= a.r(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool satisfies(const JInvariant& j, const ConstraintRule& rule) {
  const int r = j.r();
  if (rule.lhs < 1 || rule.lhs > r || rule.rhs < 1 || rule.rhs > r)
    throw Error(ErrorCode::IndexOutOfRange, "rule " + rule.to_string() + " does not fit r = " + std::to_string(r));
  if (rule.kind == ConstraintRule::Kind::GE) {
    if (rule.gate) {
      if (rule.gate->top < 0) return true;
      const auto p = static_cast<std::uint32_t>(j.data().p);
      if (lucas_binom(static_cast<std::uint64_t>(rule.gate->top), static_cast<std::uint64_t>(rule.gate->bottom), p) == 0)
        return true;
    }
    return j[rule.lhs] >= j[rule.rhs];
  }
  return j[rule.lhs] <= j[rule.rhs] + rule.offset;
}

bool is_admissible(const JInvariant& j, const GroupForm& form) {
  const TorsionData expected = torsion_data(form, j.data().p);
  if (!(expected == j.data()))
    throw Error(ErrorCode::ContextMismatch, "J does not belong to the row of " + form.name());
  for (const auto& rule : constraint_rules(form, j.data().p))
    if (!satisfies(j, rule)) return false;
  return true;
}

std::vector<JInvariant> enumerate_admissible(const GroupForm& form, int p, std::uint64_t budget) {
  const TorsionData data = torsion_data(form, p);
  const auto rules = constraint_rules(form, p);
  std::uint64_t box = 1;
  for (int k : data.k) {
    box *= static_cast<std::uint64_t>(k + 1);
    if (box > budget)
      throw Error(ErrorCode::BudgetExceeded, "search box for " + form.name() + " exceeds " + std::to_string(budget));
  }
  std::vector<JInvariant> out;
  std::vector<int> j(static_cast<std::size_t>(data.r()), 0);
  // odometer with the last index fastest gives lexicographic order
  while (true) {
    JInvariant cand(data, j);
    bool ok = true;
    for (const auto& rule : rules)
      if (!satisfies(cand, rule)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(cand));
    int pos = data.r() - 1;
    while (pos >= 0 && j[static_cast<std::size_t>(pos)] == data.k[static_cast<std::size_t>(pos)]) {
      j[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++j[static_cast<std::size_t>(pos)];
  }
  return out;
}

ConstraintRule apply_steenrod_rule(const SteenrodDatum& datum, int r) {
  auto check = [&](int idx) {
    if (idx < 1 || idx > r)
      throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(idx) + " outside 1.." + std::to_string(r));
  };
  check(datum.source);
  check(datum.target);
  if (datum.shift < 0) throw Error(ErrorCode::InvalidArgument, "negative p-power shift");
  return ConstraintRule{ConstraintRule::Kind::LE, datum.target, datum.source, datum.shift, std::nullopt};
}

}  // namespace jmotive
