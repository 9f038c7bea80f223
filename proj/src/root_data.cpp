#include "jmotive/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "jmotive/error.hpp"

namespace jmotive {

namespace {

void validate(Series s, int n) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = n >= 1; break;
    case Series::B:
    case Series::C: ok = n >= 1; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok)
    throw Error(ErrorCode::InvalidArgument,
                std::string("no Dynkin diagram of type ") + static_cast<char>(s) + std::to_string(n));
}

}  // namespace

DynkinType::DynkinType(Series series, int rank) : series_(series), rank_(rank) {
  validate(series, rank);
  if (series_ == Series::D && rank_ == 3) series_ = Series::A;
}

DynkinType DynkinType::parse(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorCode::ParseError, "bad Dynkin type '" + text + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string("ABCDEFG").find(c) == std::string::npos)
    throw Error(ErrorCode::ParseError, "bad Dynkin series in '" + text + "'");
  std::string digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4)
    throw Error(ErrorCode::ParseError, "bad Dynkin rank in '" + text + "'");
  return DynkinType(static_cast<Series>(c), std::stoi(digits));
}

std::string DynkinType::name() const { return static_cast<char>(series_) + std::to_string(rank_); }

ParabolicSubset::ParabolicSubset(const DynkinType& type, std::vector<int> theta)
    : rank_(type.rank()), theta_(std::move(theta)) {
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  for (int v : theta_)
    if (v < 1 || v > rank_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " is not in 1.." + std::to_string(rank_));
}

ParabolicSubset ParabolicSubset::full(const DynkinType& type) {
  std::vector<int> all(static_cast<std::size_t>(type.rank()));
  std::iota(all.begin(), all.end(), 1);
  return ParabolicSubset(type, std::move(all));
}

ParabolicSubset ParabolicSubset::complement_of(const DynkinType& type, const std::vector<int>& removed) {
  std::vector<int> keep;
  for (int v = 1; v <= type.rank(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  for (int v : removed)
    if (v < 1 || v > type.rank()) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  return ParabolicSubset(type, std::move(keep));
}

ParabolicSubset ParabolicSubset::from_mask(const DynkinType& type, std::uint64_t mask) {
  std::vector<int> v;
  for (int i = 1; i <= type.rank() && i <= 64; ++i)
    if (mask & (std::uint64_t{1} << (i - 1))) v.push_back(i);
  return ParabolicSubset(type, std::move(v));
}

bool ParabolicSubset::contains(int v) const { return std::binary_search(theta_.begin(), theta_.end(), v); }

std::vector<int> ParabolicSubset::complement() const {
  std::vector<int> out;
  for (int v = 1; v <= rank_; ++v)
    if (!contains(v)) out.push_back(v);
  return out;
}

std::vector<int> weyl_degrees(const DynkinType& type) {
  const int n = type.rank();
  std::vector<int> d;
  switch (type.series()) {
    case Series::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Series::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F: d = {2, 6, 8, 12}; break;
    case Series::G: d = {2, 6}; break;
  }
  return d;
}

int positive_root_count(const DynkinType& type) {
  const int n = type.rank();
  switch (type.series()) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

BigInt weyl_group_order(const DynkinType& type) {
  const int n = type.rank();
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (type.series()) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return (BigInt(1) << n) * factorial(n);
    case Series::D: return (BigInt(1) << (n - 1)) * factorial(n);
    case Series::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

void self_check_degrees(const DynkinType& type) {
  BigInt prod = 1;
  int sum = 0;
  for (int d : weyl_degrees(type)) {
    prod *= d;
    sum += d - 1;
  }
  if (prod != weyl_group_order(type) || sum != positive_root_count(type) ||
      static_cast<int>(weyl_degrees(type).size()) != type.rank())
    throw Error(ErrorCode::InternalInconsistency, "degree table disagrees with |W| for " + type.name());
}

std::vector<std::vector<int>> dynkin_adjacency(const DynkinType& type) {
  const int n = type.rank();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  switch (type.series()) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::F:
    case Series::G:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Series::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Series::E:
      // 1-3-4-5-...-n with 2 attached to 4
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  return adj;
}

namespace {

// Classifies a connected sub-diagram (given by its vertex set) of the ambient
// diagram. Only the Weyl degrees matter downstream, so B_k and C_k components
// are reported with the ambient series.
DynkinType classify_component(const DynkinType& ambient, const std::vector<int>& verts,
                              const std::vector<std::vector<int>>& adj) {
  const int size = static_cast<int>(verts.size());
  auto has = [&](int v) { return std::find(verts.begin(), verts.end(), v) != verts.end(); };
  const int n = ambient.rank();
  if (size == 1) return DynkinType(Series::A, 1);
  switch (ambient.series()) {
    case Series::A: return DynkinType(Series::A, size);
    case Series::B:
    case Series::C:
      // the double bond sits between n-1 and n
      if (has(n) && has(n - 1)) return DynkinType(ambient.series(), size);
      return DynkinType(Series::A, size);
    case Series::D:
      if (has(n - 2) && has(n - 1) && has(n)) return DynkinType(Series::D, size);  // D3 -> A3
      return DynkinType(Series::A, size);
    case Series::F:
      if (has(2) && has(3)) return size == 4 ? DynkinType(Series::F, 4) : DynkinType(Series::B, size);
      return DynkinType(Series::A, size);
    case Series::G:
      return DynkinType(Series::G, 2);
    case Series::E: {
      // find a branch vertex (degree 3 within the component)
      for (int v : verts) {
        std::vector<int> nbrs;
        for (int w : adj[static_cast<std::size_t>(v)])
          if (has(w)) nbrs.push_back(w);
        if (nbrs.size() != 3) continue;
        std::vector<int> arms;
        for (int start : nbrs) {
          int prev = v, cur = start, len = 0;
          while (true) {
            ++len;
            int next = -1;
            for (int w : adj[static_cast<std::size_t>(cur)])
              if (w != prev && has(w)) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return DynkinType(Series::D, size);
        return DynkinType(Series::E, size);
      }
      return DynkinType(Series::A, size);
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "unclassified component");
}

}  // namespace

std::vector<DynkinType> parabolic_components(const DynkinType& type, const ParabolicSubset& theta) {
  if (theta.rank() != type.rank() && !theta.vertices().empty())
    throw Error(ErrorCode::InvalidArgument, "parabolic subset belongs to a different diagram");
  const auto adj = dynkin_adjacency(type);
  std::vector<bool> seen(static_cast<std::size_t>(type.rank()) + 1, false);
  std::vector<DynkinType> out;
  for (int start : theta.vertices()) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start}, stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!theta.contains(w) || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(type, comp, adj));
  }
  return out;
}

Poly poincare_complete_flag(const DynkinType& type) {
  Poly p = Poly::constant(1);
  for (int d : weyl_degrees(type)) p = p * Poly::geometric(d);
  return p;
}

Poly poincare_levi(const DynkinType& type, const ParabolicSubset& theta) {
  Poly p = Poly::constant(1);
  for (const auto& comp : parabolic_components(type, theta)) p = p * poincare_complete_flag(comp);
  return p;
}

Poly poincare_homogeneous(const DynkinType& type, const ParabolicSubset& theta) {
  // Cancel cyclotomic factors of ∏[d]_t before multiplying anything out, so
  // large projective spaces never go through the full flag polynomial.
  std::map<int, int> phi;
  auto count = [&phi](int d, int sign) {
    for (int e = 2; e <= d; ++e)
      if (d % e == 0) phi[e] += sign;
  };
  for (int d : weyl_degrees(type)) count(d, 1);
  for (const auto& comp : parabolic_components(type, theta))
    for (int d : weyl_degrees(comp)) count(d, -1);
  Poly q = Poly::constant(1);
  for (const auto& [e, n] : phi) {
    if (n < 0)
      throw Error(ErrorCode::InternalInconsistency,
                  "Levi Poincaré polynomial does not divide the flag polynomial for " + type.name());
    for (int i = 0; i < n; ++i) q = q * cyclotomic(e);
  }
  if (!q.has_nonnegative_coefficients())
    throw Error(ErrorCode::InternalInconsistency, "negative coefficient in the Poincaré polynomial of " + type.name());
  return q;
}

}  // namespace jmotive
