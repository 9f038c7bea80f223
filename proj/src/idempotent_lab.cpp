#include "jmotive/idempotent_lab.hpp"

#include <algorithm>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "jmotive/error.hpp"

namespace jmotive {

ModMatrix::ModMatrix(std::int64_t modulus, int size) : m_(modulus), l_(size) {
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (size < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix size");
  a_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
}

ModMatrix::ModMatrix(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows)
    : ModMatrix(modulus, static_cast<int>(rows.size())) {
  for (int i = 0; i < l_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != l_)
      throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (int j = 0; j < l_; ++j) set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
}

ModMatrix ModMatrix::identity(std::int64_t modulus, int size) {
  ModMatrix e(modulus, size);
  for (int i = 0; i < size; ++i) e.set(i, i, 1);
  return e;
}

std::size_t ModMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= l_ || j >= l_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(l_) + static_cast<std::size_t>(j);
}

void ModMatrix::set(int i, int j, std::int64_t v) { a_[idx(i, j)] = mod_floor(v, m_); }

std::vector<std::vector<std::int64_t>> ModMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(l_));
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
  return out;
}

ModMatrix ModMatrix::reduce(std::int64_t q) const {
  if (q < 1 || m_ % q != 0)
    throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " does not divide " + std::to_string(m_));
  ModMatrix out(q, l_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] % q;
  return out;
}

bool ModMatrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

bool ModMatrix::is_idempotent() const { return *this * *this == *this; }

void ModMatrix::check_compatible(const ModMatrix& o) const {
  if (m_ != o.m_ || l_ != o.l_) throw Error(ErrorCode::ContextMismatch, "matrices over different rings or sizes");
}

ModMatrix& ModMatrix::operator+=(const ModMatrix& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = mod_floor(a_[i] + o.a_[i], m_);
  return *this;
}

ModMatrix& ModMatrix::operator-=(const ModMatrix& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = mod_floor(a_[i] - o.a_[i], m_);
  return *this;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  a.check_compatible(b);
  ModMatrix c(a.m_, a.l_);
  for (int i = 0; i < a.l_; ++i)
    for (int k = 0; k < a.l_; ++k) {
      const auto aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.l_; ++j) {
        auto& cij = c.a_[c.idx(i, j)];
        cij = (cij + mul_mod(aik, b.at(k, j), a.m_)) % a.m_;
      }
    }
  return c;
}

ModMatrix ModMatrix::scaled(std::int64_t c) const {
  ModMatrix out(m_, l_);
  const auto cc = mod_floor(c, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = mul_mod(a_[i], cc, m_);
  return out;
}

std::string ModMatrix::to_text() const {
  std::ostringstream os;
  os << "mod " << m_ << " size " << l_ << "\n";
  for (int i = 0; i < l_; ++i) {
    if (i) os << ";";
    for (int j = 0; j < l_; ++j) os << (j ? "," : "") << at(i, j);
  }
  return os.str();
}

ModMatrix ModMatrix::parse(const std::string& text) {
  auto fail = [&](const std::string& why) { return Error(ErrorCode::ParseError, "matrix text: " + why); };
  std::istringstream is(text);
  std::string kw1, kw2;
  std::int64_t m = 0;
  int l = -1;
  if (!(is >> kw1 >> m >> kw2 >> l) || kw1 != "mod" || kw2 != "size") throw fail("expected header 'mod m size l'");
  if (m < 1 || l < 0) throw fail("bad modulus or size");
  std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }), body.end());
  std::vector<std::vector<std::int64_t>> rows;
  if (!body.empty()) {
    std::vector<std::string> row_texts;
    boost::split(row_texts, body, boost::is_any_of(";"));
    for (const auto& rt : row_texts) {
      std::vector<std::string> cells;
      boost::split(cells, rt, boost::is_any_of(","));
      std::vector<std::int64_t> row;
      for (const auto& c : cells) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
          v = std::stoll(c, &used);
        } catch (const std::exception&) {
          throw fail("bad entry '" + c + "'");
        }
        if (used != c.size()) throw fail("bad entry '" + c + "'");
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
  }
  if (static_cast<int>(rows.size()) != l) throw fail("expected " + std::to_string(l) + " rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != l) throw fail("expected " + std::to_string(l) + " entries per row");
  return ModMatrix(m, rows);
}

GradedEndo::GradedEndo(ModMatrix m, std::vector<int> degrees) : matrix(std::move(m)), slot_degree(std::move(degrees)) {
  if (static_cast<int>(slot_degree.size()) != matrix.size())
    throw Error(ErrorCode::LengthMismatch, "grading does not match the matrix size");
}

std::optional<int> GradedEndo::homogeneous_degree() const {
  std::optional<int> deg;
  for (int i = 0; i < matrix.size(); ++i)
    for (int j = 0; j < matrix.size(); ++j) {
      if (matrix.at(i, j) == 0) continue;
      const int d = slot_degree[static_cast<std::size_t>(j)] - slot_degree[static_cast<std::size_t>(i)];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  return deg.value_or(0);
}

namespace {

// (p, n) with m = p^n
std::pair<std::int64_t, int> prime_power(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be a prime power >= 2");
  auto f = factorize(m);
  if (f.size() != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(m) + " is not a prime power");
  return f.front();
}

ModMatrix idempotent_iteration(ModMatrix e) {
  // e - e^2 is nilpotent of order <= n and each step squares that order
  for (int step = 0; step < 70; ++step) {
    const ModMatrix e2 = e * e;
    if (e2 == e) return e;
    e = e2.scaled(3) - (e2 * e).scaled(2);
  }
  throw Error(ErrorCode::InternalInconsistency, "idempotent iteration did not converge");
}

}  // namespace

ModMatrix lift_idempotent(const ModMatrix& a) {
  const auto [p, n] = prime_power(a.modulus());
  if (!a.reduce(p).is_idempotent()) throw Error(ErrorCode::NotAlmostIdempotent, "a is not idempotent modulo " + std::to_string(p));
  return idempotent_iteration(a);
}

std::vector<ModMatrix> lift_orthogonal_family(const std::vector<ModMatrix>& family) {
  if (family.empty()) throw Error(ErrorCode::NotAFamily, "empty family");
  const auto m = family.front().modulus();
  const int l = family.front().size();
  for (const auto& f : family)
    if (f.modulus() != m || f.size() != l) throw Error(ErrorCode::NotAFamily, "members over different rings");
  const auto p = prime_power(m).first;
  ModMatrix sum(p, l);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ModMatrix ai = family[i].reduce(p);
    if (!ai.is_idempotent()) throw Error(ErrorCode::NotAFamily, "member " + std::to_string(i + 1) + " is not idempotent mod p");
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i && !(ai * family[j].reduce(p)).is_zero())
        throw Error(ErrorCode::NotAFamily,
                    "members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthogonal mod p");
    sum += ai;
  }
  if (!(sum == ModMatrix::identity(p, l))) throw Error(ErrorCode::NotAFamily, "members do not sum to 1 mod p");

  const ModMatrix one = ModMatrix::identity(m, l);
  ModMatrix lifted_sum(m, l);
  std::vector<ModMatrix> out;
  for (std::size_t i = 0; i + 1 < family.size(); ++i) {
    const ModMatrix c = one - lifted_sum;
    // a polynomial in c a c without constant term stays in the corner c A c
    ModMatrix e = idempotent_iteration(c * family[i] * c);
    lifted_sum += e;
    out.push_back(std::move(e));
  }
  out.push_back(one - lifted_sum);
  return out;
}

IzvratResult lift_isomorphism_izvrat(const ModMatrix& phi1, const ModMatrix& phi2, const ModMatrix& psi12,
                                     const ModMatrix& psi21) {
  const auto m = phi1.modulus();
  for (const auto* x : {&phi2, &psi12, &psi21})
    if (x->modulus() != m || x->size() != phi1.size()) throw Error(ErrorCode::ContextMismatch, "inputs over different rings");
  const auto [p, n] = prime_power(m);
  if (!phi1.is_idempotent()) throw Error(ErrorCode::HypothesisViolated, "phi1^2 = phi1 fails");
  if (!phi2.is_idempotent()) throw Error(ErrorCode::HypothesisViolated, "phi2^2 = phi2 fails");
  const ModMatrix a12 = phi2 * psi12 * phi1;
  const ModMatrix a21 = phi1 * psi21 * phi2;
  if (!((a21 * a12).reduce(p) == phi1.reduce(p)))
    throw Error(ErrorCode::HypothesisViolated, "f(psi21) f(psi12) = f(phi1) fails");
  if (!((a12 * a21).reduce(p) == phi2.reduce(p)))
    throw Error(ErrorCode::HypothesisViolated, "f(psi12) f(psi21) = f(phi2) fails");

  const ModMatrix alpha = a12 * a21 - phi2;
  const int cap = std::max(1, phi1.size() * n);
  // α^∨ = φ2 - α + α^2 - ... up to the nilpotency order
  ModMatrix dual = phi2;
  ModMatrix pw = phi2;
  int order = 0;
  for (int i = 1;; ++i) {
    pw = pw * alpha;
    if (pw.is_zero()) {
      order = i;
      break;
    }
    if (i >= cap) throw Error(ErrorCode::HypothesisViolated, "alpha is not nilpotent within the cap");
    dual = (i % 2) ? dual - pw : dual + pw;
  }
  IzvratResult out{a12, a21 * dual, order};
  if (!(out.theta21 * out.theta12 == phi1) || !(out.theta12 * out.theta21 == phi2))
    throw Error(ErrorCode::InternalInconsistency, "lifted isomorphism fails its identities");
  return out;
}

std::pair<GradedEndo, GradedEndo> lift_isomorphism_izvrat(const GradedEndo& phi1, const GradedEndo& phi2,
                                                          const GradedEndo& psi12, const GradedEndo& psi21) {
  for (const auto* x : {&phi2, &psi12, &psi21})
    if (x->slot_degree != phi1.slot_degree) throw Error(ErrorCode::ContextMismatch, "inputs carry different gradings");
  if (phi1.homogeneous_degree() != 0) throw Error(ErrorCode::HypothesisViolated, "phi1 is not of degree 0");
  if (phi2.homogeneous_degree() != 0) throw Error(ErrorCode::HypothesisViolated, "phi2 is not of degree 0");
  const auto d12 = psi12.homogeneous_degree();
  const auto d21 = psi21.homogeneous_degree();
  if (!d12 || !d21) throw Error(ErrorCode::HypothesisViolated, "psi12 or psi21 is not homogeneous");
  auto res = lift_isomorphism_izvrat(phi1.matrix, phi2.matrix, psi12.matrix, psi21.matrix);
  if (!psi12.matrix.is_zero() && !psi21.matrix.is_zero() && *d12 + *d21 != 0)
    throw Error(ErrorCode::HypothesisViolated, "psi12 and psi21 have degrees that do not cancel");
  return {GradedEndo(std::move(res.theta12), phi1.slot_degree), GradedEndo(std::move(res.theta21), phi1.slot_degree)};
}

std::vector<std::int64_t> CrtSplit::moduli() const {
  std::vector<std::int64_t> out;
  for (auto [q, e] : factors) out.push_back(ipow(q, e));
  return out;
}

std::vector<ModMatrix> CrtSplit::split(const ModMatrix& a) const {
  if (a.modulus() != modulus) throw Error(ErrorCode::ContextMismatch, "matrix is not over Z/" + std::to_string(modulus));
  std::vector<ModMatrix> out;
  for (auto q : moduli()) out.push_back(a.reduce(q));
  return out;
}

ModMatrix CrtSplit::reconstruct(const std::vector<ModMatrix>& parts) const {
  const auto mods = moduli();
  if (parts.size() != mods.size()) throw Error(ErrorCode::LengthMismatch, "wrong number of components");
  const int l = parts.empty() ? 0 : parts.front().size();
  ModMatrix out(modulus, l);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s].modulus() != mods[s] || parts[s].size() != l)
      throw Error(ErrorCode::ContextMismatch, "component " + std::to_string(s + 1) + " has the wrong ring");
    const auto rest = modulus / mods[s];
    // idempotent of Z/m supported on this factor
    const auto e = mul_mod(rest, inv_mod(rest % mods[s], mods[s]), modulus);
    ModMatrix lift(modulus, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) lift.set(i, j, parts[s].at(i, j));
    out += lift.scaled(e);
  }
  return out;
}

CrtSplit crt_split(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "CRT split needs m >= 2");
  return CrtSplit{m, factorize(m)};
}

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix b = a;
  BigInt prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (b[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && b[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(b[k], b[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
    prev = b[k][k];
  }
  return sign * b[n - 1][n - 1];
}

IntMatrix sl_lift(const ModMatrix& a) {
  const auto m = a.modulus();
  const int l = a.size();
  IntMatrix as_int(static_cast<std::size_t>(l), std::vector<BigInt>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) as_int[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
  BigInt det = determinant(as_int) % m;
  if (det < 0) det += m;
  if (det != 1 % m) throw Error(ErrorCode::DeterminantNotOne, "det = " + det.str() + " mod " + std::to_string(m));

  struct Op {
    int i, j;
    std::int64_t c;  // row_i += c row_j
  };
  std::vector<Op> word;
  ModMatrix w = a;
  auto apply = [&](int i, int j, std::int64_t c) {
    c = mod_floor(c, m);
    if (c == 0) return;
    for (int col = 0; col < l; ++col) w.set(i, col, w.at(i, col) + mul_mod(c, w.at(j, col), m));
    word.push_back(Op{i, j, c});
  };
  const auto primes = prime_divisors(m);

  for (int k = 0; k + 1 < l; ++k) {
    // unit pivot from a row combination, chosen prime by prime and glued by CRT
    std::vector<std::int64_t> coef(static_cast<std::size_t>(l), 0);
    std::int64_t rad = 1;
    for (auto q : primes) {
      std::vector<std::int64_t> cq(static_cast<std::size_t>(l), 0);
      if (w.at(k, k) % q == 0) {
        int src = -1;
        for (int i = k + 1; i < l && src < 0; ++i)
          if (w.at(i, k) % q != 0) src = i;
        if (src < 0) throw Error(ErrorCode::InternalInconsistency, "column is not unimodular");
        cq[static_cast<std::size_t>(src)] = 1;
      }
      for (int i = k + 1; i < l; ++i) {
        auto& c = coef[static_cast<std::size_t>(i)];
        // c ≡ old mod rad, c ≡ cq mod q
        const auto t = mul_mod(mod_floor(cq[static_cast<std::size_t>(i)] - c, q), inv_mod(rad % q, q), q);
        c += rad * t;
      }
      rad *= q;
    }
    for (int i = k + 1; i < l; ++i) apply(k, i, coef[static_cast<std::size_t>(i)]);
    const auto u = w.at(k, k);
    const auto uinv = inv_mod(u, m);
    if (m > 1 && uinv == 0) throw Error(ErrorCode::InternalInconsistency, "pivot is not a unit");
    for (int i = 0; i < l; ++i)
      if (i != k) apply(i, k, -mul_mod(w.at(i, k), uinv, m));
    // u -> 1 with three transvections through row k+1
    if (u != 1 % m) {
      const int j = k + 1;
      apply(j, k, uinv);
      apply(k, j, 1 - u);
      apply(j, k, -1);
    }
  }
  // last pivot is det = 1; clear the last column
  if (l > 0)
    for (int i = 0; i + 1 < l; ++i) apply(i, l - 1, -w.at(i, l - 1));
  if (!(w == ModMatrix::identity(m, l))) throw Error(ErrorCode::InternalInconsistency, "elimination did not reach 1");

  // a = E_1^{-1} ... E_w^{-1}; right multiplication by E_ij(c) adds c col_i to col_j
  IntMatrix out(static_cast<std::size_t>(l), std::vector<BigInt>(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (const auto& op : word) {
    const BigInt c = mod_floor(-op.c, m);
    for (int r = 0; r < l; ++r)
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(op.j)] += c * out[static_cast<std::size_t>(r)][static_cast<std::size_t>(op.i)];
  }
  return out;
}

}  // namespace jmotive
