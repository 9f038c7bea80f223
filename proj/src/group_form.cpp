#include "jmotive/group_form.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "jmotive/error.hpp"

namespace jmotive {

namespace {

[[noreturn]] void unsupported(const DynkinType& t, const std::string& what) {
  throw Error(ErrorCode::UnsupportedForm, what + " is not a form of type " + t.name());
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.size() <= 5 && std::all_of(s.begin(), s.end(), ::isdigit);
}

}  // namespace

GroupForm::GroupForm(DynkinType base, Isogeny isogeny, int mu) : base_(base), isogeny_(isogeny), mu_(0) {
  const int n = base_.rank();
  switch (base_.series()) {
    case Series::A:
      if (n == 3 && (isogeny_ == Isogeny::Spin || isogeny_ == Isogeny::SO || isogeny_ == Isogeny::PGO)) {
        // D3 = A3: Spin6 = SL4, SO6 = SL4/mu2, PGO6 = PGL4
        mu = isogeny_ == Isogeny::Spin ? 1 : isogeny_ == Isogeny::SO ? 2 : 4;
        isogeny_ = Isogeny::SLmodMu;
      }
      if (isogeny_ == Isogeny::SimplyConnected) {
        isogeny_ = Isogeny::SLmodMu;
        mu_ = 1;
      } else if (isogeny_ == Isogeny::Adjoint) {
        isogeny_ = Isogeny::SLmodMu;
        mu_ = n + 1;
      } else if (isogeny_ == Isogeny::SLmodMu) {
        if (mu < 1 || (n + 1) % mu != 0)
          unsupported(base_, "SL" + std::to_string(n + 1) + "/mu" + std::to_string(mu));
        mu_ = mu;
      } else {
        unsupported(base_, "this isogeny class");
      }
      break;
    case Series::B:
      if (isogeny_ == Isogeny::SimplyConnected) isogeny_ = Isogeny::Spin;
      if (isogeny_ == Isogeny::Adjoint) isogeny_ = Isogeny::SO;
      if (isogeny_ != Isogeny::Spin && isogeny_ != Isogeny::SO) unsupported(base_, "this isogeny class");
      break;
    case Series::C:
      if (isogeny_ == Isogeny::Adjoint) isogeny_ = Isogeny::PGSp;
      if (isogeny_ != Isogeny::SimplyConnected && isogeny_ != Isogeny::PGSp)
        unsupported(base_, "this isogeny class");
      break;
    case Series::D:
      if (isogeny_ == Isogeny::SimplyConnected) isogeny_ = Isogeny::Spin;
      if (isogeny_ == Isogeny::Adjoint) isogeny_ = Isogeny::PGO;
      if (isogeny_ == Isogeny::HalfSpin && n % 2 != 0) unsupported(base_, "HalfSpin with odd rank");
      if (isogeny_ != Isogeny::Spin && isogeny_ != Isogeny::PGO && isogeny_ != Isogeny::SO &&
          isogeny_ != Isogeny::HalfSpin)
        unsupported(base_, "this isogeny class");
      break;
    case Series::E:
      if (n == 8 && isogeny_ == Isogeny::Adjoint) isogeny_ = Isogeny::SimplyConnected;
      if (isogeny_ != Isogeny::SimplyConnected && isogeny_ != Isogeny::Adjoint)
        unsupported(base_, "this isogeny class");
      break;
    case Series::F:
    case Series::G:
      if (isogeny_ == Isogeny::Adjoint) isogeny_ = Isogeny::SimplyConnected;
      if (isogeny_ != Isogeny::SimplyConnected) unsupported(base_, "this isogeny class");
      break;
  }
}

int GroupForm::matrix_size() const {
  const int n = base_.rank();
  switch (base_.series()) {
    case Series::A: return n + 1;
    case Series::B: return 2 * n + 1;
    case Series::C:
    case Series::D: return 2 * n;
    default: return 0;
  }
}

std::string GroupForm::name() const {
  const int n = base_.rank();
  const std::string size = std::to_string(matrix_size());
  switch (base_.series()) {
    case Series::A:
      if (mu_ == 1) return "SL" + size;
      if (mu_ == n + 1) return "PGL" + size;
      return "SL" + size + "/mu" + std::to_string(mu_);
    case Series::B:
    case Series::D:
      switch (isogeny_) {
        case Isogeny::SO: return "SO" + size;
        case Isogeny::Spin: return "Spin" + size;
        case Isogeny::PGO: return "PGO" + size;
        case Isogeny::HalfSpin: return "HalfSpin" + size;
        default: break;
      }
      break;
    case Series::C: return (isogeny_ == Isogeny::PGSp ? "PGSp" : "Sp") + size;
    case Series::E:
      if (n == 8) return "E8";
      return base_.name() + (isogeny_ == Isogeny::Adjoint ? "ad" : "sc");
    case Series::F:
    case Series::G: return base_.name();
  }
  return base_.name();
}

GroupForm GroupForm::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto starts = [&](const std::string& prefix) { return text.rfind(prefix, 0) == 0; };
  auto tail = [&](std::size_t from) { return text.substr(from); };
  auto bad = [&]() -> GroupForm { throw Error(ErrorCode::ParseError, "unrecognized group form '" + raw + "'"); };

  // Matrix-group names first; the longest prefixes are tested first.
  if (starts("HalfSpin") || starts("Spin") || starts("PGO") || starts("SO")) {
    Isogeny iso = starts("HalfSpin") ? Isogeny::HalfSpin
                  : starts("Spin")   ? Isogeny::Spin
                  : starts("PGO")    ? Isogeny::PGO
                                     : Isogeny::SO;
    std::size_t len = iso == Isogeny::HalfSpin ? 8 : iso == Isogeny::Spin ? 4 : iso == Isogeny::PGO ? 3 : 2;
    std::string num = tail(len);
    if (!all_digits(num)) return bad();
    int size = std::stoi(num);
    if (size % 2 == 1) {
      if (iso != Isogeny::SO && iso != Isogeny::Spin) return bad();
      if (size < 3) return bad();
      return GroupForm(DynkinType(Series::B, (size - 1) / 2), iso);
    }
    if (size < 6) throw Error(ErrorCode::UnsupportedForm, raw + " is not simple of type D");
    return GroupForm(DynkinType(Series::D, size / 2), iso);
  }
  if (starts("PGSp") || starts("Sp")) {
    bool adj = starts("PGSp");
    std::string num = tail(adj ? 4 : 2);
    if (!all_digits(num)) return bad();
    int size = std::stoi(num);
    if (size < 2 || size % 2 != 0) return bad();
    return GroupForm(DynkinType(Series::C, size / 2), adj ? Isogeny::PGSp : Isogeny::SimplyConnected);
  }
  if (starts("PGL")) {
    std::string num = tail(3);
    if (!all_digits(num) || std::stoi(num) < 2) return bad();
    return GroupForm(DynkinType(Series::A, std::stoi(num) - 1), Isogeny::Adjoint);
  }
  if (starts("SL")) {
    std::string rest = tail(2);
    std::size_t slash = rest.find("/mu");
    std::string num = rest.substr(0, slash);
    if (!all_digits(num) || std::stoi(num) < 2) return bad();
    int size = std::stoi(num);
    int m = 1;
    if (slash != std::string::npos) {
      std::string ms = rest.substr(slash + 3);
      if (!all_digits(ms)) return bad();
      m = std::stoi(ms);
    }
    return GroupForm(DynkinType(Series::A, size - 1), Isogeny::SLmodMu, m);
  }
  // <Type>[sc|ad]
  std::string type_part = text;
  std::optional<Isogeny> iso;
  if (text.size() > 2 && (text.ends_with("sc") || text.ends_with("ad"))) {
    iso = text.ends_with("sc") ? Isogeny::SimplyConnected : Isogeny::Adjoint;
    type_part = text.substr(0, text.size() - 2);
  }
  DynkinType t = DynkinType::parse(type_part);
  if (!iso) {
    bool unique = t.series() == Series::G || t.series() == Series::F ||
                  (t.series() == Series::E && t.rank() == 8);
    if (!unique)
      throw Error(ErrorCode::UnsupportedForm, raw + " needs an isogeny suffix (sc or ad)");
    iso = Isogeny::SimplyConnected;
  }
  return GroupForm(t, *iso);
}

std::string to_string(Splitness s) {
  switch (s) {
    case Splitness::Split: return "split";
    case Splitness::NotSplit: return "not-split";
    case Splitness::Unknown: return "unknown";
  }
  return "unknown";
}

Splitness is_generically_split(const GroupForm& form, const ParabolicSubset& theta, int tits_index,
                               int splitting_degree, std::optional<bool> pfister_case) {
  if (tits_index < 1 || splitting_degree < 1)
    throw Error(ErrorCode::InvalidArgument, "Tits index and splitting degree must be positive");
  const DynkinType& t = form.base();
  if (theta.rank() != t.rank() && !theta.vertices().empty())
    throw Error(ErrorCode::InvalidArgument, "parabolic subset belongs to a different diagram");
  const int n = t.rank();
  const int d = tits_index;
  const int q = splitting_degree;
  const std::vector<int> ks = theta.complement();
  auto any = [&](auto pred) { return std::any_of(ks.begin(), ks.end(), pred); };

  bool split = false;
  bool pfister_clause = false;
  switch (t.series()) {
    case Series::A: split = any([&](int k) { return std::gcd(k, d) == 1; }); break;
    case Series::B:
      split = any([&](int k) { return k == n; });
      pfister_clause = !ks.empty();
      break;
    case Series::C: split = any([](int k) { return k % 2 == 1; }); break;
    case Series::D:
      split = d == 1 && any([&](int k) { return k == n - 1 || k == n; });
      pfister_clause = !ks.empty();
      break;
    case Series::G: split = !ks.empty(); break;
    case Series::F: split = any([&](int k) { return k <= 3 || q == 3; }); break;
    case Series::E:
      if (n == 6)
        split = any([&](int k) {
          return k == 3 || k == 5 || (d == 1 && (k == 2 || k == 4)) || (q % 2 == 1 && (k == 1 || k == 6));
        });
      else if (n == 7)
        split = any([&](int k) { return k == 2 || k == 5 || (d == 1 && (k == 3 || k == 4)) || (q == 3 && k != 7); });
      else
        split = any([&](int k) { return (k >= 2 && k <= 5) || q == 5; });
      break;
  }
  if (split) return Splitness::Split;
  if (pfister_clause) {
    if (!pfister_case) return Splitness::Unknown;
    return *pfister_case ? Splitness::Split : Splitness::NotSplit;
  }
  return Splitness::NotSplit;
}

}  // namespace jmotive
