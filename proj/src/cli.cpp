#include "jmotive/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "jmotive/error.hpp"
#include "jmotive/idempotent_lab.hpp"
#include "jmotive/jinvariant.hpp"
#include "jmotive/json_io.hpp"
#include "jmotive/kac_table.hpp"
#include "jmotive/motive.hpp"
#include "jmotive/root_data.hpp"
#include "jmotive/truncated_ring.hpp"

namespace jmotive::cli {

OutputMode default_output_mode() {
  static const OutputMode mode = [] {
    const char* v = std::getenv("JMOTIVE_OUTPUT");
    return v && std::string(v) == "json" ? OutputMode::Json : OutputMode::Text;
  }();
  return mode;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Rows of the form, optionally restricted to one prime.
std::vector<TableRow> rows_for(const GroupForm& form, std::optional<int> p) {
  std::vector<TableRow> rows;
  if (p) {
    rows.push_back(TableRow{form, torsion_data(form, *p), constraint_rules(form, *p)});
    return rows;
  }
  for (int q : torsion_primes(form)) rows.push_back(TableRow{form, torsion_data(form, q), constraint_rules(form, q)});
  return rows;
}

std::string row_text(const TableRow& row) {
  std::ostringstream os;
  os << row.form.name() << " p=" << row.data.p << " r=" << row.data.r() << " d=" << join(row.data.d)
     << " k=" << join(row.data.k);
  for (std::size_t i = 0; i < row.rules.size(); ++i) os << (i ? "; " : "  rules: ") << row.rules[i].to_string();
  return os.str();
}

ParabolicSubset theta_from(const DynkinType& type, const std::vector<int>& theta, const std::vector<int>& removed) {
  if (!theta.empty() && !removed.empty()) throw UsageError("--theta and --removed are mutually exclusive");
  if (!removed.empty()) return ParabolicSubset::complement_of(type, removed);
  return ParabolicSubset(type, theta);
}

std::string read_matrix_arg(const std::string& arg) {
  if (arg.rfind("@", 0) == 0) {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }
  return arg;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t m) {
  return std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
}

ModMatrix random_matrix(std::mt19937_64& rng, std::int64_t m, int l) {
  ModMatrix a(m, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) a.set(i, j, uniform(rng, m));
  return a;
}

// g and g^{-1} as words in random transvections
std::pair<ModMatrix, ModMatrix> random_elementary(std::mt19937_64& rng, std::int64_t m, int l) {
  ModMatrix g = ModMatrix::identity(m, l), ginv = ModMatrix::identity(m, l);
  if (l < 2) return {g, ginv};
  for (int s = 0; s < 3 * l; ++s) {
    const int i = static_cast<int>(uniform(rng, l));
    int j = static_cast<int>(uniform(rng, l - 1));
    if (j >= i) ++j;
    const auto c = uniform(rng, m);
    ModMatrix e = ModMatrix::identity(m, l), einv = ModMatrix::identity(m, l);
    e.set(i, j, c);
    einv.set(i, j, -c);
    g = g * e;
    ginv = einv * ginv;
  }
  return {g, ginv};
}

ModMatrix diagonal_block(std::int64_t m, int l, int from, int to) {
  ModMatrix d(m, l);
  for (int i = from; i < to; ++i) d.set(i, i, 1);
  return d;
}

std::int64_t prime_of(std::int64_t m) {
  auto f = factorize(m);
  if (f.size() != 1) throw UsageError("--modulus must be a prime power");
  return f.front().first;
}

ModMatrix lift_to(const ModMatrix& a, std::int64_t m) {
  ModMatrix out(m, a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out.set(i, j, a.at(i, j));
  return out;
}

std::string int_matrix_text(const IntMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ";";
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
  }
  return os.str();
}

struct Common {
  std::string form;
  int p = 0;
  std::vector<int> j;
  std::vector<int> theta;
  std::vector<int> removed;
};

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculators for J-invariants, Rost motive Poincaré polynomials and lifting lemmas", "jmotive"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit a single JSON document");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  const auto list = [](CLI::Option* o) { return o->delimiter(','); };

  // table
  auto* table = group("table", "Kac table rows");
  auto* dump = leaf(table, "dump", "print table rows as {form, p, r, d, k, rules}");
  std::string dump_form;
  int dump_p = 0;
  int max_rank = 8;
  dump->add_option("--form", dump_form, "group form, e.g. E8, Spin11, PGL4");
  dump->add_option("--p", dump_p, "torsion prime");
  dump->add_option("--max-rank", max_rank, "classical rank bound for the full table")->check(CLI::Range(1, 64));

  // jinv
  auto* jinv = group("jinv", "admissible J-invariants");
  auto* jenum = leaf(jinv, "enumerate", "all admissible J in lexicographic order");
  Common je;
  std::uint64_t jbudget = kDefaultEnumerationBudget;
  jenum->add_option("--form", je.form)->required();
  jenum->add_option("--p", je.p)->required();
  jenum->add_option("--budget", jbudget, "maximal size of the search box");
  auto* jcheck = leaf(jinv, "check", "test one J against the constraint rules");
  Common jc;
  jcheck->add_option("--form", jc.form)->required();
  jcheck->add_option("--p", jc.p)->required();
  list(jcheck->add_option("--j", jc.j, "comma separated J")->required());

  // ring
  auto* ring = group("ring", "truncated polynomial rings");
  auto* jgens = leaf(ring, "j-from-gens", "J of the subring generated by the given elements");
  Common rg;
  std::vector<int> ring_d, ring_k;
  std::vector<std::string> gens;
  bool show_basis = false;
  jgens->add_option("--form", rg.form, "take d, k from this form's row");
  jgens->add_option("--p", rg.p)->required();
  list(jgens->add_option("--d", ring_d, "generator codimensions"));
  list(jgens->add_option("--k", ring_k, "truncation exponents"));
  jgens->add_option("--gen", gens, "generator such as \"x1^2 + x2\" (repeatable)");
  jgens->add_flag("--basis", show_basis, "also print the subring basis");

  // motive
  auto* motive = group("motive", "Rost motive bookkeeping");
  Common md;
  auto* mdec = leaf(motive, "decompose", "divide P(X_Θ) by the Rost polynomial");
  mdec->add_option("--form", md.form)->required();
  mdec->add_option("--p", md.p)->required();
  list(mdec->add_option("--j", md.j, "J (default: the generic value K)"));
  list(mdec->add_option("--theta", md.theta, "vertices of Θ (default: empty, the complete flag)"));
  list(mdec->add_option("--removed", md.removed, "vertices of the complement of Θ"));
  Common mr;
  auto* mrost = leaf(motive, "rost-poincare", "Poincaré polynomial of the Rost motive");
  auto* mcd = leaf(motive, "candim", "canonical p-dimension");
  auto* mtb = leaf(motive, "torsion-bound", "upper bound p^{Σj} for the torsion index");
  for (auto* s : {mrost, mcd, mtb}) {
    s->add_option("--form", mr.form)->required();
    s->add_option("--p", mr.p)->required();
    list(s->add_option("--j", mr.j, "J (default: the generic value K)"));
  }
  auto* mint = leaf(motive, "integral", "minimal m-positive divisor of P(X_Θ)");
  Common mi;
  std::int64_t mint_m = 0;
  std::vector<std::string> summand_args;
  std::vector<std::int64_t> total_coeffs;
  std::vector<std::string> jp_args;
  bool all_candidates = false;
  std::uint64_t sbudget = kDefaultSearchBudget;
  mint->add_option("--m", mint_m, "coefficient modulus m")->required()->check(CLI::PositiveNumber);
  mint->add_option("--form", mi.form, "form supplying the total and the summands");
  list(mint->add_option("--theta", mi.theta));
  list(mint->add_option("--removed", mi.removed));
  list(mint->add_option("--total", total_coeffs, "total Poincaré polynomial coefficients"));
  mint->add_option("--summand", summand_args, "p:c0,c1,... (repeatable)");
  mint->add_option("--jp", jp_args, "p:j1,j2,... J used at p (repeatable; default K)");
  mint->add_flag("--all", all_candidates, "list every minimal candidate");
  mint->add_option("--budget", sbudget);

  // lift
  auto* lift = group("lift", "lifting lemmas over Z/m");
  std::uint64_t seed = 1;
  std::int64_t modulus = 8;
  int size = 3;
  int parts = 3;
  bool random = false;
  std::vector<std::string> mats;
  std::string phi1_s, phi2_s, psi12_s, psi21_s;
  auto* lidem = leaf(lift, "idempotent", "lift an idempotent from Z/p to Z/p^n");
  auto* lfam = leaf(lift, "family", "lift an orthogonal family of idempotents");
  auto* lizv = leaf(lift, "izvrat", "lift mutually inverse maps between idempotents");
  auto* lsl = leaf(lift, "sl", "lift a matrix of determinant 1 from Z/m to SL(Z)");
  for (auto* s : {lidem, lfam, lizv, lsl}) {
    s->add_flag("--random", random, "use a random instance");
    s->add_option("--seed", seed, "random seed");
    s->add_option("--modulus", modulus, "modulus of random instances")->check(CLI::Range(2, 1 << 30));
    s->add_option("--size", size, "matrix size of random instances")->check(CLI::Range(1, 32));
  }
  lidem->add_option("--matrix", mats, "'mod m size l r0;r1;...' or @file");
  lfam->add_option("--matrix", mats, "family member (repeatable)");
  lfam->add_option("--parts", parts, "members of a random family")->check(CLI::Range(1, 32));
  lsl->add_option("--matrix", mats, "'mod m size l r0;r1;...' or @file");
  lizv->add_option("--phi1", phi1_s);
  lizv->add_option("--phi2", phi2_s);
  lizv->add_option("--psi12", psi12_s);
  lizv->add_option("--psi21", psi21_s);

  // flag
  auto* flag = group("flag", "homogeneous varieties");
  auto* fpoin = leaf(flag, "poincare", "Poincaré polynomial of G/P_Θ");
  std::string flag_type;
  std::vector<int> flag_theta, flag_removed;
  fpoin->add_option("--type", flag_type, "Dynkin type, e.g. F4")->required();
  list(fpoin->add_option("--theta", flag_theta));
  list(fpoin->add_option("--removed", flag_removed));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool as_json = json_flag || default_output_mode() == OutputMode::Json;
  auto emit = [&](const Json& doc, const std::string& text) {
    if (as_json)
      out << doc.dump() << "\n";
    else
      out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  };
  auto j_or_max = [](const TorsionData& data, const std::vector<int>& j) {
    return j.empty() ? JInvariant::maximal(data) : JInvariant(data, j);
  };

  try {
    if (dump->parsed()) {
      if (dump_p != 0 && dump_form.empty()) throw UsageError("--p needs --form");
      if (!dump_form.empty() && dump_p != 0) {
        const auto row = rows_for(GroupForm::parse(dump_form), dump_p).front();
        emit(to_json(row), row_text(row));
      } else {
        const auto rows =
            dump_form.empty() ? expanded_table(max_rank) : rows_for(GroupForm::parse(dump_form), std::nullopt);
        Json arr = Json::array();
        std::string text;
        for (const auto& r : rows) {
          arr.push_back(to_json(r));
          text += row_text(r) + "\n";
        }
        emit(arr, text);
      }
    } else if (jenum->parsed()) {
      const auto form = GroupForm::parse(je.form);
      const auto all = enumerate_admissible(form, je.p, jbudget);
      Json arr = Json::array();
      std::string text;
      for (const auto& j : all) {
        arr.push_back(to_json(j));
        text += j.to_string() + "\n";
      }
      emit(arr, text);
    } else if (jcheck->parsed()) {
      const auto form = GroupForm::parse(jc.form);
      const JInvariant j(torsion_data(form, jc.p), jc.j);
      Json violated = Json::array();
      std::string text;
      for (const auto& rule : constraint_rules(form, jc.p))
        if (!satisfies(j, rule)) {
          violated.push_back(rule.to_string());
          text += "violates " + rule.to_string() + "\n";
        }
      const bool ok = violated.empty();
      emit(Json{{"p", jc.p}, {"j", jc.j}, {"admissible", ok}, {"violated", violated}},
           (ok ? "admissible " : "not admissible ") + j.to_string() + "\n" + text);
    } else if (jgens->parsed()) {
      TorsionData data;
      if (!rg.form.empty()) {
        if (!ring_d.empty() || !ring_k.empty()) throw UsageError("give either --form or --d/--k");
        data = torsion_data(GroupForm::parse(rg.form), rg.p);
      } else {
        if (ring_d.size() != ring_k.size()) throw UsageError("--d and --k differ in length");
        data = TorsionData{rg.p, ring_d, ring_k};
        data.validate();
      }
      const auto ctx = make_context(data);
      std::vector<RingElement> elems;
      for (const auto& g : gens) elems.push_back(RingElement::parse(ctx, g));
      const auto basis = subring_closure(ctx, elems);
      const auto j = j_from_subring(basis, *ctx);
      Json doc = to_json(j);
      std::string text = "J = " + j.to_string() + "\n";
      if (show_basis) {
        Json b = Json::array();
        for (const auto& e : basis) {
          b.push_back(e.to_string());
          text += "  " + e.to_string() + "\n";
        }
        doc["basis"] = b;
      }
      emit(doc, text);
    } else if (mdec->parsed()) {
      const auto form = GroupForm::parse(md.form);
      const auto data = torsion_data(form, md.p);
      const auto j = j_or_max(data, md.j);
      const auto dec = decompose(form, md.p, j, theta_from(form.base(), md.theta, md.removed));
      emit(to_json(dec), "summand: " + dec.summand.to_string() + "\nmultiplicities: " + dec.multiplicities.to_string() +
                             "\nsum of multiplicities: " + std::to_string(dec.multiplicities.value_at_one()) +
                             "\ntotal: " + dec.total.to_string());
    } else if (mrost->parsed() || mcd->parsed() || mtb->parsed()) {
      const auto form = GroupForm::parse(mr.form);
      const auto data = torsion_data(form, mr.p);
      const auto j = j_or_max(data, mr.j);
      if (mrost->parsed()) {
        const auto poly = rost_poincare(data, j);
        emit(to_json(poly), poly.to_string());
      } else if (mcd->parsed()) {
        const auto cd = canonical_p_dimension(data, j);
        emit(Json(cd), std::to_string(cd));
      } else {
        const auto b = torsion_index_bound(j, mr.p);
        emit(to_json(b), b.str());
      }
    } else if (mint->parsed()) {
      Poly total;
      if (!total_coeffs.empty()) {
        if (!mi.form.empty() && (!mi.theta.empty() || !mi.removed.empty()))
          throw UsageError("--total replaces --theta/--removed");
        total = Poly(total_coeffs);
      } else {
        if (mi.form.empty()) throw UsageError("need --total or --form");
        const auto form = GroupForm::parse(mi.form);
        total = poincare_homogeneous(form.base(), theta_from(form.base(), mi.theta, mi.removed));
      }
      SummandTable summands;
      auto split_arg = [](const std::string& s) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw UsageError("expected p:values in '" + s + "'");
        std::vector<std::int64_t> vals;
        std::stringstream ss(s.substr(colon + 1));
        std::string cell;
        while (std::getline(ss, cell, ',')) {
          try {
            vals.push_back(std::stoll(cell));
          } catch (const std::exception&) {
            throw UsageError("bad number '" + cell + "'");
          }
        }
        int p = 0;
        try {
          p = std::stoi(s.substr(0, colon));
        } catch (const std::exception&) {
          throw UsageError("bad prime in '" + s + "'");
        }
        return std::make_pair(p, vals);
      };
      for (const auto& s : summand_args) {
        auto [p, v] = split_arg(s);
        summands[p] = Poly(v);
      }
      if (!mi.form.empty()) {
        const auto form = GroupForm::parse(mi.form);
        std::map<int, std::vector<int>> jp;
        for (const auto& s : jp_args) {
          auto [p, v] = split_arg(s);
          jp[p] = std::vector<int>(v.begin(), v.end());
        }
        for (auto q : prime_divisors(mint_m)) {
          const int p = static_cast<int>(q);
          if (summands.count(p)) continue;
          const auto data = torsion_data(form, p);
          summands[p] = rost_poincare(data, j_or_max(data, jp.count(p) ? jp[p] : std::vector<int>{}));
        }
      }
      const auto res = integral_decomposition(total, mint_m, summands, sbudget, all_candidates);
      Json doc{{"divisor", to_json(res.divisor)}, {"multiplicities", to_json(res.multiplicities)}};
      std::string text = "divisor: " + res.divisor.to_string() + "\nmultiplicities: " + res.multiplicities.to_string();
      if (all_candidates) {
        Json c = Json::array();
        text += "\ncandidates:";
        for (const auto& f : res.candidates) {
          c.push_back(to_json(f));
          text += "\n  " + f.to_string();
        }
        doc["candidates"] = c;
      }
      emit(doc, text);
    } else if (lidem->parsed() || lfam->parsed() || lizv->parsed() || lsl->parsed()) {
      std::mt19937_64 rng(seed);
      if (lidem->parsed()) {
        ModMatrix a;
        if (random) {
          const auto p = prime_of(modulus);
          auto [g, gi] = random_elementary(rng, p, size);
          const int rank = static_cast<int>(uniform(rng, size + 1));
          const ModMatrix e = g * diagonal_block(p, size, 0, rank) * gi;
          a = lift_to(e, modulus) + random_matrix(rng, modulus, size).scaled(p);
        } else {
          if (mats.size() != 1) throw UsageError("give one --matrix or --random");
          a = ModMatrix::parse(read_matrix_arg(mats.front()));
        }
        const auto e = lift_idempotent(a);
        emit(Json{{"input", to_json(a)}, {"lift", to_json(e)}}, e.to_text());
      } else if (lfam->parsed()) {
        std::vector<ModMatrix> fam;
        if (random) {
          const auto p = prime_of(modulus);
          auto [g, gi] = random_elementary(rng, p, size);
          std::vector<int> cuts{0, size};
          for (int s = 1; s < parts; ++s) cuts.push_back(static_cast<int>(uniform(rng, size + 1)));
          std::sort(cuts.begin(), cuts.end());
          for (int s = 0; s < parts; ++s) {
            const ModMatrix e = g * diagonal_block(p, size, cuts[static_cast<std::size_t>(s)],
                                                   cuts[static_cast<std::size_t>(s) + 1]) * gi;
            fam.push_back(lift_to(e, modulus) + random_matrix(rng, modulus, size).scaled(p));
          }
        } else {
          if (mats.empty()) throw UsageError("give --matrix at least once or --random");
          for (const auto& m : mats) fam.push_back(ModMatrix::parse(read_matrix_arg(m)));
        }
        const auto lifted = lift_orthogonal_family(fam);
        Json arr = Json::array();
        std::string text;
        for (const auto& e : lifted) {
          arr.push_back(to_json(e));
          text += e.to_text() + "\n";
        }
        emit(arr, text);
      } else if (lizv->parsed()) {
        ModMatrix phi1, phi2, psi12, psi21;
        if (random) {
          const auto p = prime_of(modulus);
          auto [h, hi] = random_elementary(rng, p, size);
          const int rank = static_cast<int>(uniform(rng, size + 1));
          phi1 = lift_idempotent(lift_to(h * diagonal_block(p, size, 0, rank) * hi, modulus) +
                                 random_matrix(rng, modulus, size).scaled(p));
          auto [g, gi] = random_elementary(rng, modulus, size);
          phi2 = g * phi1 * gi;
          psi12 = g * phi1 + random_matrix(rng, modulus, size).scaled(p);
          psi21 = phi1 * gi + random_matrix(rng, modulus, size).scaled(p);
        } else {
          if (phi1_s.empty() || phi2_s.empty() || psi12_s.empty() || psi21_s.empty())
            throw UsageError("give --phi1 --phi2 --psi12 --psi21 or --random");
          phi1 = ModMatrix::parse(read_matrix_arg(phi1_s));
          phi2 = ModMatrix::parse(read_matrix_arg(phi2_s));
          psi12 = ModMatrix::parse(read_matrix_arg(psi12_s));
          psi21 = ModMatrix::parse(read_matrix_arg(psi21_s));
        }
        const auto res = lift_isomorphism_izvrat(phi1, phi2, psi12, psi21);
        emit(Json{{"theta12", to_json(res.theta12)},
                  {"theta21", to_json(res.theta21)},
                  {"nilpotency_order", res.nilpotency_order}},
             "theta12: " + res.theta12.to_text() + "\ntheta21: " + res.theta21.to_text() +
                 "\nnilpotency order: " + std::to_string(res.nilpotency_order));
      } else {
        ModMatrix a;
        if (random) {
          while (true) {
            a = random_matrix(rng, modulus, size);
            std::vector<std::vector<BigInt>> ai(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
              for (int j = 0; j < size; ++j) ai[static_cast<std::size_t>(i)].push_back(a.at(i, j));
            BigInt d = determinant(ai) % modulus;
            if (d < 0) d += modulus;
            const auto dinv = inv_mod(static_cast<std::int64_t>(d), modulus);
            if (dinv == 0) continue;
            for (int j = 0; j < size; ++j) a.set(0, j, mul_mod(a.at(0, j), dinv, modulus));
            break;
          }
        } else {
          if (mats.size() != 1) throw UsageError("give one --matrix or --random");
          a = ModMatrix::parse(read_matrix_arg(mats.front()));
        }
        const auto lifted = sl_lift(a);
        emit(Json{{"input", to_json(a)}, {"lift", to_json(lifted)}}, int_matrix_text(lifted));
      }
    } else if (fpoin->parsed()) {
      const auto type = DynkinType::parse(flag_type);
      const auto poly = poincare_homogeneous(type, theta_from(type, flag_theta, flag_removed));
      emit(to_json(poly), poly.to_string());
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}

}  // namespace jmotive::cli
