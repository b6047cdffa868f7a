#include "adapted/jobspec.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "adapted/basis.hpp"
#include "adapted/json_io.hpp"
#include "adapted/rewriter.hpp"
#include "adapted/sampling.hpp"
#include "adapted/symplectic.hpp"

namespace adapted {

namespace {

PrimeOrderData normalized(const PrimeOrderData& d) {
  return d.sorted_normalized() ? d : normalize_conjugacy(d);
}

Presentation single_relator_presentation(const PrimeOrderData& d) {
  if (d.t == 0) return t0_presentation(d);
  return simplify_to_single_relator(subgroup_presentation(d), d);
}

}  // namespace

std::vector<VerifyCheck> verify_battery(const PrimeOrderData& dd, unsigned sample_words) {
  PrimeOrderData d = normalized(dd);
  std::vector<VerifyCheck> checks;
  auto add = [&](const std::string& name, bool pass) { checks.push_back({name, pass}); };

  {
    std::vector<i64> recount(static_cast<std::size_t>(d.p - 1), 0);
    for (i64 v : d.n) recount[static_cast<std::size_t>(v - 1)] += 1;
    add("multiplicity recount", d.t == 0 ? d.m.empty() : recount == d.m);
    bool inverses = true;
    for (std::size_t i = 0; i < d.n.size(); ++i)
      inverses = inverses && mod_nonneg(d.s[i] * d.n[i], d.p) == 1;
    add("rotation numbers are inverses", inverses);
    bool rh = d.t > 0 ? 2 * d.g == 2 * d.p * d.g0 + (d.p - 1) * (d.t - 2)
                      : d.g == d.p * (d.g0 - 1) + 1;
    add("riemann-hurwitz count", rh);
  }

  std::vector<BasisElement> basis = enumerate(d);
  {
    i64 lifts = 0, exceptionals = 0, special = 0;
    for (const auto& e : basis) {
      if (e.kind == BasisElement::Kind::LiftA || e.kind == BasisElement::Kind::LiftB) ++lifts;
      if (e.kind == BasisElement::Kind::Exceptional) ++exceptionals;
      if (e.kind == BasisElement::Kind::Alpha || e.kind == BasisElement::Kind::Beta) ++special;
    }
    add("basis size 2g", static_cast<i64>(basis.size()) == 2 * d.g);
    if (d.t > 0) {
      add("type(1) count 2pg0", lifts == 2 * d.p * d.g0);
      add("type(2) count (p-1)(t-2)", exceptionals == (d.p - 1) * (d.t - 2));
    } else {
      add("type(1) count 2p(g0-1)+2", lifts + special == 2 * d.p * (d.g0 - 1) + 2);
    }
  }

  IntMatrix inter = intersection_matrix(d);
  IntMatrix act = action_matrix(d);
  add("intersection skew-symmetric", inter.is_skew_symmetric());
  add("intersection determinant 1", inter.determinant() == 1);
  {
    bool small = true;
    for (std::size_t i = 0; i < act.rows(); ++i)
      for (std::size_t j = 0; j < act.cols(); ++j)
        small = small && act.at(i, j) >= -1 && act.at(i, j) <= 1;
    add("action entries in {-1,0,1}", small);
    IntMatrix power = IntMatrix::identity(act.rows());
    bool premature = false;
    for (i64 k = 1; k < d.p; ++k) {
      power = power * act;
      if (power == IntMatrix::identity(act.rows())) premature = true;
    }
    power = power * act;
    add("action order exactly p", !premature && power == IntMatrix::identity(act.rows()));
  }
  add("action preserves intersection", preserves_form(act, inter));
  add("action matches rewriting", homology_action_full(d) == act);

  Presentation pres = single_relator_presentation(d);
  {
    const Word& relator = pres.relators.at(0);
    add("relator evenly worded", check_evenly_worded(relator));
    add("relator fully linked", check_fully_linked(relator));
    add("relator abelianization zero", abelianized(relator).empty());
    bool covered = static_cast<i64>(pres.generators.size()) == 2 * d.g;
    {
      std::map<GeneratorSymbol, int> seen;
      for (const auto& l : relator.letters()) seen[l.sym] += 1;
      for (const auto& g : pres.generators) covered = covered && seen[g] == 2;
      covered = covered && seen.size() == pres.generators.size();
    }
    add("relator covers the 2g generators", covered);
  }

  {
    std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned long long>(d.p * 1000 + d.t * 10 +
                                                                        d.g0));
    bool raw_ok = true, labeled_ok = true;
    for (unsigned i = 0; i < sample_words; ++i) {
      BaseWord w = random_kernel_word(rng, d, 30);
      raw_ok = raw_ok && substitute_schreier(rewrite_letters(w, d), d) == w;
      BaseWord back = substitute_schreier(rewrite_tau(w, d), d);
      if (d.t > 0)
        labeled_ok = labeled_ok && equal_mod_transversal_power(back, w, d);
      else
        labeled_ok = labeled_ok && back == w;
    }
    add("rewriting round-trip exact", raw_ok);
    add("rewriting round-trip after deletions", labeled_ok);
  }

  {
    SymplecticChange change = symplectic_basis(inter);
    bool pip = change.P.transposed() * inter * change.P == change.J;
    i64 detp = change.P.determinant();
    IntMatrix t = transform_action(act, change);
    add("P^T I P = J", pip);
    add("det P = +-1", detp == 1 || detp == -1);
    add("transformed action symplectic", is_symplectic(t, change.J));
    add("transformed action order p", t.pow(d.p) == IntMatrix::identity(t.rows()));
  }

  if (d.t > 0) {
    ResidueContext ctx = residue_context(d);
    bool shift = true;
    std::mt19937_64 rng(0xfeedULL + static_cast<unsigned long long>(d.p));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int rep = 0; rep < 64; ++rep) {
      const BasisElement& e1 = basis[pick(rng)];
      const BasisElement& e2 = basis[pick(rng)];
      if (e1.kind != BasisElement::Kind::Exceptional ||
          e2.kind != BasisElement::Kind::Exceptional)
        continue;
      for (int delta = 1; delta < d.p - 1; ++delta) {
        if (e1.power + delta > d.p - 2 || e2.power + delta > d.p - 2) continue;
        BasisElement f1 = e1, f2 = e2;
        f1.power += delta;
        f2.power += delta;
        shift = shift && intersection_number(f1, f2, d, ctx) ==
                             intersection_number(e1, e2, d, ctx);
      }
    }
    add("power-shift identity", shift);
  } else {
    add("canonical after pairing permutation",
        inter.permuted(block_arrangement_permutation(d)) == canonical_intersection(d));
  }

  return checks;
}

namespace {

void emit_text(std::ostream& out, const JobSpec& spec) {
  const PrimeOrderData& d = spec.data;
  out << "p = " << d.p << ", t = " << d.t << ", g0 = " << d.g0 << ", g = " << d.g << "\n";
  if (d.t > 0) {
    out << "n = (";
    for (std::size_t i = 0; i < d.n.size(); ++i) out << (i ? "," : "") << d.n[i];
    out << "), m = (";
    for (std::size_t i = 0; i < d.m.size(); ++i) out << (i ? "," : "") << d.m[i];
    out << ")\n";
  }
}

}  // namespace

int run_job(const JobSpec& spec, std::ostream& out) {
  PrimeOrderData d = normalized(spec.data);
  auto wants = [&](Stage s) {
    return std::find(spec.stages.begin(), spec.stages.end(), s) != spec.stages.end();
  };
  int status = 0;

  nlohmann::json doc;
  std::ostringstream text;
  if (spec.format == Format::text) emit_text(text, {d, spec.stages, spec.format});
  doc["data"] = to_json(d);

  std::vector<std::string> names = labels(enumerate(d));

  if (wants(Stage::presentation)) {
    Presentation pres = single_relator_presentation(d);
    if (spec.format == Format::json)
      doc["presentation"] = presentation_json(pres);
    else if (spec.format == Format::text)
      text << presentation_text(pres);
    else
      throw validation_error(errc::parse_error, "csv output applies to matrix stages only");
  }
  if (wants(Stage::basis)) {
    if (spec.format == Format::json) {
      doc["basis"] = names;
    } else if (spec.format == Format::csv) {
      for (std::size_t i = 0; i < names.size(); ++i) out << '"' << names[i] << "\"\n";
    } else {
      text << "basis (" << names.size() << "):\n";
      for (const auto& n : names) text << "  " << n << '\n';
    }
  }

  auto matrix_stage = [&](Stage s, const char* key, const IntMatrix& m) {
    if (!wants(s)) return;
    if (spec.format == Format::json)
      doc[key] = matrix_json(m, names);
    else if (spec.format == Format::csv)
      out << matrix_csv(m, names);
    else
      text << key << ":\n" << matrix_text(m, names);
  };
  matrix_stage(Stage::action, "action", action_matrix(d));
  matrix_stage(Stage::intersection, "intersection", intersection_matrix(d));
  matrix_stage(Stage::canonical, "canonical", canonical_intersection(d));

  if (wants(Stage::symplectic)) {
    IntMatrix inter = intersection_matrix(d);
    IntMatrix act = action_matrix(d);
    SymplecticChange change = symplectic_basis(inter);
    IntMatrix t = transform_action(act, change);
    if (spec.format == Format::json) {
      doc["symplectic"] = {{"P", matrix_json(change.P, names)["rows"]},
                           {"P_inv", matrix_json(change.P_inv, names)["rows"]},
                           {"J", matrix_json(change.J, names)["rows"]},
                           {"T", matrix_json(t, names)["rows"]},
                           {"arrangement", "paired"}};
    } else if (spec.format == Format::csv) {
      out << matrix_csv(t, names);
    } else {
      text << "P:\n" << to_string(change.P) << "J (paired):\n" << to_string(change.J)
           << "T = P^-1 M P:\n" << to_string(t);
    }
  }

  if (wants(Stage::verify)) {
    auto checks = verify_battery(d);
    bool all = std::all_of(checks.begin(), checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
    if (!all) status = 2;
    if (spec.format == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}});
      doc["verify"] = {{"checks", arr}, {"pass", all}};
    } else {
      for (const auto& c : checks)
        text << (c.pass ? "ok   " : "FAIL ") << c.name << '\n';
      text << (all ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
  }

  if (spec.format == Format::json)
    out << doc.dump(2) << '\n';
  else if (spec.format == Format::text)
    out << text.str();
  return status;
}

SweepReport sweep(i64 p_max, i64 t_max, i64 g0_max, std::ostream* progress) {
  SweepReport report;
  auto run_case = [&](const PrimeOrderData& d, const std::string& name) {
    ++report.cases;
    auto checks = verify_battery(d, 10);
    std::string bad;
    for (const auto& c : checks)
      if (!c.pass) bad += (bad.empty() ? "" : "; ") + c.name;
    if (bad.empty()) {
      ++report.passed;
    } else {
      report.failures.push_back(name + ": " + bad);
    }
    if (progress) *progress << (bad.empty() ? "ok   " : "FAIL ") << name << '\n';
  };

  for (i64 p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (i64 g0 = 0; g0 <= g0_max; ++g0) {
      if (g0 >= 2 && p * (g0 - 1) + 1 >= 2) {
        std::ostringstream name;
        name << "p=" << p << " t=0 g0=" << g0;
        run_case(validate_fixed_point_free(p, g0), name.str());
      }
      for (i64 t = 2; t <= t_max; ++t) {
        for (const auto& n : all_n_multisets(p, t)) {
          i64 twice_g = 2 * p * g0 + (p - 1) * (t - 2);
          if (twice_g < 4) continue;
          std::ostringstream name;
          name << "p=" << p << " g0=" << g0 << " n=(";
          for (std::size_t i = 0; i < n.size(); ++i) name << (i ? "," : "") << n[i];
          name << ")";
          run_case(validate(p, n, g0), name.str());
        }
      }
    }
  }
  return report;
}

}  // namespace adapted
