#include "whk/suite.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "whk/adjoint.hpp"
#include "whk/double.hpp"
#include "whk/integrals.hpp"
#include "whk/smash.hpp"

namespace whk {

namespace {

constexpr Example kExamples[] = {Example::ex1, Example::ex2, Example::ex3, Example::ex4};

// Runs body and turns an escaping error into a failed check named id.
void guard(Report& r, const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const AxiomFailure& e) {
    r.add(id, "construction succeeds", false, e.report().summary());
  } catch (const std::exception& e) {
    r.add(id, "construction succeeds", false, e.what());
  }
}

WhaPtr base_of(const std::string& name, Field f) {
  return std::make_shared<const WeakHopfAlgebra>(gallery(name, f));
}

std::string tag(const std::string& base, Example e) { return base + "." + to_string(e); }

bool has_witnessed_failure(const Report& r) {
  for (const auto& c : r.checks()) {
    if (!c.pass && c.witness) return true;
  }
  return false;
}

std::size_t first_nonzero(const Tensor& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_zero()) return i;
  }
  return 0;
}

bool same_datum(const Datum& a, const Datum& b) {
  return a.side == b.side && a.H->algebra().mult() == b.H->algebra().mult() &&
         a.H->algebra().unit() == b.H->algebra().unit() &&
         a.H->coalgebra().comult() == b.H->coalgebra().comult() &&
         a.H->coalgebra().counit_vector() == b.H->coalgebra().counit_vector() &&
         a.A().mult() == b.A().mult() && a.A().unit() == b.A().unit() &&
         a.C().comult() == b.C().comult() && a.C().counit_vector() == b.C().counit_vector() &&
         a.coaction.rho == b.coaction.rho && a.action.tensor() == b.action.tensor();
}

}  // namespace

Report suite_structures(const SuiteOptions& o) {
  Report r("weak Hopf algebra axioms over " + o.field.name());
  for (const auto& b : o.bases) {
    guard(r, b + ".build", [&] {
      const WeakHopfAlgebra h = gallery(b, o.field);
      const WeakBialgebra& w = h.wba();
      r.merge(b, check_wha(w, h.antipode(), o.exec));

      Tensor mult = w.algebra().mult();
      mult[first_nonzero(mult)] += o.field.one();
      Report m1 = check_wba(Algebra(o.field, mult, w.algebra().unit()), w.coalgebra(), o.exec);
      r.add(b + ".mutated.mult", "a perturbed product fails with a witness",
            !m1.passed() && has_witnessed_failure(m1), m1.summary());

      Tensor comult = w.coalgebra().comult();
      comult[first_nonzero(comult)] += o.field.one();
      Report m2 = check_wba(w.algebra(), Coalgebra(o.field, comult, w.coalgebra().counit_vector()),
                            o.exec);
      r.add(b + ".mutated.comult", "a perturbed coproduct fails with a witness",
            !m2.passed() && has_witnessed_failure(m2), m2.summary());

      Vec counit = w.coalgebra().counit_vector();
      counit[0] += o.field.one();
      Report m3 = check_wba(w.algebra(), Coalgebra(o.field, w.coalgebra().comult(), counit), o.exec);
      r.add(b + ".mutated.counit", "a perturbed counit fails with a witness",
            !m3.passed() && has_witnessed_failure(m3), m3.summary());

      Matrix s = h.antipode();
      s.at(0, 0) += o.field.one();
      Report m4 = check_wha(w, s, o.exec);
      r.add(b + ".mutated.antipode", "a perturbed antipode fails with a witness",
            !m4.passed() && has_witnessed_failure(m4), m4.summary());
    });
  }
  return r;
}

Report suite_data(const SuiteOptions& o) {
  Report r("example data");
  for (const auto& b : o.bases) {
    for (Example e : kExamples) {
      guard(r, tag(b, e) + ".datum", [&] {
        DatumPtr d = example_datum(base_of(b, o.field), e, o.exec);
        r.add(tag(b, e) + ".datum", "a non-degenerate right weak Doi-Hopf datum",
              d->side == Side::right && d->nondegenerate);
      });
    }
  }
  return r;
}

Report suite_duality(const SuiteOptions& o) {
  Report r("duality of data");
  for (const auto& b : o.bases) {
    for (Example e : kExamples) {
      const std::string id = tag(b, e);
      guard(r, id + ".duality", [&] {
        DatumPtr d = example_datum(base_of(b, o.field), e, o.exec);
        DatumPtr dd = dual_datum(*d, o.exec);
        DatumPtr ddd = dual_datum(*dd, o.exec);
        r.add(id + ".involutive", "dualizing twice gives the datum back", same_datum(*d, *ddd));
        r.add(id + ".nondegeneracy_transported", "the dual is non-degenerate iff the datum is",
              dd->nondegenerate == d->nondegenerate && ddd->nondegenerate == d->nondegenerate);
        r.add(id + ".side_flipped", "the dual of a right datum is a left datum",
              dd->side != d->side && ddd->side == d->side);
      });
    }
  }
  return r;
}

Report suite_smash(const SuiteOptions& o) {
  Report r("smash products");
  for (const auto& b : o.bases) {
    for (Example e : kExamples) {
      const std::string id = tag(b, e);
      guard(r, id + ".smash", [&] {
        WhaPtr h = base_of(b, o.field);
        DatumPtr d = example_datum(h, e, o.exec);
        SmashAlgebra s = build_smash(d, o.exec);
        r.merge(id + ".smash", check_smash(s, o.exec));
        r.merge(id, example_iso(s, e, h, false, o.exec).report);
      });
    }
  }
  return r;
}

Report suite_categories(const SuiteOptions& o) {
  Report r("smash modules versus Doi-Hopf modules");
  for (const auto& b : o.bases) {
    for (Example e : {Example::ex1, Example::ex2, Example::ex3}) {
      const std::string id = tag(b, e);
      guard(r, id + ".categories", [&] {
        DatumPtr d = example_datum(base_of(b, o.field), e, o.exec);
        SmashAlgebra s = build_smash(d, o.exec);
        const RightModule reg = regular_module(s.algebra);
        std::vector<Subspace> subs{Subspace::full(s.algebra.field(), reg.dim)};
        for (std::size_t i = 0; i < reg.dim; ++i) {
          Subspace c = cyclic_submodule(s.algebra, reg, s.algebra.basis(i));
          bool seen = false;
          for (const auto& x : subs) seen = seen || x == c;
          if (!seen) subs.push_back(c);
        }
        bool pp = true, ppp = true;
        for (const auto& sub : subs) {
          const RightModule n = submodule(reg, sub);
          const DoiHopfModule m = functor_Pprime(s, n);
          pp = pp && same_module(functor_P(s, m), n);
          ppp = ppp && same_module(functor_Pprime(s, functor_P(s, m)), m);
        }
        r.add(id + ".P_Pprime", "P P' = id on the regular module and its cyclic submodules", pp,
              std::to_string(subs.size()) + " modules");
        r.add(id + ".Pprime_P", "P' P = id on the same modules", ppp);
      });
    }
  }
  return r;
}

Report suite_adjunction(const SuiteOptions& o) {
  Report r("adjoint functors");
  for (const auto& b : o.bases) {
    for (Example e : kExamples) {
      const std::string id = tag(b, e);
      guard(r, id + ".adjunction", [&] {
        DatumPtr d = example_datum(base_of(b, o.field), e, o.exec);
        r.merge(id, check_induction_identities(*d, o.exec));
        SmashAlgebra s = build_smash(d, o.exec);
        std::vector<DoiHopfModule> mods = harvest_modules(s);
        r.merge(id, check_adjunction(d, mods, o.exec));
      });
    }
  }
  return r;
}

Report suite_double(const SuiteOptions& o) {
  Report r("Drinfeld doubles");
  for (const auto& b : o.bases) {
    guard(r, b + ".double", [&] {
      DrinfeldDouble d = build_double(base_of(b, o.field), o.exec);
      r.merge(b + ".double", d.report);
      r.merge(b + ".double", check_wha(d.wha->wba(), d.wha->antipode(), o.exec));
      r.note(b + ".double_dim", std::to_string(d.dim()));
    });
  }
  return r;
}

Report suite_yd(const SuiteOptions& o) {
  Report r("Yetter-Drinfeld modules");
  for (const auto& b : o.bases) {
    guard(r, b + ".yd", [&] {
      WhaPtr h = base_of(b, o.field);
      const YDModule unit = yd_unit(wba_of(h));
      const Report ru = check_yd(unit, h, o.exec);
      r.merge(b + ".unit", ru);
      r.add(b + ".unit.forms_agree", "the two-line and single-relation forms agree",
            ru.note_value("yd.forms_agree").value_or("false") == "true");

      DrinfeldDouble d = build_double(h, o.exec);
      const YDModule reg = double_to_yd(regular_module(d.algebra), d);
      const Report rr = check_yd(reg, h, o.exec);
      r.merge(b + ".regular", rr);
      r.add(b + ".regular.forms_agree", "the two-line and single-relation forms agree",
            rr.note_value("yd.forms_agree").value_or("false") == "true");

      r.merge(b + ".tensor.unit_unit", check_yd(yd_tensor(unit, unit).module, h, o.exec));
      r.merge(b + ".tensor.unit_regular", check_yd(yd_tensor(unit, reg).module, h, o.exec));
      r.merge(b + ".tensor.regular_unit", check_yd(yd_tensor(reg, unit).module, h, o.exec));
      r.merge(b + ".unitors.unit_unit", check_unitors(unit, unit, o.exec));
      r.merge(b + ".unitors.unit_regular", check_unitors(unit, reg, o.exec));
      r.merge(b + ".unitors.regular_unit", check_unitors(reg, unit, o.exec));
      r.merge(b + ".dictionary.unit", check_yd_vs_double(unit, d, o.exec));
      r.merge(b + ".dictionary.regular", check_yd_vs_double(reg, d, o.exec));
    });
  }
  return r;
}

Report suite_integrals(const SuiteOptions& o) {
  Report r("integrals");
  const DualIntegralConvention conv = pin_dual_convention(o.field, &r);
  r.note("dual_integral.pinned", to_string(conv));
  for (const auto& b : o.bases) {
    WhaPtr h;
    guard(r, b + ".integrals", [&] { h = base_of(b, o.field); });
    if (!h) continue;
    for (Example e : kExamples) {
      const std::string id = tag(b, e);
      try {
        DatumPtr d = example_datum(h, e, o.exec);
        V0Result v = v0_iso(d, e, h, conv, o.exec);
        if (e == Example::ex4) {
          for (const auto& c : v.report.checks()) r.note(id + "." + c.id, c.pass ? "pass" : "fail");
          for (const auto& [k, val] : v.report.notes()) r.note(id + "." + k, val);
        } else {
          r.merge(id, v.report);
        }
        if (e == Example::ex2) {
          const Report remark = example2_remark(v, h);
          for (const auto& [k, val] : remark.notes()) r.note(id + ".remark." + k, val);
        }
      } catch (const NoNondegenerateIntegral& err) {
        // The Frobenius hypothesis is part of the statement; its absence is
        // a finding about the instance, not a failure.
        r.note(id + ".frobenius", std::string("no: ") + err.what());
      } catch (const std::exception& err) {
        if (e == Example::ex4) {
          r.note(id + ".error", err.what());
        } else {
          r.add(id + ".integrals", "computation succeeds", false, err.what());
        }
      }
    }
  }
  return r;
}

Report suite_kernel(Field f, unsigned seed, std::size_t field_cases, Exec exec) {
  Report r("kernel over " + f.name());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12), small(-3, 3), coin(0, 3);
  auto scalar = [&] { return f.is_rational() ? f.from_fraction(num(rng), den(rng)) : f.from_int(num(rng)); };
  auto sparse = [&] { return coin(rng) == 0 ? f.from_int(small(rng)) : f.zero(); };

  std::size_t bad = 0;
  for (std::size_t i = 0; i < field_cases; ++i) {
    const Scalar a = scalar(), b = scalar(), c = scalar();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a &&
              a * b == b * a && a * (b + c) == a * b + a * c && a + f.zero() == a &&
              a * f.one() == a && a + (-a) == f.zero() && (a - b) + b == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == f.one() && (b / a) * a == b;
    if (!ok) ++bad;
  }
  r.add("field.axioms", "randomized field axioms", bad == 0,
        std::to_string(field_cases) + " cases, " + std::to_string(bad) + " failing");

  bool rn = true, kernel_ok = true;
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = t % 2 ? sparse() : scalar();
    }
    Subspace k = kernel_of(m), im = image_of(m);
    rn = rn && k.dim() + im.dim() == cols && im.dim() == rank(m);
    for (const auto& v : k.basis_vectors()) kernel_ok = kernel_ok && is_zero(m.apply(v));
  }
  r.add("linalg.rank_nullity", "dim ker + dim im = domain dim", rn);
  r.add("linalg.kernel_resubstitution", "kernel vectors are annihilated", kernel_ok);

  bool qok = true;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 8, k = rng() % (n + 1);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v = zero_vec(f, n);
      for (auto& x : v) x = sparse();
      gens.push_back(v);
    }
    Subspace rel = Subspace::span(f, n, gens);
    Quotient q = quotient(n, rel);
    const std::size_t qd = n - rel.dim();
    qok = qok && q.projection.rows() == qd && q.section.cols() == qd &&
          (q.projection * q.section).is_identity() && rank(q.projection) == qd;
    for (const auto& v : rel.basis_vectors()) qok = qok && is_zero(q.projection.apply(v));
  }
  r.add("linalg.quotient", "projection kills relations and has the section as right inverse", qok);

  bool cok = true;
  for (int t = 0; t < 40; ++t) {
    std::vector<std::size_t> s1{1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4};
    std::vector<std::size_t> s2{s1[2], 1 + rng() % 4};
    if (t % 3 == 0) s2 = {s1[1], s1[2], 1 + rng() % 3};
    Vec e1(s1[0] * s1[1] * s1[2], f.zero()), e2;
    for (auto& x : e1) x = sparse();
    std::size_t n2 = 1;
    for (auto d : s2) n2 *= d;
    e2.assign(n2, f.zero());
    for (auto& x : e2) x = sparse();
    Tensor a(f, s1, e1), b(f, s2, e2);
    AxisPairs axes = t % 3 == 0 ? AxisPairs{{1, 0}, {2, 1}} : AxisPairs{{2, 0}};
    Tensor ref = contract_reference(a, b, axes);
    cok = cok && contract(a, b, axes, exec) == ref && contract(a, b, axes, Exec::serial) == ref;
  }
  r.add("tensor.contract_vs_reference", "contraction agrees with the naive loop", cok);
  return r;
}

std::vector<std::string> suite_names() {
  return {"all", "structures", "data", "duality", "smash", "categories",
          "adjunction", "double", "integrals", "kernel"};
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  using Fn = Report (*)(const SuiteOptions&);
  const std::vector<std::pair<std::string, Fn>> parts = {
      {"structures", suite_structures}, {"data", suite_data},
      {"duality", suite_duality},       {"smash", suite_smash},
      {"categories", suite_categories}, {"adjunction", suite_adjunction},
      {"double", suite_double},         {"yd", suite_yd},
      {"integrals", suite_integrals}};
  Report r("suite " + name);
  bool found = false;
  for (const auto& [n, fn] : parts) {
    const bool in_double = name == "double" && n == "yd";
    if (name == "all" || name == n || in_double) {
      found = true;
      Report part = fn(o);
      r.merge(n, part);
      for (const auto& [k, v] : part.notes()) r.note(n + "." + k, v);
    }
  }
  if (name == "all" || name == "kernel") {
    found = true;
    r.merge("kernel", suite_kernel(o.field, 7, 1000, o.exec));
  }
  if (!found) throw ParseError("unknown suite '" + name + "'");
  return r;
}

Criterion run_criterion(int k, Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  const Field q = Field::rationals();
  auto opts = [&](std::vector<std::string> bases, Field f = Field::rationals()) {
    return SuiteOptions{std::move(bases), f, exec};
  };
  Criterion c{k, "", Report("criterion " + std::to_string(k)), 0.0};
  switch (k) {
    case 1: {
      c.title = "weak Hopf algebra axioms and mutation witnesses";
      const std::vector<std::string> bases{"g2", "g3", "g4", "dual:g4", "zn(3)"};
      c.report.merge("Q", suite_structures(opts(bases)));
      c.report.merge("F7", suite_structures(opts(bases, Field::prime(7))));
      break;
    }
    case 2:
      c.title = "example data are non-degenerate right data";
      c.report = suite_data(opts({"g2", "g3", "g4"}));
      break;
    case 3:
      c.title = "duality is involutive";
      c.report = suite_duality(opts({"g2", "g3", "g4"}));
      break;
    case 4:
      c.title = "smash products and their comparison maps";
      c.report = suite_smash(opts({"g2", "g3", "g4"}));
      break;
    case 5:
      c.title = "smash modules and Doi-Hopf modules are isomorphic categories";
      c.report = suite_categories(opts({"g2", "g3"}));
      break;
    case 6:
      c.title = "adjunctions";
      c.report = suite_adjunction(opts({"g2", "g3", "g4"}));
      break;
    case 7: {
      c.title = "Drinfeld doubles";
      c.report = suite_double(opts({"g2", "g3", "g4"}));
      const auto dim = c.report.note_value("g2.double_dim");
      c.report.add("g2.double_dim", "D(G2) has dimension 4", dim && *dim == "4");
      break;
    }
    case 8:
      c.title = "Yetter-Drinfeld modules";
      c.report = suite_yd(opts({"g2", "g3", "g4", "zn(3)", "pair(3)", "dual:g4"}));
      break;
    case 9: {
      c.title = "integrals";
      Report ex1 = suite_integrals(opts({"g2", "g4"}));
      for (const auto& chk : ex1.checks()) {
        if (chk.id.find(".ex1.") != std::string::npos) c.report.add(chk);
      }
      Report g2 = suite_integrals(opts({"g2"}));
      for (const auto& chk : g2.checks()) {
        if (chk.id.find(".ex1.") == std::string::npos) c.report.add(chk);
      }
      for (const auto& [key, v] : g2.notes()) c.report.note(key, v);
      break;
    }
    case 10:
      c.title = "kernel";
      c.report.merge("Q", suite_kernel(q, 11, 1000, exec));
      c.report.merge("F7", suite_kernel(Field::prime(7), 13, 1000, exec));
      break;
    default:
      throw ParseError("no criterion " + std::to_string(k));
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace whk
