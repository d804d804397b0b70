#include "whk/doihopf.hpp"

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"

namespace whk {

WbaPtr wba_of(const WhaPtr& h) { return WbaPtr(h, &h->wba()); }

namespace {

bool same_wba(const WbaPtr& a, const WbaPtr& b) {
  if (a == b) return true;
  return a->algebra().mult() == b->algebra().mult() && a->one() == b->one() &&
         a->coalgebra().comult() == b->coalgebra().comult() &&
         a->coalgebra().counit_vector() == b->coalgebra().counit_vector();
}

void absorb_nondegeneracy(Report& r, const std::string& prefix, const Report& nd) {
  for (const auto& c : nd.checks()) {
    if (c.id == "nondegenerate.full" || c.id == "nondegenerate.unit") continue;
    CheckResult copy = c;
    copy.id = prefix + "." + c.id;
    r.add(std::move(copy));
  }
  r.note(prefix + ".nondegenerate", nd.note_value("nondegenerate").value_or("false"));
}

}  // namespace

Report check_datum(const Coaction& coaction, const Action& action, Exec exec) {
  if (coaction.side == action.side()) {
    throw DatumMismatch("a datum pairs a coaction and an action on opposite sides");
  }
  if (!same_wba(coaction.H, action.H())) throw DatumMismatch("coaction and action over different H");
  const Side side = coaction.side == Side::left ? Side::right : Side::left;
  Report r(to_string(side) + " weak Doi-Hopf datum");
  r.merge("", check_comodule_algebra(coaction, exec));
  r.merge("", check_module_coalgebra(action, exec));
  absorb_nondegeneracy(r, "coaction", check_nondegenerate(coaction, exec));
  absorb_nondegeneracy(r, "action", check_nondegenerate(action, exec));
  const bool nd = r.note_value("coaction.nondegenerate") == "true" &&
                  r.note_value("action.nondegenerate") == "true";
  r.note("nondegenerate", nd ? "true" : "false");
  return r;
}

DatumPtr build_datum(Coaction coaction, Action action, WhaPtr hopf, Exec exec) {
  Report r = check_datum(coaction, action, exec);
  if (!r.passed()) throw AxiomFailure(std::move(r));
  const Side side = coaction.side == Side::left ? Side::right : Side::left;
  WbaPtr H = hopf ? wba_of(hopf) : coaction.H;
  const bool nd = r.note_value("nondegenerate") == "true";
  return std::make_shared<const Datum>(
      Datum{side, std::move(H), std::move(hopf), std::move(coaction), std::move(action), nd});
}

DatumPtr dual_datum(const Datum& d, Exec exec) {
  WhaPtr hopf;
  WbaPtr H;
  if (d.hopf) {
    hopf = std::make_shared<const WeakHopfAlgebra>(dual(*d.hopf));
    H = wba_of(hopf);
  } else {
    H = std::make_shared<const WeakBialgebra>(dual(*d.H));
  }
  const Field f = d.H->field();
  const std::size_t nh = d.H->dim(), na = d.A().dim(), nc = d.C().dim();
  const Tensor& act = d.action.tensor();
  const Matrix& rho = d.coaction.rho;
  Algebra chat = dual_algebra(d.C());
  Coalgebra ahat = dual_coalgebra(d.A());

  Matrix new_rho(f, nc * nh, nc);
  Tensor new_act(f, {na, nh, na});
  if (d.side == Side::right) {
    // rho^(g^j) = b_i |> g^j (x) beta^i, stored C^-major.
    for (std::size_t k = 0; k < nc; ++k) {
      for (std::size_t i = 0; i < nh; ++i) {
        for (std::size_t j = 0; j < nc; ++j) new_rho.at(k * nh + i, j) = act.at({k, i, j});
      }
    }
    // (beta^i . alpha^j)(a_k) = (beta^i (x) alpha^j)(rho(a_k))
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t i = 0; i < nh; ++i) {
        for (std::size_t k = 0; k < na; ++k) new_act.at({j, i, k}) = rho.at(i * na + j, k);
      }
    }
    return build_datum(Coaction(Side::right, H, std::move(chat), std::move(new_rho)),
                       Action(Side::left, H, std::move(ahat), std::move(new_act)), hopf, exec);
  }
  for (std::size_t i = 0; i < nh; ++i) {
    for (std::size_t k = 0; k < nc; ++k) {
      for (std::size_t j = 0; j < nc; ++j) new_rho.at(i * nc + k, j) = act.at({k, i, j});
    }
  }
  for (std::size_t j = 0; j < na; ++j) {
    for (std::size_t i = 0; i < nh; ++i) {
      for (std::size_t k = 0; k < na; ++k) new_act.at({j, i, k}) = rho.at(j * nh + i, k);
    }
  }
  return build_datum(Coaction(Side::left, H, std::move(chat), std::move(new_rho)),
                     Action(Side::right, H, std::move(ahat), std::move(new_act)), hopf, exec);
}

// ---------------------------------------------------------------- modules

DoiHopfModule::DoiHopfModule(DatumPtr datum, std::size_t dim, Tensor action, Matrix coaction)
    : datum_(std::move(datum)), dim_(dim), action_(std::move(action)),
      coaction_(std::move(coaction)), eval_(action_) {
  const std::size_t na = datum_->A().dim(), nc = datum_->C().dim();
  if (action_.shape() != std::vector<std::size_t>{dim_, na, dim_}) {
    throw DimMismatch("module action must have shape [dim M, dim A, dim M]");
  }
  if (coaction_.rows() != nc * dim_ || coaction_.cols() != dim_) {
    throw DimMismatch("module coaction must be (dim C * dim M) x dim M");
  }
}

Dims DoiHopfModule::coaction_dims() const {
  const std::size_t nc = datum_->C().dim();
  return datum_->side == Side::right ? Dims{nc, dim_} : Dims{dim_, nc};
}

namespace {

// m_{<-1>}.a_{<-1>} (x) m_{<0>}.a_{<0>} for a right datum, and the mirror
// a_{<0>}.m_{<0>} (x) a_{<1>}.m_{<1>} for a left one; lives in coaction_dims.
Vec compatibility_rhs(const DoiHopfModule& m, const Vec& rho_m, const Vec& rho_a) {
  const Datum& d = *m.datum();
  const std::size_t nh = d.H->dim(), na = d.A().dim(), nc = d.C().dim(), dm = m.dim();
  Vec out = zero_vec(m.field(), nc * dm);
  for (std::size_t p = 0; p < rho_m.size(); ++p) {
    if (rho_m[p].is_zero()) continue;
    for (std::size_t q = 0; q < rho_a.size(); ++q) {
      if (rho_a[q].is_zero()) continue;
      Scalar w = rho_m[p] * rho_a[q];
      if (d.side == Side::right) {
        Vec c = d.action.apply(d.C().basis(p / dm), d.H->basis(q / na));
        Vec mm = m.act(m.basis(p % dm), d.A().basis(q % na));
        axpy(out, w, kron(c, mm));
      } else {
        Vec mm = m.act(m.basis(p / nc), d.A().basis(q / nh));
        Vec c = d.action.apply(d.C().basis(p % nc), d.H->basis(q % nh));
        axpy(out, w, kron(mm, c));
      }
    }
  }
  return out;
}

}  // namespace

Report check_module(const DoiHopfModule& m, Exec exec) {
  const Datum& d = *m.datum();
  const Algebra& A = d.A();
  const Coalgebra& C = d.C();
  const std::size_t na = A.dim(), dm = m.dim();
  const Dims dims = m.coaction_dims();
  const bool right = d.side == Side::right;
  const std::size_t cpos = right ? 0 : 1;
  Report r(to_string(d.side) + " weak Doi-Hopf module");

  r.add(check_identity("module.associativity", right ? "(m.a).b = m.(ab)" : "a.(b.m) = (ab).m",
                       {dm, na, na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = m.basis(i[0]), a = A.basis(i[1]), b = A.basis(i[2]);
                         if (right) return sub(m.act(m.act(x, a), b), m.act(x, A.mul(a, b)));
                         return sub(m.act(m.act(x, b), a), m.act(x, A.mul(a, b)));
                       },
                       exec));
  r.add(check_identity("module.unital", "1_A acts as the identity", {dm},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = m.basis(i[0]);
                         return sub(m.act(x, A.unit()), x);
                       },
                       exec));
  const Matrix delta = C.comult_map();
  r.add(check_identity("comodule.coassociativity",
                       right ? "(Delta_C x id)rho_M = (id x rho_M)rho_M"
                             : "(rho_M x id)rho_M = (id x Delta_C)rho_M",
                       {dm},
                       [&](const std::vector<std::size_t>& i) {
                         Vec v = m.coact(m.basis(i[0]));
                         return sub(apply_factor(v, dims, cpos, delta),
                                    apply_factor(v, dims, 1 - cpos, m.coaction()));
                       },
                       exec));
  const Matrix eps = C.counit_map();
  r.add(check_identity("comodule.counit", "counit of C applied to rho_M is the identity", {dm},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = m.basis(i[0]);
                         return sub(apply_factor(m.coact(x), dims, cpos, eps), x);
                       },
                       exec));
  r.add(check_identity("compatibility",
                       right ? "rho_M(m.a) = m_<-1>.a_<-1> x m_<0>.a_<0>"
                             : "rho_M(a.m) = a_<0>.m_<0> x a_<1>.m_<1>",
                       {dm, na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = m.basis(i[0]), a = A.basis(i[1]);
                         return sub(m.coact(m.act(x, a)),
                                    compatibility_rhs(m, m.coact(x), d.coaction.apply(a)));
                       },
                       exec));
  return r;
}

namespace {

void require_same_datum(const DoiHopfModule& src, const DoiHopfModule& tgt) {
  if (src.datum() != tgt.datum()) throw DatumMismatch("modules over different data");
}

// Residuals of both intertwining laws for T, stacked.
Vec intertwining_residual(const DoiHopfModule& src, const DoiHopfModule& tgt, const Matrix& t) {
  const Datum& d = *src.datum();
  const std::size_t na = d.A().dim();
  const std::size_t tpos = d.side == Side::right ? 1 : 0;
  std::vector<Vec> parts;
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Vec m = src.basis(i);
    Vec tm = t.apply(m);
    for (std::size_t a = 0; a < na; ++a) {
      parts.push_back(sub(t.apply(src.act(m, d.A().basis(a))), tgt.act(tm, d.A().basis(a))));
    }
    parts.push_back(sub(tgt.coact(tm), apply_factor(src.coact(m), src.coaction_dims(), tpos, t)));
  }
  return concat(parts);
}

}  // namespace

Report check_morphism(const DoiHopfModule& src, const DoiHopfModule& tgt, const Matrix& t,
                      Exec exec) {
  require_same_datum(src, tgt);
  if (t.rows() != tgt.dim() || t.cols() != src.dim()) throw ShapeMismatch("morphism shape");
  const Datum& d = *src.datum();
  const std::size_t na = d.A().dim();
  const std::size_t tpos = d.side == Side::right ? 1 : 0;
  Report r("Doi-Hopf morphism");
  r.add(check_identity("intertwines_action", "T(m.a) = T(m).a", {src.dim(), na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec m = src.basis(i[0]), a = d.A().basis(i[1]);
                         return sub(t.apply(src.act(m, a)), tgt.act(t.apply(m), a));
                       },
                       exec));
  r.add(check_identity("intertwines_coaction", "rho' T = (id x T) rho", {src.dim()},
                       [&](const std::vector<std::size_t>& i) {
                         Vec m = src.basis(i[0]);
                         return sub(tgt.coact(t.apply(m)),
                                    apply_factor(src.coact(m), src.coaction_dims(), tpos, t));
                       },
                       exec));
  return r;
}

Matrix as_matrix(Field f, std::size_t rows, std::size_t cols, const Vec& flat) {
  if (flat.size() != rows * cols) throw ShapeMismatch("flattened matrix size");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = flat[r * cols + c];
  }
  return m;
}

Subspace morphism_space(const DoiHopfModule& src, const DoiHopfModule& tgt, Exec exec) {
  require_same_datum(src, tgt);
  const Field f = src.field();
  const std::size_t unknowns = tgt.dim() * src.dim();
  if (unknowns == 0) return Subspace::zero(f, 0);
  const std::size_t rows = intertwining_residual(src, tgt, Matrix(f, tgt.dim(), src.dim())).size();
  Matrix system = matrix_of(f, rows, unknowns, [&](std::size_t u) {
    return intertwining_residual(src, tgt, as_matrix(f, tgt.dim(), src.dim(), unit_vec(f, unknowns, u)));
  }, exec);
  return kernel_of(system);
}

DoiHopfModule dualize_module(const DoiHopfModule& m, const DatumPtr& dual) {
  const Datum& d = *m.datum();
  if (dual->side == d.side) throw DatumMismatch("dual datum must sit on the other side");
  const std::size_t na = d.A().dim(), nc = d.C().dim(), dm = m.dim();
  if (dual->A().dim() != nc || dual->C().dim() != na) throw DatumMismatch("not the dual datum");
  const Field f = m.field();
  const Tensor& act = m.action();
  const Matrix& rho = m.coaction();
  Tensor new_act(f, {dm, nc, dm});
  Matrix new_rho(f, na * dm, dm);
  if (d.side == Side::right) {
    // (g^i . mu^j)(m_k) = (g^i (x) mu^j)(rho_M(m_k))
    for (std::size_t j = 0; j < dm; ++j) {
      for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t k = 0; k < dm; ++k) new_act.at({j, i, k}) = rho.at(i * dm + j, k);
      }
    }
    // rho^(mu) = a_i |> mu (x) alpha^i, M-major
    for (std::size_t k = 0; k < dm; ++k) {
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < dm; ++j) new_rho.at(k * na + i, j) = act.at({k, i, j});
      }
    }
  } else {
    for (std::size_t j = 0; j < dm; ++j) {
      for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t k = 0; k < dm; ++k) new_act.at({j, i, k}) = rho.at(j * nc + i, k);
      }
    }
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t k = 0; k < dm; ++k) {
        for (std::size_t j = 0; j < dm; ++j) new_rho.at(i * dm + k, j) = act.at({k, i, j});
      }
    }
  }
  return DoiHopfModule(dual, dm, std::move(new_act), std::move(new_rho));
}

AModule forget_coaction(const DoiHopfModule& m) { return AModule{m.dim(), m.action()}; }

CComodule forget_action(const DoiHopfModule& m) { return CComodule{m.dim(), m.coaction()}; }

Report check_amodule(const Datum& d, const AModule& m, Exec exec) {
  const Algebra& A = d.A();
  const std::size_t na = A.dim();
  Bilinear act(m.action);
  auto basis = [&](std::size_t i) { return unit_vec(A.field(), m.dim, i); };
  Report r("right A-module");
  r.add(check_identity("module.associativity", "(m.a).b = m.(ab)", {m.dim, na, na},
                       [&](const std::vector<std::size_t>& i) {
                         Vec x = basis(i[0]), a = A.basis(i[1]), b = A.basis(i[2]);
                         return sub(act.apply(act.apply(x, a), b), act.apply(x, A.mul(a, b)));
                       },
                       exec));
  r.add(check_identity("module.unital", "1_A acts as the identity", {m.dim},
                       [&](const std::vector<std::size_t>& i) {
                         return sub(act.apply(basis(i[0]), A.unit()), basis(i[0]));
                       },
                       exec));
  return r;
}

Report check_ccomodule(const Datum& d, const CComodule& m, Exec exec) {
  const Coalgebra& C = d.C();
  const Dims dims{C.dim(), m.dim};
  const Matrix delta = C.comult_map();
  const Matrix eps = C.counit_map();
  Report r("left C-comodule");
  r.add(check_identity("comodule.coassociativity", "(Delta_C x id)rho_M = (id x rho_M)rho_M",
                       {m.dim},
                       [&](const std::vector<std::size_t>& i) {
                         Vec v = m.coaction.column(i[0]);
                         return sub(apply_factor(v, dims, 0, delta), apply_factor(v, dims, 1, m.coaction));
                       },
                       exec));
  r.add(check_identity("comodule.counit", "counit of C applied to rho_M is the identity", {m.dim},
                       [&](const std::vector<std::size_t>& i) {
                         Vec v = m.coaction.column(i[0]);
                         return sub(apply_factor(v, dims, 0, eps), unit_vec(C.field(), m.dim, i[0]));
                       },
                       exec));
  return r;
}

AModule regular_amodule(const Datum& d) { return AModule{d.A().dim(), d.A().mult()}; }

CComodule regular_ccomodule(const Datum& d) { return CComodule{d.C().dim(), d.C().comult_map()}; }

}  // namespace whk
