#include "whk/gallery.hpp"

#include <regex>

#include "whk/errors.hpp"
#include "whk/multilinear.hpp"

namespace whk {

void validate_groupoid(const Groupoid& g) {
  const std::size_t n = g.source.size();
  if (g.target.size() != n || g.compose.size() != n) throw NotAGroupoid("arrow tables differ in length");
  for (std::size_t f = 0; f < n; ++f) {
    if (g.source[f] >= g.objects || g.target[f] >= g.objects) {
      throw NotAGroupoid("arrow " + std::to_string(f) + " has an unknown endpoint");
    }
    if (g.compose[f].size() != n) throw NotAGroupoid("composition table is not square");
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto& fh = g.compose[f][h];
      if (fh.has_value() != (g.target[f] == g.source[h])) {
        throw NotAGroupoid("composability of (" + std::to_string(f) + "," + std::to_string(h) +
                           ") disagrees with the endpoints");
      }
      if (fh && (*fh >= n || g.source[*fh] != g.source[f] || g.target[*fh] != g.target[h])) {
        throw NotAGroupoid("composite of (" + std::to_string(f) + "," + std::to_string(h) +
                           ") has wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      if (!g.compose[f][h]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!g.compose[h][k]) continue;
        if (g.compose[*g.compose[f][h]][k] != g.compose[f][*g.compose[h][k]]) {
          throw NotAGroupoid("composition is not associative at (" + std::to_string(f) + "," +
                             std::to_string(h) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  std::vector<std::optional<std::size_t>> identity(g.objects);
  for (std::size_t e = 0; e < n; ++e) {
    if (g.source[e] != g.target[e]) continue;
    bool neutral = true;
    for (std::size_t f = 0; f < n && neutral; ++f) {
      if (g.source[f] == g.source[e] && g.compose[e][f] != f) neutral = false;
      if (g.target[f] == g.source[e] && g.compose[f][e] != f) neutral = false;
    }
    if (neutral) identity[g.source[e]] = e;
  }
  for (std::size_t x = 0; x < g.objects; ++x) {
    if (!identity[x]) throw NotAGroupoid("object " + std::to_string(x) + " has no identity");
  }
  for (std::size_t f = 0; f < n; ++f) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) {
      found = g.compose[f][h] == identity[g.source[f]] && g.compose[h][f] == identity[g.target[f]];
    }
    if (!found) throw NotAGroupoid("arrow " + std::to_string(f) + " has no inverse");
  }
}

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, Field f) {
  validate_groupoid(g);
  const std::size_t n = g.source.size();
  Tensor mult(f, {n, n, n}), comult(f, {n, n, n});
  Vec unit = zero_vec(f, n), counit(n, f.one());
  Matrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comult.at({a, a, a}) = f.one();
    for (std::size_t b = 0; b < n; ++b) {
      if (auto ab = g.compose[a][b]) {
        mult.at({a, b, *ab}) = f.one();
        // In a groupoid the idempotent arrows are exactly the identities.
        if (*ab == a && a == b) unit[a] = f.one();
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = g.compose[a][b];
      auto ba = g.compose[b][a];
      if (ab && ba && unit[*ab].is_one() && unit[*ba].is_one()) {
        s.at(b, a) = f.one();
        break;
      }
    }
  }
  std::vector<std::string> names = g.names.empty() ? default_names("e", n) : g.names;
  auto wba = WeakBialgebra::make(Algebra(f, std::move(mult), std::move(unit), names),
                                 Coalgebra(f, std::move(comult), std::move(counit), names));
  return WeakHopfAlgebra::make(std::move(wba), std::move(s));
}

Groupoid cyclic_group(std::size_t n) {
  if (n == 0) throw NotAGroupoid("cyclic group of order zero");
  Groupoid g;
  g.objects = 1;
  g.source.assign(n, 0);
  g.target.assign(n, 0);
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.compose[a][b] = (a + b) % n;
    g.names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return g;
}

Groupoid pair_groupoid(std::size_t n) {
  Groupoid g;
  g.objects = n;
  const std::size_t m = n * n;
  g.compose.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.source.push_back(i);
      g.target.push_back(j);
      g.names.push_back(n < 10 ? "e" + std::to_string(i + 1) + std::to_string(j + 1)
                               : "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) g.compose[i * n + j][j * n + l] = i * n + l;
    }
  }
  return g;
}

Groupoid discrete_groupoid(std::size_t n) {
  Groupoid g;
  g.objects = n;
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g.source.push_back(i);
    g.target.push_back(i);
    g.compose[i][i] = i;
    g.names.push_back("e" + std::to_string(i + 1));
  }
  return g;
}

WeakHopfAlgebra g2(Field f) { return groupoid_algebra(cyclic_group(2), f); }
WeakHopfAlgebra g3(Field f) { return groupoid_algebra(discrete_groupoid(2), f); }
WeakHopfAlgebra g4(Field f) { return groupoid_algebra(pair_groupoid(2), f); }
WeakHopfAlgebra zn(std::size_t n, Field f) { return groupoid_algebra(cyclic_group(n), f); }
WeakHopfAlgebra pair(std::size_t n, Field f) { return groupoid_algebra(pair_groupoid(n), f); }

WeakHopfAlgebra gallery(const std::string& name, Field f) {
  if (name.rfind("dual:", 0) == 0) return dual(gallery(name.substr(5), f));
  if (name.rfind("opcop:", 0) == 0) return op_cop_variants(gallery(name.substr(6), f)).op_cop;
  if (name == "g2") return g2(f);
  if (name == "g3") return g3(f);
  if (name == "g4") return g4(f);
  static const std::regex family(R"((zn|pair)\((\d{1,3})\))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2].str());
    if (n == 0) throw ParseError("gallery family parameter must be positive");
    return m[1].str() == "zn" ? zn(n, f) : pair(n, f);
  }
  throw ParseError("unknown gallery name '" + name + "'");
}

std::size_t gallery_dim(const std::string& name) {
  if (name.rfind("dual:", 0) == 0) return gallery_dim(name.substr(5));
  if (name.rfind("opcop:", 0) == 0) return gallery_dim(name.substr(6));
  if (name == "g2" || name == "g3") return 2;
  if (name == "g4") return 4;
  static const std::regex family(R"((zn|pair)\((\d{1,3})\))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2].str());
    if (n == 0) throw ParseError("gallery family parameter must be positive");
    return m[1].str() == "zn" ? n : n * n;
  }
  throw ParseError("unknown gallery name '" + name + "'");
}

Example parse_example(const std::string& s) {
  if (s == "ex1" || s == "1") return Example::ex1;
  if (s == "ex2" || s == "2") return Example::ex2;
  if (s == "ex3" || s == "3") return Example::ex3;
  if (s == "ex4" || s == "4") return Example::ex4;
  throw ParseError("unknown example '" + s + "' (expected ex1..ex4)");
}

std::string to_string(Example e) { return "ex" + std::to_string(static_cast<int>(e)); }

LeftBaseCoalgebra left_base_coalgebra(const WeakHopfAlgebra& hopf) {
  const WeakBialgebra& h = hopf.wba();
  const Subspace& hl = h.hl();
  const std::size_t n = h.dim(), d = hl.dim();
  const Field f = h.field();
  const Matrix& s = hopf.antipode();
  const Vec& d1 = h.delta_one();
  Tensor comult(f, {d, d, d});
  Vec counit = zero_vec(f, d);
  bool agree = true;
  for (std::size_t i = 0; i < d; ++i) {
    Vec a = hl.basis_vector(i);
    counit[i] = h.counit(a);
    Vec first = zero_vec(f, n * n), second = zero_vec(f, n * n);
    for (std::size_t p = 0; p < d1.size(); ++p) {
      if (d1[p].is_zero()) continue;
      Vec one1 = h.basis(p / n), one2 = h.basis(p % n);
      Vec s1 = s.apply(one1);
      axpy(first, d1[p], kron(h.mul(one2, a), s1));
      axpy(second, d1[p], kron(one2, h.mul(a, s1)));
    }
    if (first != second) agree = false;
    Vec coords = restrict_tensor(first, {n, n}, {&hl, &hl});
    for (std::size_t jk = 0; jk < coords.size(); ++jk) comult.at({i, jk / d, jk % d}) = coords[jk];
  }
  return {Coalgebra(f, std::move(comult), std::move(counit), basis_names(hl, h.names(), "l")), agree};
}

Tensor left_base_action(const WeakBialgebra& h) {
  const Subspace& hl = h.hl();
  const std::size_t n = h.dim(), d = hl.dim();
  const Field f = h.field();
  const Vec& d1 = h.delta_one();
  Tensor act(f, {d, n, d});
  for (std::size_t i = 0; i < d; ++i) {
    Vec a = hl.basis_vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ah = h.mul(a, h.basis(j));
      Vec out = h.zero();
      for (std::size_t p = 0; p < d1.size(); ++p) {
        if (d1[p].is_zero()) continue;
        Scalar e = h.counit(h.mul(ah, h.basis(p / n)));
        if (!e.is_zero()) out[p % n].add_product(d1[p], e);
      }
      Vec coords = hl.coordinates(out);
      for (std::size_t k = 0; k < d; ++k) act.at({i, j, k}) = coords[k];
    }
  }
  return act;
}

namespace {

DatumPtr ex4_datum(const WhaPtr& k, Exec exec) {
  const WeakHopfAlgebra& K = *k;
  const std::size_t n = K.dim();
  const Field f = K.field();
  Variants v = op_cop_variants(K);
  auto hopf = std::make_shared<const WeakHopfAlgebra>(tensor_product(v.op, K));
  WbaPtr H = wba_of(hopf);
  const Matrix& sinv = K.antipode_inverse();
  const Matrix delta = K.wba().coalgebra().comult_map();

  // rho(a) = (S^-1(a_(3)) (x) a_(1)) (x) a_(2)
  Matrix rho = matrix_of(f, n * n * n, n, [&](std::size_t a) {
    Vec d3 = apply_factor(K.wba().comul(K.wba().basis(a)), {n, n}, 0, delta);
    Vec out = zero_vec(f, n * n * n);
    for (std::size_t t = 0; t < d3.size(); ++t) {
      if (d3[t].is_zero()) continue;
      const std::size_t x = t / (n * n), y = (t / n) % n, z = t % n;
      for (std::size_t p = 0; p < n; ++p) {
        if (sinv.at(p, z).is_zero()) continue;
        out[(p * n + x) * n + y].add_product(d3[t], sinv.at(p, z));
      }
    }
    return out;
  }, Exec::serial);

  // c.(a (x) b) = acb
  Tensor act(f, {n, n * n, n});
  const Algebra& ka = K.wba().algebra();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t a = 0; a < n; ++a) {
      Vec ac = ka.mul(ka.basis(a), ka.basis(c));
      for (std::size_t b = 0; b < n; ++b) {
        Vec acb = ka.mul(ac, ka.basis(b));
        for (std::size_t e = 0; e < n; ++e) act.at({c, a * n + b, e}) = acb[e];
      }
    }
  }
  return build_datum(Coaction(Side::left, H, ka, std::move(rho)),
                     Action(Side::right, H, K.wba().coalgebra(), std::move(act)), hopf, exec);
}

}  // namespace

DatumPtr example_datum(const WhaPtr& hopf, Example which, Exec exec) {
  if (which == Example::ex4) return ex4_datum(hopf, exec);
  WbaPtr H = wba_of(hopf);
  const WeakBialgebra& h = *H;
  Coaction delta(Side::left, H, h.algebra(), h.coalgebra().comult_map());
  switch (which) {
    case Example::ex1: {
      Action act(Side::right, H, left_base_coalgebra(*hopf).coalgebra, left_base_action(h));
      return build_datum(std::move(delta), std::move(act), hopf, exec);
    }
    case Example::ex2: {
      Action act(Side::right, H, h.coalgebra(), h.algebra().mult());
      return build_datum(restrict_coaction_to_subalgebra(delta, h.hl()), std::move(act), hopf, exec);
    }
    default: {
      Action act(Side::right, H, h.coalgebra(), h.algebra().mult());
      return build_datum(std::move(delta), std::move(act), hopf, exec);
    }
  }
}

}  // namespace whk
