#include "whk/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "whk/gallery.hpp"

namespace whk {

namespace {

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + " (byte " +
         std::to_string(byte) + ")";
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from(Field f, const Json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long>());
  throw ParseError("scalars must be strings such as \"3\" or \"-1/2\"");
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Vec vec_from(Field f, const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(what + " must be an array of " + std::to_string(n) + " scalars");
  }
  Vec out;
  out.reserve(n);
  for (const auto& x : j) out.push_back(scalar_from(f, x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

Matrix matrix_from(Field f, const Json& j, std::size_t rows, std::size_t cols,
                   const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(what + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vec_from(f, j[r], cols, what + " row"));
  return m;
}

Json tensor_json(const Tensor& t) {
  const auto& shape = t.shape();
  std::function<Json(std::size_t, std::size_t)> build = [&](std::size_t axis, std::size_t offset) {
    Json out = Json::array();
    std::size_t stride = 1;
    for (std::size_t k = axis + 1; k < shape.size(); ++k) stride *= shape[k];
    for (std::size_t i = 0; i < shape[axis]; ++i) {
      if (axis + 1 == shape.size()) {
        out.push_back(scalar_json(t[offset + i]));
      } else {
        out.push_back(build(axis + 1, offset + i * stride));
      }
    }
    return out;
  };
  return build(0, 0);
}

Tensor tensor_from(Field f, const Json& j, const std::vector<std::size_t>& shape,
                   const std::string& what) {
  Vec entries;
  std::function<void(const Json&, std::size_t)> walk = [&](const Json& x, std::size_t axis) {
    if (!x.is_array() || x.size() != shape[axis]) {
      throw ParseError(what + " has the wrong shape at depth " + std::to_string(axis));
    }
    for (const auto& y : x) {
      if (axis + 1 == shape.size()) {
        entries.push_back(scalar_from(f, y));
      } else {
        walk(y, axis + 1);
      }
    }
  };
  walk(j, 0);
  return Tensor(f, shape, std::move(entries));
}

std::vector<std::string> names_from(const Json& j, std::size_t n) {
  auto it = j.find("basis");
  if (it == j.end()) return default_names("e", n);
  if (!it->is_array() || it->size() != n) {
    throw ParseError("basis must list " + std::to_string(n) + " names");
  }
  std::vector<std::string> out;
  for (const auto& x : *it) {
    if (!x.is_string()) throw ParseError("basis names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Side side_from(const Json& j) {
  const Json& s = member(j, "side");
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("side must be \"left\" or \"right\"");
}

ReadContext with_field(const ReadContext& ctx, Field f) {
  ReadContext c = ctx;
  c.field = f;
  return c;
}

Json gallery_json(const std::string& name, const ReadContext& ctx) {
  return to_json(gallery(name, ctx.field.value_or(Field::rationals())));
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + where(text, e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& p, const Json& j) {
  std::ofstream out(p);
  if (!out) throw ParseError("cannot write " + p.string());
  out << dump(j);
}

Json resolve(const Json& j, const ReadContext& ctx, ReadContext* inner) {
  if (inner) *inner = ctx;
  if (!j.is_string()) return j;
  const std::string ref = j.get<std::string>();
  if (ref.rfind("gallery:", 0) == 0) return gallery_json(ref.substr(8), ctx);
  std::filesystem::path p = ctx.dir / ref;
  Json out = read_json_file(p);
  if (inner) inner->dir = p.parent_path();
  return out;
}

Json to_json(Field f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.characteristic()}};
}

Field field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    const Json& p = member(j, "p");
    if (!p.is_number_integer() || p.get<long long>() < 2) throw ParseError("p must be an integer");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field kind must be \"rational\" or \"prime\"");
}

Field field_of(const Json& j, const ReadContext& ctx) {
  auto it = j.is_object() ? j.find("field") : j.end();
  if (j.is_object() && it != j.end()) {
    Field f = field_from_json(*it);
    if (ctx.field && *ctx.field != f) {
      throw ParseError("field " + f.name() + " disagrees with " + ctx.field->name());
    }
    return f;
  }
  if (ctx.field) return *ctx.field;
  throw ParseError("missing field 'field'");
}

Json to_json(const Algebra& a) {
  Json j;
  j["field"] = to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.names();
  j["unit"] = vec_json(a.unit());
  j["mult"] = tensor_json(a.mult());
  return j;
}

Json to_json(const Coalgebra& c) {
  Json j;
  j["field"] = to_json(c.field());
  j["dim"] = c.dim();
  j["basis"] = c.names();
  j["comult"] = tensor_json(c.comult());
  j["counit"] = vec_json(c.counit_vector());
  return j;
}

Json to_json(const WeakBialgebra& h) {
  Json j = to_json(h.algebra());
  j["comult"] = tensor_json(h.coalgebra().comult());
  j["counit"] = vec_json(h.coalgebra().counit_vector());
  return j;
}

Json to_json(const WeakHopfAlgebra& h) {
  Json j = to_json(h.wba());
  j["antipode"] = matrix_json(h.antipode());
  return j;
}

Json to_json(const Coaction& x) {
  Json j;
  j["field"] = to_json(x.A.field());
  j["side"] = to_string(x.side);
  j["H"] = to_json(*x.H);
  j["A"] = to_json(x.A);
  j["rho"] = matrix_json(x.rho);
  return j;
}

Json to_json(const Action& x) {
  Json j;
  j["field"] = to_json(x.C().field());
  j["side"] = to_string(x.side());
  j["H"] = to_json(*x.H());
  j["C"] = to_json(x.C());
  j["act"] = tensor_json(x.tensor());
  return j;
}

Json to_json(const Datum& d) {
  Json j;
  j["field"] = to_json(d.H->field());
  j["H"] = d.hopf ? to_json(*d.hopf) : to_json(*d.H);
  j["coaction"] = Json{{"side", to_string(d.coaction.side)},
                       {"A", to_json(d.A())},
                       {"rho", matrix_json(d.coaction.rho)}};
  j["action"] = Json{{"side", to_string(d.action.side())},
                     {"C", to_json(d.C())},
                     {"act", tensor_json(d.action.tensor())}};
  return j;
}

Json to_json(const DoiHopfModule& m) {
  Json j;
  j["field"] = to_json(m.field());
  j["datum"] = to_json(*m.datum());
  j["dim"] = m.dim();
  j["action"] = tensor_json(m.action());
  j["coaction"] = matrix_json(m.coaction());
  return j;
}

Json to_json(const YDModule& m) {
  Json j;
  j["field"] = to_json(m.H->field());
  j["H"] = to_json(*m.H);
  j["dim"] = m.dim;
  j["action"] = tensor_json(m.action);
  j["coaction"] = matrix_json(m.coaction);
  return j;
}

namespace {

std::vector<const CheckResult*> sorted_checks(const Report& r) {
  std::vector<const CheckResult*> out;
  for (const auto& c : r.checks()) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult* a, const CheckResult* b) { return a->id < b->id; });
  return out;
}

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["subject"] = r.subject();
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const CheckResult* c : sorted_checks(r)) {
    Json cj{{"id", c->id}, {"anchor", c->anchor}, {"pass", c->pass}};
    if (!c->detail.empty()) cj["detail"] = c->detail;
    if (c->witness) {
      cj["witness"] = Json{{"indices", c->witness->indices}, {"residual", vec_json(c->witness->residual)}};
    }
    cj["millis"] = c->millis;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes()) notes[k] = v;
  j["notes"] = std::move(notes);
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.subject() << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const CheckResult* c : sorted_checks(r)) {
    os << "  [" << (c->pass ? "pass" : "FAIL") << "] " << c->id;
    if (!c->anchor.empty()) os << "  (" << c->anchor << ")";
    if (!c->detail.empty()) os << "  " << c->detail;
    os << "\n";
    if (c->witness) {
      os << "      at (";
      for (std::size_t i = 0; i < c->witness->indices.size(); ++i) {
        os << (i ? ", " : "") << c->witness->indices[i];
      }
      os << ") residual " << to_string(c->witness->residual) << "\n";
    }
  }
  for (const auto& [k, v] : r.notes()) os << "  " << k << " = " << v << "\n";
  return os.str();
}

RawStructure raw_structure(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  const Field f = field_of(j, ctx);
  const std::size_t n = size_field(j, "dim");
  const auto names = names_from(j, n);
  RawStructure out{f, std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("mult") || j.contains("unit")) {
    out.algebra = Algebra(f, tensor_from(f, member(j, "mult"), {n, n, n}, "mult"),
                          vec_from(f, member(j, "unit"), n, "unit"), names);
  }
  if (j.contains("comult") || j.contains("counit")) {
    out.coalgebra = Coalgebra(f, tensor_from(f, member(j, "comult"), {n, n, n}, "comult"),
                              vec_from(f, member(j, "counit"), n, "counit"), names);
  }
  if (j.contains("antipode")) out.antipode = matrix_from(f, j["antipode"], n, n, "antipode");
  return out;
}

Algebra algebra_from_json(const Json& j, const ReadContext& ctx) {
  RawStructure r = raw_structure(j, ctx);
  if (!r.algebra) throw ParseError("expected an algebra (mult and unit)");
  return std::move(*r.algebra);
}

Coalgebra coalgebra_from_json(const Json& j, const ReadContext& ctx) {
  RawStructure r = raw_structure(j, ctx);
  if (!r.coalgebra) throw ParseError("expected a coalgebra (comult and counit)");
  return std::move(*r.coalgebra);
}

WeakBialgebra wba_from_json(const Json& j, const ReadContext& ctx) {
  RawStructure r = raw_structure(j, ctx);
  if (!r.algebra || !r.coalgebra) throw ParseError("expected mult, unit, comult and counit");
  return WeakBialgebra::make(std::move(*r.algebra), std::move(*r.coalgebra));
}

WeakHopfAlgebra wha_from_json(const Json& j, const ReadContext& ctx) {
  RawStructure r = raw_structure(j, ctx);
  if (!r.algebra || !r.coalgebra) throw ParseError("expected mult, unit, comult and counit");
  if (!r.antipode) throw ParseError("missing field 'antipode'");
  return WeakHopfAlgebra::make(WeakBialgebra::make(std::move(*r.algebra), std::move(*r.coalgebra)),
                               std::move(*r.antipode));
}

namespace {

// H of a component, with the antipode kept when present.
struct Host {
  WbaPtr wba;
  WhaPtr hopf;
};

Host host_from(const Json& j, const ReadContext& ctx) {
  RawStructure r = raw_structure(j, ctx);
  if (!r.algebra || !r.coalgebra) throw ParseError("H needs mult, unit, comult and counit");
  WeakBialgebra b = WeakBialgebra::make(std::move(*r.algebra), std::move(*r.coalgebra));
  if (r.antipode) {
    auto h = std::make_shared<const WeakHopfAlgebra>(WeakHopfAlgebra::make(std::move(b), *r.antipode));
    return Host{wba_of(h), h};
  }
  return Host{std::make_shared<const WeakBialgebra>(std::move(b)), nullptr};
}

Coaction coaction_with(const Json& j, const ReadContext& ctx, const WbaPtr& H) {
  Algebra a = algebra_from_json(member(j, "A"), ctx);
  Matrix rho = matrix_from(ctx.field.value(), member(j, "rho"), H->dim() * a.dim(), a.dim(), "rho");
  return Coaction(side_from(j), H, std::move(a), std::move(rho));
}

Action action_with(const Json& j, const ReadContext& ctx, const WbaPtr& H) {
  Coalgebra c = coalgebra_from_json(member(j, "C"), ctx);
  Tensor act = tensor_from(ctx.field.value(), member(j, "act"), {c.dim(), H->dim(), c.dim()}, "act");
  return Action(side_from(j), H, std::move(c), std::move(act));
}

}  // namespace

Coaction coaction_from_json(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  ctx = with_field(ctx, field_of(j, ctx));
  return coaction_with(j, ctx, host_from(member(j, "H"), ctx).wba);
}

Action action_from_json(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  ctx = with_field(ctx, field_of(j, ctx));
  return action_with(j, ctx, host_from(member(j, "H"), ctx).wba);
}

DatumPtr datum_from_json(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  ctx = with_field(ctx, field_of(j, ctx));
  Host h = host_from(member(j, "H"), ctx);
  ReadContext cx, ax;
  Json cj = resolve(member(j, "coaction"), ctx, &cx);
  Json aj = resolve(member(j, "action"), ctx, &ax);
  return build_datum(coaction_with(cj, cx, h.wba), action_with(aj, ax, h.wba), h.hopf);
}

DoiHopfModule module_from_json(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  ctx = with_field(ctx, field_of(j, ctx));
  DatumPtr d = datum_from_json(member(j, "datum"), ctx);
  const std::size_t n = size_field(j, "dim");
  const std::size_t na = d->A().dim(), nc = d->C().dim();
  const Field f = *ctx.field;
  Tensor act = tensor_from(f, member(j, "action"), {n, na, n}, "action");
  Matrix co = matrix_from(f, member(j, "coaction"), nc * n, n, "coaction");
  return DoiHopfModule(d, n, std::move(act), std::move(co));
}

YDModule yd_from_json(const Json& src, const ReadContext& ctx0) {
  ReadContext ctx;
  const Json j = resolve(src, ctx0, &ctx);
  ctx = with_field(ctx, field_of(j, ctx));
  Host h = host_from(member(j, "H"), ctx);
  const std::size_t n = size_field(j, "dim");
  const std::size_t nh = h.wba->dim();
  const Field f = *ctx.field;
  return YDModule{h.wba, n, tensor_from(f, member(j, "action"), {n, nh, n}, "action"),
                  matrix_from(f, member(j, "coaction"), nh * n, n, "coaction")};
}

}  // namespace whk
