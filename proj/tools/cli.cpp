#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>

#include "whk/adjoint.hpp"
#include "whk/double.hpp"
#include "whk/integrals.hpp"
#include "whk/serialize.hpp"
#include "whk/smash.hpp"
#include "whk/suite.hpp"

namespace whk {

namespace {

struct Options {
  std::string field = "rational";
  bool field_given = false;
  std::string out;
  std::string report = "text";
  std::size_t max_dim = 64;
  std::string datum;
  std::vector<std::string> bases;
  std::string in;
  int example = 0;
  std::string side = "right";
  std::string what;
  bool serial = false;
};

Field parse_field(const std::string& s) {
  if (s == "rational") return Field::rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return Field::prime(std::stoull(s.substr(3)));
    } catch (const std::exception& e) {
      throw ParseError("bad prime field '" + s + "': " + e.what());
    }
  }
  throw ParseError("--field must be rational or fp:<p>");
}

// Turns the options into objects, enforcing the dimension guardrail.
class Inputs {
 public:
  explicit Inputs(const Options& o) : o_(o), field_(parse_field(o.field)) {}

  Field field() const { return field_; }
  Exec exec() const { return o_.serial ? Exec::serial : Exec::parallel; }

  ReadContext context() const {
    ReadContext c;
    if (!o_.in.empty()) c.dir = std::filesystem::path(o_.in).parent_path();
    if (o_.field_given) c.field = field_;
    return c;
  }

  Json input_json() const {
    if (o_.in.empty()) throw ParseError("this command needs --in <file>");
    Json j = read_json_file(o_.in);
    guard_json(j);
    return j;
  }

  // --in when given, otherwise the first --base from the gallery.
  Json structure_json() const {
    if (!o_.in.empty()) return input_json();
    return to_json(*base(0));
  }

  std::size_t base_count() const { return o_.bases.size(); }

  WhaPtr base(std::size_t i) const {
    if (o_.bases.size() <= i) throw ParseError("this command needs --base <name>");
    guard(gallery_dim(o_.bases[i]), o_.bases[i]);
    auto h = std::make_shared<const WeakHopfAlgebra>(gallery(o_.bases[i], field_));
    return h;
  }

  Example example() const {
    if (o_.example >= 1 && o_.example <= 4) return static_cast<Example>(o_.example);
    if (!o_.datum.empty() && o_.datum.rfind("ex", 0) == 0) return parse_example(o_.datum);
    throw ParseError("this command needs --example 1..4 or --datum ex1..ex4");
  }

  DatumPtr datum() const {
    if (!o_.datum.empty() && o_.datum.rfind("ex", 0) != 0) {
      ReadContext c = context();
      c.dir = std::filesystem::path(o_.datum).parent_path();
      Json j = read_json_file(o_.datum);
      guard_json(j);
      return datum_from_json(j, c);
    }
    if (o_.datum.empty() && o_.example == 0 && !o_.in.empty()) return datum_from_json(input_json(), context());
    return example_datum(base(0), example(), exec());
  }

  void guard(std::size_t dim, const std::string& what) const {
    if (dim > o_.max_dim) {
      throw LimitExceeded(what + " has dimension " + std::to_string(dim) + " above --max-dim " +
                          std::to_string(o_.max_dim));
    }
  }

 private:
  void guard_json(const Json& j) const {
    if (j.is_object() && j.contains("dim") && j["dim"].is_number_unsigned()) {
      guard(j["dim"].get<std::size_t>(), o_.in.empty() ? "input" : o_.in);
    }
  }

  const Options& o_;
  Field field_;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), in_(o), out_(out), err_(err) {}

  int emit_report(const Report& r) {
    if (o_.report == "json") {
      const Json j = to_json(r);
      if (!o_.out.empty()) {
        write_json_file(o_.out, j);
      } else {
        out_ << dump(j);
      }
    } else {
      out_ << render_text(r);
      if (!o_.out.empty()) write_json_file(o_.out, to_json(r));
    }
    return r.passed() ? exit_ok : exit_check_failed;
  }

  int emit_object(const Json& j) {
    if (o_.out.empty()) {
      out_ << dump(j);
    } else {
      write_json_file(o_.out, j);
      out_ << "wrote " << o_.out;
      if (j.contains("dim")) out_ << " (dim " << j["dim"].dump() << ")";
      out_ << "\n";
    }
    return exit_ok;
  }

  int check(const std::string& what) {
    const Exec ex = in_.exec();
    if (what == "algebra") return emit_report(check_algebra(algebra_from_json(in_.structure_json(), in_.context()), ex));
    if (what == "coalgebra") {
      return emit_report(check_coalgebra(coalgebra_from_json(in_.structure_json(), in_.context()), ex));
    }
    if (what == "wba" || what == "wha") {
      RawStructure raw = raw_structure(in_.structure_json(), in_.context());
      if (!raw.algebra || !raw.coalgebra) throw ParseError("expected mult, unit, comult and counit");
      if (what == "wba") return emit_report(check_wba(*raw.algebra, *raw.coalgebra, ex));
      if (!raw.antipode) throw ParseError("missing field 'antipode'");
      try {
        return emit_report(check_wha(WeakBialgebra::make(*raw.algebra, *raw.coalgebra, ex), *raw.antipode, ex));
      } catch (const AxiomFailure& e) {
        return emit_report(e.report());
      }
    }
    if (what == "coaction") {
      Coaction x = coaction_from_json(in_.input_json(), in_.context());
      Report r = check_comodule_algebra(x, ex);
      r.merge("nondegenerate", check_nondegenerate(x, ex));
      return emit_report(r);
    }
    if (what == "action") {
      Action x = action_from_json(in_.input_json(), in_.context());
      Report r = check_module_coalgebra(x, ex);
      r.merge("nondegenerate", check_nondegenerate(x, ex));
      return emit_report(r);
    }
    if (what == "datum") {
      try {
        DatumPtr d = in_.datum();
        return emit_report(check_datum(d->coaction, d->action, ex));
      } catch (const AxiomFailure& e) {
        return emit_report(e.report());
      }
    }
    if (what == "module") return emit_report(check_module(module_from_json(in_.input_json(), in_.context()), ex));
    if (what == "yd") {
      if (o_.in.empty()) {
        WhaPtr h = in_.base(0);
        return emit_report(check_yd(yd_unit(wba_of(h)), h, ex));
      }
      return emit_report(check_yd(yd_from_json(in_.input_json(), in_.context()), nullptr, ex));
    }
    throw ParseError("unknown check target '" + what + "'");
  }

  int build(const std::string& what) {
    const Exec ex = in_.exec();
    if (what == "dual") {
      if (!o_.datum.empty()) return emit_object(to_json(*dual_datum(*in_.datum(), ex)));
      return emit_object(to_json(dual(wha_from_json(in_.structure_json(), in_.context()))));
    }
    if (what == "opcop") {
      return emit_object(to_json(op_cop_variants(wha_from_json(in_.structure_json(), in_.context())).op_cop));
    }
    if (what == "tensor") {
      if (in_.base_count() < 2) throw ParseError("build tensor needs two --base values");
      return emit_object(to_json(tensor_product(*in_.base(0), *in_.base(1))));
    }
    if (what == "smash") {
      SmashAlgebra s = build_smash(in_.datum(), ex);
      return emit_object(to_json(s.algebra));
    }
    if (what == "double") {
      DrinfeldDouble d = build_double(in_.base(0), ex);
      return emit_object(to_json(*d.wha));
    }
    if (what == "twisted-double") return emit_object(to_json(build_twisted_double(in_.base(0), ex).algebra));
    if (what == "induce") {
      DatumPtr d = in_.datum();
      AModule m = o_.in.empty() ? regular_amodule(*d)
                                : forget_coaction(module_from_json(in_.input_json(), in_.context()));
      return emit_object(to_json(induce_G(m, d).module));
    }
    if (what == "coinduce") {
      DatumPtr d = in_.datum();
      CComodule m = o_.in.empty() ? regular_ccomodule(*d)
                                  : forget_action(module_from_json(in_.input_json(), in_.context()));
      return emit_object(to_json(coinduce_Ghat(m, d).module));
    }
    throw ParseError("unknown build target '" + what + "'");
  }

  int integrals(const std::string& what) {
    const Exec ex = in_.exec();
    if (what == "space") {
      WhaPtr h = in_.base(0);
      const Side side = o_.side == "left" ? Side::left : Side::right;
      if (o_.side != "left" && o_.side != "right") throw ParseError("--side must be left or right");
      IntegralSpace s = integral_space(*h, side);
      Report r(to_string(side) + " integrals of " + o_.bases[0]);
      r.note("dim", std::to_string(s.space.dim()));
      for (std::size_t i = 0; i < s.space.dim(); ++i) {
        const Vec v = s.space.basis_vector(i);
        r.note("basis." + std::to_string(i), to_string(v));
        r.note("basis." + std::to_string(i) + ".nondegenerate",
               is_nondegenerate_integral(*h, v) ? "yes" : "no");
      }
      try {
        r.note("nondegenerate", to_string(nondegenerate_integral(*h, side)));
      } catch (const NoNondegenerateIntegral&) {
        r.note("nondegenerate", "none");
      }
      return emit_report(r);
    }
    if (what == "v4") return emit_report(compute_V4(in_.datum(), ex).report);
    if (what == "v0" || what == "normalized") {
      const Example e = in_.example();
      WhaPtr h = in_.base(0);
      DatumPtr d = example_datum(h, e, ex);
      V0Result v = v0_iso(d, e, h, pin_dual_convention(in_.field()), ex);
      if (what == "v0") {
        Report r = v.report;
        if (e == Example::ex2) r.merge("remark", example2_remark(v, h));
        return emit_report(r);
      }
      Report r("normalized integrals of " + to_string(e));
      for (const auto& c : v.report.checks()) {
        if (c.id.rfind("normalized.", 0) == 0) r.add(c);
      }
      for (const auto& [k, val] : v.report.notes()) {
        if (k.rfind("normalization.", 0) == 0) r.note(k, val);
      }
      return emit_report(r);
    }
    throw ParseError("unknown integrals target '" + what + "'");
  }

  int gallery_cmd(const std::string& name) {
    in_.guard(gallery_dim(name), name);
    return emit_object(to_json(gallery(name, in_.field())));
  }

  int suite(const std::string& name) {
    SuiteOptions so;
    if (!o_.bases.empty()) so.bases = o_.bases;
    for (const auto& b : so.bases) in_.guard(gallery_dim(b), b);
    so.field = in_.field();
    so.exec = in_.exec();
    return emit_report(run_suite(name, so));
  }

 private:
  const Options& o_;
  Inputs in_;
  std::ostream& out_;
  std::ostream& err_;
};

int classify(const std::exception& e, std::ostream& err) {
  err << "whk: " << e.what() << "\n";
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const LimitExceeded*>(&e) ||
      dynamic_cast<const DimMismatch*>(&e) || dynamic_cast<const ShapeMismatch*>(&e) ||
      dynamic_cast<const FieldMismatch*>(&e) || dynamic_cast<const DatumMismatch*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e)) {
    return exit_input_error;
  }
  return exit_check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact weak Hopf algebra and weak Doi-Hopf toolkit", "whk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", o.field, "rational or fp:<p>")->each([&](const std::string&) { o.field_given = true; });
  app.add_option("--out", o.out, "write the object or JSON report here");
  app.add_option("--report", o.report, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-dim", o.max_dim, "largest accepted base dimension");
  app.add_option("--datum", o.datum, "ex1..ex4 (with --base) or a datum file");
  app.add_option("--base", o.bases, "gallery name, repeatable");
  app.add_option("--in", o.in, "input JSON file");
  app.add_option("--example", o.example, "example number 1..4");
  app.add_option("--side", o.side, "left or right");
  app.add_flag("--serial", o.serial, "run every loop serially");

  auto* check = app.add_subcommand("check", "validate a structure");
  check->add_option("what", o.what)->required()->check(CLI::IsMember(
      {"algebra", "coalgebra", "wba", "wha", "coaction", "action", "datum", "module", "yd"}));
  auto* build = app.add_subcommand("build", "construct a derived structure");
  build->add_option("what", o.what)->required()->check(CLI::IsMember(
      {"dual", "opcop", "tensor", "smash", "double", "twisted-double", "induce", "coinduce"}));
  auto* integ = app.add_subcommand("integrals", "integral spaces");
  integ->add_option("what", o.what)->required()->check(CLI::IsMember({"space", "v4", "v0", "normalized"}));
  auto* gal = app.add_subcommand("gallery", "print a gallery weak Hopf algebra");
  gal->add_option("name", o.what)->required();
  auto* suite = app.add_subcommand("suite", "run a check suite");
  suite->add_option("name", o.what)->required()->check(CLI::IsMember(suite_names()));

  std::vector<std::string> argv_store{"whk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "whk: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    Runner run(o, out, err);
    if (*check) return run.check(o.what);
    if (*build) return run.build(o.what);
    if (*integ) return run.integrals(o.what);
    if (*gal) return run.gallery_cmd(o.what);
    return run.suite(o.what);
  } catch (const AxiomFailure& e) {
    err << "whk: " << e.what() << "\n";
    return exit_check_failed;
  } catch (const std::exception& e) {
    return classify(e, err);
  }
}

}  // namespace whk
