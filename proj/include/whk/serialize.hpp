#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "whk/double.hpp"
#include "whk/doihopf.hpp"

namespace whk {

// Interchange format. Scalars are strings ("3", "-1/2"; residues over F_p),
// matrices are arrays of rows (rows index the codomain), tensors are nested
// arrays. A component may be given inline or as a string: "gallery:<name>" or
// a path relative to the file that mentions it.
using Json = nlohmann::ordered_json;

/// Throws ParseError naming line, column and byte offset.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& p);
void write_json_file(const std::filesystem::path& p, const Json& j);
std::string dump(const Json& j);

struct ReadContext {
  std::filesystem::path dir = ".";
  std::optional<Field> field;  ///< used when the object carries no field of its own
};

Json to_json(Field f);
Field field_from_json(const Json& j);
/// Field of an object, falling back on the context; ParseError when both are
/// present and disagree or neither is.
Field field_of(const Json& j, const ReadContext& ctx);

Json to_json(const Algebra& a);
Json to_json(const Coalgebra& c);
Json to_json(const WeakBialgebra& h);
Json to_json(const WeakHopfAlgebra& h);
Json to_json(const Coaction& x);
Json to_json(const Action& x);
Json to_json(const Datum& d);
Json to_json(const DoiHopfModule& m);
Json to_json(const YDModule& m);
/// Checks sorted by id, each with anchor, verdict, detail, timing and the
/// witness when there is one.
Json to_json(const Report& r);
std::string render_text(const Report& r);

/// Unvalidated structure constants of an algebra-like object. Missing parts
/// stay empty.
struct RawStructure {
  Field field;
  std::optional<Algebra> algebra;
  std::optional<Coalgebra> coalgebra;
  std::optional<Matrix> antipode;
};
RawStructure raw_structure(const Json& j, const ReadContext& ctx = {});

Algebra algebra_from_json(const Json& j, const ReadContext& ctx = {});
Coalgebra coalgebra_from_json(const Json& j, const ReadContext& ctx = {});
/// These validate and throw AxiomFailure.
WeakBialgebra wba_from_json(const Json& j, const ReadContext& ctx = {});
WeakHopfAlgebra wha_from_json(const Json& j, const ReadContext& ctx = {});
Coaction coaction_from_json(const Json& j, const ReadContext& ctx = {});
Action action_from_json(const Json& j, const ReadContext& ctx = {});
DatumPtr datum_from_json(const Json& j, const ReadContext& ctx = {});
DoiHopfModule module_from_json(const Json& j, const ReadContext& ctx = {});
YDModule yd_from_json(const Json& j, const ReadContext& ctx = {});

/// Follows a string reference; objects come back unchanged. The context of
/// the referenced file is written to `inner`.
Json resolve(const Json& j, const ReadContext& ctx, ReadContext* inner = nullptr);

}  // namespace whk
