#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "whk/doihopf.hpp"

namespace whk {

/// A finite groupoid given by its arrows. compose[f][g] is the index of the
/// composite "f then g" when target(f) = source(g), and nullopt otherwise.
struct Groupoid {
  std::size_t objects = 0;
  std::vector<std::size_t> source, target;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::string> names;
};

/// Throws NotAGroupoid naming the first violated law.
void validate_groupoid(const Groupoid& g);

/// Groupoid algebra: e_f e_g = e_{fg} when composable, Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^-1.
WeakHopfAlgebra groupoid_algebra(const Groupoid& g, Field f);

Groupoid cyclic_group(std::size_t n);
Groupoid pair_groupoid(std::size_t n);
Groupoid discrete_groupoid(std::size_t n);

WeakHopfAlgebra g2(Field f);
WeakHopfAlgebra g3(Field f);
WeakHopfAlgebra g4(Field f);
WeakHopfAlgebra zn(std::size_t n, Field f);
WeakHopfAlgebra pair(std::size_t n, Field f);

/// Resolves g2, g3, g4, zn(n), pair(n), optionally behind dual: or opcop:
/// prefixes (which may repeat). Throws ParseError for unknown names.
WeakHopfAlgebra gallery(const std::string& name, Field f);

/// Dimension of a gallery name without building it. Throws ParseError.
std::size_t gallery_dim(const std::string& name);

enum class Example { ex1 = 1, ex2, ex3, ex4 };

Example parse_example(const std::string& s);
std::string to_string(Example e);

/// The four right weak Doi-Hopf data built on a WHA. For ex4 the argument is
/// K and the datum lives over K^op (x) K.
DatumPtr example_datum(const WhaPtr& h, Example which, Exec exec = Exec::parallel);

/// The coalgebra on H^L with Delta(a) = 1_(2) a (x) S(1_(1)), computed in
/// both displayed forms; the second is 1_(2) (x) a S(1_(1)).
struct LeftBaseCoalgebra {
  Coalgebra coalgebra;
  bool forms_agree;
};
LeftBaseCoalgebra left_base_coalgebra(const WeakHopfAlgebra& h);

/// a^L . h = 1_(2) eps(a^L h 1_(1)) on H^L coordinates.
Tensor left_base_action(const WeakBialgebra& h);

}  // namespace whk
