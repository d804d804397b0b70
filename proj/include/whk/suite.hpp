#pragma once

#include <string>
#include <vector>

#include "whk/gallery.hpp"
#include "whk/report.hpp"

namespace whk {

/// Instances are gallery names; every suite records thrown errors as failed
/// checks instead of propagating them.
struct SuiteOptions {
  std::vector<std::string> bases = {"g2", "g3"};
  Field field = Field::rationals();
  Exec exec = Exec::parallel;
};

/// check_wha on each base, and one perturbed structure constant at a time
/// (product, coproduct, counit, antipode) must fail with a witness.
Report suite_structures(const SuiteOptions& o);
/// The four example data validate as non-degenerate right data.
Report suite_data(const SuiteOptions& o);
/// dual_datum twice is the identity; non-degeneracy is transported.
Report suite_duality(const SuiteOptions& o);
/// Smash algebra laws and the comparison maps of all four examples.
Report suite_smash(const SuiteOptions& o);
/// P' P = id and P P' = id on the regular module and its cyclic submodules
/// (examples 1..3).
Report suite_categories(const SuiteOptions& o);
/// The induction identities and both adjunctions on the harvested modules.
Report suite_adjunction(const SuiteOptions& o);
/// The Drinfeld double: well-definedness and the WHA axioms.
Report suite_double(const SuiteOptions& o);
/// Yetter-Drinfeld unit, tensor products, unitors and the dictionary with
/// modules over the double.
Report suite_yd(const SuiteOptions& o);
/// V4 and the example isomorphisms f. Example 4 is reported as notes only.
Report suite_integrals(const SuiteOptions& o);
/// Randomized field axioms, rank-nullity, quotient contracts and tensor
/// contraction against the naive loop.
Report suite_kernel(Field f, unsigned seed = 7, std::size_t field_cases = 1000,
                    Exec exec = Exec::parallel);

/// all | structures | data | duality | smash | categories | adjunction |
/// double | integrals | kernel. Throws ParseError on an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& o);
std::vector<std::string> suite_names();

struct Criterion {
  int number;
  std::string title;
  Report report;
  double seconds = 0.0;
};

/// The acceptance criteria 1..10 on their fixed instances.
Criterion run_criterion(int number, Exec exec = Exec::parallel);
constexpr int criterion_count = 10;

}  // namespace whk
