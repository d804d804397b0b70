// Serial versus parallel timings of the data-parallel kernels: tensor
// contraction, axiom sweeps, and the V4 system assembly.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "whk/integrals.hpp"

using namespace whk;

namespace {

double seconds(const std::function<void()>& body, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, const std::function<void(Exec)>& body, int reps) {
  const double s = seconds([&] { body(Exec::serial); }, reps);
  const double p = seconds([&] { body(Exec::parallel); }, reps);
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(12) << s << std::setw(12) << p << std::setw(10) << std::setprecision(2)
            << (p > 0 ? s / p : 0.0) << "\n";
}

Tensor random_tensor(Field f, std::vector<std::size_t> shape, std::mt19937& rng) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  std::uniform_int_distribution<long> v(-5, 5);
  Vec e(n, f.zero());
  for (auto& x : e) x = f.from_int(v(rng));
  return Tensor(f, std::move(shape), std::move(e));
}

}  // namespace

int main() {
  const Field q = Field::rationals();
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial s"
            << std::setw(12) << "parallel s" << std::setw(10) << "speedup" << "\n";

  std::mt19937 rng(5);
  const Tensor a = random_tensor(q, {12, 12, 12}, rng);
  const Tensor b = random_tensor(q, {12, 12, 12}, rng);
  row("contract 12^3 x 12^3 over 2 axes", [&](Exec e) { contract(a, b, {{1, 0}, {2, 1}}, e); }, 3);

  const WeakHopfAlgebra p3 = pair(3, q);
  row("check_wha pair(3)", [&](Exec e) { check_wha(p3.wba(), p3.antipode(), e); }, 3);
  const WeakHopfAlgebra z5 = zn(5, q);
  row("check_wha zn(5)", [&](Exec e) { check_wha(z5.wba(), z5.antipode(), e); }, 3);

  auto g4 = std::make_shared<const WeakHopfAlgebra>(gallery("g4", q));
  DatumPtr d3 = example_datum(g4, Example::ex3, Exec::serial);
  row("compute_V4 ex3 over g4", [&](Exec e) { compute_V4(d3, e); }, 3);
  auto p = std::make_shared<const WeakHopfAlgebra>(pair(3, q));
  DatumPtr d1 = example_datum(p, Example::ex1, Exec::serial);
  row("compute_V4 ex1 over pair(3)", [&](Exec e) { compute_V4(d1, e); }, 1);
  return 0;
}
