#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "whk/linalg.hpp"
#include "whk/parallel.hpp"

// Index convention for tensor product spaces used throughout the library:
// V_0 (x) V_1 (x) ... (x) V_k is flattened with V_0 most significant, i.e. the
// coordinate of e_{i0} (x) ... (x) e_{ik} sits at ((i0 * d1 + i1) * d2 + ...).

namespace whk {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims& dims);

/// Applies f: V_j -> W on factor j of v in V_0 (x) ... (x) V_k; the result
/// lives in the same product with V_j replaced by W.
Vec apply_factor(const Vec& v, const Dims& dims, std::size_t j, const Matrix& f);

/// Moves factors around: output factor k is input factor perm[k].
Vec permute_factors(const Vec& v, const Dims& dims, const std::vector<std::size_t>& perm);

/// Matrix whose c-th column is image(c), assembled column by column.
Matrix matrix_of(Field f, std::size_t rows, std::size_t cols,
                 const std::function<Vec(std::size_t)>& image, Exec exec = Exec::parallel);

/// Concatenation of several vectors into one residual.
Vec concat(const std::vector<Vec>& parts);

}  // namespace whk
