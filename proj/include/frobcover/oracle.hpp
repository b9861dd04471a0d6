#pragma once

// Numeric cross-check of the symbolic identities: every identity is
// re-evaluated at random curve points over F_{p^2}, with products, powers and
// matrix algebra carried out on field values instead of polynomials.

#include <cstddef>
#include <cstdint>

#include "frobcover/check.hpp"
#include "frobcover/cover.hpp"
#include "frobcover/syzygy.hpp"

namespace frobcover {

struct OracleOptions {
  std::size_t points = 20;
  std::uint64_t seed = 0;
};

/// Catalog syzygies, kernel relations, the frame relations among s and s',
/// the square substitution and the coordinate swap sending psi to the image
/// of phi.
CheckResult syzygy_evaluation_oracle(const GeneratorCatalog& cat, const OracleOptions& options = {});

/// Frames, base change, determinants, cocycle, gluing, chart relations and
/// their compatibility, membership identities, det periodicity and the w = 0
/// specialisation, against random matrix values.
CheckResult cover_evaluation_oracle(const GeneratorCatalog& cat, const CoverData& data,
                                    const OracleOptions& options = {});

}  // namespace frobcover
