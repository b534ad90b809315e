#pragma once

// Comparison with the classical Hochschild complexes of A when dim B = 1.
// The classical operators are built here from the multiplication table of A
// alone. Under the basis bijection a_0 (x) ... (x) a_p <-> (a, 1_B, ..., 1_B)
// the secondary boundary, cyclic operator, Connes' operator and coboundary must
// agree with them exactly.

#include "shc/verify.hpp"

namespace shc {

/// Throws PreconditionError unless dim B = 1.
template <Field F>
SuiteResult classical_compare(const Context<F>& ctx, int max_degree);

extern template SuiteResult classical_compare(const Context<Rationals>&, int);
extern template SuiteResult classical_compare(const Context<PrimeField>&, int);

}  // namespace shc
