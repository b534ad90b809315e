#pragma once

// Probe for a BV operator on cohomology induced by a cycle c of degree k:
// Theta_m : H^m -> H_{k-m}, [f] -> [i_f c]. When every Theta_m up to the
// degree bound is bijective, Delta = Theta^{-1} B Theta is built and the
// generating identity
//   [f,g] = -(-1)^m (Delta(f cup g) - Delta f cup g - (-1)^m f cup Delta g)
// is checked on cocycle representatives modulo coboundaries.
//
// Homology classes are taken modulo boundaries plus degenerate chains, so B
// acts through the normalized complex.

#include <optional>

#include "shc/calculus.hpp"

namespace shc {

struct BvDegree {
    int degree = 0;
    Index cohomology_dim = 0;
    /// dim H_{k-m}; zero when k - m < 0.
    Index homology_dim = 0;
    Index rank = 0;
    bool bijective = false;
    /// Delta : H^m -> H^{m-1} in representative coordinates, rows x cols
    /// (empty unless the probe is applicable).
    std::vector<std::vector<std::string>> delta;
};

struct BvReport {
    std::string triple;
    std::string field;
    int class_degree = 0;
    int max_degree = 0;
    /// B[c] = 0 in normalized homology.
    bool b_class_trivial = false;
    std::vector<BvDegree> degrees;
    bool applicable = false;
    std::optional<int> failing_degree;
    bool delta_zero = false;
    bool delta_squared_zero = false;
    std::uint64_t identity_checks = 0;
    std::uint64_t identity_failures = 0;
    std::vector<std::string> failures;
    std::string status;
};

/// 1_A as a chain of degree 0.
template <Field F>
ChainVector<F> unit_class(const Context<F>& ctx);

/// Throws PreconditionError when c is not a cycle.
template <Field F>
BvReport bv_probe(const Context<F>& ctx, const ChainVector<F>& c, int max_degree);

extern template ChainVector<Rationals> unit_class(const Context<Rationals>&);
extern template ChainVector<PrimeField> unit_class(const Context<PrimeField>&);
extern template BvReport bv_probe(const Context<Rationals>&, const ChainVector<Rationals>&, int);
extern template BvReport bv_probe(const Context<PrimeField>&, const ChainVector<PrimeField>&, int);

}  // namespace shc
