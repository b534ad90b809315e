#pragma once

// Identity suites. Chain-level identities are asserted as exact matrix
// equalities on basis inputs; homology-level identities are asserted modulo
// boundaries (plus degenerate chains) or coboundaries on stored representatives.
//
// Degree bounds: with max_degree D and M = min(max_cochain_degree, D),
//   differential  d^2 = 0 on C_p for p <= D; delta^2 = 0 from C^n for n <= D-1
//   operad        every cochain and every composite has degree <= D
//   compmodule, cyclic, descend, gradedmodule
//                 chain degree p <= D, cochain degrees <= M
//   simplicial    chain degree p <= D
//   precalculus, cartan, gerstenhaber
//                 (co)homology degrees <= D, results in degrees <= D
// Intermediate chains may reach degree D + 1; nothing goes beyond it.

#include <cstdint>
#include <string>
#include <vector>

#include "shc/calculus.hpp"

namespace shc {

struct SuiteBounds {
    int max_degree = 3;
    int max_cochain_degree = 2;
    std::uint64_t seed = 0;
};

struct Failure {
    std::string check;
    std::string inputs;
    std::string expected;
    std::string got;
};

struct SuiteResult {
    std::string suite;
    std::string triple;
    std::string field;
    SuiteBounds bounds;
    std::string mutation = "none";
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;
    /// First failures only; failure_count has the total.
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxReportedFailures = 20;

/// Every suite name, in dependency order.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

template <Field F>
SuiteResult verify(const Context<F>& ctx, const std::string& suite, const SuiteBounds& bounds);

/// Human-readable names of basis elements, used in reproducers.
template <Field F>
std::string describe_chain(const Context<F>& ctx, int p, Index idx);
template <Field F>
std::string describe_cochain(const Context<F>& ctx, int n, Index flat);

extern template SuiteResult verify(const Context<Rationals>&, const std::string&, const SuiteBounds&);
extern template SuiteResult verify(const Context<PrimeField>&, const std::string&, const SuiteBounds&);
extern template std::string describe_chain(const Context<Rationals>&, int, Index);
extern template std::string describe_chain(const Context<PrimeField>&, int, Index);
extern template std::string describe_cochain(const Context<Rationals>&, int, Index);
extern template std::string describe_cochain(const Context<PrimeField>&, int, Index);

}  // namespace shc
