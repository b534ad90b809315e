#pragma once

// Finite-dimensional triples (A, B, eps): an associative algebra A, a
// commutative algebra B and a unital algebra map eps : B -> Z(A), all given by
// structure constants in fixed ordered bases.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shc/field.hpp"
#include "shc/linalg.hpp"

namespace shc {

struct FieldConfig {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint32_t prime = 101;

    static FieldConfig rationals() { return {}; }
    static FieldConfig prime_field(std::uint32_t p) { return {Kind::Prime, p}; }

    std::string name() const;
    bool operator==(const FieldConfig&) const = default;
};

/// Structure constants: e_i * e_j = sum_k mult[i][j][k] e_k.
struct AlgebraSpec {
    int dim = 0;
    std::vector<mpq_class> unit;
    std::vector<std::vector<std::vector<mpq_class>>> mult;

    bool operator==(const AlgebraSpec&) const = default;
};

struct TripleSpec {
    std::string name;
    FieldConfig field;
    AlgebraSpec A;
    AlgebraSpec B;
    /// eps[i][j]: coefficient of e_i (A basis) in eps(e_j) (B basis).
    std::vector<std::vector<mpq_class>> eps;

    bool operator==(const TripleSpec& o) const
    {
        return field == o.field && A == o.A && B == o.B && eps == o.eps;
    }
};

/// Bilinear product in the algebra over Q.
std::vector<mpq_class> multiply(const AlgebraSpec& alg, const std::vector<mpq_class>& x,
                                const std::vector<mpq_class>& y);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    /// First counterexample, as basis indices (empty when passed).
    std::vector<int> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const;
    std::vector<ValidationCheck> failures() const;
};

/// Exhaustive axiom checks over basis tuples, in the triple's field.
ValidationReport validate(const TripleSpec& t);

/// Parse the JSON triple format. Does not validate the algebra axioms.
TripleSpec load_json(std::string_view text);
std::string to_json(const TripleSpec& t);

/// T_triv, T_dual, T_full, T_u2, T_z2 over the given field.
TripleSpec builtin(std::string_view name, FieldConfig field = FieldConfig::rationals());
std::vector<std::string> builtin_names();

/// Structure constants converted into a concrete field.
template <Field F>
struct TypedAlgebra {
    int dim = 0;
    SparseVec<F> unit;
    /// table[i * dim + j] = e_i * e_j
    std::vector<SparseVec<F>> table;

    const SparseVec<F>& product(int i, int j) const { return table[static_cast<std::size_t>(i) * dim + j]; }

    SparseVec<F> multiply(const F& f, const SparseVec<F>& x, const SparseVec<F>& y) const
    {
        VecBuilder<F> out;
        for (const auto& a : x.entries)
            for (const auto& b : y.entries)
                out.add_scaled(f, product(static_cast<int>(a.index), static_cast<int>(b.index)),
                               f.mul(a.value, b.value));
        return out.finish(f);
    }
};

template <Field F>
struct TypedTriple {
    F field;
    TypedAlgebra<F> A;
    TypedAlgebra<F> B;
    /// eps_images[j] = eps(e_j) as an A-vector.
    std::vector<SparseVec<F>> eps_images;

    SparseVec<F> eps(const SparseVec<F>& b) const
    {
        VecBuilder<F> out;
        for (const auto& e : b.entries)
            out.add_scaled(field, eps_images[e.index], e.value);
        return out.finish(field);
    }
};

template <Field F>
TypedTriple<F> make_typed(const TripleSpec& t, F field);

extern template TypedTriple<Rationals> make_typed(const TripleSpec&, Rationals);
extern template TypedTriple<PrimeField> make_typed(const TripleSpec&, PrimeField);

}  // namespace shc
