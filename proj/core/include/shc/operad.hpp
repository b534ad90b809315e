#pragma once

// The multiplicative non-symmetric operad O^n = C^n((A,B,eps);A): partial
// compositions, circle product, bracket, cup product, the coboundary and the
// cosimplicial structure.
//
// A cochain of degree n is flattened to coordinates col * dim A + row, where
// col runs over the degree-n input basis.

#include "shc/complexes.hpp"

namespace shc {

template <Field F>
struct OperadElems {
    Cochain<F> mu;   ///< a_1 (x) b (x) a_2 -> eps(b) a_1 a_2
    Cochain<F> one;  ///< identity of A
    Cochain<F> e0;   ///< the element 1_A
};

template <Field F>
Cochain<F> mu(const Context<F>& ctx);
template <Field F>
Cochain<F> one(const Context<F>& ctx);
template <Field F>
Cochain<F> e0(const Context<F>& ctx);
template <Field F>
OperadElems<F> operad_elems(const Context<F>& ctx);

/// Identity of the degree-n input space, used as an outer cochain whose
/// target is the input space itself: comp(universal, i, g) is the matrix M
/// with comp(f, i, g) = f * M for every f.
template <Field F>
Cochain<F> universal_cochain(const Context<F>& ctx, int n);

template <Field F>
Cochain<F> add(const F& f, const Cochain<F>& x, const Cochain<F>& y);
template <Field F>
Cochain<F> sub(const F& f, const Cochain<F>& x, const Cochain<F>& y);
template <Field F>
Cochain<F> scale(const F& f, const typename F::Elem& c, const Cochain<F>& x);
template <Field F>
bool operator==(const Cochain<F>& x, const Cochain<F>& y)
{
    return x.degree == y.degree && x.values == y.values;
}

/// f o_i g for 1 <= i <= n; zero when n = 0 or i > n.
template <Field F>
Cochain<F> comp(const Context<F>& ctx, const Cochain<F>& f, int i, const Cochain<F>& g);

/// sum_i (-1)^{(i-1)(m-1)} f o_i g
template <Field F>
Cochain<F> circle(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g);

/// f o g - (-1)^{(n-1)(m-1)} g o f
template <Field F>
Cochain<F> bracket(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g);

/// (mu o_2 f) o_1 g
template <Field F>
Cochain<F> cup(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g);

/// Closed form of the cup product: eps(prod of the cross-block b) g(first block) f(second block).
template <Field F>
Cochain<F> explicit_cup(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g);

/// Coboundary C^n -> C^{n+1} on flattened coordinates.
template <Field F>
std::shared_ptr<const SparseMat<F>> delta_eps_matrix(const Context<F>& ctx, int n);

template <Field F>
Cochain<F> delta_eps(const Context<F>& ctx, const Cochain<F>& f);

/// [mu, f]
template <Field F>
Cochain<F> delta_mu(const Context<F>& ctx, const Cochain<F>& f);

/// d^0 f = mu o_2 f, d^i f = f o_i mu (1 <= i <= p), d^{p+1} f = mu o_1 f.
template <Field F>
Cochain<F> coface(const Context<F>& ctx, int i, const Cochain<F>& f);

/// s^j f = f o_{j+1} e0 for 0 <= j <= p-1.
template <Field F>
Cochain<F> codegeneracy(const Context<F>& ctx, int j, const Cochain<F>& f);

/// s^j : C^n -> C^{n-1} on flattened coordinates.
template <Field F>
std::shared_ptr<const SparseMat<F>> codegeneracy_matrix(const Context<F>& ctx, int j, int n);

/// Flattened matrix of f -> f * m for a map m between input spaces.
template <Field F>
SparseMat<F> right_action_matrix(const Context<F>& ctx, const SparseMat<F>& m);

/// Joint kernel of s^0..s^{n-1} inside C^n (all of C^0 for n = 0).
template <Field F>
SubspaceBasis<F> conormalized_basis(const Context<F>& ctx, int n);

#define SHC_OPERAD_EXTERN(F)                                                                                \
    extern template Cochain<F> mu(const Context<F>&);                                                       \
    extern template Cochain<F> one(const Context<F>&);                                                      \
    extern template Cochain<F> e0(const Context<F>&);                                                       \
    extern template OperadElems<F> operad_elems(const Context<F>&);                                         \
    extern template Cochain<F> universal_cochain(const Context<F>&, int);                                   \
    extern template Cochain<F> add(const F&, const Cochain<F>&, const Cochain<F>&);                         \
    extern template Cochain<F> sub(const F&, const Cochain<F>&, const Cochain<F>&);                         \
    extern template Cochain<F> scale(const F&, const typename F::Elem&, const Cochain<F>&);                 \
    extern template Cochain<F> comp(const Context<F>&, const Cochain<F>&, int, const Cochain<F>&);          \
    extern template Cochain<F> circle(const Context<F>&, const Cochain<F>&, const Cochain<F>&);             \
    extern template Cochain<F> bracket(const Context<F>&, const Cochain<F>&, const Cochain<F>&);            \
    extern template Cochain<F> cup(const Context<F>&, const Cochain<F>&, const Cochain<F>&);                \
    extern template Cochain<F> explicit_cup(const Context<F>&, const Cochain<F>&, const Cochain<F>&);       \
    extern template std::shared_ptr<const SparseMat<F>> delta_eps_matrix(const Context<F>&, int);           \
    extern template Cochain<F> delta_eps(const Context<F>&, const Cochain<F>&);                             \
    extern template Cochain<F> delta_mu(const Context<F>&, const Cochain<F>&);                              \
    extern template Cochain<F> coface(const Context<F>&, int, const Cochain<F>&);                           \
    extern template Cochain<F> codegeneracy(const Context<F>&, int, const Cochain<F>&);                     \
    extern template std::shared_ptr<const SparseMat<F>> codegeneracy_matrix(const Context<F>&, int, int);   \
    extern template SparseMat<F> right_action_matrix(const Context<F>&, const SparseMat<F>&);               \
    extern template SubspaceBasis<F> conormalized_basis(const Context<F>&, int);

SHC_OPERAD_EXTERN(Rationals)
SHC_OPERAD_EXTERN(PrimeField)
#undef SHC_OPERAD_EXTERN

}  // namespace shc
