#pragma once

// The chain side C_p: the boundary, the actions f .i x of the operad, the
// cyclic operator t, faces and degeneracies, the norm and Connes' operator, and
// the normalized quotient by degenerate chains.

#include "shc/operad.hpp"

namespace shc {

/// Boundary C_p -> C_{p-1}, built directly from the merge/wrap formula.
template <Field F>
std::shared_ptr<const SparseMat<F>> boundary_matrix(const Context<F>& ctx, int p);
template <Field F>
ChainVector<F> boundary(const Context<F>& ctx, const ChainVector<F>& x);

/// f .i : C_p -> C_{p-m+1}; the zero map when (m, i) is out of range for p.
template <Field F>
SparseMat<F> bullet_matrix(const Context<F>& ctx, const Cochain<F>& f, int i, int p);
template <Field F>
ChainVector<F> bullet(const Context<F>& ctx, const Cochain<F>& f, int i, const ChainVector<F>& x);

/// Rotation moving row p to row 0.
template <Field F>
std::shared_ptr<const SparseMat<F>> cyclic_t_matrix(const Context<F>& ctx, int p);
template <Field F>
ChainVector<F> cyclic_t(const Context<F>& ctx, const ChainVector<F>& x);

/// d_i = mu .i (i < p), d_p = mu .0 t.
template <Field F>
std::shared_ptr<const SparseMat<F>> face_matrix(const Context<F>& ctx, int i, int p);
/// s_j = e0 .{j+1} : C_p -> C_{p+1}, 0 <= j <= p.
template <Field F>
std::shared_ptr<const SparseMat<F>> degeneracy_matrix(const Context<F>& ctx, int j, int p);
/// s_{-1} = e0 .0
template <Field F>
std::shared_ptr<const SparseMat<F>> extra_degeneracy_matrix(const Context<F>& ctx, int p);
/// Alternating sum of the faces.
template <Field F>
std::shared_ptr<const SparseMat<F>> b_from_faces_matrix(const Context<F>& ctx, int p);
/// N = sum_i (-1)^{ip} t^i
template <Field F>
std::shared_ptr<const SparseMat<F>> norm_matrix(const Context<F>& ctx, int p);
/// sum_i (-1)^{ip} e0 .0 t^i : C_p -> C_{p+1}, Connes' operator on representatives.
template <Field F>
std::shared_ptr<const SparseMat<F>> connes_B_matrix(const Context<F>& ctx, int p);

template <Field F>
ChainVector<F> face(const Context<F>& ctx, int i, const ChainVector<F>& x);
template <Field F>
ChainVector<F> degeneracy(const Context<F>& ctx, int j, const ChainVector<F>& x);
template <Field F>
ChainVector<F> extra_degeneracy(const Context<F>& ctx, const ChainVector<F>& x);
template <Field F>
ChainVector<F> norm(const Context<F>& ctx, const ChainVector<F>& x);

/// C_p modulo the span D_p of all degeneracy images. The section consists of
/// the standard basis vectors on non-pivot coordinates of an echelon form of
/// D_p; projection is full reduction against that form.
template <Field F>
class NormalizedChains {
public:
    NormalizedChains(const Context<F>& ctx, int p);

    int degree() const { return degree_; }
    Index ambient_dim() const { return echelon_.ambient(); }
    Index dim() const { return static_cast<Index>(complement_.size()); }
    /// Ambient coordinate of the k-th section vector.
    Index section_row(Index k) const { return complement_[k]; }

    bool is_degenerate(const SparseVec<F>& v) const { return echelon_.contains(v); }
    /// Coordinates in the section basis of the class of v.
    SparseVec<F> project(const SparseVec<F>& v) const;
    /// Section representative of quotient coordinates.
    SparseVec<F> include(const SparseVec<F>& coords) const;
    SubspaceBasis<F> basis() const;
    const Echelon<F>& degenerate_span() const { return echelon_; }

private:
    int degree_;
    Echelon<F> echelon_;
    std::vector<Index> complement_;
    std::vector<Index> position_;
};

/// Matrix of m : C_p -> C_q between normalized quotients.
template <Field F>
SparseMat<F> normalized_operator(const SparseMat<F>& m, const NormalizedChains<F>& src,
                                 const NormalizedChains<F>& dst);

template <Field F>
SubspaceBasis<F> normalized_chain_basis(const Context<F>& ctx, int p);

/// Connes' operator on the normalized complex; returns the section representative.
template <Field F>
ChainVector<F> connes_B(const Context<F>& ctx, const ChainVector<F>& x);

#define SHC_CYCLIC_EXTERN(F)                                                                                     \
    extern template std::shared_ptr<const SparseMat<F>> boundary_matrix(const Context<F>&, int);                 \
    extern template ChainVector<F> boundary(const Context<F>&, const ChainVector<F>&);                           \
    extern template SparseMat<F> bullet_matrix(const Context<F>&, const Cochain<F>&, int, int);                  \
    extern template ChainVector<F> bullet(const Context<F>&, const Cochain<F>&, int, const ChainVector<F>&);     \
    extern template std::shared_ptr<const SparseMat<F>> cyclic_t_matrix(const Context<F>&, int);                 \
    extern template ChainVector<F> cyclic_t(const Context<F>&, const ChainVector<F>&);                           \
    extern template std::shared_ptr<const SparseMat<F>> face_matrix(const Context<F>&, int, int);                \
    extern template std::shared_ptr<const SparseMat<F>> degeneracy_matrix(const Context<F>&, int, int);          \
    extern template std::shared_ptr<const SparseMat<F>> extra_degeneracy_matrix(const Context<F>&, int);         \
    extern template std::shared_ptr<const SparseMat<F>> b_from_faces_matrix(const Context<F>&, int);             \
    extern template std::shared_ptr<const SparseMat<F>> norm_matrix(const Context<F>&, int);                     \
    extern template std::shared_ptr<const SparseMat<F>> connes_B_matrix(const Context<F>&, int);                 \
    extern template ChainVector<F> face(const Context<F>&, int, const ChainVector<F>&);                          \
    extern template ChainVector<F> degeneracy(const Context<F>&, int, const ChainVector<F>&);                    \
    extern template ChainVector<F> extra_degeneracy(const Context<F>&, const ChainVector<F>&);                   \
    extern template ChainVector<F> norm(const Context<F>&, const ChainVector<F>&);                               \
    extern template class NormalizedChains<F>;                                                                   \
    extern template SparseMat<F> normalized_operator(const SparseMat<F>&,                     \
                                                     const NormalizedChains<F>&, const NormalizedChains<F>&);    \
    extern template SubspaceBasis<F> normalized_chain_basis(const Context<F>&, int);                             \
    extern template ChainVector<F> connes_B(const Context<F>&, const ChainVector<F>&);

SHC_CYCLIC_EXTERN(Rationals)
SHC_CYCLIC_EXTERN(PrimeField)
#undef SHC_CYCLIC_EXTERN

}  // namespace shc
