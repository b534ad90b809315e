#pragma once

// Cap product and Lie derivative of cochains on chains, secondary Hochschild
// homology and cohomology with deterministic representatives, and boundary /
// cocycle tests.

#include <optional>

#include "shc/cyclic_module.hpp"

namespace shc {

/// i_f = (mu o_2 f) .0 : C_p -> C_{p-m}; zero when m > p.
template <Field F>
SparseMat<F> cap_matrix(const Context<F>& ctx, const Cochain<F>& f, int p);
template <Field F>
ChainVector<F> cap(const Context<F>& ctx, const Cochain<F>& f, const ChainVector<F>& x);

/// L_f : C_p -> C_{p-m+1}. For m <= p:
///   sum_{i=1}^{p-m+1} (-1)^{(m-1)(i-1)} f .i x + sum_{i=1}^{m} (-1)^{p(i-1)+m-1} f .0 t^{i-1} x,
/// for m = p+1: (-1)^{m-1} f .0 N(x), and zero for m > p+1.
template <Field F>
SparseMat<F> lie_matrix(const Context<F>& ctx, const Cochain<F>& f, int p);
template <Field F>
ChainVector<F> lie(const Context<F>& ctx, const Cochain<F>& f, const ChainVector<F>& x);

template <Field F>
struct DegreeHomology {
    int degree = 0;
    Index dim = 0;
    /// Rank of the differential leaving this degree.
    Index rank_out = 0;
    Index kernel_dim = 0;
    /// Rank of the differential arriving in this degree.
    Index rank_in = 0;
    Index betti = 0;
    /// Cycle (cocycle) representatives of a basis of the (co)homology, in
    /// ambient coordinates (flattened cochains on the cochain side).
    std::vector<SparseVec<F>> representatives;
};

template <Field F>
struct HomologyReport {
    std::string triple;
    std::string field;
    bool cohomology = false;
    std::vector<DegreeHomology<F>> degrees;

    std::vector<Index> betti() const
    {
        std::vector<Index> b;
        for (const auto& d : degrees)
            b.push_back(d.betti);
        return b;
    }
};

template <Field F>
HomologyReport<F> homology(const Context<F>& ctx, int max_p);
template <Field F>
HomologyReport<F> cohomology(const Context<F>& ctx, int max_n);

/// Cohomology of the conormalized subcomplex: cocycle representatives vanish
/// whenever an argument is 1_A.
template <Field F>
HomologyReport<F> conormalized_cohomology(const Context<F>& ctx, int max_n);

/// Coordinates of classes against fixed representatives, modulo a span of
/// trivial elements (boundaries, possibly plus degenerate chains).
template <Field F>
class ClassCoordinates {
public:
    ClassCoordinates(F field, Index ambient) : echelon_(std::move(field), ambient) {}

    void add_trivial(const SparseVec<F>& v) { echelon_.insert(v); }
    /// Representatives must be added after every trivial generator.
    void add_representative(const SparseVec<F>& v)
    {
        if (!echelon_.insert_tracked(v, reps_))
            throw DomainError("representative is trivial or dependent");
        ++reps_;
    }

    Index representatives() const { return reps_; }
    bool is_trivial(const SparseVec<F>& v) const
    {
        auto c = coordinates(v);
        return c && c->empty();
    }
    /// nullopt when v is outside span(trivial) + span(representatives).
    std::optional<SparseVec<F>> coordinates(const SparseVec<F>& v) const
    {
        auto [rem, comb] = echelon_.reduce_tracked(v);
        if (!rem.empty())
            return std::nullopt;
        return comb;
    }

private:
    Echelon<F> echelon_;
    Index reps_ = 0;
};

/// Span of im(boundary from degree q+1), optionally plus the degenerate chains of C_q.
template <Field F>
Echelon<F> boundary_span(const Context<F>& ctx, int q, bool with_degenerate);
/// im(delta_eps from degree n-1) inside C^n.
template <Field F>
Echelon<F> coboundary_span(const Context<F>& ctx, int n);

template <Field F>
bool is_boundary(const Context<F>& ctx, const ChainVector<F>& x);
template <Field F>
bool is_cocycle(const Context<F>& ctx, const Cochain<F>& f);
/// First input basis column where delta_eps(f) is nonzero.
template <Field F>
std::optional<Index> cocycle_witness(const Context<F>& ctx, const Cochain<F>& f);

#define SHC_CALCULUS_EXTERN(F)                                                                       \
    extern template SparseMat<F> cap_matrix(const Context<F>&, const Cochain<F>&, int);              \
    extern template ChainVector<F> cap(const Context<F>&, const Cochain<F>&, const ChainVector<F>&); \
    extern template SparseMat<F> lie_matrix(const Context<F>&, const Cochain<F>&, int);              \
    extern template ChainVector<F> lie(const Context<F>&, const Cochain<F>&, const ChainVector<F>&); \
    extern template HomologyReport<F> homology(const Context<F>&, int);                              \
    extern template HomologyReport<F> cohomology(const Context<F>&, int);                            \
    extern template HomologyReport<F> conormalized_cohomology(const Context<F>&, int);               \
    extern template Echelon<F> boundary_span(const Context<F>&, int, bool);                          \
    extern template Echelon<F> coboundary_span(const Context<F>&, int);                              \
    extern template bool is_boundary(const Context<F>&, const ChainVector<F>&);                      \
    extern template bool is_cocycle(const Context<F>&, const Cochain<F>&);                           \
    extern template std::optional<Index> cocycle_witness(const Context<F>&, const Cochain<F>&);

SHC_CALCULUS_EXTERN(Rationals)
SHC_CALCULUS_EXTERN(PrimeField)
#undef SHC_CALCULUS_EXTERN

}  // namespace shc
