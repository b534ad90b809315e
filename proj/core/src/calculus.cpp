#include "shc/calculus.hpp"

namespace shc {

namespace {

template <Field F>
typename F::Elem sign(const F& f, long exponent)
{
    return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

template <Field F>
Index dim_or_zero(const Context<F>& ctx, int p)
{
    return p < 0 ? 0 : ctx.chain_dim(p);
}

/// Kernel, image rank and representatives for one degree.
template <Field F>
DegreeHomology<F> degree_homology(const F& field, int degree, Index dim, const SparseMat<F>& out,
                                  const SparseMat<F>* in, const SubspaceBasis<F>* restrict_to)
{
    DegreeHomology<F> d;
    d.degree = degree;
    d.dim = restrict_to ? static_cast<Index>(restrict_to->dim()) : dim;

    // Kernel of `out`, restricted to span(restrict_to) when given.
    std::vector<SparseVec<F>> kernel;
    if (restrict_to) {
        SparseMat<F> image(out.rows(), static_cast<Index>(restrict_to->dim()));
        for (Index k = 0; k < restrict_to->dim(); ++k)
            image.set_col(k, apply(field, out, restrict_to->vectors[k]));
        for (const auto& c : nullspace_basis(field, image).vectors) {
            VecBuilder<F> v;
            for (const auto& e : c.entries)
                v.add_scaled(field, restrict_to->vectors[e.index], e.value);
            kernel.push_back(v.finish(field));
        }
        d.rank_out = d.dim - static_cast<Index>(kernel.size());
    } else {
        kernel = nullspace_basis(field, out).vectors;
        d.rank_out = dim - static_cast<Index>(kernel.size());
    }
    d.kernel_dim = static_cast<Index>(kernel.size());

    Echelon<F> ech(field, dim);
    if (in) {
        for (Index j = 0; j < in->cols() && ech.rank() < d.kernel_dim; ++j)
            ech.insert(in->col(j));
    }
    d.rank_in = static_cast<Index>(ech.rank());
    for (auto& z : kernel)
        if (ech.insert(z))
            d.representatives.push_back(std::move(z));
    d.betti = static_cast<Index>(d.representatives.size());
    return d;
}

/// Images of the basis vectors under m.
template <Field F>
SparseMat<F> restricted_image(const Context<F>& ctx, const SparseMat<F>& m, const SubspaceBasis<F>& basis)
{
    SparseMat<F> out(m.rows(), static_cast<Index>(basis.dim()));
    for (Index k = 0; k < basis.dim(); ++k)
        out.set_col(k, apply(ctx.field(), m, basis.vectors[k]));
    return out;
}

}  // namespace

template <Field F>
SparseMat<F> cap_matrix(const Context<F>& ctx, const Cochain<F>& f, int p)
{
    const int m = f.degree;
    if (m > p)
        return SparseMat<F>(0, ctx.chain_dim(p));
    return bullet_matrix(ctx, comp(ctx, mu(ctx), 2, f), 0, p);
}

template <Field F>
ChainVector<F> cap(const Context<F>& ctx, const Cochain<F>& f, const ChainVector<F>& x)
{
    return {x.degree - f.degree, apply(ctx.field(), cap_matrix(ctx, f, x.degree), x.coords)};
}

template <Field F>
SparseMat<F> lie_matrix(const Context<F>& ctx, const Cochain<F>& f, int p)
{
    const F& field = ctx.field();
    const int m = f.degree;
    const int q = p - m + 1;
    SparseMat<F> acc(dim_or_zero(ctx, q), ctx.chain_dim(p));
    if (m > p + 1)
        return acc;
    if (m == p + 1) {
        auto top = multiply(field, bullet_matrix(ctx, f, 0, p), *norm_matrix(ctx, p));
        return scale(field, sign(field, m - 1), top);
    }
    for (int i = 1; i <= p - m + 1; ++i)
        acc = linear_combination(field, field.one(), acc, sign(field, static_cast<long>(m - 1) * (i - 1)),
                                 bullet_matrix(ctx, f, i, p));
    const auto& t = *cyclic_t_matrix(ctx, p);
    SparseMat<F> rotated = bullet_matrix(ctx, f, 0, p);
    for (int i = 1; i <= m; ++i) {
        acc = linear_combination(field, field.one(), acc, sign(field, static_cast<long>(p) * (i - 1) + m - 1), rotated);
        if (i < m)
            rotated = multiply(field, rotated, t);
    }
    return acc;
}

template <Field F>
ChainVector<F> lie(const Context<F>& ctx, const Cochain<F>& f, const ChainVector<F>& x)
{
    return {x.degree - f.degree + 1, apply(ctx.field(), lie_matrix(ctx, f, x.degree), x.coords)};
}

template <Field F>
HomologyReport<F> homology(const Context<F>& ctx, int max_p)
{
    if (max_p < 0)
        throw DomainError("homology: degree bound must be >= 0");
    HomologyReport<F> r{ctx.spec().name, ctx.field().name(), false, {}};
    for (int p = 0; p <= max_p; ++p) {
        auto out = boundary_matrix(ctx, p);
        auto in = boundary_matrix(ctx, p + 1);
        r.degrees.push_back(degree_homology<F>(ctx.field(), p, ctx.chain_dim(p), *out, in.get(), nullptr));
    }
    return r;
}

template <Field F>
HomologyReport<F> cohomology(const Context<F>& ctx, int max_n)
{
    if (max_n < 0)
        throw DomainError("cohomology: degree bound must be >= 0");
    HomologyReport<F> r{ctx.spec().name, ctx.field().name(), true, {}};
    for (int n = 0; n <= max_n; ++n) {
        auto out = delta_eps_matrix(ctx, n);
        std::shared_ptr<const SparseMat<F>> in;
        if (n > 0)
            in = delta_eps_matrix(ctx, n - 1);
        r.degrees.push_back(degree_homology<F>(ctx.field(), n, ctx.cochain_dim(n), *out, in.get(), nullptr));
    }
    return r;
}

template <Field F>
HomologyReport<F> conormalized_cohomology(const Context<F>& ctx, int max_n)
{
    if (max_n < 0)
        throw DomainError("cohomology: degree bound must be >= 0");
    HomologyReport<F> r{ctx.spec().name, ctx.field().name(), true, {}};
    SubspaceBasis<F> prev;
    for (int n = 0; n <= max_n; ++n) {
        auto basis = conormalized_basis(ctx, n);
        auto out = delta_eps_matrix(ctx, n);
        SparseMat<F> in;
        if (n > 0)
            in = restricted_image(ctx, *delta_eps_matrix(ctx, n - 1), prev);
        r.degrees.push_back(degree_homology<F>(ctx.field(), n, ctx.cochain_dim(n), *out, n > 0 ? &in : nullptr, &basis));
        prev = std::move(basis);
    }
    return r;
}

template <Field F>
Echelon<F> boundary_span(const Context<F>& ctx, int q, bool with_degenerate)
{
    Echelon<F> ech(ctx.field(), ctx.chain_dim(q));
    const Index dim = ctx.chain_dim(q);
    if (with_degenerate)
        for (int j = 0; j < q; ++j) {
            const auto& s = *degeneracy_matrix(ctx, j, q - 1);
            for (Index c = 0; c < s.cols() && ech.rank() < dim; ++c)
                ech.insert(s.col(c));
        }
    const auto& d = *boundary_matrix(ctx, q + 1);
    for (Index c = 0; c < d.cols() && ech.rank() < dim; ++c)
        ech.insert(d.col(c));
    return ech;
}

template <Field F>
Echelon<F> coboundary_span(const Context<F>& ctx, int n)
{
    const Index dim = ctx.cochain_dim(n);
    Echelon<F> ech(ctx.field(), dim);
    if (n == 0)
        return ech;
    const auto& d = *delta_eps_matrix(ctx, n - 1);
    for (Index c = 0; c < d.cols() && ech.rank() < dim; ++c)
        ech.insert(d.col(c));
    return ech;
}

template <Field F>
bool is_boundary(const Context<F>& ctx, const ChainVector<F>& x)
{
    if (x.degree < 0)
        return true;
    return boundary_span(ctx, x.degree, false).contains(x.coords);
}

template <Field F>
std::optional<Index> cocycle_witness(const Context<F>& ctx, const Cochain<F>& f)
{
    auto d = delta_eps(ctx, f);
    for (Index j = 0; j < d.values.cols(); ++j)
        if (!d.values.col(j).empty())
            return j;
    return std::nullopt;
}

template <Field F>
bool is_cocycle(const Context<F>& ctx, const Cochain<F>& f)
{
    return !cocycle_witness(ctx, f).has_value();
}

#define SHC_CALCULUS_INSTANTIATE(F)                                                           \
    template SparseMat<F> cap_matrix(const Context<F>&, const Cochain<F>&, int);              \
    template ChainVector<F> cap(const Context<F>&, const Cochain<F>&, const ChainVector<F>&); \
    template SparseMat<F> lie_matrix(const Context<F>&, const Cochain<F>&, int);              \
    template ChainVector<F> lie(const Context<F>&, const Cochain<F>&, const ChainVector<F>&); \
    template HomologyReport<F> homology(const Context<F>&, int);                              \
    template HomologyReport<F> cohomology(const Context<F>&, int);                            \
    template HomologyReport<F> conormalized_cohomology(const Context<F>&, int);               \
    template Echelon<F> boundary_span(const Context<F>&, int, bool);                          \
    template Echelon<F> coboundary_span(const Context<F>&, int);                              \
    template bool is_boundary(const Context<F>&, const ChainVector<F>&);                      \
    template bool is_cocycle(const Context<F>&, const Cochain<F>&);                           \
    template std::optional<Index> cocycle_witness(const Context<F>&, const Cochain<F>&);

SHC_CALCULUS_INSTANTIATE(Rationals)
SHC_CALCULUS_INSTANTIATE(PrimeField)

}  // namespace shc
