#include "shc/operad.hpp"

namespace shc {

namespace {

template <Field F>
Cochain<F> zero_with_rows(const Context<F>& ctx, int degree, Index rows)
{
    if (degree < 0)
        throw DomainError("composition would have negative degree");
    return {degree, SparseMat<F>(rows, ctx.input_dim(degree))};
}

template <Field F>
void require_a_valued(const Context<F>& ctx, const Cochain<F>& g, const char* what)
{
    if (g.values.rows() != static_cast<Index>(ctx.dim_a()))
        throw DomainError(std::string(what) + ": cochain must take values in A");
    if (g.values.cols() != ctx.input_dim(g.degree))
        throw DomainError(std::string(what) + ": cochain matrix does not match its degree");
}

template <Field F>
typename F::Elem sign(const F& f, long exponent)
{
    return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

}  // namespace

template <Field F>
Cochain<F> mu(const Context<F>& ctx)
{
    const auto& t = ctx.triple();
    const TriangleLayout& in = ctx.input_layout(2);
    auto m = build_columns(ctx, in, static_cast<Index>(ctx.dim_a()), [&](const int* a, const int* b, VecBuilder<F>& out) {
        auto ab = t.A.product(a[0], a[1]);
        out.add_all(t.A.multiply(t.field, t.eps_images[b[0]], ab));
    });
    return {2, std::move(m)};
}

template <Field F>
Cochain<F> one(const Context<F>& ctx)
{
    Index d = static_cast<Index>(ctx.dim_a());
    return {1, SparseMat<F>::identity(ctx.field(), d)};
}

template <Field F>
Cochain<F> e0(const Context<F>& ctx)
{
    Cochain<F> c = zero_cochain(ctx, 0);
    c.values.set_col(0, ctx.triple().A.unit);
    return c;
}

template <Field F>
OperadElems<F> operad_elems(const Context<F>& ctx)
{
    return {mu(ctx), one(ctx), e0(ctx)};
}

template <Field F>
Cochain<F> universal_cochain(const Context<F>& ctx, int n)
{
    return {n, SparseMat<F>::identity(ctx.field(), ctx.input_dim(n))};
}

template <Field F>
Cochain<F> add(const F& f, const Cochain<F>& x, const Cochain<F>& y)
{
    if (x.degree != y.degree)
        throw DomainError("cochain sum: degrees differ");
    return {x.degree, add(f, x.values, y.values)};
}

template <Field F>
Cochain<F> sub(const F& f, const Cochain<F>& x, const Cochain<F>& y)
{
    if (x.degree != y.degree)
        throw DomainError("cochain difference: degrees differ");
    return {x.degree, sub(f, x.values, y.values)};
}

template <Field F>
Cochain<F> scale(const F& f, const typename F::Elem& c, const Cochain<F>& x)
{
    return {x.degree, scale(f, c, x.values)};
}

template <Field F>
Cochain<F> comp(const Context<F>& ctx, const Cochain<F>& f, int i, const Cochain<F>& g)
{
    const int n = f.degree, m = g.degree;
    if (i < 1)
        throw DomainError("comp: slot " + std::to_string(i) + " out of range (slots start at 1)");
    require_a_valued(ctx, g, "comp");
    if (f.values.cols() != ctx.input_dim(n))
        throw DomainError("comp: outer cochain matrix does not match its degree");
    if (n == 0 || i > n)
        return zero_with_rows(ctx, n + m - 1, f.values.rows());

    const F& field = ctx.field();
    const int deg = n + m - 1;
    const TriangleLayout& in = ctx.input_layout(deg);
    const int start = i - 1;
    const bool negate = ctx.mutation().kind == Mutation::Kind::CompSlot && ctx.mutation().index == i;
    const auto coef = negate ? field.neg(field.one()) : field.one();
    const TriangleLayout& block = ctx.input_layout(m);
    VecBuilder<F> inner;
    auto values = build_columns(ctx, in, f.values.rows(), [&](const int* a, const int* b, VecBuilder<F>& out) {
        const SparseVec<F>& gv = g.values.col(m > 0 ? Context<F>::sub_index(block, a, b, deg, start) : 0);
        if (gv.empty())
            return;
        ctx.contract(a, b, deg, start, m, gv, coef, inner);
        out.add_all(apply(field, f.values, inner.finish(field)));
    });
    return {deg, std::move(values)};
}

template <Field F>
Cochain<F> circle(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g)
{
    const F& field = ctx.field();
    const int n = f.degree, m = g.degree;
    Cochain<F> acc = zero_with_rows(ctx, n + m - 1, f.values.rows());
    for (int i = 1; i <= n; ++i)
        acc = add(field, acc, scale(field, sign(field, static_cast<long>(i - 1) * (m - 1)), comp(ctx, f, i, g)));
    return acc;
}

template <Field F>
Cochain<F> bracket(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g)
{
    const F& field = ctx.field();
    const long e = static_cast<long>(f.degree - 1) * (g.degree - 1);
    return sub(field, circle(ctx, f, g), scale(field, sign(field, e), circle(ctx, g, f)));
}

template <Field F>
Cochain<F> cup(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g)
{
    return comp(ctx, comp(ctx, mu(ctx), 2, f), 1, g);
}

template <Field F>
Cochain<F> explicit_cup(const Context<F>& ctx, const Cochain<F>& f, const Cochain<F>& g)
{
    require_a_valued(ctx, f, "cup");
    require_a_valued(ctx, g, "cup");
    const auto& t = ctx.triple();
    const int m = f.degree, n = g.degree, rows = m + n;
    const TriangleLayout& in = ctx.input_layout(rows);
    std::vector<int> cross;
    auto values = build_columns(ctx, in, static_cast<Index>(ctx.dim_a()), [&](const int* a, const int* b, VecBuilder<F>& out) {
        const SparseVec<F>& gv = g.values.col(n > 0 ? ctx.sub_index(a, b, rows, 0, n) : 0);
        const SparseVec<F>& fv = f.values.col(m > 0 ? ctx.sub_index(a, b, rows, n, m) : 0);
        if (gv.empty() || fv.empty())
            return;
        cross.clear();
        for (int s = 0; s < n; ++s)
            for (int u = n; u < rows; ++u)
                cross.push_back(b[pair_slot(rows, s, u)]);
        auto e = t.eps(ctx.b_product(cross));
        out.add_all(t.A.multiply(t.field, e, t.A.multiply(t.field, gv, fv)));
    });
    return {rows, std::move(values)};
}

template <Field F>
std::shared_ptr<const SparseMat<F>> delta_eps_matrix(const Context<F>& ctx, int n)
{
    if (n < 0)
        throw DomainError("delta_eps: degree must be >= 0");
    return ctx.cached("delta_eps:" + std::to_string(n), [&] {
        const auto& t = ctx.triple();
        const F& field = ctx.field();
        const Index dA = static_cast<Index>(ctx.dim_a());
        const int N = n + 1;
        const TriangleLayout& out_layout = ctx.input_layout(N);
        const Index in_cols = ctx.cochain_dim(n);
        // Built transposed: one column per output coordinate (e, k).
        SparseMat<F> transposed(in_cols, out_layout.size() * dA);
        std::vector<VecBuilder<F>> rows(dA);
        std::vector<int> a(N), b(pair_count(N)), factors;
        VecBuilder<F> inner;
        const auto minus = field.neg(field.one());
        for (Index e = 0; e < out_layout.size(); ++e) {
            out_layout.decode(e, a.data(), b.data());

            // a_1 eps(b_{1,2} ... b_{1,n}) f(rows 2..n)
            factors.clear();
            for (int j = 1; j < N; ++j)
                factors.push_back(b[pair_slot(N, 0, j)]);
            auto left = t.A.multiply(field, ctx.a_basis(a[0]), t.eps(ctx.b_product(factors)));
            Index col = N > 1 ? ctx.sub_index(a.data(), b.data(), N, 1, N - 1) : 0;
            for (Index o = 0; o < dA; ++o)
                for (const auto& w : t.A.multiply(field, left, ctx.a_basis(static_cast<int>(o))).entries)
                    rows[w.index].add(col * dA + o, w.value);

            for (int i = 1; i < N; ++i) {
                auto merged = t.A.multiply(field, t.A.product(a[i - 1], a[i]), t.eps_images[b[pair_slot(N, i - 1, i)]]);
                ctx.contract(a.data(), b.data(), N, i - 1, 2, merged, i % 2 ? minus : field.one(), inner);
                for (const auto& w : inner.finish(field).entries)
                    for (Index o = 0; o < dA; ++o)
                        rows[o].add(w.index * dA + o, w.value);
            }

            // (-1)^n f(rows 1..n-1) eps(b_{1,n} ... b_{n-1,n}) a_n
            factors.clear();
            for (int j = 0; j < N - 1; ++j)
                factors.push_back(b[pair_slot(N, j, N - 1)]);
            auto right = t.A.multiply(field, t.eps(ctx.b_product(factors)), ctx.a_basis(a[N - 1]));
            col = N > 1 ? ctx.sub_index(a.data(), b.data(), N, 0, N - 1) : 0;
            const auto last_sign = N % 2 ? minus : field.one();
            for (Index o = 0; o < dA; ++o)
                for (const auto& w : t.A.multiply(field, ctx.a_basis(static_cast<int>(o)), right).entries)
                    rows[w.index].add(col * dA + o, field.mul(last_sign, w.value));

            for (Index k = 0; k < dA; ++k)
                transposed.set_col(e * dA + k, rows[k].finish(field));
        }
        return transpose(field, transposed);
    });
}

template <Field F>
Cochain<F> delta_eps(const Context<F>& ctx, const Cochain<F>& f)
{
    require_a_valued(ctx, f, "delta_eps");
    auto d = delta_eps_matrix(ctx, f.degree);
    return unflatten(ctx, f.degree + 1, apply(ctx.field(), *d, flatten(f)));
}

template <Field F>
Cochain<F> delta_mu(const Context<F>& ctx, const Cochain<F>& f)
{
    return bracket(ctx, mu(ctx), f);
}

template <Field F>
Cochain<F> coface(const Context<F>& ctx, int i, const Cochain<F>& f)
{
    const int p = f.degree;
    if (i < 0 || i > p + 1)
        throw DomainError("coface index " + std::to_string(i) + " out of range 0.." + std::to_string(p + 1));
    if (i == 0)
        return comp(ctx, mu(ctx), 2, f);
    if (i == p + 1)
        return comp(ctx, mu(ctx), 1, f);
    return comp(ctx, f, i, mu(ctx));
}

template <Field F>
Cochain<F> codegeneracy(const Context<F>& ctx, int j, const Cochain<F>& f)
{
    if (j < 0 || j >= f.degree)
        throw DomainError("codegeneracy index " + std::to_string(j) + " out of range 0.." +
                          std::to_string(f.degree - 1));
    return comp(ctx, f, j + 1, e0(ctx));
}

template <Field F>
SparseMat<F> right_action_matrix(const Context<F>& ctx, const SparseMat<F>& m)
{
    const Index dA = static_cast<Index>(ctx.dim_a());
    SparseMat<F> mt = transpose(ctx.field(), m);
    SparseMat<F> out(m.cols() * dA, m.rows() * dA);
    for (Index t = 0; t < m.rows(); ++t)
        for (Index o = 0; o < dA; ++o) {
            SparseVec<F> c;
            c.entries.reserve(mt.col(t).nnz());
            for (const auto& e : mt.col(t).entries)
                c.entries.push_back({e.index * dA + o, e.value});
            out.set_col(t * dA + o, std::move(c));
        }
    return out;
}

template <Field F>
std::shared_ptr<const SparseMat<F>> codegeneracy_matrix(const Context<F>& ctx, int j, int n)
{
    if (j < 0 || j >= n)
        throw DomainError("codegeneracy index " + std::to_string(j) + " out of range 0.." + std::to_string(n - 1));
    return ctx.cached("codegeneracy:" + std::to_string(j) + ":" + std::to_string(n), [&] {
        auto m = comp(ctx, universal_cochain(ctx, n), j + 1, e0(ctx));
        return right_action_matrix(ctx, m.values);
    });
}

template <Field F>
SubspaceBasis<F> conormalized_basis(const Context<F>& ctx, int n)
{
    const Index dim = ctx.cochain_dim(n);
    if (n == 0) {
        SubspaceBasis<F> all{dim, {}};
        for (Index k = 0; k < dim; ++k)
            all.vectors.push_back(SparseVec<F>::unit(ctx.field(), k));
        return all;
    }
    std::vector<SparseMat<F>> blocks;
    for (int j = 0; j < n; ++j)
        blocks.push_back(*codegeneracy_matrix(ctx, j, n));
    return nullspace_basis(ctx.field(), vstack(blocks));
}

#define SHC_OPERAD_INSTANTIATE(F)                                                                    \
    template Cochain<F> mu(const Context<F>&);                                                       \
    template Cochain<F> one(const Context<F>&);                                                      \
    template Cochain<F> e0(const Context<F>&);                                                       \
    template OperadElems<F> operad_elems(const Context<F>&);                                         \
    template Cochain<F> universal_cochain(const Context<F>&, int);                                   \
    template Cochain<F> add(const F&, const Cochain<F>&, const Cochain<F>&);                         \
    template Cochain<F> sub(const F&, const Cochain<F>&, const Cochain<F>&);                         \
    template Cochain<F> scale(const F&, const typename F::Elem&, const Cochain<F>&);                 \
    template Cochain<F> comp(const Context<F>&, const Cochain<F>&, int, const Cochain<F>&);          \
    template Cochain<F> circle(const Context<F>&, const Cochain<F>&, const Cochain<F>&);             \
    template Cochain<F> bracket(const Context<F>&, const Cochain<F>&, const Cochain<F>&);            \
    template Cochain<F> cup(const Context<F>&, const Cochain<F>&, const Cochain<F>&);                \
    template Cochain<F> explicit_cup(const Context<F>&, const Cochain<F>&, const Cochain<F>&);       \
    template std::shared_ptr<const SparseMat<F>> delta_eps_matrix(const Context<F>&, int);           \
    template Cochain<F> delta_eps(const Context<F>&, const Cochain<F>&);                             \
    template Cochain<F> delta_mu(const Context<F>&, const Cochain<F>&);                              \
    template Cochain<F> coface(const Context<F>&, int, const Cochain<F>&);                           \
    template Cochain<F> codegeneracy(const Context<F>&, int, const Cochain<F>&);                     \
    template std::shared_ptr<const SparseMat<F>> codegeneracy_matrix(const Context<F>&, int, int);   \
    template SparseMat<F> right_action_matrix(const Context<F>&, const SparseMat<F>&);               \
    template SubspaceBasis<F> conormalized_basis(const Context<F>&, int);

SHC_OPERAD_INSTANTIATE(Rationals)
SHC_OPERAD_INSTANTIATE(PrimeField)

}  // namespace shc
