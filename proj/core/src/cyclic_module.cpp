#include "shc/cyclic_module.hpp"

namespace shc {

namespace {

template <Field F>
Index dim_or_zero(const Context<F>& ctx, int p)
{
    return p < 0 ? 0 : ctx.chain_dim(p);
}

template <Field F>
void require_degree(const Context<F>& ctx, const ChainVector<F>& x)
{
    if (!x.coords.empty() && x.coords.entries.back().index >= ctx.chain_dim(x.degree))
        throw DomainError("chain has coordinates outside C_" + std::to_string(x.degree));
}

template <Field F>
std::string key(const char* name, int a, int b = -1)
{
    return std::string(name) + ":" + std::to_string(a) + ":" + std::to_string(b);
}

}  // namespace

template <Field F>
std::shared_ptr<const SparseMat<F>> boundary_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("boundary", p), [&] {
        const TriangleLayout& src = ctx.chain_layout(p);
        if (p == 0)
            return SparseMat<F>(0, src.size());
        const auto& t = ctx.triple();
        const F& field = ctx.field();
        const Mutation& mut = ctx.mutation();
        auto term_sign = [&](int k) {
            bool odd = k % 2 != 0;
            if (mut.kind == Mutation::Kind::BoundaryTerm && mut.index == k)
                odd = !odd;
            return odd ? field.neg(field.one()) : field.one();
        };
        const int r = p + 1;
        std::vector<SparseVec<F>> products;
        std::vector<const SparseVec<F>*> diag(p), upper(pair_count(p));
        return build_columns(ctx, src, ctx.chain_dim(p - 1), [&](const int* a, const int* b, VecBuilder<F>& out) {
            for (int i = 0; i < p; ++i) {
                auto merged = t.A.multiply(field, t.eps_images[b[pair_slot(r, i, i + 1)]], t.A.product(a[i], a[i + 1]));
                ctx.contract(a, b, r, i, 2, merged, term_sign(i), out);
            }
            // wrap: eps(b_{0,p}) a_p a_0 in row 0, b_{0,k} replaced by b_{k,p} b_{0,k}
            auto wrapped = t.A.multiply(field, t.eps_images[b[pair_slot(r, 0, p)]], t.A.product(a[p], a[0]));
            products.clear();
            products.reserve(p);
            diag[0] = &wrapped;
            for (int k = 1; k < p; ++k)
                diag[k] = &ctx.a_basis(a[k]);
            for (int s = 0; s < p; ++s)
                for (int u = s + 1; u < p; ++u) {
                    if (s == 0) {
                        products.push_back(t.B.product(b[pair_slot(r, u, p)], b[pair_slot(r, 0, u)]));
                        upper[pair_slot(p, s, u)] = &products.back();
                    } else {
                        upper[pair_slot(p, s, u)] = &ctx.b_basis(b[pair_slot(r, s, u)]);
                    }
                }
            ctx.expand(p, diag, upper, term_sign(p), out);
        });
    });
}

template <Field F>
ChainVector<F> boundary(const Context<F>& ctx, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *boundary_matrix(ctx, x.degree), x.degree - 1, x);
}

template <Field F>
SparseMat<F> bullet_matrix(const Context<F>& ctx, const Cochain<F>& f, int i, int p)
{
    const int m = f.degree;
    const int q = p - m + 1;
    const TriangleLayout& src = ctx.chain_layout(p);
    if (f.values.rows() != static_cast<Index>(ctx.dim_a()) || f.values.cols() != ctx.input_dim(m))
        throw DomainError("bullet: cochain must be an A-valued cochain of its degree");
    const bool valid = i == 0 ? m <= p + 1 : (i >= 1 && m <= p && i <= p - m + 1);
    if (!valid)
        return SparseMat<F>(dim_or_zero(ctx, q), src.size());
    const int r = p + 1;
    const auto one = ctx.field().one();
    const TriangleLayout& block = ctx.input_layout(m);
    return build_columns(ctx, src, ctx.chain_dim(q), [&](const int* a, const int* b, VecBuilder<F>& out) {
        const SparseVec<F>& fv = f.values.col(m > 0 ? Context<F>::sub_index(block, a, b, r, i) : 0);
        if (!fv.empty())
            ctx.contract(a, b, r, i, m, fv, one, out);
    });
}

template <Field F>
ChainVector<F> bullet(const Context<F>& ctx, const Cochain<F>& f, int i, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, bullet_matrix(ctx, f, i, x.degree), x.degree - f.degree + 1, x);
}

template <Field F>
std::shared_ptr<const SparseMat<F>> cyclic_t_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("cyclic_t", p), [&] {
        const TriangleLayout& lay = ctx.chain_layout(p);
        const F& field = ctx.field();
        const auto coef = ctx.mutation().kind == Mutation::Kind::CyclicSign ? field.neg(field.one()) : field.one();
        const int r = p + 1;
        auto sigma = [p](int k) { return k == 0 ? p : k - 1; };
        return build_columns(ctx, lay, lay.size(), [&](const int* a, const int* b, VecBuilder<F>& out) {
            Index idx = static_cast<Index>(a[p]) * lay.a_weight(0);
            for (int k = 1; k < r; ++k)
                idx += static_cast<Index>(a[k - 1]) * lay.a_weight(k);
            for (int s = 0; s < r; ++s)
                for (int u = s + 1; u < r; ++u) {
                    int x = sigma(s), y = sigma(u);
                    idx += static_cast<Index>(b[pair_slot(r, std::min(x, y), std::max(x, y))]) *
                           lay.b_weight(pair_slot(r, s, u));
                }
            out.add(idx, coef);
        });
    });
}

template <Field F>
ChainVector<F> cyclic_t(const Context<F>& ctx, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *cyclic_t_matrix(ctx, x.degree), x.degree, x);
}

template <Field F>
std::shared_ptr<const SparseMat<F>> face_matrix(const Context<F>& ctx, int i, int p)
{
    if (p < 1 || i < 0 || i > p)
        throw DomainError("face index " + std::to_string(i) + " out of range for degree " + std::to_string(p));
    return ctx.cached(key<F>("face", i, p), [&] {
        auto m = mu(ctx);
        if (i < p)
            return bullet_matrix(ctx, m, i, p);
        return multiply(ctx.field(), bullet_matrix(ctx, m, 0, p), *cyclic_t_matrix(ctx, p));
    });
}

template <Field F>
std::shared_ptr<const SparseMat<F>> degeneracy_matrix(const Context<F>& ctx, int j, int p)
{
    if (p < 0 || j < 0 || j > p)
        throw DomainError("degeneracy index " + std::to_string(j) + " out of range for degree " + std::to_string(p));
    return ctx.cached(key<F>("degeneracy", j, p), [&] { return bullet_matrix(ctx, e0(ctx), j + 1, p); });
}

template <Field F>
std::shared_ptr<const SparseMat<F>> extra_degeneracy_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("extra_degeneracy", p), [&] { return bullet_matrix(ctx, e0(ctx), 0, p); });
}

template <Field F>
std::shared_ptr<const SparseMat<F>> b_from_faces_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("b_from_faces", p), [&] {
        const F& field = ctx.field();
        SparseMat<F> acc(dim_or_zero(ctx, p - 1), ctx.chain_dim(p));
        for (int i = 0; i <= p && p >= 1; ++i)
            acc = linear_combination(field, field.one(), acc, i % 2 ? field.neg(field.one()) : field.one(),
                                     *face_matrix(ctx, i, p));
        return acc;
    });
}

template <Field F>
std::shared_ptr<const SparseMat<F>> norm_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("norm", p), [&] {
        const F& field = ctx.field();
        const auto& t = *cyclic_t_matrix(ctx, p);
        SparseMat<F> power = SparseMat<F>::identity(field, ctx.chain_dim(p));
        SparseMat<F> acc(power.rows(), power.cols());
        for (int i = 0; i <= p; ++i) {
            const bool odd = (static_cast<long>(i) * p) % 2 != 0;
            acc = linear_combination(field, field.one(), acc, odd ? field.neg(field.one()) : field.one(), power);
            power = multiply(field, t, power);
        }
        return acc;
    });
}

template <Field F>
std::shared_ptr<const SparseMat<F>> connes_B_matrix(const Context<F>& ctx, int p)
{
    return ctx.cached(key<F>("connes_B", p),
                      [&] { return multiply(ctx.field(), *extra_degeneracy_matrix(ctx, p), *norm_matrix(ctx, p)); });
}

template <Field F>
ChainVector<F> face(const Context<F>& ctx, int i, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *face_matrix(ctx, i, x.degree), x.degree - 1, x);
}

template <Field F>
ChainVector<F> degeneracy(const Context<F>& ctx, int j, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *degeneracy_matrix(ctx, j, x.degree), x.degree + 1, x);
}

template <Field F>
ChainVector<F> extra_degeneracy(const Context<F>& ctx, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *extra_degeneracy_matrix(ctx, x.degree), x.degree + 1, x);
}

template <Field F>
ChainVector<F> norm(const Context<F>& ctx, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    return apply(ctx, *norm_matrix(ctx, x.degree), x.degree, x);
}

template <Field F>
NormalizedChains<F>::NormalizedChains(const Context<F>& ctx, int p)
    : degree_(p), echelon_(ctx.field(), ctx.chain_dim(p))
{
    const Index dim = ctx.chain_dim(p);
    for (int j = 0; j < p; ++j) {
        const auto& s = *degeneracy_matrix(ctx, j, p - 1);
        for (Index c = 0; c < s.cols() && echelon_.rank() < dim; ++c)
            echelon_.insert(s.col(c));
    }
    position_.assign(dim, static_cast<Index>(-1));
    for (Index r = 0; r < dim; ++r)
        if (!echelon_.is_pivot(r)) {
            position_[r] = static_cast<Index>(complement_.size());
            complement_.push_back(r);
        }
}

template <Field F>
SparseVec<F> NormalizedChains<F>::project(const SparseVec<F>& v) const
{
    SparseVec<F> rem = echelon_.reduce(v);
    for (auto& e : rem.entries)
        e.index = position_[e.index];
    return rem;
}

template <Field F>
SparseVec<F> NormalizedChains<F>::include(const SparseVec<F>& coords) const
{
    SparseVec<F> v = coords;
    for (auto& e : v.entries) {
        if (e.index >= complement_.size())
            throw DomainError("normalized coordinates out of range");
        e.index = complement_[e.index];
    }
    return v;
}

template <Field F>
SubspaceBasis<F> NormalizedChains<F>::basis() const
{
    SubspaceBasis<F> b{echelon_.ambient(), {}};
    for (Index r : complement_)
        b.vectors.push_back(SparseVec<F>::unit(echelon_.field(), r));
    return b;
}

template <Field F>
SparseMat<F> normalized_operator(const SparseMat<F>& m, const NormalizedChains<F>& src,
                                 const NormalizedChains<F>& dst)
{
    if (m.cols() != src.ambient_dim() || m.rows() != dst.ambient_dim())
        throw DomainError("normalized_operator: shape mismatch");
    SparseMat<F> out(dst.dim(), src.dim());
    for (Index k = 0; k < src.dim(); ++k)
        out.set_col(k, dst.project(m.col(src.section_row(k))));
    return out;
}

template <Field F>
SubspaceBasis<F> normalized_chain_basis(const Context<F>& ctx, int p)
{
    return NormalizedChains<F>(ctx, p).basis();
}

template <Field F>
ChainVector<F> connes_B(const Context<F>& ctx, const ChainVector<F>& x)
{
    require_degree(ctx, x);
    NormalizedChains<F> dst(ctx, x.degree + 1);
    auto y = apply(ctx.field(), *connes_B_matrix(ctx, x.degree), x.coords);
    return {x.degree + 1, dst.include(dst.project(y))};
}

#define SHC_CYCLIC_INSTANTIATE(F)                                                                         \
    template std::shared_ptr<const SparseMat<F>> boundary_matrix(const Context<F>&, int);                 \
    template ChainVector<F> boundary(const Context<F>&, const ChainVector<F>&);                           \
    template SparseMat<F> bullet_matrix(const Context<F>&, const Cochain<F>&, int, int);                  \
    template ChainVector<F> bullet(const Context<F>&, const Cochain<F>&, int, const ChainVector<F>&);     \
    template std::shared_ptr<const SparseMat<F>> cyclic_t_matrix(const Context<F>&, int);                 \
    template ChainVector<F> cyclic_t(const Context<F>&, const ChainVector<F>&);                           \
    template std::shared_ptr<const SparseMat<F>> face_matrix(const Context<F>&, int, int);                \
    template std::shared_ptr<const SparseMat<F>> degeneracy_matrix(const Context<F>&, int, int);          \
    template std::shared_ptr<const SparseMat<F>> extra_degeneracy_matrix(const Context<F>&, int);         \
    template std::shared_ptr<const SparseMat<F>> b_from_faces_matrix(const Context<F>&, int);             \
    template std::shared_ptr<const SparseMat<F>> norm_matrix(const Context<F>&, int);                     \
    template std::shared_ptr<const SparseMat<F>> connes_B_matrix(const Context<F>&, int);                 \
    template ChainVector<F> face(const Context<F>&, int, const ChainVector<F>&);                          \
    template ChainVector<F> degeneracy(const Context<F>&, int, const ChainVector<F>&);                    \
    template ChainVector<F> extra_degeneracy(const Context<F>&, const ChainVector<F>&);                   \
    template ChainVector<F> norm(const Context<F>&, const ChainVector<F>&);                               \
    template class NormalizedChains<F>;                                                                   \
    template SparseMat<F> normalized_operator(const SparseMat<F>&,                     \
                                              const NormalizedChains<F>&, const NormalizedChains<F>&);    \
    template SubspaceBasis<F> normalized_chain_basis(const Context<F>&, int);                             \
    template ChainVector<F> connes_B(const Context<F>&, const ChainVector<F>&);

SHC_CYCLIC_INSTANTIATE(Rationals)
SHC_CYCLIC_INSTANTIATE(PrimeField)

}  // namespace shc
