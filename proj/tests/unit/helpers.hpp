#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shc/complexes.hpp"

namespace shc {

template <Field F>
bool operator==(const ChainVector<F>& x, const ChainVector<F>& y)
{
    return x.degree == y.degree && x.coords == y.coords;
}

}  // namespace shc

namespace shc::test {

using Q = Rationals;

inline std::unique_ptr<Context<Q>> ctx_q(const std::string& name, EngineOptions opt = {})
{
    return std::make_unique<Context<Q>>(builtin(name), Q{}, opt);
}

inline std::unique_ptr<Context<PrimeField>> ctx_p(const std::string& name, std::uint32_t p = 101)
{
    return std::make_unique<Context<PrimeField>>(builtin(name, FieldConfig::prime_field(p)), PrimeField(p));
}

inline SparseVec<Q> vec(const std::vector<long>& dense)
{
    SparseVec<Q> v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0)
            v.entries.push_back({static_cast<Index>(i), mpq_class(dense[i])});
    return v;
}

/// Rows given top to bottom.
inline SparseMat<Q> mat(const std::vector<std::vector<long>>& rows)
{
    Index r = static_cast<Index>(rows.size());
    Index c = r ? static_cast<Index>(rows[0].size()) : 0;
    SparseMat<Q> m(r, c);
    for (Index j = 0; j < c; ++j) {
        std::vector<long> col;
        for (Index i = 0; i < r; ++i)
            col.push_back(rows[i][j]);
        m.set_col(j, vec(col));
    }
    return m;
}

inline ChainVector<Q> chain(const Context<Q>& ctx, std::vector<int> a, std::vector<int> b)
{
    return basis_chain(ctx, TriangleIndex{std::move(a), std::move(b)});
}

inline ChainVector<Q> combo(const Context<Q>& ctx, int p, const std::vector<std::pair<TriangleIndex, long>>& terms)
{
    VecBuilder<Q> out;
    for (const auto& [t, c] : terms)
        out.add(ctx.chain_layout(p).pack(t), mpq_class(c));
    return {p, out.finish(ctx.field())};
}

}  // namespace shc::test
