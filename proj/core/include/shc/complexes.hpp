#pragma once

// Triangle-tensor bases for the chain spaces C_p (p+1 rows) and the cochain
// input spaces (n rows), plus the per-triple evaluation context shared by all
// operators.
//
// Enumeration order of a triangle with r rows: the diagonal digits a_0..a_{r-1}
// vary fastest (weight dA^k), then the upper entries b_{s,t}, s < t, in
// (s,t)-lexicographic order (weight dA^r * dB^q for the q-th pair).
// Cochain input rows are 0-based: the row written a_1 in cochain formulas is
// row 0 here.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "shc/linalg.hpp"
#include "shc/triple.hpp"

namespace shc {

/// Basis-size cap: 10^6 unless SHC_BUDGET is set.
std::uint64_t default_budget();

/// Deliberate sign errors for negative-control runs.
struct Mutation {
    enum class Kind { None, BoundaryTerm, CyclicSign, CompSlot };
    Kind kind = Kind::None;
    /// Boundary term to flip (0..n, n = wrap term) or composition slot (1-based).
    int index = 0;

    bool active() const { return kind != Kind::None; }
    std::string describe() const;
};

struct EngineOptions {
    std::uint64_t budget = default_budget();
    Mutation mutation;
};

int pair_count(int rows);
/// Position of b_{s,t} (s < t) among the pairs of a triangle with `rows` rows.
int pair_slot(int rows, int s, int t);

mpz_class triangle_count(int dim_a, int dim_b, int rows);

/// dim C_p = dA^{p+1} dB^{p(p+1)/2}; BudgetExceeded beyond the cap.
std::uint64_t chain_dim(const TripleSpec& t, int p, std::uint64_t budget = default_budget());
/// dim C^n = dA^n dB^{n(n-1)/2} * dA.
std::uint64_t cochain_dim(const TripleSpec& t, int n, std::uint64_t budget = default_budget());

struct TriangleIndex {
    std::vector<int> a;
    std::vector<int> b;

    int rows() const { return static_cast<int>(a.size()); }
    bool operator==(const TriangleIndex&) const = default;
};

/// Rows i..k of x as a triangle of its own.
TriangleIndex extract_subtriangle(const TriangleIndex& x, int i, int k);

class TriangleLayout {
public:
    TriangleLayout(int dim_a, int dim_b, int rows);

    int rows() const { return rows_; }
    int pairs() const { return static_cast<int>(b_weight_.size()); }
    Index size() const { return size_; }
    Index a_weight(int k) const { return a_weight_[k]; }
    Index b_weight(int q) const { return b_weight_[q]; }

    Index pack(const TriangleIndex& t) const;
    TriangleIndex unpack(Index idx) const;
    /// Digits of idx into caller buffers of length rows() and pairs().
    void decode(Index idx, int* a, int* b) const;
    /// Digits of idx + 1 from the digits of idx.
    void advance(int* a, int* b) const
    {
        for (int k = 0; k < rows_; ++k) {
            if (++a[k] < dim_a_)
                return;
            a[k] = 0;
        }
        const int np = pairs();
        for (int q = 0; q < np; ++q) {
            if (++b[q] < dim_b_)
                return;
            b[q] = 0;
        }
    }

private:
    int dim_a_, dim_b_, rows_;
    Index size_;
    std::vector<Index> a_weight_, b_weight_;
};

template <Field F>
struct ChainVector {
    int degree = 0;
    SparseVec<F> coords;
};

/// Linear map from the degree-n input space to A: column t is f(basis t).
/// The row count is dim A except for auxiliary cochains with a wider target.
template <Field F>
struct Cochain {
    int degree = 0;
    SparseMat<F> values;
};

template <Field F>
class Context {
public:
    using Elem = typename F::Elem;

    Context(TripleSpec spec, F field, EngineOptions options = {})
        : spec_(std::move(spec)), options_(options), t_(make_typed(spec_, field))
    {
        for (int i = 0; i < t_.A.dim; ++i)
            a_basis_.push_back(SparseVec<F>::unit(t_.field, static_cast<Index>(i)));
        for (int j = 0; j < t_.B.dim; ++j)
            b_basis_.push_back(SparseVec<F>::unit(t_.field, static_cast<Index>(j)));
    }

    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    const TripleSpec& spec() const { return spec_; }
    const F& field() const { return t_.field; }
    const TypedTriple<F>& triple() const { return t_; }
    const EngineOptions& options() const { return options_; }
    const Mutation& mutation() const { return options_.mutation; }
    int dim_a() const { return t_.A.dim; }
    int dim_b() const { return t_.B.dim; }

    const SparseVec<F>& a_basis(int i) const { return a_basis_[i]; }
    const SparseVec<F>& b_basis(int j) const { return b_basis_[j]; }

    /// Layout of C_p (p + 1 rows), budget checked.
    const TriangleLayout& chain_layout(int p) const
    {
        if (p < 0)
            throw DomainError("chain degree must be >= 0");
        shc::chain_dim(spec_, p, options_.budget);
        return layout(p + 1);
    }

    /// Layout of the degree-n cochain input space (n rows), budget checked.
    const TriangleLayout& input_layout(int n) const
    {
        if (n < 0)
            throw DomainError("cochain degree must be >= 0");
        shc::cochain_dim(spec_, n, options_.budget);
        return layout(n);
    }

    Index chain_dim(int p) const { return chain_layout(p).size(); }
    Index input_dim(int n) const { return input_layout(n).size(); }
    Index cochain_dim(int n) const { return input_dim(n) * static_cast<Index>(dim_a()); }

    /// Memoized matrix keyed by name; the builder runs at most once per key.
    std::shared_ptr<const SparseMat<F>> cached(const std::string& key,
                                               const std::function<SparseMat<F>()>& build) const
    {
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end())
                return it->second;
        }
        auto m = std::make_shared<const SparseMat<F>>(build());
        std::lock_guard lock(mutex_);
        return cache_.emplace(key, std::move(m)).first->second;
    }

    /// Product of B basis elements b_{j_1} ... b_{j_k}; 1_B for k = 0.
    SparseVec<F> b_product(const std::vector<int>& factors) const
    {
        if (factors.empty())
            return t_.B.unit;
        SparseVec<F> acc = b_basis_[factors[0]];
        for (std::size_t k = 1; k < factors.size() && !acc.empty(); ++k)
            acc = t_.B.multiply(t_.field, acc, b_basis_[factors[k]]);
        return acc;
    }

    /// coef * (tensor of diag[0..rows) and upper[0..pairs)) in layout(rows) coordinates.
    void expand(int rows, const std::vector<const SparseVec<F>*>& diag,
                const std::vector<const SparseVec<F>*>& upper, const Elem& coef, VecBuilder<F>& out) const
    {
        const TriangleLayout& lay = layout(rows);
        const F& f = t_.field;
        std::vector<std::pair<Index, Elem>> cur{{0, coef}}, next;
        auto step = [&](const SparseVec<F>& v, Index weight) {
            next.clear();
            for (const auto& [idx, c] : cur)
                for (const auto& e : v.entries)
                    next.emplace_back(idx + e.index * weight, f.mul(c, e.value));
            cur.swap(next);
        };
        for (int k = 0; k < rows && !cur.empty(); ++k)
            step(*diag[k], lay.a_weight(k));
        for (int q = 0; q < lay.pairs() && !cur.empty(); ++q)
            step(*upper[q], lay.b_weight(q));
        for (auto& [idx, c] : cur)
            out.add(idx, std::move(c));
    }

    /// Contracts rows [start, start+len) of the basis triangle (a, b) into one
    /// row holding `value`. New upper entries: b_{s,block} = prod_j b_{s,j} for
    /// s before the block, b_{block,t} = prod_j b_{j,t} for t after it; len = 0
    /// inserts a row whose new entries are all 1_B.
    void contract(const int* a, const int* b, int rows, int start, int len, const SparseVec<F>& value,
                  const Elem& coef, VecBuilder<F>& out) const
    {
        const int new_rows = rows - len + 1;
        auto old_row = [&](int r) { return r < start ? r : r + len - 1; };
        std::vector<const SparseVec<F>*> diag(new_rows);
        for (int r = 0; r < new_rows; ++r)
            diag[r] = r == start ? &value : &a_basis_[a[old_row(r)]];
        std::vector<const SparseVec<F>*> upper(pair_count(new_rows));
        std::vector<SparseVec<F>> products;
        products.reserve(new_rows);
        std::vector<int> factors;
        for (int s = 0; s < new_rows; ++s)
            for (int t = s + 1; t < new_rows; ++t) {
                int q = pair_slot(new_rows, s, t);
                if (s != start && t != start) {
                    upper[q] = &b_basis_[b[pair_slot(rows, old_row(s), old_row(t))]];
                    continue;
                }
                factors.clear();
                for (int j = start; j < start + len; ++j)
                    factors.push_back(s == start ? b[pair_slot(rows, j, old_row(t))]
                                                 : b[pair_slot(rows, old_row(s), j)]);
                if (factors.size() == 1) {
                    upper[q] = &b_basis_[factors[0]];
                    continue;
                }
                products.push_back(b_product(factors));
                upper[q] = &products.back();
            }
        expand(new_rows, diag, upper, coef, out);
    }

    /// Index of rows [i, i+len) of the basis triangle (a, b) in layout(len).
    Index sub_index(const int* a, const int* b, int rows, int i, int len) const
    {
        return sub_index(layout(len), a, b, rows, i);
    }

    /// Same, with the layout of the sub-triangle already resolved.
    static Index sub_index(const TriangleLayout& lay, const int* a, const int* b, int rows, int i)
    {
        const int len = lay.rows();
        Index idx = 0;
        for (int u = 0; u < len; ++u)
            idx += static_cast<Index>(a[i + u]) * lay.a_weight(u);
        for (int u = 0; u < len; ++u)
            for (int v = u + 1; v < len; ++v)
                idx += static_cast<Index>(b[pair_slot(rows, i + u, i + v)]) * lay.b_weight(pair_slot(len, u, v));
        return idx;
    }

    /// Unchecked layout lookup (callers that already passed a budget check).
    const TriangleLayout& layout(int rows) const
    {
        std::lock_guard lock(mutex_);
        auto it = layouts_.find(rows);
        if (it == layouts_.end())
            it = layouts_.emplace(rows, std::make_unique<TriangleLayout>(dim_a(), dim_b(), rows)).first;
        return *it->second;
    }

private:
    TripleSpec spec_;
    EngineOptions options_;
    TypedTriple<F> t_;
    std::vector<SparseVec<F>> a_basis_, b_basis_;

    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<TriangleLayout>> layouts_;
    mutable std::map<std::string, std::shared_ptr<const SparseMat<F>>> cache_;
};

/// Matrix whose column t is rule(basis t), in degree dst coordinates.
template <Field F>
SparseMat<F> lift_basis_map(const Context<F>& ctx, int src_degree, int dst_degree,
                            const std::function<ChainVector<F>(const TriangleIndex&)>& rule)
{
    const TriangleLayout& src = ctx.chain_layout(src_degree);
    Index dst_dim = ctx.chain_dim(dst_degree);
    SparseMat<F> m(dst_dim, src.size());
    for (Index t = 0; t < src.size(); ++t) {
        ChainVector<F> v = rule(src.unpack(t));
        if (v.degree != dst_degree)
            throw DomainError("lift_basis_map: rule returned degree " + std::to_string(v.degree) + ", expected " +
                              std::to_string(dst_degree));
        if (!v.coords.empty() && v.coords.entries.back().index >= dst_dim)
            throw DomainError("lift_basis_map: rule output outside the destination space");
        m.set_col(t, std::move(v.coords));
    }
    return m;
}

/// Builds the matrix column by column from decoded source digits.
template <Field F, class Rule>
SparseMat<F> build_columns(const Context<F>& ctx, const TriangleLayout& src, Index dst_dim, Rule&& rule)
{
    SparseMat<F> m(dst_dim, src.size());
    std::vector<int> a(src.rows()), b(src.pairs());
    VecBuilder<F> out;
    for (Index t = 0; t < src.size(); ++t) {
        if (t > 0)
            src.advance(a.data(), b.data());
        rule(a.data(), b.data(), out);
        m.set_col(t, out.finish(ctx.field()));
    }
    return m;
}

template <Field F>
ChainVector<F> basis_chain(const Context<F>& ctx, const TriangleIndex& t)
{
    const TriangleLayout& lay = ctx.chain_layout(t.rows() - 1);
    return {t.rows() - 1, SparseVec<F>::unit(ctx.field(), lay.pack(t))};
}

template <Field F>
ChainVector<F> apply(const Context<F>& ctx, const SparseMat<F>& m, int dst_degree, const ChainVector<F>& x)
{
    return {dst_degree, apply(ctx.field(), m, x.coords)};
}

template <Field F>
Cochain<F> zero_cochain(const Context<F>& ctx, int n)
{
    return {n, SparseMat<F>(static_cast<Index>(ctx.dim_a()), ctx.input_dim(n))};
}

/// Cochain sending input basis `col` to A basis `row` and every other basis input to 0.
template <Field F>
Cochain<F> basis_cochain(const Context<F>& ctx, int n, Index row, Index col)
{
    Cochain<F> c = zero_cochain(ctx, n);
    c.values.set_col(col, SparseVec<F>::unit(ctx.field(), row));
    return c;
}

/// Column-major flattening: coordinate col * rows + row.
template <Field F>
SparseVec<F> flatten(const Cochain<F>& c)
{
    SparseVec<F> v;
    const Index rows = c.values.rows();
    for (Index j = 0; j < c.values.cols(); ++j)
        for (const auto& e : c.values.col(j).entries)
            v.entries.push_back({j * rows + e.index, e.value});
    return v;
}

template <Field F>
Cochain<F> unflatten(const Context<F>& ctx, int n, const SparseVec<F>& v)
{
    Cochain<F> c = zero_cochain(ctx, n);
    const Index rows = static_cast<Index>(ctx.dim_a());
    std::vector<SparseVec<F>> cols(c.values.cols());
    for (const auto& e : v.entries) {
        if (e.index / rows >= cols.size())
            throw DomainError("unflatten: coordinate outside C^" + std::to_string(n));
        cols[e.index / rows].entries.push_back({e.index % rows, e.value});
    }
    for (Index j = 0; j < cols.size(); ++j)
        c.values.set_col(j, std::move(cols[j]));
    return c;
}

extern template class Context<Rationals>;
extern template class Context<PrimeField>;

}  // namespace shc
