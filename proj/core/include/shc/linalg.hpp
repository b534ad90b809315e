#pragma once

// Sparse exact linear algebra over a Field: vectors, sparse-by-column
// matrices and a column echelon form with first-nonzero pivoting.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shc/errors.hpp"
#include "shc/field.hpp"

namespace shc {

using Index = std::uint32_t;

template <Field F>
struct SparseVec {
    using Elem = typename F::Elem;
    struct Entry {
        Index index;
        Elem value;
    };

    /// Strictly increasing indices, no stored zeros.
    std::vector<Entry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }

    const Elem* find(Index i) const
    {
        auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                   [](const Entry& e, Index k) { return e.index < k; });
        if (it == entries.end() || it->index != i)
            return nullptr;
        return &it->value;
    }

    static SparseVec unit(const F& f, Index i)
    {
        SparseVec v;
        v.entries.push_back({i, f.one()});
        return v;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b)
    {
        if (a.entries.size() != b.entries.size())
            return false;
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            if (a.entries[k].index != b.entries[k].index || !(a.entries[k].value == b.entries[k].value))
                return false;
        return true;
    }
};

/// Unordered accumulation of (index, value) terms, canonicalized by finish().
template <Field F>
class VecBuilder {
public:
    using Elem = typename F::Elem;
    using Entry = typename SparseVec<F>::Entry;

    void add(Index i, const Elem& v) { raw_.push_back({i, v}); }
    void add_scaled(const F& f, const SparseVec<F>& x, const Elem& c)
    {
        for (const auto& e : x.entries)
            raw_.push_back({e.index, f.mul(c, e.value)});
    }
    void add_all(const SparseVec<F>& x)
    {
        for (const auto& e : x.entries)
            raw_.push_back(e);
    }
    void clear() { raw_.clear(); }
    bool empty() const { return raw_.empty(); }

    SparseVec<F> finish(const F& f)
    {
        SparseVec<F> out;
        std::sort(raw_.begin(), raw_.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        out.entries.reserve(raw_.size());
        for (std::size_t k = 0; k < raw_.size();) {
            Index i = raw_[k].index;
            Elem acc = raw_[k].value;
            std::size_t l = k + 1;
            for (; l < raw_.size() && raw_[l].index == i; ++l)
                acc = f.add(acc, raw_[l].value);
            if (!f.is_zero(acc))
                out.entries.push_back({i, std::move(acc)});
            k = l;
        }
        raw_.clear();
        return out;
    }

private:
    std::vector<Entry> raw_;
};

/// y + c * x
template <Field F>
SparseVec<F> axpy(const F& f, const typename F::Elem& c, const SparseVec<F>& x, const SparseVec<F>& y)
{
    SparseVec<F> out;
    out.entries.reserve(x.nnz() + y.nnz());
    std::size_t i = 0, j = 0;
    while (i < x.nnz() || j < y.nnz()) {
        if (j == y.nnz() || (i < x.nnz() && x.entries[i].index < y.entries[j].index)) {
            auto v = f.mul(c, x.entries[i].value);
            if (!f.is_zero(v))
                out.entries.push_back({x.entries[i].index, std::move(v)});
            ++i;
        } else if (i == x.nnz() || y.entries[j].index < x.entries[i].index) {
            out.entries.push_back(y.entries[j]);
            ++j;
        } else {
            auto v = y.entries[j].value;
            f.add_mul(v, c, x.entries[i].value);
            if (!f.is_zero(v))
                out.entries.push_back({y.entries[j].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <Field F>
SparseVec<F> add(const F& f, const SparseVec<F>& x, const SparseVec<F>& y)
{
    return axpy(f, f.one(), x, y);
}

template <Field F>
SparseVec<F> sub(const F& f, const SparseVec<F>& x, const SparseVec<F>& y)
{
    return axpy(f, f.neg(f.one()), y, x);
}

template <Field F>
SparseVec<F> scale(const F& f, const typename F::Elem& c, const SparseVec<F>& x)
{
    SparseVec<F> out;
    if (f.is_zero(c))
        return out;
    out.entries.reserve(x.nnz());
    for (const auto& e : x.entries)
        out.entries.push_back({e.index, f.mul(c, e.value)});
    return out;
}

/// Sparse-by-column matrix.
template <Field F>
class SparseMat {
public:
    using Elem = typename F::Elem;

    SparseMat() = default;
    SparseMat(Index rows, Index cols) : rows_(rows), columns_(cols) {}

    static SparseMat identity(const F& f, Index n)
    {
        SparseMat m(n, n);
        for (Index i = 0; i < n; ++i)
            m.columns_[i] = SparseVec<F>::unit(f, i);
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(columns_.size()); }

    const SparseVec<F>& col(Index j) const { return columns_.at(j); }
    SparseVec<F>& col(Index j) { return columns_.at(j); }
    void set_col(Index j, SparseVec<F> v) { columns_.at(j) = std::move(v); }

    const std::vector<SparseVec<F>>& columns() const { return columns_; }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_)
            n += c.nnz();
        return n;
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b)
    {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    Index rows_ = 0;
    std::vector<SparseVec<F>> columns_;
};

template <Field F>
SparseVec<F> apply(const F& f, const SparseMat<F>& m, const SparseVec<F>& v)
{
    VecBuilder<F> b;
    for (const auto& e : v.entries) {
        if (e.index >= m.cols())
            throw DomainError("apply: vector index out of range");
        b.add_scaled(f, m.col(e.index), e.value);
    }
    return b.finish(f);
}

/// a * b
template <Field F>
SparseMat<F> multiply(const F& f, const SparseMat<F>& a, const SparseMat<F>& b)
{
    if (a.cols() != b.rows())
        throw DomainError("multiply: inner dimensions differ");
    SparseMat<F> out(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        out.set_col(j, apply(f, a, b.col(j)));
    return out;
}

template <Field F>
SparseMat<F> linear_combination(const F& f, const typename F::Elem& alpha, const SparseMat<F>& a,
                                const typename F::Elem& beta, const SparseMat<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("linear_combination: shape mismatch");
    SparseMat<F> out(a.rows(), a.cols());
    for (Index j = 0; j < a.cols(); ++j)
        out.set_col(j, axpy(f, beta, b.col(j), scale(f, alpha, a.col(j))));
    return out;
}

template <Field F>
SparseMat<F> add(const F& f, const SparseMat<F>& a, const SparseMat<F>& b)
{
    return linear_combination(f, f.one(), a, f.one(), b);
}

template <Field F>
SparseMat<F> sub(const F& f, const SparseMat<F>& a, const SparseMat<F>& b)
{
    return linear_combination(f, f.one(), a, f.neg(f.one()), b);
}

template <Field F>
SparseMat<F> scale(const F& f, const typename F::Elem& c, const SparseMat<F>& a)
{
    SparseMat<F> out(a.rows(), a.cols());
    for (Index j = 0; j < a.cols(); ++j)
        out.set_col(j, scale(f, c, a.col(j)));
    return out;
}

template <Field F>
SparseMat<F> transpose(const F& f, const SparseMat<F>& a)
{
    std::vector<VecBuilder<F>> rows(a.rows());
    for (Index j = 0; j < a.cols(); ++j)
        for (const auto& e : a.col(j).entries)
            rows[e.index].add(j, e.value);
    SparseMat<F> out(a.cols(), a.rows());
    for (Index i = 0; i < a.rows(); ++i)
        out.set_col(i, rows[i].finish(f));
    return out;
}

/// Blocks stacked top to bottom; all blocks share the column count.
template <Field F>
SparseMat<F> vstack(const std::vector<SparseMat<F>>& blocks)
{
    if (blocks.empty())
        return {};
    Index cols = blocks.front().cols();
    Index rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw DomainError("vstack: column counts differ");
        rows += b.rows();
    }
    SparseMat<F> out(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        SparseVec<F> c;
        Index offset = 0;
        for (const auto& b : blocks) {
            for (const auto& e : b.col(j).entries)
                c.entries.push_back({e.index + offset, e.value});
            offset += b.rows();
        }
        out.set_col(j, std::move(c));
    }
    return out;
}

/// First (column, row) where two equally shaped matrices differ.
template <Field F>
std::optional<std::pair<Index, Index>> first_difference(const F& f, const SparseMat<F>& a, const SparseMat<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("first_difference: shape mismatch");
    for (Index j = 0; j < a.cols(); ++j) {
        if (a.col(j) == b.col(j))
            continue;
        auto d = sub(f, a.col(j), b.col(j));
        return std::make_pair(j, d.entries.front().index);
    }
    return std::nullopt;
}

/// Linearly independent vectors in a coordinate space.
template <Field F>
struct SubspaceBasis {
    Index ambient_dim = 0;
    std::vector<SparseVec<F>> vectors;

    std::size_t dim() const { return vectors.size(); }
};

/// Incremental column echelon form. The pivot of a stored column is its first
/// nonzero row and is normalized to one. Generators may carry a tracking id so
/// that reductions report the combination of tracked generators they used.
template <Field F>
class Echelon {
public:
    using Elem = typename F::Elem;

    Echelon(F field, Index ambient) : f_(std::move(field)), ambient_(ambient), owner_(ambient, -1) {}

    Index ambient() const { return ambient_; }
    std::size_t rank() const { return columns_.size(); }
    bool is_pivot(Index row) const { return owner_.at(row) >= 0; }

    /// Remainder of v after full reduction: no entry sits on a pivot row.
    SparseVec<F> reduce(SparseVec<F> v) const { return reduce_impl(std::move(v), nullptr); }

    /// Remainder plus the combination of tracked generators removed from v.
    std::pair<SparseVec<F>, SparseVec<F>> reduce_tracked(SparseVec<F> v) const
    {
        VecBuilder<F> comb;
        auto rem = reduce_impl(std::move(v), &comb);
        return {std::move(rem), comb.finish(f_)};
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    /// Adds an untracked generator; returns false when v is already in the span.
    bool insert(SparseVec<F> v) { return insert_impl(std::move(v), std::nullopt); }

    /// Adds a generator with tracking id. When v is dependent, relation()
    /// afterwards holds coefficients c with v = sum c_k gen_k (tracked part).
    bool insert_tracked(SparseVec<F> v, Index id) { return insert_impl(std::move(v), id); }

    const SparseVec<F>& relation() const { return relation_; }

    /// Pivot rows in insertion order.
    std::vector<Index> pivot_rows() const
    {
        std::vector<Index> rows;
        rows.reserve(columns_.size());
        for (const auto& c : columns_)
            rows.push_back(c.entries.front().index);
        return rows;
    }

    const F& field() const { return f_; }

private:
    SparseVec<F> reduce_impl(SparseVec<F> v, VecBuilder<F>* comb) const
    {
        check_range(v);
        std::size_t pos = 0;
        while (pos < v.entries.size()) {
            Index row = v.entries[pos].index;
            int owner = owner_[row];
            if (owner < 0) {
                ++pos;
                continue;
            }
            Elem coef = v.entries[pos].value;
            const auto& col = columns_[owner];
            if (comb)
                comb->add_scaled(f_, combos_[owner], coef);
            // v -= coef * col; col has no entries before row.
            SparseVec<F> merged;
            merged.entries.reserve(v.entries.size() + col.nnz());
            for (std::size_t k = 0; k < pos; ++k)
                merged.entries.push_back(std::move(v.entries[k]));
            Elem minus = f_.neg(coef);
            std::size_t i = pos, j = 0;
            while (i < v.entries.size() || j < col.nnz()) {
                if (j == col.nnz() || (i < v.entries.size() && v.entries[i].index < col.entries[j].index)) {
                    merged.entries.push_back(std::move(v.entries[i++]));
                } else if (i == v.entries.size() || col.entries[j].index < v.entries[i].index) {
                    merged.entries.push_back({col.entries[j].index, f_.mul(minus, col.entries[j].value)});
                    ++j;
                } else {
                    Elem x = std::move(v.entries[i].value);
                    f_.add_mul(x, minus, col.entries[j].value);
                    if (!f_.is_zero(x))
                        merged.entries.push_back({v.entries[i].index, std::move(x)});
                    ++i;
                    ++j;
                }
            }
            v = std::move(merged);
        }
        return v;
    }

    bool insert_impl(SparseVec<F> v, std::optional<Index> id)
    {
        VecBuilder<F> comb;
        auto rem = reduce_impl(std::move(v), id ? &comb : nullptr);
        auto used = comb.finish(f_);
        if (rem.empty()) {
            relation_ = std::move(used);
            return false;
        }
        Elem lead_inv = f_.inv(rem.entries.front().value);
        rem = scale(f_, lead_inv, rem);
        SparseVec<F> combo;
        if (id) {
            // rem = gen_id - used, in tracked coordinates.
            VecBuilder<F> c;
            c.add(*id, f_.one());
            c.add_scaled(f_, used, f_.neg(f_.one()));
            combo = scale(f_, lead_inv, c.finish(f_));
        }
        owner_[rem.entries.front().index] = static_cast<int>(columns_.size());
        columns_.push_back(std::move(rem));
        combos_.push_back(std::move(combo));
        return true;
    }

    void check_range(const SparseVec<F>& v) const
    {
        if (!v.empty() && v.entries.back().index >= ambient_)
            throw DomainError("echelon: vector index out of ambient range");
    }

    F f_;
    Index ambient_;
    std::vector<int> owner_;
    std::vector<SparseVec<F>> columns_;
    std::vector<SparseVec<F>> combos_;
    SparseVec<F> relation_;
};

template <Field F>
std::size_t rank(const F& f, const SparseMat<F>& m)
{
    Echelon<F> e(f, m.rows());
    for (Index j = 0; j < m.cols() && e.rank() < m.rows(); ++j)
        e.insert(m.col(j));
    return e.rank();
}

/// Basis of {v : m v = 0}, one vector per non-pivot column, in column order.
template <Field F>
SubspaceBasis<F> nullspace_basis(const F& f, const SparseMat<F>& m)
{
    SubspaceBasis<F> out{m.cols(), {}};
    Echelon<F> e(f, m.rows());
    for (Index j = 0; j < m.cols(); ++j) {
        if (e.insert_tracked(m.col(j), j))
            continue;
        VecBuilder<F> k;
        k.add(j, f.one());
        k.add_scaled(f, e.relation(), f.neg(f.one()));
        out.vectors.push_back(k.finish(f));
    }
    return out;
}

/// Basis of the image: the independent columns of m, in column order.
template <Field F>
SubspaceBasis<F> column_space_basis(const F& f, const SparseMat<F>& m)
{
    SubspaceBasis<F> out{m.rows(), {}};
    Echelon<F> e(f, m.rows());
    for (Index j = 0; j < m.cols() && e.rank() < m.rows(); ++j)
        if (e.insert(m.col(j)))
            out.vectors.push_back(m.col(j));
    return out;
}

/// Coefficients c with v = sum c_k b.vectors[k], or nullopt when v is outside the span.
template <Field F>
std::optional<SparseVec<F>> solve_in_span(const F& f, const SubspaceBasis<F>& b, const SparseVec<F>& v)
{
    if (!v.empty() && v.entries.back().index >= b.ambient_dim)
        throw DomainError("in_span: vector has more coordinates than the ambient space");
    Echelon<F> e(f, b.ambient_dim);
    for (Index k = 0; k < b.vectors.size(); ++k)
        if (!e.insert_tracked(b.vectors[k], k))
            throw DomainError("in_span: basis vectors are linearly dependent");
    auto [rem, comb] = e.reduce_tracked(v);
    if (!rem.empty())
        return std::nullopt;
    return comb;
}

template <Field F>
bool in_span(const F& f, const SubspaceBasis<F>& b, const SparseVec<F>& v)
{
    return solve_in_span(f, b, v).has_value();
}

/// dim(big) - dim(small), with small required to lie inside big.
template <Field F>
std::size_t quotient_dim(const F& f, const SubspaceBasis<F>& big, const SubspaceBasis<F>& small)
{
    if (big.ambient_dim != small.ambient_dim)
        throw DomainError("quotient_dim: ambient dimensions differ");
    Echelon<F> e(f, big.ambient_dim);
    for (const auto& v : big.vectors)
        e.insert(v);
    for (const auto& v : small.vectors)
        if (!e.contains(v))
            throw DomainError("quotient_dim: small subspace is not contained in big");
    return e.rank() - small.dim();
}

extern template class Echelon<Rationals>;
extern template class Echelon<PrimeField>;

}  // namespace shc
