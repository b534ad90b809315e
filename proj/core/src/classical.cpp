#include "shc/classical.hpp"

#include <algorithm>

namespace shc {

namespace {

template <Field F>
typename F::Elem sign(const F& f, long exponent)
{
    return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

/// Basis tensors e_{x_0} (x) ... (x) e_{x_{len-1}}, index sum x_k dA^k.
struct Tensors {
    int dim;
    int len;

    Index size() const
    {
        Index s = 1;
        for (int k = 0; k < len; ++k)
            s *= static_cast<Index>(dim);
        return s;
    }
    std::vector<int> decode(Index idx) const
    {
        std::vector<int> x(len);
        for (int k = 0; k < len; ++k) {
            x[k] = static_cast<int>(idx % dim);
            idx /= dim;
        }
        return x;
    }
    Index encode(const std::vector<int>& x) const
    {
        Index idx = 0;
        for (int k = len - 1; k >= 0; --k)
            idx = idx * dim + static_cast<Index>(x[k]);
        return idx;
    }
};

template <Field F>
class Classical {
public:
    Classical(const TypedAlgebra<F>& A, const F& field) : A_(A), f_(field) {}

    /// Adds coef * (x with positions [i, i+1] replaced by their product).
    void merge(std::vector<int> x, int i, const typename F::Elem& coef, VecBuilder<F>& out) const
    {
        const auto& prod = A_.product(x[i], x[i + 1]);
        x.erase(x.begin() + i + 1);
        Tensors t{A_.dim, static_cast<int>(x.size())};
        for (const auto& e : prod.entries) {
            x[i] = static_cast<int>(e.index);
            out.add(t.encode(x), f_.mul(coef, e.value));
        }
    }

    SparseMat<F> boundary(int p) const
    {
        Tensors src{A_.dim, p + 1};
        SparseMat<F> m(Tensors{A_.dim, p}.size(), src.size());
        VecBuilder<F> out;
        for (Index idx = 0; idx < src.size(); ++idx) {
            auto x = src.decode(idx);
            for (int i = 0; i < p; ++i)
                merge(x, i, sign(f_, i), out);
            std::vector<int> w(x.begin(), x.end() - 1);
            w.insert(w.begin(), x[p]);
            merge(w, 0, sign(f_, p), out);
            m.set_col(idx, out.finish(f_));
        }
        return m;
    }

    /// d_i merges positions i, i+1 for i < p; d_p = a_p a_0 (x) a_1 ... a_{p-1}.
    SparseMat<F> face(int i, int p) const
    {
        Tensors src{A_.dim, p + 1};
        SparseMat<F> m(Tensors{A_.dim, p}.size(), src.size());
        VecBuilder<F> out;
        for (Index idx = 0; idx < src.size(); ++idx) {
            auto x = src.decode(idx);
            if (i < p) {
                merge(x, i, f_.one(), out);
            } else {
                std::vector<int> w(x.begin(), x.end() - 1);
                w.insert(w.begin(), x[p]);
                merge(w, 0, f_.one(), out);
            }
            m.set_col(idx, out.finish(f_));
        }
        return m;
    }

    /// s_j inserts 1 after position j.
    SparseMat<F> degeneracy(int j, int p) const
    {
        Tensors src{A_.dim, p + 1}, dst{A_.dim, p + 2};
        SparseMat<F> m(dst.size(), src.size());
        VecBuilder<F> out;
        for (Index idx = 0; idx < src.size(); ++idx) {
            auto y = src.decode(idx);
            y.insert(y.begin() + j + 1, 0);
            for (const auto& e : A_.unit.entries) {
                y[j + 1] = static_cast<int>(e.index);
                out.add(dst.encode(y), e.value);
            }
            m.set_col(idx, out.finish(f_));
        }
        return m;
    }

    SparseMat<F> rotation(int p) const
    {
        Tensors t{A_.dim, p + 1};
        SparseMat<F> m(t.size(), t.size());
        for (Index idx = 0; idx < t.size(); ++idx) {
            auto x = t.decode(idx);
            std::rotate(x.rbegin(), x.rbegin() + 1, x.rend());
            m.set_col(idx, SparseVec<F>::unit(f_, t.encode(x)));
        }
        return m;
    }

    /// sum_i (-1)^{pi} 1 (x) a_i ... a_p (x) a_0 ... a_{i-1}
    SparseMat<F> connes(int p) const
    {
        Tensors src{A_.dim, p + 1}, dst{A_.dim, p + 2};
        SparseMat<F> m(dst.size(), src.size());
        VecBuilder<F> out;
        for (Index idx = 0; idx < src.size(); ++idx) {
            auto x = src.decode(idx);
            for (int i = 0; i <= p; ++i) {
                std::vector<int> y(1, 0);
                for (int k = 0; k <= p; ++k)
                    y.push_back(x[(i + k) % (p + 1)]);
                for (const auto& e : A_.unit.entries) {
                    y[0] = static_cast<int>(e.index);
                    out.add(dst.encode(y), f_.mul(sign(f_, static_cast<long>(p) * i), e.value));
                }
            }
            m.set_col(idx, out.finish(f_));
        }
        return m;
    }

    /// (delta g)(x_1..x_{n+1}) = x_1 g(x_2..) + sum_i (-1)^i g(.., x_i x_{i+1}, ..) + (-1)^{n+1} g(x_1..x_n) x_{n+1},
    /// on coordinates col * dA + row.
    SparseMat<F> coboundary(int n) const
    {
        const Index dA = static_cast<Index>(A_.dim);
        Tensors in{A_.dim, n}, out_in{A_.dim, n + 1};
        SparseMat<F> m(out_in.size() * dA, in.size() * dA);
        VecBuilder<F> out;
        for (Index c = 0; c < in.size(); ++c)
            for (Index r = 0; r < dA; ++r) {
                for (Index xi = 0; xi < out_in.size(); ++xi) {
                    auto x = out_in.decode(xi);
                    auto emit = [&](const SparseVec<F>& value, const typename F::Elem& coef) {
                        for (const auto& e : value.entries)
                            out.add(xi * dA + e.index, f_.mul(coef, e.value));
                    };
                    if (in.encode(std::vector<int>(x.begin() + 1, x.end())) == c)
                        emit(A_.product(x[0], static_cast<int>(r)), f_.one());
                    for (int i = 0; i < n; ++i) {
                        const auto& prod = A_.product(x[i], x[i + 1]);
                        std::vector<int> y = x;
                        y.erase(y.begin() + i + 1);
                        for (const auto& e : prod.entries) {
                            y[i] = static_cast<int>(e.index);
                            if (in.encode(y) == c)
                                out.add(xi * dA + r, f_.mul(sign(f_, i + 1), e.value));
                        }
                    }
                    if (in.encode(std::vector<int>(x.begin(), x.end() - 1)) == c)
                        emit(A_.product(static_cast<int>(r), x[n]), sign(f_, n + 1));
                }
                m.set_col(c * dA + r, out.finish(f_));
            }
        return m;
    }

    /// Derivation matrices compose as endomorphisms of A; coordinates col * dA + row.
    SparseVec<F> commutator(const SparseVec<F>& d1, const SparseVec<F>& d2) const
    {
        const Index dA = static_cast<Index>(A_.dim);
        auto as_map = [&](const SparseVec<F>& v) {
            SparseMat<F> m(dA, dA);
            std::vector<VecBuilder<F>> cols(dA);
            for (const auto& e : v.entries)
                cols[e.index / dA].add(e.index % dA, e.value);
            for (Index c = 0; c < dA; ++c)
                m.set_col(c, cols[c].finish(f_));
            return m;
        };
        auto m1 = as_map(d1), m2 = as_map(d2);
        auto comm = sub(f_, multiply(f_, m1, m2), multiply(f_, m2, m1));
        SparseVec<F> v;
        for (Index c = 0; c < dA; ++c)
            for (const auto& e : comm.col(c).entries)
                v.entries.push_back({c * dA + e.index, e.value});
        return v;
    }

private:
    const TypedAlgebra<F>& A_;
    const F& f_;
};

template <Field F>
typename F::Elem power(const F& f, const typename F::Elem& u, long e)
{
    auto base = e < 0 ? f.inv(u) : u;
    auto acc = f.one();
    for (long k = 0; k < (e < 0 ? -e : e); ++k)
        acc = f.mul(acc, base);
    return acc;
}

}  // namespace

template <Field F>
SuiteResult classical_compare(const Context<F>& ctx, int max_degree)
{
    if (ctx.dim_b() != 1)
        throw PreconditionError("classical comparison needs dim B = 1, got dim B = " + std::to_string(ctx.dim_b()));
    if (max_degree < 0)
        throw DomainError("classical comparison: degree bound must be >= 0");
    const F& field = ctx.field();
    const auto& t = ctx.triple();
    const auto* u_ptr = t.B.unit.find(0);
    if (!u_ptr)
        throw InputError("B has a zero unit");
    const auto u = *u_ptr;
    const int D = max_degree;

    SuiteResult r;
    r.suite = "classical";
    r.triple = ctx.spec().name;
    r.field = field.name();
    r.bounds = SuiteBounds{D, D, 0};
    r.mutation = ctx.mutation().describe();

    auto fail = [&](Failure f) {
        ++r.failure_count;
        if (r.failures.size() < kMaxReportedFailures)
            r.failures.push_back(std::move(f));
    };
    auto equal = [&](const std::string& check, const std::string& at, const SparseMat<F>& secondary,
                     const SparseMat<F>& classical) {
        ++r.checks;
        if (secondary.rows() != classical.rows() || secondary.cols() != classical.cols()) {
            fail({check, at, "classical shape " + std::to_string(classical.rows()) + "x" + std::to_string(classical.cols()),
                  "secondary shape " + std::to_string(secondary.rows()) + "x" + std::to_string(secondary.cols())});
            return;
        }
        if (auto d = first_difference(field, secondary, classical)) {
            auto value = [&](const SparseMat<F>& m) {
                const auto* v = m.col(d->first).find(d->second);
                return v ? field.format(*v) : std::string("0");
            };
            fail({check, at + "; column " + std::to_string(d->first) + ", row " + std::to_string(d->second),
                  value(classical), value(secondary)});
        }
    };
    auto count = [&](const std::string& check, const std::string& at, Index secondary, Index classical) {
        ++r.checks;
        if (secondary != classical)
            fail({check, at, std::to_string(classical), std::to_string(secondary)});
    };

    Classical<F> cl(t.A, field);
    // Chain basis a_0..a_p maps to u^{p(p+1)/2} times the secondary basis chain;
    // cochain coordinates scale by u^{-n(n-1)/2}.
    auto chain_scale = [&](int p) { return power(field, u, static_cast<long>(p) * (p + 1) / 2); };
    auto cochain_scale = [&](int n) { return power(field, u, -static_cast<long>(n) * (n - 1) / 2); };

    std::vector<SparseMat<F>> cl_d(D + 2);
    for (int p = 1; p <= D + 1; ++p) {
        cl_d[p] = cl.boundary(p);
        if (p <= D)
            equal("boundary", "C_" + std::to_string(p), scale(field, chain_scale(p), *boundary_matrix(ctx, p)),
                  scale(field, chain_scale(p - 1), cl_d[p]));
    }
    for (int p = 1; p <= D; ++p)
        for (int i = 0; i <= p; ++i)
            equal("face d_" + std::to_string(i), "C_" + std::to_string(p),
                  scale(field, chain_scale(p), *face_matrix(ctx, i, p)), scale(field, chain_scale(p - 1), cl.face(i, p)));
    for (int p = 0; p + 1 <= D; ++p)
        for (int j = 0; j <= p; ++j)
            equal("degeneracy s_" + std::to_string(j), "C_" + std::to_string(p),
                  scale(field, chain_scale(p), *degeneracy_matrix(ctx, j, p)),
                  scale(field, chain_scale(p + 1), cl.degeneracy(j, p)));
    for (int p = 0; p <= D; ++p)
        equal("cyclic operator", "C_" + std::to_string(p), *cyclic_t_matrix(ctx, p), cl.rotation(p));
    for (int p = 0; p + 1 <= D; ++p)
        equal("Connes operator", "C_" + std::to_string(p), scale(field, chain_scale(p), *connes_B_matrix(ctx, p)),
              scale(field, chain_scale(p + 1), cl.connes(p)));
    std::vector<SparseMat<F>> cl_delta(D + 1);
    for (int n = 0; n <= D; ++n) {
        cl_delta[n] = cl.coboundary(n);
        if (n + 1 <= D)
            equal("coboundary", "C^" + std::to_string(n), scale(field, cochain_scale(n), *delta_eps_matrix(ctx, n)),
                  scale(field, cochain_scale(n + 1), cl_delta[n]));
    }

    auto hom = homology(ctx, D).betti();
    for (int p = 0; p <= D; ++p) {
        const Index dim = Tensors{t.A.dim, p + 1}.size();
        const Index out = p > 0 ? static_cast<Index>(rank(field, cl_d[p])) : 0;
        count("Betti number", "H_" + std::to_string(p), hom[p], dim - out - static_cast<Index>(rank(field, cl_d[p + 1])));
    }
    auto coh = cohomology(ctx, D).betti();
    for (int n = 0; n <= D; ++n) {
        const Index dim = Tensors{t.A.dim, n}.size() * static_cast<Index>(t.A.dim);
        const Index in = n > 0 ? static_cast<Index>(rank(field, cl_delta[n - 1])) : 0;
        count("Betti number", "H^" + std::to_string(n), coh[n], dim - in - static_cast<Index>(rank(field, cl_delta[n])));
    }

    // Derivations: the secondary bracket of degree-1 cocycles is their commutator.
    if (D >= 1) {
        auto derivations = nullspace_basis(field, cl_delta[1]).vectors;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < derivations.size(); ++i)
            for (std::size_t j = 0; j < derivations.size(); ++j) {
                auto expected = cl.commutator(derivations[i], derivations[j]);
                if (!expected.empty())
                    ++nonzero;
                auto got = flatten(bracket(ctx, unflatten(ctx, 1, derivations[i]), unflatten(ctx, 1, derivations[j])));
                ++r.checks;
                if (!(got == expected))
                    fail({"bracket of derivations", "derivations " + std::to_string(i) + " and " + std::to_string(j),
                          "commutator", "different cochain"});
            }
        r.notes.push_back(std::to_string(derivations.size()) + " derivations, " + std::to_string(nonzero) +
                          " nonzero commutators");
    }
    return r;
}

template SuiteResult classical_compare(const Context<Rationals>&, int);
template SuiteResult classical_compare(const Context<PrimeField>&, int);

}  // namespace shc
