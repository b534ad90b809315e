#include "shc/bv_probe.hpp"

#include "shc/verify.hpp"

namespace shc {

namespace {

template <Field F>
typename F::Elem sign(const F& f, long exponent)
{
    return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

std::string superscript(int n)
{
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char ch : std::to_string(n))
        s += digits[ch - '0'];
    return s;
}

template <Field F>
std::vector<std::vector<std::string>> dense_strings(const F& field, const SparseMat<F>& m)
{
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols(), field.format(field.zero())));
    for (Index j = 0; j < m.cols(); ++j)
        for (const auto& e : m.col(j).entries)
            out[e.index][j] = field.format(e.value);
    return out;
}

}  // namespace

template <Field F>
ChainVector<F> unit_class(const Context<F>& ctx)
{
    return {0, ctx.triple().A.unit};
}

template <Field F>
BvReport bv_probe(const Context<F>& ctx, const ChainVector<F>& c, int max_degree)
{
    const F& field = ctx.field();
    const int k = c.degree;
    if (k < 0)
        throw DomainError("bv_probe: class degree must be >= 0");
    if (max_degree < 0)
        throw DomainError("bv_probe: degree bound must be >= 0");
    if (!c.coords.empty() && c.coords.entries.back().index >= ctx.chain_dim(k))
        throw DomainError("bv_probe: class coordinates outside C_" + std::to_string(k));
    if (k > 0) {
        auto dc = apply(field, *boundary_matrix(ctx, k), c.coords);
        if (!dc.empty())
            throw PreconditionError("bv_probe: c is not a cycle; its boundary has coefficient " +
                                    field.format(dc.entries.front().value) + " at " +
                                    describe_chain(ctx, k - 1, dc.entries.front().index));
    }

    BvReport r;
    r.triple = ctx.spec().name;
    r.field = field.name();
    r.class_degree = k;
    r.max_degree = max_degree;

    // Homology classes in degrees 0..k, modulo boundaries and degenerate chains.
    auto hom = homology(ctx, k);
    std::vector<ClassCoordinates<F>> hcoords;
    for (int q = 0; q <= k; ++q) {
        ClassCoordinates<F> cc(field, ctx.chain_dim(q));
        for (int j = 0; j < q; ++j)
            for (const auto& col : degeneracy_matrix(ctx, j, q - 1)->columns())
                cc.add_trivial(col);
        for (const auto& col : boundary_matrix(ctx, q + 1)->columns())
            cc.add_trivial(col);
        for (const auto& v : hom.degrees[q].representatives)
            cc.add_representative(v);
        hcoords.push_back(std::move(cc));
    }
    auto homology_coords = [&](int q, const SparseVec<F>& v) {
        auto c = hcoords[q].coordinates(v);
        if (!c)
            throw Error("bv_probe: chain is not a cycle modulo degenerate chains");
        return *c;
    };

    r.b_class_trivial = boundary_span(ctx, k + 1, true).contains(apply(field, *connes_B_matrix(ctx, k), c.coords));

    // Cohomology classes with conormalized representatives.
    auto coh = conormalized_cohomology(ctx, max_degree);
    std::vector<std::vector<Cochain<F>>> reps(max_degree + 1);
    std::vector<ClassCoordinates<F>> ccoords;
    for (int n = 0; n <= max_degree; ++n) {
        ClassCoordinates<F> cc(field, ctx.cochain_dim(n));
        if (n > 0)
            for (const auto& col : delta_eps_matrix(ctx, n - 1)->columns())
                cc.add_trivial(col);
        for (const auto& v : coh.degrees[n].representatives) {
            cc.add_representative(v);
            reps[n].push_back(unflatten(ctx, n, v));
        }
        ccoords.push_back(std::move(cc));
    }

    std::vector<SparseMat<F>> theta;
    for (int m = 0; m <= max_degree; ++m) {
        const int q = k - m;
        BvDegree d;
        d.degree = m;
        d.cohomology_dim = static_cast<Index>(reps[m].size());
        d.homology_dim = q >= 0 ? hom.degrees[q].betti : 0;
        SparseMat<F> t(d.homology_dim, d.cohomology_dim);
        if (q >= 0)
            for (Index j = 0; j < d.cohomology_dim; ++j)
                t.set_col(j, homology_coords(q, apply(field, cap_matrix(ctx, reps[m][j], k), c.coords)));
        d.rank = static_cast<Index>(rank(field, t));
        d.bijective = d.homology_dim == d.cohomology_dim && d.rank == d.cohomology_dim;
        if (!d.bijective && !r.failing_degree)
            r.failing_degree = m;
        theta.push_back(std::move(t));
        r.degrees.push_back(std::move(d));
    }

    if (!r.b_class_trivial) {
        r.status = "not applicable: B[c] is not trivial";
        return r;
    }
    if (r.failing_degree) {
        r.status = "not applicable: Θ" + superscript(*r.failing_degree) + " not bijective";
        return r;
    }
    r.applicable = true;

    // Delta_m : H^m -> H^{m-1} = Theta_{m-1}^{-1} B Theta_m.
    std::vector<SparseMat<F>> delta(max_degree + 1);
    delta[0] = SparseMat<F>(0, static_cast<Index>(reps[0].size()));
    for (int m = 1; m <= max_degree; ++m) {
        const int q = k - m;
        SubspaceBasis<F> cols{theta[m - 1].rows(), theta[m - 1].columns()};
        SparseMat<F> dm(static_cast<Index>(reps[m - 1].size()), static_cast<Index>(reps[m].size()));
        for (Index j = 0; j < reps[m].size(); ++j) {
            auto y = apply(field, cap_matrix(ctx, reps[m][j], k), c.coords);
            auto by = homology_coords(q + 1, apply(field, *connes_B_matrix(ctx, q), y));
            auto z = solve_in_span(field, cols, by);
            if (!z)
                throw Error("bv_probe: Theta is not invertible");
            dm.set_col(j, std::move(*z));
        }
        delta[m] = std::move(dm);
    }
    r.delta_zero = true;
    for (int m = 0; m <= max_degree; ++m) {
        r.delta_zero = r.delta_zero && delta[m].is_zero();
        r.degrees[m].delta = dense_strings(field, delta[m]);
    }
    r.delta_squared_zero = true;
    for (int m = 2; m <= max_degree; ++m)
        if (!multiply(field, delta[m - 1], delta[m]).is_zero()) {
            r.delta_squared_zero = false;
            r.failures.push_back("Delta^2 != 0 on H" + superscript(m));
        }

    // Delta on a cocycle of degree n; nullopt stands for zero in degree -1.
    auto delta_of = [&](const Cochain<F>& h) -> std::optional<Cochain<F>> {
        const int n = h.degree;
        if (n == 0)
            return std::nullopt;
        auto coords = ccoords[n].coordinates(flatten(h));
        if (!coords)
            throw Error("bv_probe: cochain is not a cocycle");
        auto image = apply(field, delta[n], *coords);
        Cochain<F> out = zero_cochain(ctx, n - 1);
        for (const auto& e : image.entries)
            out = add(field, out, scale(field, e.value, reps[n - 1][e.index]));
        return out;
    };

    for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n <= max_degree; ++n) {
            if (m + n - 1 < 0)
                continue;
            auto trivial = coboundary_span(ctx, m + n - 1);
            for (std::size_t a = 0; a < reps[m].size(); ++a)
                for (std::size_t b = 0; b < reps[n].size(); ++b) {
                    const auto& f = reps[m][a];
                    const auto& g = reps[n][b];
                    Cochain<F> inner = zero_cochain(ctx, m + n - 1);
                    if (auto d = delta_of(cup(ctx, f, g)))
                        inner = add(field, inner, *d);
                    if (auto df = delta_of(f))
                        inner = sub(field, inner, cup(ctx, *df, g));
                    if (auto dg = delta_of(g))
                        inner = sub(field, inner, scale(field, sign(field, m), cup(ctx, f, *dg)));
                    auto rhs = scale(field, field.neg(sign(field, m)), inner);
                    ++r.identity_checks;
                    if (!trivial.contains(flatten(sub(field, bracket(ctx, f, g), rhs)))) {
                        ++r.identity_failures;
                        r.failures.push_back("generating identity fails for H" + superscript(m) + " class " +
                                             std::to_string(a) + ", H" + superscript(n) + " class " + std::to_string(b));
                    }
                }
        }

    if (r.identity_failures > 0)
        r.status = "applicable but identity fails";
    else if (!r.delta_squared_zero)
        r.status = "applicable but Δ² ≠ 0";
    else
        r.status = std::string("applicable, ") + (r.delta_zero ? "Δ=0" : "Δ≠0") + ", identity holds";
    return r;
}

template ChainVector<Rationals> unit_class(const Context<Rationals>&);
template ChainVector<PrimeField> unit_class(const Context<PrimeField>&);
template BvReport bv_probe(const Context<Rationals>&, const ChainVector<Rationals>&, int);
template BvReport bv_probe(const Context<PrimeField>&, const ChainVector<PrimeField>&, int);

}  // namespace shc
