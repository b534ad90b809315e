#include "shc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

namespace shc {

namespace {

using Describe = std::function<std::string(Index)>;

const std::vector<std::string> kSuites = {"differential", "operad",       "compmodule",  "cyclic",
                                          "simplicial",   "descend",      "gradedmodule", "precalculus",
                                          "cartan",       "gerstenhaber"};

template <Field F>
typename F::Elem sign(const F& f, long exponent)
{
    return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

std::string format_triangle(const TriangleIndex& t)
{
    std::ostringstream os;
    os << "a=(";
    for (std::size_t k = 0; k < t.a.size(); ++k)
        os << (k ? "," : "") << t.a[k];
    os << ") b=(";
    for (std::size_t k = 0; k < t.b.size(); ++k)
        os << (k ? "," : "") << t.b[k];
    os << ")";
    return os.str();
}

template <Field F>
class Runner {
public:
    Runner(const Context<F>& ctx, const SuiteBounds& bounds, SuiteResult& result)
        : ctx(ctx), field(ctx.field()), D(bounds.max_degree),
          M(std::min(bounds.max_cochain_degree, bounds.max_degree)), seed(bounds.seed), r(result)
    {
    }

    const Context<F>& ctx;
    const F& field;
    const int D;
    const int M;
    const std::uint64_t seed;
    SuiteResult& r;

    // Describers for coordinates.

    Describe chain(int p) const
    {
        return [this, p](Index i) { return "C_" + std::to_string(p) + "[" + format_triangle(ctx.chain_layout(p).unpack(i)) + "]"; };
    }
    Describe input(int n) const
    {
        return [this, n](Index i) { return "input " + format_triangle(ctx.input_layout(n).unpack(i)); };
    }
    Describe a_coord() const
    {
        return [](Index i) { return "A_" + std::to_string(i); };
    }
    Describe flat(int n) const
    {
        return [this, n](Index i) { return describe_cochain(ctx, n, i); };
    }
    Describe normalized(const NormalizedChains<F>& nc) const
    {
        return [this, &nc](Index k) { return "normalized " + chain(nc.degree())(nc.section_row(k)); };
    }

    std::string basis_name(int n, Index k) const { return describe_cochain(ctx, n, k); }

    Cochain<F> basis(int n, Index k) const
    {
        const Index dA = static_cast<Index>(ctx.dim_a());
        return basis_cochain(ctx, n, k % dA, k / dA);
    }

    // Recording.

    void fail(Failure f)
    {
        ++r.failure_count;
        if (r.failures.size() < kMaxReportedFailures)
            r.failures.push_back(std::move(f));
    }

    std::string entry(const SparseMat<F>& m, Index j, Index i) const
    {
        const auto* v = m.col(j).find(i);
        return v ? field.format(*v) : "0";
    }

    static std::string shape(const SparseMat<F>& m)
    {
        return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }

    bool matrix_equal(const std::string& check, const std::string& inputs, const SparseMat<F>& got,
                      const SparseMat<F>& expected, const Describe& col, const Describe& row)
    {
        ++r.checks;
        if (got.rows() != expected.rows() || got.cols() != expected.cols()) {
            fail({check, inputs, "shape " + shape(expected), "shape " + shape(got)});
            return false;
        }
        auto d = first_difference(field, got, expected);
        if (!d)
            return true;
        auto [j, i] = *d;
        fail({check, inputs + "; on " + col(j) + ", coordinate " + row(i), entry(expected, j, i), entry(got, j, i)});
        return false;
    }

    bool is_zero(const std::string& check, const std::string& inputs, const SparseMat<F>& m, const Describe& col,
                 const Describe& row)
    {
        return matrix_equal(check, inputs, m, SparseMat<F>(m.rows(), m.cols()), col, row);
    }

    bool cochain_equal(const std::string& check, const std::string& inputs, const Cochain<F>& got,
                       const Cochain<F>& expected, const Describe& row)
    {
        if (got.degree != expected.degree) {
            ++r.checks;
            fail({check, inputs, "degree " + std::to_string(expected.degree), "degree " + std::to_string(got.degree)});
            return false;
        }
        return matrix_equal(check, inputs, got.values, expected.values, input(got.degree), row);
    }

    bool in_span(const std::string& check, const std::string& inputs, const Echelon<F>& span, const SparseVec<F>& v,
                 const Describe& coord)
    {
        ++r.checks;
        auto rem = span.reduce(v);
        if (rem.empty())
            return true;
        const auto& e = rem.entries.front();
        fail({check, inputs, "0 modulo trivial elements",
              "remainder " + field.format(e.value) + " at " + coord(e.index)});
        return false;
    }

    bool count_equal(const std::string& check, const std::string& inputs, Index got, Index expected)
    {
        ++r.checks;
        if (got == expected)
            return true;
        fail({check, inputs, std::to_string(expected), std::to_string(got)});
        return false;
    }

    // Cached matrices.

    std::shared_ptr<const SparseMat<F>> d(int p) const { return boundary_matrix(ctx, p); }
    std::shared_ptr<const SparseMat<F>> t(int p) const { return cyclic_t_matrix(ctx, p); }

    // Suites.

    void differential()
    {
        for (int p = 2; p <= D; ++p)
            is_zero("boundary squared", "C_" + std::to_string(p), multiply(field, *d(p - 1), *d(p)), chain(p),
                    chain(p - 2));
        for (int n = 0; n + 1 <= D; ++n)
            is_zero("coboundary squared", "C^" + std::to_string(n),
                    multiply(field, *delta_eps_matrix(ctx, n + 1), *delta_eps_matrix(ctx, n)), flat(n), flat(n + 2));
    }

    void operad()
    {
        const auto el = operad_elems(ctx);
        if (D >= 3)
            cochain_equal("mu o_1 mu = mu o_2 mu", "mu", comp(ctx, el.mu, 1, el.mu), comp(ctx, el.mu, 2, el.mu),
                          a_coord());
        if (D >= 2)
            for (int i = 1; i <= 2; ++i)
                cochain_equal("mu o_i e0 = 1", "i = " + std::to_string(i), comp(ctx, el.mu, i, el.e0), el.one,
                              a_coord());

        for (int n = 1; n <= D; ++n) {
            const auto u = universal_cochain(ctx, n);
            for (int i = 1; i <= n; ++i)
                cochain_equal("f o_i 1 = f", "f universal of degree " + std::to_string(n) + ", i = " + std::to_string(i),
                              comp(ctx, u, i, el.one), u, input(n));
        }
        for (int m = 0; m <= D; ++m)
            for (Index k = 0; k < ctx.cochain_dim(m); ++k)
                cochain_equal("1 o_1 g = g", "g = " + basis_name(m, k), comp(ctx, el.one, 1, basis(m, k)), basis(m, k),
                              a_coord());

        composition_law();

        for (int m = 0; m <= std::min(3, D); ++m)
            for (int n = 0; m + n <= std::min(3, D); ++n)
                for (Index kf = 0; kf < ctx.cochain_dim(m); ++kf)
                    for (Index kg = 0; kg < ctx.cochain_dim(n); ++kg) {
                        auto f = basis(m, kf), g = basis(n, kg);
                        cochain_equal("(mu o_2 f) o_1 g = closed-form cup",
                                      "f = " + basis_name(m, kf) + ", g = " + basis_name(n, kg), cup(ctx, f, g),
                                      explicit_cup(ctx, f, g), a_coord());
                    }

        for (int n = 0; n <= std::min(3, D - 1); ++n) {
            const long s = n - 1;
            for (Index k = 0; k < ctx.cochain_dim(n); ++k) {
                auto f = basis(n, k);
                cochain_equal("delta_eps = (-1)^(n-1) [mu, -]", "f = " + basis_name(n, k), delta_eps(ctx, f),
                              scale(field, sign(field, s), delta_mu(ctx, f)), a_coord());
            }
        }

        for (int n = 0; n <= std::min(2, D - 1); ++n)
            for (Index k = 0; k < ctx.cochain_dim(n); ++k) {
                auto f = basis(n, k);
                const std::string name = "f = " + basis_name(n, k);
                Cochain<F> alt = zero_cochain(ctx, n + 1);
                for (int i = 0; i <= n + 1; ++i)
                    alt = add(field, alt, scale(field, sign(field, i), coface(ctx, i, f)));
                cochain_equal("sum (-1)^i d^i = delta_eps", name, alt, delta_eps(ctx, f), a_coord());
                for (int j = 0; j <= n; ++j) {
                    cochain_equal("s^j d^j = id", name + ", j = " + std::to_string(j),
                                  codegeneracy(ctx, j, coface(ctx, j, f)), f, a_coord());
                    cochain_equal("s^j d^(j+1) = id", name + ", j = " + std::to_string(j),
                                  codegeneracy(ctx, j, coface(ctx, j + 1, f)), f, a_coord());
                }
            }

        // The conormalized cochains form a subcomplex with the same cohomology.
        for (int n = 0; n + 1 <= D; ++n) {
            auto basis_n = conormalized_basis(ctx, n);
            std::vector<SparseMat<F>> blocks;
            for (int j = 0; j <= n; ++j)
                blocks.push_back(*codegeneracy_matrix(ctx, j, n + 1));
            auto codeg = vstack(blocks);
            SparseMat<F> images(codeg.rows(), static_cast<Index>(basis_n.dim()));
            for (Index k = 0; k < basis_n.dim(); ++k)
                images.set_col(k, apply(field, codeg, apply(field, *delta_eps_matrix(ctx, n), basis_n.vectors[k])));
            is_zero("conormalized cochains are closed under delta_eps", "degree " + std::to_string(n), images,
                    [n](Index k) { return "conormalized basis vector " + std::to_string(k) + " of C^" + std::to_string(n); },
                    [](Index i) { return "codegeneracy coordinate " + std::to_string(i); });
        }
        if (D >= 1) {
            auto full = cohomology(ctx, D - 1).betti();
            auto conorm = conormalized_cohomology(ctx, D - 1).betti();
            for (int n = 0; n + 1 <= D; ++n)
                count_equal("conormalized cohomology = cohomology", "H^" + std::to_string(n), conorm[n], full[n]);
        }
    }

    /// (f o_i g) o_j h against the three reassociations, f universal.
    void composition_law()
    {
        for (int n = 1; n <= D; ++n) {
            const auto u = universal_cochain(ctx, n);
            const std::string fname = "f universal of degree " + std::to_string(n);
            for (int m = 0; m <= D; ++m)
                for (int k = 0; k <= D; ++k) {
                    const int e = n + m + k - 2;
                    if (e < 0 || e > D || n + m - 1 < 1 || n + m - 1 > D || n + k - 1 > D || m + k - 1 > D)
                        continue;
                    for (Index kh = 0; kh < ctx.cochain_dim(k); ++kh) {
                        const auto h = basis(k, kh);
                        std::vector<std::optional<Cochain<F>>> uh(n + 1);
                        auto u_h = [&](int j) -> const Cochain<F>& {
                            if (!uh[j])
                                uh[j] = comp(ctx, u, j, h);
                            return *uh[j];
                        };
                        for (Index kg = 0; kg < ctx.cochain_dim(m); ++kg) {
                            const auto g = basis(m, kg);
                            std::vector<std::optional<Cochain<F>>> gh(m + 1);
                            auto g_h = [&](int j) -> const Cochain<F>& {
                                if (!gh[j])
                                    gh[j] = comp(ctx, g, j, h);
                                return *gh[j];
                            };
                            for (int i = 1; i <= n; ++i) {
                                const auto fg = comp(ctx, u, i, g);
                                for (int j = 1; j <= n + m - 1; ++j) {
                                    auto lhs = comp(ctx, fg, j, h);
                                    Cochain<F> rhs;
                                    std::string check;
                                    if (j < i) {
                                        rhs = comp(ctx, u_h(j), i + k - 1, g);
                                        check = "(f o_i g) o_j h = (f o_j h) o_(i+k-1) g";
                                    } else if (j < i + m) {
                                        rhs = comp(ctx, u, i, g_h(j - i + 1));
                                        check = "(f o_i g) o_j h = f o_i (g o_(j-i+1) h)";
                                    } else {
                                        rhs = comp(ctx, u_h(j - m + 1), i, g);
                                        check = "(f o_i g) o_j h = (f o_(j-m+1) h) o_i g";
                                    }
                                    cochain_equal(check,
                                                  fname + ", g = " + basis_name(m, kg) + ", h = " + basis_name(k, kh) +
                                                      ", i = " + std::to_string(i) + ", j = " + std::to_string(j),
                                                  lhs, rhs, input(n));
                                }
                            }
                        }
                    }
                }
        }
    }

    // f .i on C_p for a basis cochain, memoized.
    std::map<std::tuple<int, Index, int, int>, SparseMat<F>> bullets;
    const SparseMat<F>& basis_bullet(int m, Index k, int i, int p)
    {
        auto key = std::make_tuple(m, k, i, p);
        auto it = bullets.find(key);
        if (it == bullets.end())
            it = bullets.emplace(key, bullet_matrix(ctx, basis(m, k), i, p)).first;
        return it->second;
    }

    void compmodule()
    {
        const auto el = operad_elems(ctx);
        for (int p = 0; p <= D; ++p)
            for (int i = 0; i <= p; ++i)
                matrix_equal("1 .i = id", "C_" + std::to_string(p) + ", i = " + std::to_string(i),
                             bullet_matrix(ctx, el.one, i, p), SparseMat<F>::identity(field, ctx.chain_dim(p)), chain(p),
                             chain(p));

        for (int p = 0; p <= D; ++p)
            for (int n = 0; n <= M; ++n) {
                const int q = p - n + 1;
                if (q < 0 || q > D + 1)
                    continue;
                for (int m = 0; m <= M; ++m) {
                    const int out = q - m + 1;
                    if (out < 0 || out > D + 1 || p - m + 1 > D + 1)
                        continue;
                    for (Index kg = 0; kg < ctx.cochain_dim(n); ++kg)
                        for (Index kf = 0; kf < ctx.cochain_dim(m); ++kf)
                            for (int j = 0; j <= p - n + 1; ++j)
                                for (int i = 0; i <= q - m + 1; ++i) {
                                    auto lhs = multiply(field, basis_bullet(m, kf, i, q), basis_bullet(n, kg, j, p));
                                    SparseMat<F> rhs;
                                    std::string check;
                                    if (j < i) {
                                        rhs = multiply(field, basis_bullet(n, kg, j, p - m + 1), basis_bullet(m, kf, i + n - 1, p));
                                        check = "f .i (g .j x) = g .j (f .(i+n-1) x)";
                                    } else if (j < i + m) {
                                        rhs = bullet_matrix(ctx, comp(ctx, basis(m, kf), j - i + 1, basis(n, kg)), i, p);
                                        check = "f .i (g .j x) = (f o_(j-i+1) g) .i x";
                                    } else {
                                        rhs = multiply(field, basis_bullet(n, kg, j - m + 1, p - m + 1), basis_bullet(m, kf, i, p));
                                        check = "f .i (g .j x) = g .(j-m+1) (f .i x)";
                                    }
                                    matrix_equal(check,
                                                 "f = " + basis_name(m, kf) + ", g = " + basis_name(n, kg) + ", i = " +
                                                     std::to_string(i) + ", j = " + std::to_string(j) + ", x in C_" +
                                                     std::to_string(p),
                                                 lhs, rhs, chain(p), chain(out));
                                }
                }
            }
    }

    void cyclic()
    {
        for (int p = 0; p <= D; ++p) {
            auto power = *t(p);
            for (int k = 1; k <= p; ++k)
                power = multiply(field, *t(p), power);
            matrix_equal("t^(p+1) = id", "C_" + std::to_string(p), power,
                         SparseMat<F>::identity(field, ctx.chain_dim(p)), chain(p), chain(p));
        }
        for (int p = 0; p <= D; ++p)
            for (int m = 0; m <= std::min(M, p); ++m) {
                const int q = p - m + 1;
                for (Index k = 0; k < ctx.cochain_dim(m); ++k)
                    for (int i = 0; i <= p - m; ++i)
                        matrix_equal("t (f .i x) = f .(i+1) (t x)",
                                     "f = " + basis_name(m, k) + ", i = " + std::to_string(i) + ", x in C_" +
                                         std::to_string(p),
                                     multiply(field, *t(q), basis_bullet(m, k, i, p)),
                                     multiply(field, basis_bullet(m, k, i + 1, p), *t(p)), chain(p), chain(q));
            }
    }

    void simplicial()
    {
        auto face = [&](int i, int p) { return face_matrix(ctx, i, p); };
        auto degen = [&](int j, int p) { return degeneracy_matrix(ctx, j, p); };
        auto at = [](int p) { return "C_" + std::to_string(p); };
        auto ij = [](int i, int j) { return ", i = " + std::to_string(i) + ", j = " + std::to_string(j); };

        for (int p = 1; p <= D; ++p)
            matrix_equal("alternating sum of faces = boundary", at(p), *b_from_faces_matrix(ctx, p), *d(p), chain(p),
                         chain(p - 1));

        for (int p = 2; p <= D; ++p)
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i)
                    matrix_equal("d_i d_j = d_(j-1) d_i", at(p) + ij(i, j), multiply(field, *face(i, p - 1), *face(j, p)),
                                 multiply(field, *face(j - 1, p - 1), *face(i, p)), chain(p), chain(p - 2));

        for (int p = 0; p + 1 <= D + 1; ++p)
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= p + 1; ++i) {
                    auto lhs = multiply(field, *face(i, p + 1), *degen(j, p));
                    SparseMat<F> rhs;
                    std::string check;
                    if (i < j) {
                        rhs = multiply(field, *degen(j - 1, p - 1), *face(i, p));
                        check = "d_i s_j = s_(j-1) d_i";
                    } else if (i == j || i == j + 1) {
                        rhs = SparseMat<F>::identity(field, ctx.chain_dim(p));
                        check = "d_i s_j = id";
                    } else {
                        rhs = multiply(field, *degen(j, p - 1), *face(i - 1, p));
                        check = "d_i s_j = s_j d_(i-1)";
                    }
                    matrix_equal(check, at(p) + ij(i, j), lhs, rhs, chain(p), chain(p));
                }

        for (int p = 0; p + 2 <= D + 1; ++p)
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= j; ++i)
                    matrix_equal("s_i s_j = s_(j+1) s_i", at(p) + ij(i, j), multiply(field, *degen(i, p + 1), *degen(j, p)),
                                 multiply(field, *degen(j + 1, p + 1), *degen(i, p)), chain(p), chain(p + 2));

        for (int p = 1; p <= D; ++p) {
            for (int i = 1; i <= p; ++i)
                matrix_equal("d_i t = t d_(i-1)", at(p) + ", i = " + std::to_string(i),
                             multiply(field, *face(i, p), *t(p)), multiply(field, *t(p - 1), *face(i - 1, p)), chain(p),
                             chain(p - 1));
            matrix_equal("d_0 t = d_p", at(p), multiply(field, *face(0, p), *t(p)), *face(p, p), chain(p), chain(p - 1));
        }
        for (int p = 0; p + 1 <= D + 1; ++p) {
            for (int i = 1; i <= p; ++i)
                matrix_equal("s_i t = t s_(i-1)", at(p) + ", i = " + std::to_string(i),
                             multiply(field, *degen(i, p), *t(p)), multiply(field, *t(p + 1), *degen(i - 1, p)), chain(p),
                             chain(p + 1));
            matrix_equal("s_0 t = t^2 s_p", at(p), multiply(field, *degen(0, p), *t(p)),
                         multiply(field, *t(p + 1), multiply(field, *t(p + 1), *degen(p, p))), chain(p), chain(p + 1));
        }

        // Normalized complex: B^2 = 0, bB + Bb = 0, and the homology is unchanged.
        std::vector<std::unique_ptr<NormalizedChains<F>>> nc;
        for (int p = 0; p <= D + 1; ++p)
            nc.push_back(std::make_unique<NormalizedChains<F>>(ctx, p));
        std::vector<SparseMat<F>> bn(D + 2), Bn(D + 1);
        for (int p = 1; p <= D + 1; ++p)
            bn[p] = normalized_operator(*d(p), *nc[p], *nc[p - 1]);
        for (int p = 0; p <= D; ++p)
            Bn[p] = normalized_operator(*connes_B_matrix(ctx, p), *nc[p], *nc[p + 1]);
        for (int p = 0; p + 1 <= D; ++p)
            is_zero("B^2 = 0 on normalized chains", at(p), multiply(field, Bn[p + 1], Bn[p]), normalized(*nc[p]),
                    normalized(*nc[p + 2]));
        for (int p = 0; p <= D; ++p) {
            auto bB = multiply(field, bn[p + 1], Bn[p]);
            if (p > 0)
                bB = add(field, bB, multiply(field, Bn[p - 1], bn[p]));
            is_zero("bB + Bb = 0 on normalized chains", at(p), bB, normalized(*nc[p]), normalized(*nc[p]));
        }
        auto full = homology(ctx, D).betti();
        for (int p = 0; p <= D; ++p) {
            Index rk_out = p > 0 ? static_cast<Index>(rank(field, bn[p])) : 0;
            Index rk_in = static_cast<Index>(rank(field, bn[p + 1]));
            count_equal("normalized homology = homology", "H_" + std::to_string(p), nc[p]->dim() - rk_out - rk_in,
                        full[p]);
        }
    }

    void descend()
    {
        for (int m = 0; m <= M; ++m)
            for (Index k = 0; k < ctx.cochain_dim(m); ++k) {
                const auto f = basis(m, k);
                const auto df = delta_mu(ctx, f);
                const std::string fname = "f = " + basis_name(m, k);
                for (int p = 0; p <= D; ++p) {
                    const std::string in = fname + ", x in C_" + std::to_string(p);
                    if (p - m - 1 >= 0) {
                        auto rhs = linear_combination(field, field.one(), multiply(field, *d(p - m), cap_matrix(ctx, f, p)),
                                                      field.neg(sign(field, m)),
                                                      multiply(field, cap_matrix(ctx, f, p - 1), *d(p)));
                        matrix_equal("i_[mu,f] = b i_f - (-1)^m i_f b", in, cap_matrix(ctx, df, p), rhs, chain(p),
                                     chain(p - m - 1));
                    }
                    const int target = p - m;
                    if (target >= 0 && p - m + 1 <= D + 1) {
                        auto sum = lie_matrix(ctx, df, p);
                        if (p - m + 1 >= 1)
                            sum = add(field, sum, multiply(field, *d(p - m + 1), lie_matrix(ctx, f, p)));
                        if (p >= 1)
                            sum = linear_combination(field, field.one(), sum, field.neg(sign(field, m - 1)),
                                                     multiply(field, lie_matrix(ctx, f, p - 1), *d(p)));
                        is_zero("b L_f - (-1)^(m-1) L_f b + L_[mu,f] = 0", in, sum, chain(p), chain(target));
                    }
                }
            }
    }

    void gradedmodule()
    {
        for (int m = 0; m <= M; ++m)
            for (int n = 0; n <= M; ++n)
                for (Index kf = 0; kf < ctx.cochain_dim(m); ++kf)
                    for (Index kg = 0; kg < ctx.cochain_dim(n); ++kg) {
                        const auto f = basis(m, kf), g = basis(n, kg);
                        const std::string names = "f = " + basis_name(m, kf) + ", g = " + basis_name(n, kg);
                        std::optional<Cochain<F>> fg_cup, fg_bracket;
                        for (int p = 0; p <= D; ++p) {
                            const std::string in = names + ", x in C_" + std::to_string(p);
                            if (m + n <= p) {
                                if (!fg_cup)
                                    fg_cup = cup(ctx, f, g);
                                matrix_equal("i_f i_g = i_(f cup g)", in,
                                             multiply(field, cap_matrix(ctx, f, p - n), cap_matrix(ctx, g, p)),
                                             cap_matrix(ctx, *fg_cup, p), chain(p), chain(p - m - n));
                            }
                            const int target = p - m - n + 2;
                            const int qf = p - m + 1, qg = p - n + 1;
                            if (target < 0 || target > D + 1 || qf > D + 1 || qg > D + 1)
                                continue;
                            SparseMat<F> lhs(ctx.chain_dim(target), ctx.chain_dim(p));
                            if (qg >= 0)
                                lhs = add(field, lhs, multiply(field, lie_matrix(ctx, f, qg), lie_matrix(ctx, g, p)));
                            if (qf >= 0)
                                lhs = linear_combination(field, field.one(), lhs,
                                                         field.neg(sign(field, static_cast<long>(m - 1) * (n - 1))),
                                                         multiply(field, lie_matrix(ctx, g, qf), lie_matrix(ctx, f, p)));
                            SparseMat<F> rhs(lhs.rows(), lhs.cols());
                            if (m + n - 1 >= 0) {
                                if (!fg_bracket)
                                    fg_bracket = bracket(ctx, f, g);
                                rhs = lie_matrix(ctx, *fg_bracket, p);
                            }
                            matrix_equal("L_f L_g - (-1)^((m-1)(n-1)) L_g L_f = L_[f,g]", in, lhs, rhs, chain(p),
                                         chain(target));
                        }
                    }
    }

    // Homology-level data.

    std::vector<std::vector<Cochain<F>>> cocycle_reps()
    {
        std::vector<std::vector<Cochain<F>>> out;
        auto rep = conormalized_cohomology(ctx, D);
        for (const auto& deg : rep.degrees) {
            out.emplace_back();
            for (const auto& v : deg.representatives)
                out.back().push_back(unflatten(ctx, deg.degree, v));
        }
        return out;
    }

    std::vector<std::vector<ChainVector<F>>> cycle_reps()
    {
        std::vector<std::vector<ChainVector<F>>> out;
        auto rep = homology(ctx, D);
        for (const auto& deg : rep.degrees) {
            out.emplace_back();
            for (const auto& v : deg.representatives)
                out.back().push_back({deg.degree, v});
        }
        return out;
    }

    std::map<int, Echelon<F>> trivial_chains;
    const Echelon<F>& chain_span(int q)
    {
        auto it = trivial_chains.find(q);
        if (it == trivial_chains.end())
            it = trivial_chains.emplace(q, boundary_span(ctx, q, true)).first;
        return it->second;
    }

    static std::string class_name(const char* symbol, int degree, std::size_t k)
    {
        return std::string(symbol) + std::to_string(degree) + " class " + std::to_string(k);
    }

    void precalculus()
    {
        const auto coh = cocycle_reps();
        const auto hom = cycle_reps();
        std::map<std::pair<int, std::size_t>, std::map<int, SparseMat<F>>> lies;
        auto lie_of = [&](int n, std::size_t kg, int p) -> const SparseMat<F>& {
            auto& per = lies[{n, kg}];
            auto it = per.find(p);
            if (it == per.end())
                it = per.emplace(p, lie_matrix(ctx, coh[n][kg], p)).first;
            return it->second;
        };
        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (std::size_t kf = 0; kf < coh[m].size(); ++kf)
                    for (std::size_t kg = 0; kg < coh[n].size(); ++kg) {
                        const auto& f = coh[m][kf];
                        const auto& g = coh[n][kg];
                        std::optional<Cochain<F>> fg;
                        for (int p = 0; p <= D; ++p) {
                            const int q = p - m - n + 1;
                            if (q < 0 || q > D)
                                continue;
                            for (std::size_t kx = 0; kx < hom[p].size(); ++kx) {
                                const auto& x = hom[p][kx].coords;
                                const int qg = p - n + 1;
                                auto v = apply(field, cap_matrix(ctx, f, qg), apply(field, lie_of(n, kg, p), x));
                                if (p >= m)
                                    v = axpy(field, field.neg(sign(field, static_cast<long>(m) * (n - 1))),
                                             apply(field, lie_of(n, kg, p - m), apply(field, cap_matrix(ctx, f, p), x)), v);
                                if (m + n - 1 >= 0 && m + n - 1 <= p) {
                                    if (!fg)
                                        fg = bracket(ctx, f, g);
                                    v = sub(field, v, apply(field, cap_matrix(ctx, *fg, p), x));
                                }
                                in_span("i_f L_g - (-1)^(m(n-1)) L_g i_f = i_[f,g]",
                                        "f = " + class_name("H^", m, kf) + ", g = " + class_name("H^", n, kg) +
                                            ", x = " + class_name("H_", p, kx),
                                        chain_span(q), v, chain(q));
                            }
                        }
                    }
    }

    void cartan()
    {
        const auto coh = cocycle_reps();
        const auto hom = cycle_reps();
        for (int m = 0; m <= D; ++m)
            for (std::size_t kf = 0; kf < coh[m].size(); ++kf) {
                const auto& f = coh[m][kf];
                for (int p = 0; p <= D; ++p) {
                    const int q = p - m + 1;
                    if (q < 0 || q > D)
                        continue;
                    const auto lf = lie_matrix(ctx, f, p);
                    for (std::size_t kx = 0; kx < hom[p].size(); ++kx) {
                        const auto& x = hom[p][kx].coords;
                        auto v = apply(field, lf, x);
                        if (m <= p)
                            v = sub(field, v,
                                    apply(field, *connes_B_matrix(ctx, p - m), apply(field, cap_matrix(ctx, f, p), x)));
                        v = axpy(field, sign(field, m),
                                 apply(field, cap_matrix(ctx, f, p + 1), apply(field, *connes_B_matrix(ctx, p), x)), v);
                        in_span("L_f = B i_f - (-1)^m i_f B",
                                "f = " + class_name("H^", m, kf) + ", x = " + class_name("H_", p, kx), chain_span(q), v,
                                chain(q));
                    }
                }
            }
    }

    std::map<int, Echelon<F>> trivial_cochains;
    const Echelon<F>& cochain_span(int n)
    {
        auto it = trivial_cochains.find(n);
        if (it == trivial_cochains.end())
            it = trivial_cochains.emplace(n, coboundary_span(ctx, n)).first;
        return it->second;
    }

    std::optional<Cochain<F>> br(const Cochain<F>& f, const Cochain<F>& g)
    {
        if (f.degree + g.degree - 1 < 0)
            return std::nullopt;
        return bracket(ctx, f, g);
    }

    void gerstenhaber()
    {
        const auto coh = cocycle_reps();
        auto name = [&](int n, std::size_t k) { return class_name("H^", n, k); };
        auto trivial = [&](const std::string& check, const std::string& in, const Cochain<F>& c) {
            in_span(check, in, cochain_span(c.degree), flatten(c), flat(c.degree));
        };
        auto closed = [&](const std::string& check, const std::string& in, const Cochain<F>& c) {
            matrix_equal(check, in, delta_eps(ctx, c).values, SparseMat<F>(static_cast<Index>(ctx.dim_a()), ctx.input_dim(c.degree + 1)),
                         input(c.degree + 1), a_coord());
        };

        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (std::size_t kf = 0; kf < coh[m].size(); ++kf)
                    for (std::size_t kg = 0; kg < coh[n].size(); ++kg) {
                        const auto& f = coh[m][kf];
                        const auto& g = coh[n][kg];
                        const std::string in = "f = " + name(m, kf) + ", g = " + name(n, kg);
                        if (m + n <= D) {
                            auto fg = cup(ctx, f, g);
                            closed("delta(f cup g) = 0", in, fg);
                            trivial("f cup g = (-1)^(mn) g cup f", in,
                                    sub(field, fg, scale(field, sign(field, static_cast<long>(m) * n), cup(ctx, g, f))));
                        }
                        if (m + n - 1 >= 0 && m + n - 1 <= D) {
                            auto fg = bracket(ctx, f, g);
                            closed("delta[f,g] = 0", in, fg);
                            auto anti = add(field, fg,
                                            scale(field, sign(field, static_cast<long>(m - 1) * (n - 1)), bracket(ctx, g, f)));
                            cochain_equal("[f,g] = -(-1)^((m-1)(n-1)) [g,f]", in, anti, zero_cochain(ctx, m + n - 1),
                                          a_coord());
                        }
                    }

        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (int k = 0; k <= D; ++k)
                    for (std::size_t kf = 0; kf < coh[m].size(); ++kf)
                        for (std::size_t kg = 0; kg < coh[n].size(); ++kg)
                            for (std::size_t kh = 0; kh < coh[k].size(); ++kh) {
                                const auto& f = coh[m][kf];
                                const auto& g = coh[n][kg];
                                const auto& h = coh[k][kh];
                                const std::string in =
                                    "f = " + name(m, kf) + ", g = " + name(n, kg) + ", h = " + name(k, kh);
                                if (m + n + k <= D)
                                    trivial("(f cup g) cup h = f cup (g cup h)", in,
                                            sub(field, cup(ctx, cup(ctx, f, g), h), cup(ctx, f, cup(ctx, g, h))));
                                const int e = m + n + k - 2;
                                if (e >= 0 && e <= D)
                                    trivial("graded Jacobi", in, jacobi(f, g, h));
                                const int l = m + n + k - 1;
                                if (l >= 0 && l <= D) {
                                    auto lhs = br(f, cup(ctx, g, h));
                                    Cochain<F> rhs = zero_cochain(ctx, l);
                                    if (auto fg = br(f, g))
                                        rhs = add(field, rhs, cup(ctx, *fg, h));
                                    if (auto fh = br(f, h))
                                        rhs = add(field, rhs,
                                                  scale(field, sign(field, static_cast<long>(m - 1) * n), cup(ctx, g, *fh)));
                                    trivial("[f, g cup h] = [f,g] cup h + (-1)^((m-1)n) g cup [f,h]", in,
                                            sub(field, *lhs, rhs));
                                }
                            }

        // The pre-Lie identity makes Jacobi hold exactly for arbitrary cochains.
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coef(-2, 2);
        auto random_cochain = [&](int n) {
            Cochain<F> c = zero_cochain(ctx, n);
            for (Index j = 0; j < c.values.cols(); ++j) {
                VecBuilder<F> col;
                for (Index i = 0; i < c.values.rows(); ++i)
                    col.add(i, field.from_int(coef(rng)));
                c.values.set_col(j, col.finish(field));
            }
            return c;
        };
        const int top = std::min(2, D);
        for (int m = 0; m <= top; ++m)
            for (int n = 0; n <= top; ++n)
                for (int k = 0; k <= top; ++k) {
                    const int e = m + n + k - 2;
                    if (e < 0 || e > D)
                        continue;
                    auto f = random_cochain(m), g = random_cochain(n), h = random_cochain(k);
                    cochain_equal("graded Jacobi on cochains",
                                  "random cochains of degrees " + std::to_string(m) + ", " + std::to_string(n) + ", " +
                                      std::to_string(k) + ", seed " + std::to_string(seed),
                                  jacobi(f, g, h), zero_cochain(ctx, e), a_coord());
                }
    }

    Cochain<F> jacobi(const Cochain<F>& f, const Cochain<F>& g, const Cochain<F>& h)
    {
        const int m = f.degree, n = g.degree, k = h.degree;
        Cochain<F> sum = zero_cochain(ctx, m + n + k - 2);
        auto term = [&](long e, const Cochain<F>& x, const Cochain<F>& y, const Cochain<F>& z) {
            auto yz = br(y, z);
            if (!yz)
                return;
            if (auto xyz = br(x, *yz))
                sum = add(field, sum, scale(field, sign(field, e), *xyz));
        };
        term(static_cast<long>(m - 1) * (k - 1), f, g, h);
        term(static_cast<long>(n - 1) * (m - 1), g, h, f);
        term(static_cast<long>(k - 1) * (n - 1), h, f, g);
        return sum;
    }
};

}  // namespace

std::vector<std::string> suite_names()
{
    return kSuites;
}

bool is_suite(const std::string& name)
{
    return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

template <Field F>
std::string describe_chain(const Context<F>& ctx, int p, Index idx)
{
    return "C_" + std::to_string(p) + "[" + format_triangle(ctx.chain_layout(p).unpack(idx)) + "]";
}

template <Field F>
std::string describe_cochain(const Context<F>& ctx, int n, Index flat)
{
    const Index dA = static_cast<Index>(ctx.dim_a());
    return "C^" + std::to_string(n) + "[" + format_triangle(ctx.input_layout(n).unpack(flat / dA)) + " -> A_" +
           std::to_string(flat % dA) + "]";
}

template <Field F>
SuiteResult verify(const Context<F>& ctx, const std::string& suite, const SuiteBounds& bounds)
{
    if (!is_suite(suite))
        throw InputError("unknown suite '" + suite + "'");
    if (bounds.max_degree < 0 || bounds.max_cochain_degree < 0)
        throw DomainError("suite degree bounds must be >= 0");
    SuiteResult r;
    r.suite = suite;
    r.triple = ctx.spec().name;
    r.field = ctx.field().name();
    r.bounds = bounds;
    r.mutation = ctx.mutation().describe();
    Runner<F> run(ctx, bounds, r);
    if (suite == "differential")
        run.differential();
    else if (suite == "operad")
        run.operad();
    else if (suite == "compmodule")
        run.compmodule();
    else if (suite == "cyclic")
        run.cyclic();
    else if (suite == "simplicial")
        run.simplicial();
    else if (suite == "descend")
        run.descend();
    else if (suite == "gradedmodule")
        run.gradedmodule();
    else if (suite == "precalculus")
        run.precalculus();
    else if (suite == "cartan")
        run.cartan();
    else
        run.gerstenhaber();
    return r;
}

template SuiteResult verify(const Context<Rationals>&, const std::string&, const SuiteBounds&);
template SuiteResult verify(const Context<PrimeField>&, const std::string&, const SuiteBounds&);
template std::string describe_chain(const Context<Rationals>&, int, Index);
template std::string describe_chain(const Context<PrimeField>&, int, Index);
template std::string describe_cochain(const Context<Rationals>&, int, Index);
template std::string describe_cochain(const Context<PrimeField>&, int, Index);

}  // namespace shc
