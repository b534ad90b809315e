#include <doctest.h>

#include "helpers.hpp"
#include "shc/calculus.hpp"

using namespace shc;
using namespace shc::test;

TEST_CASE("cap product")
{
    auto u2 = ctx_q("T_u2");
    auto el = operad_elems(*u2);
    CHECK(cap_matrix(*u2, el.one, 1) == bullet_matrix(*u2, el.mu, 0, 1));
    CHECK(cap(*u2, el.one, chain(*u2, {0, 2}, {0})).coords == vec({0, 0, 1}));
    CHECK(cap_matrix(*u2, el.mu, 1).nnz() == 0);

    // f in O^1 on T_dual: i_f(a0 (x) b (x) a1) = eps(b) a0 f(a1)
    auto dual = ctx_q("T_dual");
    const auto& A = dual->spec().A;
    for (Index k = 0; k < dual->cochain_dim(1); ++k) {
        auto f = unflatten(*dual, 1, SparseVec<Q>::unit(Q{}, k));
        for (int a0 = 0; a0 < 2; ++a0)
            for (int a1 = 0; a1 < 2; ++a1) {
                std::vector<mpq_class> x(2, 0), fa(2, 0);
                x[a0] = 1;
                for (const auto& e : f.values.col(static_cast<Index>(a1)).entries)
                    fa[e.index] = e.value;
                auto expected = multiply(A, x, fa);
                std::vector<long> dense;
                for (const auto& q : expected)
                    dense.push_back(q.get_num().get_si());
                CHECK(cap(*dual, f, chain(*dual, {a0, a1}, {0})).coords == vec(dense));
            }
    }
}

TEST_CASE("Lie derivative")
{
    auto full = ctx_q("T_full");
    auto el = operad_elems(*full);
    const Q f;
    for (int p = 0; p <= 2; ++p) {
        auto id = SparseMat<Q>::identity(f, full->chain_dim(p));
        // L_1 acts on C_p as multiplication by p + 1
        CHECK(lie_matrix(*full, el.one, p) == scale(f, mpq_class(p + 1), id));
    }

    // m = p + 1 = 2: L_f = (-1)^{m-1} f .0 (1 - t) on C_1
    auto dual = ctx_q("T_dual");
    auto t = *cyclic_t_matrix(*dual, 1);
    auto one_minus_t = sub(f, SparseMat<Q>::identity(f, 4), t);
    for (Index k = 0; k < dual->cochain_dim(2); ++k) {
        auto g = unflatten(*dual, 2, SparseVec<Q>::unit(f, k));
        auto expected = scale(f, mpq_class(-1), multiply(f, bullet_matrix(*dual, g, 0, 1), one_minus_t));
        CHECK(lie_matrix(*dual, g, 1) == expected);
    }
    auto h = basis_cochain(*dual, 3, 1, 0);
    CHECK(lie_matrix(*dual, h, 1).nnz() == 0);
}

TEST_CASE("Betti numbers")
{
    auto triv = ctx_q("T_triv");
    CHECK(homology(*triv, 3).betti() == std::vector<Index>{1, 0, 0, 0});
    CHECK(cohomology(*triv, 3).betti() == std::vector<Index>{1, 0, 0, 0});
    auto dual = ctx_q("T_dual");
    CHECK(homology(*dual, 3).betti() == std::vector<Index>{2, 1, 1, 1});
    CHECK(cohomology(*dual, 3).betti() == std::vector<Index>{2, 1, 1, 1});
    CHECK(conormalized_cohomology(*dual, 3).betti() == std::vector<Index>{2, 1, 1, 1});

    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto q = ctx_q(name);
        auto p = ctx_p(name);
        CHECK(homology(*q, 3).betti() == homology(*p, 3).betti());
        CHECK(cohomology(*q, 2).betti() == cohomology(*p, 2).betti());
    }
}

TEST_CASE("homology report invariants")
{
    auto u2 = ctx_q("T_u2");
    auto r = homology(*u2, 3);
    REQUIRE(r.degrees.size() == 4);
    for (const auto& d : r.degrees) {
        CHECK(d.kernel_dim + d.rank_out == d.dim);
        CHECK(d.betti == d.kernel_dim - d.rank_in);
        CHECK(d.representatives.size() == d.betti);
        for (const auto& v : d.representatives) {
            ChainVector<Q> x{d.degree, v};
            CHECK(boundary(*u2, x).coords.empty());
            CHECK_FALSE(is_boundary(*u2, x));
        }
    }
    auto again = homology(*u2, 3);
    for (std::size_t k = 0; k < r.degrees.size(); ++k)
        CHECK(r.degrees[k].representatives == again.degrees[k].representatives);
}

TEST_CASE("boundary and cocycle predicates")
{
    auto full = ctx_q("T_full");
    auto x = combo(*full, 2, {{{{0, 1, 1}, {0, 1, 0}}, 3}, {{{1, 0, 0}, {0, 0, 1}}, -2}});
    CHECK(is_boundary(*full, boundary(*full, x)));
    CHECK(is_cocycle(*full, operad_elems(*full).mu));
    CHECK_FALSE(cocycle_witness(*full, operad_elems(*full).mu));

    auto u2 = ctx_q("T_u2");
    auto f = basis_cochain(*u2, 0, 2, 0);
    CHECK_FALSE(is_cocycle(*u2, f));
    auto w = cocycle_witness(*u2, f);
    REQUIRE(w);
    CHECK(*w == 0);
    CHECK_FALSE(is_boundary(*u2, chain(*u2, {0}, {})));
}
