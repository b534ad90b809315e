#include <doctest.h>

#include "helpers.hpp"
#include "shc/cyclic_module.hpp"

using namespace shc;
using namespace shc::test;

namespace {

int dual_product(std::initializer_list<int> digits)
{
    int xs = 0;
    for (int d : digits)
        xs += d;
    return xs <= 1 ? xs : -1;
}

SparseMat<Q> power(const SparseMat<Q>& m, int k)
{
    auto out = SparseMat<Q>::identity(Q{}, m.cols());
    for (int i = 0; i < k; ++i)
        out = multiply(Q{}, m, out);
    return out;
}

}  // namespace

TEST_CASE("boundary in low degrees")
{
    // T_u2, basis E11, E22, E12: d(E11 (x) E12) = E11 E12 - E12 E11 = E12
    auto u2 = ctx_q("T_u2");
    auto d = boundary(*u2, chain(*u2, {0, 2}, {0}));
    CHECK(d.degree == 0);
    CHECK(d.coords == vec({0, 0, 1}));
    CHECK(boundary(*u2, chain(*u2, {2, 0}, {0})).coords == vec({0, 0, -1}));

    auto dual = ctx_q("T_dual");
    CHECK(boundary(*dual, chain(*dual, {1, 1}, {0})).coords.empty());
    CHECK(boundary(*dual, chain(*dual, {1}, {})).coords.empty());

    // T_full, n = 1: eps(b)(a0 a1 - a1 a0) = 0 since A is commutative
    auto full = ctx_q("T_full");
    CHECK(boundary_matrix(*full, 1)->nnz() == 0);
}

TEST_CASE("boundary squares to zero")
{
    for (const auto& name : builtin_names()) {
        auto ctx = ctx_q(name);
        const int top = name == "T_full" ? 3 : 4;
        for (int p = 2; p <= top; ++p) {
            CAPTURE(name);
            CAPTURE(p);
            CHECK(multiply(Q{}, *boundary_matrix(*ctx, p - 1), *boundary_matrix(*ctx, p)).nnz() == 0);
        }
    }
}

TEST_CASE("bullet")
{
    auto full = ctx_q("T_full");
    auto el = operad_elems(*full);
    for (int p = 0; p <= 3; ++p)
        for (int i = 0; i <= p; ++i)
            CHECK(bullet_matrix(*full, el.one, i, p) == SparseMat<Q>::identity(Q{}, full->chain_dim(p)));

    // mu .1 on degree 2: a0 (x) (b01 b02) (x) eps(b12) a1 a2
    auto m = bullet_matrix(*full, el.mu, 1, 2);
    const auto& src = full->chain_layout(2);
    const auto& dst = full->chain_layout(1);
    for (Index t = 0; t < src.size(); ++t) {
        auto x = src.unpack(t);
        int top = dual_product({x.b[0], x.b[1]});
        int row = dual_product({x.a[1], x.a[2], x.b[2]});
        SparseVec<Q> expected;
        if (top >= 0 && row >= 0)
            expected = SparseVec<Q>::unit(Q{}, dst.pack({{x.a[0], row}, {top}}));
        CHECK(m.col(t) == expected);
    }

    // e0 .0 a = (1_A, a) with b01 = 1_B
    for (int a = 0; a < 2; ++a) {
        auto y = bullet(*full, el.e0, 0, chain(*full, {a}, {}));
        CHECK(y == chain(*full, {0, a}, {0}));
    }

    // out of range: zero map of the right shape
    auto z = bullet_matrix(*full, el.mu, 2, 2);
    CHECK(z.nnz() == 0);
    CHECK(z.rows() == full->chain_dim(1));
    CHECK(bullet_matrix(*full, el.mu, 0, 0).nnz() == 0);
}

TEST_CASE("cyclic operator")
{
    auto u2 = ctx_q("T_u2");
    CHECK(cyclic_t(*u2, chain(*u2, {0, 2}, {0})) == chain(*u2, {2, 0}, {0}));

    auto full = ctx_q("T_full");
    // row p moves to row 0: (b01, b02, b12) -> (b02, b12, b01)
    CHECK(cyclic_t(*full, chain(*full, {0, 1, 0}, {1, 0, 0})) == chain(*full, {0, 0, 1}, {0, 0, 1}));
    CHECK(cyclic_t(*full, chain(*full, {1, 0, 0}, {0, 1, 0})) == chain(*full, {0, 1, 0}, {1, 0, 0}));

    for (int p = 0; p <= 3; ++p)
        CHECK(power(*cyclic_t_matrix(*full, p), p + 1) == SparseMat<Q>::identity(Q{}, full->chain_dim(p)));
    auto dual = ctx_q("T_dual");
    CHECK(power(*cyclic_t_matrix(*dual, 4), 5) == SparseMat<Q>::identity(Q{}, dual->chain_dim(4)));
    CHECK_FALSE(power(*cyclic_t_matrix(*dual, 4), 1) == SparseMat<Q>::identity(Q{}, dual->chain_dim(4)));
}

TEST_CASE("faces and degeneracies")
{
    auto u2 = ctx_q("T_u2");
    auto x = chain(*u2, {0, 2}, {0});
    CHECK(face(*u2, 0, x).coords == vec({0, 0, 1}));
    CHECK(face(*u2, 1, x).coords.empty());
    // s_0(E12) = E12 (x) 1_A with 1_A = E11 + E22
    CHECK(degeneracy(*u2, 0, chain(*u2, {2}, {})) == combo(*u2, 1, {{{{2, 0}, {0}}, 1}, {{{2, 1}, {0}}, 1}}));

    for (const auto& name : builtin_names()) {
        auto ctx = ctx_q(name);
        const int top = name == "T_full" ? 3 : 4;
        for (int p = 1; p <= top; ++p)
            CHECK(*b_from_faces_matrix(*ctx, p) == *boundary_matrix(*ctx, p));
    }
}

TEST_CASE("normalized complex and Connes' operator")
{
    auto triv = ctx_q("T_triv");
    CHECK(NormalizedChains<Q>(*triv, 0).dim() == 1);
    CHECK(NormalizedChains<Q>(*triv, 1).dim() == 0);
    CHECK(normalized_chain_basis(*triv, 2).vectors.empty());

    auto dual = ctx_q("T_dual");
    NormalizedChains<Q> n0(*dual, 0), n1(*dual, 1);
    CHECK(n0.dim() == dual->chain_dim(0));
    // B(a) at p = 0 is the class of 1_A (x) a
    auto bx = connes_B(*dual, chain(*dual, {1}, {}));
    CHECK(bx.degree == 1);
    CHECK(bx.coords == n1.include(n1.project(chain(*dual, {0, 1}, {0}).coords)));
    CHECK_FALSE(bx.coords.empty());
    CHECK(connes_B(*dual, chain(*dual, {0}, {})).coords.empty());
    CHECK(n1.is_degenerate(chain(*dual, {1, 0}, {0}).coords));
    CHECK_FALSE(n1.is_degenerate(chain(*dual, {0, 1}, {0}).coords));

    for (int p = 0; p <= 2; ++p) {
        NormalizedChains<Q> src(*dual, p), mid(*dual, p + 1), dst(*dual, p + 2);
        auto b1 = normalized_operator(*connes_B_matrix(*dual, p), src, mid);
        auto b2 = normalized_operator(*connes_B_matrix(*dual, p + 1), mid, dst);
        CHECK(multiply(Q{}, b2, b1).nnz() == 0);
    }
}
