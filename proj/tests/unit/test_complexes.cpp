#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "shc/cyclic_module.hpp"

using namespace shc;
using namespace shc::test;

namespace {

// Independent enumeration: a digits fastest, then b pairs in (s,t)-lex order.
std::vector<TriangleIndex> enumerate(int dim_a, int dim_b, int rows)
{
    const int pairs = rows * (rows - 1) / 2;
    std::vector<TriangleIndex> out;
    long total = 1;
    for (int k = 0; k < rows; ++k)
        total *= dim_a;
    for (int q = 0; q < pairs; ++q)
        total *= dim_b;
    for (long idx = 0; idx < total; ++idx) {
        TriangleIndex t{std::vector<int>(rows), std::vector<int>(pairs)};
        long rest = idx;
        for (int k = 0; k < rows; ++k, rest /= dim_a)
            t.a[k] = static_cast<int>(rest % dim_a);
        for (int q = 0; q < pairs; ++q, rest /= dim_b)
            t.b[q] = static_cast<int>(rest % dim_b);
        out.push_back(t);
    }
    return out;
}

// b_{s,t} looked up by scanning the lex order of pairs.
int pair_value(const TriangleIndex& x, int s, int t)
{
    int q = 0;
    for (int u = 0; u < x.rows(); ++u)
        for (int v = u + 1; v < x.rows(); ++v, ++q)
            if (u == s && v == t)
                return x.b[q];
    return -1;
}

}  // namespace

TEST_CASE("chain and cochain dimensions")
{
    CHECK(chain_dim(builtin("T_dual"), 3) == 16);
    CHECK(chain_dim(builtin("T_full"), 2) == 64);
    for (const auto& name : builtin_names()) {
        auto t = builtin(name);
        CHECK(chain_dim(t, 0) == static_cast<std::uint64_t>(t.A.dim));
        CHECK(cochain_dim(t, 0) == static_cast<std::uint64_t>(t.A.dim));
    }
    CHECK(cochain_dim(builtin("T_full"), 2) == 16);
    CHECK(cochain_dim(builtin("T_dual"), 3) == 16);
    CHECK(chain_dim(builtin("T_u2"), 2) == 27);
}

TEST_CASE("budget cap names the dimension")
{
    auto t = builtin("T_full");
    try {
        chain_dim(t, 9);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.dimension() == "36028797018963968");
        CHECK(std::string(e.what()).find("2^10 * 2^45") != std::string::npos);
    }
    CHECK_THROWS_AS(chain_dim(t, 4, 1000), BudgetExceeded);
    CHECK(chain_dim(t, 4, 1u << 20) == 32768);
    auto ctx = ctx_q("T_full", EngineOptions{100, {}});
    CHECK_THROWS_AS(ctx->chain_layout(3), BudgetExceeded);
}

TEST_CASE("layout order matches brute-force enumeration")
{
    for (auto [da, db] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{1, 1}, std::pair{2, 3}})
        for (int rows = 0; rows <= 3; ++rows) {
            TriangleLayout lay(da, db, rows);
            auto all = enumerate(da, db, rows);
            REQUIRE(lay.size() == all.size());
            std::vector<int> a(rows), b(lay.pairs());
            for (Index idx = 0; idx < lay.size(); ++idx) {
                CHECK(lay.pack(all[idx]) == idx);
                CHECK(lay.unpack(idx) == all[idx]);
                if (idx == 0)
                    lay.decode(0, a.data(), b.data());
                else
                    lay.advance(a.data(), b.data());
                CHECK(a == all[idx].a);
                CHECK(b == all[idx].b);
            }
        }
    CHECK(pair_slot(4, 0, 1) == 0);
    CHECK(pair_slot(4, 0, 3) == 2);
    CHECK(pair_slot(4, 1, 2) == 3);
    CHECK(pair_slot(4, 2, 3) == 5);
}

TEST_CASE("extract_subtriangle")
{
    TriangleIndex x{{0, 1, 0}, {1, 0, 1}};
    CHECK(extract_subtriangle(x, 0, 2) == x);
    CHECK(extract_subtriangle(x, 1, 1) == TriangleIndex{{1}, {}});
    CHECK(extract_subtriangle(x, 1, 2) == TriangleIndex{{1, 0}, {1}});

    // every sub-block of every T_full triangle with 4 rows against a direct scan
    for (const auto& t : enumerate(2, 2, 4))
        for (int i = 0; i < 4; ++i)
            for (int k = i; k < 4; ++k) {
                auto s = extract_subtriangle(t, i, k);
                REQUIRE(s.rows() == k - i + 1);
                for (int u = 0; u < s.rows(); ++u) {
                    CHECK(s.a[u] == t.a[i + u]);
                    for (int v = u + 1; v < s.rows(); ++v)
                        CHECK(pair_value(s, u, v) == pair_value(t, i + u, i + v));
                }
            }
    CHECK_THROWS_AS(extract_subtriangle(x, 2, 1), DomainError);
    CHECK_THROWS_AS(extract_subtriangle(x, 0, 3), DomainError);
}

TEST_CASE("lift_basis_map")
{
    auto ctx = ctx_q("T_dual");
    Q f;
    auto id = lift_basis_map<Q>(*ctx, 1, 1, [&](const TriangleIndex& t) { return basis_chain(*ctx, t); });
    CHECK(id == SparseMat<Q>::identity(f, 4));
    auto zero = lift_basis_map<Q>(*ctx, 1, 1, [](const TriangleIndex&) { return ChainVector<Q>{1, {}}; });
    CHECK(zero == SparseMat<Q>(4, 4));

    auto t = lift_basis_map<Q>(*ctx, 1, 1, [&](const TriangleIndex& x) { return cyclic_t(*ctx, basis_chain(*ctx, x)); });
    CHECK(t == *cyclic_t_matrix(*ctx, 1));
    std::set<Index> targets;
    for (Index j = 0; j < 4; ++j) {
        REQUIRE(t.col(j).nnz() == 1);
        CHECK(t.col(j).entries[0].value == 1);
        targets.insert(t.col(j).entries[0].index);
    }
    CHECK(targets.size() == 4);
    CHECK(multiply(f, t, t) == SparseMat<Q>::identity(f, 4));
    CHECK_FALSE(t == SparseMat<Q>::identity(f, 4));

    CHECK_THROWS_AS(
        lift_basis_map<Q>(*ctx, 1, 1, [&](const TriangleIndex&) { return ChainVector<Q>{0, {}}; }), DomainError);
}

TEST_CASE("cochain flattening")
{
    auto ctx = ctx_q("T_u2");
    auto c = basis_cochain(*ctx, 2, 1, 5);
    auto flat = flatten(c);
    REQUIRE(flat.nnz() == 1);
    CHECK(flat.entries[0].index == 5 * 3 + 1);
    CHECK(unflatten(*ctx, 2, flat) == c);
    CHECK(ctx->cochain_dim(2) == 27);
}

TEST_CASE("mutation descriptions")
{
    CHECK(Mutation{}.describe() == "none");
    CHECK_FALSE(Mutation{}.active());
    Mutation m{Mutation::Kind::CompSlot, 2};
    CHECK(m.active());
    CHECK(m.describe().find('2') != std::string::npos);
}
