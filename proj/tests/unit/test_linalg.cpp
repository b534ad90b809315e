#include <doctest.h>

#include "helpers.hpp"
#include "shc/linalg.hpp"

using namespace shc;
using namespace shc::test;

namespace {

SubspaceBasis<Q> span(Index dim, const std::vector<std::vector<long>>& vs)
{
    SubspaceBasis<Q> b;
    b.ambient_dim = dim;
    for (const auto& v : vs)
        b.vectors.push_back(vec(v));
    return b;
}

}  // namespace

TEST_CASE("rationals parse and format")
{
    CHECK(parse_rational("3/6") == mpq_class(1, 2));
    CHECK(parse_rational("-4") == mpq_class(-4));
    CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
    CHECK(format_rational(mpq_class(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("prime field arithmetic")
{
    PrimeField f(101);
    CHECK(f.mul(f.inv(7), 7) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK(f.from_rational(mpq_class(1, 2)) == 51);
    CHECK_THROWS(PrimeField(15));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(15));
}

TEST_CASE("rank")
{
    Q f;
    CHECK(rank(f, SparseMat<Q>::identity(f, 2)) == 2);
    CHECK(rank(f, SparseMat<Q>(3, 5)) == 0);
    CHECK(rank(f, mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(f, mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("nullspace basis")
{
    Q f;
    CHECK(nullspace_basis(f, SparseMat<Q>::identity(f, 3)).vectors.empty());
    auto zero = nullspace_basis(f, SparseMat<Q>(3, 3));
    REQUIRE(zero.vectors.size() == 3);
    for (Index i = 0; i < 3; ++i)
        CHECK(zero.vectors[i] == SparseVec<Q>::unit(f, i));
    auto k = nullspace_basis(f, mat({{1, 1}}));
    REQUIRE(k.vectors.size() == 1);
    CHECK(in_span(f, span(2, {{1, -1}}), k.vectors[0]));
    CHECK(apply(f, mat({{1, 1}}), k.vectors[0]).empty());
}

TEST_CASE("column space basis")
{
    Q f;
    CHECK(column_space_basis(f, SparseMat<Q>::identity(f, 3)).vectors.size() == 3);
    CHECK(column_space_basis(f, SparseMat<Q>(2, 4)).vectors.empty());
    auto c = column_space_basis(f, mat({{1}, {2}}));
    REQUIRE(c.vectors.size() == 1);
    CHECK(c.vectors[0] == vec({1, 2}));
}

TEST_CASE("in_span")
{
    Q f;
    auto full = span(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(in_span(f, full, vec({5, -1, 2})));
    CHECK_FALSE(in_span(f, span(3, {}), vec({0, 1, 0})));
    CHECK(in_span(f, span(2, {{1, -1}}), vec({2, -2})));
    CHECK_FALSE(in_span(f, span(2, {{1, -1}}), vec({1, 1})));
    auto coeffs = solve_in_span(f, span(2, {{1, -1}}), vec({2, -2}));
    REQUIRE(coeffs);
    CHECK(*coeffs == vec({2}));
}

TEST_CASE("quotient_dim")
{
    Q f;
    auto b = span(2, {{1, 0}, {0, 1}});
    CHECK(quotient_dim(f, b, b) == 0);
    CHECK(quotient_dim(f, b, span(2, {})) == 2);
    CHECK(quotient_dim(f, b, span(2, {{1, 0}})) == 1);
}

TEST_CASE("echelon tracks relations")
{
    Q f;
    Echelon<Q> e(f, 3);
    CHECK(e.insert_tracked(vec({1, 1, 0}), 0));
    CHECK(e.insert_tracked(vec({0, 1, 1}), 1));
    CHECK_FALSE(e.insert_tracked(vec({1, 2, 1}), 2));
    CHECK(e.relation() == vec({1, 1}));
    CHECK(e.rank() == 2);
    CHECK_THROWS_AS(e.contains(vec({0, 0, 0, 1})), DomainError);
}

TEST_CASE("sparse matrix algebra")
{
    Q f;
    auto a = mat({{1, 2}, {0, 1}});
    auto b = mat({{1, -2}, {0, 1}});
    CHECK(multiply(f, a, b) == SparseMat<Q>::identity(f, 2));
    CHECK(transpose(f, a) == mat({{1, 0}, {2, 1}}));
    CHECK(sub(f, a, a) == SparseMat<Q>(2, 2));
    auto diff = first_difference(f, a, b);
    REQUIRE(diff);
    CHECK(diff->first == 1);
    CHECK(diff->second == 0);
}
