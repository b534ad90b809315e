#include <doctest.h>

#include "helpers.hpp"
#include "shc/bv_probe.hpp"
#include "shc/classical.hpp"
#include "shc/serialize.hpp"
#include "shc/verify.hpp"

using namespace shc;
using namespace shc::test;

TEST_CASE("suite names")
{
    auto names = suite_names();
    CHECK(names == std::vector<std::string>{"differential", "operad", "compmodule", "cyclic", "simplicial", "descend",
                                            "gradedmodule", "precalculus", "cartan", "gerstenhaber"});
    CHECK(is_suite("cartan"));
    CHECK_FALSE(is_suite("all"));
    auto ctx = ctx_q("T_dual");
    CHECK_THROWS_AS(verify(*ctx, "bogus", SuiteBounds{}), InputError);
}

TEST_CASE("every suite passes at low degree")
{
    for (const char* name : {"T_triv", "T_dual", "T_u2", "T_z2"}) {
        auto ctx = ctx_q(name);
        for (const auto& suite : suite_names()) {
            CAPTURE(name);
            CAPTURE(suite);
            auto r = verify(*ctx, suite, SuiteBounds{2, 2, 1});
            CHECK(r.passed());
            CHECK(r.checks > 0);
            CHECK(r.failures.empty());
        }
    }
    auto fp = ctx_p("T_full");
    for (const auto& suite : suite_names())
        CHECK(verify(*fp, suite, SuiteBounds{2, 1, 0}).passed());
}

TEST_CASE("mutations are caught with reproducers")
{
    SuiteBounds b{3, 2, 0};
    auto boundary_term = ctx_q("T_u2", EngineOptions{default_budget(), {Mutation::Kind::BoundaryTerm, 1}});
    auto r = verify(*boundary_term, "simplicial", b);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.mutation == "boundary term 1 sign flipped");
    CHECK_FALSE(r.failures[0].inputs.empty());
    CHECK_FALSE(r.failures[0].expected.empty());
    CHECK(r.failures.size() <= kMaxReportedFailures);
    CHECK(r.failure_count >= r.failures.size());

    auto cyclic = ctx_q("T_dual", EngineOptions{default_budget(), {Mutation::Kind::CyclicSign, 0}});
    CHECK_FALSE(verify(*cyclic, "cyclic", b).passed());

    auto slot = ctx_q("T_dual", EngineOptions{default_budget(), {Mutation::Kind::CompSlot, 2}});
    CHECK_FALSE(verify(*slot, "operad", b).passed());
}

TEST_CASE("reports are deterministic")
{
    auto a = ctx_q("T_u2");
    auto b = ctx_q("T_u2");
    SuiteBounds bounds{2, 2, 5};
    CHECK(suite_json(verify(*a, "gerstenhaber", bounds)).dump() ==
          suite_json(verify(*b, "gerstenhaber", bounds)).dump());
}

TEST_CASE("basis descriptions")
{
    auto ctx = ctx_q("T_full");
    auto idx = ctx->chain_layout(1).pack({{1, 0}, {1}});
    CHECK_FALSE(describe_chain(*ctx, 1, idx).empty());
    CHECK(describe_chain(*ctx, 1, idx) != describe_chain(*ctx, 1, 0));
    CHECK(describe_cochain(*ctx, 1, 3) != describe_cochain(*ctx, 1, 2));
}

TEST_CASE("BV probe")
{
    auto triv = ctx_q("T_triv");
    auto r = bv_probe(*triv, unit_class(*triv), 3);
    CHECK(r.applicable);
    CHECK(r.b_class_trivial);
    CHECK(r.delta_zero);
    CHECK(r.delta_squared_zero);
    CHECK(r.identity_failures == 0);
    CHECK(r.status == "applicable, Δ=0, identity holds");

    auto dual = ctx_q("T_dual");
    auto d = bv_probe(*dual, unit_class(*dual), 3);
    CHECK_FALSE(d.applicable);
    REQUIRE(d.failing_degree);
    CHECK(*d.failing_degree == 1);
    CHECK(d.status == "not applicable: Θ¹ not bijective");
    CHECK(bv_json(d).dump() == bv_json(bv_probe(*dual, unit_class(*dual), 3)).dump());

    auto u2 = ctx_q("T_u2");
    auto not_cycle = chain(*u2, {0, 2}, {0});
    CHECK_THROWS_WITH_AS(bv_probe(*u2, not_cycle, 2), doctest::Contains("not a cycle"), PreconditionError);
}

TEST_CASE("classical comparison")
{
    for (const char* name : {"T_triv", "T_dual", "T_u2", "T_z2"}) {
        CAPTURE(name);
        auto ctx = ctx_q(name);
        auto r = classical_compare(*ctx, 3);
        CHECK(r.passed());
        CHECK(r.checks > 0);
    }
    auto u2 = ctx_q("T_u2");
    auto notes = classical_compare(*u2, 2).notes;
    REQUIRE_FALSE(notes.empty());
    CHECK(notes.back().find("2 nonzero commutators") != std::string::npos);
    auto full = ctx_q("T_full");
    CHECK_THROWS_AS(classical_compare(*full, 2), PreconditionError);
}

TEST_CASE("JSON forms")
{
    auto ctx = ctx_q("T_full");
    Q f;
    CHECK(scalar_json(f, mpq_class(-3, 4)) == Json("-3/4"));
    CHECK(parse_scalar(f, Json("6/8"), "x") == mpq_class(3, 4));
    CHECK(parse_scalar(f, Json(5), "x") == mpq_class(5));
    PrimeField p(101);
    CHECK(scalar_json(p, 7u) == Json(7));
    CHECK(parse_scalar(p, Json("1/2"), "x") == 51u);

    auto x = combo(*ctx, 2, {{{{0, 1, 1}, {0, 1, 0}}, 3}, {{{1, 0, 0}, {0, 0, 1}}, -2}});
    auto text = chain_json(*ctx, x).dump();
    CHECK(parse_chain(*ctx, text) == x);

    auto c = add(f, basis_cochain(*ctx, 2, 1, 3), scale(f, mpq_class(1, 2), basis_cochain(*ctx, 2, 0, 7)));
    CHECK(parse_cochain(*ctx, cochain_json(*ctx, c).dump()) == c);

    CHECK_THROWS_AS(parse_chain(*ctx, R"({"degree": 1, "coords": [{"a": [0], "b": [], "c": "1"}]})"), InputError);
    CHECK_THROWS_AS(parse_chain(*ctx, R"({"degree": 1, "coords": [{"a": [0, 2], "b": [0], "c": "1"}]})"), InputError);
    CHECK_THROWS_AS(parse_cochain(*ctx, R"({"degree": 1, "matrix": [[1]]})"), InputError);
    CHECK_THROWS_AS(parse_chain(*ctx, "nope"), InputError);
}
