#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "shc/triple.hpp"

using namespace shc;
using namespace shc::test;

namespace {

std::vector<mpq_class> elem(std::vector<long> v)
{
    return {v.begin(), v.end()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const ValidationCheck& check_named(const ValidationReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c;
    FAIL("no check named " << name);
    return r.checks.front();
}

}  // namespace

TEST_CASE("multiply on builtin algebras")
{
    auto dual = builtin("T_dual").A;
    CHECK(multiply(dual, elem({0, 1}), elem({0, 1})) == elem({0, 0}));
    CHECK(multiply(dual, elem({1, 0}), elem({3, -2})) == elem({3, -2}));
    CHECK(multiply(dual, elem({1, 1}), elem({1, 1})) == elem({1, 2}));

    auto u2 = builtin("T_u2").A;
    // basis E11, E22, E12
    CHECK(multiply(u2, elem({1, 0, 0}), elem({0, 0, 1})) == elem({0, 0, 1}));
    CHECK(multiply(u2, elem({0, 0, 1}), elem({1, 0, 0})) == elem({0, 0, 0}));
    CHECK(multiply(u2, elem({1, 1, 0}), elem({2, 3, 5})) == elem({2, 3, 5}));
}

TEST_CASE("validate builtins")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        CHECK(validate(builtin(name)).ok());
        CHECK(validate(builtin(name, FieldConfig::prime_field(101))).ok());
    }
}

TEST_CASE("validate reports the centrality witness")
{
    auto t = load_json(read_file(SHC_TEST_DATA "/eps_noncentral.json"));
    auto r = validate(t);
    CHECK_FALSE(r.ok());
    REQUIRE(r.failures().size() == 1);
    const auto& c = check_named(r, "eps.central");
    CHECK_FALSE(c.passed);
    // (B index of x, A index of E11): eps(x) = E12 fails to commute with E11
    CHECK(c.witness == std::vector<int>{1, 0});
    CHECK(check_named(r, "eps.multiplicative").passed);
}

TEST_CASE("validate catches broken axioms")
{
    auto t = builtin("T_dual");
    t.A.mult[1][1] = elem({1, 0});
    t.A.mult[1][0] = elem({0, 0});
    auto r = validate(t);
    CHECK_FALSE(check_named(r, "A.unit").passed);

    auto t2 = builtin("T_full");
    t2.eps = {{1, 0}, {0, 0}};
    CHECK(check_named(validate(t2), "eps.unital").passed);
    t2.eps = {{0, 0}, {1, 1}};
    CHECK_FALSE(check_named(validate(t2), "eps.unital").passed);

    auto t3 = builtin("T_u2");
    t3.A.mult[2][1] = elem({1, 0, 0});
    CHECK_FALSE(check_named(validate(t3), "A.associativity").passed);
}

TEST_CASE("load_json round trip")
{
    for (const auto& name : builtin_names()) {
        auto t = builtin(name);
        CHECK(load_json(to_json(t)) == t);
        auto tp = builtin(name, FieldConfig::prime_field(103));
        CHECK(load_json(to_json(tp)) == tp);
    }
}

TEST_CASE("load_json errors")
{
    auto doc = nlohmann::json::parse(to_json(builtin("T_dual")));
    auto missing = doc;
    missing["A"].erase("unit");
    CHECK_THROWS_WITH_AS(load_json(missing.dump()), doctest::Contains("missing \"unit\""), InputError);

    CHECK_THROWS_WITH_AS(load_json(read_file(SHC_TEST_DATA "/modulus15.json")), doctest::Contains("not prime"),
                         InputError);

    auto bad_shape = doc;
    bad_shape["epsilon"] = {{1}};
    CHECK_THROWS_AS(load_json(bad_shape.dump()), InputError);
    CHECK_THROWS_AS(load_json("{not json"), InputError);
    CHECK_THROWS_AS(load_json("[1, 2]"), InputError);
}

TEST_CASE("builtin lookup")
{
    auto dual = builtin("T_dual");
    CHECK(dual.A.dim == 2);
    CHECK(dual.B.dim == 1);
    auto u2 = builtin("T_u2");
    CHECK(u2.A.dim == 3);
    CHECK(multiply(u2.A, elem({1, 0, 0}), elem({0, 0, 1})) != multiply(u2.A, elem({0, 0, 1}), elem({1, 0, 0})));
    CHECK(validate(u2).ok());
    CHECK_THROWS_WITH_AS(builtin("T_bogus"), doctest::Contains("unknown builtin"), InputError);
}
