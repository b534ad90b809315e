#include <doctest.h>

#include "classical_oracle.hpp"
#include "shc/calculus.hpp"

using namespace oracle;

TEST_CASE("oracle differentials square to zero")
{
    for (const char* name : {"T_dual", "T_u2", "T_z2"}) {
        auto A = from(shc::builtin(name).A);
        for (int p = 1; p <= 3; ++p) {
            auto lo = hochschild_boundary(A, p), hi = hochschild_boundary(A, p + 1);
            for (std::size_t i = 0; i < lo.size(); ++i)
                for (std::size_t j = 0; j < hi[0].size(); ++j) {
                    mpq_class s = 0;
                    for (std::size_t k = 0; k < hi.size(); ++k)
                        s += lo[i][k] * hi[k][j];
                    REQUIRE(s == 0);
                }
        }
    }
}

TEST_CASE("oracle Betti numbers of the reference triples")
{
    auto dual = from(shc::builtin("T_dual").A);
    CHECK(homology_betti(dual, 3) == std::vector<std::size_t>{2, 1, 1, 1});
    CHECK(cohomology_betti(dual, 3) == std::vector<std::size_t>{2, 1, 1, 1});
    auto triv = from(shc::builtin("T_triv").A);
    CHECK(homology_betti(triv, 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(cohomology_betti(triv, 3) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("engine Betti numbers match the oracle when B = k")
{
    for (const char* name : {"T_triv", "T_dual", "T_u2", "T_z2"}) {
        CAPTURE(name);
        auto spec = shc::builtin(name);
        auto A = from(spec.A);
        shc::Context<shc::Rationals> q(spec, shc::Rationals{});
        CHECK(widen(shc::homology(q, 3).betti()) == homology_betti(A, 3));
        CHECK(widen(shc::cohomology(q, 3).betti()) == cohomology_betti(A, 3));
        shc::Context<shc::PrimeField> p(shc::builtin(name, shc::FieldConfig::prime_field(101)), shc::PrimeField(101));
        CHECK(widen(shc::homology(p, 3).betti()) == homology_betti(A, 3));
    }
}
