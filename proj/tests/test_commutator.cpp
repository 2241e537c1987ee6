#include <doctest.h>

#include <adcert/commutator.hpp>

using namespace adcert;

namespace
{

IndexQuadruple quad(Polyindex1 alpha, PolyindexD beta, Polyindex1 a, PolyindexD b)
{
    return {std::move(alpha), std::move(beta), std::move(a), std::move(b)};
}

} // namespace

TEST_CASE("base expansion")
{
    const auto e = FormalExpansion::base(2);
    CHECK(e.level() == 0);
    CHECK(e.size() == 1);
    CHECK(e.coefficient(IndexQuadruple::zero(2)) == 1);
}

TEST_CASE("closed coefficients on small keys")
{
    CHECK(closed_coefficient(IndexQuadruple::zero(1)) == 1);
    // alpha = {0:2}: 2! / (2! 1! 1!) = 1
    CHECK(closed_coefficient(quad(Polyindex1{{0, 2}}, PolyindexD(1), {}, PolyindexD(1))) == 1);
    // alpha = delta_0, a = delta_0: 2! / 1 = 2
    CHECK(closed_coefficient(quad(Polyindex1{{0, 1}}, PolyindexD(1), Polyindex1{{0, 1}}, PolyindexD(1))) == 2);
    // alpha = delta_1: 2! / 2! = 1
    CHECK(closed_coefficient(quad(Polyindex1{{1, 1}}, PolyindexD(1), {}, PolyindexD(1))) == 1);
}

TEST_CASE("closed expansions: term counts and coefficient sums")
{
    const std::vector<std::pair<int, int>> d1{{4, 4}, {14, 20}, {40, 116}, {105, 756}};
    const std::vector<std::pair<int, int>> d2{{6, 6}, {27, 42}, {98, 330}, {315, 2850}};
    for (unsigned k = 1; k <= 4; ++k) {
        const auto e1 = closed_expansion(1, k);
        CHECK(e1.size() == static_cast<std::size_t>(d1[k - 1].first));
        CHECK(e1.coefficient_sum() == d1[k - 1].second);
        const auto e2 = closed_expansion(2, k);
        CHECK(e2.size() == static_cast<std::size_t>(d2[k - 1].first));
        CHECK(e2.coefficient_sum() == d2[k - 1].second);
    }
    for (const auto &t : closed_expansion(1, 1).to_terms()) {
        CHECK(t.coefficient == 1);
    }
}

TEST_CASE("one adjoint step reproduces the next closed form")
{
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 0; k < 4; ++k) {
            const auto stepped = adjoint_step(closed_expansion(d, k));
            const auto expected = closed_expansion(d, k + 1);
            CHECK(stepped.level() == k + 1);
            CHECK_FALSE(first_difference(expected, stepped).has_value());
            CHECK(stepped == expected);
        }
    }
}

TEST_CASE("threaded steps merge to the same map")
{
    const auto e = closed_expansion(2, 4);
    CHECK(adjoint_step(e, 1) == adjoint_step(e, 3));
}

TEST_CASE("iterated and stepwise induction reports")
{
    const auto it = verify_iterated(1, 6);
    CHECK(it.pass());
    CHECK(it.levels.size() == 6);
    const auto st = verify_induction(2, 4);
    CHECK(st.pass());
    for (const auto &l : st.levels) {
        CHECK(l.pass);
        CHECK(l.closed_terms == l.stepped_terms);
    }
}

TEST_CASE("a perturbed expansion is caught with its key")
{
    auto e = closed_expansion(1, 3);
    const auto key = e.to_terms().front().key;
    auto bad = e;
    bad.add(key, 1);
    const auto diff = first_difference(e, bad);
    REQUIRE(diff.has_value());
    CHECK(diff->key == key);
    CHECK(diff->actual == diff->expected + 1);
}

TEST_CASE("add rejects keys of the wrong order or dimension")
{
    FormalExpansion e(1, 2);
    CHECK_THROWS_AS(e.add(IndexQuadruple::zero(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(e.add(IndexQuadruple::zero(2), 1), std::invalid_argument);
}
