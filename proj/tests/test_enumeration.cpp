#include <doctest.h>

#include <set>

#include <adcert/enumeration.hpp>

using namespace adcert;

TEST_CASE("partition counts from the pentagonal recurrence")
{
    const std::vector<int> small{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    const auto p = partition_counts(40);
    for (unsigned k = 0; k < small.size(); ++k) {
        CHECK(p[k] == small[k]);
    }
    CHECK(p[30] == 5604);
    CHECK(p[40] == 37338);
    CHECK(partition_count(40) == 37338);
}

TEST_CASE("partition bound")
{
    CHECK(partition_bound(1) == doctest::Approx(13.0019540840570).epsilon(1e-13));
    for (unsigned k = 1; k <= 40; ++k) {
        CHECK(partition_count(k).convert_to<double>() < partition_bound(k));
    }
}

TEST_CASE("polyindices of order k are distinct, have order k and number p(k)")
{
    for (unsigned k = 0; k <= 20; ++k) {
        const auto polys = polyindices_of_order(k);
        std::set<Polyindex1> seen(polys.begin(), polys.end());
        CHECK(seen.size() == polys.size());
        CHECK(BigInt(polys.size()) == partition_count(k));
        for (const auto &a : polys) {
            CHECK(order(a) == k);
        }
    }
    // single part (k) first: alpha(k-1) = 1
    CHECK(polyindices_of_order(4).front() == Polyindex1{{3, 1}});
}

TEST_CASE("weak compositions")
{
    const auto c = weak_compositions(2, 3);
    CHECK(c.size() == 6);
    CHECK(c.front() == std::vector<unsigned>{0, 0, 2});
    CHECK(c.back() == std::vector<unsigned>{2, 0, 0});
    CHECK(std::is_sorted(c.begin(), c.end()));
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(BigInt(weak_compositions(k, 4).size()) == binomial(k + 3, 3));
    }
}

TEST_CASE("index set sizes")
{
    const std::vector<std::vector<int>> expected{
        {1, 4, 14, 40, 105, 252, 574, 1240, 2580},
        {1, 6, 27, 98, 315, 918, 2492},
        {1, 8, 44, 192, 726},
    };
    for (unsigned d = 1; d <= 3; ++d) {
        CHECK(index_slot_count(d) == 2 * d + 2);
        for (unsigned k = 0; k < expected[d - 1].size(); ++k) {
            CHECK(index_set_count(d, k) == expected[d - 1][k]);
        }
    }
    for (unsigned d = 1; d <= 2; ++d) {
        for (unsigned k = 0; k <= 6; ++k) {
            CHECK(BigInt(IndexSet(d, k).collect().size()) == index_set_count(d, k));
        }
    }
}

TEST_CASE("index set elements are distinct, ordered and of the right order")
{
    for (unsigned d = 1; d <= 2; ++d) {
        const auto all = IndexSet(d, 5).collect();
        std::set<IndexQuadruple> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (const auto &q : all) {
            CHECK(total_order(q) == 5);
            CHECK(q.dim() == d);
        }
    }
    const auto k0 = IndexSet(2, 0).collect();
    REQUIRE(k0.size() == 1);
    CHECK(k0.front() == IndexQuadruple::zero(2));
}

TEST_CASE("iterator streams the same sequence as collect")
{
    const IndexSet set(2, 4);
    const auto all = set.collect();
    std::size_t i = 0;
    for (const auto &q : set) {
        REQUIRE(i < all.size());
        CHECK(q == all[i]);
        ++i;
    }
    CHECK(i == all.size());
}

TEST_CASE("monotone sequence identity")
{
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 0; k <= 12; ++k) {
            const auto [direct, formula] = sequence_count_identity(d, k);
            CHECK(direct == formula);
        }
    }
    CHECK(sequence_count_identity(1, 1).second == 4);
    CHECK(sequence_count_identity(2, 3).second == 56);
}

TEST_CASE("terms bound report")
{
    const auto rows = terms_bound_report(1, 8, 1000);
    REQUIRE(rows.size() == 9);
    CHECK(rows[4].enumerated_count.has_value());
    CHECK(*rows[4].enumerated_count == 105);
    CHECK_FALSE(rows[8].enumerated_count.has_value());
    CHECK(rows[8].formula_count == 2580);
    for (const auto &r : rows) {
        CHECK(r.formula_count.convert_to<double>() <= r.partition_bound_product);
        if (r.k > 0) {
            CHECK(r.formula_count.convert_to<double>() <= std::pow(r.fitted_base, r.k) * (1 + 1e-12));
        }
    }
}
