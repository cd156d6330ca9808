#include "parkhull/polytope.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

using namespace parkhull;

namespace {

std::vector<int> t(std::initializer_list<int> xs) { return std::vector<int>(xs); }

bool is_pf(std::initializer_list<int> xs) {
    const std::vector<int> v(xs);
    return is_parking_function(std::span<const int>(v));
}

// independent oracle: filter the whole box [1,n]^n by the sorted-bound rule
std::vector<std::vector<int>> parking_functions_by_filter(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(n, 1);
    while (true) {
        std::vector<int> b = x;
        std::sort(b.begin(), b.end());
        bool good = true;
        for (int i = 0; i < n; ++i)
            if (b[i] > i + 1) good = false;
        if (good) out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == n) {
            x[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

BigInt pf_count_formula(int n) {
    return boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1));
}

bool membership_via_facets(const std::vector<BigRational>& x, int n, int dilation) {
    for (const auto& ineq : facet_system(n).inequalities) {
        BigRational dot{0};
        for (int i = 0; i < n; ++i) dot += BigRational(ineq.coefficients[i]) * x[i];
        if (dot > BigRational(dilation) * BigRational(ineq.rhs)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("is_parking_function") {
    CHECK(is_pf({1, 1, 1}));
    CHECK(is_pf({2, 3, 1}));
    CHECK_FALSE(is_pf({2, 3, 3}));
    CHECK_FALSE(is_pf({1, 3, 3}));
    CHECK(is_pf({1}));
    CHECK_FALSE(is_pf({2}));
    CHECK_FALSE(is_pf({0, 1, 2}));
    CHECK_FALSE(is_parking_function(std::span<const int>()));
}

TEST_CASE("parking function enumeration") {
    CHECK(all_parking_functions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(all_parking_functions(2) ==
          std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(all_parking_functions(3).size() == 16);

    SECTION("stream equals the box-filter oracle, in lexicographic order") {
        for (int n = 1; n <= 5; ++n) {
            const auto got = all_parking_functions(n);
            REQUIRE(got == parking_functions_by_filter(n));
            REQUIRE(std::is_sorted(got.begin(), got.end()));
            REQUIRE(std::set(got.begin(), got.end()).size() == got.size());
        }
    }
    SECTION("cardinality (n+1)^(n-1)") {
        for (int n = 1; n <= 6; ++n) {
            std::uint64_t count = 0;
            for_each_parking_function(n, [&](const std::vector<int>&) { ++count; });
            REQUIRE(BigInt(count) == pf_count_formula(n));
        }
    }
}

TEST_CASE("facet system") {
    CHECK_THROWS_AS(facet_system(1), std::domain_error);

    const auto sys2 = facet_system(2);
    CHECK(sys2.inequalities.size() == 3);

    const auto sys3 = facet_system(3);
    REQUIRE(sys3.inequalities.size() == 7);
    int lower = 0, singles = 0, pairs = 0, full = 0;
    for (const auto& ineq : sys3.inequalities) {
        int support = 0, sum = 0;
        for (int c : ineq.coefficients) {
            support += (c != 0);
            sum += c;
        }
        if (sum < 0) {
            ++lower;
            CHECK(ineq.rhs == -1);
        } else if (support == 1) {
            ++singles;
            CHECK(ineq.rhs == 3);
        } else if (support == 2) {
            ++pairs;
        } else {
            ++full;
            CHECK(ineq.rhs == 6);
        }
    }
    CHECK(lower == 3);
    CHECK(singles == 3);
    CHECK(pairs == 0); // size n-1 subsets are not facets
    CHECK(full == 1);

    const auto sys4 = facet_system(4);
    CHECK(sys4.inequalities.size() == 15); // 4 lower + 4 + 6 + 1 upper

    for (int n = 2; n <= 7; ++n)
        CHECK(BigInt(facet_system(n).inequalities.size()) ==
              boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) - 1);
}

TEST_CASE("membership spec examples") {
    const auto in = [](std::initializer_list<int> xs, int dilation = 1) {
        const std::vector<int> v(xs);
        return membership(std::span<const int>(v), dilation);
    };
    CHECK(in({2, 2, 2}));
    CHECK_FALSE(in({3, 3, 1}));
    for (int n = 1; n <= 6; ++n) {
        const std::vector<int> ones(n, 1);
        CHECK(membership(std::span<const int>(ones)));
    }
    CHECK(in({2, 2}, 2));
    CHECK(in({2, 4}, 2));
    CHECK_FALSE(in({4, 4}, 2));
    CHECK_FALSE(in({1, 2}, 2));
}

TEST_CASE("membership over rationals") {
    const std::vector<BigRational> inside{BigRational(3, 2), BigRational(3, 2), BigRational(3, 2)};
    CHECK(membership(std::span<const BigRational>(inside)));
    const std::vector<BigRational> below{BigRational(1, 2), BigRational(2), BigRational(2)};
    CHECK_FALSE(membership(std::span<const BigRational>(below)));
}

TEST_CASE("top-k-sum membership equals the full facet list") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> num(0, 28);
    std::uniform_int_distribution<int> den(1, 4);
    for (int n = 2; n <= 5; ++n) {
        for (int dilation = 1; dilation <= 3; ++dilation) {
            for (int trial = 0; trial < 150; ++trial) {
                std::vector<BigRational> x(n);
                for (auto& xi : x) xi = BigRational(num(rng) * dilation, den(rng) * 4);
                REQUIRE(membership(std::span<const BigRational>(x), dilation) ==
                        membership_via_facets(x, n, dilation));
            }
        }
    }
}

TEST_CASE("every parking function lies in the polytope") {
    for (int n = 1; n <= 5; ++n) {
        for_each_parking_function(n, [&](const std::vector<int>& a) {
            REQUIRE(membership(std::span<const int>(a)));
        });
    }
}

TEST_CASE("vertex stream and count") {
    const auto v2 = polytope_vertices(2);
    REQUIRE(v2.size() == 3);
    CHECK(v2[0].entries == t({1, 1}));
    CHECK(v2[0].layer == 0);
    CHECK(v2[1].entries == t({1, 2}));
    CHECK(v2[2].entries == t({2, 1}));

    CHECK(vertex_count(1) == 1);
    CHECK(vertex_count(3) == 10);
    CHECK(vertex_count(4) == 41);
    CHECK(vertex_count(5) == 206);
    CHECK(vertex_count(8) == 69281);

    SECTION("stream matches the closed form and the canonical order") {
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t streamed = 0;
            int last_layer = -1;
            std::vector<int> last_entries;
            bool ordered = true;
            for_each_vertex(n, [&](const std::vector<int>& v, int layer) {
                ++streamed;
                REQUIRE(layer == vertex_layer(std::span<const int>(v)));
                if (layer < last_layer) ordered = false;
                if (layer == last_layer && !(last_entries < v)) ordered = false;
                last_layer = layer;
                last_entries = v;
            });
            REQUIRE(ordered);
            REQUIRE(BigInt(streamed) == vertex_count(n));
        }
    }
    SECTION("vertices are exactly the parking functions of vertex shape") {
        for (int n = 2; n <= 5; ++n) {
            std::set<std::vector<int>> seen;
            for_each_vertex(n, [&](const std::vector<int>& v, int) {
                REQUIRE(is_parking_function(std::span<const int>(v)));
                REQUIRE(seen.insert(v).second);
            });
        }
    }
}

TEST_CASE("edge graph") {
    CHECK_THROWS_AS(edge_graph(1), std::domain_error);

    SECTION("n=2 is a triangle") {
        const auto g = edge_graph(2);
        REQUIRE(g.vertices.size() == 3);
        REQUIRE(g.edge_count() == 3);
        for (const auto& nb : g.adjacency) REQUIRE(nb.size() == 2);
    }

    SECTION("regularity, symmetry, layer steps") {
        for (int n = 2; n <= 5; ++n) {
            const auto g = edge_graph(n);
            REQUIRE(BigInt(g.vertices.size()) == vertex_count(n));
            REQUIRE(BigInt(2 * g.edge_count()) == BigInt(n) * vertex_count(n));
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                REQUIRE(static_cast<int>(g.adjacency[i].size()) == n);
                for (std::int32_t u : g.adjacency[i]) {
                    REQUIRE(std::abs(g.vertices[i].layer - g.vertices[u].layer) <= 1);
                    const auto& back = g.adjacency[u];
                    REQUIRE(std::binary_search(back.begin(), back.end(),
                                               static_cast<std::int32_t>(i)));
                }
            }
        }
    }

    SECTION("known edge totals") {
        CHECK(edge_graph(3).edge_count() == 15);
        CHECK(edge_graph(4).edge_count() == 82);
    }
}

TEST_CASE("box scan counting") {
    ScanOptions opts;
    CHECK(count_dilated_lattice_points(2, 1, opts, "test") == 3);
    CHECK(count_dilated_lattice_points(3, 1, opts, "test") == 17);

    SECTION("budget violations carry the method name") {
        ScanOptions small;
        small.point_budget = 10;
        try {
            count_dilated_lattice_points(4, 1, small, "test_scan");
            FAIL("expected ResourceBoundError");
        } catch (const ResourceBoundError& e) {
            CHECK(e.method() == "test_scan");
        }
    }

    SECTION("shard count does not change the total") {
        const auto base = count_dilated_lattice_points(5, 1, opts, "test");
        for (int shards : {2, 3, 7}) {
            ScanOptions sharded;
            sharded.shards = shards;
            CHECK(count_dilated_lattice_points(5, 1, sharded, "test") == base);
        }
    }
}
