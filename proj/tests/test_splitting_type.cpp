#include <splitloci/splitting_type.hpp>
#include <splitloci/text_io.hpp>

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace splitloci;

namespace {
SplittingType st(std::initializer_list<long long> v) {
    return SplittingType::from_entries(std::vector<long long>(v));
}
}  // namespace

TEST_CASE("from_entries sorts and block-encodes") {
    const SplittingType e = st({2, -2, 0});
    CHECK(e.entries() == std::vector<long long>{-2, 0, 2});
    CHECK(e.blocks() == std::vector<Block>{{-2, 1}, {0, 1}, {2, 1}});

    const SplittingType f = st({0, 1, 1, 1, 2, 3, 3, 3});
    CHECK(f.blocks() == std::vector<Block>{{0, 1}, {1, 3}, {2, 1}, {3, 3}});
    CHECK(f.rank() == 8);
    CHECK(f.degree() == 14);

    const SplittingType g = st({5});
    CHECK(g.blocks() == std::vector<Block>{{5, 1}});
    CHECK(g.rank() == 1);
    CHECK(g.degree() == 5);

    CHECK_THROWS_WITH(SplittingType::from_entries({}), "empty splitting type");
}

TEST_CASE("run-length blocks round-trip to entries") {
    for (const SplittingType& e : enumerate_normalized_types(5, 5)) {
        std::vector<long long> rebuilt;
        for (const Block& b : e.blocks())
            for (long long c = 0; c < b.multiplicity; ++c) rebuilt.push_back(b.value);
        CHECK(SplittingType::from_entries(rebuilt) == e);
        long long r = 0, d = 0;
        for (const Block& b : e.blocks()) {
            r += b.multiplicity;
            d += b.multiplicity * b.value;
        }
        CHECK(r == e.rank());
        CHECK(d == e.degree());
    }
}

TEST_CASE("u invariant on fixed types") {
    CHECK(u_invariant(st({0, 0, 0})) == 0);
    CHECK(u_invariant(st({-2, 0, 2})) == 5);
    CHECK(u_invariant(st({-1, 0, 1})) == 1);
}

TEST_CASE("u invariant agrees with the block-pair formula") {
    for (const SplittingType& e : enumerate_normalized_types(5, 6))
        CHECK(u_invariant(e) == oracles::u_block_formula(e));
}

TEST_CASE("dominance on fixed pairs") {
    CHECK(dominates(st({-1, 1}), st({0, 0})));
    CHECK_FALSE(dominates(st({0, 0}), st({-1, 1})));
    CHECK(dominates(st({0, 0}), st({0, 0})));
    CHECK_FALSE(dominates(st({0, 0}), st({0, 1})));   // degree mismatch
    CHECK_FALSE(dominates(st({0, 0}), st({0, 0, 0})));  // rank mismatch
}

TEST_CASE("degree-matched model below the threshold is not dominated") {
    // Rank 2: D = e_2 - 1 forces M = -e_1 - 1 and the model (e_1+1, e_2-1).
    CHECK_FALSE(dominates(st({1, 1}), st({0, 2})));
    CHECK_FALSE(dominates(st({3, 4}), st({2, 5})));

    // Dominance of the ascending-form model ((-M)^{r-1}, D) requires
    // D >= e_r + sum_{i=2}^{r-1}(e_i - e_1); equality is reached at M = -e_1.
    for (const SplittingType& e : enumerate_normalized_types(4, 5)) {
        if (e.rank() < 2) continue;
        const long long r = e.rank();
        auto model = [&](long long m) {
            std::vector<long long> v(static_cast<std::size_t>(r - 1), -m);
            v.push_back(e.degree() + (r - 1) * m);
            return SplittingType::from_entries(std::move(v));
        };
        long long threshold = e.entries().back();
        for (std::size_t i = 1; i + 1 < e.entries().size(); ++i)
            threshold += e.entries()[i] - e.entries().front();
        const long long m0 = -e.entries().front();
        CHECK(dominates(model(m0), e));  // D equals the threshold here
        for (long long m = m0 - 3; m <= m0 + 3; ++m) {
            const long long d_twist = e.degree() + (r - 1) * m;
            if (d_twist < -m) continue;  // not of the ascending shape
            if (dominates(model(m), e)) CHECK(d_twist >= threshold);
            else CHECK(d_twist < threshold);
        }
    }
}

TEST_CASE("dominance is a partial order") {
    const auto types = enumerate_normalized_types(4, 4);
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        const SplittingType& x = types[pick(rng)];
        const SplittingType& y = types[pick(rng)];
        const SplittingType& z = types[pick(rng)];
        CHECK(dominates(x, x));
        if (dominates(x, y) && dominates(y, x)) CHECK(x == y);
        if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
    }
}

TEST_CASE("codimension-one degenerations on fixed types") {
    const auto d0 = codim_one_degenerations(st({0, 0, 0}));
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].block_index == 1);
    CHECK(d0[0].result == st({-1, 0, 1}));

    CHECK(codim_one_degenerations(st({-2, 0, 2})).empty());

    const auto d2 = codim_one_degenerations(st({0, 0, 4, 4}));
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].block_index == 1);
    CHECK(d2[0].result == st({-1, 1, 4, 4}));
    CHECK(d2[1].block_index == 2);
    CHECK(d2[1].result == st({0, 0, 3, 5}));

    // s_i = 2 leaves no middle copies.
    const auto d3 = codim_one_degenerations(st({0, 0}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].result == st({-1, 1}));
}

TEST_CASE("degenerations raise u by one and stay dominated") {
    for (const SplittingType& e : enumerate_normalized_types(6, 8)) {
        std::vector<std::size_t> indices;
        for (const Degeneration& d : codim_one_degenerations(e)) {
            indices.push_back(d.block_index);
            CHECK(u_invariant(d.result) == u_invariant(e) + 1);
            CHECK(dominates(d.result, e));
        }
        CHECK(indices == valid_b_indices(e));
    }
}

TEST_CASE("valid b indices on fixed types") {
    CHECK(valid_b_indices(st({0, 0})) == std::vector<std::size_t>{1});
    CHECK(valid_b_indices(st({0, 1, 1})).empty());
    CHECK(valid_b_indices(st({0, 0, 4, 4})) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("strata enumeration on fixed types") {
    CHECK(enumerate_strata(st({0, 0}), 1) ==
          std::vector<SplittingType>{st({0, 0}), st({-1, 1})});
    CHECK(enumerate_strata(st({-2, 0, 2}), 0) == std::vector<SplittingType>{st({-2, 0, 2})});
    CHECK(enumerate_strata(st({0, 0, 0}), 2) ==
          std::vector<SplittingType>{st({0, 0, 0}), st({-1, 0, 1})});
}

TEST_CASE("strata enumeration matches a brute-force box search") {
    for (const SplittingType& e :
         {st({0, 0}), st({0, 0, 0}), st({0, 0, 4, 4}), st({-2, 0, 2}), st({0, 1, 1, 2})}) {
        for (long long codim : {0LL, 1LL, 2LL, 3LL}) {
            auto got = enumerate_strata(e, codim);
            auto expected = oracles::brute_force_strata(e, codim);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("u is strictly monotone along strict dominance") {
    // Exhaustive over rank <= 5, spread <= 6, with a u budget of 6 below
    // each type.
    const auto types = enumerate_normalized_types(5, 6);
    for (const SplittingType& upper : types) {
        for (const SplittingType& lower : enumerate_strata(upper, 6)) {
            if (lower == upper) continue;
            CHECK(u_invariant(lower) > u_invariant(upper));
        }
    }
}

TEST_CASE("hasse diagram on fixed types") {
    using Edge = std::pair<SplittingType, SplittingType>;
    CHECK(hasse_diagram(st({0, 0}), 1) == std::vector<Edge>{{st({-1, 1}), st({0, 0})}});
    CHECK(hasse_diagram(st({0, 0, 0}), 2) ==
          std::vector<Edge>{{st({-1, 0, 1}), st({0, 0, 0})}});
    CHECK(hasse_diagram(st({-2, 0, 2}), 0).empty());
}

TEST_CASE("hasse edges are covering relations and reach every non-maximal node") {
    for (const SplittingType& e : {st({0, 0, 0, 0}), st({0, 0, 2, 2}), st({1, 1, 1})}) {
        const long long codim = 3;
        const auto nodes = enumerate_strata(e, codim);
        const auto edges = hasse_diagram(e, codim);
        for (const auto& [lo, up] : edges) {
            CHECK(dominates(lo, up));
            CHECK(lo != up);
            CHECK(u_invariant(lo) > u_invariant(up));
            for (const SplittingType& z : nodes) {
                if (z == lo || z == up) continue;
                CHECK_FALSE((dominates(lo, z) && dominates(z, up)));
            }
        }
        for (const SplittingType& n : nodes) {
            if (n == e) continue;
            const bool has_out = std::any_of(edges.begin(), edges.end(),
                                             [&](const auto& ed) { return ed.first == n; });
            CHECK(has_out);
        }
    }
}

TEST_CASE("normalized enumeration is anchored and within spread") {
    const auto types = enumerate_normalized_types(6, 8);
    CHECK(types.size() == 2002);
    std::set<std::vector<long long>> seen;
    for (const SplittingType& e : types) {
        CHECK(e.entries().front() == 0);
        CHECK(e.spread() <= 8);
        CHECK(e.rank() <= 6);
        CHECK(seen.insert(e.entries()).second);
    }
}
