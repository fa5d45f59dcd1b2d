#include <splitloci/int_matrix.hpp>

#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace splitloci;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

void check_snf_contract(const IntMatrix& a, const SmithDecomposition& d) {
    CHECK(d.u * a * d.v == d.s);
    const Int du = determinant(d.u), dv = determinant(d.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i < d.s.rows(); ++i)
        for (std::size_t j = 0; j < d.s.cols(); ++j)
            if (i != j) CHECK(d.s(i, j) == 0);
    const std::size_t q = std::min(d.s.rows(), d.s.cols());
    for (std::size_t i = 0; i < q; ++i) CHECK(d.s(i, i) >= 0);
    for (std::size_t i = 0; i + 1 < q; ++i) {
        const Int& cur = d.s(i, i);
        const Int& nxt = d.s(i + 1, i + 1);
        if (cur == 0) CHECK(nxt == 0);
        else CHECK(nxt % cur == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
    SECTION("unimodular-row pair") {
        const IntMatrix a = mat({{1, 1, 1}, {-1, 0, 1}});
        const auto d = smith_normal_form(a);
        check_snf_contract(a, d);
        CHECK(d.s(0, 0) == 1);
        CHECK(d.s(1, 1) == 1);
        CHECK(d.s(1, 2) == 0);
    }
    SECTION("torsion pair") {
        const IntMatrix a = mat({{1, 1, 1}, {0, 3, 6}});
        const auto d = smith_normal_form(a);
        check_snf_contract(a, d);
        CHECK(d.s(0, 0) == 1);
        CHECK(d.s(1, 1) == 3);
    }
    SECTION("zero matrix") {
        const IntMatrix a(3, 2);
        const auto d = smith_normal_form(a);
        CHECK(d.s == a);
        CHECK(d.u == IntMatrix::identity(3));
        CHECK(d.v == IntMatrix::identity(2));
    }
}

TEST_CASE("smith normal form contract on random matrices") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 400; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
        const auto d = smith_normal_form(a);
        check_snf_contract(a, d);
    }
}

TEST_CASE("smith diagonal equals the gcd-of-minors diagonal") {
    std::mt19937_64 rng(13371337);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
        const auto d = smith_normal_form(a);
        const std::vector<Int> expected = oracles::minor_gcd_diagonal(a);
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(d.s(i, i) == expected[i]);
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> entry(-7, 7);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
        CHECK(determinant(a) == oracles::cofactor_det(a));
    }
}

TEST_CASE("matrix product and transpose") {
    const IntMatrix a = mat({{1, 2}, {3, 4}});
    const IntMatrix b = mat({{0, 1}, {1, 0}});
    CHECK(a * b == mat({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == mat({{1, 3}, {2, 4}}));
    CHECK(apply(a, {Int(1), Int(1)}) == std::vector<Int>{Int(3), Int(7)});
}
