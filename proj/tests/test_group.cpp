#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "flat4/error.hpp"

#include <set>

using namespace flat4;
using flat4::testing::shipped_catalog;

namespace {

// Column i of a signed permutation: B e_i = sign * e_target.
std::pair<int, int> image(const IntMatrix& b, int i) {
    for (int r = 0; r < b.rows(); ++r)
        if (b(r, i) != 0) return {r, static_cast<int>(b(r, i))};
    return {-1, 0};
}

// Matrix of B acting on Lambda^2 R^4 in the basis e_i ^ e_j, i < j.
IntMatrix exterior_square(const IntMatrix& b) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) pairs.push_back({i, j});
    IntMatrix out(6, 6);
    for (int col = 0; col < 6; ++col) {
        auto [ri, si] = image(b, pairs[col].first);
        auto [rj, sj] = image(b, pairs[col].second);
        int sign = si * sj;
        if (ri > rj) std::swap(ri, rj), sign = -sign;
        for (int row = 0; row < 6; ++row)
            if (pairs[row] == std::pair{ri, rj}) out(row, col) = sign;
    }
    return out;
}

// Dimension of the common fixed space of a family of square matrices.
int invariant_dimension(const std::vector<IntMatrix>& mats) {
    int n = mats.front().rows();
    IntMatrix stacked(static_cast<int>(mats.size()) * n, n);
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked(static_cast<int>(k) * n + i, j) = mats[k](i, j) - (i == j);
    return static_cast<int>(integer_kernel(stacked).size());
}

std::set<IntMatrix> linear_parts(const BieberbachGroup& g) {
    std::set<IntMatrix> out;
    for (const auto& h : g.holonomy()) out.insert(h.B);
    return out;
}

}  // namespace

TEST_CASE("torus") {
    auto g = build_group("1", {});
    CHECK(g.order() == 1);
    CHECK(g.holonomy().front() == AffineIsometry::identity());
    for (int p = 0; p <= 4; ++p) CHECK(betti(g, p) == binomial(4, p));
    CHECK(g.is_orientable());
    CHECK(g.is_diagonal_type());
    CHECK(sunada_numbers(g).total() == 0);
}

TEST_CASE("group 67 has D3 holonomy with the tabled matrices") {
    const auto& g = shipped_catalog().group("67");
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    std::set<IntMatrix> expect{IntMatrix::identity(4)};
    for (auto block : {"d(1,T)", "d(1,T^t)", "d(-1,J,1)", "d(-1,1,J)", "d(-1,K)"})
        expect.insert(parse_block_matrix(block));
    CHECK(linear_parts(g) == expect);
    // Three involutions and two elements of order three.
    int involutions = 0;
    for (const auto& h : g.holonomy())
        if (h.B * h.B == IntMatrix::identity(4) && !(h.B == IntMatrix::identity(4))) ++involutions;
    CHECK(involutions == 3);
}

TEST_CASE("group 57 has Z2 x Z4 holonomy with the tabled matrices") {
    const auto& g = shipped_catalog().group("57");
    CHECK(g.order() == 8);
    CHECK(g.is_abelian());
    std::set<IntMatrix> expect{IntMatrix::identity(4)};
    for (auto block : {"d(I~,-J~)", "d(I,-I)", "d(I~,J~)", "d(I~,I)", "d(I,-J~)", "d(I~,-I)", "d(I,J~)"})
        expect.insert(parse_block_matrix(block));
    CHECK(expect.size() == 8u);
    CHECK(linear_parts(g) == expect);
}

TEST_CASE("tabled linear parts for every table") {
    auto tables = testing::read_json("tables.json").at("tables");
    for (const auto& t : tables)
        for (const auto& id : t.at("ids")) {
            std::string gid = id.get<std::string>();
            if (!shipped_catalog().contains(gid)) continue;
            const auto& g = shipped_catalog().group(gid);
            CAPTURE(gid);
            std::set<IntMatrix> expect{IntMatrix::identity(4)};
            for (const auto& col : t.at("columns")) expect.insert(parse_block_matrix(col.at(0).get<std::string>()));
            CHECK(linear_parts(g) == expect);
        }
}

TEST_CASE("element invariants") {
    const auto& g2 = shipped_catalog().group("2");
    auto inv = element_invariants(g2.holonomy().at(1));
    CHECK(inv.n_B == 3);
    CHECK(inv.volume == QuadNumber(1));
    CHECK(inv.traces == krawtchouk_row(1));
    CHECK(inv.b_plus == RatVector{0, 0, Rational(1, 2), 0});

    const auto& g45 = shipped_catalog().group("45");
    int idx = g45.coset_of(parse_block_matrix("d(I,-J~)"));
    REQUIRE(idx > 0);
    CHECK(element_invariants(g45.holonomy()[idx]).traces == TraceRow{1, 2, 2, 2, 1});

    auto id = element_invariants(AffineIsometry::identity());
    CHECK(id.n_B == 4);
    CHECK(id.traces == TraceRow{1, 4, 6, 4, 1});
    CHECK(id.volume == QuadNumber(1));

    const auto& g47 = shipped_catalog().group("47");
    auto i47 = element_invariants(g47.holonomy().at(1));
    CHECK(i47.volume == QuadNumber::sqrt3());
    CHECK(i47.offsets == std::vector<Rational>{Rational(1, 3), 0});
}

TEST_CASE("sunada numbers") {
    CHECK(sunada_numbers(shipped_catalog().group("33")).listed() == std::array<int, 6>{1, 2, 1, 3, 0, 0});
    CHECK(sunada_numbers(shipped_catalog().group("4")).listed() == std::array<int, 6>{1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(sunada_numbers(shipped_catalog().group("3")), NotDiagonalType);
}

TEST_CASE("betti numbers") {
    const auto& g5 = shipped_catalog().group("5");
    CHECK(betti(g5, 1) == 2);
    CHECK(betti(g5, 2) == 2);
    // The tabled header for 67 reads 0,0; the trace rows of the same table give 1,0.
    const auto& g67 = shipped_catalog().group("67");
    CHECK(betti(g67, 1) == 1);
    CHECK(betti(g67, 2) == 0);
    CHECK_THROWS(betti(g5, 5));
}

TEST_CASE("betti numbers agree with invariant subspaces") {
    for (const auto& g : shipped_catalog().groups) {
        CAPTURE(g.id());
        std::vector<IntMatrix> mats, squares;
        for (const auto& h : g.holonomy()) {
            mats.push_back(h.B);
            squares.push_back(exterior_square(h.B));
        }
        CHECK(betti(g, 1) == invariant_dimension(mats));
        CHECK(betti(g, 2) == invariant_dimension(squares));
    }
}

TEST_CASE("orientability and diagonal type") {
    const auto& g24 = shipped_catalog().group("24");
    CHECK(g24.is_orientable());
    CHECK(g24.is_diagonal_type());
    const auto& g12 = shipped_catalog().group("12");
    CHECK_FALSE(g12.is_orientable());
    CHECK_FALSE(g12.is_diagonal_type());
}

TEST_CASE("catalog-wide group properties") {
    const std::set<int> orders{1, 2, 3, 4, 6, 8, 12, 24};
    for (const auto& g : shipped_catalog().groups) {
        CAPTURE(g.id());
        CHECK(orders.count(g.order()) == 1);
        CHECK(g.holonomy().front() == AffineIsometry::identity());
        for (const auto& h : g.holonomy()) {
            auto row = trace_row(h.B);
            std::int64_t alt = row[0] - row[1] + row[2] - row[3] + row[4];
            CHECK(alt == 0);
            // Closed under products.
            for (const auto& k : g.holonomy()) CHECK(g.coset_of((h.compose(k)).B) >= 0);
        }
        CHECK(betti(g, 0) == 1);
        CHECK(betti(g, 4) == (g.is_orientable() ? 1 : 0));
        if (g.is_orientable())
            for (int p = 0; p <= 4; ++p) CHECK(betti(g, p) == betti(g, 4 - p));

        if (!g.is_diagonal_type()) continue;
        auto s = sunada_numbers(g);
        CHECK(s.total() == g.order() - 1);
        for (int d = 0; d < 4; ++d) CHECK(s.at(d, 0) == 0);
        if (g.is_orientable())
            for (int d : {1, 3})
                for (int t = 0; t <= d; ++t) CHECK(s.at(d, t) == 0);
    }
}

TEST_CASE("composition convention") {
    auto a = make_isometry(parse_block_matrix("d(I,1,-1)"), parse_translation("e3/2"));
    auto b = make_isometry(parse_block_matrix("d(I,-1,1)"), parse_translation("e2/2"));
    auto ab = a.compose(b);
    RatVector x{Rational(1, 5), Rational(2, 7), Rational(-1, 3), Rational(3, 11)};
    CHECK(reduce_mod_lattice(ab.apply(x)) == reduce_mod_lattice(a.apply(b.apply(x))));
    CHECK(a.compose(a) == AffineIsometry::identity());
    auto inv = a.inverse_exact();
    auto one = a.compose_exact(inv);
    CHECK(one.B == IntMatrix::identity(4));
    CHECK(reduce_mod_lattice(one.b) == RatVector(4, Rational(0)));
}

TEST_CASE("build_group error paths") {
    IntMatrix shear{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK_THROWS_WITH_AS(build_group("x", {{shear, RatVector(4, Rational(0))}}),
                         doctest::Contains("non-orthogonal"), InvalidGroup);

    auto reflection = AffineIsometry{parse_block_matrix("d(I,1,-1)"), RatVector(4, Rational(0))};
    CHECK_THROWS_WITH_AS(build_group("x", {reflection}), doctest::Contains("not torsion-free"), InvalidGroup);

    IntMatrix cycle{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    IntMatrix swap{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    RatVector zero(4, Rational(0));
    CHECK_THROWS_WITH_AS(build_group("x", {{cycle, zero}, {swap, zero}, {parse_block_matrix("d(-1,I,1)"), zero}}),
                         doctest::Contains("not closed within bound"), InvalidGroup);

    const auto& excl = shipped_catalog().excluded;
    REQUIRE(excl.size() == 1u);
    CHECK(excl[0].id == "29'");
    CHECK(excl[0].build_error.find("translation lattice") != std::string::npos);
}
