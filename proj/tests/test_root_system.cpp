#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hwcone/classification.hpp"
#include "hwcone/root_system.hpp"
#include "support/freudenthal.hpp"
#include "support/root_table_oracle.hpp"

using namespace hwcone;

namespace {

std::set<std::vector<int>> coord_set(const RootSystem& rs) {
    std::set<std::vector<int>> out;
    for (const auto& r : rs.positive_roots()) out.insert(r.coords);
    return out;
}

}  // namespace

TEST_CASE("rank constraints are enforced") {
    CHECK_THROWS_WITH(build_root_system({Family::A, 0}), Catch::Matchers::ContainsSubstring("rank >= 1"));
    CHECK_THROWS_WITH(build_root_system({Family::B, 1}), Catch::Matchers::ContainsSubstring("rank >= 2"));
    CHECK_THROWS_WITH(build_root_system({Family::C, 1}), Catch::Matchers::ContainsSubstring("rank >= 2"));
    CHECK_THROWS_WITH(build_root_system({Family::D, 2}), Catch::Matchers::ContainsSubstring("rank >= 3"));
    CHECK_THROWS_WITH(build_root_system({Family::E, 5}), Catch::Matchers::ContainsSubstring("{6,7,8}"));
    CHECK_THROWS_WITH(build_root_system({Family::E, 9}), Catch::Matchers::ContainsSubstring("{6,7,8}"));
    CHECK_THROWS_WITH(build_root_system({Family::F, 5}), Catch::Matchers::ContainsSubstring("rank 4"));
    CHECK_THROWS_WITH(build_root_system({Family::G, 3}), Catch::Matchers::ContainsSubstring("rank 2"));
    CHECK_NOTHROW(build_root_system({Family::D, 3}));  // D3 is legal, no relabeling to A3
}

TEST_CASE("A1 has a single positive root") {
    const auto rs = build_root_system({Family::A, 1});
    REQUIRE(rs.positive_roots().size() == 1);
    CHECK(rs.positive_roots()[0].coords == std::vector<int>{1});
}

TEST_CASE("positive roots match the Euclidean-realization tables up to rank 4") {
    struct Case {
        char family;
        int rank;
    };
    for (const auto& [family, rank] : {Case{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                       {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        CAPTURE(family, rank);
        const auto rs = build_root_system({family_from_letter(family), rank});
        CHECK(coord_set(rs) == oracle::positive_roots_in_simple_coords(family, rank));
    }
}

TEST_CASE("positive root counts match the closed forms for every family up to rank 8") {
    for (const auto& t : simple_types_up_to(8)) {
        CAPTURE(t.str());
        const auto rs = build_root_system(t);
        CHECK(rs.positive_roots().size() == static_cast<size_t>(positive_root_count(t)));
        const auto set = coord_set(rs);
        for (const auto& r : rs.positive_roots()) {
            std::vector<int> neg(r.coords);
            for (int& c : neg) c = -c;
            CHECK(set.count(neg) == 0);
        }
    }
}

TEST_CASE("simple roots are the unit vectors and negatives stay out of the positive list") {
    for (const auto& t : {SimpleType{Family::D, 5}, SimpleType{Family::F, 4}, SimpleType{Family::E, 6}}) {
        const auto rs = build_root_system(t);
        const auto set = coord_set(rs);
        for (int i = 1; i <= t.rank; ++i) CHECK(set.count(rs.simple_root(i).coords) == 1);
        for (const auto& r : rs.positive_roots()) {
            std::vector<int> neg(r.coords);
            for (int& c : neg) c = -c;
            CHECK(set.count(neg) == 0);
            // positivity: all coordinates nonnegative
            for (int c : r.coords) CHECK(c >= 0);
        }
    }
}

TEST_CASE("roots are sorted by height then lexicographic coordinates") {
    const auto rs = build_root_system({Family::B, 3});
    const auto& roots = rs.positive_roots();
    for (size_t i = 1; i < roots.size(); ++i) {
        const int h0 = roots[i - 1].height(), h1 = roots[i].height();
        CHECK(h0 <= h1);
        if (h0 == h1) CHECK(roots[i - 1].coords < roots[i].coords);
    }
}

TEST_CASE("pairing of fundamental weights with simple coroots is the Kronecker delta") {
    for (const auto& t : {SimpleType{Family::A, 3}, SimpleType{Family::B, 4}, SimpleType{Family::C, 3},
                          SimpleType{Family::D, 4}, SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
        const auto rs = build_root_system(t);
        for (int i = 1; i <= t.rank; ++i)
            for (int j = 1; j <= t.rank; ++j)
                CHECK(rs.pairing(fundamental_weight(t.rank, i), rs.simple_root(j)) == (i == j ? 1 : 0));
    }
}

TEST_CASE("pairing examples") {
    const auto a2 = build_root_system({Family::A, 2});
    const Root highest{{1, 1}};
    CHECK(a2.pairing(weyl_vector(2), highest) == 2);  // expand (rho, a1+a2) by hand: 2*2/2

    const Weight zero{{0, 0}};
    for (const auto& alpha : a2.positive_roots()) CHECK(a2.pairing(zero, alpha) == 0);

    CHECK_THROWS_AS(a2.pairing(weyl_vector(2), Root{{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(a2.pairing(weyl_vector(2), Root{{1, -1}}), std::invalid_argument);
}

TEST_CASE("pairing with the Weyl vector is at least 1 on every positive root") {
    for (const auto& t : simple_types_up_to(8)) {
        const auto rs = build_root_system(t);
        const Weight rho = weyl_vector(t.rank);
        for (const auto& alpha : rs.positive_roots()) CHECK(rs.pairing(rho, alpha) >= 1);
    }
}

TEST_CASE("is_sum_root") {
    const auto a2 = build_root_system({Family::A, 2});
    CHECK(a2.is_sum_root(Root{{1, 0}}, Root{{0, 1}}));
    CHECK_FALSE(a2.is_sum_root(Root{{1, 0}}, Root{{1, 0}}));  // 2a never a root

    const auto b2 = build_root_system({Family::B, 2});
    CHECK(b2.is_sum_root(Root{{0, 1}}, Root{{1, 1}}));  // a1 + 2a2 is a root of B2
    CHECK_FALSE(b2.is_sum_root(Root{{1, 1}}, Root{{1, 1}}));

    // negative roots participate too
    CHECK(a2.is_sum_root(Root{{1, 1}}, Root{{0, -1}}));
    CHECK_THROWS_AS(a2.is_sum_root(Root{{1, -1}}, Root{{0, 1}}), std::invalid_argument);
}

TEST_CASE("irrep dimensions of the vector representations") {
    for (int l = 3; l <= 8; ++l)
        CHECK(build_root_system({Family::D, l}).irrep_dimension(fundamental_weight(l, 1)) == 2 * l);
    for (int l = 2; l <= 8; ++l)
        CHECK(build_root_system({Family::B, l}).irrep_dimension(fundamental_weight(l, 1)) == 2 * l + 1);
}

TEST_CASE("irrep dimension basics") {
    const auto a1 = build_root_system({Family::A, 1});
    for (int m = 0; m <= 10; ++m) CHECK(a1.irrep_dimension(Weight{{m}}) == m + 1);

    const auto g2 = build_root_system({Family::G, 2});
    CHECK(g2.irrep_dimension(Weight{{0, 0}}) == 1);
    CHECK(g2.irrep_dimension(fundamental_weight(2, 1)) == 7);

    CHECK_THROWS_AS(a1.irrep_dimension(Weight{{-1}}), std::invalid_argument);
}

TEST_CASE("dual fundamental representations of A_l have equal dimensions") {
    for (int l = 2; l <= 8; ++l) {
        const auto rs = build_root_system({Family::A, l});
        for (int k = 1; k <= l; ++k)
            CHECK(rs.irrep_dimension(fundamental_weight(l, k)) == rs.irrep_dimension(fundamental_weight(l, l + 1 - k)));
    }
}

TEST_CASE("E6 dimension cross-checked by the Freudenthal oracle") {
    const auto e6 = build_root_system({Family::E, 6});
    const auto w = fundamental_weight(6, 1);
    const BigInt weyl = e6.irrep_dimension(w);
    CHECK(weyl == 27);
    CHECK(weyl == oracle::freudenthal_dimension(e6, w));
}

TEST_CASE("Freudenthal oracle agrees with the Weyl formula on assorted weights") {
    const auto a2 = build_root_system({Family::A, 2});
    CHECK(oracle::freudenthal_dimension(a2, weyl_vector(2)) == a2.irrep_dimension(weyl_vector(2)));  // adjoint, 8
    const auto g2 = build_root_system({Family::G, 2});
    CHECK(oracle::freudenthal_dimension(g2, fundamental_weight(2, 1)) == 7);
    CHECK(oracle::freudenthal_dimension(g2, fundamental_weight(2, 2)) == 14);
    const auto c3 = build_root_system({Family::C, 3});
    CHECK(oracle::freudenthal_dimension(c3, fundamental_weight(3, 2)) == c3.irrep_dimension(fundamental_weight(3, 2)));
}

TEST_CASE("product systems factor component-wise") {
    const auto prod = build_root_system(std::vector<SimpleType>{{Family::A, 2}, {Family::A, 1}});
    CHECK(prod.rank() == 3);
    CHECK(prod.positive_roots().size() == 4);
    CHECK(prod.type_string() == "A2xA1");

    // every root is supported on exactly one component
    for (const auto& r : prod.positive_roots()) {
        const bool first = r.coords[0] != 0 || r.coords[1] != 0;
        const bool second = r.coords[2] != 0;
        CHECK(first != second);
    }

    // dimensions multiply: (adjoint of A2) x (spin m of A1)
    const auto a2 = build_root_system({Family::A, 2});
    const auto a1 = build_root_system({Family::A, 1});
    const Weight w{{1, 1, 3}};
    CHECK(prod.irrep_dimension(w) == a2.irrep_dimension(Weight{{1, 1}}) * a1.irrep_dimension(Weight{{3}}));

    // pairings restrict to components
    CHECK(prod.pairing(w, Root{{1, 1, 0}}) == a2.pairing(Weight{{1, 1}}, Root{{1, 1}}));
    CHECK(prod.pairing(w, Root{{0, 0, 1}}) == 3);
}
