#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <set>

#include "boxpoly/rng.hpp"
#include "boxpoly/simplex.hpp"
#include "oracles.hpp"

using namespace boxpoly;

TEST_CASE("validation of one-row data") {
    const OneRowSimplex s({1, 1, 1, 1}, 6);
    CHECK(s.dimension() == 5);
    CHECK(s.volume() == 6);
    CHECK(s.row_sum_minus_one() == 3);
    CHECK(normalized_volume(s) == 6);

    CHECK_THROWS_WITH(OneRowSimplex({7}, 4), Catch::Matchers::ContainsSubstring("a_1"));
    CHECK_THROWS_AS(OneRowSimplex({}, 3), validation_error);
    CHECK_THROWS_AS(OneRowSimplex({0}, 0), validation_error);
    CHECK_NOTHROW(OneRowSimplex({0, 0}, 1));  // zero entries are valid HNF
}

TEST_CASE("spec string parsing") {
    const OneRowSimplex s = OneRowSimplex::parse("1,1,1,1;6");
    CHECK(s.row() == std::vector<Int>{1, 1, 1, 1});
    CHECK(s.volume() == 6);
    CHECK(s.spec_string() == "1,1,1,1;6");

    const OneRowSimplex fig1 = OneRowSimplex::parse("1x16;331");
    CHECK(fig1.dimension() == 17);
    CHECK(fig1.row() == std::vector<Int>(16, Int(1)));
    CHECK(OneRowSimplex::parse("1\xc3\x97" "16;331") == fig1);
    CHECK(OneRowSimplex::parse(" 2, 1 ; 4 ").spec_string() == "2,1;4");

    CHECK_THROWS_WITH(OneRowSimplex::parse("1,x;6"),
                      Catch::Matchers::ContainsSubstring("position"));
    CHECK_THROWS_AS(OneRowSimplex::parse("1,1;"), validation_error);
    CHECK_THROWS_AS(OneRowSimplex::parse("1,1;6 junk"), validation_error);
    CHECK_THROWS_AS(OneRowSimplex::parse("1;1"), validation_error);  // a_1 < N fails
}

TEST_CASE("group elements of the volume-6 example") {
    const OneRowSimplex s({1, 1, 1, 1}, 6);

    const GroupElementView g1 = group_element(s, 1);
    CHECK(g1.residues == std::vector<Int>{3, 5, 5, 5, 5, 1});
    CHECK(g1.age == 4);
    CHECK(in_open_box(g1));

    const GroupElementView g0 = group_element(s, 0);
    CHECK(g0.age == 0);
    CHECK(zero_residue_count(g0) == 6);
    CHECK_FALSE(in_open_box(g0));

    const GroupElementView g2 = group_element(s, 2);
    CHECK(g2.residues[0] == 0);  // (2*3) mod 6
    CHECK_FALSE(in_open_box(g2));

    std::multiset<Int> ages;
    for_each_group_element(s, [&](const GroupElementView& g) { ages.insert(g.age); });
    CHECK(ages == std::multiset<Int>{0, 2, 2, 3, 3, 4});

    CHECK_THROWS_AS(group_element(s, 6), validation_error);
    CHECK_THROWS_AS(group_element(s, -1), validation_error);
}

TEST_CASE("iterate_group matches group_element pointwise and chunks merge") {
    const OneRowSimplex s({2, 5, 3}, 11);
    std::vector<GroupElementView> whole;
    for_each_group_element(s, [&](const GroupElementView& g) { whole.push_back(g); });
    REQUIRE(whole.size() == 11);
    for (const auto& g : whole) {
        const GroupElementView direct = group_element(s, g.ell);
        CHECK(direct.residues == g.residues);
        CHECK(direct.age == g.age);
        CHECK(direct.residues == oracles::residues_direct(s, g.ell));
    }
    std::vector<GroupElementView> parts;
    for_each_group_element(s, 0, 4, [&](const GroupElementView& g) { parts.push_back(g); });
    for_each_group_element(s, 4, 11, [&](const GroupElementView& g) { parts.push_back(g); });
    REQUIRE(parts.size() == whole.size());
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i].residues == whole[i].residues);

    // single element group
    const OneRowSimplex unit({0}, 1);
    int count = 0;
    for_each_group_element(unit, [&](const GroupElementView& g) {
        ++count;
        CHECK(g.age == 0);
    });
    CHECK(count == 1);
}

TEST_CASE("closed-form age equals the residue-sum age everywhere") {
    for (int d = 2; d <= 6; ++d) {
        for (Int N = 1; N <= 40; ++N) {
            SplitMix64 rng(static_cast<std::uint64_t>(d) * 1000 +
                           N.convert_to<std::uint64_t>());
            std::vector<Int> row(static_cast<std::size_t>(d) - 1);
            for (Int& a : row) a = Int(rng.next_below(N.convert_to<std::uint64_t>()));
            const OneRowSimplex s(row, N);
            for_each_group_element(s, [&](const GroupElementView& g) {
                CHECK(closed_form_age(s, g.ell) == g.age);
            });
        }
    }
}

TEST_CASE("mirrored closed form computes the age of the negated element") {
    // 1 + ceil(l*a0/N) - sum_i floor(l*a_i/N) evaluates the age under the
    // opposite sign convention for the generator, i.e. of element N-l.
    const OneRowSimplex s({1, 1, 1, 1}, 6);
    const Int N = s.volume();
    for (Int ell = 1; ell < N; ++ell) {
        Int mirrored = 1 + ceil_div(ell * s.row_sum_minus_one(), N);
        for (const Int& a : s.row()) mirrored -= floor_div(ell * a, N);
        CHECK(mirrored == group_element(s, N - ell).age);
        if (in_open_box(group_element(s, ell)))
            CHECK(mirrored == Int(s.dimension()) + 1 - group_element(s, ell).age);
    }
}

TEST_CASE("age pairing: open-box elements pair to d+1") {
    for (int d = 2; d <= 7; ++d) {
        for (Int N = 2; N <= 30; ++N) {
            SplitMix64 rng(static_cast<std::uint64_t>(d) + N.convert_to<std::uint64_t>() * 97);
            std::vector<Int> row(static_cast<std::size_t>(d) - 1);
            for (Int& a : row) a = Int(rng.next_below(N.convert_to<std::uint64_t>()));
            const OneRowSimplex s(row, N);
            for (Int ell = 1; ell < N; ++ell) {
                const auto g = group_element(s, ell);
                const auto h = group_element(s, N - ell);
                CHECK(g.age + h.age >= 0);
                CHECK(g.age + h.age <= 2 * (d + 1));
                if (in_open_box(g)) {
                    CHECK(in_open_box(h));
                    CHECK(g.age + h.age == d + 1);
                }
            }
        }
    }
}

TEST_CASE("scan_group_stats agrees with brute force and is chunking-invariant") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng.next_below(5));
        const Int N = Int(2 + rng.next_below(120));
        std::vector<Int> row(static_cast<std::size_t>(d) - 1);
        for (Int& a : row) a = Int(rng.next_below(N.convert_to<std::uint64_t>()));
        const OneRowSimplex s(row, N);

        const auto brute = oracles::brute_force_polys(s);
        const GroupScanStats one = scan_group_stats(s, 1);
        const GroupScanStats four = scan_group_stats(s, 4);
        CHECK(IntPolynomial(std::vector<Int>(one.ages_all)) == brute.hstar);
        CHECK(IntPolynomial(std::vector<Int>(one.ages_open)) == brute.box);
        CHECK(one.ages_all == four.ages_all);
        CHECK(one.ages_open == four.ages_open);
        CHECK(one.min_age_plus_zeros == four.min_age_plus_zeros);
    }
}

TEST_CASE("general HNF simplex") {
    const GeneralHnfSimplex g({{0, 0, 0, 0, 0},
                               {3, 0, 0, 0, 0},
                               {2, 5, 0, 0, 0},
                               {1, 0, 2, 0, 0},
                               {0, 0, 0, 1, 0},
                               {8, 8, 2, 6, 9}});
    CHECK(g.dimension() == 5);
    CHECK(normalized_volume(g) == 270);
    CHECK(g.extended_matrix()[0] == std::vector<Int>{1, 0, 0, 0, 0, 0});
    CHECK(g.extended_matrix()[5] == std::vector<Int>{1, 8, 8, 2, 6, 9});

    CHECK_THROWS_AS(GeneralHnfSimplex({{0, 0}, {1, 0}, {5, 0}}), validation_error);  // zero diag
    CHECK_THROWS_AS(GeneralHnfSimplex({{1, 0}, {1, 0}, {0, 2}}), validation_error);  // row0 != 0
    CHECK_THROWS_AS(GeneralHnfSimplex({{0, 0}, {1, 1}, {0, 2}}), validation_error);  // upper entry

    const GeneralHnfSimplex unimod({{0}, {1}});
    CHECK(normalized_volume(unimod) == 1);
}

TEST_CASE("one-row simplex has volume N via the general formula") {
    const OneRowSimplex s({1, 1, 1, 1}, 6);
    std::vector<std::vector<Int>> rows(
        static_cast<std::size_t>(s.dimension()) + 1,
        std::vector<Int>(static_cast<std::size_t>(s.dimension()), Int(0)));
    for (int i = 1; i < s.dimension(); ++i) rows[static_cast<std::size_t>(i)][i - 1] = 1;
    for (int j = 0; j + 1 < s.dimension(); ++j)
        rows[static_cast<std::size_t>(s.dimension())][static_cast<std::size_t>(j)] = s.row()[static_cast<std::size_t>(j)];
    rows[static_cast<std::size_t>(s.dimension())][static_cast<std::size_t>(s.dimension()) - 1] =
        s.volume();
    CHECK(normalized_volume(GeneralHnfSimplex(rows)) == s.volume());
}

TEST_CASE("cone points and barycentric coordinates") {
    const OneRowSimplex s({1, 1}, 4);
    // identity maps to the origin
    CHECK(cone_point(s, group_element(s, 0)) == std::vector<Int>{0, 0, 0});

    // each group element's cone point has barycentric coordinates summing to
    // its age, all in [0,1)
    for_each_group_element(s, [&](const GroupElementView& g) {
        const std::vector<Int> x = cone_point(s, g);
        const auto lambda = barycentric_coordinates(s, g.age, x);
        Rat sum = 0;
        for (const Rat& l : lambda) {
            CHECK(l >= 0);
            CHECK(l < 1);
            sum += l;
        }
        CHECK(sum == g.age);
    });

    CHECK(dilate_contains(s, 1, {0, 0, 0}, false));
    CHECK_FALSE(dilate_contains(s, 1, {0, 0, 0}, true));
    CHECK(dilate_contains(s, 1, {1, 1, 4}, false));   // a vertex
    CHECK_FALSE(dilate_contains(s, 1, {2, 0, 0}, false));
}

TEST_CASE("row modulus") {
    CHECK(row_modulus({1, 1, 1, 1}) == 3);
    CHECK(row_modulus({1, 4, 2, 2, 2, 1, 2, 1, 2, 1}) == 68);
    CHECK(row_modulus({2, 1}) == 2);
    CHECK_THROWS_AS(row_modulus({1}), validation_error);      // sum(a)-1 = 0
    CHECK_THROWS_AS(row_modulus({0, 3}), validation_error);   // zero entry
    CHECK_THROWS_AS(row_modulus({}), validation_error);
}
