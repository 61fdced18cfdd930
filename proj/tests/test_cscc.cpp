#include <catch2/catch_amalgamated.hpp>

#include "sbb/cscc.hpp"

using namespace sbb;

TEST_CASE("worked double-error example is reproduced exactly", "[cscc]") {
    const ReducedLP lp = cscc_reduced_lp(3, 10, 5, 2);
    const std::vector<WeightProfile> cols = {
        {5, 5, 5}, {6, 5, 5}, {5, 5, 4}, {7, 5, 5},
        {6, 6, 5}, {6, 5, 4}, {5, 4, 4}, {5, 5, 3}};
    CHECK(lp.cols.profiles == cols);
    const std::vector<ExactInteger> row = {76, 15, 15, 30, 75, 150, 75, 30};
    REQUIRE(lp.matrix.size() == 1);
    CHECK(lp.matrix.front() == row);

    const ExactInteger o555 = ExactInteger(252) * 252 * 252;
    CHECK(lp.objective.front() == o555);
    CHECK(lp.objective[1] == ExactInteger(3) * 210 * 252 * 252); // [6,5,5]

    CHECK(cscc_gsp_bound({3, 10, 5, 5}) == ratio(4000752, 19));
    CHECK(cscc_gsp_bound({3, 10, 5, 6}) == ratio(4000752, 19)); // same t
    CHECK(decimal_string(ratio(4000752, 19)) == "210565.894");
}

TEST_CASE("single-error closed form", "[cscc]") {
    CHECK(cscc_closed_form_t1(3, 10, 5) == 2667168);
    CHECK(cscc_closed_form_t1(1, 4, 2) == 2);
    CHECK(cscc_closed_form_t1(2, 2, 1) == 2);
    CHECK_THROWS_AS(cscc_closed_form_t1(1, 4, 0), domain_error);
    CHECK_THROWS_AS(cscc_closed_form_t1(1, 4, 4), domain_error);
}

TEST_CASE("double-error closed form", "[cscc]") {
    CHECK(cscc_closed_form_t2(3, 10, 5) == ratio(4000752, 19));
    CHECK(cscc_closed_form_t2(2, 8, 2) == 16);
    CHECK_THROWS_AS(cscc_closed_form_t2(1, 10, 5), domain_error);
    CHECK_THROWS_AS(cscc_closed_form_t2(2, 8, 1), domain_error);
    CHECK_THROWS_AS(cscc_closed_form_t2(2, 8, 7), domain_error);
}

TEST_CASE("closed forms equal the reduced program on a dense grid", "[cscc]") {
    for (int m = 1; m <= 4; ++m) {
        for (int L = 4; L <= 8; ++L) {
            for (int w = 1; w <= L - 1; ++w)
                CHECK(cscc_closed_form_t1(m, L, w) ==
                      min_ratio(cscc_reduced_lp(m, L, w, 1)));
            if (m < 2)
                continue;
            for (int w = 2; w <= L - 2; ++w)
                CHECK(cscc_closed_form_t2(m, L, w) ==
                      min_ratio(cscc_reduced_lp(m, L, w, 2)));
        }
    }
}

TEST_CASE("one-row optimum agrees with the full simplex", "[cscc]") {
    for (int L = 4; L <= 6; ++L) {
        for (int w = 1; w < L; ++w) {
            const ReducedLP lp = cscc_reduced_lp(2, L, w, 2);
            CHECK(min_ratio(lp) == solve_min(lp).value);
        }
    }
}

TEST_CASE("large-distance closed-form bound", "[cscc]") {
    CHECK(cscc_gen_codesize_bound({4, 6, 3, 12}) == 625);
    CHECK(cscc_gen_codesize_bound({2, 5, 2, 6}) == ratio(100, 9));
    CHECK(cscc_gen_codesize_bound({4, 8, 3, 16}) == ratio(4802, 3));
    CHECK_THROWS_AS(cscc_gen_codesize_bound({4, 6, 3, 8}), domain_error);
    CHECK_THROWS_AS(cscc_gen_codesize_bound({2, 5, 2, 13}), domain_error);
    CHECK_THROWS_AS(cscc_gen_codesize_bound({2, 5, 4, 6}), domain_error);
}

TEST_CASE("instance validation", "[cscc]") {
    CHECK_THROWS_AS(validate(CsccInstance{0, 4, 2, 3}), domain_error);
    CHECK_THROWS_AS(validate(CsccInstance{2, 4, 5, 3}), domain_error);
    CHECK_THROWS_AS(validate(CsccInstance{2, 4, 2, 0}), domain_error);
    CHECK_THROWS_AS(validate(CsccInstance{2, 4, 2, 9}), domain_error);
    CHECK_NOTHROW(validate(CsccInstance{2, 4, 2, 8}));
}

TEST_CASE("radius zero collapses to the orbit size", "[cscc]") {
    // Packing radius 0 means the bound is simply |S| = binom(L,w)^m.
    const ReducedLP lp = cscc_reduced_lp(2, 4, 2, 0);
    CHECK(min_ratio(lp) == ExactRational(ExactInteger(6) * 6));
}
