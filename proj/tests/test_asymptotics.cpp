#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sbb/asymptotics.hpp"
#include "sbb/cscc.hpp"

using namespace sbb;

TEST_CASE("binary entropy", "[asymptotics]") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK_THAT(binary_entropy(0.11),
               Catch::Matchers::WithinAbs(0.4999, 1e-3));
    for (double p = 0.05; p < 0.5; p += 0.05)
        CHECK_THAT(binary_entropy(p),
                   Catch::Matchers::WithinAbs(binary_entropy(1.0 - p), 1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), domain_error);
}

TEST_CASE("relative distance ceiling of the constant-weight space",
          "[asymptotics]") {
    CHECK(delta_star(0.5) == 0.5);
    CHECK_THAT(delta_star(0.3), Catch::Matchers::WithinAbs(0.42, 1e-15));
    CHECK(delta_star(0.0) == 0.0);
    CHECK(delta_star(1.0) == 0.0);
    CHECK_THROWS_AS(delta_star(-0.01), domain_error);
}

TEST_CASE("log2 of binomial coefficients", "[asymptotics]") {
    CHECK_THAT(log2_binom(20, 10),
               Catch::Matchers::WithinAbs(std::log2(184756.0), 1e-9));
    CHECK(log2_binom(20, 0) == 0.0);
    CHECK(log2_binom(20, 20) == 0.0);
    CHECK_THROWS_AS(log2_binom(5, 6), domain_error);
    CHECK_THROWS_AS(log2_binom(5, -1), domain_error);
}

TEST_CASE("sphere-packing rate exponent", "[asymptotics]") {
    SECTION("pinned value") {
        CHECK_THAT(gamma_sp(20, 10, 0.2),
                   Catch::Matchers::WithinAbs(0.5425702750848795, 1e-12));
    }
    SECTION("domain") {
        CHECK_THROWS_AS(gamma_sp(20, 10, 0.0), domain_error);
        CHECK_THROWS_AS(gamma_sp(20, 10, 0.5), domain_error); // delta* = 0.5
        CHECK_THROWS_AS(gamma_sp(20, 0, 0.1), domain_error);
        CHECK_NOTHROW(gamma_sp(20, 10, 0.499));
    }
    SECTION("continuous across integer fractional-term boundaries") {
        // u~ = delta*L/4 crosses an integer at delta = 4k/L; the floor-based
        // interpolation must keep the exponent continuous there.
        const int L = 20, w = 10;
        for (int k = 1; k <= 2; ++k) {
            const double at = 4.0 * k / L;
            const double lo = gamma_sp(L, w, at - 1e-9);
            const double hi = gamma_sp(L, w, at + 1e-9);
            CHECK_THAT(lo, Catch::Matchers::WithinAbs(hi, 1e-6));
        }
    }
    SECTION("decreasing in delta") {
        double prev = gamma_sp(20, 10, 0.05);
        for (double d = 0.10; d < 0.45; d += 0.05) {
            const double cur = gamma_sp(20, 10, d);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("sharpened small-delta exponent", "[asymptotics]") {
    SECTION("strictly improves on the generic exponent at delta = 4/L") {
        CHECK(gamma_sp_acute(20, 10, 0.2) < gamma_sp(20, 10, 0.2));
        CHECK(gamma_sp_acute(20, 14, 0.2) < gamma_sp(20, 14, 0.2));
        // Sweep the upper-half weights; skip pairs where the generic
        // exponent is undefined at 4/L (w(L-w) <= 2L means 4/L >= delta*).
        int checked = 0;
        for (int L = 4; L <= 24; ++L) {
            for (int w = (L + 1) / 2; w <= L - 2; ++w) {
                if (w * (L - w) <= 2 * L)
                    continue;
                const double delta = 4.0 / L;
                INFO("L=" << L << " w=" << w);
                CHECK(gamma_sp_acute(L, w, delta) < gamma_sp(L, w, delta));
                ++checked;
            }
        }
        CHECK(checked > 50);
    }
    SECTION("domain") {
        CHECK_THROWS_AS(gamma_sp_acute(20, 10, 0.1 - 1e-9), domain_error);
        CHECK_THROWS_AS(gamma_sp_acute(20, 10, 0.3 + 1e-9), domain_error);
        CHECK_THROWS_AS(gamma_sp_acute(20, 0, 0.2), domain_error);
        CHECK_THROWS_AS(gamma_sp_acute(20, 19, 0.2), domain_error);
        CHECK_NOTHROW(gamma_sp_acute(20, 18, 0.2));
    }
}

TEST_CASE("threshold-family rate bounds", "[asymptotics]") {
    const int L = 10, w = 5;
    SECTION("presence windows") {
        const SeccRateBounds inside = secc_rate_bounds(L, w, 0.15);
        CHECK(inside.r1.has_value());
        CHECK(inside.nu.has_value());
        CHECK(inside.bound.has_value());
        CHECK(inside.sigma_sp.has_value());

        const SeccRateBounds past_r1 = secc_rate_bounds(L, w, 0.25);
        CHECK_FALSE(past_r1.r1.has_value());
        CHECK_FALSE(past_r1.bound.has_value());
        CHECK(past_r1.sigma_sp.has_value()); // 0.25 <= 4/L = 0.4

        const SeccRateBounds past_all = secc_rate_bounds(L, w, 0.45);
        CHECK_FALSE(past_all.r1.has_value());
        CHECK_FALSE(past_all.sigma_sp.has_value());

        const SeccRateBounds trivial_w = secc_rate_bounds(L, 0, 0.15);
        CHECK(trivial_w.r1.has_value());
        CHECK_FALSE(trivial_w.nu.has_value()); // no improvement at w = 0
        CHECK_FALSE(trivial_w.alpha_hat.has_value());
        CHECK(trivial_w.bound == trivial_w.r1);
    }
    SECTION("improvement indicator flips at the crossover") {
        const double cross = secc_crossover_delta(L, w);
        CHECK_THAT(cross,
                   Catch::Matchers::WithinAbs(0.08210156815966597, 1e-12));
        const SeccRateBounds below = secc_rate_bounds(L, w, cross - 0.01);
        const SeccRateBounds above = secc_rate_bounds(L, w, cross + 0.01);
        REQUIRE(below.nu.has_value());
        REQUIRE(above.nu.has_value());
        CHECK(*below.nu < 0.0);
        CHECK(*above.nu > 0.0);
        CHECK(below.alpha_hat == 0);
        CHECK(above.alpha_hat == 1);
        CHECK(*below.bound == *below.r1);
        CHECK(*above.bound < *above.r1);
    }
    SECTION("crossover sits inside the first-bound window") {
        for (int LL : {6, 8, 10, 12})
            for (int ww = 1; ww < LL; ++ww) {
                const double c = secc_crossover_delta(LL, ww);
                INFO("L=" << LL << " w=" << ww);
                CHECK(c > 0.0);
                CHECK(c < 2.0 / LL);
            }
        CHECK_THROWS_AS(secc_crossover_delta(10, 0), domain_error);
        CHECK_THROWS_AS(secc_crossover_delta(10, 10), domain_error);
    }
}

TEST_CASE("relative-distance grids", "[asymptotics]") {
    SECTION("parsing") {
        const DeltaGrid g = parse_delta_range("0.11:0.29:0.005");
        CHECK(g.start_micro == 110000);
        CHECK(g.stop_micro == 290000);
        CHECK(g.step_micro == 5000);
        CHECK(g.values().size() == 37);
        CHECK(g.values().front() == 110000);
        CHECK(g.values().back() == 290000);
    }
    SECTION("stop is inclusive only when hit exactly") {
        CHECK(parse_delta_range("0.1:0.2:0.03").values() ==
              std::vector<long long>{100000, 130000, 160000, 190000});
    }
    SECTION("empty when start exceeds stop") {
        CHECK(parse_delta_range("0.3:0.2:0.01").values().empty());
    }
    SECTION("rejects malformed input") {
        CHECK_THROWS_AS(parse_delta_range("0.1:0.2"), domain_error);
        CHECK_THROWS_AS(parse_delta_range("0.1:0.2:0"), domain_error);
        CHECK_THROWS_AS(parse_delta_range("0.1:0.2:-0.01"), domain_error);
        CHECK_THROWS_AS(parse_delta_range("0.0000001:0.2:0.1"), domain_error);
        CHECK_THROWS_AS(parse_delta_range("a:b:c"), domain_error);
        CHECK_THROWS_AS(parse_delta_range(""), domain_error);
    }
}

TEST_CASE("rate tables", "[asymptotics]") {
    SECTION("constant-weight columns and absent cells") {
        const RateTable t = make_rate_table(Family::cscc, 20, 10,
                                            parse_delta_range("0.15:0.35:0.05"));
        REQUIRE(t.columns ==
                std::vector<std::string>{"gamma_sp", "gamma_sp_acute"});
        REQUIRE(t.rows.size() == 5);
        // 0.15..0.30 inside the generic window; acute window is (0.1, 0.3).
        CHECK(t.rows[0].cells[0].has_value());
        CHECK(t.rows[0].cells[1].has_value());
        CHECK(t.rows[3].cells[0].has_value()); // 0.30: generic ok
        CHECK_FALSE(t.rows[3].cells[1].has_value()); // 0.30: acute excluded
        CHECK(t.rows[4].cells[0].has_value()); // 0.35 < delta* = 0.5
        CHECK_FALSE(t.rows[4].cells[1].has_value());
    }
    SECTION("threshold columns") {
        const RateTable t = make_rate_table(Family::secc, 10, 5,
                                            parse_delta_range("0.05:0.25:0.1"));
        REQUIRE(t.columns ==
                std::vector<std::string>{"r1", "r1_minus_nu", "sigma_sp"});
        REQUIRE(t.rows.size() == 3);
        CHECK(t.rows[0].cells[0].has_value());  // 0.05 < 2/L
        CHECK(t.rows[1].cells[0].has_value());  // 0.15 < 2/L
        CHECK_FALSE(t.rows[2].cells[0].has_value()); // 0.25 >= 2/L
        CHECK(t.rows[2].cells[2].has_value());  // 0.25 <= 4/L
    }
    SECTION("csv rendering") {
        const RateTable t = make_rate_table(Family::secc, 10, 5,
                                            parse_delta_range("0.05:0.25:0.1"));
        const std::string csv = render_csv({t});
        CHECK(csv.substr(0, csv.find('\n')) == "delta,r1,r1_minus_nu,sigma_sp");
        CHECK(csv.find("0.25,NA,NA,") != std::string::npos);
        // one header plus three data rows, newline-terminated
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    }
    SECTION("csv with several weights gains a leading column") {
        const RateTable a = make_rate_table(Family::cscc, 20, 10,
                                            parse_delta_range("0.2:0.2:0.1"));
        const RateTable b = make_rate_table(Family::cscc, 20, 14,
                                            parse_delta_range("0.2:0.2:0.1"));
        const std::string csv = render_csv({a, b});
        CHECK(csv.substr(0, csv.find('\n')) ==
              "w,delta,gamma_sp,gamma_sp_acute");
        CHECK(csv.find("10,0.2,") != std::string::npos);
        CHECK(csv.find("14,0.2,") != std::string::npos);
    }
    SECTION("empty grid still renders the header") {
        const RateTable t = make_rate_table(Family::cscc, 20, 10,
                                            parse_delta_range("0.3:0.2:0.1"));
        CHECK(render_csv({t}) == "delta,gamma_sp,gamma_sp_acute\n");
        CHECK_THROWS_AS(render_csv({}), domain_error);
    }
}

TEST_CASE("finite bounds approach the sharpened exponent as blocks multiply",
          "[asymptotics]") {
    // (1/(mL)) log2 of the finite generalized bound should close in on the
    // sharpened asymptotic exponent from above as m grows with L, w, delta
    // fixed.
    const int L = 10, w = 5;
    const double delta = 0.35; // inside the (2/L, 6/L) window for L = 10
    const double limit = gamma_sp_acute(L, w, delta);
    double prev_gap = 1e9;
    for (int m : {10, 20, 40}) {
        const int d = static_cast<int>(delta * m * L);
        const ExactRational bound = cscc_gen_codesize_bound({m, L, w, d});
        const double rate = log2_value(bound) / double(m * L);
        const double gap = rate - limit;
        INFO("m=" << m << " rate=" << rate << " limit=" << limit);
        CHECK(gap > 0.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}
