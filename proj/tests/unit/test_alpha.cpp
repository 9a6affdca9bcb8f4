#include "sturmalg/alpha.hpp"

#include <doctest.h>

using namespace sturmalg;

TEST_CASE("integer helpers") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_div(Int(-6), Int(3)) == -2);
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(24)) == 4);
    CHECK(isqrt(Int(25)) == 5);

    CHECK(surd_sign(Int(0), Int(0), Int(5)) == 0);
    CHECK(surd_sign(Int(-2), Int(1), Int(5)) == 1);  // sqrt(5) > 2
    CHECK(surd_sign(Int(-3), Int(1), Int(5)) == -1); // sqrt(5) < 3
    CHECK(surd_sign(Int(9), Int(-4), Int(5)) == 1);  // 9 > 4 sqrt(5) = 8.94..
    CHECK(surd_sign(Int(8), Int(-4), Int(5)) == -1);
}

TEST_CASE("surd normalization") {
    const Alpha a = Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2));
    CHECK_FALSE(a.is_rational());
    CHECK(a.surd_p() == 3);
    CHECK(a.surd_q() == -1);
    CHECK(a.surd_d() == 5);
    CHECK(a.surd_r() == 2);
    CHECK(a.str() == "(3-1*sqrt(5))/2");

    // square factor pulled out of the radicand: (6-1*sqrt(8))/4 = (3-1*sqrt(2))/2
    const Alpha b = Alpha::from_surd(Int(6), Int(-1), Int(8), Int(4));
    CHECK(b.surd_p() == 3);
    CHECK(b.surd_q() == -1);
    CHECK(b.surd_d() == 2);
    CHECK(b.surd_r() == 2);

    // negative denominator normalizes away
    const Alpha c = Alpha::from_surd(Int(-3), Int(1), Int(5), Int(-2));
    CHECK(c == Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2)));

    CHECK_THROWS_AS(Alpha::from_surd(Int(1), Int(1), Int(4), Int(4)), std::domain_error);
    CHECK_THROWS_AS(Alpha::from_surd(Int(1), Int(0), Int(5), Int(2)), std::domain_error);
    CHECK_THROWS_AS(Alpha::from_surd(Int(1), Int(1), Int(-5), Int(2)), std::domain_error);
    CHECK_THROWS_AS(Alpha::from_surd(Int(1), Int(1), Int(5), Int(0)), std::domain_error);
    // (1+sqrt(5))/2 > 1
    CHECK_THROWS_AS(Alpha::from_surd(Int(1), Int(1), Int(5), Int(2)), std::domain_error);

    CHECK_THROWS_AS(Alpha::from_rational(Rat(3, 2)), std::domain_error);
    CHECK(Alpha::from_rational(Int(2), Int(4)).str() == "1/2");
}

TEST_CASE("exact comparison against rationals") {
    const Alpha a = Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2)); // 0.381966..
    CHECK(a.compare(Rat(1, 3)) > 0);
    CHECK(a.compare(Rat(2, 5)) < 0);
    CHECK(a.compare(Rat(38, 100)) > 0);
    CHECK(a.compare(Rat(382, 1000)) < 0);

    const Alpha r = Alpha::from_rational(Rat(1, 2));
    CHECK(r.compare(Rat(1, 2)) == 0);
    CHECK(r.compare(Rat(499, 1000)) > 0);
}

TEST_CASE("floor of alpha*n + rho") {
    const Alpha half = Alpha::from_rational(Rat(1, 2));
    CHECK(half.floor_scaled(Int(5), Rat(0)) == 2);
    CHECK(half.floor_scaled(Int(5), Rat(1, 2)) == 3);
    CHECK(half.floor_scaled(Int(0), Rat(3, 4)) == 0);

    // floors of ((3-sqrt(5))/2)*i for i = 0..10
    const Alpha a = Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2));
    const long expected[] = {0, 0, 0, 1, 1, 1, 2, 2, 3, 3, 3};
    for (int i = 0; i <= 10; ++i)
        CHECK(a.floor_scaled(Int(i), Rat(0)) == expected[i]);
}

TEST_CASE("floor satisfies its defining inequality") {
    // k = floor(x) must give k <= x < k+1, checked with exact surd signs
    const Int ds[] = {Int(2), Int(3), Int(5), Int(7), Int(13)};
    for (const Int& d : ds) {
        for (int p = 0; p <= 4; ++p) {
            for (int q = -3; q <= 3; ++q) {
                if (q == 0) continue;
                for (int r = 1; r <= 4; ++r) {
                    Alpha a = [&]() -> Alpha {
                        try {
                            return Alpha::from_surd(Int(p), Int(q), d, Int(r));
                        } catch (const std::domain_error&) {
                            return Alpha::from_rational(Rat(1, 2)); // out of range; skip below
                        }
                    }();
                    if (a.is_rational()) continue;
                    for (int n = 0; n <= 23; ++n) {
                        const Rat rho(2, 7);
                        const Int k = a.floor_scaled(Int(n), rho);
                        // x = (p n + q n sqrt(d))/r + 2/7; compare against k and k+1
                        const Int A = Int(p) * n * 7 + 2 * r;
                        const Int B = Int(q) * n * 7;
                        const Int R = Int(r) * 7;
                        CHECK(surd_sign(A - k * R, B, d) >= 0);
                        CHECK(surd_sign(A - (k + 1) * R, B, d) < 0);
                    }
                }
            }
        }
    }
}
