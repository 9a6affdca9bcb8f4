#include "sturmalg/word.hpp"

#include <doctest.h>

using namespace sturmalg;

namespace {

WordSpec golden_ratio_spec() {
    // slope (3-sqrt(5))/2
    return WordSpec::mechanical(Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2)));
}

WordSpec mech_rat(long num, long den) {
    return WordSpec::mechanical(Alpha::from_rational(Rat(num, den)));
}

WordSpec per(const char* bits) { return WordSpec::periodic(FiniteWord::parse(bits)); }

} // namespace

TEST_CASE("prefix of mechanical and periodic words") {
    CHECK(prefix(mech_rat(1, 2), 6).str() == "010101");
    CHECK(prefix(mech_rat(1, 2), 0).str() == "");
    CHECK(prefix(golden_ratio_spec(), 10).str() == "0010010100");
    CHECK(prefix(per("001"), 7).str() == "0010010");
    CHECK(prefix(mech_rat(1, 3), 9).str() == "001001001");
}

TEST_CASE("factor sets") {
    const auto f2 = factors(per("01"), 2);
    CHECK(f2.members.size() == 2);
    CHECK(f2.members.count(FiniteWord::parse("01")) == 1);
    CHECK(f2.members.count(FiniteWord::parse("10")) == 1);

    const auto f3 = factors(per("0"), 3);
    CHECK(f3.members.size() == 1);
    CHECK(f3.members.count(FiniteWord::parse("000")) == 1);

    CHECK(factors(golden_ratio_spec(), 2).members.size() == 3);
}

TEST_CASE("complexity") {
    const WordSpec st = golden_ratio_spec();
    for (int n = 1; n <= 40; ++n) CHECK(complexity(st, n) == n + 1);
    CHECK(complexity(mech_rat(1, 2), 5) == 2);
    CHECK(complexity(per("0"), 7) == 1);
    for (int n = 1; n <= 12; ++n) CHECK(complexity(per("01"), n) <= 2);
}

TEST_CASE("height and finite slopes") {
    CHECK(height(FiniteWord::parse("0110")) == 2);
    CHECK(height(FiniteWord()) == 0);
    CHECK(slope_finite(FiniteWord::parse("0110")) == Rat(1, 2));
    CHECK(slope_finite(FiniteWord::parse("001")) == Rat(1, 3));
    CHECK(slope_finite(FiniteWord::parse("1")) == Rat(1));
    CHECK_THROWS_AS(slope_finite(FiniteWord()), std::domain_error);
}

TEST_CASE("telescoping height identity for mechanical prefixes") {
    const Rat rhos[] = {Rat(0), Rat(1, 3), Rat(5, 7)};
    const WordSpec specs[] = {
        WordSpec::mechanical(Alpha::from_rational(Rat(2, 7)), Rat(0)),
        WordSpec::mechanical(Alpha::from_rational(Rat(3, 5)), Rat(1, 3)),
        WordSpec::mechanical(Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2)), Rat(5, 7)),
        WordSpec::mechanical(Alpha::from_surd(Int(0), Int(1), Int(2), Int(2)), Rat(1, 3)),
    };
    for (const auto& spec : specs) {
        const Int f0 = spec.alpha().floor_scaled(Int(0), spec.rho());
        for (long n = 0; n <= 60; ++n) {
            const Int expected = spec.alpha().floor_scaled(Int(n), spec.rho()) - f0;
            CHECK(Int(height(prefix(spec, n))) == expected);
        }
    }
    (void)rhos;
}

TEST_CASE("limit slopes") {
    CHECK(slope_limit(per("001")) == Alpha::from_rational(Rat(1, 3)));
    CHECK(slope_limit(per("0")) == Alpha::from_rational(Rat(0)));
    CHECK(slope_limit(per("1")) == Alpha::from_rational(Rat(1)));
    CHECK(slope_limit(golden_ratio_spec()) == Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2)));
    CHECK(slope_limit(mech_rat(1, 2)) == Alpha::from_rational(Rat(1, 2)));
}

TEST_CASE("balance constants") {
    CHECK(balance_constant(golden_ratio_spec(), 30) == 1);
    CHECK(balance_constant(per("01"), 5) == 1);
    CHECK(balance_constant(per("0"), 10) == 0);
    CHECK(balance_constant(per("0011"), 8) == 2);
}

TEST_CASE("slope deviation bound") {
    CHECK(slope_deviation_check(golden_ratio_spec(), 30, 1));
    CHECK(slope_deviation_check(per("0"), 10, 0));
    CHECK(slope_deviation_check(per("01"), 10, 1));
    CHECK(slope_deviation_check(per("0011"), 10, 2));
    // C = 0 is too tight once both letters appear
    CHECK_FALSE(slope_deviation_check(per("01"), 4, 0));
}

TEST_CASE("disjointness degree") {
    CHECK(disjointness_degree(mech_rat(1, 3), mech_rat(1, 2), 10) == 4);
    CHECK(disjointness_degree(mech_rat(1, 2), mech_rat(1, 3), 10) == 4); // swap invariance
    CHECK(disjointness_degree(per("0"), per("1"), 10) == 1);
    CHECK_FALSE(disjointness_degree(mech_rat(1, 2), mech_rat(1, 2), 10).has_value());
    CHECK_FALSE(disjointness_degree(per("01"), per("10"), 10).has_value());
}

TEST_CASE("factor closure under prefix restriction") {
    const WordSpec specs[] = {golden_ratio_spec(), mech_rat(2, 5), per("0110")};
    for (const auto& spec : specs) {
        for (int n = 1; n <= 8; ++n) {
            const auto small = factors(spec, n).members;
            for (const auto& w : factors(spec, n + 1).members)
                CHECK(small.count(w.prefix(static_cast<std::size_t>(n))) == 1);
        }
    }
}

TEST_CASE("mechanical rational words normalize to their periodic pattern") {
    const WordSpec m = mech_rat(2, 5);
    const WordSpec p = m.periodic_form();
    REQUIRE(p.is_explicit_periodic());
    CHECK(p.pattern().size() == 5);
    CHECK(prefix(p, 20).str() == prefix(m, 20).str());
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(WordSpec::periodic(FiniteWord()), std::domain_error);
    CHECK_THROWS_AS(WordSpec::mechanical(Alpha::from_rational(Rat(0))), std::domain_error);
    CHECK_THROWS_AS(WordSpec::mechanical(Alpha::from_rational(Rat(1))), std::domain_error);
    CHECK_THROWS_AS(WordSpec::mechanical(Alpha::from_rational(Rat(1, 2)), Rat(1)),
                    std::domain_error);
    CHECK_THROWS_AS(factors(per("01"), 0), std::domain_error);
}

TEST_CASE("sturmian factor sets do not depend on the intercept") {
    const Alpha a = Alpha::from_surd(Int(3), Int(-1), Int(5), Int(2));
    const WordSpec w0 = WordSpec::mechanical(a);
    const WordSpec w1 = WordSpec::mechanical(a, Rat(1, 2));
    for (int n = 1; n <= 10; ++n)
        CHECK(factors(w0, n).members == factors(w1, n).members);
}
