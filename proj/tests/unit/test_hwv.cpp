#include "sturmalg/codim.hpp"
#include "sturmalg/spec_text.hpp"

#include <doctest.h>

using namespace sturmalg;

namespace {

AlgebraContext free_ctx(int cap = 16) { return AlgebraContext::free_algebra(cap); }

AlgebraContext quot(const char* text, int cap = 16) {
    return AlgebraContext::quotient(parse_spec(text), cap);
}

Element tail(const AlgebraContext& ctx, const char* bits) {
    return Element::basis(ctx, BasisWord::tail(FiniteWord::parse(bits)));
}

} // namespace

TEST_CASE("g0 evaluates to the two base extensions") {
    const auto ctx = free_ctx();
    const FiniteWord spine = FiniteWord::parse("10");
    const HookVector g0 = build_hook_vector(4, spine, 0);
    const Element gen = Element::basis(ctx, BasisWord::gen());

    // x2 = a^2: tail 0.spine minus tail 1.spine
    Element expected = tail(ctx, "010") - tail(ctx, "110");
    CHECK(evaluate_hook(ctx, g0, gen, tail(ctx, "")) == expected);
    CHECK_FALSE(evaluate_hook(ctx, g0, gen, tail(ctx, "")).is_zero());

    // x2 = a^2 v prepends v
    expected = tail(ctx, "1010") - tail(ctx, "1110");
    CHECK(evaluate_hook(ctx, g0, gen, tail(ctx, "1")) == expected);

    // x2 = a vanishes by alternation
    CHECK(evaluate_hook(ctx, g0, gen, gen).is_zero());
}

TEST_CASE("g_i evaluates to minus the right base extension, independent of i") {
    const auto ctx = free_ctx();
    const FiniteWord spine = FiniteWord::parse("010");
    const Element gen = Element::basis(ctx, BasisWord::gen());
    const HookVector g1 = build_hook_vector(5, spine, 1);

    CHECK(evaluate_hook(ctx, g1, gen, tail(ctx, "")) == -tail(ctx, "1010"));
    CHECK(evaluate_hook(ctx, g1, gen, tail(ctx, "01")) == -tail(ctx, "011010"));
    for (int i = 2; i <= 3; ++i) {
        const HookVector gi = build_hook_vector(5, spine, i);
        CHECK(evaluate_hook(ctx, gi, gen, tail(ctx, "")) ==
              evaluate_hook(ctx, g1, gen, tail(ctx, "")));
        CHECK(evaluate_hook(ctx, gi, gen, tail(ctx, "11")) ==
              evaluate_hook(ctx, g1, gen, tail(ctx, "11")));
        CHECK(evaluate_hook(ctx, gi, gen, gen) == evaluate_hook(ctx, g1, gen, gen));
    }
}

TEST_CASE("alpha g0 + beta g1 is an identity only for alpha = beta = 0") {
    const auto ctx = free_ctx();
    const FiniteWord spine = FiniteWord::parse("11");
    const Element gen = Element::basis(ctx, BasisWord::gen());
    const HookVector g0 = build_hook_vector(4, spine, 0);
    const HookVector g1 = build_hook_vector(4, spine, 1);
    const Element a2 = tail(ctx, "");

    const Rat coeffs[][2] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(-1)},
                             {Rat(2), Rat(3)}, {Rat(-1), Rat(1)}};
    for (const auto& [alpha, beta] : coeffs) {
        Element value = evaluate_hook(ctx, g0, gen, a2).scaled(alpha) +
                        evaluate_hook(ctx, g1, gen, a2).scaled(beta);
        CHECK_FALSE(value.is_zero());
    }
}

TEST_CASE("hwv_check report") {
    const auto ctx = free_ctx();
    const auto report = hwv_check(ctx, 4, FiniteWord::parse("01"), 0, 2);
    CHECK(report.n == 4);
    CHECK(report.index == 0);
    CHECK_FALSE(report.is_identity);
    // x2 = a, then tails of length 0..2: 1 + 1 + 2 + 4 columns
    CHECK(report.evaluations.size() == 8);
    CHECK(report.evaluations.front().first == BasisWord::gen());
    CHECK(report.evaluations.front().second.is_zero());

    // in the 000... quotient a spine with a 1 kills everything
    const auto zero_ctx = quot("periodic:0");
    const auto dead = hwv_check(zero_ctx, 4, FiniteWord::parse("10"), 0, 2);
    CHECK(dead.is_identity);

    CHECK_THROWS_AS(hwv_check(ctx, 4, FiniteWord::parse("011"), 0, 2), std::domain_error);
    CHECK_THROWS_AS(hwv_check(ctx, 4, FiniteWord::parse("01"), 3, 2), std::domain_error);
}

TEST_CASE("multiplicities in the free algebra") {
    const auto ctx = free_ctx();
    for (int n = 3; n <= 6; ++n) {
        for (const auto& spine : admitted_words(ctx, n - 2)) {
            const auto m = multiplicity_report(ctx, n, spine, 2);
            CHECK(m.m_row == 1);
            CHECK(m.m_hook == 2);
        }
    }
    // n = 2 has no spine slot: only g0 remains and it is not an identity
    const auto m2 = multiplicity_report(ctx, 2, FiniteWord(), 2);
    CHECK(m2.m_row == 1);
    CHECK(m2.m_hook == 1);
}

TEST_CASE("multiplicities in quotients") {
    const auto st = quot("mech:(3-1*sqrt(5))/2");
    for (int n = 3; n <= 6; ++n) {
        for (const auto& spine : admitted_words(st, n - 2)) {
            const auto m = multiplicity_report(st, n, spine, 2);
            CHECK(m.m_row == 1);
            CHECK(m.m_hook >= 1);
            CHECK(m.m_hook <= 2);
        }
    }

    const auto zero_ctx = quot("periodic:0");
    const auto dead = multiplicity_report(zero_ctx, 4, FiniteWord::parse("10"), 2);
    CHECK(dead.m_row == 0);
    CHECK(dead.m_hook == 0);
    const auto alive = multiplicity_report(zero_ctx, 4, FiniteWord::parse("00"), 2);
    CHECK(alive.m_row == 1);
    CHECK(alive.m_hook == 1); // only the left extension 000 survives

    // periodic:01 at spine "01": both extensions 001, 101 die/survive per the word
    const auto p = quot("periodic:01");
    const auto m01 = multiplicity_report(p, 4, FiniteWord::parse("01"), 2);
    CHECK(m01.m_row == 1);
    CHECK(m01.m_hook == 1); // only 101 is a factor of 0101...
}

TEST_CASE("per-shape multiplicities bound the codimension") {
    // c_n <= sum over admitted spines of (1 + 2(n-1))
    const AlgebraContext ctxs[] = {free_ctx(), quot("mech:1/3"), quot("mech:(3-1*sqrt(5))/2")};
    for (const auto& ctx : ctxs) {
        for (int n = 3; n <= 7; ++n) {
            const Int spines = ctx.factor_count(n - 2);
            const Int bound = spines * (1 + 2 * (n - 1));
            CHECK(Int(codimension(ctx, n).c_n) <= bound);
        }
    }
}
