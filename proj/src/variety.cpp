#include "sturmalg/variety.hpp"

namespace sturmalg {

namespace {

/// |x_new - x_old| <= x_old / 10, exactly.
bool stable(const Rat& x_new, const Rat& x_old) {
    const Rat diff = x_new > x_old ? x_new - x_old : x_old - x_new;
    return diff * 10 <= x_old;
}

struct TemplateFit {
    Rat c1, c2;
};

/// Smallest exact constants with c1*n^e <= c_n <= c2*n^e over 3 <= n <= hi.
TemplateFit fit(const std::vector<long long>& c, int hi, int exponent) {
    TemplateFit f;
    bool first = true;
    for (int n = 3; n <= hi; ++n) {
        Int scale = Int(n);
        if (exponent == 2) scale *= n;
        const Rat ratio(Int(c[static_cast<std::size_t>(n - 1)]), scale);
        if (first || ratio < f.c1) f.c1 = ratio;
        if (first || ratio > f.c2) f.c2 = ratio;
        first = false;
    }
    return f;
}

} // namespace

std::string growth_str(Growth g) {
    switch (g) {
        case Growth::Nilpotent: return "Nilpotent";
        case Growth::AtMostLinear: return "AtMostLinear";
        case Growth::SuperlinearAtMostQuadratic: return "Superlinear-AtMostQuadratic";
        case Growth::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string slope_class_str(SlopeClass s) {
    return s == SlopeClass::Rational ? "rational" : "quadratic-irrational";
}

GrowthReport classify_sequence(const std::vector<long long>& sequence, SlopeClass slope_class) {
    const int n_max = static_cast<int>(sequence.size());
    if (n_max < 4) throw std::domain_error("classification needs the sequence up to n >= 4");
    GrowthReport report;
    report.n_min = 1;
    report.n_max = n_max;
    report.sequence = sequence;
    report.slope_class = slope_class;

    for (long long c : sequence) {
        if (c == 0) {
            report.classification = Growth::Nilpotent;
            report.c1 = 0;
            report.c2 = 0;
            return report;
        }
    }

    const int exponent = slope_class == SlopeClass::Rational ? 1 : 2;
    const TemplateFit full = fit(sequence, n_max, exponent);
    const TemplateFit prev = fit(sequence, n_max - 1, exponent);
    report.c1 = full.c1;
    report.c2 = full.c2;
    const bool constants_stable = stable(full.c1, prev.c1) && stable(full.c2, prev.c2);

    if (slope_class == SlopeClass::Rational) {
        report.classification = constants_stable ? Growth::AtMostLinear : Growth::Inconclusive;
        return report;
    }

    // quadratic template additionally wants c_n/n strictly increasing on the
    // tail of the computed range
    const int tail_start = std::max(3, n_max / 2);
    bool increasing = true;
    for (int n = tail_start + 1; n <= n_max; ++n) {
        const Rat lhs(Int(sequence[static_cast<std::size_t>(n - 2)]), Int(n - 1));
        const Rat rhs(Int(sequence[static_cast<std::size_t>(n - 1)]), Int(n));
        if (!(lhs < rhs)) {
            increasing = false;
            break;
        }
    }
    report.classification = (constants_stable && increasing)
                                ? Growth::SuperlinearAtMostQuadratic
                                : Growth::Inconclusive;
    return report;
}

GrowthReport classify_growth(const AlgebraContext& ctx, int n_max, int threads) {
    if (ctx.is_free())
        throw std::domain_error("growth classification needs a quotient context");
    if (n_max < 4) throw std::domain_error("classification needs n_max >= 4");
    const SlopeClass sc = slope_limit(ctx.spec()).is_rational() ? SlopeClass::Rational
                                                                : SlopeClass::QuadraticIrrational;
    const auto table = codim_table({ctx}, n_max, threads);
    std::vector<long long> seq;
    seq.reserve(table.size());
    for (const auto& r : table) seq.push_back(r.c_n);
    return classify_sequence(seq, sc);
}

CertificationOutcome nilpotency_certificate(const WordSpec& a, const WordSpec& b, int max_n,
                                            bool check_rank) {
    if (max_n < 1) throw std::domain_error("search range must be positive");
    CertificationOutcome out;
    out.searched_up_to = max_n;
    const auto m = disjointness_degree(a, b, max_n);
    if (!m) return out;

    NilpotencyCertificate cert;
    cert.spec_a = a;
    cert.spec_b = b;
    cert.m = *m;
    cert.verified_degree = *m + 2;
    if (check_rank) {
        const int cap = cert.verified_degree + 1;
        const auto res = codimension_intersection(
            {AlgebraContext::quotient(a, cap), AlgebraContext::quotient(b, cap)},
            cert.verified_degree);
        if (res.c_n != 0)
            throw std::logic_error("intersection codimension nonzero at the certified degree");
        cert.rank_checked = true;
    }
    out.certificate = std::move(cert);
    return out;
}

long character_degree(CharShape shape, int n) {
    if (shape == CharShape::Row) {
        if (n < 1) throw std::domain_error("row shape needs n >= 1");
        return 1;
    }
    if (n < 2) throw std::domain_error("hook shape needs n >= 2");
    return n - 1;
}

} // namespace sturmalg
