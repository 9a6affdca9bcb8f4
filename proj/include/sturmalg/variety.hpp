#pragma once

#include "sturmalg/codim.hpp"

#include <optional>

namespace sturmalg {

enum class Growth { Nilpotent, AtMostLinear, SuperlinearAtMostQuadratic, Inconclusive };
enum class SlopeClass { Rational, QuadraticIrrational };

std::string growth_str(Growth g);
std::string slope_class_str(SlopeClass s);

/// Finite-evidence growth classification of a codimension sequence: the
/// template (linear or quadratic) follows the slope class, the observed
/// constants are exact, and an unstable constant over the last step yields
/// Inconclusive instead of a label.
struct GrowthReport {
    int n_min = 1;
    int n_max = 0;
    std::vector<long long> sequence; // c_1 .. c_{n_max}
    Growth classification = Growth::Inconclusive;
    Rat c1, c2; // observed bounding constants for the template
    SlopeClass slope_class = SlopeClass::Rational;
};

/// Classification rules on a raw sequence (c[0] = c_1). Exposed separately
/// so the decision procedure can be tested on synthetic sequences.
GrowthReport classify_sequence(const std::vector<long long>& sequence, SlopeClass slope_class);

/// Computes codim_table for the quotient context and classifies it.
/// Requires n_max >= 4 and a quotient context (the free algebra has no
/// slope to pick a template from).
GrowthReport classify_growth(const AlgebraContext& ctx, int n_max, int threads = 1);

struct NilpotencyCertificate {
    WordSpec spec_a;
    WordSpec spec_b;
    int m = 0;              // least length with disjoint factor sets
    int verified_degree = 0; // m + 2
    bool rank_checked = false;
};

/// Either a certificate or the explicit "no certificate up to max_n"
/// outcome (identical factor sets never disjoin).
struct CertificationOutcome {
    std::optional<NilpotencyCertificate> certificate;
    int searched_up_to = 0;
};

CertificationOutcome nilpotency_certificate(const WordSpec& a, const WordSpec& b, int max_n,
                                            bool check_rank);

enum class CharShape { Row, Hook };

/// deg chi_(n) = 1 and deg chi_(n-1,1) = n-1.
long character_degree(CharShape shape, int n);

} // namespace sturmalg
