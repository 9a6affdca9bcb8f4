#pragma once

#include "sturmalg/algebra.hpp"
#include "sturmalg/linalg.hpp"

#include <string>
#include <vector>

namespace sturmalg {

/// Reduced row key for the multilinear evaluation matrix: comb monomials
/// with spine word s and ordered base pair (u,v) share one evaluation
/// functional, independent of how the remaining variables sit on the spine.
struct RowKey {
    FiniteWord spine;
    int base_left = 0;
    int base_right = 0;
};

/// Column of the evaluation matrix: a substitution pattern (0 = every
/// variable maps to the generator, i >= 1 = variable i maps to a tail) and
/// the observed output tail word.
struct EvalColumn {
    int sub = 0;
    FiniteWord word;

    std::strong_ordering operator<=>(const EvalColumn&) const = default;
};

struct CodimResult {
    int n = 0;
    long long c_n = 0;
    long long rows_used = 0;
    long long cols_used = 0;
    std::vector<std::string> contexts;
};

/// Words admitted as tails of the given length: all 2^len words in the free
/// algebra, the factor set in a quotient (len = 0 gives the empty word).
std::vector<FiniteWord> admitted_words(const AlgebraContext& ctx, int len);

/// Exact n-th codimension: rank over Q of the reduced evaluation matrix.
/// Row generation may be split over `threads` workers; the result is
/// identical for any worker count.
CodimResult codimension(const AlgebraContext& ctx, int n, int threads = 1);

/// Codimension of the intersection of the varieties generated by the given
/// algebras (identities add up): the dimension of the intersection of the
/// per-context evaluation column spans in the shared row-key space.
CodimResult codimension_intersection(const std::vector<AlgebraContext>& ctxs, int n);

/// c_1 .. c_{n_max}; a single context uses codimension, several use
/// codimension_intersection.
std::vector<CodimResult> codim_table(const std::vector<AlgebraContext>& ctxs, int n_max,
                                     int threads = 1);

struct OracleLimits {
    int max_n = 6;
    int max_tail = 3;
};

/// Validation oracle: enumerates every planar binary tree with n leaves,
/// every leaf permutation and every substitution with at most one variable
/// sent to a tail of length <= tail_bound, evaluates through the algebra
/// module and ranks the full matrix. Agrees with codimension() for every
/// tail_bound.
CodimResult brute_force_codimension(const AlgebraContext& ctx, int n, int tail_bound,
                                    const OracleLimits& limits = {});

/// All tree shapes with n leaves, labeled 1..n left to right.
std::vector<Monomial> all_tree_shapes(int n);
/// New monomial with each leaf label v replaced by perm[v-1].
Monomial relabel_monomial(const Monomial& m, const std::vector<int>& perm);

/// Two-variable highest weight vector for the hook shape (n-1,1) attached
/// to one comb parenthesization. index 0 alternates the base pair; index
/// i >= 1 alternates the left base slot against spine slot i.
struct HookVector {
    struct Term {
        Rat coeff;
        int base_left;
        int base_right;
        std::vector<int> spine_vars; // values in {1,2}
    };
    int n = 0;
    FiniteWord shape; // side bits of the comb, length n-2
    int index = 0;
    std::vector<Term> terms;
};

HookVector build_hook_vector(int n, const FiniteWord& shape, int index);

Element evaluate_hook(const AlgebraContext& ctx, const HookVector& g, const Element& x1,
                      const Element& x2);

struct HwvReport {
    int n = 0;
    FiniteWord spine;
    int index = 0;
    std::vector<std::pair<BasisWord, Element>> evaluations; // x2 value, result
    bool is_identity = false;
};

/// Evaluates g_index under x1 = a and x2 ranging over a plus every admitted
/// tail of length <= test_len.
HwvReport hwv_check(const AlgebraContext& ctx, int n, const FiniteWord& spine, int index,
                    int test_len = 3);

struct Multiplicities {
    int m_row = 0;  // 0 or 1
    int m_hook = 0; // 0, 1 or 2
};

/// Per-parenthesization cocharacter multiplicities for the comb with the
/// given spine: m_row says whether the all-generator evaluation survives,
/// m_hook is the rank of {g_0, g_1} on the hwv test set.
Multiplicities multiplicity_report(const AlgebraContext& ctx, int n, const FiniteWord& spine,
                                   int test_len = 3);

} // namespace sturmalg
