#pragma once

#include "sturmalg/codim.hpp"
#include "sturmalg/linalg.hpp"

#include <map>
#include <set>
#include <string>

namespace sturmalg::testing {

/// Test-side oracle for the intersection codimension of two varieties,
/// c_n(V_a meet V_b) = c_n(A) + c_n(B) - rank[E_A | E_B], with every matrix
/// built from raw monomial enumeration and generic evaluation.
inline long long brute_intersection_codim(const AlgebraContext& a, const AlgebraContext& b,
                                          int n, int tail_bound) {
    if (n == 1) return 1;
    const AlgebraContext ctxs[2] = {a, b};

    // concatenated row per monomial over (ctx, substitution, word) columns
    std::map<std::tuple<int, int, BasisWord>, int> col_ids;
    auto col_of = [&](int ctx_idx, int sub_idx, const BasisWord& w) {
        auto [it, fresh] = col_ids.emplace(std::make_tuple(ctx_idx, sub_idx, w),
                                           static_cast<int>(col_ids.size()));
        return it->second;
    };

    std::vector<std::vector<std::pair<int, FiniteWord>>> subs(2);
    std::vector<std::vector<std::map<int, Element>>> subst_maps(2);
    for (int c = 0; c < 2; ++c) {
        subs[c].emplace_back(0, FiniteWord());
        for (int pos = 1; pos <= n; ++pos)
            for (int len = 0; len <= tail_bound; ++len)
                for (const auto& w : admitted_words(ctxs[c], len)) subs[c].emplace_back(pos, w);
        for (const auto& [pos, w] : subs[c]) {
            std::map<int, Element> m;
            for (int v = 1; v <= n; ++v)
                m.emplace(v, v == pos ? Element::basis(ctxs[c], BasisWord::tail(w))
                                      : Element::basis(ctxs[c], BasisWord::gen()));
            subst_maps[c].push_back(std::move(m));
        }
    }

    EchelonBasis joint;
    std::set<std::string> seen;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const auto& shape : all_tree_shapes(n)) {
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            const Monomial m = relabel_monomial(shape, perm);
            std::vector<std::pair<int, Rat>> terms;
            for (int c = 0; c < 2; ++c)
                for (std::size_t si = 0; si < subs[c].size(); ++si) {
                    const Element value = evaluate(ctxs[c], m, subst_maps[c][si]);
                    for (const auto& [w, k] : value.terms())
                        terms.emplace_back(col_of(c, static_cast<int>(si), w), k);
                }
            SparseRow row = sparse_row(std::move(terms));
            if (row.empty()) continue;
            std::string sig;
            for (const auto& [col, v] : row.terms)
                sig += std::to_string(col) + ":" + rat_str(v) + ";";
            if (!seen.insert(std::move(sig)).second) continue;
            joint.ingest(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const long long ra = brute_force_codimension(a, n, tail_bound).c_n;
    const long long rb = brute_force_codimension(b, n, tail_bound).c_n;
    return ra + rb - joint.rank();
}

} // namespace sturmalg::testing
