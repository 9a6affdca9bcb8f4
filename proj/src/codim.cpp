#include "sturmalg/codim.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace sturmalg {

namespace {

constexpr int kMaxFreeSpineLength = 26;

std::vector<FiniteWord> all_words_of_length(int len) {
    if (len > kMaxFreeSpineLength)
        throw std::domain_error("free-algebra word enumeration too large (length " +
                                std::to_string(len) + ")");
    std::vector<FiniteWord> out;
    out.reserve(1u << len);
    for (unsigned long m = 0; m < (1ul << len); ++m) {
        FiniteWord w;
        for (int b = len - 1; b >= 0; --b) w.push_back(static_cast<int>((m >> b) & 1));
        out.push_back(std::move(w));
    }
    return out;
}

void require_cap(const AlgebraContext& ctx, int needed, const char* what) {
    if (ctx.max_degree() < needed)
        throw std::domain_error(std::string(what) + " needs max_degree >= " +
                                std::to_string(needed) + ", context has " +
                                std::to_string(ctx.max_degree()));
}

/// Admissibility of the two left extensions of each spine plus stable
/// column ids for the reduced matrix.
struct ReducedColumns {
    std::vector<FiniteWord> spines;
    std::vector<bool> ext0_ok, ext1_ok;
    std::vector<EvalColumn> columns; // sorted
    std::map<EvalColumn, int> id;

    int col(const EvalColumn& key) const { return id.at(key); }
};

ReducedColumns build_reduced_columns(const AlgebraContext& ctx, int n) {
    ReducedColumns rc;
    rc.spines = admitted_words(ctx, n - 2);
    std::set<EvalColumn> cols;
    for (const auto& s : rc.spines) {
        cols.insert({0, s});
        const FiniteWord w0 = FiniteWord::parse("0") + s;
        const FiniteWord w1 = FiniteWord::parse("1") + s;
        const bool ok0 = ctx.admits(w0);
        const bool ok1 = ctx.admits(w1);
        rc.ext0_ok.push_back(ok0);
        rc.ext1_ok.push_back(ok1);
        for (int i = 1; i <= n; ++i) {
            if (ok1) cols.insert({i, w1});
            if (ok0) cols.insert({i, w0});
        }
    }
    rc.columns.assign(cols.begin(), cols.end());
    int next = 0;
    for (const auto& c : rc.columns) rc.id.emplace(c, next++);
    return rc;
}

SparseRow reduced_row(const ReducedColumns& rc, int n, std::size_t spine_idx, int u, int v) {
    const FiniteWord& s = rc.spines[spine_idx];
    std::vector<std::pair<int, Rat>> terms;
    terms.emplace_back(rc.col({0, s}), Rat(1));
    if (rc.ext1_ok[spine_idx]) terms.emplace_back(rc.col({u, FiniteWord::parse("1") + s}), Rat(1));
    if (rc.ext0_ok[spine_idx]) terms.emplace_back(rc.col({v, FiniteWord::parse("0") + s}), Rat(1));
    return sparse_row(std::move(terms));
}

} // namespace

std::vector<FiniteWord> admitted_words(const AlgebraContext& ctx, int len) {
    if (len < 0) throw std::domain_error("negative word length");
    if (len == 0) return {FiniteWord()};
    if (ctx.is_free()) return all_words_of_length(len);
    const auto& fs = ctx.factor_set(len);
    return std::vector<FiniteWord>(fs.begin(), fs.end());
}

CodimResult codimension(const AlgebraContext& ctx, int n, int threads) {
    if (n < 1) throw std::domain_error("codimension degree must be positive");
    CodimResult res;
    res.n = n;
    res.contexts = {ctx.render()};
    if (n == 1) {
        res.c_n = 1;
        res.rows_used = 1;
        res.cols_used = 1;
        return res;
    }
    require_cap(ctx, n + 1, "codimension");
    const ReducedColumns rc = build_reduced_columns(ctx, n);

    const std::size_t spine_count = rc.spines.size();
    const int workers = std::max(1, threads);
    auto run_worker = [&](int w, EchelonBasis& basis) {
        for (std::size_t si = w; si < spine_count; si += static_cast<std::size_t>(workers)) {
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v) {
                    if (u == v) continue;
                    basis.ingest(reduced_row(rc, n, si, u, v));
                }
        }
    };

    EchelonBasis master;
    if (workers == 1) {
        run_worker(0, master);
    } else {
        std::vector<EchelonBasis> parts(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { run_worker(w, parts[static_cast<std::size_t>(w)]); });
        for (auto& t : pool) t.join();
        for (const auto& p : parts) master.merge(p);
    }

    res.c_n = master.rank();
    res.rows_used = static_cast<long long>(spine_count) * n * (n - 1);
    res.cols_used = static_cast<long long>(rc.columns.size());
    return res;
}

CodimResult codimension_intersection(const std::vector<AlgebraContext>& ctxs, int n) {
    if (ctxs.empty()) throw std::domain_error("need at least one context");
    if (n < 1) throw std::domain_error("codimension degree must be positive");
    CodimResult res;
    res.n = n;
    for (const auto& c : ctxs) res.contexts.push_back(c.render());
    if (n == 1) {
        res.c_n = 1;
        res.rows_used = 1;
        res.cols_used = static_cast<long long>(ctxs.size());
        return res;
    }
    for (const auto& c : ctxs) require_cap(c, n + 1, "codimension_intersection");

    // shared row-key space over the union of admitted spines
    std::set<FiniteWord> spine_union;
    for (const auto& ctx : ctxs) {
        auto sp = admitted_words(ctx, n - 2);
        spine_union.insert(sp.begin(), sp.end());
    }
    std::vector<FiniteWord> spines(spine_union.begin(), spine_union.end());
    std::map<FiniteWord, int> spine_idx;
    for (std::size_t i = 0; i < spines.size(); ++i) spine_idx.emplace(spines[i], static_cast<int>(i));
    const int pair_grid = n * n;
    const int ambient = static_cast<int>(spines.size()) * pair_grid;
    auto key_id = [&](int si, int u, int v) { return si * pair_grid + (u - 1) * n + (v - 1); };

    long long total_cols = 0;
    std::vector<std::vector<SparseRow>> spans;
    spans.reserve(ctxs.size());
    for (const auto& ctx : ctxs) {
        std::map<EvalColumn, std::vector<std::pair<int, Rat>>> cols;
        for (const auto& s : spines) {
            if (!ctx.admits(s)) continue;
            const int si = spine_idx.at(s);
            const FiniteWord w0 = FiniteWord::parse("0") + s;
            const FiniteWord w1 = FiniteWord::parse("1") + s;
            const bool ok0 = ctx.admits(w0);
            const bool ok1 = ctx.admits(w1);
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v) {
                    if (u == v) continue;
                    const int key = key_id(si, u, v);
                    cols[{0, s}].emplace_back(key, Rat(1));
                    if (ok1) cols[{u, w1}].emplace_back(key, Rat(1));
                    if (ok0) cols[{v, w0}].emplace_back(key, Rat(1));
                }
        }
        std::vector<SparseRow> span;
        span.reserve(cols.size());
        for (auto& [key, terms] : cols) span.push_back(sparse_row(std::move(terms)));
        total_cols += static_cast<long long>(span.size());
        spans.push_back(std::move(span));
    }

    res.c_n = intersect_column_spans(spans, ambient);
    res.rows_used = static_cast<long long>(spines.size()) * n * (n - 1);
    res.cols_used = total_cols;
    return res;
}

std::vector<CodimResult> codim_table(const std::vector<AlgebraContext>& ctxs, int n_max,
                                     int threads) {
    if (ctxs.empty()) throw std::domain_error("need at least one context");
    if (n_max < 1) throw std::domain_error("n_max must be positive");
    std::vector<CodimResult> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back(ctxs.size() == 1 ? codimension(ctxs.front(), n, threads)
                                       : codimension_intersection(ctxs, n));
    return out;
}

std::vector<Monomial> all_tree_shapes(int n) {
    if (n < 1) throw std::domain_error("tree needs at least one leaf");
    auto rec = [](int lo, int hi, auto&& self) -> std::vector<Monomial> {
        std::vector<Monomial> out;
        if (lo == hi) {
            out.push_back(Monomial::leaf(lo));
            return out;
        }
        for (int k = lo; k < hi; ++k) {
            const auto lefts = self(lo, k, self);
            const auto rights = self(k + 1, hi, self);
            for (const auto& l : lefts)
                for (const auto& r : rights) out.push_back(Monomial::prod(l, r));
        }
        return out;
    };
    return rec(1, n, rec);
}

Monomial relabel_monomial(const Monomial& m, const std::vector<int>& perm) {
    if (m.is_leaf()) return Monomial::leaf(perm.at(static_cast<std::size_t>(m.var() - 1)));
    return Monomial::prod(relabel_monomial(m.left(), perm), relabel_monomial(m.right(), perm));
}

CodimResult brute_force_codimension(const AlgebraContext& ctx, int n, int tail_bound,
                                    const OracleLimits& limits) {
    if (n < 1) throw std::domain_error("codimension degree must be positive");
    if (n > limits.max_n)
        throw std::domain_error("oracle size guard exceeded: n = " + std::to_string(n) +
                                " > " + std::to_string(limits.max_n));
    if (tail_bound < 0 || tail_bound > limits.max_tail)
        throw std::domain_error("oracle size guard exceeded: tail_bound = " +
                                std::to_string(tail_bound) + " > " +
                                std::to_string(limits.max_tail));
    require_cap(ctx, n + tail_bound + 1, "brute_force_codimension");

    // substitutions: all generators, or exactly one variable sent to a tail
    std::vector<std::pair<int, FiniteWord>> subs;
    subs.emplace_back(0, FiniteWord());
    for (int pos = 1; pos <= n; ++pos)
        for (int len = 0; len <= tail_bound; ++len)
            for (const auto& w : admitted_words(ctx, len)) subs.emplace_back(pos, w);

    std::vector<std::map<int, Element>> subst_maps;
    subst_maps.reserve(subs.size());
    for (const auto& [pos, w] : subs) {
        std::map<int, Element> m;
        for (int v = 1; v <= n; ++v)
            m.emplace(v, v == pos ? Element::basis(ctx, BasisWord::tail(w))
                                  : Element::basis(ctx, BasisWord::gen()));
        subst_maps.push_back(std::move(m));
    }

    std::map<std::pair<int, BasisWord>, int> col_ids;
    auto col_of = [&](int sub_idx, const BasisWord& w) {
        auto [it, fresh] = col_ids.emplace(std::make_pair(sub_idx, w),
                                           static_cast<int>(col_ids.size()));
        return it->second;
    };

    EchelonBasis basis;
    std::set<std::string> seen;
    long long monomials = 0;
    const auto shapes = all_tree_shapes(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const auto& shape : shapes) {
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            const Monomial m = relabel_monomial(shape, perm);
            ++monomials;
            std::vector<std::pair<int, Rat>> terms;
            for (std::size_t si = 0; si < subs.size(); ++si) {
                const Element value = evaluate(ctx, m, subst_maps[si]);
                for (const auto& [w, c] : value.terms())
                    terms.emplace_back(col_of(static_cast<int>(si), w), c);
            }
            SparseRow row = sparse_row(std::move(terms));
            if (row.empty()) continue;
            std::string sig;
            for (const auto& [c, v] : row.terms) sig += std::to_string(c) + ":" + rat_str(v) + ";";
            if (!seen.insert(std::move(sig)).second) continue;
            basis.ingest(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    CodimResult res;
    res.n = n;
    res.c_n = basis.rank();
    res.rows_used = monomials;
    res.cols_used = static_cast<long long>(col_ids.size());
    res.contexts = {ctx.render()};
    return res;
}

HookVector build_hook_vector(int n, const FiniteWord& shape, int index) {
    if (n < 2) throw std::domain_error("hook vectors need degree >= 2");
    if (static_cast<int>(shape.size()) != n - 2)
        throw std::domain_error("spine length must be n-2");
    if (index < 0 || index > n - 2)
        throw std::domain_error("hook vector index out of range");
    HookVector g;
    g.n = n;
    g.shape = shape;
    g.index = index;
    const std::vector<int> all_x1(static_cast<std::size_t>(n - 2), 1);
    if (index == 0) {
        g.terms.push_back({Rat(1), 1, 2, all_x1});
        g.terms.push_back({Rat(-1), 2, 1, all_x1});
    } else {
        std::vector<int> swapped = all_x1;
        swapped[static_cast<std::size_t>(index - 1)] = 2;
        g.terms.push_back({Rat(1), 1, 1, swapped});
        g.terms.push_back({Rat(-1), 2, 1, all_x1});
    }
    return g;
}

Element evaluate_hook(const AlgebraContext& ctx, const HookVector& g, const Element& x1,
                      const Element& x2) {
    auto value_of = [&](int var) -> const Element& { return var == 1 ? x1 : x2; };
    Element acc;
    for (const auto& term : g.terms) {
        Element cur = mul(ctx, value_of(term.base_left), value_of(term.base_right));
        for (std::size_t j = 0; j < term.spine_vars.size(); ++j) {
            const Element& leaf = value_of(term.spine_vars[j]);
            cur = g.shape.at(j) == 0 ? mul(ctx, leaf, cur) : mul(ctx, cur, leaf);
        }
        acc += cur.scaled(term.coeff);
    }
    return acc;
}

namespace {

std::vector<BasisWord> hwv_test_values(const AlgebraContext& ctx, int test_len) {
    std::vector<BasisWord> out;
    out.push_back(BasisWord::gen());
    for (int len = 0; len <= test_len; ++len)
        for (const auto& w : admitted_words(ctx, len)) out.push_back(BasisWord::tail(w));
    return out;
}

} // namespace

HwvReport hwv_check(const AlgebraContext& ctx, int n, const FiniteWord& spine, int index,
                    int test_len) {
    require_cap(ctx, n + test_len + 1, "hwv_check");
    const HookVector g = build_hook_vector(n, spine, index);
    const Element gen = Element::basis(ctx, BasisWord::gen());
    HwvReport report;
    report.n = n;
    report.spine = spine;
    report.index = index;
    report.is_identity = true;
    for (const auto& x2 : hwv_test_values(ctx, test_len)) {
        Element value = evaluate_hook(ctx, g, gen, Element::basis(ctx, x2));
        if (!value.is_zero()) report.is_identity = false;
        report.evaluations.emplace_back(x2, std::move(value));
    }
    return report;
}

Multiplicities multiplicity_report(const AlgebraContext& ctx, int n, const FiniteWord& spine,
                                   int test_len) {
    require_cap(ctx, n + test_len + 1, "multiplicity_report");
    if (static_cast<int>(spine.size()) != n - 2)
        throw std::domain_error("spine length must be n-2");

    Multiplicities m;

    // row multiplicity: does the all-generator comb evaluation survive
    HookVector comb;
    comb.n = n;
    comb.shape = spine;
    comb.terms.push_back({Rat(1), 1, 2, std::vector<int>(static_cast<std::size_t>(n - 2), 1)});
    const Element gen = Element::basis(ctx, BasisWord::gen());
    m.m_row = evaluate_hook(ctx, comb, gen, gen).is_zero() ? 0 : 1;

    // hook multiplicity: rank of {g_0, g_1} over the evaluation test set
    std::vector<int> indices = {0};
    if (n >= 3) indices.push_back(1);
    std::map<std::pair<int, BasisWord>, int> col_ids;
    auto col_of = [&](int test_idx, const BasisWord& w) {
        auto [it, fresh] = col_ids.emplace(std::make_pair(test_idx, w),
                                           static_cast<int>(col_ids.size()));
        return it->second;
    };
    const auto tests = hwv_test_values(ctx, test_len);
    EchelonBasis basis;
    for (int idx : indices) {
        const HookVector g = build_hook_vector(n, spine, idx);
        std::vector<std::pair<int, Rat>> terms;
        for (std::size_t t = 0; t < tests.size(); ++t) {
            const Element value = evaluate_hook(ctx, g, gen, Element::basis(ctx, tests[t]));
            for (const auto& [w, c] : value.terms())
                terms.emplace_back(col_of(static_cast<int>(t), w), c);
        }
        basis.ingest(sparse_row(std::move(terms)));
    }
    m.m_hook = static_cast<int>(basis.rank());
    return m;
}

} // namespace sturmalg
