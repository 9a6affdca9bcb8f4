#include "sturmalg/json_out.hpp"
#include "sturmalg/spec_text.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

using namespace sturmalg;

/// Applies the --rho flag to mechanical specs that did not carry an
/// explicit intercept of their own.
WordSpec spec_from_flags(const std::string& text, const std::string& rho_text) {
    WordSpec spec = parse_spec(text);
    if (!rho_text.empty() && spec.is_mechanical() && spec.rho() == 0)
        return WordSpec::mechanical(spec.alpha(), parse_rational(rho_text));
    return spec;
}

AlgebraContext context_from_flags(const std::string& text, const std::string& rho_text,
                                  int max_degree) {
    if (text == "free") return AlgebraContext::free_algebra(max_degree);
    return AlgebraContext::quotient(spec_from_flags(text, rho_text), max_degree);
}

void emit(const std::string& out) { std::fwrite(out.data(), 1, out.size(), stdout); }

void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of Sturmian/periodic words and the codimension growth of "
                 "the metabelian algebras they index"};
    app.require_subcommand(1);

    std::string spec_text, ctx_text, a_text, b_text, rho_text, format = "json", spine_text;
    std::vector<std::string> ctx_list;
    int n = 0, nmax = 0, maxn = 0, max_degree = 0, threads = 1, tail_bound = 0, test_len = 3;
    int hwv_index = 0;
    bool check_rank = false, use_oracle = false;

    auto* word_prefix = app.add_subcommand("word-prefix", "Prefix of the infinite word");
    word_prefix->add_option("--spec", spec_text)->required();
    word_prefix->add_option("--n", n)->required();
    word_prefix->add_option("--rho", rho_text);

    auto* word_complexity = app.add_subcommand("word-complexity", "Number of length-n factors");
    word_complexity->add_option("--spec", spec_text)->required();
    word_complexity->add_option("--n", n)->required();
    word_complexity->add_option("--rho", rho_text);

    auto* word_slope = app.add_subcommand("word-slope", "Exact slope of the infinite word");
    word_slope->add_option("--spec", spec_text)->required();
    word_slope->add_option("--rho", rho_text);

    auto* word_balance = app.add_subcommand("word-balance", "Balance constant up to length n");
    word_balance->add_option("--spec", spec_text)->required();
    word_balance->add_option("--n", n)->required();
    word_balance->add_option("--rho", rho_text);

    auto* word_disjoint =
        app.add_subcommand("word-disjoint", "Least length with disjoint factor sets");
    word_disjoint->add_option("--a", a_text)->required();
    word_disjoint->add_option("--b", b_text)->required();
    word_disjoint->add_option("--maxn", maxn)->required();
    word_disjoint->add_option("--rho", rho_text);

    auto* algebra_dim =
        app.add_subcommand("algebra-dim", "Dimension of the degree-n homogeneous component");
    algebra_dim->add_option("--ctx", ctx_text)->required();
    algebra_dim->add_option("--n", n)->required();
    algebra_dim->add_option("--rho", rho_text);
    algebra_dim->add_option("--max-degree", max_degree);

    auto* codim_cmd = app.add_subcommand("codim", "Exact n-th codimension");
    codim_cmd->add_option("--ctx", ctx_text)->required();
    codim_cmd->add_option("--n", n)->required();
    codim_cmd->add_option("--rho", rho_text);
    codim_cmd->add_option("--max-degree", max_degree);
    codim_cmd->add_option("--threads", threads);
    codim_cmd->add_flag("--oracle", use_oracle, "Force the brute-force path");
    codim_cmd->add_option("--tail-bound", tail_bound);

    auto* codim_table_cmd = app.add_subcommand("codim-table", "Codimensions c_1..c_nmax");
    codim_table_cmd->add_option("--ctx", ctx_list)->required();
    codim_table_cmd->add_option("--nmax", nmax)->required();
    codim_table_cmd->add_option("--rho", rho_text);
    codim_table_cmd->add_option("--max-degree", max_degree);
    codim_table_cmd->add_option("--threads", threads);
    codim_table_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* codim_intersect_cmd =
        app.add_subcommand("codim-intersect", "Codimension of the intersection variety");
    codim_intersect_cmd->add_option("--ctx", ctx_list)->required()->expected(1, -1);
    codim_intersect_cmd->add_option("--n", n)->required();
    codim_intersect_cmd->add_option("--rho", rho_text);
    codim_intersect_cmd->add_option("--max-degree", max_degree);

    auto* hwv_cmd = app.add_subcommand("hwv", "Hook highest-weight-vector evaluations");
    hwv_cmd->add_option("--ctx", ctx_text)->required();
    hwv_cmd->add_option("--n", n)->required();
    hwv_cmd->add_option("--spine", spine_text);
    hwv_cmd->add_option("--i", hwv_index);
    hwv_cmd->add_option("--rho", rho_text);
    hwv_cmd->add_option("--max-degree", max_degree);
    hwv_cmd->add_option("--test-len", test_len);

    auto* multiplicity_cmd =
        app.add_subcommand("multiplicity", "Per-parenthesization cocharacter multiplicities");
    multiplicity_cmd->add_option("--ctx", ctx_text)->required();
    multiplicity_cmd->add_option("--n", n)->required();
    multiplicity_cmd->add_option("--spine", spine_text);
    multiplicity_cmd->add_option("--rho", rho_text);
    multiplicity_cmd->add_option("--max-degree", max_degree);
    multiplicity_cmd->add_option("--test-len", test_len);

    auto* classify_cmd = app.add_subcommand("classify", "Growth classification");
    classify_cmd->add_option("--ctx", ctx_text)->required();
    classify_cmd->add_option("--nmax", nmax)->required();
    classify_cmd->add_option("--rho", rho_text);
    classify_cmd->add_option("--max-degree", max_degree);
    classify_cmd->add_option("--threads", threads);

    auto* certify_cmd = app.add_subcommand("certify", "Nilpotency certificate for an intersection");
    certify_cmd->add_option("--a", a_text)->required();
    certify_cmd->add_option("--b", b_text)->required();
    certify_cmd->add_option("--maxn", maxn)->required();
    certify_cmd->add_option("--rho", rho_text);
    certify_cmd->add_flag("--check-rank", check_rank);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*word_prefix) {
            const WordSpec spec = spec_from_flags(spec_text, rho_text);
            Json j;
            j["spec"] = spec.render();
            j["n"] = n;
            j["prefix"] = prefix(spec, n).str();
            emit_json(j);
        } else if (*word_complexity) {
            const WordSpec spec = spec_from_flags(spec_text, rho_text);
            Json j;
            j["spec"] = spec.render();
            j["n"] = n;
            j["complexity"] = complexity(spec, n);
            emit_json(j);
        } else if (*word_slope) {
            const WordSpec spec = spec_from_flags(spec_text, rho_text);
            Json j;
            j["spec"] = spec.render();
            j["slope"] = slope_limit(spec).str();
            emit_json(j);
        } else if (*word_balance) {
            const WordSpec spec = spec_from_flags(spec_text, rho_text);
            Json j;
            j["spec"] = spec.render();
            j["max_n"] = n;
            j["balance_constant"] = balance_constant(spec, n);
            emit_json(j);
        } else if (*word_disjoint) {
            const WordSpec a = spec_from_flags(a_text, rho_text);
            const WordSpec b = spec_from_flags(b_text, rho_text);
            Json j;
            j["a"] = a.render();
            j["b"] = b.render();
            j["max_n"] = maxn;
            const auto m = disjointness_degree(a, b, maxn);
            if (m)
                j["disjointness_degree"] = *m;
            else
                j["disjointness_degree"] = nullptr;
            emit_json(j);
        } else if (*algebra_dim) {
            const int cap = max_degree > 0 ? max_degree : std::max(n, 2);
            const AlgebraContext ctx = context_from_flags(ctx_text, rho_text, cap);
            Json j;
            j["context"] = ctx.render();
            j["n"] = n;
            j["dimension"] = graded_dimension(ctx, n).str();
            emit_json(j);
        } else if (*codim_cmd) {
            const int cap = max_degree > 0 ? max_degree
                                           : n + (use_oracle ? tail_bound : 0) + 1;
            const AlgebraContext ctx = context_from_flags(ctx_text, rho_text, cap);
            CodimResult res = use_oracle ? brute_force_codimension(ctx, n, tail_bound)
                                         : codimension(ctx, n, threads);
            Json j = codim_result_json(res);
            if (use_oracle) {
                j["oracle"] = true;
                j["tail_bound"] = tail_bound;
            }
            emit_json(j);
        } else if (*codim_table_cmd) {
            const int cap = max_degree > 0 ? max_degree : nmax + 1;
            std::vector<AlgebraContext> ctxs;
            for (const auto& t : ctx_list) ctxs.push_back(context_from_flags(t, rho_text, cap));
            const auto table = codim_table(ctxs, nmax, threads);
            if (format == "csv")
                emit(codim_table_csv(table));
            else
                emit_json(codim_table_json(table));
        } else if (*codim_intersect_cmd) {
            const int cap = max_degree > 0 ? max_degree : n + 1;
            std::vector<AlgebraContext> ctxs;
            for (const auto& t : ctx_list) ctxs.push_back(context_from_flags(t, rho_text, cap));
            emit_json(codim_result_json(codimension_intersection(ctxs, n)));
        } else if (*hwv_cmd) {
            const int cap = max_degree > 0 ? max_degree : n + test_len + 1;
            const AlgebraContext ctx = context_from_flags(ctx_text, rho_text, cap);
            const auto report = hwv_check(ctx, n, FiniteWord::parse(spine_text), hwv_index,
                                          test_len);
            emit_json(hwv_report_json(report, ctx.render()));
        } else if (*multiplicity_cmd) {
            const int cap = max_degree > 0 ? max_degree : n + test_len + 1;
            const AlgebraContext ctx = context_from_flags(ctx_text, rho_text, cap);
            const auto m = multiplicity_report(ctx, n, FiniteWord::parse(spine_text), test_len);
            Json j;
            j["context"] = ctx.render();
            j["n"] = n;
            j["spine"] = spine_text;
            j["m_row"] = m.m_row;
            j["m_hook"] = m.m_hook;
            emit_json(j);
        } else if (*classify_cmd) {
            const int cap = max_degree > 0 ? max_degree : nmax + 1;
            const AlgebraContext ctx = context_from_flags(ctx_text, rho_text, cap);
            emit_json(growth_report_json(classify_growth(ctx, nmax, threads), ctx.render()));
        } else if (*certify_cmd) {
            const WordSpec a = spec_from_flags(a_text, rho_text);
            const WordSpec b = spec_from_flags(b_text, rho_text);
            emit_json(certification_json(nilpotency_certificate(a, b, maxn, check_rank), a, b));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
