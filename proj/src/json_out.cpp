#include "sturmalg/json_out.hpp"

namespace sturmalg {

Json element_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) terms.push_back(Json::array({w.str(), rat_str(c)}));
    return terms;
}

Json codim_result_json(const CodimResult& r) {
    Json j;
    j["n"] = r.n;
    j["c_n"] = r.c_n;
    j["rows"] = r.rows_used;
    j["cols"] = r.cols_used;
    j["contexts"] = r.contexts;
    return j;
}

Json codim_table_json(const std::vector<CodimResult>& table) {
    Json j;
    j["contexts"] = table.empty() ? Json::array() : Json(table.front().contexts);
    Json rows = Json::array();
    for (const auto& r : table) {
        Json row;
        row["n"] = r.n;
        row["c_n"] = r.c_n;
        row["rows"] = r.rows_used;
        row["cols"] = r.cols_used;
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

std::string codim_table_csv(const std::vector<CodimResult>& table) {
    std::string out = "n,c_n\n";
    for (const auto& r : table)
        out += std::to_string(r.n) + "," + std::to_string(r.c_n) + "\n";
    return out;
}

Json growth_report_json(const GrowthReport& r, const std::string& context) {
    Json j;
    j["context"] = context;
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    j["sequence"] = r.sequence;
    j["classification"] = growth_str(r.classification);
    j["C1"] = rat_str(r.c1);
    j["C2"] = rat_str(r.c2);
    j["slope_class"] = slope_class_str(r.slope_class);
    return j;
}

Json certification_json(const CertificationOutcome& o, const WordSpec& a, const WordSpec& b) {
    Json j;
    j["a"] = a.render();
    j["b"] = b.render();
    j["searched_up_to"] = o.searched_up_to;
    if (o.certificate) {
        Json c;
        c["m"] = o.certificate->m;
        c["verified_degree"] = o.certificate->verified_degree;
        c["rank_checked"] = o.certificate->rank_checked;
        j["certificate"] = std::move(c);
    } else {
        j["certificate"] = nullptr;
        j["note"] = "no certificate up to max_n";
    }
    return j;
}

Json hwv_report_json(const HwvReport& r, const std::string& context) {
    Json j;
    j["context"] = context;
    j["n"] = r.n;
    j["spine"] = r.spine.str();
    j["index"] = r.index;
    Json evals = Json::array();
    for (const auto& [x2, value] : r.evaluations) {
        Json e;
        e["x2"] = x2.str();
        e["value"] = element_json(value);
        evals.push_back(std::move(e));
    }
    j["evaluations"] = std::move(evals);
    j["is_identity"] = r.is_identity;
    return j;
}

} // namespace sturmalg
