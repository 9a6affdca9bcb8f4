#pragma once

#include "sturmalg/codim.hpp"
#include "sturmalg/variety.hpp"

#include <json.hpp>

namespace sturmalg {

using Json = nlohmann::ordered_json;

Json element_json(const Element& e);
Json codim_result_json(const CodimResult& r);
Json codim_table_json(const std::vector<CodimResult>& table);
std::string codim_table_csv(const std::vector<CodimResult>& table);
Json growth_report_json(const GrowthReport& r, const std::string& context);
Json certification_json(const CertificationOutcome& o, const WordSpec& a, const WordSpec& b);
Json hwv_report_json(const HwvReport& r, const std::string& context);

} // namespace sturmalg
