#ifndef POWERSUM_SERIALIZE_HPP
#define POWERSUM_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "powersum/degree_counter.hpp"
#include "powersum/factor.hpp"
#include "powersum/function_field.hpp"
#include "powersum/power_sum.hpp"

namespace powersum {

using json = nlohmann::json;

/// ["-1/1","0/1","1/1"] for x^2 - 1. Parsing also accepts a human-readable string.
json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const json& j);

/// {"left": [{"a": .., "p": ..}], "right": [{"b": .., "q": ..}], "exponent_base": 1}
json system_to_json(const PowerSumSystem& sys);
PowerSumSystem system_from_json(const json& j);
PowerSumSystem load_system(const std::string& path);

/// {"num": .., "den": ..}
json rf_to_json(const RationalFunction& f);
RationalFunction rf_from_json(const json& j);

json degree_to_json(ExtDegree d);  // integer, or "-inf"
json height_to_json(Height h);     // integer, or "inf"

json count_report_to_json(const CountReport& r);
CountReport count_report_from_json(const json& j);

json series_to_json(const std::vector<SeriesRow>& rows);
/// Header "d,A_d,target,ratio"; target and ratio cells carry the exact
/// fraction followed by a 10-significant-digit decimal.
std::string series_to_csv(const std::vector<SeriesRow>& rows);

json bm_report_to_json(const BmReport& r);
json factorization_to_json(const Factorization& f);

} // namespace powersum

#endif
