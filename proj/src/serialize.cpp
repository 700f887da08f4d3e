#include "powersum/serialize.hpp"

#include <fstream>
#include <sstream>

#include "powersum/errors.hpp"

namespace powersum {

json poly_to_json(const Polynomial& f)
{
    json arr = json::array();
    for (const auto& c : f.coefficients()) arr.push_back(rational_to_string(c));
    return arr;
}

Polynomial poly_from_json(const json& j)
{
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    if (!j.is_array()) throw ValidationError("polynomial must be a coefficient array or a string");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer()) coeffs.emplace_back(Integer(std::to_string(c.get<long long>()), 10));
        else throw ValidationError("polynomial coefficient must be a \"num/den\" string");
    }
    return Polynomial(std::move(coeffs));
}

json system_to_json(const PowerSumSystem& sys)
{
    json left = json::array(), right = json::array();
    for (const auto& t : sys.left()) left.push_back({{"a", poly_to_json(t.coeff)}, {"p", poly_to_json(t.root)}});
    for (const auto& t : sys.right()) right.push_back({{"b", poly_to_json(t.coeff)}, {"q", poly_to_json(t.root)}});
    return {{"left", left}, {"right", right}, {"exponent_base", sys.exponent_base()}};
}

namespace {

std::vector<PowerTerm> terms_from_json(const json& j, const char* side, const char* coeff_key, const char* root_key)
{
    if (!j.contains(side) || !j.at(side).is_array())
        throw ValidationError(std::string("system file: missing array \"") + side + "\"");
    std::vector<PowerTerm> out;
    std::size_t idx = 0;
    for (const auto& t : j.at(side)) {
        ++idx;
        if (!t.is_object() || !t.contains(coeff_key) || !t.contains(root_key))
            throw ValidationError(std::string("system file: ") + side + " term " + std::to_string(idx) +
                                  " needs \"" + coeff_key + "\" and \"" + root_key + "\"");
        out.push_back({poly_from_json(t.at(coeff_key)), poly_from_json(t.at(root_key))});
    }
    return out;
}

json pair_array(const std::vector<ExponentPair>& v)
{
    json arr = json::array();
    for (const auto& p : v) arr.push_back({p.n, p.m});
    return arr;
}

} // namespace

PowerSumSystem system_from_json(const json& j)
{
    if (!j.is_object()) throw ValidationError("system file must hold a JSON object");
    const int base = j.value("exponent_base", 1);
    return PowerSumSystem(terms_from_json(j, "left", "a", "p"), terms_from_json(j, "right", "b", "q"), base);
}

PowerSumSystem load_system(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open system file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("system file '" + path + "' is not valid JSON: " + e.what());
    }
    return system_from_json(j);
}

json rf_to_json(const RationalFunction& f)
{
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rf_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("num")) throw ValidationError("rational function needs \"num\"");
    const Polynomial den = j.contains("den") ? poly_from_json(j.at("den")) : Polynomial::constant(Rational(1));
    return rf_new(poly_from_json(j.at("num")), den);
}

json degree_to_json(ExtDegree d)
{
    if (d.is_finite()) return d.value();
    return "-inf";
}

json height_to_json(Height h)
{
    if (h.is_finite()) return h.value();
    return "inf";
}

json count_report_to_json(const CountReport& r)
{
    json line = json::array();
    for (const auto& p : r.line_pairs_counted) line.push_back({p.n, p.m, p.degree});
    return {{"d", r.d},
            {"a_d", r.a_d},
            {"rectangle_count", r.rectangle_count},
            {"small_n_strip", r.small_n_strip},
            {"small_m_strip", r.small_m_strip},
            {"line_pairs_counted", line},
            {"zero_sum_pairs", pair_array(r.zero_sum_pairs)},
            {"certified", r.certified},
            {"thresholds", {{"N", r.thresholds.left}, {"M", r.thresholds.right}}},
            {"c_bm", r.c_bm},
            {"line_cutoff", r.line_cutoff}};
}

CountReport count_report_from_json(const json& j)
{
    CountReport r;
    try {
        r.d = j.at("d").get<std::int64_t>();
        r.a_d = j.at("a_d").get<std::int64_t>();
        r.rectangle_count = j.at("rectangle_count").get<std::int64_t>();
        r.small_n_strip = j.at("small_n_strip").get<std::int64_t>();
        r.small_m_strip = j.at("small_m_strip").get<std::int64_t>();
        for (const auto& p : j.at("line_pairs_counted"))
            r.line_pairs_counted.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>(),
                                            p.at(2).get<std::int64_t>()});
        for (const auto& p : j.at("zero_sum_pairs"))
            r.zero_sum_pairs.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
        r.certified = j.at("certified").get<bool>();
        r.thresholds = {j.at("thresholds").at("N").get<std::int64_t>(), j.at("thresholds").at("M").get<std::int64_t>()};
        r.c_bm = j.at("c_bm").get<std::int64_t>();
        r.line_cutoff = j.at("line_cutoff").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed count report: ") + e.what());
    }
    if (r.a_d != r.rectangle_count + r.small_n_strip + r.small_m_strip +
                     static_cast<std::int64_t>(r.line_pairs_counted.size()))
        throw ValidationError("count report parts do not add up to a_d");
    return r;
}

json series_to_json(const std::vector<SeriesRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"d", r.d},
                       {"a_d", r.a_d},
                       {"target", rational_to_string(r.target)},
                       {"target_decimal", to_decimal(r.target)},
                       {"ratio", rational_to_string(r.ratio)},
                       {"ratio_decimal", to_decimal(r.ratio)}});
    return arr;
}

std::string series_to_csv(const std::vector<SeriesRow>& rows)
{
    std::ostringstream os;
    os << "d,A_d,target,ratio\n";
    for (const auto& r : rows)
        os << r.d << ',' << r.a_d << ',' << rational_to_string(r.target) << ' ' << to_decimal(r.target) << ','
           << rational_to_string(r.ratio) << ' ' << to_decimal(r.ratio) << '\n';
    return os.str();
}

json bm_report_to_json(const BmReport& r)
{
    json j{{"s_units", r.s_units},
           {"sums_to_zero", r.sums_to_zero},
           {"max_height", height_to_json(r.max_height)},
           {"bound", r.bound},
           {"bound_holds", r.bound_holds}};
    if (r.no_vanishing_subsum) j["no_vanishing_subsum"] = *r.no_vanishing_subsum;
    else j["no_vanishing_subsum"] = "unchecked";
    return j;
}

json factorization_to_json(const Factorization& f)
{
    json factors = json::array();
    for (const auto& fp : f.factors)
        factors.push_back({{"factor", poly_to_json(fp.factor)},
                           {"text", fp.factor.to_string()},
                           {"multiplicity", fp.multiplicity}});
    return {{"constant", rational_to_string(f.constant)}, {"factors", factors}};
}

} // namespace powersum
