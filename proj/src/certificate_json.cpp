#include "irrcert/certificate_json.hpp"

#include "irrcert/poly_text.hpp"

namespace irrcert {

using nlohmann::json;

namespace {

Integer integer_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw CertificateFormatError(std::string("field '") + key + "' must be a decimal string");
    try {
        return parse_integer(j.at(key).get<std::string>());
    } catch (const ParseError& e) {
        throw CertificateFormatError(std::string("field '") + key + "': " + e.what());
    }
}

std::string string_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw CertificateFormatError(std::string("field '") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

}  // namespace

json poly_to_json(const Polynomial& f)
{
    json arr = json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(c.get_str());
    return arr;
}

Polynomial poly_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw CertificateFormatError("polynomial must be a non-empty array of decimal strings");
    std::vector<Integer> coeffs;
    for (const auto& c : j) {
        if (!c.is_string())
            throw CertificateFormatError("polynomial coefficients must be decimal strings");
        try {
            coeffs.push_back(parse_integer(c.get<std::string>()));
        } catch (const ParseError& e) {
            throw CertificateFormatError(std::string("polynomial coefficient: ") + e.what());
        }
    }
    if (coeffs.size() > 1 && coeffs.back() == 0)
        throw CertificateFormatError("polynomial has a zero leading coefficient");
    return Polynomial(std::move(coeffs));
}

json to_json(const Certificate& c)
{
    return json{
        {"format_version", kCertificateFormatVersion},
        {"poly", poly_to_json(c.poly)},
        {"witness", {{"n", c.witness.n().get_str()}, {"d", c.witness.d().get_str()}}},
        {"shift", c.shift.get_str()},
        {"dominance", c.dominance.get_str()},
        {"value", c.value.get_str()},
        {"quotient", c.quotient.get_str()},
        {"p", c.p.get_str()},
        {"k", std::to_string(c.k)},
        {"deriv_value", c.deriv_value.get_str()},
        {"variant", std::string(to_string(c.variant))},
        {"primality_certainty", std::string(to_string(c.primality_certainty))},
    };
}

Certificate certificate_from_json(const json& j)
{
    if (!j.is_object())
        throw CertificateFormatError("certificate must be a JSON object");
    if (!j.contains("format_version") || !j.at("format_version").is_number_integer() ||
        j.at("format_version").get<int>() != kCertificateFormatVersion)
        throw CertificateFormatError("unsupported or missing format_version (expected 1)");
    if (!j.contains("poly"))
        throw CertificateFormatError("missing field 'poly'");
    if (!j.contains("witness") || !j.at("witness").is_object())
        throw CertificateFormatError("field 'witness' must be an object");

    const json& wj = j.at("witness");
    Integer n = integer_field(wj, "n");
    Integer d = integer_field(wj, "d");
    if (n < 1 || d < 1)
        throw CertificateFormatError("witness must have n >= 1 and d >= 1");

    const Integer k = integer_field(j, "k");
    if (k < 1 || !k.fits_ulong_p())
        throw CertificateFormatError("field 'k' out of range");

    auto variant = variant_from_string(string_field(j, "variant"));
    if (!variant)
        throw CertificateFormatError("unknown variant");
    auto certainty = certainty_from_string(string_field(j, "primality_certainty"));
    if (!certainty)
        throw CertificateFormatError("unknown primality_certainty");

    return Certificate{
        poly_from_json(j.at("poly")),
        Witness(std::move(n), std::move(d)),
        integer_field(j, "shift"),
        integer_field(j, "dominance"),
        integer_field(j, "value"),
        integer_field(j, "quotient"),
        integer_field(j, "p"),
        k.get_ui(),
        integer_field(j, "deriv_value"),
        *variant,
        *certainty,
    };
}

json to_json(const FailureReason& r)
{
    return json{{"code", std::string(to_string(r.code))}, {"detail", r.detail}};
}

}  // namespace irrcert
