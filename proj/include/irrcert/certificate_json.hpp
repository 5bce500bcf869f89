#pragma once

#include "irrcert/criterion.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace irrcert {

inline constexpr int kCertificateFormatVersion = 1;

class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Certificate as JSON. Every integer is a decimal string; the polynomial is
/// the coefficient list a_0 first.
nlohmann::json to_json(const Certificate& c);

/// Inverse of to_json. Throws CertificateFormatError on missing or malformed fields.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FailureReason& r);

nlohmann::json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const nlohmann::json& j);

}  // namespace irrcert
