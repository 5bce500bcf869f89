#pragma once

#include "irrcert/criterion.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string_view>

namespace irrcert {

class FamilyParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { X, Y, Z, Zd };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

struct FamilyParams {
    Integer p;
    unsigned long k = 0;
    unsigned long m = 0;
    Integer d;
    int sign = 1;  // +1 or -1, the sign of the leading term
};

struct FamilyInstance {
    Family family;
    FamilyParams params;
    Polynomial poly;
    Witness witness;
    /// |f(n)|/d = p^quotient_exponent at the prescribed witness.
    unsigned long quotient_exponent = 0;
};

/// -p + x + sign p^(k-m) d x^m with witness (p, d).
/// Requires k >= m + 2 >= 4, p >= 1 + d, p prime.
FamilyInstance gen_family_X(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign);

/// (x-p) + (x-p)^2 + ... + (x-p)^(m-1) + sign p^(2k-1) d x^m with witness (p, d).
/// Requires k >= m >= 2, p >= 1 + d, p prime.
FamilyInstance gen_family_Y(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign);

/// p^k - x + sign p^k d x^m with witness (p^k, d).
/// Requires k >= 2, 2 <= d <= p^k - 1, m >= 1, p prime. With m = 1 the two
/// linear terms merge into one.
FamilyInstance gen_family_Zd(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign);

/// 72x^18 - x + 9 with witness (9, 8); the Zd member p = 3, k = 2, m = 18, d = 8.
FamilyInstance paper_Z();

nlohmann::json to_json(const FamilyInstance& inst);

}  // namespace irrcert
