#include "irrcert/families.hpp"

#include "irrcert/certificate_json.hpp"
#include "irrcert/poly_text.hpp"

namespace irrcert {

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::Z: return "Z";
    case Family::Zd: return "Zd";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view s)
{
    if (s == "X")
        return Family::X;
    if (s == "Y")
        return Family::Y;
    if (s == "Z")
        return Family::Z;
    if (s == "Zd")
        return Family::Zd;
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw FamilyParameterError("parameter constraint violated: " + what);
}

void require_prime_and_sign(const Integer& p, int sign)
{
    require(sign == 1 || sign == -1, "sign must be +1 or -1");
    require(bool(is_prime(p)), "p = " + p.get_str() + " must be prime");
}

Integer pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string params_text(const Integer& p, unsigned long k, unsigned long m, const Integer& d)
{
    return " (p=" + p.get_str() + ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", d=" + d.get_str() +
           ")";
}

}  // namespace

FamilyInstance gen_family_X(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign)
{
    const std::string ctx = params_text(p, k, m, d);
    require(m + 2 >= 4, "m + 2 >= 4" + ctx);
    require(k >= m + 2, "k >= m + 2" + ctx);
    require(d >= 1, "d >= 1" + ctx);
    require(p >= 1 + d, "p >= 1 + d" + ctx);
    require_prime_and_sign(p, sign);

    Polynomial poly = Polynomial(std::vector<Integer>{-p, Integer(1)}) +
                      Polynomial::monomial(sign * pow(p, k - m) * d, m);
    return FamilyInstance{Family::X, {p, k, m, d, sign}, std::move(poly), Witness(p, d), k};
}

FamilyInstance gen_family_Y(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign)
{
    const std::string ctx = params_text(p, k, m, d);
    require(m >= 2, "m >= 2" + ctx);
    require(k >= m, "k >= m" + ctx);
    require(d >= 1, "d >= 1" + ctx);
    require(p >= 1 + d, "p >= 1 + d" + ctx);
    require_prime_and_sign(p, sign);

    const Polynomial shifted(std::vector<Integer>{-p, Integer(1)});
    Polynomial poly = Polynomial::monomial(sign * pow(p, 2 * k - 1) * d, m);
    Polynomial term = shifted;
    for (unsigned long j = 1; j < m; ++j) {
        poly = poly + term;
        term = term * shifted;
    }
    return FamilyInstance{Family::Y, {p, k, m, d, sign}, std::move(poly), Witness(p, d), 2 * k + m - 1};
}

FamilyInstance gen_family_Zd(const Integer& p, unsigned long k, unsigned long m, const Integer& d, int sign)
{
    const std::string ctx = params_text(p, k, m, d);
    require(k >= 2, "k >= 2" + ctx);
    require(m >= 1, "m >= 1" + ctx);
    require_prime_and_sign(p, sign);
    const Integer pk = pow(p, k);
    require(d >= 2, "d >= 2" + ctx);
    require(d <= pk - 1, "d <= p^k - 1" + ctx);

    Polynomial poly = Polynomial(std::vector<Integer>{pk, Integer(-1)}) + Polynomial::monomial(sign * pk * d, m);
    return FamilyInstance{Family::Zd, {p, k, m, d, sign}, std::move(poly), Witness(pk, d), k * (1 + m)};
}

FamilyInstance paper_Z()
{
    FamilyInstance z = gen_family_Zd(Integer(3), 2, 18, Integer(8), 1);
    z.family = Family::Z;
    return z;
}

nlohmann::json to_json(const FamilyInstance& inst)
{
    const FamilyParams& pr = inst.params;
    return nlohmann::json{
        {"family", std::string(to_string(inst.family))},
        {"params",
         {{"p", pr.p.get_str()},
          {"k", std::to_string(pr.k)},
          {"m", std::to_string(pr.m)},
          {"d", pr.d.get_str()},
          {"sign", pr.sign > 0 ? "+" : "-"}}},
        {"poly", to_string(inst.poly)},
        {"coeffs", poly_to_json(inst.poly)},
        {"witness", {{"n", inst.witness.n().get_str()}, {"d", inst.witness.d().get_str()}}},
        {"quotient", {{"p", pr.p.get_str()}, {"k", std::to_string(inst.quotient_exponent)}}},
    };
}

}  // namespace irrcert
