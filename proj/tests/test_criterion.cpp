#include "irrcert/certificate_json.hpp"
#include "irrcert/criterion.hpp"
#include "irrcert/poly_text.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace irrcert;

namespace {

const Polynomial kZ = parse_polynomial("72*x^18 - x + 9");
const Integer kZPrime("619774506599223645785433953");

Integer pow_z(unsigned long base, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

Certificate cert(const CheckResult& r)
{
    REQUIRE(succeeded(r));
    return std::get<Certificate>(r);
}

FailureCode code(const CheckResult& r)
{
    REQUIRE_FALSE(succeeded(r));
    return std::get<FailureReason>(r).code;
}

}  // namespace

TEST_CASE("witness requires positive entries")
{
    CHECK_THROWS_AS(Witness(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Witness(3, 0), std::invalid_argument);
    CHECK_NOTHROW(Witness(1, 1));
}

TEST_CASE("validate_hypothesis")
{
    CHECK(validate_hypothesis(Polynomial{6, 4, 2})->code == FailureCode::NotPrimitive);
    CHECK(validate_hypothesis(Polynomial{7})->code == FailureCode::ConstantPoly);
    CHECK_FALSE(validate_hypothesis(kZ).has_value());
}

TEST_CASE("check_witness: Z at (9, 8)")
{
    const Certificate& c = cert(check_witness(kZ, Witness(9, 8)));
    CHECK(c.shift == 1);
    CHECK(c.dominance == 62);
    CHECK(c.value == 8 * pow_z(3, 38));
    CHECK(c.quotient == pow_z(3, 38));
    CHECK(c.p == 3);
    CHECK(c.k == 38);
    CHECK(c.deriv_value == Integer("21613627482767873423"));
    CHECK(mpz_fdiv_ui(c.deriv_value.get_mpz_t(), 3) == 2);  // -1 mod 3
    CHECK(c.variant == Variant::Theorem1);
    CHECK(c.primality_certainty == Certainty::Deterministic);
}

TEST_CASE("check_witness: failure paths")
{
    const Polynomial reducible{2, 3, 1};  // (x+1)(x+2)
    CHECK(code(check_witness(reducible, Witness(6, 1))) == FailureCode::NotPrimePower);  // 56
    CHECK(code(check_witness(reducible, Witness(4, 1))) == FailureCode::DominanceFails);  // D(3) = -2
    CHECK(code(check_witness(reducible, Witness(3, 3))) == FailureCode::ShiftNonpositive);
    CHECK(code(check_witness(Polynomial{2, 4, 6}, Witness(9, 1))) == FailureCode::NotPrimitive);
    CHECK(code(check_witness(Polynomial{3}, Witness(9, 1))) == FailureCode::ConstantPoly);
    // A positive dominance puts every root inside |z| < t < n, so a root is
    // always caught by the dominance test first.
    CHECK(code(check_witness(Polynomial{-5, 1}, Witness(5, 1))) == FailureCode::DominanceFails);
    CHECK(code(check_witness(kZ, Witness(9, 7))) == FailureCode::NotDivisible);

    // x^2 + 3 at (9, 7): 84 / 7 = 12.
    CHECK(code(check_witness(Polynomial{3, 0, 1}, Witness(9, 7))) == FailureCode::NotPrimePower);
    // (x - 5)(x + 1) at (7, 1): f(7) = 16 = 2^4 but f'(7) = 10 is even.
    CHECK(code(check_witness(Polynomial{-5, -4, 1}, Witness(7, 1))) == FailureCode::DerivativeNotCoprime);
}

TEST_CASE("check_witness: 100x^2 + x - 5 at (5, 4)")
{
    const Certificate& c = cert(check_witness(Polynomial{-5, 1, 100}, Witness(5, 4)));
    CHECK(c.shift == 1);
    CHECK(c.dominance == 94);
    CHECK(c.quotient == 625);
    CHECK(c.p == 5);
    CHECK(c.k == 4);
    CHECK(c.deriv_value == 1001);
}

TEST_CASE("variant A")
{
    const Certificate& c = cert(check_witness_variant_A(kZ, Witness(28, 13)));
    CHECK(c.k == 1);
    CHECK(c.p == kZPrime);
    CHECK(c.quotient == kZPrime);
    CHECK(c.variant == Variant::TheoremA);
    CHECK(c.primality_certainty == Certainty::Probable);

    CHECK(code(check_witness_variant_A(kZ, Witness(9, 8))) == FailureCode::NotPrime);

    const Certificate& lin = cert(check_witness_variant_A(Polynomial{-3, 1}, Witness(5, 1)));
    CHECK(lin.quotient == 2);
    CHECK(lin.p == 2);
    CHECK(lin.k == 1);
}

TEST_CASE("variant B")
{
    CHECK(code(check_witness_variant_B(kZ, Witness(9, 8))) == FailureCode::HeightBoundFails);
    const Certificate& c = cert(check_witness_variant_B(kZ, Witness(28, 13)));
    CHECK(c.p == kZPrime);
    CHECK(c.variant == Variant::TheoremB);
    CHECK(succeeded(check_witness_variant_B(Polynomial{-3, 1}, Witness(5, 1))));

    CHECK(succeeded(check_witness_variant_B(Polynomial{-1, 1, 1}, Witness(5, 1))));
    // x + 2 at (6, 2): f(6) = 8, q = 2^2, and 2 divides d.
    CHECK(code(check_witness_variant_B(Polynomial{2, 1}, Witness(6, 2))) == FailureCode::PrimeDividesD);
    CHECK(succeeded(check_witness(Polynomial{2, 1}, Witness(6, 2))));
}

TEST_CASE("verify_certificate")
{
    const Certificate c = cert(check_witness(kZ, Witness(9, 8)));
    CHECK(verify_certificate(c));

    Certificate tampered = c;
    tampered.k = 37;
    CHECK_FALSE(verify_certificate(tampered));

    Certificate moved = c;
    moved.witness = Witness(9, 7);
    CHECK_FALSE(verify_certificate(moved));

    Certificate wrong_tag = c;
    wrong_tag.primality_certainty = Certainty::Probable;
    CHECK_FALSE(verify_certificate(wrong_tag));

    Certificate as_a = c;
    as_a.variant = Variant::TheoremA;
    CHECK_FALSE(verify_certificate(as_a));

    Certificate scaled = c;
    scaled.poly = Integer(2) * c.poly;
    CHECK_FALSE(verify_certificate(scaled));

    CHECK(verify_certificate(cert(check_witness_variant_A(kZ, Witness(28, 13)))));
    CHECK(verify_certificate(cert(check_witness_variant_B(kZ, Witness(28, 13)))));
}

TEST_CASE("certificate JSON")
{
    const Certificate c = cert(check_witness(kZ, Witness(9, 8)));
    const nlohmann::json j = to_json(c);
    CHECK(j.at("format_version") == 1);
    CHECK(j.at("p") == "3");
    CHECK(j.at("k") == "38");
    CHECK(j.at("variant") == "Theorem1");
    CHECK(j.at("primality_certainty") == "deterministic");
    CHECK(j.at("witness").at("n") == "9");
    CHECK(j.at("poly").size() == 19);

    SUBCASE("round trip through text")
    {
        const Certificate back = certificate_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == c);
        CHECK(to_json(back).dump() == j.dump());
    }
    SUBCASE("malformed input is rejected")
    {
        nlohmann::json bad = j;
        bad["format_version"] = 2;
        CHECK_THROWS_AS(certificate_from_json(bad), CertificateFormatError);
        bad = j;
        bad["p"] = 3;
        CHECK_THROWS_AS(certificate_from_json(bad), CertificateFormatError);
        bad = j;
        bad.erase("deriv_value");
        CHECK_THROWS_AS(certificate_from_json(bad), CertificateFormatError);
        bad = j;
        bad["variant"] = "Theorem9";
        CHECK_THROWS_AS(certificate_from_json(bad), CertificateFormatError);
        bad = j;
        bad["witness"]["d"] = "0";
        CHECK_THROWS_AS(certificate_from_json(bad), CertificateFormatError);
    }
}

TEST_CASE("property: determinism, round trip, variant subsumption")
{
    test::Rng rng(41);
    int certified = 0;
    for (int i = 0; i < 400; ++i) {
        const Polynomial f = test::random_nonconstant_poly(rng, 3, 9);
        if (content(f) != 1)
            continue;
        for (long n = 2; n <= 20; ++n)
            for (long d = 1; d < n; ++d) {
                const Witness w(n, d);
                const CheckResult r1 = check_witness(f, w);
                const CheckResult rA = check_witness_variant_A(f, w);
                if (succeeded(rA)) {
                    REQUIRE(succeeded(r1));
                    CHECK(std::get<Certificate>(r1).k == 1);
                }
                if (!succeeded(r1))
                    continue;
                ++certified;
                const Certificate& c = std::get<Certificate>(r1);
                CHECK(verify_certificate(c));
                CHECK(to_json(c).dump() == to_json(std::get<Certificate>(check_witness(f, w))).dump());
                CHECK(certificate_from_json(to_json(c)) == c);
            }
    }
    CHECK(certified > 100);
}
