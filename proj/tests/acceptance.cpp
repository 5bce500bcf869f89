// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "irrcert/certificate_json.hpp"
#include "irrcert/criterion.hpp"
#include "irrcert/families.hpp"
#include "irrcert/numbertheory.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/poly_text.hpp"
#include "irrcert/search.hpp"

#include "generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace irrcert;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail.clear();
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit_seconds << " s";
        o.fail(os.str());
    }
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

const Polynomial kZ = parse_polynomial("72*x^18 - x + 9");
const Integer kZPrime("619774506599223645785433953");

std::string witness_text(const Certificate& c)
{
    return "(" + c.witness.n().get_str() + ", " + c.witness.d().get_str() + ")";
}

bool witness_is(const std::optional<Certificate>& c, long n, long d)
{
    return c && c->witness.n() == n && c->witness.d() == d;
}

// All primitive polynomials of degree 1..3 with coefficients in [-5, 5].
std::vector<Polynomial> small_corpus()
{
    std::vector<Polynomial> out;
    for (long a3 = -5; a3 <= 5; ++a3)
        for (long a2 = -5; a2 <= 5; ++a2)
            for (long a1 = -5; a1 <= 5; ++a1)
                for (long a0 = -5; a0 <= 5; ++a0) {
                    Polynomial f{a0, a1, a2, a3};
                    if (f.is_constant() || content(f) != 1)
                        continue;
                    out.push_back(std::move(f));
                }
    return out;
}

const std::vector<Polynomial>& corpus()
{
    static const std::vector<Polynomial> c = small_corpus();
    return c;
}

Outcome example_small_witness()
{
    Outcome o;
    const CheckResult r = check_witness(kZ, Witness(9, 8));
    if (!succeeded(r)) {
        o.fail("no certificate: " + std::get<FailureReason>(r).detail);
        return o;
    }
    const Certificate& c = std::get<Certificate>(r);
    if (c.p != 3 || c.k != 38)
        o.fail("quotient " + c.p.get_str() + "^" + std::to_string(c.k));
    if (c.shift != 1 || c.dominance != 62)
        o.fail("D(" + c.shift.get_str() + ") = " + c.dominance.get_str());
    if (gcd(c.p, c.deriv_value) != 1)
        o.fail("derivative not coprime");
    if (o.pass)
        o.detail = "p=3, k=38, D(1)=62, gcd(3, f'(9))=1";
    return o;
}

Outcome example_variant_comparison()
{
    Outcome o;
    const auto rows = compare_criteria(kZ, 30, 15);
    if (rows.size() != 3) {
        o.fail("expected 3 rows");
        return o;
    }
    if (!witness_is(rows[0].certificate, 9, 8))
        o.fail("Theorem1 witness wrong");
    if (!witness_is(rows[1].certificate, 28, 13))
        o.fail("TheoremA witness wrong");
    if (!witness_is(rows[2].certificate, 28, 13))
        o.fail("TheoremB witness wrong");
    if (!o.pass)
        return o;

    const Certificate& a = *rows[1].certificate;
    if (a.quotient != kZPrime || a.p != kZPrime || a.k != 1)
        o.fail("TheoremA quotient " + a.quotient.get_str());
    if (rows[2].certificate->quotient != kZPrime)
        o.fail("TheoremB quotient " + rows[2].certificate->quotient.get_str());
    const PrimalityResult pr = is_prime(kZPrime);
    if (!pr)
        o.fail("quotient not prime");
    const std::size_t digits = decimal_digits(a.quotient);
    if (digits != rows[1].quotient_digits || digits != std::string("619774506599223645785433953").size())
        o.fail("digit count mismatch");
    if (o.pass)
        o.detail = "Theorem1 (9, 8); TheoremA " + witness_text(a) + "; TheoremB " +
                   witness_text(*rows[2].certificate) + "; quotient " + a.quotient.get_str() + " is prime (" +
                   std::string(to_string(pr.certainty)) + ") with " + std::to_string(digits) +
                   " decimal digits, not 18";
    return o;
}

Outcome soundness_sweep()
{
    Outcome o;
    std::size_t certified = 0, violations = 0;
    std::string first_violation;
    for (const Polynomial& f : corpus()) {
        bool any = false;
        for (Variant v : {Variant::Theorem1, Variant::TheoremA, Variant::TheoremB})
            if (auto c = find_witness(f, {30, 10, v})) {
                any = true;
                if (!verify_certificate(*c)) {
                    ++violations;
                    first_violation = "unverifiable certificate for " + to_string(f);
                }
            }
        if (!any)
            continue;
        ++certified;
        if (!is_irreducible_oracle(f)) {
            ++violations;
            if (first_violation.empty())
                first_violation = "certified reducible " + to_string(f);
        }
    }
    if (violations)
        o.fail(std::to_string(violations) + " violations, first: " + first_violation);
    else
        o.detail = std::to_string(corpus().size()) + " primitive polynomials, " + std::to_string(certified) +
                   " certified, all oracle-irreducible, 0 violations";
    return o;
}

Outcome family_grids()
{
    Outcome o;
    std::size_t total = 0, passed = 0;
    auto run = [&](const FamilyInstance& inst) {
        ++total;
        const CheckResult r = check_witness(inst.poly, inst.witness);
        if (succeeded(r) && std::get<Certificate>(r).p == inst.params.p &&
            std::get<Certificate>(r).k == inst.quotient_exponent)
            ++passed;
        else if (o.pass)
            o.fail("family " + std::string(to_string(inst.family)) + " instance " + to_string(inst.poly) +
                   " failed");
    };
    for (long p : {2L, 3L, 5L, 7L, 11L})
        for (unsigned long m : {2UL, 3UL})
            for (int sign : {1, -1}) {
                for (long d = 1; d <= p - 1; ++d) {
                    run(gen_family_X(p, m + 2, m, d, sign));  // minimal k = m + 2
                    run(gen_family_Y(p, m, m, d, sign));      // minimal k = m
                }
                for (long d = 2; d <= p * p - 1; ++d)
                    run(gen_family_Zd(p, 2, m, d, sign));  // minimal k = 2
            }
    if (o.pass)
        o.detail = std::to_string(passed) + "/" + std::to_string(total) + " instances certified at their witness";
    return o;
}

Polynomial random_primitive_factor(test::Rng& rng)
{
    for (;;) {
        Polynomial f = test::random_nonconstant_poly(rng, 2, 9);
        if (content(f) == 1)
            return f;
    }
}

Outcome reducible_never_certify()
{
    Outcome o;
    test::Rng rng(20240501);
    std::size_t certificates = 0;
    for (int i = 0; i < 1000; ++i) {
        const Polynomial f = random_primitive_factor(rng) * random_primitive_factor(rng);
        for (Variant v : {Variant::Theorem1, Variant::TheoremA, Variant::TheoremB})
            if (auto c = find_witness(f, {50, 20, v})) {
                ++certificates;
                if (o.pass)
                    o.fail("certified reducible " + to_string(f) + " at " + witness_text(*c));
            }
    }
    if (o.pass)
        o.detail = "1000 products, 3 variants each, 0 certificates";
    else
        o.detail += " (" + std::to_string(certificates) + " certificates)";
    return o;
}

Outcome property_suites()
{
    Outcome o;
    test::Rng rng(6);

    // Upward closure: D(s) > 0 implies D(t) > 0 for all 1 <= s < t <= 50.
    for (int i = 0; i < 10000 && o.pass; ++i) {
        const Polynomial f = test::random_nonconstant_poly(rng, 6, 50);
        const Polynomial dom = dominance_polynomial(f);
        bool positive = false;
        for (long t = 1; t <= 50; ++t) {
            const bool now = evaluate(dom, Integer(t)) > 0;
            if (positive && !now) {
                o.fail("upward closure broken for " + to_string(f) + " at t=" + std::to_string(t));
                break;
            }
            positive = positive || now;
        }
        if (dominance_value(f, 1) != evaluate(dom, Integer(1)))
            o.fail("dominance_value disagrees with D");
    }

    // Product rule.
    for (int i = 0; i < 10000 && o.pass; ++i) {
        const Polynomial f1 = test::random_poly(rng, 5, 30), f2 = test::random_poly(rng, 5, 30);
        const Integer n(test::uniform(rng, -100, 100));
        if (evaluate(derivative(f1 * f2), n) !=
            evaluate(derivative(f1), n) * evaluate(f2, n) + evaluate(f1, n) * evaluate(derivative(f2), n))
            o.fail("product rule broken");
    }

    // Horner against power sums.
    for (int i = 0; i < 10000 && o.pass; ++i) {
        const Polynomial f = test::random_poly(rng, 10, 1000);
        const Integer x(test::uniform(rng, -1000, 1000));
        if (evaluate(f, x) != test::naive_evaluate(f, x))
            o.fail("Horner mismatch for " + to_string(f));
    }

    // prime_power_decompose against trial-division factorization, every N <= 10^6.
    for (unsigned long n = 0; n <= 1000000 && o.pass; ++n) {
        std::optional<PrimePower> expected;
        if (n >= 2) {
            const std::uint64_t p = test::smallest_factor(n);
            unsigned long m = n, k = 0;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            if (m == 1)
                expected = PrimePower{Integer(static_cast<unsigned long>(p)), k};
        }
        if (prime_power_decompose(Integer(n)) != expected)
            o.fail("prime_power_decompose(" + std::to_string(n) + ") disagrees with trial division");
    }

    // Certificate JSON round trip.
    std::size_t round_trips = 0;
    for (const Polynomial& f : corpus()) {
        if (round_trips >= 2000 || !o.pass)
            break;
        for (long n = 2; n <= 12; ++n)
            for (long d = 1; d < n; ++d) {
                const CheckResult r = check_witness(f, Witness(n, d));
                if (!succeeded(r))
                    continue;
                const Certificate& c = std::get<Certificate>(r);
                const std::string text = to_json(c).dump();
                const Certificate back = certificate_from_json(nlohmann::json::parse(text));
                if (!(back == c) || to_json(back).dump() != text || !verify_certificate(back))
                    o.fail("JSON round trip lost information for " + to_string(f));
                ++round_trips;
            }
    }
    if (o.pass)
        o.detail = "upward closure (10^4 polys, t <= 50), product rule (10^4), Horner (10^4), prime powers N <= 10^6, " +
                   std::to_string(round_trips) + " JSON round trips";
    return o;
}

Outcome variant_subsumption()
{
    Outcome o;
    std::size_t a_successes = 0;
    for (const Polynomial& f : corpus()) {
        for (long n = 1; n <= 30; ++n) {
            const Integer value = evaluate(f, Integer(n));
            for (long d = 1; d <= 10; ++d) {
                // A success needs d | f(n) != 0; other witnesses fail A at an earlier check.
                if (value == 0 || !mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(d)))
                    continue;
                const Witness w(n, d);
                if (!succeeded(check_witness_variant_A(f, w)))
                    continue;
                ++a_successes;
                const CheckResult r1 = check_witness(f, w);
                if (!succeeded(r1) || std::get<Certificate>(r1).k != 1) {
                    if (o.pass)
                        o.fail("TheoremA success not matched for " + to_string(f) + " at (" + std::to_string(n) +
                               ", " + std::to_string(d) + ")");
                }
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(a_successes) + " TheoremA successes, each a Theorem1 success with k = 1";
    return o;
}

}  // namespace

int main()
{
    criterion("AC1", "Z small witness (9, 8)", 1.0, example_small_witness);
    criterion("AC2", "Z variant comparison", 10.0, example_variant_comparison);
    criterion("AC3", "soundness sweep", 300.0, soundness_sweep);
    criterion("AC4", "family grids", 60.0, family_grids);
    criterion("AC5", "reducible inputs never certify", 0.0, reducible_never_certify);
    criterion("AC6", "property suites", 0.0, property_suites);
    criterion("AC7", "variant subsumption", 0.0, variant_subsumption);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
