#include "irrcert/criterion.hpp"

#include "irrcert/poly_text.hpp"

#include <stdexcept>

namespace irrcert {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::Theorem1: return "Theorem1";
    case Variant::TheoremA: return "TheoremA";
    case Variant::TheoremB: return "TheoremB";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view s)
{
    if (s == "Theorem1" || s == "1")
        return Variant::Theorem1;
    if (s == "TheoremA" || s == "A")
        return Variant::TheoremA;
    if (s == "TheoremB" || s == "B")
        return Variant::TheoremB;
    return std::nullopt;
}

std::string_view to_string(FailureCode c)
{
    switch (c) {
    case FailureCode::NotPrimitive: return "NotPrimitive";
    case FailureCode::ConstantPoly: return "ConstantPoly";
    case FailureCode::ShiftNonpositive: return "ShiftNonpositive";
    case FailureCode::DominanceFails: return "DominanceFails";
    case FailureCode::RootHit: return "RootHit";
    case FailureCode::NotDivisible: return "NotDivisible";
    case FailureCode::NotPrimePower: return "NotPrimePower";
    case FailureCode::DerivativeNotCoprime: return "DerivativeNotCoprime";
    case FailureCode::HeightBoundFails: return "HeightBoundFails";
    case FailureCode::NotPrime: return "NotPrime";
    case FailureCode::PrimeDividesD: return "PrimeDividesD";
    }
    return "?";
}

Witness::Witness(Integer n, Integer d) : n_(std::move(n)), d_(std::move(d))
{
    if (n_ < 1 || d_ < 1)
        throw std::invalid_argument("witness requires n >= 1 and d >= 1, got n=" + n_.get_str() +
                                    ", d=" + d_.get_str());
}

std::optional<FailureReason> validate_hypothesis(const Polynomial& f)
{
    if (f.is_constant())
        return FailureReason{FailureCode::ConstantPoly, "polynomial " + to_string(f) + " is constant"};
    const Integer c = content(f);
    if (c != 1)
        return FailureReason{FailureCode::NotPrimitive,
                             "polynomial " + to_string(f) + " has content " + c.get_str()};
    return std::nullopt;
}

namespace detail {

CheckContext make_context(const Polynomial& f)
{
    return CheckContext{&f, derivative(f), dominance_polynomial(f), height_ratio(f)};
}

CheckResult check_prepared(const CheckContext& ctx, const Witness& w, const Integer& value, const Integer& deriv_value,
                           Variant variant, std::uint64_t seed)
{
    const Integer& n = w.n();
    const Integer& d = w.d();
    auto fail = [](FailureCode code, std::string detail) -> CheckResult {
        return FailureReason{code, std::move(detail)};
    };

    Integer shift = n - d;
    if (shift < 1)
        return fail(FailureCode::ShiftNonpositive, "n - d = " + shift.get_str() + " < 1");

    Integer dom = evaluate(ctx.dominance, shift);
    if (variant == Variant::TheoremB) {
        const Rational bound = Rational(1) + ctx.height + Rational(d);
        if (Rational(n) < bound)
            return fail(FailureCode::HeightBoundFails,
                        "n = " + n.get_str() + " < 1 + H + d = " + bound.get_str());
    } else if (dom <= 0) {
        return fail(FailureCode::DominanceFails, "D(" + shift.get_str() + ") = " + dom.get_str() + " <= 0");
    }

    if (value == 0)
        return fail(FailureCode::RootHit, "f(" + n.get_str() + ") = 0");

    const Integer mag = abs(value);
    if (!mpz_divisible_p(mag.get_mpz_t(), d.get_mpz_t()))
        return fail(FailureCode::NotDivisible, d.get_str() + " does not divide |f(n)| = " + mag.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), mag.get_mpz_t(), d.get_mpz_t());

    PrimePower pk;
    Certainty certainty = Certainty::Deterministic;
    if (variant == Variant::TheoremA) {
        const PrimalityResult pr = is_prime(q, seed);
        if (!pr)
            return fail(FailureCode::NotPrime, "|f(n)|/d = " + q.get_str() + " is not prime");
        pk = PrimePower{q, 1};
        certainty = pr.certainty;
    } else {
        auto decomposed = prime_power_decompose(q, seed);
        if (!decomposed)
            return fail(FailureCode::NotPrimePower, "|f(n)|/d = " + q.get_str() + " is not a prime power");
        pk = std::move(*decomposed);
        certainty = is_prime(pk.p, seed).certainty;
    }

    if (variant == Variant::TheoremB && mpz_divisible_p(d.get_mpz_t(), pk.p.get_mpz_t()))
        return fail(FailureCode::PrimeDividesD, "p = " + pk.p.get_str() + " divides d = " + d.get_str());

    if (pk.k > 1 && mpz_divisible_p(deriv_value.get_mpz_t(), pk.p.get_mpz_t()))
        return fail(FailureCode::DerivativeNotCoprime,
                    "p = " + pk.p.get_str() + " divides f'(n) = " + deriv_value.get_str());

    return Certificate{*ctx.poly,     w,    std::move(shift), std::move(dom), value,   std::move(q),
                       std::move(pk.p), pk.k, deriv_value,      variant,        certainty};
}

}  // namespace detail

CheckResult check_witness(const Polynomial& f, const Witness& w, Variant variant, std::uint64_t seed)
{
    if (auto bad = validate_hypothesis(f))
        return *bad;
    const detail::CheckContext ctx = detail::make_context(f);
    return detail::check_prepared(ctx, w, evaluate(f, w.n()), evaluate(ctx.deriv, w.n()), variant, seed);
}

CheckResult check_witness_variant_A(const Polynomial& f, const Witness& w, std::uint64_t seed)
{
    return check_witness(f, w, Variant::TheoremA, seed);
}

CheckResult check_witness_variant_B(const Polynomial& f, const Witness& w, std::uint64_t seed)
{
    return check_witness(f, w, Variant::TheoremB, seed);
}

bool verify_certificate(const Certificate& c, std::uint64_t seed)
{
    const Polynomial& f = c.poly;
    if (f.is_constant() || content(f) != 1)
        return false;

    const Integer& n = c.witness.n();
    const Integer& d = c.witness.d();
    if (c.shift != n - d || c.shift < 1)
        return false;
    if (c.dominance != dominance_value(f, c.shift) || c.dominance <= 0)
        return false;
    if (c.value != evaluate(f, n) || c.value == 0)
        return false;
    if (c.quotient < 1 || c.quotient * d != abs(c.value))
        return false;
    if (c.k < 1)
        return false;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), c.p.get_mpz_t(), c.k);
    if (pk != c.quotient)
        return false;
    const PrimalityResult pr = is_prime(c.p, seed);
    if (!pr || pr.certainty != c.primality_certainty)
        return false;
    if (c.deriv_value != evaluate(derivative(f), n))
        return false;
    if (c.k > 1 && gcd(c.p, c.deriv_value) != 1)
        return false;

    switch (c.variant) {
    case Variant::Theorem1:
        break;
    case Variant::TheoremA:
        if (c.k != 1)
            return false;
        break;
    case Variant::TheoremB:
        if (Rational(n) < Rational(1) + height_ratio(f) + Rational(d))
            return false;
        if (mpz_divisible_p(d.get_mpz_t(), c.p.get_mpz_t()))
            return false;
        break;
    }
    return true;
}

}  // namespace irrcert
