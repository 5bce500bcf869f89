#pragma once

#include "irrcert/numbertheory.hpp"
#include "irrcert/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace irrcert {

/// Which irreducibility test a witness is checked against.
///   Theorem1: |f(n)|/d = p^k, and p does not divide f'(n) when k > 1.
///   TheoremA: |f(n)|/d is prime.
///   TheoremB: height bound n >= 1 + H + d in place of dominance, p^k with p not dividing d.
enum class Variant { Theorem1, TheoremA, TheoremB };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view s);

/// A pair (n, d) of positive integers.
class Witness {
public:
    /// Throws std::invalid_argument unless n >= 1 and d >= 1.
    Witness(Integer n, Integer d);

    const Integer& n() const { return n_; }
    const Integer& d() const { return d_; }

    friend bool operator==(const Witness&, const Witness&) = default;

private:
    Integer n_;
    Integer d_;
};

struct Certificate {
    Polynomial poly;
    Witness witness;
    Integer shift;        // n - d
    Integer dominance;    // D(shift) > 0
    Integer value;        // f(n)
    Integer quotient;     // |f(n)| / d
    Integer p;
    unsigned long k = 0;  // quotient == p^k
    Integer deriv_value;  // f'(n)
    Variant variant = Variant::Theorem1;
    Certainty primality_certainty = Certainty::Deterministic;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class FailureCode {
    NotPrimitive,
    ConstantPoly,
    ShiftNonpositive,
    DominanceFails,
    RootHit,
    NotDivisible,
    NotPrimePower,
    DerivativeNotCoprime,
    HeightBoundFails,
    NotPrime,
    PrimeDividesD,
};

std::string_view to_string(FailureCode c);

struct FailureReason {
    FailureCode code;
    std::string detail;
};

using CheckResult = std::variant<Certificate, FailureReason>;

inline bool succeeded(const CheckResult& r) { return std::holds_alternative<Certificate>(r); }

/// Nothing when f is primitive of degree >= 1.
std::optional<FailureReason> validate_hypothesis(const Polynomial& f);

/// Runs the checks in fixed order and stops at the first failure:
/// hypothesis, shift, dominance (height bound for TheoremB), root, divisibility,
/// prime power (prime for TheoremA), p not dividing d (TheoremB), derivative coprimality.
CheckResult check_witness(const Polynomial& f, const Witness& w, Variant variant = Variant::Theorem1,
                          std::uint64_t seed = kDefaultSeed);

CheckResult check_witness_variant_A(const Polynomial& f, const Witness& w, std::uint64_t seed = kDefaultSeed);
CheckResult check_witness_variant_B(const Polynomial& f, const Witness& w, std::uint64_t seed = kDefaultSeed);

/// Replays a certificate from its polynomial and witness alone and checks
/// every stored field and every certificate invariant.
bool verify_certificate(const Certificate& c, std::uint64_t seed = kDefaultSeed);

namespace detail {

/// Per-polynomial data shared by many witness checks.
struct CheckContext {
    const Polynomial* poly;
    Polynomial deriv;
    Polynomial dominance;
    Rational height;
};

CheckContext make_context(const Polynomial& f);

/// check_witness with f(n) and f'(n) already computed and the hypothesis already validated.
CheckResult check_prepared(const CheckContext& ctx, const Witness& w, const Integer& value, const Integer& deriv_value,
                           Variant variant, std::uint64_t seed);

}  // namespace detail

}  // namespace irrcert
