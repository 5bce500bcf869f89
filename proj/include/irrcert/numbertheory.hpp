#pragma once

#include "irrcert/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace irrcert {

/// Seed used when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eedULL;

Integer gcd(const Integer& a, const Integer& b);

enum class Certainty { Deterministic, Probable };

std::string_view to_string(Certainty c);
std::optional<Certainty> certainty_from_string(std::string_view s);

struct PrimalityResult {
    bool prime = false;
    /// Deterministic below 2^64 and for every composite verdict; Probable for
    /// primes past 2^64, where the answer rests on random strong-pseudoprime
    /// rounds plus a strong Lucas test.
    Certainty certainty = Certainty::Deterministic;

    explicit operator bool() const { return prime; }
};

/// Primality with a certainty tag. Random bases come from rng.
PrimalityResult is_prime(const Integer& n, std::mt19937_64& rng);

/// Primality with bases drawn from a generator seeded by seed and n, so the
/// verdict for a given (n, seed) is reproducible across threads and runs.
PrimalityResult is_prime(const Integer& n, std::uint64_t seed = kDefaultSeed);

struct KthRoot {
    Integer root;  // floor(N^(1/k))
    bool exact = false;
};

/// Integer k-th root by Newton iteration. Requires N >= 1 and k >= 1.
KthRoot integer_kth_root(const Integer& n, unsigned long k);

struct PrimePower {
    Integer p;
    unsigned long k = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, k) with N = p^k and p prime, or nothing. Exponents are scanned from
/// floor(log2 N) down to 1; the first exact root with a prime base is the answer.
std::optional<PrimePower> prime_power_decompose(const Integer& n, std::uint64_t seed = kDefaultSeed);

/// Number of decimal digits of |n| (1 for zero).
std::size_t decimal_digits(const Integer& n);

namespace detail {

/// Strong probable-prime test to base a; n odd and > 2.
bool strong_probable_prime(const Integer& n, const Integer& a);

/// Strong Lucas probable-prime test with Selfridge parameters; n odd, > 2.
bool strong_lucas_probable_prime(const Integer& n);

}  // namespace detail

}  // namespace irrcert
