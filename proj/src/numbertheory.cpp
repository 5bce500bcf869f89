#include "irrcert/numbertheory.hpp"

#include <array>

namespace irrcert {

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::string_view to_string(Certainty c)
{
    return c == Certainty::Deterministic ? "deterministic" : "probable";
}

std::optional<Certainty> certainty_from_string(std::string_view s)
{
    if (s == "deterministic")
        return Certainty::Deterministic;
    if (s == "probable")
        return Certainty::Probable;
    return std::nullopt;
}

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// The first twelve primes form a deterministic strong-pseudoprime base set
// for every n < 3.3 * 10^24, which covers all n < 2^64.
constexpr std::array<unsigned, 12> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr unsigned kRandomRounds = 64;

Integer mod(const Integer& a, const Integer& n)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

// x / 2 mod n for odd n.
Integer half_mod(Integer x, const Integer& n)
{
    if (mpz_odd_p(x.get_mpz_t()))
        x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return x;
}

Integer random_below(const Integer& bound, std::mt19937_64& rng)
{
    const std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    Integer r = 0;
    for (std::size_t i = 0; i < words; ++i) {
        r <<= 64;
        r += Integer(static_cast<unsigned long>(rng()));
    }
    return mod(r, bound);
}

bool below_2_64(const Integer& n)
{
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

}  // namespace

namespace detail {

bool strong_probable_prime(const Integer& n, const Integer& a)
{
    const Integer n1 = n - 1;
    Integer d = n1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

bool strong_lucas_probable_prime(const Integer& n)
{
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;

    // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    long dval = 5;
    for (;;) {
        const Integer dz(dval);
        const int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
        if (j == -1)
            break;
        if (j == 0 && abs(dz) != n)
            return false;
        dval = dval > 0 ? -(dval + 2) : -dval + 2;
    }
    const Integer D(dval);
    const Integer Q((1 - dval) / 4);

    Integer d = n + 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // P = 1. Start at index 1: U_1 = 1, V_1 = P, Q^1.
    Integer U = 1, V = 1, Qk = mod(Q, n);
    const long top = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
    for (long bit = top - 1; bit >= 0; --bit) {
        U = mod(U * V, n);
        V = mod(V * V - 2 * Qk, n);
        Qk = mod(Qk * Qk, n);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            Integer u2 = half_mod(mod(U + V, n), n);
            Integer v2 = half_mod(mod(D * U + V, n), n);
            U = std::move(u2);
            V = std::move(v2);
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        if (V == 0)
            return true;
        Qk = mod(Qk * Qk, n);
    }
    return false;
}

}  // namespace detail

PrimalityResult is_prime(const Integer& n, std::mt19937_64& rng)
{
    if (n < 2)
        return {false, Certainty::Deterministic};
    for (unsigned p : kSmallPrimes) {
        if (n == p)
            return {true, Certainty::Deterministic};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return {false, Certainty::Deterministic};
    }
    if (n < 97 * 97)
        return {true, Certainty::Deterministic};

    if (below_2_64(n)) {
        for (unsigned a : kDeterministicBases)
            if (!detail::strong_probable_prime(n, Integer(a)))
                return {false, Certainty::Deterministic};
        return {true, Certainty::Deterministic};
    }

    if (!detail::strong_probable_prime(n, Integer(2)) || !detail::strong_lucas_probable_prime(n))
        return {false, Certainty::Deterministic};
    const Integer span = n - 3;
    for (unsigned i = 0; i < kRandomRounds; ++i) {
        const Integer a = random_below(span, rng) + 2;
        if (!detail::strong_probable_prime(n, a))
            return {false, Certainty::Deterministic};
    }
    return {true, Certainty::Probable};
}

PrimalityResult is_prime(const Integer& n, std::uint64_t seed)
{
    const Integer low = abs(n) % Integer(0xffffffffUL);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(low.get_ui())};
    std::mt19937_64 rng(seq);
    return is_prime(n, rng);
}

KthRoot integer_kth_root(const Integer& n, unsigned long k)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("integer_kth_root requires N >= 1 and k >= 1");
    if (k == 1)
        return {n, true};

    // 2^ceil(bits/k) >= N^(1/k); Newton decreases monotonically from above.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, (bits + k - 1) / k);
    for (;;) {
        Integer xk1;
        mpz_pow_ui(xk1.get_mpz_t(), x.get_mpz_t(), k - 1);
        Integer y = (x * (k - 1) + n / xk1) / k;
        if (y >= x)
            break;
        x = std::move(y);
    }
    Integer xk;
    mpz_pow_ui(xk.get_mpz_t(), x.get_mpz_t(), k);
    return {x, xk == n};
}

std::optional<PrimePower> prime_power_decompose(const Integer& n, std::uint64_t seed)
{
    if (n < 2)
        return std::nullopt;
    const unsigned long max_k = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    for (unsigned long k = max_k; k >= 1; --k) {
        KthRoot r = integer_kth_root(n, k);
        if (r.exact && is_prime(r.root, seed))
            return PrimePower{std::move(r.root), k};
    }
    return std::nullopt;
}

std::size_t decimal_digits(const Integer& n)
{
    return Integer(abs(n)).get_str().size();
}

}  // namespace irrcert
