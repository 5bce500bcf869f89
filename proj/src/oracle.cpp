#include "irrcert/oracle.hpp"

#include "irrcert/numbertheory.hpp"

#include <algorithm>
#include <limits>

namespace irrcert {

std::vector<Integer> positive_divisors(const Integer& n)
{
    if (n == 0)
        throw std::invalid_argument("divisors of zero");
    const Integer a = abs(n);
    if (!a.fits_ulong_p())
        throw OracleOutOfRange("value " + a.get_str() + " too large to enumerate divisors");

    unsigned long m = a.get_ui();
    std::vector<std::pair<unsigned long, unsigned>> primes;
    for (unsigned long p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            primes.emplace_back(p, e);
    }
    if (m > 1)
        primes.emplace_back(m, 1);

    std::vector<Integer> divs{Integer(1)};
    for (auto [p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

Polynomial positive_leading(Polynomial g)
{
    return g.leading() < 0 ? -g : g;
}

// Sum a_i num^i den^(m-i): zero iff num/den is a root.
Integer homogeneous_value(const Polynomial& g, const Integer& num, const Integer& den)
{
    Integer acc = 0, num_pow = 1;
    const std::size_t m = g.deg();
    for (std::size_t i = 0; i <= m; ++i) {
        Integer den_pow;
        mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), m - i);
        acc += g[i] * num_pow * den_pow;
        num_pow *= num;
    }
    return acc;
}

// A primitive linear factor q*x - r of g, if g has a rational root r/q.
std::optional<Polynomial> rational_root_factor(const Polynomial& g)
{
    if (g[0] == 0)
        return Polynomial{0, 1};
    const auto nums = positive_divisors(g[0]);
    const auto dens = positive_divisors(g.leading());
    for (const auto& q : dens)
        for (const auto& r : nums) {
            if (gcd(q, r) != 1)
                continue;
            for (int sign : {1, -1}) {
                const Integer num = sign * r;
                if (homogeneous_value(g, num, q) == 0)
                    return Polynomial(std::vector<Integer>{-num, q});
            }
        }
    return std::nullopt;
}

// Unique polynomial of degree <= xs.size()-1 through the points, via Newton
// divided differences; nothing unless every coefficient is an integer.
std::optional<Polynomial> interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys)
{
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
            dd[i].canonicalize();
        }

    std::vector<Rational> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly * (X - x_i) + dd[i]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * Rational(xs[i]);
        }
        next[0] += dd[i];
        poly = std::move(next);
    }

    std::vector<Integer> coeffs;
    coeffs.reserve(poly.size());
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1)
            return std::nullopt;
        coeffs.push_back(c.get_num());
    }
    return Polynomial(std::move(coeffs));
}

class KroneckerSplitter {
public:
    explicit KroneckerSplitter(const OracleLimits& limits) : limits_(limits) {}

    // g primitive with positive leading coefficient, deg >= 1.
    void factor(Polynomial g, std::vector<Polynomial>& out) const
    {
        while (!g.is_constant()) {
            auto lin = rational_root_factor(g);
            if (!lin)
                break;
            out.push_back(*lin);
            g = *divide_exact(g, *lin);
        }
        if (!g.is_constant())
            split(positive_leading(std::move(g)), out);
    }

private:
    void split(const Polynomial& g, std::vector<Polynomial>& out) const
    {
        for (std::size_t s = 1; s <= g.deg() / 2; ++s) {
            if (auto h = factor_of_degree(g, s)) {
                const Polynomial rest = *divide_exact(g, *h);
                split(positive_leading(*h), out);
                split(positive_leading(rest), out);
                return;
            }
        }
        out.push_back(g);
    }

    std::optional<Polynomial> factor_of_degree(const Polynomial& g, std::size_t s) const
    {
        // Sample points 0, 1, -1, 2, -2, ... skipping roots.
        std::vector<Integer> xs, values;
        for (long step = 0; xs.size() < s + 1; ++step) {
            const Integer x(step == 0 ? 0 : (step % 2 ? (step + 1) / 2 : -(step / 2)));
            Integer v = evaluate(g, x);
            if (v == 0)
                continue;
            xs.push_back(x);
            values.push_back(std::move(v));
        }

        // h(x_0) > 0 fixes the sign ambiguity between h and -h.
        std::vector<std::vector<Integer>> choices;
        std::uint64_t tuples = 1;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::vector<Integer> divs = positive_divisors(values[i]);
            if (i > 0) {
                const std::size_t m = divs.size();
                for (std::size_t j = 0; j < m; ++j)
                    divs.push_back(-divs[j]);
            }
            if (tuples > limits_.max_divisor_tuples / divs.size())
                throw OracleOutOfRange("divisor-tuple budget of " + std::to_string(limits_.max_divisor_tuples) +
                                       " exceeded");
            tuples *= divs.size();
            choices.push_back(std::move(divs));
        }

        std::vector<std::size_t> idx(xs.size(), 0);
        std::vector<Integer> ys(xs.size());
        for (;;) {
            for (std::size_t i = 0; i < xs.size(); ++i)
                ys[i] = choices[i][idx[i]];
            if (auto h = interpolate_integer(xs, ys); h && !h->is_zero() && h->deg() == s) {
                if (mpz_divisible_p(g.leading().get_mpz_t(), h->leading().get_mpz_t()) &&
                    divide_exact(g, *h))
                    return h;
            }
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == choices[i].size())
                idx[i++] = 0;
            if (i == idx.size())
                return std::nullopt;
        }
    }

    const OracleLimits& limits_;
};

bool factor_less(const Polynomial& a, const Polynomial& b)
{
    if (a.deg() != b.deg())
        return a.deg() < b.deg();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

Factorization kronecker_factor(const Polynomial& f, const OracleLimits& limits)
{
    if (f.is_constant())
        throw OracleOutOfRange("degree must be at least 1");
    if (f.deg() > limits.max_degree)
        throw OracleOutOfRange("degree " + std::to_string(f.deg()) + " exceeds " +
                               std::to_string(limits.max_degree));
    for (const auto& c : f.coeffs())
        if (abs(c) > limits.max_coefficient)
            throw OracleOutOfRange("coefficient " + c.get_str() + " exceeds " + limits.max_coefficient.get_str());

    Factorization out{content(f), {}};
    KroneckerSplitter(limits).factor(positive_leading(primitive_part(f)), out.factors);
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

bool is_irreducible_oracle(const Polynomial& f, const OracleLimits& limits)
{
    if (!f.is_zero() && content(f) != 1)
        throw std::invalid_argument("is_irreducible_oracle requires a primitive polynomial");
    const Factorization fac = kronecker_factor(f, limits);
    return fac.factors.size() == 1 && (fac.factors[0] == f || fac.factors[0] == -f);
}

}  // namespace irrcert
