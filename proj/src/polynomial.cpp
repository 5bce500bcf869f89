#include "irrcert/polynomial.hpp"

#include <algorithm>

namespace irrcert {

Polynomial::Polynomial() : coeffs_{Integer(0)} {}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::monomial(Integer c, std::size_t exponent)
{
    std::vector<Integer> v(exponent + 1, Integer(0));
    v[exponent] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.emplace_back(0);
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (is_zero())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Integer Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Integer> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a)
{
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : r)
        c = -c;
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Integer& c, const Polynomial& a)
{
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : r)
        x *= c;
    return Polynomial(std::move(r));
}

Polynomial power(const Polynomial& a, unsigned e)
{
    Polynomial r{1};
    for (unsigned i = 0; i < e; ++i)
        r = r * a;
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw PolynomialError("division by the zero polynomial");
    if (a.is_zero())
        return Polynomial();
    if (a.deg() < b.deg())
        return std::nullopt;

    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> quot(a.deg() - b.deg() + 1, Integer(0));
    const Integer& lead = b.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer& top = rem[i + b.deg()];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        Integer q = top / lead;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[i + j] -= q * b[j];
        quot[i] = std::move(q);
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return Polynomial(std::move(quot));
}

Integer content(const Polynomial& f)
{
    if (f.is_zero())
        throw PolynomialError("undefined content: zero polynomial");
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Polynomial primitive_part(const Polynomial& f)
{
    const Integer c = content(f);
    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : r)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return Polynomial(std::move(r));
}

Integer evaluate(const Polynomial& f, const Integer& x)
{
    Integer acc = f.leading();
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        acc *= x;
        acc += f[i];
    }
    return acc;
}

Rational evaluate(const Polynomial& f, const Rational& x)
{
    Rational acc(f.leading());
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        acc *= x;
        acc += Rational(f[i]);
    }
    acc.canonicalize();
    return acc;
}

Polynomial derivative(const Polynomial& f)
{
    if (f.is_constant())
        return Polynomial();
    std::vector<Integer> r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        r[i - 1] = f[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(r));
}

namespace {

void require_nonconstant(const Polynomial& f, const char* what)
{
    if (f.is_constant())
        throw PolynomialError(std::string(what) + ": polynomial must have degree >= 1");
}

}  // namespace

Polynomial dominance_polynomial(const Polynomial& f)
{
    require_nonconstant(f, "dominance polynomial");
    std::vector<Integer> r(f.size());
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        r[i] = -abs(f[i]);
    r.back() = abs(f.leading());
    return Polynomial(std::move(r));
}

Integer dominance_value(const Polynomial& f, const Integer& t)
{
    require_nonconstant(f, "dominance value");
    if (t <= 0)
        throw PolynomialError("dominance value: shift must be positive, got " + t.get_str());
    return evaluate(dominance_polynomial(f), t);
}

DominanceProfile dominance_profile(const Polynomial& f, const std::optional<Rational>& bracket_width)
{
    require_nonconstant(f, "dominance profile");
    if (bracket_width && *bracket_width <= 0)
        throw PolynomialError("dominance profile: bracket width must be positive");

    const Polynomial dom = dominance_polynomial(f);
    auto positive = [&](const Integer& t) { return evaluate(dom, t) > 0; };

    // Doubling finds an upper end; D(hi/2) <= 0 < D(hi) afterwards.
    Integer hi = 1;
    while (!positive(hi))
        hi *= 2;
    Integer lo = hi / 2;  // 0 when hi == 1; D(0) = -|a_0| <= 0
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (positive(mid))
            hi = mid;
        else
            lo = mid;
    }

    DominanceProfile out{hi, std::nullopt};
    if (!bracket_width)
        return out;

    bool lower_vanish = true;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        lower_vanish = lower_vanish && f[i] == 0;
    if (lower_vanish) {
        out.alpha_star_bracket = std::pair{Rational(0), Rational(*bracket_width)};
        return out;
    }

    Rational rlo(hi - 1), rhi(hi);
    while (Rational(rhi - rlo) >= *bracket_width) {
        Rational mid = (rlo + rhi) / 2;
        mid.canonicalize();
        if (evaluate(dom, mid) > 0)
            rhi = mid;
        else
            rlo = mid;
    }
    out.alpha_star_bracket = std::pair{rlo, rhi};
    return out;
}

Rational height_ratio(const Polynomial& f)
{
    require_nonconstant(f, "height ratio");
    const Integer lead = abs(f.leading());
    Integer best = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (abs(f[i]) > best)
            best = abs(f[i]);
    Rational h(best, lead);
    h.canonicalize();
    return h;
}

}  // namespace irrcert
