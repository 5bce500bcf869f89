#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irrcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised by polynomial operations whose preconditions do not hold
/// (zero polynomial where content is required, constant where a degree is needed...).
class PolynomialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over Z, coefficient i holds a_i.
///
/// The representation is always normalized: the coefficient vector is
/// non-empty and its last entry is nonzero, except for the zero polynomial
/// which is stored as the single coefficient 0.
class Polynomial {
public:
    Polynomial();
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial monomial(Integer c, std::size_t exponent);

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_constant() const { return coeffs_.size() == 1; }

    /// Degree; empty for the zero polynomial.
    std::optional<std::size_t> degree() const;

    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const { return coeffs_.size() - 1; }

    const Integer& leading() const { return coeffs_.back(); }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    /// a_i, or 0 beyond the stored range.
    Integer coeff(std::size_t i) const;

    std::span<const Integer> coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Integer& c, const Polynomial& a);

/// a^e by repeated multiplication.
Polynomial power(const Polynomial& a, unsigned e);

/// Exact division over Z. Returns the quotient when b divides a with an
/// integer quotient and zero remainder, otherwise nothing.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// gcd of all coefficients, always positive. Throws on the zero polynomial.
Integer content(const Polynomial& f);

/// f / content(f); the sign of the leading coefficient is kept.
Polynomial primitive_part(const Polynomial& f);

/// Horner evaluation at an integer point.
Integer evaluate(const Polynomial& f, const Integer& x);

/// Exact evaluation at a rational point.
Rational evaluate(const Polynomial& f, const Rational& x);

Polynomial derivative(const Polynomial& f);

/// The dominance polynomial D(t) = |a_m| t^m - sum_{i<m} |a_i| t^i.
///
/// Its coefficient sequence has a single sign change, so D is positive
/// exactly on an open ray (alpha*, oo) of the positive reals.
Polynomial dominance_polynomial(const Polynomial& f);

/// D(t) for an integer t >= 1. Throws for t <= 0 or constant f.
Integer dominance_value(const Polynomial& f, const Integer& t);

struct DominanceProfile {
    /// Smallest integer t >= 1 with D(t) > 0.
    Integer t_min;
    /// (lo, hi) with D(lo) <= 0 < D(hi), present only when a width was requested.
    std::optional<std::pair<Rational, Rational>> alpha_star_bracket;
};

/// Locates t_min by doubling then bisection; optionally brackets alpha*
/// to within bracket_width by rational bisection.
DominanceProfile dominance_profile(const Polynomial& f,
                                   const std::optional<Rational>& bracket_width = std::nullopt);

/// H = max_{i<m} |a_i / a_m| as an exact rational.
Rational height_ratio(const Polynomial& f);

}  // namespace irrcert
