#pragma once

#include "irrcert/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace irrcert {

/// The oracle refuses inputs outside its envelope instead of guessing.
class OracleOutOfRange : public std::runtime_error {
public:
    explicit OracleOutOfRange(const std::string& why) : std::runtime_error("oracle out of range: " + why) {}
};

struct OracleLimits {
    std::size_t max_degree = 6;
    Integer max_coefficient = 1000000;
    std::uint64_t max_divisor_tuples = 1000000;
};

struct Factorization {
    Integer content;                  // positive
    std::vector<Polynomial> factors;  // primitive, positive leading coefficient, irreducible, sorted
};

/// Complete factorization over Z by Kronecker's interpolation method.
Factorization kronecker_factor(const Polynomial& f, const OracleLimits& limits = {});

/// True iff f is primitive and its factorization is a single factor equal to +-f.
bool is_irreducible_oracle(const Polynomial& f, const OracleLimits& limits = {});

/// Positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace irrcert
