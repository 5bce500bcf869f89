#pragma once

#include "irrcert/criterion.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace irrcert {

/// The polynomial failed validate_hypothesis; carries the reason.
class HypothesisError : public std::invalid_argument {
public:
    explicit HypothesisError(FailureReason reason);
    const FailureReason& reason() const { return reason_; }

private:
    FailureReason reason_;
};

inline constexpr std::uint64_t kDefaultNMax = 10000;
inline constexpr std::uint64_t kDefaultDMax = 1000;

struct SearchBounds {
    std::uint64_t n_max = kDefaultNMax;  // >= 2
    std::uint64_t d_max = kDefaultDMax;  // >= 1
    Variant variant = Variant::Theorem1;
};

/// Smallest witness (n ascending, then d ascending) inside the box
/// n <= n_max, d <= min(d_max, n - t_min) that passes the selected variant.
/// The scan over n is OpenMP-parallel; the result equals find_witness_serial.
std::optional<Certificate> find_witness(const Polynomial& f, const SearchBounds& b,
                                        std::uint64_t seed = kDefaultSeed);

/// Single-threaded reference scan.
std::optional<Certificate> find_witness_serial(const Polynomial& f, const SearchBounds& b,
                                               std::uint64_t seed = kDefaultSeed);

struct ComparisonRow {
    Variant variant = Variant::Theorem1;
    std::optional<Certificate> certificate;
    /// Decimal digits of the quotient p^k, 0 when no witness was found.
    std::size_t quotient_digits = 0;
    /// (n, d) candidates in the box up to and including the witness, in scan order;
    /// the whole box when nothing was found.
    std::uint64_t checks_performed = 0;
};

/// One row per variant, in the order Theorem1, TheoremA, TheoremB, each
/// searched with the same bounds.
std::vector<ComparisonRow> compare_criteria(const Polynomial& f, std::uint64_t n_max, std::uint64_t d_max,
                                            std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const ComparisonRow& row);
nlohmann::json to_json(const std::vector<ComparisonRow>& rows);

/// Aligned plain-text table.
std::string format_table(const std::vector<ComparisonRow>& rows);

}  // namespace irrcert
