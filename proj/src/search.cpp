#include "irrcert/search.hpp"

#include "irrcert/certificate_json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irrcert {

HypothesisError::HypothesisError(FailureReason reason)
    : std::invalid_argument(std::string(to_string(reason.code)) + ": " + reason.detail), reason_(std::move(reason))
{
}

namespace {

struct ScanPlan {
    detail::CheckContext ctx;
    std::uint64_t t_min = 0;
    std::uint64_t n_lo = 0;  // first n with a legal d
    std::uint64_t n_hi = 0;
    std::uint64_t d_max = 0;
    Variant variant = Variant::Theorem1;
    bool empty = true;

    std::uint64_t d_cap(std::uint64_t n) const { return std::min(d_max, n - t_min); }
};

ScanPlan make_plan(const Polynomial& f, const SearchBounds& b)
{
    if (b.n_max < 2 || b.d_max < 1)
        throw std::invalid_argument("search bounds require n_max >= 2 and d_max >= 1");
    if (auto bad = validate_hypothesis(f))
        throw HypothesisError(*bad);

    ScanPlan plan{detail::make_context(f)};
    plan.d_max = b.d_max;
    plan.n_hi = b.n_max;
    plan.variant = b.variant;
    // Any witness needs D(n - d) > 0, i.e. d <= n - t_min. This holds for the
    // height-bound variant too, since n - d >= 1 + H already forces D(n - d) > 0.
    const Integer t_min = dominance_profile(f).t_min;
    if (t_min >= b.n_max)
        return plan;
    plan.t_min = t_min.get_ui();
    plan.n_lo = plan.t_min + 1;
    plan.empty = false;
    return plan;
}

std::optional<Certificate> scan_n(const ScanPlan& plan, std::uint64_t n, std::uint64_t seed)
{
    const Integer nz(static_cast<unsigned long>(n));
    const Integer value = evaluate(*plan.ctx.poly, nz);
    if (value == 0)
        return std::nullopt;
    const Integer deriv_value = evaluate(plan.ctx.deriv, nz);
    const std::uint64_t cap = plan.d_cap(n);
    for (std::uint64_t d = 1; d <= cap; ++d) {
        if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(d)))
            continue;
        CheckResult r = detail::check_prepared(plan.ctx, Witness(nz, Integer(static_cast<unsigned long>(d))), value,
                                               deriv_value, plan.variant, seed);
        if (auto* cert = std::get_if<Certificate>(&r))
            return std::move(*cert);
    }
    return std::nullopt;
}

std::uint64_t candidates_before(const ScanPlan& plan, std::uint64_t n_stop)
{
    std::uint64_t total = 0;
    for (std::uint64_t n = plan.n_lo; n < n_stop; ++n)
        total += plan.d_cap(n);
    return total;
}

}  // namespace

std::optional<Certificate> find_witness_serial(const Polynomial& f, const SearchBounds& b, std::uint64_t seed)
{
    const ScanPlan plan = make_plan(f, b);
    if (plan.empty)
        return std::nullopt;
    for (std::uint64_t n = plan.n_lo; n <= plan.n_hi; ++n)
        if (auto cert = scan_n(plan, n, seed))
            return cert;
    return std::nullopt;
}

std::optional<Certificate> find_witness(const Polynomial& f, const SearchBounds& b, std::uint64_t seed)
{
    const ScanPlan plan = make_plan(f, b);
    if (plan.empty)
        return std::nullopt;

    // Blocks of consecutive n are scanned in parallel; the first block holding
    // a success yields its smallest n, which is the global minimum.
    std::uint64_t block = 64;
#ifdef _OPENMP
    block *= static_cast<std::uint64_t>(omp_get_max_threads());
#endif
    std::vector<std::optional<Certificate>> found;
    for (std::uint64_t start = plan.n_lo; start <= plan.n_hi; start += block) {
        const std::uint64_t count = std::min(block, plan.n_hi - start + 1);
        found.assign(count, std::nullopt);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            found[static_cast<std::size_t>(i)] = scan_n(plan, start + static_cast<std::uint64_t>(i), seed);
        for (auto& c : found)
            if (c)
                return std::move(c);
    }
    return std::nullopt;
}

std::vector<ComparisonRow> compare_criteria(const Polynomial& f, std::uint64_t n_max, std::uint64_t d_max,
                                            std::uint64_t seed)
{
    std::vector<ComparisonRow> rows;
    for (Variant v : {Variant::Theorem1, Variant::TheoremA, Variant::TheoremB}) {
        const SearchBounds b{n_max, d_max, v};
        const ScanPlan plan = make_plan(f, b);
        ComparisonRow row;
        row.variant = v;
        row.certificate = find_witness(f, b, seed);
        if (plan.empty) {
            row.checks_performed = 0;
        } else if (row.certificate) {
            const std::uint64_t n0 = row.certificate->witness.n().get_ui();
            row.checks_performed = candidates_before(plan, n0) + row.certificate->witness.d().get_ui();
            row.quotient_digits = decimal_digits(row.certificate->quotient);
        } else {
            row.checks_performed = candidates_before(plan, plan.n_hi + 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const ComparisonRow& row)
{
    nlohmann::json j{{"variant", std::string(to_string(row.variant))},
                     {"checks_performed", std::to_string(row.checks_performed)}};
    if (row.certificate) {
        const Certificate& c = *row.certificate;
        j["witness"] = {{"n", c.witness.n().get_str()}, {"d", c.witness.d().get_str()}};
        j["p"] = c.p.get_str();
        j["k"] = std::to_string(c.k);
        j["quotient_digits"] = std::to_string(row.quotient_digits);
        j["primality_certainty"] = std::string(to_string(c.primality_certainty));
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const std::vector<ComparisonRow>& rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back(to_json(r));
    return arr;
}

std::string format_table(const std::vector<ComparisonRow>& rows)
{
    std::ostringstream os;
    os << std::left << std::setw(10) << "variant" << std::setw(8) << "n" << std::setw(8) << "d" << std::setw(30)
       << "p" << std::setw(6) << "k" << std::setw(8) << "digits" << std::setw(14) << "certainty"
       << "checks\n";
    for (const auto& r : rows) {
        os << std::setw(10) << to_string(r.variant);
        if (r.certificate) {
            const Certificate& c = *r.certificate;
            os << std::setw(8) << c.witness.n().get_str() << std::setw(8) << c.witness.d().get_str()
               << std::setw(30) << c.p.get_str() << std::setw(6) << c.k << std::setw(8) << r.quotient_digits
               << std::setw(14) << to_string(c.primality_certainty);
        } else {
            os << std::setw(8) << "-" << std::setw(8) << "-" << std::setw(30) << "-" << std::setw(6) << "-"
               << std::setw(8) << "-" << std::setw(14) << "-";
        }
        os << r.checks_performed << "\n";
    }
    return os.str();
}

}  // namespace irrcert
