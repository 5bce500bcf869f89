#include "irrcert/cli.hpp"

#include "irrcert/certificate_json.hpp"
#include "irrcert/criterion.hpp"
#include "irrcert/families.hpp"
#include "irrcert/numbertheory.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/poly_text.hpp"
#include "irrcert/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace irrcert::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;

    std::string poly;
    std::string n, d;
    std::string variant = "1";
    std::string out_file;
    std::string n_max = std::to_string(kDefaultNMax);
    std::string d_max = std::to_string(kDefaultDMax);
    std::string cert_file;

    std::string family;
    std::string p, k, m, fd, sign = "+";
};

Polynomial parse_poly_arg(const std::string& text)
{
    try {
        return parse_polynomial(text);
    } catch (const ParseError& e) {
        std::string caret(e.position(), ' ');
        throw UsageError(std::string("malformed polynomial: ") + e.what() + "\n  " + text + "\n  " + caret + "^");
    }
}

Integer parse_int_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_integer(text);
    } catch (const ParseError& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

Integer parse_positive_arg(const std::string& name, const std::string& text)
{
    Integer v = parse_int_arg(name, text);
    if (v < 1)
        throw UsageError("--" + name + " must be a positive integer, got " + text);
    return v;
}

std::uint64_t parse_bound_arg(const std::string& name, const std::string& text, std::uint64_t min)
{
    Integer v = parse_int_arg(name, text);
    if (v < min || mpz_sizeinbase(v.get_mpz_t(), 2) > 63)
        throw UsageError("--" + name + " must be between " + std::to_string(min) + " and 2^63, got " + text);
    return v.get_ui();
}

unsigned long parse_small_arg(const std::string& name, const std::string& text)
{
    Integer v = parse_int_arg(name, text);
    if (v < 0 || !v.fits_uint_p())
        throw UsageError("--" + name + " out of range: " + text);
    return v.get_ui();
}

Variant parse_variant_arg(const std::string& text)
{
    if (auto v = variant_from_string(text))
        return *v;
    throw UsageError("--variant must be one of 1, A, B (or Theorem1, TheoremA, TheoremB), got " + text);
}

void print_certificate_text(std::ostream& out, const Certificate& c)
{
    out << "certificate (" << to_string(c.variant) << "): " << to_string(c.poly) << " is irreducible\n"
        << "  witness     n = " << c.witness.n().get_str() << ", d = " << c.witness.d().get_str() << "\n"
        << "  dominance   D(" << c.shift.get_str() << ") = " << c.dominance.get_str() << "\n"
        << "  f(n)        " << c.value.get_str() << "\n"
        << "  |f(n)|/d    " << c.p.get_str() << "^" << c.k << " (" << decimal_digits(c.quotient) << " digits)\n"
        << "  f'(n)       " << c.deriv_value.get_str() << "\n"
        << "  primality   " << to_string(c.primality_certainty) << "\n";
}

void print_failure(std::ostream& out, const Options& o, const FailureReason& r)
{
    if (o.json)
        out << nlohmann::json{{"ok", false}, {"failure", to_json(r)}}.dump(2) << "\n";
    else
        out << "criterion failed: " << to_string(r.code) << ": " << r.detail << "\n";
}

int emit_certificate(std::ostream& out, const Options& o, const Certificate& c)
{
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f)
            throw UsageError("cannot write " + o.out_file);
        f << to_json(c).dump(2) << "\n";
        if (!f)
            throw UsageError("failed writing " + o.out_file);
        out << "certificate written to " << o.out_file << "\n";
    } else if (o.json) {
        out << to_json(c).dump(2) << "\n";
    } else {
        print_certificate_text(out, c);
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Polynomial f = parse_poly_arg(o.poly);
    const Witness w(parse_positive_arg("n", o.n), parse_positive_arg("d", o.d));
    CheckResult r = check_witness(f, w, parse_variant_arg(o.variant), o.seed);
    if (auto* fail = std::get_if<FailureReason>(&r)) {
        print_failure(out, o, *fail);
        return kExitFailed;
    }
    return emit_certificate(out, o, std::get<Certificate>(r));
}

int cmd_search(const Options& o, std::ostream& out)
{
    const Polynomial f = parse_poly_arg(o.poly);
    const SearchBounds b{parse_bound_arg("n-max", o.n_max, 2), parse_bound_arg("d-max", o.d_max, 1),
                         parse_variant_arg(o.variant)};
    std::optional<Certificate> c;
    try {
        c = find_witness(f, b, o.seed);
    } catch (const HypothesisError& e) {
        print_failure(out, o, e.reason());
        return kExitFailed;
    }
    if (!c) {
        if (o.json)
            out << nlohmann::json{{"ok", false}, {"message", "no witness in bounds"}}.dump(2) << "\n";
        else
            out << "no witness in bounds (n <= " << b.n_max << ", d <= " << b.d_max << ", "
                << to_string(b.variant) << ")\n";
        return kExitFailed;
    }
    return emit_certificate(out, o, *c);
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const Polynomial f = parse_poly_arg(o.poly);
    std::vector<ComparisonRow> rows;
    try {
        rows = compare_criteria(f, parse_bound_arg("n-max", o.n_max, 2), parse_bound_arg("d-max", o.d_max, 1),
                                o.seed);
    } catch (const HypothesisError& e) {
        print_failure(out, o, e.reason());
        return kExitFailed;
    }
    if (o.json)
        out << to_json(rows).dump(2) << "\n";
    else
        out << "polynomial " << to_string(f) << "\n" << format_table(rows);
    const bool any = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.certificate.has_value(); });
    return any ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::ifstream in(o.cert_file);
    if (!in)
        throw UsageError("cannot read " + o.cert_file);
    Certificate c = [&] {
        try {
            return certificate_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("malformed certificate JSON: ") + e.what());
        } catch (const CertificateFormatError& e) {
            throw UsageError(std::string("malformed certificate: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("malformed certificate: ") + e.what());
        }
    }();
    const bool ok = verify_certificate(c, o.seed);
    if (o.json)
        out << nlohmann::json{{"valid", ok}, {"variant", std::string(to_string(c.variant))},
                              {"primality_certainty", std::string(to_string(c.primality_certainty))}}
                   .dump(2)
            << "\n";
    else
        out << (ok ? "certificate valid: " + to_string(c.poly) + " is irreducible (" +
                         std::string(to_string(c.variant)) + ", " + std::string(to_string(c.primality_certainty)) +
                         ")"
                   : std::string("certificate INVALID"))
            << "\n";
    return ok ? kExitOk : kExitFailed;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const Polynomial f = parse_poly_arg(o.poly);
    Factorization fac;
    try {
        fac = kronecker_factor(f);
    } catch (const OracleOutOfRange& e) {
        if (o.json)
            out << nlohmann::json{{"ok", false}, {"message", e.what()}}.dump(2) << "\n";
        else
            out << e.what() << "\n";
        return kExitFailed;
    }
    const bool irreducible = fac.content == 1 && fac.factors.size() == 1;
    if (o.json) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& g : fac.factors)
            factors.push_back(to_string(g));
        out << nlohmann::json{{"content", fac.content.get_str()}, {"factors", factors}, {"irreducible", irreducible}}
                   .dump(2)
            << "\n";
    } else {
        out << "content     " << fac.content.get_str() << "\nfactors\n";
        for (const auto& g : fac.factors)
            out << "  " << to_string(g) << "\n";
        out << "irreducible " << (irreducible ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out)
{
    const auto fam = family_from_string(o.family);
    if (!fam)
        throw UsageError("unknown family '" + o.family + "' (expected X, Y, Z or Zd)");

    FamilyInstance inst = [&] {
        if (*fam == Family::Z)
            return paper_Z();
        if (o.p.empty() || o.k.empty() || o.m.empty() || o.fd.empty())
            throw UsageError("family " + o.family + " needs --p, --k, --m and --d");
        int sign = 0;
        if (o.sign == "+" || o.sign == "1" || o.sign == "+1")
            sign = 1;
        else if (o.sign == "-" || o.sign == "-1")
            sign = -1;
        else
            throw UsageError("--sign must be + or -");
        const Integer p = parse_int_arg("p", o.p);
        const Integer d = parse_int_arg("d", o.fd);
        const unsigned long k = parse_small_arg("k", o.k);
        const unsigned long m = parse_small_arg("m", o.m);
        try {
            switch (*fam) {
            case Family::X: return gen_family_X(p, k, m, d, sign);
            case Family::Y: return gen_family_Y(p, k, m, d, sign);
            default: return gen_family_Zd(p, k, m, d, sign);
            }
        } catch (const FamilyParameterError& e) {
            throw UsageError(e.what());
        }
    }();

    if (o.json) {
        out << to_json(inst).dump(2) << "\n";
    } else {
        out << to_string(inst.poly) << "\n"
            << "witness n = " << inst.witness.n().get_str() << ", d = " << inst.witness.d().get_str()
            << "; |f(n)|/d = " << inst.params.p.get_str() << "^" << inst.quotient_exponent << "\n";
    }
    return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out)
{
    const Polynomial f = parse_poly_arg(o.poly);
    if (f.is_zero())
        throw UsageError("the zero polynomial has no content");
    const Integer c = content(f);
    const Polynomial g = primitive_part(f);
    if (o.json)
        out << nlohmann::json{{"content", c.get_str()}, {"primitive_part", to_string(g)}, {"coeffs", poly_to_json(g)}}
                   .dump(2)
            << "\n";
    else
        out << to_string(g) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Irreducibility certificates for integer polynomials", "irrcert"};
    app.require_subcommand(1, 1);
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_option("--seed", o.seed, "Seed for random primality bases");

    auto* check = app.add_subcommand("check", "Check a witness (n, d) and emit a certificate");
    check->add_option("poly", o.poly, "Polynomial, e.g. \"72*x^18 - x + 9\"")->required();
    check->add_option("--n", o.n, "Evaluation point n")->required();
    check->add_option("--d", o.d, "Divisor d")->required();
    check->add_option("--variant", o.variant, "1, A or B");
    check->add_option("--out", o.out_file, "Write the JSON certificate to this file");

    auto* search = app.add_subcommand("search", "Find the smallest witness in a box");
    search->add_option("poly", o.poly, "Polynomial")->required();
    search->add_option("--n-max", o.n_max, "Largest n");
    search->add_option("--d-max", o.d_max, "Largest d");
    search->add_option("--variant", o.variant, "1, A or B");
    search->add_option("--out", o.out_file, "Write the JSON certificate to this file");

    auto* compare = app.add_subcommand("compare", "Smallest witness for each criterion variant");
    compare->add_option("poly", o.poly, "Polynomial")->required();
    compare->add_option("--n-max", o.n_max, "Largest n");
    compare->add_option("--d-max", o.d_max, "Largest d");

    auto* verify = app.add_subcommand("verify", "Replay a JSON certificate");
    verify->add_option("certificate", o.cert_file, "Certificate file")->required();

    auto* oracle = app.add_subcommand("oracle", "Factor a small polynomial by Kronecker's method");
    oracle->add_option("poly", o.poly, "Polynomial")->required();

    auto* family = app.add_subcommand("family", "Generate an instance of a parametric family");
    family->add_option("name", o.family, "X, Y, Z or Zd")->required();
    family->add_option("--p", o.p, "Prime p");
    family->add_option("--k", o.k, "Exponent k");
    family->add_option("--m", o.m, "Degree m");
    family->add_option("--d", o.fd, "Divisor d");
    family->add_option("--sign", o.sign, "Sign of the leading term, + or -");

    auto* normalize = app.add_subcommand("normalize", "Print the primitive part");
    normalize->add_option("poly", o.poly, "Polynomial")->required();

    for (auto* sub : {check, search, compare, verify, oracle, family, normalize})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(o, out);
        if (search->parsed())
            return cmd_search(o, out);
        if (compare->parsed())
            return cmd_compare(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (oracle->parsed())
            return cmd_oracle(o, out);
        if (family->parsed())
            return cmd_family(o, out);
        return cmd_normalize(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace irrcert::cli
