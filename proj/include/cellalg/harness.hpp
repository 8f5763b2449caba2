#pragma once

// End-to-end verification of one scheme or the whole corpus: discriminant
// identity, Wedderburn data and Frame number, and for every tested prime the
// radical dimension against Frame-number divisibility.

#include "cellalg/corpus.hpp"
#include "cellalg/radical.hpp"
#include "cellalg/wedderburn.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cellalg {

inline constexpr int report_schema_version = 1;

struct PrimeRow {
    std::uint64_t p = 0;
    std::optional<bool> p_divides_frame; ///< empty when the Frame number is unknown
    std::size_t rad_dim = 0;
    bool semisimple = false;
    std::optional<bool> witness_ok; ///< set when p divides a cell size
    std::optional<bool> oracle_ok;  ///< set when p^r is within the oracle budget
    friend bool operator==(const PrimeRow&, const PrimeRow&) = default;
};

struct VerificationReport {
    std::string scheme_id;
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<std::uint64_t> cells;
    BigInt prod_r = 0;
    BigInt prod_x = 0;
    std::optional<BigInt> disc;
    int disc_sign = 0;
    std::vector<WedderburnBlock> blocks;
    std::optional<BigInt> frame;
    std::optional<BigRat> frame_quotient;
    std::vector<PrimeRow> rows;
    std::map<std::string, bool> checks;
    std::vector<std::string> errors;
    bool pass = false;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint64_t prime_bound = 50;
    std::uint64_t oracle_budget = 1u << 16;
    double tol = 1e-8;
};

/// Prime divisors of prod |R|, read off the individual |R|.
inline std::vector<std::uint64_t> candidate_primes(const CoherentConfiguration& cc)
{
    std::vector<std::uint64_t> out;
    for (const auto& st : cc.stats())
        for (auto p : prime_divisors(st.size))
            out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::uint64_t> tested_primes(const CoherentConfiguration& cc, std::uint64_t prime_bound)
{
    auto out = candidate_primes(cc);
    for (std::uint64_t p : {2, 3, 5, 7})
        out.push_back(p);
    for (auto p : primes_up_to(prime_bound))
        out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Main theorem row check, plus: primes not dividing prod |R| must give a
/// semisimple algebra, and optional sub-checks must not have failed.
inline bool row_passes(const PrimeRow& row, const BigInt& prod_r)
{
    if (!row.p_divides_frame || *row.p_divides_frame == row.semisimple)
        return false;
    if (prod_r % row.p != 0 && !row.semisimple)
        return false;
    return row.witness_ok.value_or(true) && row.oracle_ok.value_or(true);
}

inline bool report_passes(const VerificationReport& rep)
{
    if (!rep.errors.empty())
        return false;
    for (const auto& [name, ok] : rep.checks)
        if (!ok)
            return false;
    return std::all_of(rep.rows.begin(), rep.rows.end(), [&](const PrimeRow& row) { return row_passes(row, rep.prod_r); });
}

inline PrimeRow verify_prime(const CoherentConfiguration& cc, std::uint64_t p, const std::optional<BigInt>& frame,
                             const VerifyOptions& opt, std::vector<std::string>& errors)
{
    PrimeRow row;
    row.p = p;
    if (frame)
        row.p_divides_frame = (*frame % p) == 0;
    const ModularAlgebra alg(cc, p);
    RadicalResult rad;
    try {
        rad = radical_chain(alg);
    } catch (const std::exception& e) {
        errors.push_back("p=" + std::to_string(p) + " radical: " + e.what());
        row.p_divides_frame.reset();
        return row;
    }
    row.rad_dim = rad.dimension;
    row.semisimple = rad.dimension == 0;

    if (product_cell_sizes(cc) % p == 0) {
        try {
            const auto w = central_nilpotent_witness(cc, p);
            row.witness_ok = w && in_span(alg.field(), rad.basis, w->element);
        } catch (const std::exception& e) {
            errors.push_back("p=" + std::to_string(p) + " witness: " + e.what());
            row.witness_ok = false;
        }
    }
    if (enumeration_size(p, cc.rank(), opt.oracle_budget) <= opt.oracle_budget) {
        try {
            row.oracle_ok = radical_oracle(alg, opt.oracle_budget).basis == rad.basis;
        } catch (const std::exception& e) {
            errors.push_back("p=" + std::to_string(p) + " oracle: " + e.what());
            row.oracle_ok = false;
        }
    }
    return row;
}

inline VerificationReport verify_scheme(const std::string& id, const CoherentConfiguration& cc,
                                        const VerifyOptions& opt = {})
{
    VerificationReport rep;
    rep.scheme_id = id;
    rep.n = cc.size();
    rep.r = cc.rank();
    rep.cells = cc.cell_sizes();
    rep.prod_r = product_relation_sizes(cc);
    rep.prod_x = product_cell_sizes(cc);

    try {
        const auto d = discriminant_standard(cc);
        rep.disc = d.value;
        rep.disc_sign = d.sign;
        rep.checks["discriminant"] = true;
    } catch (const std::exception& e) {
        rep.checks["discriminant"] = false;
        rep.errors.push_back(std::string("discriminant: ") + e.what());
    }

    try {
        DecomposeOptions dopt;
        dopt.tol = opt.tol;
        const auto wd = decompose(cc, opt.seed, dopt);
        rep.blocks = wd.blocks;
        rep.checks["wedderburn"] = true;
        const auto fr = frame_number(cc, wd);
        rep.frame = fr.frame;
        rep.frame_quotient = fr.frame_quotient;
        rep.checks["frame_quotient_integral"] = fr.quotient_integral;
        if (!fr.quotient_integral)
            rep.errors.push_back("finding: Frame quotient " + to_string(fr.frame_quotient) + " is not an integer");
    } catch (const std::exception& e) {
        rep.checks["wedderburn"] = false;
        rep.errors.push_back(std::string("wedderburn: ") + e.what());
    }

    for (auto p : tested_primes(cc, opt.prime_bound))
        rep.rows.push_back(verify_prime(cc, p, rep.frame, opt, rep.errors));

    rep.checks["main_theorem"] = std::all_of(rep.rows.begin(), rep.rows.end(),
                                             [&](const PrimeRow& row) { return row_passes(row, rep.prod_r); });
    rep.pass = report_passes(rep);
    return rep;
}

/// Same as above for a corpus spec; a spec that fails to build or certify
/// yields a failed report instead of an exception.
inline VerificationReport verify_spec(const CorpusEntry& entry, VerifyOptions opt)
{
    opt.seed = entry.seed;
    try {
        return verify_scheme(entry.id, CoherentConfiguration(build_scheme(entry.id)), opt);
    } catch (const std::exception& e) {
        VerificationReport rep;
        rep.scheme_id = entry.id;
        rep.errors.push_back(std::string("construction: ") + e.what());
        return rep;
    }
}

struct CorpusSummary {
    std::size_t schemes = 0;
    std::size_t schemes_passed = 0;
    std::size_t rows = 0;
    std::size_t rows_passed = 0;
    std::size_t oracle_rows = 0;
    std::size_t witness_rows = 0;
    std::size_t discriminant_checks = 0;
    std::size_t failed() const noexcept { return rows - rows_passed; }
};

inline CorpusSummary summarize(const std::vector<VerificationReport>& reports)
{
    CorpusSummary s;
    for (const auto& rep : reports) {
        ++s.schemes;
        s.schemes_passed += rep.pass;
        s.discriminant_checks += rep.disc.has_value();
        for (const auto& row : rep.rows) {
            ++s.rows;
            s.rows_passed += row_passes(row, rep.prod_r);
            s.oracle_rows += row.oracle_ok.has_value();
            s.witness_rows += row.witness_ok.has_value();
        }
    }
    return s;
}

/// Runs the registered corpus on `jobs` threads; reports come back sorted
/// by scheme id regardless of scheduling.
inline std::vector<VerificationReport> verify_corpus(const CorpusOptions& copt, const VerifyOptions& vopt = {},
                                                     unsigned jobs = 1)
{
    const auto entries = corpus(copt);
    std::vector<VerificationReport> reports(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++)
            reports[i] = verify_spec(entries[i], vopt);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.scheme_id < b.scheme_id; });
    return reports;
}

// JSON-lines serialization. Arbitrary-precision values are decimal strings.

inline nlohmann::ordered_json to_json(const VerificationReport& rep)
{
    using nlohmann::ordered_json;
    auto opt_str = [](const auto& v) -> ordered_json {
        if (!v)
            return nullptr;
        return to_string(*v);
    };
    auto opt_bool = [](const std::optional<bool>& v) -> ordered_json {
        if (!v)
            return nullptr;
        return *v;
    };
    ordered_json j;
    j["v"] = report_schema_version;
    j["scheme_id"] = rep.scheme_id;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["cells"] = rep.cells;
    j["prod_R"] = to_string(rep.prod_r);
    j["prod_X"] = to_string(rep.prod_x);
    j["disc"] = opt_str(rep.disc);
    j["disc_sign"] = rep.disc_sign;
    j["blocks"] = ordered_json::array();
    for (const auto& b : rep.blocks)
        j["blocks"].push_back({b.degree, b.multiplicity});
    j["frame"] = opt_str(rep.frame);
    j["frame_quotient"] = opt_str(rep.frame_quotient);
    j["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json jr;
        jr["p"] = row.p;
        jr["p_divides_frame"] = opt_bool(row.p_divides_frame);
        jr["rad_dim"] = row.rad_dim;
        jr["semisimple"] = row.semisimple;
        jr["witness_ok"] = opt_bool(row.witness_ok);
        jr["oracle_ok"] = opt_bool(row.oracle_ok);
        j["rows"].push_back(std::move(jr));
    }
    j["checks"] = ordered_json::object();
    for (const auto& [name, ok] : rep.checks)
        j["checks"][name] = ok;
    j["errors"] = rep.errors;
    j["pass"] = rep.pass;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j)
{
    if (j.at("v").get<int>() != report_schema_version)
        throw std::invalid_argument("unsupported report schema version");
    auto opt_bool = [](const nlohmann::json& v) -> std::optional<bool> {
        if (v.is_null())
            return std::nullopt;
        return v.get<bool>();
    };
    VerificationReport rep;
    rep.scheme_id = j.at("scheme_id").get<std::string>();
    rep.n = j.at("n").get<std::size_t>();
    rep.r = j.at("r").get<std::size_t>();
    rep.cells = j.at("cells").get<std::vector<std::uint64_t>>();
    rep.prod_r = BigInt(j.at("prod_R").get<std::string>());
    rep.prod_x = BigInt(j.at("prod_X").get<std::string>());
    if (!j.at("disc").is_null())
        rep.disc = BigInt(j.at("disc").get<std::string>());
    rep.disc_sign = j.at("disc_sign").get<int>();
    for (const auto& b : j.at("blocks"))
        rep.blocks.push_back({b.at(0).get<std::uint64_t>(), b.at(1).get<std::uint64_t>()});
    if (!j.at("frame").is_null())
        rep.frame = BigInt(j.at("frame").get<std::string>());
    if (!j.at("frame_quotient").is_null())
        rep.frame_quotient = parse_rational(j.at("frame_quotient").get<std::string>());
    for (const auto& jr : j.at("rows")) {
        PrimeRow row;
        row.p = jr.at("p").get<std::uint64_t>();
        row.p_divides_frame = opt_bool(jr.at("p_divides_frame"));
        row.rad_dim = jr.at("rad_dim").get<std::size_t>();
        row.semisimple = jr.at("semisimple").get<bool>();
        row.witness_ok = opt_bool(jr.at("witness_ok"));
        row.oracle_ok = opt_bool(jr.at("oracle_ok"));
        rep.rows.push_back(row);
    }
    for (const auto& [name, ok] : j.at("checks").items())
        rep.checks[name] = ok.get<bool>();
    rep.errors = j.at("errors").get<std::vector<std::string>>();
    rep.pass = j.at("pass").get<bool>();
    return rep;
}

inline std::string emit_json_line(const VerificationReport& rep) { return to_json(rep).dump() + "\n"; }

inline VerificationReport parse_json_line(const std::string& line) { return report_from_json(nlohmann::json::parse(line)); }

} // namespace cellalg
