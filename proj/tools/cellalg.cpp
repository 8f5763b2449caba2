// cellalg: generate, inspect and verify coherent configurations.
//
// Exit codes: 0 success, 1 a verification row failed, 2 usage or input error.

#include <cellalg.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace cellalg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string gen_spec(const std::string& family, const std::vector<std::string>& params)
{
    if (family == "direct-sum") {
        if (params.size() != 2)
            throw UsageError("direct-sum takes two scheme specs");
        return "direct-sum(" + params[0] + "," + params[1] + ")";
    }
    std::string spec = family;
    for (const auto& p : params)
        spec += ":" + p;
    return spec;
}

CoherentConfiguration load(const std::string& path, bool one_based)
{
    if (!std::filesystem::is_regular_file(path))
        throw UsageError("cannot read " + path);
    return certify(read_scheme_file(path, one_based));
}

std::uint64_t tensor_digest(const CoherentConfiguration& cc)
{
    // FNV-1a over (R, S, T, count) of the nonzero intersection numbers.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    const std::size_t r = cc.rank();
    for (Relation a = 0; a < r; ++a)
        for (Relation b = 0; b < r; ++b)
            for (const auto& term : cc.tensor().terms(a, b)) {
                mix(a);
                mix(b);
                mix(term.t);
                mix(term.count);
            }
    return h;
}

std::string blocks_text(const std::vector<WedderburnBlock>& blocks)
{
    std::string s = "[";
    for (std::size_t i = 0; i < blocks.size(); ++i)
        s += (i ? ",(" : "(") + std::to_string(blocks[i].degree) + "," + std::to_string(blocks[i].multiplicity) + ")";
    return s + "]";
}

std::string opt_bool_text(const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; }

void print_report(std::ostream& os, const VerificationReport& rep)
{
    os << rep.scheme_id << ": n=" << rep.n << " r=" << rep.r << " cells=";
    for (std::size_t i = 0; i < rep.cells.size(); ++i)
        os << (i ? "," : "") << rep.cells[i];
    os << " prod_R=" << rep.prod_r << " prod_X=" << rep.prod_x << '\n';
    os << "  disc=" << (rep.disc ? to_string(*rep.disc) : "?") << " blocks=" << blocks_text(rep.blocks)
       << " F=" << (rep.frame ? to_string(*rep.frame) : "?")
       << " N=" << (rep.frame_quotient ? to_string(*rep.frame_quotient) : "?") << '\n';
    for (const auto& row : rep.rows)
        os << "  p=" << std::setw(3) << row.p << " p|F=" << opt_bool_text(row.p_divides_frame)
           << " rad_dim=" << row.rad_dim << " semisimple=" << (row.semisimple ? "true" : "false")
           << " witness=" << opt_bool_text(row.witness_ok) << " oracle=" << opt_bool_text(row.oracle_ok)
           << (row_passes(row, rep.prod_r) ? "" : "  FAIL") << '\n';
    for (const auto& e : rep.errors)
        os << "  error: " << e << '\n';
    os << "  " << (rep.pass ? "PASS" : "FAIL") << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adjacency algebras of coherent configurations: discriminant, Frame number, modular radical"};
    app.require_subcommand(1);
    bool one_based = false;
    app.add_flag("--one-based", one_based, "Input colors start at 1");

    auto* gen = app.add_subcommand("gen", "Print a scheme file for a named family");
    std::string family;
    std::vector<std::string> params;
    gen->add_option("family", family,
                    "rank2 discrete thin-cyclic thin-abelian thin-sym thin-dihedral thin-quaternion schurian "
                    "hamming johnson direct-sum")
        ->required();
    gen->add_option("params", params, "Family parameters (direct-sum: two specs such as rank2:3)");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the axioms and print the canonical scheme file");
    validate->add_option("file", file)->required();

    auto* info = app.add_subcommand("info", "Print sizes, cells, flags, relation table and tensor digest");
    info->add_option("file", file)->required();

    std::uint64_t seed = 1;
    auto* frame = app.add_subcommand("frame", "Print Wedderburn blocks, Frame number and Frame quotient");
    frame->add_option("file", file)->required();
    frame->add_option("--seed", seed, "Seed for the central element")->capture_default_str();

    std::uint64_t p = 0;
    auto* radical = app.add_subcommand("radical", "Print the radical dimension over F_p");
    radical->add_option("file", file)->required();
    radical->add_option("--p", p, "Prime")->required();

    bool use_corpus = false, json = false;
    unsigned jobs = 1;
    VerifyOptions vopt;
    CorpusOptions copt;
    auto* verify = app.add_subcommand("verify", "Verify one scheme file or the registered corpus");
    verify->add_option("file", file);
    verify->add_flag("--corpus", use_corpus, "Verify the registered corpus");
    verify->add_flag("--json", json, "Emit JSON lines");
    verify->add_option("--seed", seed, "Seed for the central element")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads for --corpus")->capture_default_str();
    verify->add_option("--prime-bound", vopt.prime_bound, "Also test every prime up to this bound")
        ->capture_default_str();
    verify->add_option("--oracle-budget", vopt.oracle_budget, "Largest p^r for the brute-force oracle")
        ->capture_default_str();
    verify->add_option("--filter", copt.filter, "Regex on corpus ids");
    verify->add_option("--max-points", copt.max_points, "Skip corpus schemes with more points")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            std::cout << format_scheme(build_scheme(gen_spec(family, params)));
            return exit_ok;
        }
        if (*validate) {
            std::cout << format_scheme(load(file, one_based).scheme());
            return exit_ok;
        }
        if (*info) {
            const auto cc = load(file, one_based);
            const auto cls = classify(cc.scheme(), cc.tensor());
            std::cout << "n=" << cc.size() << " r=" << cc.rank() << " cells=";
            const auto cells = cc.cell_sizes();
            for (std::size_t i = 0; i < cells.size(); ++i)
                std::cout << (i ? "," : "") << cells[i];
            std::cout << "\nhomogeneous=" << std::boolalpha << cls.homogeneous << " commutative=" << cls.commutative
                      << " symmetric=" << cls.symmetric << '\n';
            std::cout << "R  |R|  d_out  d_in  fiber  transpose\n";
            for (Relation rel = 0; rel < cc.rank(); ++rel) {
                const auto& st = cc.stats()[rel];
                std::cout << rel << "  " << st.size << "  " << st.d_out << "  " << st.d_in << "  (" << st.source << ","
                          << st.target << ")  " << cc.scheme().transpose_of(rel) << '\n';
            }
            std::ostringstream digest;
            digest << std::hex << std::setw(16) << std::setfill('0') << tensor_digest(cc);
            std::cout << "tensor_digest=" << digest.str() << '\n';
            return exit_ok;
        }
        if (*frame) {
            const auto cc = load(file, one_based);
            const auto wd = decompose(cc, seed);
            const auto fr = frame_number(cc, wd);
            std::cout << "blocks=" << blocks_text(wd.blocks) << " F=" << fr.frame << " N=" << to_string(fr.frame_quotient)
                      << '\n';
            return exit_ok;
        }
        if (*radical) {
            if (!is_prime(p) || p >= 65536)
                throw UsageError("--p must be a prime below 65536, got " + std::to_string(p));
            const auto cc = load(file, one_based);
            const auto rad = radical_chain(ModularAlgebra(cc, p));
            std::cout << "rad_dim=" << rad.dimension << " semisimple=" << (rad.dimension == 0 ? "true" : "false")
                      << '\n';
            return exit_ok;
        }
        if (*verify) {
            if (use_corpus == !file.empty())
                throw UsageError("verify takes either a scheme file or --corpus");
            std::vector<VerificationReport> reports;
            if (use_corpus) {
                copt.seed = seed;
                if (jobs == 0)
                    jobs = std::max(1u, std::thread::hardware_concurrency());
                reports = verify_corpus(copt, vopt, jobs);
            } else {
                vopt.seed = seed;
                reports.push_back(verify_scheme(file, load(file, one_based), vopt));
            }
            bool all = true;
            for (const auto& rep : reports) {
                all = all && rep.pass;
                if (json)
                    std::cout << emit_json_line(rep);
                else
                    print_report(std::cout, rep);
            }
            if (!json && use_corpus) {
                const auto s = summarize(reports);
                std::cout << "schemes " << s.schemes_passed << "/" << s.schemes << " passed, rows " << s.rows_passed
                          << "/" << s.rows << " passed, oracle rows " << s.oracle_rows << ", witness rows "
                          << s.witness_rows << '\n';
            }
            return all ? exit_ok : exit_failed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const SchemeError& e) {
        std::cerr << "invalid scheme: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
