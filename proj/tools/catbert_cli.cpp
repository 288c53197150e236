// Command-line front end: sequence generation, Hankel matrices, factorized
// inversion with elimination cross-check, identity verification suites,
// determinants, the Catbert specialization, and benchmarks.
//
// Exit codes: 0 success / all verified, 1 verification violation, 2 usage error.

#include "catbert/bench.hpp"
#include "catbert/catbert.hpp"
#include "catbert/factorization.hpp"
#include "catbert/grid.hpp"
#include "catbert/hankel.hpp"
#include "catbert/numbertheory.hpp"
#include "catbert/oeis_fetch.hpp"
#include "catbert/sequences.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using catbert::ExactMatrix;
using catbert::GCParams;
using catbert::Int;
using catbert::Rational;
using catbert::Report;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void print_matrix(const ExactMatrix& m, const std::string& format) {
    if (format == "json")
        std::cout << catbert::matrix_to_json(m).dump() << "\n";
    else if (format == "csv")
        std::cout << catbert::matrix_to_csv(m);
    else
        std::cout << catbert::matrix_to_plain(m);
}

int report_outcome(const std::vector<Report>& reports, const std::string& format) {
    bool all_ok = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            all_ok = all_ok && r.ok();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.identity << " " << r.params.dump() << " size=" << r.size << ": "
                      << (r.ok() ? "ok" : std::to_string(r.violations.size()) + " violation(s)")
                      << "\n";
            for (const auto& v : r.violations) {
                std::cout << "  at (";
                for (std::size_t i = 0; i < v.indices.size(); ++i)
                    std::cout << (i ? "," : "") << v.indices[i];
                std::cout << "): " << v.lhs << " != " << v.rhs << "\n";
            }
            all_ok = all_ok && r.ok();
        }
    }
    return all_ok ? kExitOk : kExitViolation;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hankel matrices of reciprocal generalized Catalan numbers: "
                 "construction, factorized inversion, and identity verification"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();

    GCParams params{2, -3, 1};
    long n = 4;
    long count = 10;

    // --- seq ---
    auto* seq = app.add_subcommand("seq", "Print the sequence g^(q/p)");
    seq->add_option("--p", params.p, "p >= 2")->required();
    seq->add_option("--q", params.q, "q, nonzero, coprime to p")->required();
    seq->add_option("--count", count, "number of terms")->capture_default_str();

    // --- hankel ---
    auto* hankel = app.add_subcommand("hankel", "Print the Hankel matrix G^(a,q/p)(n)");
    hankel->add_option("--p", params.p)->required();
    hankel->add_option("--q", params.q)->required();
    hankel->add_option("--a", params.a)->capture_default_str();
    hankel->add_option("--n", n, "matrix size")->required();

    // --- invert ---
    bool use_oracle = false;
    auto* invert = app.add_subcommand("invert", "Print G(n)^-1 via the factorization");
    invert->add_option("--p", params.p)->required();
    invert->add_option("--q", params.q)->required();
    invert->add_option("--a", params.a)->capture_default_str();
    invert->add_option("--n", n)->required();
    invert->add_flag("--oracle", use_oracle, "cross-check against elimination");

    // --- det ---
    bool det_scaled = false;
    auto* det = app.add_subcommand("det", "Determinant of G(n)^-1 by formula");
    det->add_option("--p", params.p)->required();
    det->add_option("--q", params.q)->required();
    det->add_option("--a", params.a)->capture_default_str();
    det->add_option("--n", n)->required();
    det->add_flag("--oracle", use_oracle, "cross-check against elimination determinant");
    det->add_flag("--scaled", det_scaled, "also print det((G(n)/q)^-1)");

    // --- verify ---
    std::vector<std::string> suites{"all"};
    std::vector<long> p_list{2, 3, 5};
    std::vector<long> q_list{1, -1, 2, -2, 3, -3, 7, -7};
    std::vector<long> a_list{0, 1, 2};
    long n_max = 12;
    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--suite", suites,
                       "suites: three-term orthogonality norm nl-eq-mk integrality lucas "
                       "certificates all")
        ->capture_default_str();
    verify->add_option("--p-list", p_list, "grid p values")->capture_default_str();
    verify->add_option("--q-list", q_list, "grid q values")->capture_default_str();
    verify->add_option("--a-list", a_list, "grid a values")->capture_default_str();
    verify->add_option("--n-max", n_max, "maximum size")->capture_default_str();

    // --- catbert ---
    bool cb_matrix = false, cb_inverse = false, cb_dets = false, cb_oeis = false,
         cb_fetch = false;
    std::string bfile_path = "data/b296056.txt";
    std::string sequence_id = "A296056";
    int timeout_s = 10;
    auto* cb = app.add_subcommand("catbert", "The Catbert matrix (reciprocal Catalans)");
    cb->add_option("--n", n, "size")->capture_default_str();
    cb->add_flag("--matrix", cb_matrix, "print C(n)");
    cb->add_flag("--inverse", cb_inverse, "print C(n)^-1");
    cb->add_flag("--dets", cb_dets, "print det(C(m)^-1) for m = 0..n");
    cb->add_flag("--oeis-check", cb_oeis, "compare determinant sequence to b-file");
    cb->add_option("--bfile", bfile_path, "b-file snapshot path")->capture_default_str();
    cb->add_option("--sequence-id", sequence_id)->capture_default_str();
    cb->add_flag("--fetch", cb_fetch, "fetch the live b-file instead of the snapshot");
    cb->add_option("--timeout", timeout_s, "fetch timeout, seconds")->capture_default_str();

    // --- bench ---
    std::vector<long> n_list{8, 16, 24, 32};
    long reps = 3;
    auto* bench = app.add_subcommand("bench", "Factorized vs elimination inverse timings");
    bench->add_option("--p", params.p)->capture_default_str();
    bench->add_option("--q", params.q)->capture_default_str();
    bench->add_option("--a", params.a)->capture_default_str();
    bench->add_option("--n-list", n_list, "sizes, ascending")->capture_default_str();
    bench->add_option("--reps", reps, "repetitions per timing")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (seq->parsed()) {
            const catbert::GCSequence s = catbert::gen_catalan(params, count);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& t : s.terms) arr.push_back(t.get_str());
                std::cout << arr.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < s.terms.size(); ++i)
                    std::cout << (i ? " " : "") << s.terms[i].get_str();
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (hankel->parsed()) {
            print_matrix(catbert::hankel_G(params, n), format);
            return kExitOk;
        }

        if (invert->parsed()) {
            const ExactMatrix inv = catbert::inverse_via_LMK(params, n);
            if (use_oracle) {
                const ExactMatrix oracle = catbert::invert_oracle(catbert::hankel_G(params, n));
                if (inv != oracle) {
                    std::cerr << "factorized inverse disagrees with elimination oracle\n";
                    return kExitViolation;
                }
            }
            print_matrix(inv, format);
            return kExitOk;
        }

        if (det->parsed()) {
            const Rational d = catbert::det_inverse_formula(params, n);
            nlohmann::json out = {{"det_inverse", d.str()}};
            if (det_scaled)
                out["det_scaled_inverse"] = catbert::det_scaled_inverse_formula(params, n).str();
            if (use_oracle) {
                const Rational oracle =
                    catbert::det_oracle(catbert::invert_oracle(catbert::hankel_G(params, n)));
                out["oracle"] = oracle.str();
                if (oracle != d) {
                    std::cerr << "formula determinant " << d.str()
                              << " disagrees with oracle " << oracle.str() << "\n";
                    return kExitViolation;
                }
            }
            if (format == "json")
                std::cout << out.dump() << "\n";
            else
                for (auto& [k, v] : out.items())
                    std::cout << k << " = " << v.get<std::string>() << "\n";
            return kExitOk;
        }

        if (verify->parsed()) {
            for (long p : p_list)
                if (p < 2) throw std::invalid_argument("p must be an integer >= 2");
            for (long q : q_list)
                if (q == 0) throw std::invalid_argument("q must be nonzero and coprime to p");
            for (long a : a_list)
                if (a < 0) throw std::invalid_argument("a must be a non-negative integer");
            const std::set<std::string> chosen(suites.begin(), suites.end());
            const bool all = chosen.count("all") > 0;
            auto want = [&](const std::string& s) { return all || chosen.count(s) > 0; };
            const std::vector<GCParams> grid = catbert::parameter_grid(p_list, q_list, a_list);
            std::vector<Report> reports;
            for (const GCParams& g : grid) {
                if (want("three-term")) reports.push_back(catbert::verify_three_term(g, n_max));
                if (want("orthogonality"))
                    reports.push_back(catbert::verify_orthogonality(g, n_max));
                if (want("norm")) reports.push_back(catbert::verify_norm(g, n_max));
                if (want("nl-eq-mk")) reports.push_back(catbert::verify_NL_eq_MK(g, n_max));
                if (want("integrality")) {
                    reports.push_back(catbert::scaled_inverse_integrality(g, std::min(n_max, 10L)));
                    if (std::abs(g.q) <= 2)
                        reports.push_back(catbert::main_integrality(g, std::min(n_max, 10L)));
                }
            }
            if (want("lucas")) {
                for (long p : {2L, 3L, 5L}) reports.push_back(catbert::lucas_scan(p, 200));
                for (auto [q, p] : {std::pair<long, long>{3, 2}, {2, 3}, {5, 2}, {3, 4}})
                    reports.push_back(catbert::lucas_var1_scan(q, p, 120, 60));
                reports.push_back(catbert::lucas_var2_scan(120, 120));
                for (auto [p, q] : {std::pair<long, long>{2, -3}, {3, 2}, {5, -2}})
                    reports.push_back(catbert::lucas_var3_scan(p, q, -50, 50, 60));
            }
            if (want("certificates")) {
                auto summarize = [&](const GCParams& g, long size, long target) {
                    Report r;
                    r.identity = "divisibility-certificates(prime " + std::to_string(target) + ")";
                    r.params = g.to_json();
                    r.size = size;
                    for (const auto& c : catbert::build_divisibility_certificate(g, size, target))
                        if (!c.verified)
                            r.add_violation({c.entry_n, c.entry_k, c.summand_i},
                                            c.witnessed_value.str(),
                                            "0 mod " + std::to_string(target));
                    return r;
                };
                const GCParams cbp = catbert::catbert_params();
                reports.push_back(summarize(cbp, 8, 2));
                reports.push_back(summarize(cbp, 8, 3));
                for (const GCParams& g : grid)
                    if (std::abs(g.q) == 2) reports.push_back(summarize(g, 8, 2));
            }
            return report_outcome(reports, format);
        }

        if (cb->parsed()) {
            if (!(cb_matrix || cb_inverse || cb_dets || cb_oeis)) cb_matrix = cb_inverse = true;
            if (cb_matrix) print_matrix(catbert::catbert_matrix(n).matrix, format);
            if (cb_inverse) print_matrix(catbert::catbert_inverse(n), format);
            std::vector<Int> dets;
            if (cb_dets || cb_oeis)
                for (long m = 0; m <= n; ++m)
                    dets.push_back(catbert::catbert_det_formula(m).to_integer());
            if (cb_dets) {
                for (std::size_t i = 0; i < dets.size(); ++i)
                    std::cout << (i ? " " : "") << dets[i].get_str();
                std::cout << "\n";
            }
            if (cb_oeis) {
                std::string text;
                if (cb_fetch) {
                    const char* env = std::getenv("OEIS_BASE_URL");
                    const std::string base = env ? env : "http://oeis.org";
                    text = catbert::fetch_bfile(sequence_id, base, timeout_s);
                } else {
                    text = slurp(bfile_path);
                }
                const catbert::BFile bf = catbert::parse_bfile(text, sequence_id);
                const catbert::OeisComparison cmp = catbert::oeis_compare(dets, bf);
                std::cout << "oeis " << sequence_id << ": offset=" << cmp.offset
                          << " matched=" << cmp.match_len << "/" << dets.size()
                          << (cmp.full_match ? " (full prefix match)" : "") << "\n";
                if (cmp.first_mismatch) {
                    std::cout << "first mismatch: " << cmp.first_mismatch->second << "\n";
                    return kExitViolation;
                }
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            const auto records = catbert::run_bench(params, n_list, reps);
            if (format == "json")
                std::cout << catbert::bench_to_json(records).dump(2) << "\n";
            else
                std::cout << catbert::bench_to_csv(records);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
