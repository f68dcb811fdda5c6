#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "borelred/borel_action.hpp"
#include "borelred/instance_gen.hpp"
#include "borelred/invariants.hpp"
#include "borelred/json_io.hpp"
#include "borelred/symbolic_order.hpp"
#include "borelred/verify.hpp"

namespace {

using namespace borelred;

std::vector<Rational> parse_scalar_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

BorelMatrix<Rational> load_borel(const std::string& path) {
    const Json j = load_json_file(path);
    const Json& m = j.is_object() && j.contains("r") ? j.at("r") : j;
    try {
        return BorelMatrix<Rational>(matrix_from_json(m));
    } catch (const ShapeError& e) {
        throw ParseError(std::string("matrix in ") + path + " is not upper triangular");
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_gen(int n, std::uint64_t seed, const std::string& mode, int max_coeff) {
    const GenMode m = mode == "free" ? GenMode::Free : GenMode::Fiber;
    emit(quadruple_to_json(generate_instance(n, seed, m, max_coeff)));
    return 0;
}

int cmd_moment(const std::string& path) {
    const Quad q = quadruple_from_json(load_json_file(path));
    const DualBorelMatrix<Rational> mu = moment(q);
    Json out;
    out["n"] = q.dim();
    out["moment"] = matrix_to_json(mu.matrix());
    out["is_zero"] = mu.is_zero();
    out["in_zero_fiber_rss"] = in_zero_fiber_rss(q);
    emit(out);
    return 0;
}

int cmd_solve(const std::string& r_path, const std::string& i_text, const std::string& j_text,
              const std::string& diag_text) {
    const BorelMatrix<Rational> r = load_borel(r_path);
    const Quad q(r,
                 solve_subdiagonal_s(r, parse_scalar_list(i_text), parse_scalar_list(j_text),
                                     parse_scalar_list(diag_text)),
                 parse_scalar_list(i_text), parse_scalar_list(j_text));
    emit(quadruple_to_json(q));
    return 0;
}

int cmd_witness(const std::string& x_text, const std::string& y_text, bool generic,
                std::uint64_t seed, int max_coeff) {
    const TargetPoint t(parse_scalar_list(x_text), parse_scalar_list(y_text));
    emit(quadruple_to_json(surjectivity_witness(
        t, generic ? WitnessMode::Generic : WitnessMode::Diagonal, seed, max_coeff)));
    return 0;
}

int cmd_quotient(const std::string& path) {
    emit(target_to_json(quotient_map(quadruple_from_json(load_json_file(path)))));
    return 0;
}

int cmd_invariants(const std::string& path) {
    emit(invariant_vector_to_json(invariant_vector(quadruple_from_json(load_json_file(path)))));
    return 0;
}

int cmd_limit(const std::string& path) {
    const OrbitLimit ol = orbit_limit(quadruple_from_json(load_json_file(path)));
    Json out;
    out["exponents"] = ol.lambda.exponents;
    out["limit"] = quadruple_to_json(ol.point);
    emit(out);
    return 0;
}

int cmd_diag(const std::string& r_path, const std::string& d_text) {
    const BorelMatrix<Rational> r = load_borel(r_path);
    const std::vector<Rational> d =
        d_text.empty() ? std::vector<Rational>(static_cast<std::size_t>(r.dim()), Rational(1))
                       : parse_scalar_list(d_text);
    const auto [b, b_inv] = diagonalizing_borel(r, d);
    Json out;
    out["b"] = matrix_to_json(b.matrix());
    out["b_inv"] = matrix_to_json(b_inv.matrix());
    out["diagonalized"] = matrix_to_json(b.matrix() * r.matrix() * b_inv.matrix());
    emit(out);
    return 0;
}

int cmd_initial_terms(int n) {
    Json out = Json::array();
    for (int iota = 0; iota < n; ++iota) {
        const SymbolicBilinear f = expand_F(n, iota);
        const auto it = f.terms.find(XYMonomial::xy(n, iota, iota));
        Json e;
        e["iota"] = iota + 1;
        e["initial_monomial"] = initial_term(f).str();
        e["coefficient_is_one"] = it != f.terms.end() && it->second.is_one();
        e["support_size"] = static_cast<int>(f.terms.size());
        out.push_back(std::move(e));
    }
    emit(out);
    return 0;
}

int cmd_regseq(int n) {
    const RegularSequenceReport rep = regular_sequence_certificate(n);
    Json out;
    out["n"] = rep.n;
    out["pass"] = rep.pass;
    Json checks = Json::array();
    for (const auto& chk : rep.initial_terms) {
        Json e;
        e["iota"] = chk.iota + 1;
        e["initial_monomial"] = chk.initial.str();
        e["matches_xy"] = chk.is_x_iota_y_iota;
        e["coefficient_is_one"] = chk.coefficient_is_one;
        e["support_size"] = chk.support_size;
        checks.push_back(std::move(e));
    }
    out["initial_terms"] = std::move(checks);
    out["coprime_pairs_checked"] = rep.coprime_pairs_checked;
    out["pairwise_coprime"] = rep.pairwise_coprime;
    emit(out);
    return rep.pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n_max, long trials, std::uint64_t seed,
               int max_coeff, bool as_json, bool emit_trials) {
    SuiteOptions opt;
    opt.n_max = n_max;
    opt.trials = trials;
    opt.seed = seed;
    opt.max_coeff = max_coeff;
    if (emit_trials) {
        opt.per_trial_sink = [](const Json& j) { std::cout << j.dump() << "\n"; };
    }
    const std::vector<VerificationReport> reports = run_suites(suite, opt);
    bool ok = true;
    if (as_json) {
        if (reports.size() == 1) {
            emit(reports.front().to_json());
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            emit(arr);
        }
    }
    for (const auto& r : reports) {
        if (!as_json) std::cout << r.text() << "\n";
        ok = ok && r.all_pass();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for upper-triangular moment maps: orthogonal idempotents, "
                 "closed-form diagonalization, invariants, orbit-closure limits, and "
                 "initial-term certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    int n = 2;
    std::uint64_t seed = 0;
    long trials = 100;
    int max_coeff = kDefaultMaxCoeff;
    bool as_json = false;
    app.add_option("--n", n, "dimension (or n_max for verify)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--trials", trials, "trials per law and dimension");
    app.add_option("--max-coeff", max_coeff, "bound on sampled numerators and denominators");
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    std::string mode = "fiber";
    gen->add_option("--mode", mode, "fiber | free")->check(CLI::IsMember({"fiber", "free"}));

    std::string q_path;
    auto* moment_cmd = app.add_subcommand("moment", "evaluate the moment map on a quadruple");
    moment_cmd->add_option("quadruple", q_path, "quadruple JSON file")->required();

    auto* solve = app.add_subcommand("solve", "solve the subdiagonal moment equations for s");
    std::string r_path, i_text, j_text, diag_text;
    solve->add_option("--r", r_path, "upper-triangular matrix JSON file")->required();
    solve->add_option("--i", i_text, "vector, comma separated")->required();
    solve->add_option("--j", j_text, "covector, comma separated")->required();
    solve->add_option("--diag-s", diag_text, "diagonal of s, comma separated")->required();

    auto* witness = app.add_subcommand("witness", "zero-fiber point above a target");
    std::string x_text, y_text;
    bool generic = false;
    witness->add_option("--x", x_text, "target x block, comma separated")->required();
    witness->add_option("--y", y_text, "target y block, comma separated")->required();
    witness->add_flag("--generic", generic, "non-diagonal witness");

    auto* quotient = app.add_subcommand("quotient", "quotient map of a fiber point");
    std::string quot_path;
    quotient->add_option("quadruple", quot_path, "quadruple JSON file")->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "invariant values of a quadruple");
    std::string inv_path;
    invariants_cmd->add_option("quadruple", inv_path, "quadruple JSON file")->required();

    auto* limit = app.add_subcommand("limit", "orbit-closure limit of a fiber point");
    std::string limit_path;
    limit->add_option("quadruple", limit_path, "quadruple JSON file")->required();

    auto* diag = app.add_subcommand("diag", "closed-form diagonalizing group element");
    std::string diag_r_path, d_text;
    diag->add_option("--r", diag_r_path, "upper-triangular matrix JSON file")->required();
    diag->add_option("--d", d_text, "free diagonal, comma separated (default all ones)");

    auto* initial = app.add_subcommand("initial-terms", "leading monomials of the diagonal moment functions");
    auto* regseq = app.add_subcommand("regseq", "regular-sequence certificate from initial terms");

    auto* verify = app.add_subcommand("verify", "run a property suite over seeded instances");
    std::string suite;
    bool emit_trials = false;
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("suite", suite, "suite name or \"all\"")
        ->required()
        ->check(CLI::IsMember(allowed));
    verify->add_flag("--emit-trials", emit_trials, "stream one JSON line per trial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, seed, mode, max_coeff);
        if (moment_cmd->parsed()) return cmd_moment(q_path);
        if (solve->parsed()) return cmd_solve(r_path, i_text, j_text, diag_text);
        if (witness->parsed()) return cmd_witness(x_text, y_text, generic, seed, max_coeff);
        if (quotient->parsed()) return cmd_quotient(quot_path);
        if (invariants_cmd->parsed()) return cmd_invariants(inv_path);
        if (limit->parsed()) return cmd_limit(limit_path);
        if (diag->parsed()) return cmd_diag(diag_r_path, d_text);
        if (initial->parsed()) return cmd_initial_terms(n);
        if (regseq->parsed()) return cmd_regseq(n);
        if (verify->parsed()) return cmd_verify(suite, n, trials, seed, max_coeff, as_json, emit_trials);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
