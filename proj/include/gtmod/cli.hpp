#ifndef GTMOD_CLI_HPP
#define GTMOD_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "json_io.hpp"
#include "representation.hpp"
#include "suite.hpp"

namespace gtmod::cli
{

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2 };

inline const std::map<std::string, Mutation> &mutation_names()
{
    static const std::map<std::string, Mutation> names = {
        {"none", Mutation::none},
        {"sign-e12", Mutation::sign_e12},
        {"drop-gamma-shift", Mutation::drop_gamma_shift},
        {"missing-pminus-factor", Mutation::missing_pminus_factor},
        {"swap-tau", Mutation::swap_tau},
    };
    return names;
}

/// Inline JSON, "-" for stdin, or a file path.
inline nlohmann::json load_json(const std::string &arg, std::istream &in)
{
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream f(arg);
        if (!f) {
            throw InputError("cannot read " + arg);
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

/// "E,a,b" or "C,m,t".
struct GeneratorArg {
    char kind;
    int first;
    int second;
};

inline GeneratorArg parse_generator(const std::string &s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');) {
        parts.push_back(p);
    }
    if (parts.size() != 3 || (parts[0] != "E" && parts[0] != "C")) {
        throw InputError("generator must be \"E,a,b\" or \"C,m,t\"");
    }
    GeneratorArg g{parts[0][0], 0, 0};
    try {
        std::size_t used = 0;
        g.first = std::stoi(parts[1], &used);
        if (used != parts[1].size()) {
            throw InputError("bad index");
        }
        g.second = std::stoi(parts[2], &used);
        if (used != parts[2].size()) {
            throw InputError("bad index");
        }
    } catch (const std::logic_error &) {
        throw InputError("generator indices must be integers: " + s);
    }
    return g;
}

inline std::vector<long> parse_lambda(const std::string &s)
{
    std::vector<long> out;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(p, &used));
            if (used != p.size()) {
                throw InputError("bad weight entry");
            }
        } catch (const std::logic_error &) {
            throw InputError("weight entries must be integers: " + s);
        }
    }
    return out;
}

/// Run the command line; the process entry point is a thin wrapper around this.
/**
 * Outputs are JSON on `out` (or the --out file). Exit codes: 0 success,
 * 1 verification failure, 2 malformed input or configuration.
 */
inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Gelfand-Tsetlin modules of gl(n): exact actions and identity checks", "gtmod"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    if (const char *env = std::getenv("GTMOD_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::logic_error &) {
            err << "GTMOD_SEED must be an unsigned integer\n";
            return input_error;
        }
    }
    std::string out_path;
    int trunc = Jet::default_order;

    auto *classify_cmd = app.add_subcommand("classify", "classify a tableau");
    std::string tableau_arg;
    classify_cmd->add_option("--tableau", tableau_arg, "tableau JSON, file or -")->required();

    auto *act_cmd = app.add_subcommand("act", "apply E(a,b) or c_{m,t} to a vector");
    std::string spec_arg, vector_arg, generator_arg, act_mutation = "none";
    act_cmd->add_option("--spec", spec_arg, "module spec JSON, file or -");
    act_cmd->add_option("--vector", vector_arg, "vector JSON, file or -")->required();
    act_cmd->add_option("--generator", generator_arg, "E,a,b or C,m,t")->required();
    act_cmd->add_option("--mutate", act_mutation, "formula mutation");

    auto *basis_cmd = app.add_subcommand("basis", "basis tableaux of V(lambda)");
    std::string lambda_arg;
    basis_cmd->add_option("--lambda", lambda_arg, "comma separated dominant weight")->required();

    auto *verify_cmd = app.add_subcommand("verify", "run the identity suites");
    SuiteConfig cfg;
    std::string mutation_arg = "none";
    std::vector<std::string> suites;
    verify_cmd->add_option("--n-min", cfg.n_min, "smallest n")->capture_default_str();
    verify_cmd->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
    verify_cmd->add_option("--radius", cfg.radius, "shift ball radius")->capture_default_str();
    verify_cmd->add_option("--mutate", mutation_arg, "formula mutation")->capture_default_str();
    verify_cmd->add_option("--suite", suites, "fd, generic, singular, lemma (default all)");
    verify_cmd->add_option("--generic-count", cfg.generic_count)->capture_default_str();
    verify_cmd->add_option("--singular-count", cfg.singular_count)->capture_default_str();
    verify_cmd->add_option("--expressions", cfg.expression_count)->capture_default_str();

    for (auto *cmd : {classify_cmd, act_cmd, basis_cmd, verify_cmd}) {
        cmd->add_option("--seed", seed, "random seed (GTMOD_SEED overrides the default)");
        cmd->add_option("--out", out_path, "write output to a file");
    }
    for (auto *cmd : {act_cmd, verify_cmd}) {
        cmd->add_option("--trunc", trunc, "jet truncation order")->capture_default_str();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return input_error;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "cannot write " << out_path << "\n";
            return input_error;
        }
    }
    std::ostream &sink = out_path.empty() ? out : file;

    auto mutation_of = [](const std::string &name) {
        auto it = mutation_names().find(name);
        if (it == mutation_names().end()) {
            throw InputError("unknown mutation \"" + name + "\"");
        }
        return it->second;
    };

    try {
        if (*classify_cmd) {
            const Tableau v = json::tableau_from_json(load_json(tableau_arg, in));
            nlohmann::json j = json::to_json(classify(v));
            j["seed"] = seed;
            sink << j.dump() << "\n";
            return ok;
        }
        if (*basis_cmd) {
            const auto lambda = parse_lambda(lambda_arg);
            const auto basis = fd_basis(lambda);
            nlohmann::json tabs = nlohmann::json::array();
            for (const auto &t : basis) {
                tabs.push_back(json::to_json(t));
            }
            nlohmann::json lam = nlohmann::json::array();
            for (long l : lambda) {
                lam.push_back(std::to_string(l));
            }
            sink << nlohmann::json{{"lambda", lam},
                                   {"dimension", basis.size()},
                                   {"weyl_dim", weyl_dim(lambda)},
                                   {"basis", tabs},
                                   {"seed", seed}}
                        .dump()
                 << "\n";
            return ok;
        }
        if (*act_cmd) {
            const nlohmann::json vec_json = load_json(vector_arg, in);
            std::optional<ModuleSpec> spec;
            if (!spec_arg.empty()) {
                spec = json::spec_from_json(load_json(spec_arg, in));
            }
            if (vec_json.is_object() && vec_json.contains("spec")) {
                const ModuleSpec inner = json::spec_from_json(vec_json.at("spec"));
                if (spec && !(*spec == inner)) {
                    throw InputError("--spec and the vector's spec differ");
                }
                spec = inner;
            }
            if (!spec) {
                throw InputError("no module spec given");
            }
            Options opts;
            opts.trunc = trunc;
            opts.mutation = mutation_of(act_mutation);
            const Representation rep(*spec, opts);
            const ModuleVector v = json::vector_from_json(vec_json, rep.spec_ptr());
            const GeneratorArg g = parse_generator(generator_arg);
            const ModuleVector r = g.kind == 'E' ? rep.act(v, g.first, g.second) : rep.act_casimir(v, g.first, g.second);
            nlohmann::json j = json::to_json(r);
            j["seed"] = seed;
            sink << j.dump() << "\n";
            return ok;
        }
        if (*verify_cmd) {
            cfg.seed = seed;
            cfg.trunc = trunc;
            cfg.mutation = mutation_of(mutation_arg);
            if (!suites.empty()) {
                cfg.suites = {suites.begin(), suites.end()};
            }
            long reports = 0;
            long failed = 0;
            const bool pass = run_suites(cfg, [&](const CheckReport &r) {
                ++reports;
                failed += r.pass ? 0 : 1;
                nlohmann::json j = r.to_json();
                j["seed"] = seed;
                sink << j.dump() << "\n";
            });
            sink << nlohmann::json{{"summary", {{"reports", reports}, {"failed", failed}}},
                                   {"pass", pass},
                                   {"mutation", mutation_arg},
                                   {"seed", seed}}
                        .dump()
                 << "\n";
            return pass ? ok : verification_failed;
        }
    } catch (const IrregularCoefficient &e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace gtmod::cli

#endif
