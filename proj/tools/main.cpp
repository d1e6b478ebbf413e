#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace numsg::cli;

int main(int argc, char** argv) {
    CLI::App app{"Numerical semigroup invariants and exact syzygy-degree identity checks"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> gens_args;
    std::string format = "text";
    std::string out_path;
    std::string m_range = "2..6";
    std::int64_t q = 0, n = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string input_path, betti_path, dump_dir;

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
        sub->add_flag("--oracle", config.oracle, "Cross-check against the brute-force oracle");
        sub->add_option("--dump-dir", dump_dir, "Directory for identity-violation dumps");
    };
    auto add_single = [&](CLI::App* sub) {
        add_common(sub);
        sub->add_option("generators", gens_args, "Generators, comma separated (e.g. 4,7,9)");
        sub->add_option("--input", input_path, "Batch file: one comma-separated semigroup per line");
        sub->add_flag("--auto-minimize", config.auto_minimize, "Drop redundant generators instead of rejecting");
    };

    auto* info = app.add_subcommand("info", "Frobenius number, gaps and Hilbert numerators");
    add_single(info);
    auto* kpoly = app.add_subcommand("kpoly", "k-polynomial (numerator over prod (1 - z^d_i))");
    add_single(kpoly);
    auto* verify = app.add_subcommand("verify", "Exact power-sum identities of the signed syzygy degrees");
    add_single(verify);
    verify->add_option("--betti", betti_path, "Betti table file ('i j beta' per line) instead of k(S; z)");
    auto* complex = app.add_subcommand("verify-complex", "Exact cyclotomic identities at roots of unity");
    add_single(complex);
    complex->add_option("--betti", betti_path, "Betti table file ('i j beta' per line) instead of k(S; z)");
    auto* q_opt = complex->add_option("--q", q, "Order of the root of unity (default: all admissible q)");
    auto* n_opt = complex->add_option("--n", n, "Exponent numerator, coprime to q (default 1)");
    auto* sweep = app.add_subcommand("sweep", "Verify everything on seeded random semigroups");
    add_common(sweep);
    sweep->add_option("--count", config.sweep.count, "Number of semigroups");
    sweep->add_option("--m", m_range, "Embedding dimension range, e.g. 2..6");
    sweep->add_option("--dmax", config.sweep.d_max, "Largest generator drawn");
    sweep->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunResult result;
    try {
        config.format = formats.at(format);
        config.limits = limits_from_environment();
        if (!input_path.empty()) config.input_path = input_path;
        if (!betti_path.empty()) config.betti_path = betti_path;
        if (!dump_dir.empty()) config.dump_dir = dump_dir;
        for (const auto& a : gens_args) {
            auto parsed = parse_generators(a);
            config.generators.insert(config.generators.end(), parsed.begin(), parsed.end());
        }
        if (*q_opt) config.q = q;
        if (*n_opt) config.n = n;

        if (info->parsed()) config.command = Command::Info;
        if (kpoly->parsed()) config.command = Command::KPoly;
        if (verify->parsed()) config.command = Command::Verify;
        if (complex->parsed()) config.command = Command::VerifyComplex;
        if (sweep->parsed()) {
            config.command = Command::Sweep;
            config.seed = seed;
            std::tie(config.sweep.m_min, config.sweep.m_max) = parse_range(m_range);
        }
        result = run(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        file << result.out;
    } else {
        std::cout << result.out;
    }
    std::cerr << result.err;
    return result.exit_code;
}
