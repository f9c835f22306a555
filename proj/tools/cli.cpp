#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jacobsthal/eval.hpp"
#include "jacobsthal/search.hpp"
#include "jacobsthal/serialize.hpp"

namespace jacobsthal::cli {

namespace {

struct Settings {
    std::string kind = "paired";
    unsigned n = 0;
    unsigned n_max = 0;
    unsigned workers = 0;
    std::string format = "csv";
    std::string output;
    bool canonical = false;
    std::string which = "definition";
    std::string witness_path;
};

SearchOptions search_options(const Settings& settings, std::ostream& err)
{
    SearchOptions options;
    options.workers = resolve_workers(settings.workers);
    options.canonical = settings.canonical;
    options.on_progress = [&err](const Progress& progress) {
        err << "progress: L = " << progress.length << ", nodes = " << progress.nodes
            << ", elapsed = " << progress.elapsed.count() / 1000.0 << " s" << std::endl;
    };
    return options;
}

// Writes to --output when given, else to `out`.
void emit(const Settings& settings, std::ostream& out, const std::string& text)
{
    if (settings.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(settings.output, std::ios::binary);
    if (!file)
        throw InputError("cannot open output file '" + settings.output + "'");
    file << text;
}

int cmd_compute(const Settings& settings, std::ostream& out, std::ostream& err)
{
    const auto kind = parse_kind(settings.kind);
    const PrimeContext ctx(settings.n);
    const auto result = compute_h(ctx, kind, search_options(settings, err));
    emit(settings, out, result_to_json(result).dump(2) + "\n");
    return kOk;
}

int cmd_table(const Settings& settings, std::ostream& out, std::ostream& err)
{
    const auto kind = parse_kind(settings.kind);
    if (settings.n_max < 1)
        throw InputError("--n-max must be at least 1");
    if (settings.format != "csv" && settings.format != "json")
        throw InputError("--format must be csv or json");

    const auto options = search_options(settings, err);
    std::vector<ComputationResult> results;
    for (unsigned n = 1; n <= settings.n_max; ++n) {
        results.push_back(compute_h(PrimeContext(n), kind, options));
        err << "n = " << n << ": h = " << results.back().h << " (" << results.back().stats.wall_time.count() << " ms)"
            << std::endl;
    }

    std::ostringstream text;
    if (settings.format == "csv") {
        write_csv(text, results);
    } else {
        auto array = nlohmann::json::array();
        for (const auto& result : results)
            array.push_back(result_to_json(result));
        text << array.dump(2) << '\n';
    }
    emit(settings, out, text.str());

    if (kind == ProblemKind::Paired) {
        if (settings.n_max < 3) {
            err << "bound check: no n >= 3 in range" << std::endl;
        } else {
            std::optional<unsigned> violation;
            for (const auto& result : results)
                if (result.n >= 3 && !result.bound_ok && !violation)
                    violation = result.n;
            if (violation)
                err << "bound check: h < p_n^2 - p_n FAILS at n = " << *violation << std::endl;
            else
                err << "bound check: h < p_n^2 - p_n holds for all 3 <= n <= " << settings.n_max << std::endl;
        }
    }
    return kOk;
}

int cmd_verify(const Settings& settings, const CLI::App& command, std::ostream& out)
{
    std::ifstream file(settings.witness_path);
    if (!file)
        throw InputError("cannot open witness file '" + settings.witness_path + "'");

    nlohmann::json document;
    try {
        document = nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("witness file is not valid JSON: ") + e.what());
    }
    const Witness witness = witness_from_json(document);

    if (command.count("--kind") != 0 && parse_kind(settings.kind) != witness.kind)
        throw InputError("witness kind is " + std::string(to_string(witness.kind)) + ", expected " + settings.kind);
    if (command.count("--n") != 0 && settings.n != witness.n)
        throw InputError("witness is for n = " + std::to_string(witness.n) + ", expected n = " + std::to_string(settings.n));

    const PrimeContext ctx(witness.n);
    if (auto q = first_coprime_position(witness, ctx)) {
        out << "FAIL: at q = " << *q << " no prime up to " << ctx.largest() << " divides a + q"
            << (witness.kind == ProblemKind::Paired ? " or b + q" : "") << "\n";
        return kVerificationFailed;
    }
    out << "OK: " << to_string(witness.kind) << " witness of length " << witness.length << " for n = " << witness.n
        << "\n";
    return kOk;
}

int cmd_oracle(const Settings& settings, std::ostream& out)
{
    const auto kind = parse_kind(settings.kind);
    const PrimeContext ctx(settings.n);
    std::uint64_t h = 0;
    if (settings.which == "assignment")
        h = assignment_oracle(ctx, kind);
    else if (settings.which == "definition")
        h = definition_oracle(ctx, kind);
    else
        throw InputError("--which must be assignment or definition");
    out << h << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Settings settings;
    CLI::App app{"Exact primorial Jacobsthal values h(n) and h2(n) with verifiable witnesses", "jacobsthal"};
    app.require_subcommand(1);

    auto add_kind = [&](CLI::App* command) {
        command->add_option("--kind", settings.kind, "classic or paired")
            ->check(CLI::IsMember({"classic", "paired"}))
            ->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "compute h for one n and print the result as JSON");
    add_kind(compute);
    compute->add_option("--n", settings.n, "number of primes")->required()->check(CLI::Range(1u, kMaxPrimeCount));
    compute->add_option("--workers", settings.workers, "worker threads (default: logical CPUs)");
    compute->add_option("--output", settings.output, "write JSON here instead of standard output");
    compute->add_flag("--canonical", settings.canonical, "reproducible witness via a single-threaded re-run");

    auto* table = app.add_subcommand("table", "compute h for n = 1..n-max");
    add_kind(table);
    table->add_option("--n-max", settings.n_max, "largest n")->required()->check(CLI::Range(1u, kMaxPrimeCount));
    table->add_option("--workers", settings.workers, "worker threads (default: logical CPUs)");
    table->add_option("--format", settings.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--output", settings.output, "write the table here instead of standard output");
    table->add_flag("--canonical", settings.canonical, "reproducible witnesses via single-threaded re-runs");

    auto* verify = app.add_subcommand("verify", "check a witness file against the definition");
    verify->add_option("file", settings.witness_path, "witness or result JSON")->required();
    verify->add_option("--n", settings.n, "expected number of primes");
    verify->add_option("--kind", settings.kind, "expected kind")->check(CLI::IsMember({"classic", "paired"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force h for small n");
    add_kind(oracle);
    oracle->add_option("--n", settings.n, "number of primes")->required()->check(CLI::Range(1u, kMaxPrimeCount));
    oracle->add_option("--which", settings.which, "assignment or definition")
        ->check(CLI::IsMember({"assignment", "definition"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (compute->parsed())
            return cmd_compute(settings, out, err);
        if (table->parsed())
            return cmd_table(settings, out, err);
        if (verify->parsed())
            return cmd_verify(settings, *verify, out);
        return cmd_oracle(settings, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvariantBreach& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const ContractViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace jacobsthal::cli
