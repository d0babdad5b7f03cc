#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adnil/counting.hpp"
#include "adnil/dyck.hpp"
#include "adnil/insertion.hpp"
#include "adnil/json_io.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"
#include "adnil/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct MapArgs {
    int rank = 0;
    std::string from;
    std::string to;
    std::string input;
    std::string format = "text";
};

struct EnumerateArgs {
    int rank = 0;
    std::string kind;
};

struct StatsArgs {
    int max_rank = 5;
};

struct DualArgs {
    int rank = 0;
    std::string antichain;
};

struct VerifyArgs {
    int max_rank = 5;
    int lie_max_rank = 4;
    int threads = 1;
};

adnil::LPartition read_partition(const MapArgs& args) {
    using namespace adnil;
    if (args.from == "partition") return LPartition::parse(args.input, args.rank);
    if (args.from == "dyck") {
        return partition_from_boundary(DyckPath::parse(args.input), args.rank);
    }
    // antichain
    const Antichain antichain = Antichain::parse(args.input, args.rank);
    return RootIdeal::from_antichain(antichain, args.rank).to_partition();
}

int run_map(const MapArgs& args) {
    using namespace adnil;
    const LPartition lambda = read_partition(args);
    const bool json = args.format == "json";
    if (args.to == "partition") {
        std::cout << (json ? to_json(lambda).dump() : lambda.to_string()) << "\n";
    } else if (args.to == "dyck") {
        const DyckPath path = boundary_path(lambda);
        std::cout << (json ? to_json(path).dump() : path.word()) << "\n";
    } else if (args.to == "dyck-akop") {
        const DyckPath path = peak_insertion_path(lambda);
        std::cout << (json ? to_json(path).dump() : path.word()) << "\n";
    } else {  // antichain
        const RootIdeal ideal = RootIdeal::from_partition(lambda);
        std::cout << (json ? to_json(ideal).dump() : ideal.minimal_roots().to_string()) << "\n";
    }
    return kOk;
}

int run_enumerate(const EnumerateArgs& args) {
    using namespace adnil;
    if (args.kind == "dyck") {
        for (const DyckPath& path : enumerate_dyck_paths(args.rank + 1)) {
            std::cout << path.word() << "\n";
        }
        return kOk;
    }
    for (const LPartition& lambda : enumerate_partitions(args.rank)) {
        if (args.kind == "partition") {
            std::cout << lambda.to_string() << "\n";
        } else {  // antichain
            std::cout << RootIdeal::from_partition(lambda).minimal_roots().to_string() << "\n";
        }
    }
    return kOk;
}

int run_stats(const StatsArgs& args) {
    using namespace adnil;
    std::vector<CensusTable> tables;
    bool consistent = true;
    for (int l = 1; l <= args.max_rank; ++l) {
        const CensusTable formula = census(l, CensusSource::Formula);
        const CensusTable by_udu = census(l, CensusSource::UduOfInsertion);
        const CensusTable by_ideal = census(l, CensusSource::IdealCompatibles);
        consistent = consistent && by_udu.counts == formula.counts &&
                     by_ideal.counts == formula.counts;
        tables.push_back(formula);
        tables.push_back(by_udu);
        tables.push_back(by_ideal);
    }
    std::cout << census_csv(tables);
    if (!consistent) {
        std::cerr << "error: census sources disagree\n";
        return kVerificationFailure;
    }
    return kOk;
}

int run_dual(const DualArgs& args) {
    using namespace adnil;
    const Antichain antichain = Antichain::parse(args.antichain, args.rank);
    const RootIdeal ideal = RootIdeal::from_antichain(antichain, args.rank);
    std::cout << dual_ideal(ideal).minimal_roots().to_string() << "\n";
    return kOk;
}

int run_verify(const VerifyArgs& args) {
    using namespace adnil;
    VerifyOptions options;
    options.max_rank = args.max_rank;
    options.lie_max_rank = args.lie_max_rank;
    options.threads = args.threads;
    const std::vector<SuiteResult> results = run_verification(options);
    std::cout << format_report(results);
    // stdout stays byte-deterministic; timing goes to stderr
    double total = 0;
    for (const SuiteResult& result : results) total += result.seconds;
    std::fprintf(stderr, "verified in %.3fs\n", total);
    return all_passed(results) ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijections and statistics for Dyck paths, staircase partitions,"
                 " and filters in the type-A positive root poset"};
    app.require_subcommand(1);

    MapArgs map_args;
    CLI::App* map_cmd = app.add_subcommand("map", "Convert between representations");
    map_cmd->add_option("--l", map_args.rank, "Rank")->required()->check(CLI::Range(1, 16));
    map_cmd->add_option("--from", map_args.from, "Input representation")
        ->required()
        ->check(CLI::IsMember({"partition", "dyck", "antichain"}));
    map_cmd->add_option("--to", map_args.to, "Output representation")
        ->required()
        ->check(CLI::IsMember({"partition", "dyck", "antichain", "dyck-akop"}));
    map_cmd->add_option("--input", map_args.input, "Value to convert")->required();
    map_cmd->add_option("--format", map_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    EnumerateArgs enumerate_args;
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List all objects of a rank");
    enumerate_cmd->add_option("--l", enumerate_args.rank, "Rank")
        ->required()
        ->check(CLI::Range(1, adnil::kMaxEnumRank));
    enumerate_cmd->add_option("--kind", enumerate_args.kind, "Object kind")
        ->required()
        ->check(CLI::IsMember({"partition", "dyck", "antichain"}));

    StatsArgs stats_args;
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "Census tables of the udu statistic, CSV on stdout");
    stats_cmd->add_option("--max-l", stats_args.max_rank, "Largest rank")
        ->check(CLI::Range(1, adnil::kMaxCensusRank));

    DualArgs dual_args;
    CLI::App* dual_cmd = app.add_subcommand("dual", "Dual ideal of an antichain");
    dual_cmd->add_option("--l", dual_args.rank, "Rank")->required()->check(CLI::Range(1, 16));
    dual_cmd->add_option("--antichain", dual_args.antichain, "Antichain, e.g. \"1-3,4-5\"")
        ->required();

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the exhaustive invariant suites");
    verify_cmd->add_option("--max-l", verify_args.max_rank, "Largest combinatorial rank")
        ->check(CLI::Range(1, adnil::kMaxCensusRank));
    verify_cmd->add_option("--lie-max-l", verify_args.lie_max_rank, "Largest oracle rank")
        ->check(CLI::Range(1, 5));
    verify_cmd->add_option("--threads", verify_args.threads, "Worker threads")
        ->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (map_cmd->parsed()) return run_map(map_args);
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args);
        if (stats_cmd->parsed()) return run_stats(stats_args);
        if (dual_cmd->parsed()) return run_dual(dual_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
