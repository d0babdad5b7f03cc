// Acceptance suite: exhaustive checks of every shipped statement at desk
// scale, one PASS/FAIL line per criterion. Exits 0 only when all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adnil/counting.hpp"
#include "adnil/dyck.hpp"
#include "adnil/insertion.hpp"
#include "adnil/lie_oracle.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"
#include "subprocess.hpp"

using namespace adnil;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number = 0;
    std::string label;
    bool passed = true;
    double seconds = 0.0;
    double budget = 0.0;  // 0 = untimed
    std::string detail;
};

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Canonical text dump of a worked construction, compared byte for byte
// against the golden fixtures.
std::string dump_example(const LPartition& lambda, bool with_trace) {
    const InsertionTable table = insertion_table(lambda);
    std::string out;
    out += "l " + std::to_string(lambda.rank()) + "\n";
    out += "lambda " + lambda.to_string() + "\n";
    out += "contacts " + join(table.profile.contacts) + "\n";
    out += "largest " + largest_with_profile(table.profile).to_string() + "\n";
    out += "smallest " + smallest_with_profile(table.profile).to_string() + "\n";
    for (int j = 1; j <= table.rows(); ++j) {
        out += "word" + std::to_string(j) + " " + join(table.word(j)) + "\n";
    }
    if (with_trace) {
        const std::vector<DyckPath> trace = peak_insertion_trace(lambda);
        for (std::size_t step = 0; step < trace.size(); ++step) {
            out += "step" + std::to_string(step) + " " + trace[step].word() + "\n";
        }
    }
    return out;
}

Criterion check_stats_cli(const std::string& cli) {
    Criterion criterion{1, "rank-5 census table via the stats CLI", true, 0, 1.0, ""};
    const auto start = Clock::now();
    const testsupport::RunResult run = testsupport::run(cli + " stats --max-l 5");
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (run.exit_code != 0) {
        criterion.passed = false;
        criterion.detail = "stats exited with " + std::to_string(run.exit_code);
        return criterion;
    }
    std::map<std::pair<int, int>, long long> formula_rows;
    std::istringstream lines(run.output);
    std::string line;
    std::getline(lines, line);
    if (line != "l,r,count,source") {
        criterion.passed = false;
        criterion.detail = "unexpected header: " + line;
        return criterion;
    }
    while (std::getline(lines, line)) {
        int l = 0;
        int r = 0;
        long long count = 0;
        char source[32] = {};
        if (std::sscanf(line.c_str(), "%d,%d,%lld,%31s", &l, &r, &count, source) == 4 &&
            std::string(source) == "formula") {
            formula_rows[{l, r}] = count;
        }
    }
    const std::vector<std::vector<long long>> expected{
        {1, 1}, {2, 2, 1}, {4, 6, 3, 1}, {9, 16, 12, 4, 1}, {21, 45, 40, 20, 5, 1}};
    for (int l = 1; l <= 5; ++l) {
        for (int r = 0; r <= l; ++r) {
            const auto it = formula_rows.find({l, r});
            const long long want =
                expected[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(r)];
            if (it == formula_rows.end() || it->second != want) {
                criterion.passed = false;
                criterion.detail = "row l=" + std::to_string(l) + " r=" + std::to_string(r) +
                                   " missing or wrong";
                return criterion;
            }
        }
    }
    return criterion;
}

Criterion check_udu_equals_compatibles() {
    Criterion criterion{2, "udu of the insertion path equals the compatible-simple count, l<=8",
                        true, 0, 10.0, ""};
    const auto start = Clock::now();
    long long checked = 0;
    for (int l = 1; l <= 8 && criterion.passed; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const int udu = count_udu(peak_insertion_path(ideal.to_partition()));
            if (udu != static_cast<int>(max_compatible_simples(ideal).size())) {
                criterion.passed = false;
                criterion.detail = "l=" + std::to_string(l) + " lambda=" + lambda.to_string();
                break;
            }
            ++checked;
        }
    }
    if (criterion.passed && checked != 2 + 5 + 14 + 42 + 132 + 429 + 1430 + 4862) {
        criterion.passed = false;
        criterion.detail = "checked " + std::to_string(checked) + " ideals";
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_udu_prediction() {
    Criterion criterion{3, "predicted udu equals the scanned udu, l<=10", true, 0, 60.0, ""};
    const auto start = Clock::now();
    for (int l = 1; l <= 10 && criterion.passed; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            if (predicted_udu(lambda) != count_udu(peak_insertion_path(lambda))) {
                criterion.passed = false;
                criterion.detail = "l=" + std::to_string(l) + " lambda=" + lambda.to_string();
                break;
            }
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_peak_counts() {
    Criterion criterion{4, "peak counts of both paths agree with the minimal-root count, l<=8",
                        true, 0, 0, ""};
    const auto start = Clock::now();
    for (int l = 1; l <= 8 && criterion.passed; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const int minimal =
                static_cast<int>(RootIdeal::from_partition(lambda).minimal_roots().size());
            const bool ok =
                l + 1 - count_peaks(peak_insertion_path(lambda)) == minimal &&
                count_peaks(boundary_path(lambda)) - 1 == minimal;
            if (!ok) {
                criterion.passed = false;
                criterion.detail = "l=" + std::to_string(l) + " lambda=" + lambda.to_string();
                break;
            }
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_duality(const std::string& cli) {
    Criterion criterion{5, "duality complements the minimal-root count and is injective, l<=8",
                        true, 0, 0, ""};
    const auto start = Clock::now();
    for (int l = 1; l <= 8 && criterion.passed; ++l) {
        std::set<std::string> images;
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const RootIdeal dual = dual_ideal(ideal);
            if (ideal.minimal_roots().size() + dual.minimal_roots().size() !=
                static_cast<std::size_t>(l)) {
                criterion.passed = false;
                criterion.detail = "complement failed at l=" + std::to_string(l) + " lambda=" +
                                   lambda.to_string();
                break;
            }
            images.insert(dual.to_partition().to_string());
        }
        if (criterion.passed && static_cast<long long>(images.size()) != catalan(l + 1)) {
            criterion.passed = false;
            criterion.detail = "dual not injective at l=" + std::to_string(l);
        }
    }
    if (criterion.passed) {
        const testsupport::RunResult run =
            testsupport::run(cli + " dual --l 3 --antichain 1-3");
        if (run.exit_code != 0 || run.output != "1-1,2-2\n") {
            criterion.passed = false;
            criterion.detail = "CLI dual output was '" + run.output + "'";
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_bijectivity() {
    Criterion criterion{6, "both maps are bijections onto the Dyck paths, l<=10", true, 0, 0, ""};
    const auto start = Clock::now();
    for (int l = 1; l <= 10 && criterion.passed; ++l) {
        std::set<std::string> insertion_images;
        std::set<std::string> boundary_images;
        for (const LPartition& lambda : enumerate_partitions(l)) {
            insertion_images.insert(peak_insertion_path(lambda).word());
            boundary_images.insert(boundary_path(lambda).word());
        }
        const long long expected = catalan(l + 1);
        if (static_cast<long long>(insertion_images.size()) != expected ||
            static_cast<long long>(boundary_images.size()) != expected) {
            criterion.passed = false;
            criterion.detail = "image sizes off at l=" + std::to_string(l);
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_coordinates() {
    Criterion criterion{7, "minimal roots map bijectively onto the ledger support, l<=8",
                        true, 0, 0, ""};
    const auto start = Clock::now();
    for (int l = 1; l <= 8 && criterion.passed; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const UduLedger ledger = udu_ledger(lambda);
            const auto coordinates = insertion_coordinates(ideal);
            std::vector<std::pair<int, int>> image;
            std::map<PositiveRoot, std::pair<int, int>> by_root;
            for (const auto& [root, coordinate] : coordinates) {
                image.push_back(coordinate);
                by_root[root] = coordinate;
            }
            std::sort(image.begin(), image.end());
            bool ok = image == ledger.support &&
                      std::adjacent_find(image.begin(), image.end()) == image.end();
            if (ok) {
                const AntichainSplit split = split_antichain(ideal.minimal_roots());
                std::vector<std::pair<int, int>> chained;
                std::vector<std::pair<int, int>> solo;
                for (const PositiveRoot& root : split.chained) chained.push_back(by_root.at(root));
                for (const PositiveRoot& root : split.solo) solo.push_back(by_root.at(root));
                std::sort(chained.begin(), chained.end());
                std::sort(solo.begin(), solo.end());
                ok = chained == ledger.chained && solo == ledger.solo;
            }
            if (!ok) {
                criterion.passed = false;
                criterion.detail = "l=" + std::to_string(l) + " lambda=" + lambda.to_string();
                break;
            }
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_lie_oracle() {
    Criterion criterion{8, "matrix-unit oracle agrees with the combinatorial test, l<=5",
                        true, 0, 30.0, ""};
    const auto start = Clock::now();
    long long pairs = 0;
    for (int l = 1; l <= 5 && criterion.passed; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            for (unsigned mask = 0; mask < (1u << l); ++mask) {
                const SimpleSubset subset = SimpleSubset::from_mask(l, mask);
                if (is_lie_ideal(ideal, subset) != is_ideal_of_parabolic(ideal, subset)) {
                    criterion.passed = false;
                    criterion.detail = "l=" + std::to_string(l) + " lambda=" +
                                       lambda.to_string() + " subset={" + subset.to_string() +
                                       "}";
                    break;
                }
                ++pairs;
            }
            if (!criterion.passed) break;
        }
    }
    if (criterion.passed && pairs != 2LL * 2 + 5 * 4 + 14 * 8 + 42 * 16 + 132 * 32) {
        criterion.passed = false;
        criterion.detail = "checked " + std::to_string(pairs) + " pairs";
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

Criterion check_golden(const std::string& golden_dir) {
    Criterion criterion{9, "worked construction fixtures match the golden files", true, 0, 0, ""};
    const auto start = Clock::now();
    const std::vector<std::pair<std::string, std::string>> fixtures{
        {golden_dir + "/insertion_l13.txt",
         dump_example(LPartition(13, {10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0}), false)},
        {golden_dir + "/insertion_l7.txt",
         dump_example(LPartition(7, {5, 3, 1, 1, 1, 0, 0}), true)},
    };
    for (const auto& [path, actual] : fixtures) {
        const std::string expected = read_file(path);
        if (expected != actual) {
            criterion.passed = false;
            criterion.detail = "mismatch against " + path;
            break;
        }
    }
    criterion.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return criterion;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    std::string golden_dir;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--golden") golden_dir = argv[i + 1];
    }
    if (cli.empty() || golden_dir.empty()) {
        std::cerr << "usage: acceptance --cli <path> --golden <dir>\n";
        return 2;
    }

    std::vector<Criterion> criteria;
    criteria.push_back(check_stats_cli(cli));
    criteria.push_back(check_udu_equals_compatibles());
    criteria.push_back(check_udu_prediction());
    criteria.push_back(check_peak_counts());
    criteria.push_back(check_duality(cli));
    criteria.push_back(check_bijectivity());
    criteria.push_back(check_coordinates());
    criteria.push_back(check_lie_oracle());
    criteria.push_back(check_golden(golden_dir));

    bool all_passed = true;
    for (Criterion& criterion : criteria) {
        if (criterion.budget > 0 && criterion.seconds >= criterion.budget) {
            criterion.passed = false;
            criterion.detail = "exceeded the " + std::to_string(criterion.budget) + "s budget";
        }
        all_passed = all_passed && criterion.passed;
        std::printf("%s  criterion %d: %s (%.2fs)\n", criterion.passed ? "PASS" : "FAIL",
                    criterion.number, criterion.label.c_str(), criterion.seconds);
        if (!criterion.detail.empty()) std::printf("      %s\n", criterion.detail.c_str());
    }
    return all_passed ? 0 : 1;
}
