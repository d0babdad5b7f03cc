#include "adnil/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "adnil/counting.hpp"
#include "adnil/dyck.hpp"
#include "adnil/insertion.hpp"
#include "adnil/lie_oracle.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"

namespace adnil {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs check(i) for i in [0, count); an empty string means pass. Returns the
// number of cases up to and including the first failure (all of them when
// everything passes) plus the failure message. Sharding by index keeps the
// reported failure the first one in enumeration order.
std::pair<long long, std::string> scan(std::size_t count, int threads,
                                       const std::function<std::string(std::size_t)>& check) {
    if (threads < 2 || count < 256) {
        for (std::size_t i = 0; i < count; ++i) {
            std::string message = check(i);
            if (!message.empty()) return {static_cast<long long>(i + 1), std::move(message)};
        }
        return {static_cast<long long>(count), {}};
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::atomic<std::size_t> first_failure{count};
    std::vector<std::size_t> failure_index(workers, count);
    std::vector<std::string> failure_message(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                if (i >= first_failure.load(std::memory_order_relaxed)) break;
                std::string message = check(i);
                if (!message.empty()) {
                    failure_index[w] = i;
                    failure_message[w] = std::move(message);
                    std::size_t current = first_failure.load();
                    while (i < current && !first_failure.compare_exchange_weak(current, i)) {
                    }
                    break;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    std::size_t best = count;
    std::string message;
    for (std::size_t w = 0; w < workers; ++w) {
        if (failure_index[w] < best) {
            best = failure_index[w];
            message = failure_message[w];
        }
    }
    if (best == count) return {static_cast<long long>(count), {}};
    return {static_cast<long long>(best + 1), std::move(message)};
}

// Sweeps every partition of every rank in 1..max_rank through `check`
// (rank, partition) -> failure message or empty.
template <class Fn>
SuiteResult partition_suite(std::string name, int max_rank, int threads, Fn&& check) {
    SuiteResult result;
    result.suite = std::move(name);
    const auto start = Clock::now();
    for (int l = 1; l <= max_rank && result.passed; ++l) {
        const std::vector<LPartition> lambdas = enumerate_partitions(l);
        auto [cases, failure] = scan(
            lambdas.size(), threads,
            [&](std::size_t i) { return check(l, lambdas[i]); });
        result.cases += cases;
        if (!failure.empty()) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " " + failure;
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

std::string describe(const LPartition& lambda) { return "lambda=" + lambda.to_string(); }

SuiteResult suite_dyck_statistics(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "dyck-statistics";
    const auto start = Clock::now();
    for (int n = 1; n <= options.max_rank + 1 && result.passed; ++n) {
        const std::vector<DyckPath> paths = enumerate_dyck_paths(n);
        if (static_cast<long long>(paths.size()) != catalan(n)) {
            result.passed = false;
            result.counterexample = "n=" + std::to_string(n) + " enumerated " +
                                    std::to_string(paths.size()) + " paths, Catalan gives " +
                                    std::to_string(catalan(n));
            break;
        }
        for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
            if (!dyck_word_less(paths[i].word(), paths[i + 1].word())) {
                result.passed = false;
                result.counterexample = "n=" + std::to_string(n) +
                                        " enumeration not in u<d lexicographic order at index " +
                                        std::to_string(i);
                break;
            }
        }
        if (!result.passed) break;
        auto [cases, failure] = scan(paths.size(), options.threads, [&](std::size_t i) -> std::string {
            const DyckPath& path = paths[i];
            const int peaks = count_peaks(path);
            const int udu = count_udu(path);
            if (udu != count_u_peaks(path)) {
                return "path=" + path.word() + " udu=" + std::to_string(udu) +
                       " u-peaks=" + std::to_string(count_u_peaks(path));
            }
            if (peaks < 1 || peaks > n) {
                return "path=" + path.word() + " peaks=" + std::to_string(peaks);
            }
            if (udu > peaks - 1) {
                return "path=" + path.word() + " udu exceeds peaks-1";
            }
            if (DyckPath::parse(path.word()) != path) {
                return "path=" + path.word() + " does not reparse to itself";
            }
            const auto max_peaks = max_peak_offsets(path);
            for (int q = 1; q <= std::min<int>(2, static_cast<int>(max_peaks.size())); ++q) {
                const DyckPath grown = insert_peaks(path, q, 2);
                if (grown.word().size() != path.word().size() + 4 ||
                    DyckPath::parse(grown.word()) != grown) {
                    return "path=" + path.word() + " insert_peaks round trip failed at q=" +
                           std::to_string(q);
                }
            }
            return {};
        });
        result.cases += cases;
        if (!failure.empty()) {
            result.passed = false;
            result.counterexample = "n=" + std::to_string(n) + " " + failure;
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_classical_bijection(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "classical-bijection";
    const auto start = Clock::now();
    for (int l = 1; l <= options.max_rank && result.passed; ++l) {
        const std::vector<LPartition> lambdas = enumerate_partitions(l);
        auto [cases, failure] = scan(lambdas.size(), options.threads, [&](std::size_t i) -> std::string {
            const LPartition& lambda = lambdas[i];
            const DyckPath path = boundary_path(lambda);
            if (path.half_length() != l + 1) return describe(lambda) + " boundary length off";
            if (partition_from_boundary(path, l) != lambda) {
                return describe(lambda) + " boundary round trip failed";
            }
            int corners = 0;
            for (int row = 1; row <= l; ++row) {
                if (lambda.part(row) > lambda.part(row + 1)) ++corners;
            }
            if (count_peaks(path) != corners + 1) {
                return describe(lambda) + " peaks=" + std::to_string(count_peaks(path)) +
                       " corners+1=" + std::to_string(corners + 1);
            }
            return {};
        });
        result.cases += cases;
        if (!failure.empty()) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " " + failure;
            break;
        }
        // Other direction: every path of half-length l+1 is hit.
        for (const DyckPath& path : enumerate_dyck_paths(l + 1)) {
            if (boundary_path(partition_from_boundary(path, l)) != path) {
                result.passed = false;
                result.counterexample = "l=" + std::to_string(l) + " path=" + path.word() +
                                        " boundary inverse round trip failed";
                break;
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_insertion_bijection(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "insertion-bijection";
    const auto start = Clock::now();
    for (int l = 1; l <= options.max_rank && result.passed; ++l) {
        const std::vector<LPartition> lambdas = enumerate_partitions(l);
        std::vector<std::string> words;
        words.reserve(lambdas.size());
        for (const LPartition& lambda : lambdas) {
            const DyckPath path = peak_insertion_path(lambda);
            if (path.half_length() != l + 1) {
                result.passed = false;
                result.counterexample =
                    "l=" + std::to_string(l) + " " + describe(lambda) + " image length off";
                break;
            }
            words.push_back(path.word());
        }
        if (!result.passed) break;
        std::sort(words.begin(), words.end());
        if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " duplicate image word " +
                                    *std::adjacent_find(words.begin(), words.end());
            break;
        }
        if (static_cast<long long>(words.size()) != catalan(l + 1)) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " image size " +
                                    std::to_string(words.size()) + " != Catalan(l+1)";
            break;
        }
        result.cases += static_cast<long long>(words.size());
        if (l <= kMaxInversionRank) {
            auto [cases, failure] =
                scan(lambdas.size(), options.threads, [&](std::size_t i) -> std::string {
                    const LPartition& lambda = lambdas[i];
                    if (partition_from_peak_insertion(peak_insertion_path(lambda), l) != lambda) {
                        return describe(lambda) + " inversion table round trip failed";
                    }
                    return {};
                });
            (void)cases;
            if (!failure.empty()) {
                result.passed = false;
                result.counterexample = "l=" + std::to_string(l) + " " + failure;
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_envelope(const VerifyOptions& options) {
    return partition_suite(
        "profile-envelope", options.max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const DiagonalProfile profile = diagonal_profile(lambda);
            const LPartition largest = largest_with_profile(profile);
            const LPartition smallest = smallest_with_profile(profile);
            for (int row = 1; row <= l; ++row) {
                if (smallest.part(row) > lambda.part(row) ||
                    lambda.part(row) > largest.part(row)) {
                    return describe(lambda) + " escapes its envelope at row " +
                           std::to_string(row);
                }
            }
            if (diagonal_profile(largest) != profile || diagonal_profile(smallest) != profile) {
                return describe(lambda) + " envelope changes the profile";
            }
            return {};
        });
}

SuiteResult suite_insertion_words(const VerifyOptions& options) {
    return partition_suite(
        "insertion-words", options.max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const InsertionTable table = insertion_table(lambda);
            const DiagonalProfile& profile = table.profile;
            const int k = profile.count();
            long long support_sum = 0;
            for (int j = 1; j <= k; ++j) {
                long long sum = 0;
                for (const int a : table.word(j)) sum += a;
                support_sum += sum;
                if (sum != profile.contact(j) - profile.contact(j - 1)) {
                    return describe(lambda) + " row " + std::to_string(j) + " sums to " +
                           std::to_string(sum);
                }
                const int h = table.height(j);
                const int gap = profile.contact(j + 1) - profile.contact(j) - 1;
                if (j >= 2 && h != gap) {
                    return describe(lambda) + " row " + std::to_string(j) + " height " +
                           std::to_string(h) + " != " + std::to_string(gap);
                }
                if (j == 1 && h > gap) {
                    return describe(lambda) + " row 1 height exceeds " + std::to_string(gap);
                }
                if (lambda.part(table.anchor_row(j)) != profile.contact(j)) {
                    return describe(lambda) + " anchor row " + std::to_string(j) + " mismatch";
                }
            }
            if (table.word(k + 1) != std::vector<int>{l - profile.contact(k) + 1}) {
                return describe(lambda) + " seed row mismatch";
            }
            if (support_sum != lambda.part(1)) {
                return describe(lambda) + " support sums to " + std::to_string(support_sum) +
                       " != lambda_1";
            }
            return {};
        });
}

SuiteResult suite_udu_prediction(const VerifyOptions& options) {
    return partition_suite(
        "udu-prediction", options.max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const UduLedger ledger = udu_ledger(lambda);
            const int scanned = count_udu(peak_insertion_path(lambda));
            if (ledger.predicted_udu != scanned) {
                return describe(lambda) + " predicted=" + std::to_string(ledger.predicted_udu) +
                       " scanned=" + std::to_string(scanned);
            }
            if (ledger.running.front() != l - lambda.part(1) ||
                ledger.running.back() != ledger.predicted_udu) {
                return describe(lambda) + " running udu ledger inconsistent";
            }
            // the recurrence tracks the actual intermediate paths
            const std::vector<DyckPath> trace = peak_insertion_trace(lambda);
            for (std::size_t step = 0; step < trace.size(); ++step) {
                if (ledger.running[step] != count_udu(trace[step])) {
                    return describe(lambda) + " running udu wrong at step " +
                           std::to_string(step);
                }
            }
            return {};
        });
}

SuiteResult suite_peak_prediction(const VerifyOptions& options) {
    return partition_suite(
        "peak-prediction", options.max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const int insertion_peaks = count_peaks(peak_insertion_path(lambda));
            if (insertion_peaks != predicted_peaks(lambda)) {
                return describe(lambda) + " peaks=" + std::to_string(insertion_peaks) +
                       " predicted=" + std::to_string(predicted_peaks(lambda));
            }
            const std::size_t minimal = RootIdeal::from_partition(lambda).minimal_roots().size();
            if (static_cast<int>(minimal) != l + 1 - insertion_peaks) {
                return describe(lambda) + " minimal roots " + std::to_string(minimal) +
                       " != l+1-peaks";
            }
            if (count_peaks(boundary_path(lambda)) - 1 != static_cast<int>(minimal)) {
                return describe(lambda) + " boundary peaks-1 != minimal roots";
            }
            return {};
        });
}

SuiteResult suite_compatible_count(const VerifyOptions& options) {
    return partition_suite(
        "compatible-count", options.max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const int udu = count_udu(peak_insertion_path(ideal.to_partition()));
            const SimpleSubset compatible = max_compatible_simples(ideal);
            if (udu != static_cast<int>(compatible.size())) {
                return describe(lambda) + " udu=" + std::to_string(udu) + " compatible=" +
                       std::to_string(compatible.size());
            }
            const AntichainSplit split = split_antichain(ideal.minimal_roots());
            if (static_cast<int>(compatible.size()) !=
                l - 2 * static_cast<int>(split.solo.size()) -
                    static_cast<int>(split.chained.size())) {
                return describe(lambda) + " split count equation failed";
            }
            return {};
        });
}

SuiteResult suite_compatibility_monotone(const VerifyOptions& options) {
    const int max_rank = std::min(options.max_rank, 5);
    SuiteResult result = partition_suite(
        "compatibility-monotone", max_rank, options.threads,
        [](int l, const LPartition& lambda) -> std::string {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const SimpleSubset compatible = max_compatible_simples(ideal);
            for (unsigned mask = 0; mask < (1u << l); ++mask) {
                const SimpleSubset subset = SimpleSubset::from_mask(l, mask);
                if (is_ideal_of_parabolic(ideal, subset) != subset.subset_of(compatible)) {
                    return describe(lambda) + " subset={" + subset.to_string() +
                           "} disagrees with the maximal set";
                }
            }
            return {};
        });
    return result;
}

SuiteResult suite_antichain_coordinates(const VerifyOptions& options) {
    return partition_suite(
        "antichain-coordinates", options.max_rank, options.threads,
        [](int /*rank*/, const LPartition& lambda) -> std::string {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const Antichain minimal = ideal.minimal_roots();
            const UduLedger ledger = udu_ledger(lambda);
            const auto coordinates = insertion_coordinates(ideal);
            std::vector<std::pair<int, int>> image;
            image.reserve(coordinates.size());
            for (const auto& [root, coordinate] : coordinates) image.push_back(coordinate);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                return describe(lambda) + " coordinate map not injective";
            }
            if (image != ledger.support) {
                return describe(lambda) + " coordinate image differs from the ledger support";
            }
            const AntichainSplit split = split_antichain(minimal);
            std::map<PositiveRoot, std::pair<int, int>> by_root(coordinates.begin(),
                                                                coordinates.end());
            std::vector<std::pair<int, int>> chained_image;
            for (const PositiveRoot& root : split.chained) chained_image.push_back(by_root.at(root));
            std::sort(chained_image.begin(), chained_image.end());
            if (chained_image != ledger.chained) {
                return describe(lambda) + " chained roots do not map to chained entries";
            }
            std::set<int> indices;
            for (const PositiveRoot& root : minimal.roots()) {
                indices.insert(root.start);
                indices.insert(root.end);
            }
            if (indices.size() != 2 * minimal.size() - split.chained.size()) {
                return describe(lambda) + " start/end index count off";
            }
            return {};
        });
}

SuiteResult suite_duality(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "duality";
    const auto start = Clock::now();
    long long involutive = 0;
    long long total = 0;
    for (int l = 1; l <= options.max_rank && result.passed; ++l) {
        const std::vector<LPartition> lambdas = enumerate_partitions(l);
        std::vector<std::string> images;
        images.reserve(lambdas.size());
        for (const LPartition& lambda : lambdas) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            const RootIdeal dual = dual_ideal(ideal);
            if (dual.minimal_roots().size() + ideal.minimal_roots().size() !=
                static_cast<std::size_t>(l)) {
                result.passed = false;
                result.counterexample = "l=" + std::to_string(l) + " " + describe(lambda) +
                                        " minimal-root sizes do not complement";
                break;
            }
            images.push_back(dual.to_partition().to_string());
            if (dual_ideal(dual) == ideal) ++involutive;
            ++total;
            ++result.cases;
        }
        if (!result.passed) break;
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " dual map not injective";
        }
    }
    result.note = "dual(dual(ideal)) == ideal for " + std::to_string(involutive) + "/" +
                  std::to_string(total) + " ideals";
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_minimal_count_census(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "minimal-count-census";
    const auto start = Clock::now();
    for (int l = 1; l <= options.max_rank && result.passed; ++l) {
        std::vector<long long> histogram(static_cast<std::size_t>(l + 1), 0);
        for (const LPartition& lambda : enumerate_partitions(l)) {
            ++histogram[RootIdeal::from_partition(lambda).minimal_roots().size()];
            ++result.cases;
        }
        for (int p = 0; p <= l && result.passed; ++p) {
            if (histogram[static_cast<std::size_t>(p)] != narayana(l + 1, p + 1)) {
                result.passed = false;
                result.counterexample = "l=" + std::to_string(l) + " p=" + std::to_string(p) +
                                        " count " +
                                        std::to_string(histogram[static_cast<std::size_t>(p)]) +
                                        " != narayana";
            }
            if (histogram[static_cast<std::size_t>(p)] !=
                histogram[static_cast<std::size_t>(l - p)]) {
                result.passed = false;
                result.counterexample =
                    "l=" + std::to_string(l) + " p=" + std::to_string(p) + " asymmetric census";
            }
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_udu_census(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "udu-census";
    const auto start = Clock::now();
    const int max_rank = std::min(options.max_rank, kMaxCensusRank);
    for (int l = 1; l <= max_rank && result.passed; ++l) {
        const CensusTable formula = census(l, CensusSource::Formula);
        const CensusTable by_udu = census(l, CensusSource::UduOfInsertion);
        const CensusTable by_ideal = census(l, CensusSource::IdealCompatibles);
        if (by_udu.counts != formula.counts || by_ideal.counts != formula.counts) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " census tables disagree";
            break;
        }
        long long sum = 0;
        for (const long long c : formula.counts) sum += c;
        if (sum != catalan(l + 1)) {
            result.passed = false;
            result.counterexample =
                "l=" + std::to_string(l) + " census sums to " + std::to_string(sum);
            break;
        }
        result.cases += l + 1;
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_lie_oracle(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "lie-oracle";
    const auto start = Clock::now();
    for (int l = 1; l <= options.lie_max_rank && result.passed; ++l) {
        const std::vector<LPartition> lambdas = enumerate_partitions(l);
        auto [cases, failure] = scan(lambdas.size(), options.threads, [&](std::size_t i) -> std::string {
            const RootIdeal ideal = RootIdeal::from_partition(lambdas[i]);
            for (unsigned mask = 0; mask < (1u << l); ++mask) {
                const SimpleSubset subset = SimpleSubset::from_mask(l, mask);
                if (is_lie_ideal(ideal, subset) != is_ideal_of_parabolic(ideal, subset)) {
                    return describe(lambdas[i]) + " subset={" + subset.to_string() +
                           "} oracle mismatch";
                }
            }
            return {};
        });
        result.cases += cases * (1LL << l);
        if (!failure.empty()) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " " + failure;
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult suite_catalan_sum(const VerifyOptions& options) {
    SuiteResult result;
    result.suite = "catalan-sum";
    const auto start = Clock::now();
    const int max_rank = std::max(options.max_rank, 12);
    for (int l = 1; l <= max_rank && result.passed; ++l) {
        long long sum = 0;
        for (int r = 0; r <= l; ++r) sum += count_paths_with_udu(l, r);
        if (sum != catalan(l + 1)) {
            result.passed = false;
            result.counterexample = "l=" + std::to_string(l) + " formula sums to " +
                                    std::to_string(sum) + " != Catalan(l+1)";
        }
        ++result.cases;
    }
    result.seconds = seconds_since(start);
    return result;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    if (options.max_rank < 1 || options.max_rank > kMaxCensusRank) {
        throw std::invalid_argument("run_verification: max_rank outside 1.." +
                                    std::to_string(kMaxCensusRank));
    }
    if (options.lie_max_rank < 1 || options.lie_max_rank > 5) {
        throw std::invalid_argument("run_verification: lie_max_rank outside 1..5");
    }
    std::vector<SuiteResult> results;
    results.push_back(suite_dyck_statistics(options));
    results.push_back(suite_classical_bijection(options));
    results.push_back(suite_insertion_bijection(options));
    results.push_back(suite_envelope(options));
    results.push_back(suite_insertion_words(options));
    results.push_back(suite_udu_prediction(options));
    results.push_back(suite_peak_prediction(options));
    results.push_back(suite_compatible_count(options));
    results.push_back(suite_compatibility_monotone(options));
    results.push_back(suite_antichain_coordinates(options));
    results.push_back(suite_duality(options));
    results.push_back(suite_minimal_count_census(options));
    results.push_back(suite_udu_census(options));
    results.push_back(suite_lie_oracle(options));
    results.push_back(suite_catalan_sum(options));
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

std::string format_report(const std::vector<SuiteResult>& results) {
    std::string out;
    for (const SuiteResult& result : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "%s  %-26s %10lld cases\n",
                      result.passed ? "PASS" : "FAIL", result.suite.c_str(), result.cases);
        out += line;
        if (!result.counterexample.empty()) {
            out += "      counterexample: " + result.counterexample + "\n";
        }
        if (!result.note.empty()) {
            out += "      note: " + result.note + "\n";
        }
    }
    int failed = 0;
    for (const SuiteResult& result : results) failed += result.passed ? 0 : 1;
    out += failed == 0 ? "all suites passed\n"
                       : std::to_string(failed) + " suite(s) failed\n";
    return out;
}

}  // namespace adnil
