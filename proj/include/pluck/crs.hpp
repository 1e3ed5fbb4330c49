#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pluck/combinat.hpp"
#include "pluck/schur.hpp"

namespace pluck {

/// Which part m of lambda the recursion removes at each step. Every choice
/// gives the same class.
struct PivotPolicy {
    enum class Kind { MinPart, MaxPart, ExplicitSequence };

    Kind kind = Kind::MinPart;
    /// Removal order for ExplicitSequence, first element removed first. Must
    /// be a rearrangement of the parts of lambda.
    std::vector<int> sequence;

    static PivotPolicy min_part() { return {Kind::MinPart, {}}; }
    static PivotPolicy max_part() { return {Kind::MaxPart, {}}; }
    static PivotPolicy explicit_sequence(std::vector<int> order) { return {Kind::ExplicitSequence, std::move(order)}; }

    [[nodiscard]] std::string describe() const;
};

struct RecursionStats {
    std::atomic<std::uint64_t> steps{0};
    std::atomic<std::uint64_t> divisibility_checks{0};
    std::atomic<std::uint64_t> cache_hits{0};
    std::atomic<std::uint64_t> cache_misses{0};
};

/// Memo table from canonical partition keys ("10,2,2") to fully reduced
/// classes. Safe for concurrent readers and writers; writes are serialised.
class ClassCache {
public:
    struct LoadReport {
        std::size_t accepted = 0;
        std::size_t rejected = 0;
    };

    ClassCache() = default;
    ClassCache(const ClassCache&) = delete;
    ClassCache& operator=(const ClassCache&) = delete;

    [[nodiscard]] std::shared_ptr<const PolyClass> find(const std::string& key) const;

    /// Stores the class of lambda after checking its weight. An existing
    /// entry is kept.
    void insert(const InputPartition& lambda, PolyClass cls);

    [[nodiscard]] std::size_t size() const;
    void clear();

    /// Entries sorted by key.
    [[nodiscard]] std::vector<std::pair<std::string, std::shared_ptr<const PolyClass>>> snapshot() const;

    /// Reads a cache document. Entries that fail to parse or revalidate are
    /// dropped (and counted) so they get recomputed. A missing file loads
    /// nothing; an unreadable or non-object document throws.
    LoadReport load(const std::filesystem::path& path);

    /// Writes the whole table, atomically replacing the file.
    void save(const std::filesystem::path& path) const;

    RecursionStats& stats() { return stats_; }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const PolyClass>> entries_;
    RecursionStats stats_;
};

/// [Y_lambda(d)] = sum_rho r_rho(d) s_rho. The empty partition gives 1.
/// cache may be null. ExplicitSequence computations bypass the cache so they
/// really follow the requested removal order.
PolyClass crs_class(const InputPartition& lambda, const PivotPolicy& policy = PivotPolicy::min_part(),
                    ClassCache* cache = nullptr);

/// One recursion step: from the class of lambda' = lambda minus m (in d) to
/// the class of lambda (in d). e_m is the multiplicity of m in lambda.
PolyClass recursion_step(const PolyClass& yprime, int m, int e_m, RecursionStats* stats = nullptr);

/// Throws DivisibilityViolation unless d^t divides every coefficient of b.
void assert_divisibility(const PolyClass& b, int t);

/// Every distinct ordering of the parts of lambda.
std::vector<std::vector<int>> distinct_removal_orders(const InputPartition& lambda);

}  // namespace pluck
