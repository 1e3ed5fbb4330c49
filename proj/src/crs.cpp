#include "pluck/crs.hpp"

#include <algorithm>
#include <mutex>
#include <span>
#include <sstream>

#include "pluck/errors.hpp"

namespace pluck {

std::string PivotPolicy::describe() const {
    switch (kind) {
        case Kind::MinPart:
            return "min";
        case Kind::MaxPart:
            return "max";
        case Kind::ExplicitSequence: {
            std::string out = "seq(";
            for (std::size_t i = 0; i < sequence.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(sequence[i]);
            }
            return out + ")";
        }
    }
    return "?";
}

std::shared_ptr<const PolyClass> ClassCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

void ClassCache::insert(const InputPartition& lambda, PolyClass cls) {
    if (cls.weight() != lambda.codim())
        throw InternalAssertion("cache insert: class of " + lambda.key() + " has weight " +
                                std::to_string(cls.weight()) + ", expected " + std::to_string(lambda.codim()));
    auto value = std::make_shared<const PolyClass>(std::move(cls));
    std::unique_lock lock(mutex_);
    entries_.try_emplace(lambda.key(), std::move(value));
}

std::size_t ClassCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void ClassCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::vector<std::pair<std::string, std::shared_ptr<const PolyClass>>> ClassCache::snapshot() const {
    std::vector<std::pair<std::string, std::shared_ptr<const PolyClass>>> out;
    {
        std::shared_lock lock(mutex_);
        out.assign(entries_.begin(), entries_.end());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void assert_divisibility(const PolyClass& b, int t) {
    for (const auto& [nu, q] : b.terms()) {
        if (q.min_exponent() < t) {
            std::ostringstream msg;
            msg << "d^" << t << " does not divide the coefficient " << to_text(q) << " of " << schur_label(nu)
                << " in B_" << t;
            throw DivisibilityViolation(msg.str(), t, nu.r1, nu.r2);
        }
    }
}

PolyClass recursion_step(const PolyClass& yprime, int m, int e_m, RecursionStats* stats) {
    if (m < 2) throw std::invalid_argument("recursion_step: pivot must be at least 2");
    if (e_m < 1) throw std::invalid_argument("recursion_step: multiplicity must be positive");

    const int c_prime = yprime.weight();
    const auto shifted = split_shift(yprime);

    // [Y_lambda(d + m)] = 1/e_m * sum_t (m/d)^t A_t B_t
    SchurClass total(c_prime + m - 1);
    Rat m_power(1);
    for (int t = 0; t <= c_prime; ++t) {
        const PolyClass& b = shifted[static_cast<std::size_t>(t)];
        assert_divisibility(b, t);
        if (stats) stats->divisibility_checks.fetch_add(1, std::memory_order_relaxed);

        const PolyClass a = weighted_divdiff(t, m, true);
        const PolyClass ab = class_product(a, b);
        for (const auto& [rho, coeff] : ab.terms()) total.add(rho, times_d_power(to_laurent(coeff), -t) * m_power);
        m_power *= Rat(m);
    }
    total *= Rat(BigInt(1), BigInt(e_m));

    PolyClass at_d_plus_m = total.map_coefficients([](const DLaurent& l) { return laurent_reduce(l); });
    if (stats) stats->steps.fetch_add(1, std::memory_order_relaxed);
    return at_d_plus_m.map_coefficients([m](const DPoly& p) { return dpoly_shift(p, -m); });
}

namespace {

void check_sequence(const InputPartition& lambda, const std::vector<int>& sequence) {
    std::vector<int> sorted = sequence;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != lambda.parts())
        throw InvalidPartition("pivot sequence " + PivotPolicy::explicit_sequence(sequence).describe() +
                               " is not a rearrangement of " + lambda.key());
}

PolyClass crs_explicit(const InputPartition& lambda, std::span<const int> order) {
    if (lambda.empty()) return PolyClass::one();
    const int m = order.front();
    const PolyClass yprime = crs_explicit(lambda.without(m), order.subspan(1));
    return recursion_step(yprime, m, lambda.multiplicity(m));
}

}  // namespace

PolyClass crs_class(const InputPartition& lambda, const PivotPolicy& policy, ClassCache* cache) {
    if (policy.kind == PivotPolicy::Kind::ExplicitSequence) {
        check_sequence(lambda, policy.sequence);
        return crs_explicit(lambda, policy.sequence);
    }
    if (lambda.empty()) return PolyClass::one();

    const std::string key = lambda.key();
    if (cache) {
        if (auto hit = cache->find(key)) {
            cache->stats().cache_hits.fetch_add(1, std::memory_order_relaxed);
            return *hit;
        }
        cache->stats().cache_misses.fetch_add(1, std::memory_order_relaxed);
    }

    const int m = policy.kind == PivotPolicy::Kind::MinPart ? lambda.smallest() : lambda.largest();
    const PolyClass yprime = crs_class(lambda.without(m), policy, cache);
    PolyClass result = recursion_step(yprime, m, lambda.multiplicity(m), cache ? &cache->stats() : nullptr);
    if (cache) cache->insert(lambda, result);
    return result;
}

std::vector<std::vector<int>> distinct_removal_orders(const InputPartition& lambda) {
    std::vector<int> order = lambda.parts();
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace pluck
