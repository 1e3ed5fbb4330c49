#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pluck/dpoly.hpp"
#include "pluck/rat.hpp"

namespace pluck {

/// Two-row partition (r1 >= r2 >= 0), the index of the two-variable Schur
/// polynomial s_(r1,r2)(a, b). Ordered by weight, then by pi2 = r2, so within
/// one weight (k,0) < (k-1,1) < ... as in the two-row dominance chain.
struct TwoRowPartition {
    int r1 = 0;
    int r2 = 0;

    TwoRowPartition() = default;
    TwoRowPartition(int first, int second) : r1(first), r2(second) {
        if (r2 < 0 || r1 < r2) throw std::invalid_argument("TwoRowPartition: need r1 >= r2 >= 0");
    }

    [[nodiscard]] int weight() const { return r1 + r2; }
    [[nodiscard]] int pi2() const { return r2; }

    friend bool operator==(const TwoRowPartition&, const TwoRowPartition&) = default;
    friend std::strong_ordering operator<=>(const TwoRowPartition& a, const TwoRowPartition& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        return a.r2 <=> b.r2;
    }
    friend std::ostream& operator<<(std::ostream& os, const TwoRowPartition& p) {
        return os << "(" << p.r1 << "," << p.r2 << ")";
    }
};

/// All two-row partitions of k, ordered by pi2 ascending.
std::vector<TwoRowPartition> two_row_partitions(int k);

/// Finite sum of c_rho * s_rho with every rho of one common weight. The
/// weight is kept explicitly so the zero class still carries its grading.
template <typename Coeff>
class SchurExpansion {
public:
    using Terms = std::map<TwoRowPartition, Coeff>;

    SchurExpansion() = default;
    explicit SchurExpansion(int weight) : weight_(weight) {
        if (weight < 0) throw std::invalid_argument("SchurExpansion: negative weight");
    }

    /// c * s_rho.
    static SchurExpansion single(const TwoRowPartition& rho, const Coeff& c) {
        SchurExpansion e(rho.weight());
        e.add(rho, c);
        return e;
    }

    /// 1 * s_(0,0).
    static SchurExpansion one() { return single(TwoRowPartition(0, 0), Coeff(Rat(1))); }

    void add(const TwoRowPartition& rho, const Coeff& c) {
        if (rho.weight() != weight_)
            throw std::invalid_argument("SchurExpansion: term weight does not match class weight");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(rho, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Coeff coefficient(const TwoRowPartition& rho) const {
        const auto it = terms_.find(rho);
        return it == terms_.end() ? Coeff() : it->second;
    }

    SchurExpansion& operator+=(const SchurExpansion& o) {
        if (o.weight_ != weight_ && !o.is_zero())
            throw std::invalid_argument("SchurExpansion: adding classes of different weight");
        for (const auto& [rho, c] : o.terms_) add(rho, c);
        return *this;
    }

    SchurExpansion& operator*=(const Rat& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [rho, c] : terms_) c *= s;
        return *this;
    }

    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    /// Apply f to every coefficient; the result is re-normalised.
    template <typename F>
    [[nodiscard]] auto map_coefficients(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
        SchurExpansion<Out> out(weight_);
        for (const auto& [rho, c] : terms_) out.add(rho, f(c));
        return out;
    }

private:
    int weight_ = 0;
    Terms terms_;
};

/// Classes with rational, polynomial and Laurent-polynomial coefficients.
using RatClass = SchurExpansion<Rat>;
using PolyClass = SchurExpansion<DPoly>;
using SchurClass = SchurExpansion<DLaurent>;

/// sign * s_partition; sign = 0 means the zero polynomial and carries no partition.
struct SignedSchurTerm {
    int sign = 0;
    std::optional<TwoRowPartition> partition;

    friend bool operator==(const SignedSchurTerm&, const SignedSchurTerm&) = default;
};

/// (a^i b^j - a^j b^i) / (b - a) as a signed Schur term.
SignedSchurTerm monomial_divdiff(int i, int j);

/// The partitions tau with s_rho * s_sigma = sum s_tau, each with multiplicity
/// one, from (rho1+sigma1, rho2+sigma2) to the balanced endpoint, pi2 ascending.
std::vector<TwoRowPartition> schur_product_support(const TwoRowPartition& rho, const TwoRowPartition& sigma);

/// Bilinear extension of schur_product_support.
template <typename Coeff>
SchurExpansion<Coeff> class_product(const SchurExpansion<Coeff>& f, const SchurExpansion<Coeff>& g) {
    SchurExpansion<Coeff> out(f.weight() + g.weight());
    for (const auto& [rho, cf] : f.terms())
        for (const auto& [sigma, cg] : g.terms()) {
            const Coeff c = cf * cg;
            for (const auto& tau : schur_product_support(rho, sigma)) out.add(tau, c);
        }
    return out;
}

/// Binomial coefficient, 0 whenever k < 0 or k > n or n < 0.
BigInt binomial(int n, int k);

/// s_rho(a + x, b + x) = sum_s x^s C_s. Entry s of the result is C_s, a
/// class of weight |rho| - s with nonnegative integer coefficients; C_0 = s_rho.
std::vector<RatClass> shift_both(const TwoRowPartition& rho);

/// [B_0, ..., B_w] with F(a + x, b + x) = sum_t x^t B_t, w = weight(F).
std::vector<PolyClass> split_shift(const PolyClass& f);

/// A_t = divided difference of a^t * prod_{i=0}^{m-1} (i a + (D - i) b), where
/// D = d + m when use_shifted_d is set and D = d otherwise. Weight m - 1 + t.
PolyClass weighted_divdiff(int t, int m, bool use_shifted_d);

/// e_f(D) with prod_{i=0}^{m-1} (i a + (D - i) b) = sum_f e_f a^(m-f) b^f,
/// index f = 0..m (e_0 = 0).
std::vector<DPoly> factor_product_coefficients(int m, bool use_shifted_d);

/// "s[3,0]" style rendering of a single partition.
std::string schur_label(const TwoRowPartition& rho);

}  // namespace pluck
