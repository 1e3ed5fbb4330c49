#include "pluck/schur.hpp"

#include <algorithm>

namespace pluck {

std::vector<TwoRowPartition> two_row_partitions(int k) {
    std::vector<TwoRowPartition> out;
    for (int v = 0; 2 * v <= k; ++v) out.emplace_back(k - v, v);
    return out;
}

SignedSchurTerm monomial_divdiff(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial_divdiff: negative exponent");
    if (j > i) return {+1, TwoRowPartition(j - 1, i)};
    if (j < i) return {-1, TwoRowPartition(i - 1, j)};
    return {};
}

std::vector<TwoRowPartition> schur_product_support(const TwoRowPartition& rho, const TwoRowPartition& sigma) {
    const int w = rho.weight() + sigma.weight();
    const int lo = rho.r2 + sigma.r2;
    const int hi = std::min(rho.r1 + sigma.r2, rho.r2 + sigma.r1);
    std::vector<TwoRowPartition> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int v = lo; v <= hi; ++v) out.emplace_back(w - v, v);
    return out;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<RatClass> shift_both(const TwoRowPartition& rho) {
    const int k = rho.r1;
    const int l = rho.r2;
    std::vector<RatClass> out;
    out.reserve(static_cast<std::size_t>(k + l + 1));
    for (int s = 0; s <= k + l; ++s) {
        const int w = k + l - s;
        RatClass cs(w);
        for (const auto& uv : two_row_partitions(w)) {
            const int u = uv.r1;
            const int v = uv.r2;
            const BigInt c = binomial(k + 1, u + 1) * binomial(l, v) - binomial(k + 1, v) * binomial(l, u + 1);
            cs.add(uv, Rat(c));
        }
        out.push_back(std::move(cs));
    }
    return out;
}

std::vector<PolyClass> split_shift(const PolyClass& f) {
    const int w = f.weight();
    std::vector<PolyClass> out;
    out.reserve(static_cast<std::size_t>(w + 1));
    for (int t = 0; t <= w; ++t) out.emplace_back(w - t);
    for (const auto& [rho, coeff] : f.terms()) {
        const auto parts = shift_both(rho);
        for (int t = 0; t <= w; ++t)
            for (const auto& [nu, c] : parts[static_cast<std::size_t>(t)].terms()) out[static_cast<std::size_t>(t)].add(nu, coeff * c);
    }
    return out;
}

std::vector<DPoly> factor_product_coefficients(int m, bool use_shifted_d) {
    if (m < 1) throw std::invalid_argument("factor_product_coefficients: m must be positive");
    DPoly big_d = DPoly::d();
    if (use_shifted_d) big_d.add(0, Rat(m));

    // coeffs[f] multiplies a^(i-f) b^f after i factors
    std::vector<DPoly> coeffs{DPoly(Rat(1))};
    for (int i = 0; i < m; ++i) {
        DPoly b_factor = big_d;
        b_factor.add(0, Rat(-i));
        std::vector<DPoly> next(coeffs.size() + 1);
        for (std::size_t f = 0; f < coeffs.size(); ++f) {
            next[f] += coeffs[f] * Rat(i);
            next[f + 1] += coeffs[f] * b_factor;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

PolyClass weighted_divdiff(int t, int m, bool use_shifted_d) {
    if (m < 2) throw std::invalid_argument("weighted_divdiff: m must be at least 2");
    if (t < 0) throw std::invalid_argument("weighted_divdiff: t must be nonnegative");
    const auto e = factor_product_coefficients(m, use_shifted_d);
    PolyClass out(m - 1 + t);
    for (int f = 1; f <= m; ++f) {
        const SignedSchurTerm term = monomial_divdiff(m + t - f, f);
        if (term.sign == 0) continue;
        out.add(*term.partition, e[static_cast<std::size_t>(f)] * Rat(term.sign));
    }
    return out;
}

std::string schur_label(const TwoRowPartition& rho) {
    return "s[" + std::to_string(rho.r1) + "," + std::to_string(rho.r2) + "]";
}

}  // namespace pluck
