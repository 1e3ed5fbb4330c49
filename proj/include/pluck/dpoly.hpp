#pragma once

#include <climits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pluck/rat.hpp"

namespace pluck {

/// Sparse univariate polynomial in the degree variable d with exact rational
/// coefficients. kLaurent selects whether negative exponents are allowed.
/// Zero coefficients are never stored.
template <bool kLaurent>
class BasicPoly {
public:
    using Terms = std::map<int, Rat>;

    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = INT_MIN;

    BasicPoly() = default;
    BasicPoly(const Rat& constant) { add(0, constant); }  // NOLINT(google-explicit-constructor)
    BasicPoly(long constant) : BasicPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

    /// Dense constructor: coeffs[i] is the coefficient of d^i.
    static BasicPoly dense(const std::vector<Rat>& coeffs) {
        BasicPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i) p.add(static_cast<int>(i), coeffs[i]);
        return p;
    }

    static BasicPoly monomial(const Rat& c, int exponent) {
        BasicPoly p;
        p.add(exponent, c);
        return p;
    }

    /// The polynomial d.
    static BasicPoly d() { return monomial(Rat(1), 1); }

    /// c * d^exponent added in place.
    void add(int exponent, const Rat& c) {
        if constexpr (!kLaurent) {
            if (exponent < 0) throw std::invalid_argument("DPoly: negative exponent");
        }
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
    /// Smallest stored exponent; INT_MAX for the zero polynomial.
    [[nodiscard]] int min_exponent() const { return terms_.empty() ? INT_MAX : terms_.begin()->first; }
    [[nodiscard]] Rat leading_coefficient() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

    [[nodiscard]] Rat coefficient(int exponent) const {
        const auto it = terms_.find(exponent);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    BasicPoly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator-(BasicPoly a) { return a *= Rat(-1); }
    friend BasicPoly operator*(BasicPoly a, const Rat& s) { return a *= s; }
    friend BasicPoly operator*(const Rat& s, BasicPoly a) { return a *= s; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    friend bool operator==(const BasicPoly&, const BasicPoly&) = default;

private:
    Terms terms_;
};

using DPoly = BasicPoly<false>;
using DLaurent = BasicPoly<true>;

/// Exact value p(d0), by Horner's rule.
Rat dpoly_eval(const DPoly& p, long d0);

/// q with q(d) = p(d + delta).
DPoly dpoly_shift(const DPoly& p, long delta);

DLaurent to_laurent(const DPoly& p);

/// d^exponent * L; exponent may be negative.
DLaurent times_d_power(const DLaurent& l, int exponent);

/// The DPoly equal to L. Throws NonPolynomial listing the offending terms
/// when a negative exponent survives.
DPoly laurent_reduce(const DLaurent& l);

/// Expanded rendering, highest power first: "3d^2 - 6d" (spaced) or
/// "3d^2-6d" (compact). Non-integral coefficients are parenthesised,
/// "(1/2)d^4". Negative exponents print as "d^-1".
template <bool kLaurent>
std::string to_text(const BasicPoly<kLaurent>& p, bool compact = false);

template <bool kLaurent>
std::string to_latex(const BasicPoly<kLaurent>& p);

template <bool kLaurent>
std::ostream& operator<<(std::ostream& os, const BasicPoly<kLaurent>& p) {
    return os << to_text(p);
}

/// Dense coefficient list from exponent 0 up to the degree; [] for zero.
std::vector<Rat> dense_coefficients(const DPoly& p);

}  // namespace pluck
