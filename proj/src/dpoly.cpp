#include "pluck/dpoly.hpp"

#include <sstream>

#include "pluck/errors.hpp"

namespace pluck {

Rat dpoly_eval(const DPoly& p, long d0) {
    if (p.is_zero()) return Rat(0);
    const Rat x(d0);
    Rat acc(0);
    for (int e = p.degree(); e >= 0; --e) acc = acc * x + p.coefficient(e);
    return acc;
}

DPoly dpoly_shift(const DPoly& p, long delta) {
    if (p.is_zero()) return p;
    DPoly linear = DPoly::d();
    linear.add(0, Rat(delta));
    DPoly acc;
    for (int e = p.degree(); e >= 0; --e) {
        acc = acc * linear;
        acc.add(0, p.coefficient(e));
    }
    return acc;
}

DLaurent to_laurent(const DPoly& p) {
    DLaurent l;
    for (const auto& [e, c] : p.terms()) l.add(e, c);
    return l;
}

DLaurent times_d_power(const DLaurent& l, int exponent) {
    DLaurent r;
    for (const auto& [e, c] : l.terms()) r.add(e + exponent, c);
    return r;
}

DPoly laurent_reduce(const DLaurent& l) {
    std::vector<std::pair<int, Rat>> offending;
    DPoly p;
    for (const auto& [e, c] : l.terms()) {
        if (e < 0) {
            offending.emplace_back(e, c);
        } else {
            p.add(e, c);
        }
    }
    if (!offending.empty()) {
        std::ostringstream msg;
        msg << "Laurent polynomial " << to_text(l) << " has " << offending.size()
            << " negative-power term(s)";
        throw NonPolynomial(msg.str(), std::move(offending));
    }
    return p;
}

std::vector<Rat> dense_coefficients(const DPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Rat> out(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
    return out;
}

namespace {

std::string power_text(int e) {
    if (e == 0) return "";
    if (e == 1) return "d";
    return "d^" + std::to_string(e);
}

std::string power_latex(int e) {
    if (e == 0) return "";
    if (e == 1) return "d";
    return "d^{" + std::to_string(e) + "}";
}

}  // namespace

template <bool kLaurent>
std::string to_text(const BasicPoly<kLaurent>& p, bool compact) {
    if (p.is_zero()) return "0";
    const std::string plus = compact ? "+" : " + ";
    const std::string minus = compact ? "-" : " - ";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        const Rat mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? minus : plus;
        }
        first = false;

        std::string coeff;
        if (!mag.is_integer()) {
            coeff = "(" + mag.to_string() + ")";
        } else if (mag != Rat(1) || e == 0) {
            coeff = mag.to_string();
        }
        out += coeff + power_text(e);
    }
    return out;
}

template <bool kLaurent>
std::string to_latex(const BasicPoly<kLaurent>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        const Rat mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string coeff;
        if (!mag.is_integer()) {
            coeff = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
        } else if (mag != Rat(1) || e == 0) {
            coeff = mag.to_string();
        }
        out += coeff + power_latex(e);
    }
    return out;
}

template std::string to_text(const BasicPoly<false>&, bool);
template std::string to_text(const BasicPoly<true>&, bool);
template std::string to_latex(const BasicPoly<false>&);
template std::string to_latex(const BasicPoly<true>&);

}  // namespace pluck
