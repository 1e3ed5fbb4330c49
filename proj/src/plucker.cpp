#include "pluck/plucker.hpp"

#include <algorithm>
#include <sstream>

#include "pluck/errors.hpp"

namespace pluck {

const char* regime_name(Regime r) { return r == Regime::Kostka ? "kostka" : "stirling"; }

bool PluckerTable::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const PluckerRow& r) { return r.verdict.match; });
}

int j_from_codim_index(const InputPartition& lambda, int codim_index) {
    const int c = lambda.codim();
    if (codim_index < 0 || codim_index > c || (c - codim_index) % 2 != 0) {
        std::ostringstream msg;
        msg << "codim index " << codim_index << " is not valid for " << lambda.key() << ": need 0 <= i <= " << c
            << " with i = " << c << " mod 2";
        throw BadIndex(msg.str());
    }
    return (c - codim_index) / 2;
}

LeadingPrediction predicted_leading(const InputPartition& lambda, int j) {
    if (lambda.empty()) throw OutOfRange("predicted_leading: empty partition");
    const int c = lambda.codim();
    if (j < 0 || 2 * j > c)
        throw OutOfRange("predicted_leading: j = " + std::to_string(j) + " outside 0.." + std::to_string(c / 2));

    const int lambda1 = lambda.largest();
    const int threshold = c - lambda1 + 1;
    const Rat scale(BigInt(1), lambda.multiplicity_factorial());

    LeadingPrediction out;
    out.threshold_pi2 = std::min(threshold, c / 2);
    if (j <= threshold) {
        out.regime = Regime::Kostka;
        out.degree = lambda.weight();
        out.coefficient = Rat(kostka_two_row(TwoRowPartition(c - j, j), lambda.reduction())) * scale;
    } else {
        const int drop = j - threshold;
        out.regime = Regime::Stirling;
        out.degree = lambda.weight() - drop;
        out.coefficient = Rat(stirling_first(lambda1, drop)) * scale;
    }
    return out;
}

PluckerTable plucker_table_from_class(const InputPartition& lambda, const PolyClass& cls) {
    if (lambda.empty()) throw InvalidPartition("Plücker formulas need a nonempty partition");
    const int c = lambda.codim();
    if (cls.weight() != c)
        throw InternalAssertion("class weight " + std::to_string(cls.weight()) + " differs from codim " +
                                std::to_string(c));

    PluckerTable table;
    table.lambda = lambda;
    for (int j = 0; 2 * j <= c; ++j) {
        PluckerRow row;
        row.formula = {lambda, j, c - 2 * j, cls.coefficient(TwoRowPartition(c - j, j)), lambda.weight()};
        row.prediction = predicted_leading(lambda, j);

        const DPoly& f = row.formula.formula;
        const int got_degree = f.degree();
        const Rat got_lead = f.leading_coefficient();
        row.verdict.match = got_degree == row.prediction.degree && got_lead == row.prediction.coefficient;
        if (!row.verdict.match) {
            std::ostringstream msg;
            msg << "degree expected " << row.prediction.degree << " got "
                << (f.is_zero() ? std::string("-inf") : std::to_string(got_degree)) << "; leading coefficient expected "
                << row.prediction.coefficient << " got " << got_lead;
            row.verdict.details = msg.str();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

PluckerTable plucker_formulas(const InputPartition& lambda, ClassCache* cache) {
    if (lambda.empty()) throw InvalidPartition("Plücker formulas need a nonempty partition");
    return plucker_table_from_class(lambda, crs_class(lambda, PivotPolicy::min_part(), cache));
}

BigInt plucker_value(const PluckerFormula& formula, long d0) {
    if (d0 < formula.validity_floor)
        throw BelowValidityFloor("d = " + std::to_string(d0) + " is below the validity floor |lambda| = " +
                                 std::to_string(formula.validity_floor));
    const Rat v = dpoly_eval(formula.formula, d0);
    if (!v.is_integer())
        throw NonIntegralValue("Pl[" + formula.lambda.key() + ";" + std::to_string(formula.codim_index) + "](" +
                               std::to_string(d0) + ") = " + v.to_string() + " is not an integer");
    return v.numerator();
}

BigInt plucker_value(const InputPartition& lambda, int codim_index, long d0, ClassCache* cache) {
    if (lambda.empty()) throw InvalidPartition("Plücker numbers need a nonempty partition");
    const int j = j_from_codim_index(lambda, codim_index);
    if (d0 < lambda.weight())
        throw BelowValidityFloor("d = " + std::to_string(d0) + " is below the validity floor |lambda| = " +
                                 std::to_string(lambda.weight()));
    const PolyClass cls = crs_class(lambda, PivotPolicy::min_part(), cache);
    const int c = lambda.codim();
    const PluckerFormula f{lambda, j, codim_index, cls.coefficient(TwoRowPartition(c - j, j)), lambda.weight()};
    return plucker_value(f, d0);
}

Rat ym_closed_form_coefficient(int m, int i, int k) {
    if (m < 2 || i < 0 || m - 1 - i < i || k < 0)
        throw OutOfRange("ym_closed_form_coefficient: invalid (m, i, k)");
    const auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (i <= k && k < m - i) return Rat(BigInt(sign(k + i) * binomial(k, i) * stirling_first(m, k)));
    if (m - i <= k && k < m) {
        const BigInt inner = sign(k + i) * binomial(k, i) - sign(k + m - i) * binomial(k, m - i);
        return Rat(BigInt(inner * stirling_first(m, k)));
    }
    return Rat(0);
}

PolyClass ym_class_closed_form(int m) {
    if (m < 2) throw OutOfRange("ym_class_closed_form: m must be at least 2");
    PolyClass out(m - 1);
    for (int i = 0; 2 * i <= m - 1; ++i) {
        DPoly coeff;
        for (int k = 0; k < m; ++k) coeff.add(m - k, ym_closed_form_coefficient(m, i, k));
        out.add(TwoRowPartition(m - 1 - i, i), coeff);
    }
    return out;
}

PluckerTable verify_leading(const InputPartition& lambda, ClassCache* cache) {
    PluckerTable table = plucker_formulas(lambda, cache);
    const int c = lambda.codim();
    if (static_cast<int>(table.rows.size()) != c / 2 + 1)
        throw InternalAssertion("table for " + lambda.key() + " does not cover every j");
    for (std::size_t j = 0; j < table.rows.size(); ++j)
        if (table.rows[j].formula.j != static_cast<int>(j))
            throw InternalAssertion("table for " + lambda.key() + " is out of order");
    return table;
}

RatClass top_degree_class(const InputPartition& lambda) {
    RatClass h = complete_homogeneous_class(lambda.reduction());
    h *= Rat(BigInt(1), lambda.multiplicity_factorial());
    return h;
}

RatClass degree_slice(const PolyClass& cls, int degree) {
    return cls.map_coefficients([degree](const DPoly& p) { return p.coefficient(degree); });
}

int class_degree(const PolyClass& cls) {
    int deg = DPoly::kZeroDegree;
    for (const auto& [rho, p] : cls.terms()) deg = std::max(deg, p.degree());
    return deg;
}

}  // namespace pluck
