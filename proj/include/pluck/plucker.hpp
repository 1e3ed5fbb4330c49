#pragma once

#include <string>
#include <vector>

#include "pluck/combinat.hpp"
#include "pluck/crs.hpp"
#include "pluck/dpoly.hpp"
#include "pluck/schur.hpp"

namespace pluck {

/// Pl_{lambda; c-2j}(d): the coefficient of s_(c-j, j) in [Y_lambda(d)].
struct PluckerFormula {
    InputPartition lambda;
    int j = 0;
    int codim_index = 0;
    DPoly formula;
    /// Values are enumerative counts only for d >= |lambda|.
    int validity_floor = 0;
};

enum class Regime { Kostka, Stirling };

const char* regime_name(Regime r);

/// Degree and leading coefficient expected from the Kostka/Stirling
/// description of leading terms.
struct LeadingPrediction {
    int degree = 0;
    Rat coefficient;
    Regime regime = Regime::Kostka;
    /// pi2 of the threshold partition, min(c - lambda_1 + 1, floor(c/2)).
    int threshold_pi2 = 0;
};

struct Verdict {
    bool match = false;
    /// Empty on a match; otherwise what differed.
    std::string details;
};

struct PluckerRow {
    PluckerFormula formula;
    LeadingPrediction prediction;
    Verdict verdict;
};

/// One row per j = 0 .. floor(c/2), in that order.
struct PluckerTable {
    InputPartition lambda;
    std::vector<PluckerRow> rows;

    [[nodiscard]] bool all_match() const;
};

/// Converts a codimension index i = c - 2j to j. Throws BadIndex on wrong
/// parity or range.
int j_from_codim_index(const InputPartition& lambda, int codim_index);

/// Extracts every Schur coefficient of the class as a formula and attaches
/// predictions and verdicts. lambda must be nonempty.
PluckerTable plucker_formulas(const InputPartition& lambda, ClassCache* cache = nullptr);

/// As plucker_formulas, from an already computed class.
PluckerTable plucker_table_from_class(const InputPartition& lambda, const PolyClass& cls);

/// The exact count Pl_{lambda; codim_index}(d0). Throws BelowValidityFloor
/// for d0 < |lambda|, BadIndex for an invalid index, NonIntegralValue if the
/// formula does not evaluate to an integer.
BigInt plucker_value(const InputPartition& lambda, int codim_index, long d0, ClassCache* cache = nullptr);

/// Evaluation of an extracted formula under the same rules.
BigInt plucker_value(const PluckerFormula& formula, long d0);

/// Predicted degree and leading coefficient of Pl_{lambda; c-2j}.
/// Throws OutOfRange unless 0 <= j <= floor(c/2) and lambda is nonempty.
LeadingPrediction predicted_leading(const InputPartition& lambda, int j);

/// [Y_m(d)] assembled coefficient by coefficient from the closed form of
/// the d^(m-k) s_(m-1-i, i) coefficients. m >= 2.
PolyClass ym_class_closed_form(int m);

/// Coefficient of d^(m-k) in the s_(m-1-i, i) coefficient of [Y_m(d)].
Rat ym_closed_form_coefficient(int m, int i, int k);

/// plucker_formulas, additionally checking that the rows cover every j once.
PluckerTable verify_leading(const InputPartition& lambda, ClassCache* cache = nullptr);

/// (1 / prod e_i!) h_{reduction}: the top d-degree part of [Y_lambda(d)],
/// the factor d^|lambda| left implicit.
RatClass top_degree_class(const InputPartition& lambda);

/// Coefficient of d^degree in each Schur coefficient.
RatClass degree_slice(const PolyClass& cls, int degree);

/// deg_d of a class: the largest degree among its coefficients.
int class_degree(const PolyClass& cls);

}  // namespace pluck
