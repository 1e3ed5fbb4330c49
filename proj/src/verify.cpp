#include "pluck/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "pluck/errors.hpp"
#include "pluck/io.hpp"
#include "pluck/plucker.hpp"

namespace pluck {

const char* check_name(Check c) {
    switch (c) {
        case Check::Divisibility: return "divisibility";
        case Check::PivotIndependence: return "pivot-independence";
        case Check::ClosedForm: return "closed-form";
        case Check::TopDegree: return "top-degree";
        case Check::Degree: return "degree";
        case Check::LeadingTerm: return "leading-term";
        case Check::Positivity: return "positivity";
        case Check::ProductLeadingI: return "product-leading-i";
        case Check::ProductLeadingII: return "product-leading-ii";
        case Check::Integrality: return "integrality";
    }
    return "?";
}

const CheckSummary& SweepReport::summary(Check c) const {
    for (const auto& s : checks)
        if (s.check == c) return s;
    throw std::out_of_range("no summary for check");
}

namespace {

std::string class_text(const InputPartition& lambda, const PolyClass& cls) {
    return class_to_json(lambda, cls).dump();
}

std::string rat_class_text(const RatClass& cls) {
    std::string out;
    for (const auto& [rho, c] : cls.terms()) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*" + schur_label(rho);
    }
    return out.empty() ? "0" : out;
}

std::string leading_text(const DPoly& p) {
    if (p.is_zero()) return "0";
    return p.leading_coefficient().to_string() + "*d^" + std::to_string(p.degree());
}

bool same_leading_term(const DPoly& a, const DPoly& b) {
    return !a.is_zero() && !b.is_zero() && a.degree() == b.degree() && a.leading_coefficient() == b.leading_coefficient();
}

// Compares the leading term of every s_rho coefficient of cls against approx.
CheckOutcome compare_leading_terms(Check check, const PolyClass& cls, const PolyClass& approx) {
    CheckOutcome out{check};
    for (const auto& rho : two_row_partitions(cls.weight())) {
        const DPoly want = cls.coefficient(rho);
        const DPoly got = approx.coefficient(rho);
        if (!same_leading_term(want, got)) {
            out.passed = false;
            out.expected = schur_label(rho) + ": " + leading_text(want);
            out.got = schur_label(rho) + ": " + leading_text(got);
            return out;
        }
    }
    return out;
}

}  // namespace

std::vector<CheckOutcome> check_partition(const InputPartition& lambda, const SweepOptions& options, ClassCache& cache) {
    std::vector<CheckOutcome> out;

    PolyClass cls;
    try {
        cls = crs_class(lambda, PivotPolicy::min_part(), &cache);
    } catch (const InternalAssertion& e) {
        out.push_back({Check::Divisibility, true, false, "polynomial classes with d^t | q_nu", e.what()});
        return out;
    }
    out.push_back({Check::Divisibility});

    {
        CheckOutcome o{Check::PivotIndependence};
        std::vector<PivotPolicy> policies;
        if (options.all_pivots) {
            for (auto& order : distinct_removal_orders(lambda)) policies.push_back(PivotPolicy::explicit_sequence(order));
        } else {
            policies.push_back(PivotPolicy::max_part());
        }
        for (const auto& policy : policies) {
            const PolyClass other = crs_class(lambda, policy, nullptr);
            if (!(other == cls)) {
                o.passed = false;
                o.expected = "min: " + class_text(lambda, cls);
                o.got = policy.describe() + ": " + class_text(lambda, other);
                break;
            }
        }
        out.push_back(std::move(o));
    }

    {
        CheckOutcome o{Check::ClosedForm};
        if (lambda.length() != 1) {
            o.applicable = false;
        } else {
            const PolyClass closed = ym_class_closed_form(lambda.largest());
            if (!(closed == cls)) {
                o.passed = false;
                o.expected = class_text(lambda, closed);
                o.got = class_text(lambda, cls);
            }
        }
        out.push_back(std::move(o));
    }

    {
        CheckOutcome o{Check::TopDegree};
        const RatClass want = top_degree_class(lambda);
        const RatClass got = degree_slice(cls, lambda.weight());
        if (!(want == got)) {
            o.passed = false;
            o.expected = rat_class_text(want);
            o.got = rat_class_text(got);
        }
        out.push_back(std::move(o));
    }

    {
        CheckOutcome o{Check::Degree};
        const int deg = class_degree(cls);
        if (deg != lambda.weight()) {
            o.passed = false;
            o.expected = std::to_string(lambda.weight());
            o.got = std::to_string(deg);
        }
        out.push_back(std::move(o));
    }

    const PluckerTable table = plucker_table_from_class(lambda, cls);
    {
        CheckOutcome o{Check::LeadingTerm};
        for (const auto& row : table.rows) {
            if (!row.verdict.match) {
                o.passed = false;
                o.expected = "j=" + std::to_string(row.formula.j) + ": " + row.prediction.coefficient.to_string() +
                             "*d^" + std::to_string(row.prediction.degree);
                o.got = "j=" + std::to_string(row.formula.j) + ": " + leading_text(row.formula.formula);
                break;
            }
        }
        out.push_back(std::move(o));
    }

    {
        CheckOutcome o{Check::Positivity};
        for (const auto& rho : two_row_partitions(cls.weight())) {
            const DPoly r = cls.coefficient(rho);
            if (r.is_zero() || r.leading_coefficient().sign() <= 0) {
                o.passed = false;
                o.expected = schur_label(rho) + ": positive leading coefficient";
                o.got = schur_label(rho) + ": " + leading_text(r);
                break;
            }
        }
        out.push_back(std::move(o));
    }

    {
        CheckOutcome first{Check::ProductLeadingI};
        CheckOutcome second{Check::ProductLeadingII};
        if (lambda.length() < 2) {
            first.applicable = false;
            second.applicable = false;
        } else {
            bool any_ii = false;
            for (const auto& [m, e_m] : lambda.multiplicities()) {
                const InputPartition rest = lambda.without(m);
                const PolyClass ym = crs_class(InputPartition({m}), PivotPolicy::min_part(), &cache);
                const PolyClass yrest = crs_class(rest, PivotPolicy::min_part(), &cache);
                const Rat inv_e(BigInt(1), BigInt(e_m));

                PolyClass product = class_product(ym, yrest);
                product *= inv_e;
                if (first.passed) {
                    CheckOutcome o = compare_leading_terms(Check::ProductLeadingI, cls, product);
                    if (!o.passed) {
                        first = o;
                        first.expected = "m=" + std::to_string(m) + " " + first.expected;
                    }
                }

                if (m - 2 <= rest.codim()) {
                    any_ii = true;
                    const TwoRowPartition top(m - 1, 0);
                    PolyClass reduced = class_product(PolyClass::single(top, ym.coefficient(top)), yrest);
                    reduced *= inv_e;
                    if (second.passed) {
                        CheckOutcome o = compare_leading_terms(Check::ProductLeadingII, cls, reduced);
                        if (!o.passed) {
                            second = o;
                            second.expected = "m=" + std::to_string(m) + " " + second.expected;
                        }
                    }
                }
            }
            second.applicable = any_ii;
        }
        out.push_back(std::move(first));
        out.push_back(std::move(second));
    }

    {
        CheckOutcome o{Check::Integrality};
        for (const auto& row : table.rows) {
            for (long d0 = lambda.weight(); d0 <= lambda.weight() + options.integrality_span && o.passed; ++d0) {
                const Rat v = dpoly_eval(row.formula.formula, d0);
                if (!v.is_integer() || v.sign() < 0) {
                    o.passed = false;
                    o.expected = "nonnegative integer";
                    o.got = plucker_label(lambda, row.formula.codim_index) + "(" + std::to_string(d0) +
                            ") = " + v.to_string();
                }
            }
            if (!o.passed) break;
        }
        out.push_back(std::move(o));
    }

    return out;
}

SweepReport run_sweep(const SweepOptions& options, ClassCache& cache) {
    const auto partitions = enumerate_partitions_no_ones(options.max_weight);
    std::vector<std::vector<CheckOutcome>> results(partitions.size());

    const std::uint64_t steps_before = cache.stats().steps.load();
    const std::uint64_t checks_before = cache.stats().divisibility_checks.load();

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(partitions.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < partitions.size(); i = next.fetch_add(1)) {
            try {
                results[i] = check_partition(partitions[i], options, cache);
            } catch (const InternalAssertion& e) {
                results[i] = {{Check::Divisibility, true, false, "polynomial classes with d^t | q_nu", e.what()}};
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    SweepReport report;
    report.max_weight = options.max_weight;
    report.all_pivots = options.all_pivots;
    report.partitions = partitions.size();
    for (int c = 0; c < kCheckCount; ++c) report.checks.push_back({static_cast<Check>(c)});
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        for (const auto& o : results[i]) {
            auto& s = report.checks[static_cast<std::size_t>(o.check)];
            if (!o.applicable) continue;
            ++s.applicable;
            if (o.passed) {
                ++s.passed;
            } else if (!report.witness) {
                report.witness = Witness{partitions[i].key(), check_name(o.check), o.expected, o.got};
            }
        }
    }
    report.recursion_steps = cache.stats().steps.load() - steps_before;
    report.divisibility_checks = cache.stats().divisibility_checks.load() - checks_before;
    return report;
}

std::string report_to_plain(const SweepReport& report) {
    std::ostringstream os;
    os << "verify: " << report.partitions << " partitions without 1's of weight <= " << report.max_weight
       << ", pivots " << (report.all_pivots ? "all" : "min") << "\n";
    for (const auto& s : report.checks) {
        os << "  " << check_name(s.check);
        for (std::size_t pad = std::string(check_name(s.check)).size(); pad < 20; ++pad) os << ' ';
        os << s.passed << "/" << s.applicable << " passed\n";
    }
    if (report.witness) {
        const auto& w = *report.witness;
        os << "FAIL: partition " << w.partition << ", check " << w.check << "\n"
           << "  expected: " << w.expected << "\n"
           << "  got:      " << w.got << "\n";
    } else {
        os << "PASS\n";
    }
    return os.str();
}

nlohmann::json report_to_json(const SweepReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& s : report.checks)
        checks.push_back({{"name", check_name(s.check)}, {"applicable", s.applicable}, {"passed", s.passed}});
    nlohmann::json out = {{"max_weight", report.max_weight},
                          {"pivots", report.all_pivots ? "all" : "min"},
                          {"partitions", report.partitions},
                          {"checks", std::move(checks)},
                          {"ok", report.ok()}};
    if (report.witness) {
        const auto& w = *report.witness;
        out["witness"] = {{"partition", w.partition}, {"check", w.check}, {"expected", w.expected}, {"got", w.got}};
    }
    return out;
}

std::string report_to_latex(const SweepReport& report) {
    std::ostringstream os;
    os << "\\begin{tabular}{lr}\n\\hline\ncheck & passed \\\\\n\\hline\n";
    for (const auto& s : report.checks)
        os << "\\texttt{" << check_name(s.check) << "} & " << s.passed << "/" << s.applicable << " \\\\\n";
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

}  // namespace pluck
