#include "pluck/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "pluck/crs.hpp"
#include "pluck/errors.hpp"

namespace pluck {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    throw InputError("unknown output format '" + name + "'");
}

json dpoly_to_json(const DPoly& p) {
    json out = json::array();
    for (const Rat& c : dense_coefficients(p)) out.push_back(c.to_string());
    return out;
}

DPoly dpoly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("coefficient list must be an array");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_string()) throw InputError("coefficients must be rational strings");
        try {
            coeffs.push_back(Rat::parse(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (!coeffs.empty() && coeffs.back().is_zero()) throw InputError("coefficient list has a trailing zero");
    return DPoly::dense(coeffs);
}

json partition_to_json(const InputPartition& lambda) {
    json parts = json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    return parts;
}

json class_to_json(const InputPartition& lambda, const PolyClass& cls) {
    json terms = json::array();
    for (const auto& [rho, coeff] : cls.terms())
        terms.push_back({{"rho", {rho.r1, rho.r2}}, {"coeff", dpoly_to_json(coeff)}});
    return {{"partition", partition_to_json(lambda)}, {"codim", cls.weight()}, {"terms", std::move(terms)}};
}

namespace {

int read_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

std::pair<InputPartition, PolyClass> class_from_json(const json& j) {
    if (!j.is_object()) throw InputError("class document must be an object");
    for (const char* field : {"partition", "codim", "terms"})
        if (!j.contains(field)) throw InputError(std::string("class document lacks '") + field + "'");

    const json& parts_json = j.at("partition");
    if (!parts_json.is_array()) throw InputError("'partition' must be an array");
    std::vector<int> parts;
    for (const auto& p : parts_json) parts.push_back(read_int(p, "partition part"));
    InputPartition lambda(parts);
    if (lambda.parts() != parts) throw InputError("'partition' must be weakly decreasing");

    const int codim = read_int(j.at("codim"), "'codim'");
    if (codim != lambda.codim())
        throw InputError("codim " + std::to_string(codim) + " does not match partition " + lambda.key());

    const json& terms = j.at("terms");
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    PolyClass cls(codim);
    std::set<TwoRowPartition> seen;
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("rho") || !term.contains("coeff"))
            throw InputError("each term needs 'rho' and 'coeff'");
        const json& rho_json = term.at("rho");
        if (!rho_json.is_array() || rho_json.size() != 2) throw InputError("'rho' must be a pair");
        const int r1 = read_int(rho_json[0], "rho entry");
        const int r2 = read_int(rho_json[1], "rho entry");
        if (r2 < 0 || r1 < r2) throw InputError("'rho' must satisfy r1 >= r2 >= 0");
        const TwoRowPartition rho(r1, r2);
        if (rho.weight() != codim) throw InputError("term " + schur_label(rho) + " has the wrong weight");
        if (!seen.insert(rho).second) throw InputError("duplicate term " + schur_label(rho));
        const DPoly coeff = dpoly_from_json(term.at("coeff"));
        if (coeff.is_zero()) throw InputError("term " + schur_label(rho) + " has a zero coefficient");
        cls.add(rho, coeff);
    }
    return {lambda, cls};
}

std::string class_to_plain(const InputPartition& lambda, const PolyClass& cls) {
    std::string out = "Y[" + lambda.key() + "](d) = ";
    if (cls.is_zero()) return out + "0";
    bool first = true;
    for (const auto& [rho, coeff] : cls.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + to_text(coeff) + ") * " + schur_label(rho);
    }
    return out;
}

std::string class_to_latex(const InputPartition& lambda, const PolyClass& cls) {
    std::string out = "\\left[\\overline{Y}_{" + lambda.key() + "}(d)\\right] = ";
    if (cls.is_zero()) return out + "0";
    bool first = true;
    for (const auto& [rho, coeff] : cls.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "\\left(" + to_latex(coeff) + "\\right) s_{" + std::to_string(rho.r1) + "," + std::to_string(rho.r2) + "}";
    }
    return out;
}

std::string plucker_label(const InputPartition& lambda, int codim_index) {
    return "Pl[" + lambda.key() + ";" + std::to_string(codim_index) + "]";
}

std::string table_to_plain(const PluckerTable& table) {
    std::string out;
    for (const auto& row : table.rows)
        out += plucker_label(table.lambda, row.formula.codim_index) + " = " + to_text(row.formula.formula, true) + "\n";
    return out;
}

json table_to_json(const PluckerTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        const DPoly& f = row.formula.formula;
        rows.push_back({
            {"j", row.formula.j},
            {"codim_index", row.formula.codim_index},
            {"formula", dpoly_to_json(f)},
            {"degree", f.is_zero() ? json(nullptr) : json(f.degree())},
            {"leading_coefficient", f.leading_coefficient().to_string()},
            {"predicted_degree", row.prediction.degree},
            {"predicted_leading_coefficient", row.prediction.coefficient.to_string()},
            {"regime", regime_name(row.prediction.regime)},
            {"verdict", row.verdict.match ? "match" : "mismatch"},
        });
        if (!row.verdict.match) rows.back()["details"] = row.verdict.details;
    }
    const int threshold = table.rows.empty() ? 0 : table.rows.front().prediction.threshold_pi2;
    return {{"partition", partition_to_json(table.lambda)},
            {"codim", table.lambda.codim()},
            {"validity_floor", table.lambda.weight()},
            {"threshold_pi2", threshold},
            {"rows", std::move(rows)}};
}

std::string table_to_latex(const PluckerTable& table) {
    std::string out = "\\begin{align*}\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        out += "  \\mathrm{Pl}_{" + table.lambda.key() + ";" + std::to_string(row.formula.codim_index) +
               "}(d) &= " + to_latex(row.formula.formula);
        out += i + 1 < table.rows.size() ? " \\\\\n" : "\n";
    }
    return out + "\\end{align*}\n";
}

namespace {

// Cheap consistency check on a loaded class: its top d-degree part must be
// h_{reduction} / prod e_i! at degree |lambda|.
void check_top_degree(const InputPartition& lambda, const PolyClass& cls) {
    RatClass top = cls.map_coefficients([&](const DPoly& p) {
        if (p.degree() > lambda.weight()) throw InputError("coefficient degree exceeds |lambda|");
        return p.coefficient(lambda.weight());
    });
    RatClass expected = complete_homogeneous_class(lambda.reduction());
    expected *= Rat(BigInt(1), lambda.multiplicity_factorial());
    if (!(top == expected)) throw InputError("top-degree part does not match");
}

}  // namespace

ClassCache::LoadReport ClassCache::load(const std::filesystem::path& path) {
    LoadReport report;
    std::ifstream in(path);
    if (!in) {
        if (!std::filesystem::exists(path)) return report;
        throw InputError("cannot read cache file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("cache file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw InputError("cache file " + path.string() + " must hold a JSON object");

    for (const auto& [key, value] : doc.items()) {
        try {
            auto [lambda, cls] = class_from_json(value);
            if (lambda.key() != key || lambda.empty()) throw InputError("key does not match partition");
            check_top_degree(lambda, cls);
            insert(lambda, std::move(cls));
            ++report.accepted;
        } catch (const Error&) {
            ++report.rejected;
        }
    }
    return report;
}

void ClassCache::save(const std::filesystem::path& path) const {
    json doc = json::object();
    for (const auto& [key, cls] : snapshot()) doc[key] = class_to_json(InputPartition::parse(key), *cls);

    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InputError("cannot write cache file " + tmp.string());
        out << doc.dump() << "\n";
        if (!out) throw InputError("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace pluck
