#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "pluck/combinat.hpp"
#include "pluck/dpoly.hpp"
#include "pluck/plucker.hpp"
#include "pluck/schur.hpp"

namespace pluck {

enum class OutputFormat { Plain, Json, Latex };

/// "plain", "json" or "latex"; throws InputError otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Dense coefficient list ["c0", "c1", ...] of rational strings.
nlohmann::json dpoly_to_json(const DPoly& p);
/// Strict inverse of dpoly_to_json: canonical rationals only, no trailing zero.
DPoly dpoly_from_json(const nlohmann::json& j);

/// {"partition":[...], "codim":c, "terms":[{"rho":[r1,r2], "coeff":[...]}]}
/// with terms ordered by pi2 ascending.
nlohmann::json class_to_json(const InputPartition& lambda, const PolyClass& cls);

/// Parses and revalidates a class document: parts >= 2, codim consistent
/// with the partition, every rho a two-row partition of codim, no duplicate
/// rho, coefficient lists in canonical form. Throws InputError on failure.
std::pair<InputPartition, PolyClass> class_from_json(const nlohmann::json& j);

/// "Y[2](d) = (d^2 - d) * s[1,0]".
std::string class_to_plain(const InputPartition& lambda, const PolyClass& cls);
std::string class_to_latex(const InputPartition& lambda, const PolyClass& cls);

/// "Pl[3;2]" for lambda = (3), codim index 2.
std::string plucker_label(const InputPartition& lambda, int codim_index);

/// One "Pl[3;2] = d^3-3d^2+2d" line per row.
std::string table_to_plain(const PluckerTable& table);
nlohmann::json table_to_json(const PluckerTable& table);
std::string table_to_latex(const PluckerTable& table);

nlohmann::json partition_to_json(const InputPartition& lambda);

}  // namespace pluck
