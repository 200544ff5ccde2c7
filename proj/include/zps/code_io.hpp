#pragma once

#include <string>

#include <json.hpp>

#include "zps/limits.hpp"
#include "zps/matrix.hpp"
#include "zps/rank_code.hpp"

namespace zps {

using ordered_json = nlohmann::ordered_json;

// Matrix files: {"p":..,"s":..,"m":..,"n":..,"entries":[[row],...]} with
// entries already reduced into [0, p^s). Key order is fixed so identical
// inputs serialize byte-identically.
ordered_json matrix_to_json(const MatZ& a);
MatZ matrix_from_json(const ordered_json& j);

void save_matrix(const MatZ& a, const std::string& path);
MatZ load_matrix(const std::string& path);

// Code files add d, an optional "linear" flag, and the word list in the
// container order (sorted row-major).
ordered_json code_to_json(const RankCode& code);
RankCode code_from_json(const ordered_json& j, const Limits& limits = {});

void save_code(const RankCode& code, const std::string& path);
RankCode load_code(const std::string& path, const Limits& limits = {});

}  // namespace zps
