#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>

#include "truncmean/problem.hpp"

namespace truncmean {

// JSON problem document:
//   {
//     "mu": [..],
//     "sigma": [[..]] | "sigma_inv": [[..]] | "expcorr": {"n": int, "rho": real},
//     "bounds": [{"side": "left"|"right", "cut": real}, ..]
//   }
// Exactly one covariance source; bounds length matches mu. Numbers are IEEE
// doubles written with shortest round-trip decimals, so write/read is exact.
nlohmann::json problem_to_json(const Problem& problem);
Problem problem_from_json(const nlohmann::json& doc);

Problem read_problem_file(const std::filesystem::path& path);
void write_problem_file(const std::filesystem::path& path, const Problem& problem);

}  // namespace truncmean
