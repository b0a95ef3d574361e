#pragma once

#include "limitset/census.hpp"
#include "limitset/isometry.hpp"
#include "limitset/types.hpp"

#include <string>

namespace limitset {

// Point exchange format: JSON array of n+1 two-element arrays [re, im].
CVec parse_point_json(const std::string& text);
std::string point_to_json(const CVec& z);

// Matrix exchange format: first line "n=<int>", then n+1 rows of n+1
// comma-separated decimal doubles, row-major.
void write_matrix_csv(const IsometryMatrix& a, const std::string& path);
IsometryMatrix read_matrix_csv(const std::string& path);

std::string census_report_json(const CensusReport& rep);

}  // namespace limitset
