#pragma once

// JSON views of the enumeration results, consumed by the CLI and the
// acceptance tooling.

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

#include "grace/constrained.hpp"
#include "grace/graceful.hpp"
#include "grace/lattice.hpp"
#include "grace/monomial.hpp"
#include "grace/stock.hpp"

namespace grace {

nlohmann::json monomial_report(int n, const MonomialClassification& mc);

nlohmann::json catalog_report(const GracefulCatalog& cat,
                              const std::map<std::string, std::uint32_t>& class_counts);

nlohmann::json stock_report(const Stock& stock);

nlohmann::json special_graceful_json(const SpecialGracefulReport& rep);

nlohmann::json coverage_json(const CoverageReport& rep);

const char* outcome_name(SearchOutcome outcome);

nlohmann::json constrained_json(SearchOutcome outcome, const SearchStats& stats, int max_degree,
                                const LatticePath* found);

}  // namespace grace
