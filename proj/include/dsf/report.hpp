#pragma once

#include "dsf/dsf.hpp"
#include "dsf/triples.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace dsf {

inline constexpr std::string_view kReportSchema = "dsf-report/1";

nlohmann::json graph_json(const Graph& g);
nlohmann::json breaking_pair_json(const BreakingPair& p, const ForbiddenSet& f);
nlohmann::json sieve_json(const SieveResult& r);

/// Timings are left out when `timings` is false so that reruns compare equal.
nlohmann::json report_json(const SearchReport& r, bool timings = true);
nlohmann::json theorem_json(const TriplesTheorem& t, bool timings = true);

std::string render_text(const SearchReport& r);
std::string render_text(const TriplesTheorem& t);

/// Header line, then one row per entry: graph6 of H, graph6 of H', degree
/// sequence of H, number of candidates that used the pair.
std::string catalog_csv(const std::vector<CatalogEntry>& catalog);
/// Inverse of catalog_csv; throws ParseError on malformed input.
std::vector<CatalogEntry> parse_catalog_csv(std::string_view text);

std::string triple_name(const std::array<Graph, 3>& t);

}  // namespace dsf
