#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bei/certify.hpp"
#include "bei/graph.hpp"
#include "bei/primes.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

/// {"d": n, "edges": [[i,j], ...]} with edges sorted.
Json graph_to_json(const Graph& g);
/// Throws std::invalid_argument on a malformed document.
Graph graph_from_json(const Json& j);

/// First line d, then one "i j" pair per line.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

/// Accepts either format: a document starting with '{' is read as JSON.
Graph parse_graph(const std::string& text);

struct LabelingSummary {
  /// nullopt when the search ran out of budget.
  std::optional<bool> weakly_closed;
  std::optional<bool> closed;
  std::optional<Labeling> weakly_closed_labeling;
  std::optional<Labeling> closed_labeling;
};

Json report_to_json(const std::vector<MinimalPrime>& primes, const Classification& c,
                    const std::optional<LabelingSummary>& labelings = std::nullopt);

Json certificate_to_json(const Certificate& cert);

/// Compact serialization followed by a newline.
std::string dump(const Json& j);

}  // namespace bei
