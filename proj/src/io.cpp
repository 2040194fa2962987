#include "bei/io.hpp"

#include <sstream>
#include <stdexcept>

namespace bei {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"d", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"d\" and \"edges\"");
  if (!j["d"].is_number_integer()) throw std::invalid_argument("\"d\" must be an integer");
  if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("edge " + e.dump() + " is not a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(j["d"].get<int>(), edges);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<int> d;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!d) {
      int n;
      std::string rest;
      if (!(ls >> n) || (ls >> rest))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex count");
      d = n;
      continue;
    }
    int u, v;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected \"i j\"");
    edges.emplace_back(u, v);
  }
  if (!d) throw std::invalid_argument("empty graph text");
  return make_graph(*d, edges);
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("invalid graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_text(text);
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json optional_labeling(const std::optional<Labeling>& l) {
  return l ? Json(l->perm) : Json(nullptr);
}

}  // namespace

Json report_to_json(const std::vector<MinimalPrime>& primes, const Classification& c,
                    const std::optional<LabelingSummary>& labelings) {
  Json cuts = Json::array();
  for (const auto& q : primes)
    cuts.push_back({{"S", q.cut_set}, {"components", q.components}, {"height", q.height}});
  Json out{{"cutSets", std::move(cuts)},
           {"assCount", c.ass_count},
           {"unmixed", c.unmixed},
           {"accessible", c.accessible},
           {"traceable", c.traceable}};
  if (labelings) {
    out["weaklyClosed"] = optional_bool(labelings->weakly_closed);
    out["weaklyClosedLabeling"] = optional_labeling(labelings->weakly_closed_labeling);
    out["closed"] = optional_bool(labelings->closed);
    out["closedLabeling"] = optional_labeling(labelings->closed_labeling);
  }
  return out;
}

Json certificate_to_json(const Certificate& cert) {
  Json witness = Json::array();
  for (const auto& a : cert.witness.atoms) witness.push_back(to_string(a));
  Json per = Json::array();
  for (const auto& pb : cert.per_prime)
    per.push_back({{"S", pb.prime.cut_set},
                   {"height", pb.prime.height},
                   {"required", pb.required},
                   {"bound", pb.bound}});
  Json out{{"kind", to_string(cert.kind)},
           {"p", cert.p},
           {"witness", std::move(witness)}};
  if (cert.cofactor_index) {
    out["cofactorIndex"] = *cert.cofactor_index;
    out["cofactor"] = to_string(cert.witness.atoms[*cert.cofactor_index]);
  }
  out["perPrime"] = std::move(per);
  out["frobeniusOk"] = cert.frobenius_ok;
  out["verdict"] = to_string(cert.verdict);
  out["assumptions"] = cert.assumptions;
  out["labelingUsed"] = cert.labeling_used.perm;
  if (cert.blocking) {
    const auto& pb = cert.per_prime[*cert.blocking];
    out["blocking"] = {{"S", pb.prime.cut_set}, {"deficit", cert.deficit}};
  }
  out["labelingsTried"] = cert.labelings_tried;
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace bei
