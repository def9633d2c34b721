#include "arbor/cover.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "arbor/errors.hpp"
#include "arbor/validity.hpp"

namespace arbor {

ForestCover make_cover(const Graph& g, int k, std::vector<VertexSet> forests) {
  return ForestCover{g.hash(), k, std::move(forests)};
}

const char* to_string(CoverViolation v) {
  switch (v) {
    case CoverViolation::none: return "none";
    case CoverViolation::not_a_forest: return "not an induced forest";
    case CoverViolation::small_component: return "component below strength";
    case CoverViolation::uncovered_edge: return "uncovered k-valid edge";
  }
  return "?";
}

std::vector<Edge> covered_edges(const Graph& g, const std::vector<VertexSet>& forests) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    for (VertexSet f : forests) {
      if (f.contains(e.u) && f.contains(e.v)) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

CoverVerdict verify_cover(const Graph& g, const ForestCover& cover) {
  if (cover.graph_hash != g.hash()) {
    throw InputError("cover was built for graph " + format_hash(cover.graph_hash) + ", not " +
                     g.hash_hex());
  }
  CoverVerdict verdict;
  for (int i = 0; i < cover.size(); ++i) {
    VertexSet f = cover.forests[i];
    if (!f.is_subset_of(g.vertices())) throw InputError("cover forest exceeds vertex range");
    ForestCheck check = is_induced_forest(g, f);
    std::ostringstream msg;
    if (!check.acyclic) {
      msg << "forest " << i << " " << f << " induces a cycle";
      return {false, CoverViolation::not_a_forest, i, {}, msg.str()};
    }
    for (const auto& c : check.components) {
      if (c.edges < cover.k) {
        msg << "forest " << i << " has component " << c.vertices << " with " << c.edges
            << " edge(s), below k=" << cover.k;
        return {false, CoverViolation::small_component, i, {}, msg.str()};
      }
    }
  }
  std::vector<Edge> covered = covered_edges(g, cover.forests);
  for (const Edge& e : k_valid_edges(g, cover.k)) {
    if (!std::binary_search(covered.begin(), covered.end(), e)) verdict.uncovered.push_back(e);
  }
  if (!verdict.uncovered.empty()) {
    std::ostringstream msg;
    msg << verdict.uncovered.size() << " k-valid edge(s) uncovered, first " << verdict.uncovered.front();
    verdict.valid = false;
    verdict.violation = CoverViolation::uncovered_edge;
    verdict.message = msg.str();
  }
  return verdict;
}

void require_valid(const Graph& g, const ForestCover& cover) {
  CoverVerdict v = verify_cover(g, cover);
  if (!v.valid) throw VerificationError("produced cover is invalid: " + v.message);
}

std::vector<VertexSet> merge_indexwise(const std::vector<std::vector<VertexSet>>& parts) {
  std::size_t width = 0;
  for (const auto& p : parts) width = std::max(width, p.size());
  std::vector<VertexSet> out(width);
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < p.size(); ++j) out[j] |= p[j];
  }
  return out;
}

std::vector<VertexSet> dedup_forests(std::vector<VertexSet> forests) {
  std::vector<VertexSet> out;
  for (VertexSet f : forests) {
    if (f.empty()) continue;
    if (std::find(out.begin(), out.end(), f) != out.end()) continue;
    out.push_back(f);
  }
  return out;
}

std::string cover_to_json(const ForestCover& cover) {
  nlohmann::ordered_json j;
  j["k"] = cover.k;
  j["graph_hash"] = format_hash(cover.graph_hash);
  auto forests = nlohmann::ordered_json::array();
  for (VertexSet f : cover.forests) forests.push_back(f.to_vector());
  j["forests"] = forests;
  return j.dump();
}

ForestCover cover_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("cover JSON: ") + e.what());
  }
  try {
    ForestCover cover;
    cover.k = j.at("k").get<int>();
    cover.graph_hash = std::stoull(j.at("graph_hash").get<std::string>(), nullptr, 16);
    for (const auto& f : j.at("forests")) {
      VertexSet s;
      for (const auto& v : f) {
        int x = v.get<int>();
        if (x < 0 || x >= kMaxVertices) throw InputError("cover JSON: vertex out of range");
        s.insert(x);
      }
      cover.forests.push_back(s);
    }
    return cover;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("cover JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("cover JSON: graph_hash is not hex");
  }
}

}  // namespace arbor
