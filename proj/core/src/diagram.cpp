#include "kcat/cat/diagram.hpp"

#include <algorithm>
#include <set>

#include "kcat/error.hpp"

namespace kcat::cat {

std::string Diagram::node_name(std::size_t i) const {
  if (i < node_names.size() && !node_names[i].empty()) return node_names[i];
  return "n" + std::to_string(i);
}

CommutativityReport check_commutes(const Diagram& d) {
  if (!d.host) throw StructuralError("diagram has no host category");
  const auto& c = *d.host;
  const std::size_t n = d.nodes.size();
  std::vector<std::vector<std::size_t>> out_edges(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& edge = d.edges[e];
    if (edge.from >= n || edge.to >= n) throw StructuralError("edge " + std::to_string(e) + " references a missing node");
    if (!edge.label)
      throw StructuralError("edge " + d.node_name(edge.from) + " → " + d.node_name(edge.to) + " is unlabeled");
    if (c.source(*edge.label) != d.nodes[edge.from] || c.target(*edge.label) != d.nodes[edge.to])
      throw StructuralError("edge " + d.node_name(edge.from) + " → " + d.node_name(edge.to) + " is labelled by " +
                            c.morphism_name(*edge.label) + " whose endpoints do not match the nodes");
    out_edges[edge.from].push_back(e);
    ++indegree[edge.to];
  }

  // Kahn's algorithm; a leftover node means a directed cycle.
  std::vector<std::size_t> order;
  {
    std::vector<std::size_t> deg = indegree;
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
      if (deg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end(), std::greater<>());
      const std::size_t u = ready.back();
      ready.pop_back();
      order.push_back(u);
      for (auto e : out_edges[u])
        if (--deg[d.edges[e].to] == 0) ready.push_back(d.edges[e].to);
    }
    if (order.size() != n) throw StructuralError("diagram has a directed cycle");
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  CommutativityReport report;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::set<MorId>> reach(n);
    reach[s].insert(c.identity(d.nodes[s]));
    for (std::size_t k = position[s]; k < n; ++k) {
      const std::size_t u = order[k];
      if (reach[u].empty()) continue;
      for (auto e : out_edges[u]) {
        const auto& edge = d.edges[e];
        for (MorId m : reach[u]) reach[edge.to].insert(compose(c, m, *edge.label));
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (reach[t].size() > 1) {
        auto it = reach[t].begin();
        const MorId first = *it++;
        const MorId second = *it;
        report.commutes = false;
        report.nodes = {s, t};
        report.composites = {first, second};
        report.witness = "paths " + d.node_name(s) + " → " + d.node_name(t) + " compose to " + c.morphism_name(first) +
                         " and " + c.morphism_name(second);
        return report;
      }
    }
  }
  return report;
}

std::size_t staircase_node(std::size_t level, std::size_t i, std::size_t j) {
  // Rows 0..i-1 contribute (level+1) + level + ... entries.
  std::size_t index = 0;
  for (std::size_t r = 0; r < i; ++r) index += level + 1 - r;
  return index + (j - i);
}

Diagram staircase_diagram(const CategoryPtr& host, const StaircaseData& data) {
  Diagram d;
  d.host = host;
  const std::size_t n = data.level;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      auto it = data.objects.find({i, j});
      if (it == data.objects.end())
        throw StructuralError("staircase is missing object A(" + std::to_string(i) + "," + std::to_string(j) + ")");
      d.nodes.push_back(it->second);
      d.node_names.push_back("A(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (j + 1 <= n) {
        auto it = data.horizontal.find({i, j});
        if (it == data.horizontal.end())
          throw StructuralError("staircase is missing horizontal arrow at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        d.edges.push_back({staircase_node(n, i, j), staircase_node(n, i, j + 1), it->second});
      }
      if (i + 1 <= j) {
        auto it = data.vertical.find({i, j});
        if (it == data.vertical.end())
          throw StructuralError("staircase is missing vertical arrow at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        d.edges.push_back({staircase_node(n, i, j), staircase_node(n, i + 1, j), it->second});
      }
    }
  return d;
}

}  // namespace kcat::cat
