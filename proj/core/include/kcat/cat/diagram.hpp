#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcat/cat/category.hpp"

namespace kcat::cat {

struct DiagramEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<MorId> label;
};

/// A finite directed acyclic graph labelled by objects and morphisms of a
/// host category.
struct Diagram {
  CategoryPtr host;
  std::vector<ObjId> nodes;
  std::vector<std::string> node_names;  // optional; empty means "n<index>"
  std::vector<DiagramEdge> edges;

  std::string node_name(std::size_t i) const;
};

struct CommutativityReport {
  bool commutes = true;
  /// First offending ordered node pair and two distinct composites.
  std::optional<std::pair<std::size_t, std::size_t>> nodes;
  std::optional<std::pair<MorId, MorId>> composites;
  std::string witness;
};

/// Every pair of directed paths with common endpoints composes to the same
/// morphism. Throws StructuralError for unlabeled edges, edges whose morphism
/// endpoints disagree with the node labels, and directed cycles.
CommutativityReport check_commutes(const Diagram& d);

/// Staircase diagram of level n: nodes A(i,j) for 0 <= i <= j <= n, horizontal
/// edges A(i,j) → A(i,j+1) and vertical edges A(i,j) → A(i+1,j).
struct StaircaseData {
  std::size_t level = 0;
  std::map<std::pair<std::size_t, std::size_t>, ObjId> objects;
  std::map<std::pair<std::size_t, std::size_t>, MorId> horizontal;
  std::map<std::pair<std::size_t, std::size_t>, MorId> vertical;
};

/// Node index of A(i,j) inside staircase_diagram's output.
std::size_t staircase_node(std::size_t level, std::size_t i, std::size_t j);

/// Throws StructuralError naming the first missing object or arrow.
Diagram staircase_diagram(const CategoryPtr& host, const StaircaseData& data);

}  // namespace kcat::cat
