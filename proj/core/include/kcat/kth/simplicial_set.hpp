#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcat/cat/category.hpp"
#include "kcat/report.hpp"

namespace kcat::kth {

/// Truncated simplicial set stored as index tables.
///
/// Level m holds `size(m)` simplices. faces[m][i][k] is the index of d_i of
/// simplex k at level m (1 <= m <= T, 0 <= i <= m); degeneracies[m][i][k] is
/// the index of s_i of simplex k at level m (0 <= m < T, 0 <= i <= m).
struct SimplicialSet {
  std::size_t truncation = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;
  std::vector<std::vector<std::vector<std::uint32_t>>> degeneracies;

  std::size_t size(std::size_t m) const { return labels.at(m).size(); }
  /// Simplices at level m not in the image of any degeneracy.
  std::size_t nondegenerate_count(std::size_t m) const;
};

/// Every face–face, degeneracy–degeneracy and face–degeneracy identity on
/// every stored level.
ValidationReport check_simplicial_identities(const SimplicialSet& s);

/// N_m lists the chains of m composable morphisms in lexicographic order of
/// morphism ids; N_0 lists the objects. Face d_0 drops the first arrow, d_m
/// the last, inner faces compose; s_i inserts an identity.
SimplicialSet nerve(const cat::FinCategory& c, std::size_t truncation);

}  // namespace kcat::kth
