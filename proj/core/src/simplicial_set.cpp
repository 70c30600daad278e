#include "kcat/kth/simplicial_set.hpp"

#include <algorithm>
#include <map>

#include "kcat/error.hpp"

namespace kcat::kth {

using cat::MorId;
using cat::ObjId;

std::size_t SimplicialSet::nondegenerate_count(std::size_t m) const {
  std::vector<bool> degenerate(size(m), false);
  if (m > 0)
    for (const auto& table : degeneracies.at(m - 1))
      for (std::uint32_t k : table) degenerate[k] = true;
  std::size_t n = 0;
  for (bool d : degenerate) n += !d;
  return n;
}

ValidationReport check_simplicial_identities(const SimplicialSet& s) {
  ValidationReport report;
  std::size_t failures = 0;
  auto fail = [&](const std::string& law, std::size_t m, std::size_t i, std::size_t j, std::size_t k) {
    if (failures++ < 12)
      report.add(law, "level " + std::to_string(m) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                          ", simplex " + std::to_string(k));
  };
  const auto& d = s.faces;
  const auto& sd = s.degeneracies;
  for (std::size_t m = 2; m <= s.truncation; ++m)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::size_t k = 0; k < s.size(m); ++k)
          if (d[m - 1][i][d[m][j][k]] != d[m - 1][j - 1][d[m][i][k]]) fail("face-face", m, i, j, k);
  for (std::size_t m = 0; m + 2 <= s.truncation; ++m)
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        for (std::size_t k = 0; k < s.size(m); ++k)
          if (sd[m + 1][i][sd[m][j][k]] != sd[m + 1][j + 1][sd[m][i][k]]) fail("degeneracy-degeneracy", m, i, j, k);
  // d_i s_j on level m, landing back on level m.
  for (std::size_t m = 0; m < s.truncation; ++m)
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t i = 0; i <= m + 1; ++i)
        for (std::size_t k = 0; k < s.size(m); ++k) {
          const std::uint32_t lhs = d[m + 1][i][sd[m][j][k]];
          std::uint32_t rhs;
          if (i == j || i == j + 1) {
            rhs = static_cast<std::uint32_t>(k);
          } else if (i < j) {
            rhs = sd[m - 1][j - 1][d[m][i][k]];
          } else {
            rhs = sd[m - 1][j][d[m][i - 1][k]];
          }
          if (lhs != rhs) fail("face-degeneracy", m, i, j, k);
        }
  if (failures > 12) report.note(std::to_string(failures - 12) + " further identity failures omitted");
  return report;
}

SimplicialSet nerve(const cat::FinCategory& c, std::size_t truncation) {
  using Chain = std::vector<std::uint32_t>;
  SimplicialSet s;
  s.truncation = truncation;
  std::vector<std::vector<Chain>> chains(truncation + 1);
  std::vector<std::map<Chain, std::uint32_t>> index(truncation + 1);

  for (ObjId o : c.objects()) chains[0].push_back({o.value});
  if (truncation >= 1)
    for (MorId f : c.morphisms()) chains[1].push_back({f.value});
  for (std::size_t m = 2; m <= truncation; ++m)
    for (const Chain& prefix : chains[m - 1]) {
      const ObjId end = c.target(MorId{prefix.back()});
      std::vector<std::uint32_t> next;
      for (ObjId o : c.objects())
        for (MorId g : c.hom(end, o)) next.push_back(g.value);
      std::sort(next.begin(), next.end());
      for (std::uint32_t g : next) {
        Chain ch = prefix;
        ch.push_back(g);
        chains[m].push_back(std::move(ch));
      }
    }
  for (std::size_t m = 0; m <= truncation; ++m) {
    std::sort(chains[m].begin(), chains[m].end());
    for (std::uint32_t k = 0; k < chains[m].size(); ++k) index[m].emplace(chains[m][k], k);
  }

  // Vertex x_i of a chain: x_0 = source(f_1), x_i = target(f_i).
  auto vertex = [&](const Chain& ch, std::size_t m, std::size_t i) -> ObjId {
    if (m == 0) return ObjId{ch[0]};
    return i == 0 ? c.source(MorId{ch[0]}) : c.target(MorId{ch[i - 1]});
  };

  s.labels.resize(truncation + 1);
  for (std::size_t m = 0; m <= truncation; ++m)
    for (const Chain& ch : chains[m]) {
      std::string label;
      if (m == 0) {
        label = c.object_name(ObjId{ch[0]});
      } else {
        for (std::size_t k = 0; k < ch.size(); ++k) label += (k ? " | " : "") + c.morphism_name(MorId{ch[k]});
      }
      s.labels[m].push_back(std::move(label));
    }

  s.faces.resize(truncation + 1);
  for (std::size_t m = 1; m <= truncation; ++m) {
    s.faces[m].assign(m + 1, std::vector<std::uint32_t>(chains[m].size()));
    for (std::size_t k = 0; k < chains[m].size(); ++k) {
      const Chain& ch = chains[m][k];
      for (std::size_t i = 0; i <= m; ++i) {
        Chain face;
        if (m == 1) {
          face = {vertex(ch, 1, i == 0 ? 1 : 0).value};
        } else if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
        } else if (i == m) {
          face.assign(ch.begin(), ch.end() - 1);
        } else {
          face = ch;
          face[i - 1] = compose(c, MorId{ch[i - 1]}, MorId{ch[i]}).value;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        }
        s.faces[m][i][k] = index[m - 1].at(face);
      }
    }
  }

  s.degeneracies.resize(truncation);
  for (std::size_t m = 0; m < truncation; ++m) {
    s.degeneracies[m].assign(m + 1, std::vector<std::uint32_t>(chains[m].size()));
    for (std::size_t k = 0; k < chains[m].size(); ++k) {
      const Chain& ch = chains[m][k];
      for (std::size_t i = 0; i <= m; ++i) {
        const std::uint32_t id = c.identity(vertex(ch, m, i)).value;
        Chain deg;
        if (m == 0) {
          deg = {id};
        } else {
          deg = ch;
          deg.insert(deg.begin() + static_cast<std::ptrdiff_t>(i), id);
        }
        s.degeneracies[m][i][k] = index[m + 1].at(deg);
      }
    }
  }
  return s;
}

}  // namespace kcat::kth
