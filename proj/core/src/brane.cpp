#include "kcat/brane/brane.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kcat/complex/cochain.hpp"
#include "kcat/error.hpp"

namespace kcat::brane {

namespace {

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& whole) {
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const auto& s : sub.simplices(static_cast<std::size_t>(d)))
      if (!whole.contains(s)) return false;
  return true;
}

std::string simplex_name(const complex::Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

void require_valid(const BraneConfig& cfg) {
  const auto r = cfg.validate();
  if (!r.ok()) throw StructuralError(r.violations.front().law + ": " + r.violations.front().witness);
}

std::vector<Int> check_cocycle(const complex::CochainComplex& c, const SimplicialComplex& host,
                               const std::vector<Int>& cochain, const std::string& what) {
  if (cochain.size() != host.count(3))
    throw StructuralError(what + " has " + std::to_string(cochain.size()) + " values for " +
                          std::to_string(host.count(3)) + " 3-simplices");
  if (c.ranks.size() > 4) {
    const auto d = c.apply(3, cochain);
    if (std::any_of(d.begin(), d.end(), [](Int v) { return v != 0; }))
      throw InvariantViolation(what + " is not a cocycle");
  }
  return cochain;
}

complex::CohomologyDegree h3(const complex::CochainComplex& c) {
  if (c.ranks.size() < 4) return {3, kth::AbelianGroupPresentation::free(0), IntMatrix(0, 0), IntMatrix(0, 0)};
  auto all = complex::cohomology_detailed(c);
  return all[3];
}

}  // namespace

ValidationReport BraneConfig::validate() const {
  ValidationReport r;
  std::set<std::string> seen;
  for (const auto& b : branes) {
    if (!seen.insert(b.id).second) r.add("unique-ids", b.id);
    if (b.stack == 0) r.add("stack-positive", b.id);
    if (b.region.empty()) r.add("region-nonempty", b.id);
    if (!is_subcomplex(b.region, host)) r.add("region-in-host", b.id);
  }
  return r;
}

std::size_t BraneConfig::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < branes.size(); ++i)
    if (branes[i].id == id) return i;
  throw StructuralError("unknown brane '" + id + "'");
}

bool BraneConfig::intersects(std::size_t a, std::size_t b) const {
  const auto& va = branes.at(a).region.simplices(0);
  const auto& vb = branes.at(b).region.simplices(0);
  // Both vertex lists are sorted.
  std::size_t i = 0, j = 0;
  while (i < va.size() && j < vb.size()) {
    if (va[i] == vb[j]) return true;
    if (va[i] < vb[j])
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<std::vector<bool>> BraneConfig::intersection_relation() const {
  std::vector<std::vector<bool>> rel(branes.size(), std::vector<bool>(branes.size(), false));
  for (std::size_t a = 0; a < branes.size(); ++a)
    for (std::size_t b = a; b < branes.size(); ++b) rel[a][b] = rel[b][a] = intersects(a, b);
  return rel;
}

std::size_t GaugeGroupExpr::total_rank() const { return std::accumulate(factors.begin(), factors.end(), std::size_t{0}); }

std::string GaugeGroupExpr::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x U(" : "U(") + std::to_string(factors[i]) + ")";
  return out;
}

GaugeGroupExpr gauge_group(const BraneConfig& cfg) {
  require_valid(cfg);
  const std::size_t n = cfg.branes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cfg.intersects(a, b)) parent[find(a)] = find(b);
  std::map<std::size_t, std::size_t> stacks;
  for (std::size_t a = 0; a < n; ++a) stacks[find(a)] += cfg.branes[a].stack;
  GaugeGroupExpr g;
  for (const auto& [root, total] : stacks) g.factors.push_back(total);
  std::sort(g.factors.rbegin(), g.factors.rend());
  return g;
}

bool loop_nontrivial(const StringConfig& s, const BraneConfig& cfg) {
  const auto a = cfg.index_of(s.start);
  const auto b = cfg.index_of(s.end);
  return a == b || cfg.intersects(a, b);
}

TwistClass twist_class(const TwistAssignment& t) {
  const auto c = complex::cochain_from_simplicial(t.host, Ring::integers());
  check_cocycle(c, t.host, t.cochain, "twist");
  const auto h = h3(c);
  TwistClass out;
  out.group = h.group.normal_form();
  if (c.ranks.size() < 4) return out;
  const auto coords = complex::class_coordinates(c, h, t.cochain);
  if (!coords) throw InvariantViolation("twist is not a cocycle");
  out.coordinates = *coords;
  out.trivial = std::all_of(out.coordinates.begin(), out.coordinates.end(), [](Int v) { return v == 0; });
  return out;
}

std::vector<Int> pullback(const SimplicialMap& m, const SimplicialComplex& source, const SimplicialComplex& target,
                          std::size_t degree, const std::vector<Int>& cochain) {
  if (cochain.size() != target.count(degree))
    throw StructuralError("cochain has " + std::to_string(cochain.size()) + " values for " +
                          std::to_string(target.count(degree)) + " target simplices");
  for (int d = 0; d <= source.dimension(); ++d) {
    for (const auto& s : source.simplices(static_cast<std::size_t>(d))) {
      complex::Simplex image;
      for (auto v : s) {
        const auto it = m.find(v);
        if (it == m.end()) throw StructuralError("vertex " + std::to_string(v) + " has no image");
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!target.contains(image))
        throw StructuralError("image of " + simplex_name(s) + " is not a simplex of the target");
    }
  }
  std::vector<Int> out(source.count(degree), 0);
  const auto& simplices = source.simplices(degree);
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    complex::Simplex image;
    for (auto v : simplices[k]) image.push_back(m.at(v));
    // Sign of the permutation sorting the image; degenerate images pull back to 0.
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i)
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] == image[j]) sign = 0;
        if (image[i] > image[j]) sign = -sign;
      }
    if (sign == 0) continue;
    std::sort(image.begin(), image.end());
    out[k] = sign * cochain[*target.index_of(image)];
  }
  return out;
}

bool morphism_preserves_twist(const SimplicialMap& m, const TwistAssignment& t, const TwistAssignment& t_prime) {
  const auto cq = complex::cochain_from_simplicial(t.host, Ring::integers());
  const auto cq2 = complex::cochain_from_simplicial(t_prime.host, Ring::integers());
  check_cocycle(cq, t.host, t.cochain, "source twist");
  check_cocycle(cq2, t_prime.host, t_prime.cochain, "target twist");
  const auto pulled = pullback(m, t.host, t_prime.host, 3, t_prime.cochain);
  if (cq.ranks.size() < 4) return true;
  std::vector<Int> diff(pulled.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = t.cochain[i] - pulled[i];
  const auto coords = complex::class_coordinates(cq, h3(cq), diff);
  if (!coords) throw InvariantViolation("pulled back twist is not a cocycle");
  return std::all_of(coords->begin(), coords->end(), [](Int v) { return v == 0; });
}

StaircaseCheck brane_staircase(const cat::CategoryPtr& host, const cat::StaircaseData& generators, std::size_t n) {
  StaircaseCheck out;
  out.diagram.host = host;
  if (n == 0) return out;
  auto data = generators;
  data.level = n;
  out.diagram = cat::staircase_diagram(host, data);
  out.commutes = cat::check_commutes(out.diagram);
  return out;
}

std::string ExtensionRankReport::to_string() const {
  return std::to_string(dim_u_n) + " = " + std::to_string(dim_u1) + " + " + std::to_string(dim_pu_n);
}

ExtensionRankReport extension_rank_check(std::size_t n) {
  if (n == 0) throw StructuralError("extension rank needs N >= 1");
  ExtensionRankReport r;
  r.n = n;
  r.dim_u_n = n * n;
  r.dim_u1 = 1;
  r.dim_pu_n = n * n - 1;
  r.additive = r.dim_u_n == r.dim_u1 + r.dim_pu_n;
  return r;
}

}  // namespace kcat::brane
