#include "kcat/complex/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "kcat/error.hpp"

namespace kcat::complex {

namespace {

std::string show(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out + "}";
}

Simplex sorted_checked(Simplex s) {
  if (s.empty()) throw StructuralError("empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw StructuralError("repeated vertex in simplex " + show(s));
  return s;
}

}  // namespace

void SimplicialComplex::index() {
  index_.assign(by_dim_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    std::sort(by_dim_[d].begin(), by_dim_[d].end());
    for (std::size_t k = 0; k < by_dim_[d].size(); ++k) index_[d].emplace(by_dim_[d][k], k);
  }
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  for (const auto& f : facets) {
    const Simplex s = sorted_checked(f);
    const std::size_t n = s.size();
    // Every nonempty subset.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  for (const auto& s : all) {
    if (k.by_dim_.size() < s.size()) k.by_dim_.resize(s.size());
    k.by_dim_[s.size() - 1].push_back(s);
  }
  k.index();
  return k;
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (const auto& raw : simplices) {
    const Simplex s = sorted_checked(raw);
    if (!all.insert(s).second) throw StructuralError("duplicate simplex " + show(s));
  }
  for (const auto& s : all) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      if (!all.count(face)) throw StructuralError("face " + show(face) + " of " + show(s) + " is missing");
    }
  }
  SimplicialComplex k;
  for (const auto& s : all) {
    if (k.by_dim_.size() < s.size()) k.by_dim_.resize(s.size());
    k.by_dim_[s.size() - 1].push_back(s);
  }
  k.index();
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t dim) const {
  static const std::vector<Simplex> none;
  return dim < by_dim_.size() ? by_dim_[dim] : none;
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& m = index_[s.size() - 1];
  const auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[d].size());
  return chi;
}

std::uint32_t SimplicialComplex::max_vertex() const {
  if (by_dim_.empty()) return 0;
  return by_dim_[0].back()[0];
}

SimplicialComplex barycentric_refine(const SimplicialComplex& k) {
  std::vector<Simplex> all;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(static_cast<std::size_t>(d))) all.push_back(s);
  std::map<Simplex, std::uint32_t> id;
  for (std::uint32_t i = 0; i < all.size(); ++i) id.emplace(all[i], i);

  // Maximal chains σ_0 ⊂ σ_1 ⊂ ... ending at each simplex: grow downwards
  // by removing one vertex at a time.
  std::vector<Simplex> facets;
  std::vector<Simplex> chain;
  auto descend = [&](auto&& self, const Simplex& s) -> void {
    chain.push_back(s);
    if (s.size() == 1) {
      Simplex f;
      for (const auto& c : chain) f.push_back(id.at(c));
      facets.push_back(std::move(f));
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        self(self, face);
      }
    }
    chain.pop_back();
  };
  for (const auto& s : all) descend(descend, s);
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex collapse_subcomplex(const SimplicialComplex& whole, const SimplicialComplex& sub) {
  std::vector<Simplex> facets;
  for (int d = 0; d <= whole.dimension(); ++d)
    for (const auto& s : whole.simplices(static_cast<std::size_t>(d))) facets.push_back(s);
  if (sub.empty()) return whole;
  const std::uint32_t apex = whole.max_vertex() + 1;
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const auto& s : sub.simplices(static_cast<std::size_t>(d))) {
      if (!whole.contains(s)) throw StructuralError("collapsed complex is not a subcomplex");
      Simplex cone = s;
      cone.push_back(apex);
      facets.push_back(std::move(cone));
    }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex simplex_boundary(std::size_t n) {
  std::vector<Simplex> facets;
  for (std::uint32_t skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (std::uint32_t v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex solid_simplex(std::size_t n) {
  Simplex f;
  for (std::uint32_t v = 0; v <= n; ++v) f.push_back(v);
  return SimplicialComplex::from_facets({f});
}

SimplicialComplex minimal_torus() {
  std::vector<Simplex> facets;
  for (std::uint32_t i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace kcat::complex
