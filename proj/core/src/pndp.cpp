#include "kcat/pndp/pndp.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "kcat/error.hpp"

namespace kcat::pndp {

namespace {

void require_axioms(const FiniteTopSpace& t) {
  const auto r = t.check_axioms();
  if (!r.ok()) throw StructuralError("not a topology: " + r.violations.front().law + " " + r.violations.front().witness);
}

std::string mask_name(const FiniteTopSpace& t, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < t.points.size(); ++i)
    if (mask >> i & 1u) {
      out += (first ? "" : ",") + t.points[i];
      first = false;
    }
  return out + "}";
}

}  // namespace

VirtualDimension virtual_dimension(const PNDPSpec& s) {
  if (s.dim_b1 < 0 || s.dim_b2 < 0 || s.fiber_dims < 0 || s.rank_e < 0)
    throw StructuralError("PNDP dimensions must be non-negative");
  VirtualDimension v;
  v.dim_f = s.fiber_dims - s.rank_e;
  v.dim_m = s.dim_b() + v.dim_f;
  return v;
}

std::uint64_t FiniteTopSpace::whole() const {
  return points.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << points.size()) - 1;
}

ValidationReport FiniteTopSpace::check_axioms() const {
  ValidationReport r;
  if (points.size() > 64) {
    r.add("point-count", std::to_string(points.size()) + " > 64");
    return r;
  }
  const std::unordered_set<std::uint64_t> set(opens.begin(), opens.end());
  if (!set.count(0)) r.add("empty-open", "{}");
  if (!set.count(whole())) r.add("whole-open", mask_name(*this, whole()));
  for (auto u : opens)
    if (u & ~whole()) r.add("opens-in-space", "bit outside the point set");
  for (auto u : set)
    for (auto v : set) {
      if (!set.count(u | v)) {
        r.add("union-closed", mask_name(*this, u) + " | " + mask_name(*this, v));
        return r;
      }
      if (!set.count(u & v)) {
        r.add("intersection-closed", mask_name(*this, u) + " & " + mask_name(*this, v));
        return r;
      }
    }
  return r;
}

FiniteTopSpace FiniteTopSpace::discrete(std::vector<std::string> points) {
  if (points.size() > kMaxDiscretePoints)
    throw OverflowError("discrete space on " + std::to_string(points.size()) + " points exceeds " +
                        std::to_string(kMaxDiscretePoints));
  FiniteTopSpace t;
  t.points = std::move(points);
  for (std::uint64_t m = 0; m <= t.whole(); ++m) t.opens.push_back(m);
  return t;
}

bool is_discrete_space(const FiniteTopSpace& t) {
  require_axioms(t);
  const std::unordered_set<std::uint64_t> set(t.opens.begin(), t.opens.end());
  for (std::size_t i = 0; i < t.points.size(); ++i)
    if (!set.count(std::uint64_t{1} << i)) return false;
  return true;
}

ZeroManifoldReport zero_manifold_equiv(const FiniteTopSpace& t) {
  ZeroManifoldReport r;
  r.discrete = is_discrete_space(t);
  r.locally_point = true;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    std::uint64_t nbhd = t.whole();
    for (auto u : t.opens)
      if (u >> i & 1u) nbhd &= u;
    const bool single = std::popcount(nbhd) == 1;
    r.witnesses.push_back({t.points[i], nbhd, single});
    r.locally_point = r.locally_point && single;
  }
  r.agree = r.locally_point == r.discrete;
  return r;
}

FiniteTopSpace emerge_brane_points(const std::vector<PNDPSpec>& specs) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto name = specs[i].id.empty() ? "p" + std::to_string(i) : specs[i].id;
    const auto v = virtual_dimension(specs[i]);
    if (v.dim_m != 0)
      throw NonPointlikeError("spec " + name + " has dim M = " + std::to_string(v.dim_m) + ", not 0");
    names.push_back(name);
  }
  return FiniteTopSpace::discrete(std::move(names));
}

}  // namespace kcat::pndp
