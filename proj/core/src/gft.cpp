#include "kcat/gft/gft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kcat/error.hpp"

namespace kcat::gft {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::array<std::size_t, kArity> digits(std::size_t j, std::size_t n) {
  std::array<std::size_t, kArity> d{};
  for (std::size_t a = kArity; a-- > 0;) {
    d[a] = j % n;
    j /= n;
  }
  return d;
}

/// Π_a χ_{k_a}(g_a) for the sample tuple with flat index s.
Complex product_character(const GroupSpec& g, const std::array<std::size_t, kArity>& k, std::size_t s) {
  const auto point = digits(s, g.n);
  Complex v = 1.0;
  for (std::size_t a = 0; a < kArity; ++a) v *= g.character(k[a], point[a]);
  return v;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::size_t n) {
  if (n == 0) throw StructuralError("group order must be at least 1");
  return {Kind::Cyclic, n};
}

GroupSpec GroupSpec::circle(std::size_t modes) {
  if (modes == 0) throw StructuralError("circle truncation must keep at least 1 mode");
  return {Kind::Circle, modes};
}

GroupSpec GroupSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw StructuralError("group spec must look like cyclic:N or circle:N");
  const std::string kind = text.substr(0, colon);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw StructuralError("bad group size in '" + text + "'");
  }
  if (kind == "cyclic") return cyclic(n);
  if (kind == "circle") return circle(n);
  throw StructuralError("unknown group kind '" + kind + "'");
}

std::string GroupSpec::to_string() const { return (kind == Kind::Cyclic ? "cyclic:" : "circle:") + std::to_string(n); }

std::int64_t GroupSpec::frequency(std::size_t k) const {
  if (kind == Kind::Cyclic) return static_cast<std::int64_t>(k);
  const auto half = static_cast<std::int64_t>((k + 1) / 2);
  return k % 2 == 1 ? half : -half;
}

Complex GroupSpec::character(std::size_t k, std::size_t s) const {
  // Reduce the phase to an exact fraction of a turn before taking sin/cos.
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t num = (frequency(k) * static_cast<std::int64_t>(s)) % nn;
  if (num < 0) num += nn;
  if (num == 0) return 1.0;
  if (2 * num == nn) return -1.0;
  if (4 * num == nn) return Complex(0.0, 1.0);
  if (4 * num == 3 * nn) return Complex(0.0, -1.0);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(nn);
  return std::polar(1.0, angle);
}

Complex haar_integrate(const GroupSpec& g, std::span<const Complex> samples) {
  std::size_t size = 1;
  while (size < samples.size()) size *= g.n;
  if (samples.empty() || size != samples.size() || (g.n == 1 && samples.size() != 1))
    throw StructuralError("Haar integral needs a power of " + std::to_string(g.n) + " samples, got " +
                          std::to_string(samples.size()));
  std::vector<Complex> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  Complex total = 0.0;
  for (const auto& v : sorted) total += v;
  return total / static_cast<double>(samples.size());
}

std::size_t ChunkGrid::site_count() const { return extents[0] * extents[1] * extents[2] * extents[3]; }

std::size_t ChunkGrid::site_index(const std::array<std::size_t, 4>& x) const {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    if (x[a] >= extents[a]) throw StructuralError("site outside the grid");
    idx = idx * extents[a] + x[a];
  }
  return idx;
}

std::array<std::size_t, 4> ChunkGrid::site(std::size_t index) const {
  std::array<std::size_t, 4> x{};
  for (std::size_t a = 4; a-- > 0;) {
    x[a] = index % extents[a];
    index /= extents[a];
  }
  return x;
}

std::vector<std::int64_t> ChunkGrid::regions() const {
  std::vector<std::int64_t> r = region_of;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::vector<std::size_t> ChunkGrid::sites_in(std::int64_t region) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < region_of.size(); ++i)
    if (region_of[i] == region) out.push_back(i);
  return out;
}

ChunkGrid ChunkGrid::uniform(const std::array<std::size_t, 4>& extents) {
  ChunkGrid g;
  g.extents = extents;
  g.region_of.assign(g.site_count(), 0);
  return g;
}

GFTField gft_decompose(const ChunkGrid& grid, std::span<const double> field, const GroupSpec& g) {
  if (grid.region_of.size() != grid.site_count())
    throw StructuralError("every grid site needs a region label");
  if (field.size() != grid.site_count())
    throw StructuralError("field has " + std::to_string(field.size()) + " values for " +
                          std::to_string(grid.site_count()) + " sites");
  GFTField out;
  out.group = g;
  const std::size_t capacity = ipow(g.n, kArity);
  for (std::int64_t region : grid.regions()) {
    auto sites = grid.sites_in(region);
    if (sites.size() > capacity) {
      if (g.kind == GroupSpec::Kind::Cyclic)
        throw ResolutionError("region " + std::to_string(region) + " has " + std::to_string(sites.size()) +
                              " sites but " + g.to_string() + " resolves only " + std::to_string(capacity));
      out.truncated_sites += sites.size() - capacity;
      sites.resize(capacity);
    }
    // φ_I(g) = Σ_j φ(x_j) Π_a χ_{k_a(j)}(g_a).
    std::vector<Complex> coeff(capacity, 0.0);
    for (std::size_t s = 0; s < capacity; ++s) {
      Complex v = 0.0;
      for (std::size_t j = 0; j < sites.size(); ++j)
        if (field[sites[j]] != 0.0) v += field[sites[j]] * product_character(g, digits(j, g.n), s);
      coeff[s] = v;
    }
    out.region_ids.push_back(region);
    out.coefficients.push_back(std::move(coeff));
  }
  return out;
}

std::vector<Complex> gft_reconstruct(const GFTField& f, const ChunkGrid& grid) {
  if (f.arity != kArity) throw StructuralError("reconstruction needs " + std::to_string(kArity) + " group arguments");
  if (f.coefficients.size() != f.region_ids.size()) throw StructuralError("one coefficient tensor per region expected");
  const std::size_t capacity = ipow(f.group.n, kArity);
  std::vector<Complex> out(grid.site_count(), 0.0);
  std::vector<Complex> integrand(capacity);
  for (std::size_t r = 0; r < f.region_ids.size(); ++r) {
    if (f.coefficients[r].size() != capacity)
      throw StructuralError("region " + std::to_string(f.region_ids[r]) + " has " +
                            std::to_string(f.coefficients[r].size()) + " coefficients, expected " +
                            std::to_string(capacity));
    const auto sites = grid.sites_in(f.region_ids[r]);
    for (std::size_t j = 0; j < sites.size() && j < capacity; ++j) {
      const auto k = digits(j, f.group.n);
      for (std::size_t s = 0; s < capacity; ++s)
        integrand[s] = f.coefficients[r][s] * std::conj(product_character(f.group, k, s));
      out[sites[j]] = haar_integrate(f.group, integrand);
    }
  }
  return out;
}

ArgumentCount argument_count_check(const GFTField& f) { return {f.arity, f.arity == kArity}; }

}  // namespace kcat::gft
