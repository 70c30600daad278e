#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kcat::gft {

using Complex = std::complex<double>;

/// Number of group arguments of the expansion.
inline constexpr std::size_t kArity = 4;

struct GroupSpec {
  enum class Kind { Cyclic, Circle };
  Kind kind = Kind::Cyclic;
  /// Group order for Z_N, number of retained Fourier modes for the circle.
  std::size_t n = 1;

  static GroupSpec cyclic(std::size_t n);
  static GroupSpec circle(std::size_t modes);
  /// "cyclic:N" or "circle:N".
  static GroupSpec parse(const std::string& text);
  std::string to_string() const;

  /// Sample points: the elements of Z_N, or N equally spaced angles.
  std::size_t sample_count() const { return n; }
  /// Character of basis index k (0 <= k < n) at sample point s.
  Complex character(std::size_t k, std::size_t s) const;
  /// Frequency of basis index k: k for Z_N, 0, 1, -1, 2, -2, ... for the circle.
  std::int64_t frequency(std::size_t k) const;
};

/// Normalized Haar average of samples over the group (or over G^k when
/// given n^k samples). Summed in a canonical order, so permuting the
/// samples, in particular by a group shift, leaves the result bit-identical.
/// Throws StructuralError on a length that is not a power of n.
Complex haar_integrate(const GroupSpec& g, std::span<const Complex> samples);

/// A 4-dimensional grid whose sites are partitioned into regions.
struct ChunkGrid {
  std::array<std::size_t, 4> extents{1, 1, 1, 1};
  /// Region label of each site, in lexicographic site order.
  std::vector<std::int64_t> region_of;

  std::size_t site_count() const;
  std::size_t site_index(const std::array<std::size_t, 4>& x) const;
  std::array<std::size_t, 4> site(std::size_t index) const;
  /// Distinct region labels in increasing order.
  std::vector<std::int64_t> regions() const;
  /// Sites of one region in lexicographic order.
  std::vector<std::size_t> sites_in(std::int64_t region) const;
  /// Single region 0 covering the grid.
  static ChunkGrid uniform(const std::array<std::size_t, 4>& extents);
};

/// φ_I(g_0, g_1, g_2, g_3) per region, each stored as n^4 samples in
/// lexicographic order of (g_0, ..., g_3).
struct GFTField {
  GroupSpec group;
  std::size_t arity = kArity;
  std::vector<std::int64_t> region_ids;
  std::vector<std::vector<Complex>> coefficients;
  /// Sites dropped by circle truncation (always 0 for cyclic groups).
  std::size_t truncated_sites = 0;
};

/// Coefficients against λ_I(x; g) = 1_I(x) · Π_a conj χ_{k_a(x)}(g_a), where
/// the j-th site of region I (lexicographic) carries the character 4-tuple
/// given by the base-N digits of j. Throws ResolutionError naming the first
/// region with more than N^4 sites for cyclic groups; for the circle the
/// surplus sites are projected out and counted in truncated_sites.
GFTField gft_decompose(const ChunkGrid& grid, std::span<const double> field, const GroupSpec& g);

/// φ(x) = ∫dg_0...∫dg_3 φ_I(g) λ_I(x; g) at every site. Throws
/// StructuralError when the coefficients do not fit the grid and group.
std::vector<Complex> gft_reconstruct(const GFTField& f, const ChunkGrid& grid);

struct ArgumentCount {
  std::size_t count = 0;
  bool conforming = false;
};
/// Number of group arguments; conforming iff it is 4.
ArgumentCount argument_count_check(const GFTField& f);

}  // namespace kcat::gft
