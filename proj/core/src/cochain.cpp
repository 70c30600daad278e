#include "kcat/complex/cochain.hpp"

#include "kcat/error.hpp"
#include "kcat/kth/smith.hpp"

namespace kcat::complex {

namespace {

IntMatrix reduced(IntMatrix m, const Ring& ring) {
  if (ring.is_integers()) return m;
  std::vector<Int> moduli(m.rows(), ring.modulus);
  m.reduce_rows(moduli);
  return m;
}

/// d_n, or the zero map out of the top degree.
IntMatrix differential(const CochainComplex& c, std::size_t n) {
  if (n < c.differentials.size()) return c.differentials[n];
  return IntMatrix(0, c.ranks[n]);
}

std::optional<std::vector<Int>> solve(const IntMatrix& m, std::span<const Int> b, const Ring& ring) {
  if (ring.is_integers()) return kth::solve_integer(m, b);
  return kth::solve_mod_p(m, b, ring.modulus);
}

std::optional<IntMatrix> solve(const IntMatrix& m, const IntMatrix& b, const Ring& ring) {
  if (ring.is_integers()) return kth::solve_integer(m, b);
  return kth::solve_mod_p(m, b, ring.modulus);
}

bool is_zero_vector(std::span<const Int> v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

ValidationReport CochainComplex::check_d_squared() const {
  ValidationReport report;
  for (std::size_t n = 0; n + 1 < differentials.size(); ++n) {
    const IntMatrix dd = reduced(differentials[n + 1] * differentials[n], ring);
    if (!dd.is_zero()) report.add("d-squared", "d_" + std::to_string(n + 1) + " d_" + std::to_string(n) + " ≠ 0");
  }
  return report;
}

std::vector<Int> CochainComplex::apply(std::size_t degree, std::span<const Int> cochain) const {
  if (degree >= ranks.size() || cochain.size() != ranks[degree])
    throw StructuralError("cochain of length " + std::to_string(cochain.size()) + " does not fit degree " +
                          std::to_string(degree));
  if (degree >= differentials.size()) return {};
  auto out = differentials[degree] * cochain;
  if (!ring.is_integers())
    for (auto& v : out) v = floor_mod(v, ring.modulus);
  return out;
}

CochainComplex cochain_from_simplicial(const SimplicialComplex& k, const Ring& ring) {
  CochainComplex c;
  c.ring = ring;
  if (k.empty()) return c;
  const auto top = static_cast<std::size_t>(k.dimension());
  for (std::size_t n = 0; n <= top; ++n) c.ranks.push_back(k.count(n));
  for (std::size_t n = 0; n < top; ++n) {
    IntMatrix d(k.count(n + 1), k.count(n));
    const auto& upper = k.simplices(n + 1);
    for (std::size_t r = 0; r < upper.size(); ++r)
      for (std::size_t i = 0; i < upper[r].size(); ++i) {
        Simplex face = upper[r];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto col = k.index_of(face);
        if (!col) throw StructuralError("complex is not closed under faces");
        d(r, *col) += (i % 2 == 0) ? 1 : -1;
      }
    c.differentials.push_back(reduced(std::move(d), ring));
  }
  const auto report = c.check_d_squared();
  if (!report.ok()) throw InvariantViolation("coboundary fails d² = 0: " + report.violations.front().witness);
  return c;
}

std::vector<CohomologyDegree> cohomology_detailed(const CochainComplex& c) {
  const auto d2 = c.check_d_squared();
  if (!d2.ok()) throw InvariantViolation("d² ≠ 0: " + d2.violations.front().witness);
  std::vector<CohomologyDegree> out;
  for (std::size_t n = 0; n < c.ranks.size(); ++n) {
    CohomologyDegree h;
    h.degree = n;
    const IntMatrix dn = differential(c, n);
    h.cocycles = c.ring.is_integers() ? kth::kernel_basis(dn) : kth::kernel_basis_mod_p(dn, c.ring.modulus);
    const std::size_t k = h.cocycles.cols();
    // Coordinates of each coboundary in the cocycle basis.
    std::vector<std::vector<Int>> rows;
    if (n > 0) {
      const auto coords = solve(h.cocycles, c.differentials[n - 1], c.ring);
      if (!coords) throw InvariantViolation("coboundary outside the cocycles in degree " + std::to_string(n));
      for (std::size_t j = 0; j < coords->cols(); ++j) rows.push_back(coords->column_vector(j));
    }
    if (!c.ring.is_integers())
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Int> row(k, 0);
        row[j] = c.ring.modulus;
        rows.push_back(std::move(row));
      }
    h.relations = IntMatrix(rows.size(), k);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < k; ++j) h.relations(r, j) = rows[r][j];
    h.group = kth::AbelianGroupPresentation(k, h.relations);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<kth::AbelianGroupPresentation> cohomology(const CochainComplex& c) {
  std::vector<kth::AbelianGroupPresentation> out;
  for (auto& h : cohomology_detailed(c)) out.push_back(std::move(h.group));
  return out;
}

std::optional<std::vector<Int>> class_coordinates(const CochainComplex& c, const CohomologyDegree& h,
                                                  std::span<const Int> cochain) {
  if (!is_zero_vector(c.apply(h.degree, cochain))) return std::nullopt;
  const auto coords = solve(h.cocycles, cochain, c.ring);
  if (!coords) return std::nullopt;
  const std::size_t k = h.cocycles.cols();
  // In the coordinates y = x·V the relations become the diagonal D.
  IntMatrix v = IntMatrix::identity(k);
  std::vector<Int> factors;
  std::size_t rank = 0;
  if (h.relations.rows() > 0 && k > 0) {
    const auto s = kth::smith_normal_form(h.relations);
    v = s.right;
    factors = s.factors;
    rank = s.rank;
  }
  auto transform = [&](std::span<const Int> x) {
    std::vector<Int> y(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) y[j] = checked_add(y[j], checked_mul(x[i], v(i, j)));
    return y;
  };
  const auto y = transform(*coords);
  std::vector<Int> out;
  for (std::size_t j = rank; j < k; ++j) {
    // Orientation: sign of the first cocycle basis vector with a nonzero coordinate.
    Int sign = 1;
    for (std::size_t b = 0; b < k; ++b)
      if (v(b, j) != 0) {
        sign = v(b, j) > 0 ? 1 : -1;
        break;
      }
    out.push_back(sign * y[j]);
  }
  for (std::size_t j = 0; j < rank; ++j)
    if (factors[j] > 1) out.push_back(floor_mod(y[j], factors[j]));
  return out;
}

PotentialReport potential_sequence(const CochainComplex& c, const Cochain& phi) {
  if (phi.degree == 0) throw NoPotentialDegree("a degree-0 cochain has no potential");
  if (phi.degree >= c.ranks.size() || phi.values.size() != c.ranks[phi.degree])
    throw StructuralError("cochain does not fit degree " + std::to_string(phi.degree) + " of the complex");
  PotentialReport r;
  r.degree = phi.degree;
  std::vector<Int> values = phi.values;
  if (!c.ring.is_integers())
    for (auto& v : values) v = floor_mod(v, c.ring.modulus);
  r.d_phi = {phi.degree + 1, c.apply(phi.degree, values)};
  r.closed = is_zero_vector(r.d_phi.values);

  const IntMatrix& d_prev = c.differentials[phi.degree - 1];
  if (auto psi = solve(d_prev, values, c.ring)) {
    r.solvable = true;
    r.potential = Cochain{phi.degree - 1, *psi};
  }

  // Gauge property over a basis of C^{n-1}: d(φ + dχ) = dφ.
  r.gauge_invariant = true;
  for (std::size_t j = 0; j < c.ranks[phi.degree - 1]; ++j) {
    std::vector<Int> chi(c.ranks[phi.degree - 1], 0);
    chi[j] = 1;
    auto shifted = c.apply(phi.degree - 1, chi);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = checked_add(shifted[i], values[i]);
    r.gauge_invariant = r.gauge_invariant && c.apply(phi.degree, shifted) == r.d_phi.values;
    ++r.gauge_checks;
  }

  if (!r.solvable) {
    if (r.closed) {
      const auto h = cohomology_detailed(c);
      r.obstruction = class_coordinates(c, h[phi.degree], values);
    } else {
      r.notes.push_back("φ is not closed, so it has no class in cohomology");
    }
  }
  r.notes.push_back("the sequence 0 → ψ → φ → dφ → 0 is read as solvability of dψ = φ plus gauge invariance of dφ");
  return r;
}

}  // namespace kcat::complex
