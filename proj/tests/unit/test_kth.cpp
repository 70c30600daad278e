#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hosts.hpp"
#include "kcat/error.hpp"
#include "kcat/exact/waldhausen.hpp"
#include "kcat/kth/k0.hpp"
#include "kcat/kth/s_construction.hpp"
#include "oracles.hpp"

using namespace kcat;
using namespace kcat::kth;
using cat::MorId;
using cat::ObjId;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

exact::WaldhausenStructure waldhausen_of(const exact::ModuleCategoryPtr& host) {
  return exact::exact_to_waldhausen(exact::full_exact_structure(host));
}

/// Injectivity of a map between F_p spaces by listing the kernel.
bool injective_by_enumeration(const IntMatrix& f, Int p) {
  std::vector<Int> x(f.cols(), 0);
  std::size_t kernel = 0;
  while (true) {
    bool zero = true;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      Int s = 0;
      for (std::size_t c = 0; c < f.cols(); ++c) s += f(r, c) * x[c];
      zero = zero && s % p == 0;
    }
    kernel += zero;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == p) x[i++] = 0;
    if (i == x.size()) break;
  }
  return kernel == 1;
}

/// Chains 0 ↣ A1 ↣ ... ↣ An of injective maps, counted by brute force.
std::size_t mono_chains(const exact::ModuleCategory& host, Int p, std::size_t n) {
  const auto& c = *host.category();
  std::vector<std::size_t> count(c.object_count(), 1);  // chains of length 1 ending at each object
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::size_t> next(c.object_count(), 0);
    for (ObjId a : c.objects())
      for (ObjId b : c.objects())
        for (MorId f : c.hom(a, b))
          if (injective_by_enumeration(host.matrix(f), p)) next[b.value] += count[a.value];
    count = next;
  }
  std::size_t total = 0;
  for (auto v : count) total += v;
  return n == 0 ? 1 : total;
}

/// K0 by an independent route: relation rows from dimension counting over
/// every exact triple of dimensions realised in the host, reduced by
/// determinantal divisors.
std::vector<Int> k0_factors_by_dimension(const std::vector<std::size_t>& dims) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t a = 0; a < dims.size(); ++a)
    for (std::size_t b = 0; b < dims.size(); ++b)
      for (std::size_t c = 0; c < dims.size(); ++c)
        if (dims[a] + dims[c] == dims[b]) {
          std::vector<Int> row(dims.size(), 0);
          row[b] += 1;
          row[a] -= 1;
          row[c] -= 1;
          rows.push_back(row);
        }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  IntMatrix m(rows.size(), dims.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < dims.size(); ++k) m(r, k) = rows[r][k];
  return oracle::invariant_factors(m);
}

}  // namespace

TEST_CASE("nerve examples") {
  const auto point = nerve(cat::terminal_category(), 3);
  for (std::size_t m = 0; m <= 3; ++m) {
    CHECK(point.size(m) == 1);
    CHECK(point.nondegenerate_count(m) == (m == 0 ? 1 : 0));
  }
  CHECK(check_simplicial_identities(point).ok());

  const auto z2 = nerve(cat::cyclic_group_category(2), 2);
  CHECK(z2.size(0) == 1);
  CHECK(z2.size(1) == 2);
  CHECK(z2.size(2) == 4);

  const auto chain = nerve(cat::chain_category(2), 1);
  CHECK(chain.size(1) == 3);
  CHECK(chain.nondegenerate_count(1) == 1);
}

TEST_CASE("nerve sizes match chain counting") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = nerve(cat::cyclic_group_category(n), 3);
    const auto p = nerve(cat::chain_category(n), 3);
    for (std::size_t m = 0; m <= 3; ++m) {
      std::size_t pow = 1;
      for (std::size_t k = 0; k < m; ++k) pow *= n;
      CHECK(g.size(m) == pow);
      // Weakly increasing sequences of m+1 elements from n.
      CHECK(p.size(m) == binomial(n + m, m + 1));
      // Strictly increasing ones are the nondegenerate simplices.
      CHECK(p.nondegenerate_count(m) == binomial(n, m + 1));
    }
    CHECK(check_simplicial_identities(g).ok());
    CHECK(check_simplicial_identities(p).ok());
  }
  const auto host = hosts::vector_spaces(2, 2);
  CHECK(check_simplicial_identities(nerve(*host->category(), 2)).ok());
}

TEST_CASE("broken face table is caught") {
  auto s = nerve(cat::chain_category(3), 2);
  std::swap(s.faces[2][0][0], s.faces[2][0][1]);
  CHECK_FALSE(check_simplicial_identities(s).ok());
}

TEST_CASE("S-construction levels") {
  const auto host = hosts::vector_spaces(2, 2);
  const auto w = waldhausen_of(host);
  const auto s0 = s_construct(w, 0);
  CHECK(s0.staircases.size() == 1);
  CHECK(s0.maps.size() == 1);

  const auto s1 = s_construct(w, 1);
  CHECK(s1.staircases.size() == host->category()->object_count());
  std::set<ObjId> tops;
  for (const auto& st : s1.staircases) tops.insert(st.objects.at({0, 1}));
  CHECK(tops.size() == host->category()->object_count());

  auto check_level = [](const exact::ModuleCategoryPtr& h, const exact::WaldhausenStructure& ws, std::size_t n) {
    const auto s = s_construct(ws, n);
    CHECK(s.staircases.size() == mono_chains(*h, 2, n));
    for (const auto& st : s.staircases) {
      CHECK(cat::check_commutes(cat::staircase_diagram(ws.host, st)).commutes);
      for (std::size_t j = 0; j <= n; ++j) CHECK(st.objects.at({j, j}) == ws.zero);
    }
    CHECK(cat::check_category_axioms(*s.category).ok());
  };
  check_level(host, w, 2);
  const auto line = hosts::vector_spaces(2, 1);
  check_level(line, waldhausen_of(line), 3);
  // Level 3 over F2^{<=2} has more levelwise isomorphisms than a dense table holds.
  CHECK_THROWS_AS(s_construct(w, 3, MapScope::WeakOnly), EnumerationIncomplete);
  CHECK_THROWS_AS(s_construct(w, 4), StructuralError);
}

TEST_CASE("missing quotient is reported") {
  const auto host = hosts::vector_spaces(2, {0, 1, 3});
  const auto& c = *host->category();
  exact::WaldhausenStructure w{host->category(), {}, {}, *c.find_object("V0")};
  for (MorId m : c.morphisms()) {
    if (host->is_injective(m)) w.cofibrations.push_back(m);
    if (c.is_isomorphism(m)) w.weak_equivalences.push_back(m);
  }
  w.normalize();
  CHECK_THROWS_AS(s_construct(w, 2), EnumerationIncomplete);
}

TEST_CASE("weak equivalence subcategories") {
  const auto host = hosts::vector_spaces(2, 2);
  const auto w = waldhausen_of(host);
  const auto s1 = s_construct(w, 1);
  const auto iso = weak_equiv_subcat(w, s1);
  std::size_t isos = 0;
  for (MorId m : host->category()->morphisms()) isos += host->category()->is_isomorphism(m);
  CHECK(iso.object_count() == 3);
  CHECK(iso.morphism_count() == isos);
  for (MorId m : iso.morphisms()) CHECK(iso.is_isomorphism(m));

  auto all_weak = w;
  all_weak.weak_equivalences = host->category()->morphisms();
  const auto full = weak_equiv_subcat(all_weak, s1);
  CHECK(full.morphism_count() == s1.category->morphism_count());

  const auto trivial_host = hosts::vector_spaces(2, 0);
  const auto tw = waldhausen_of(trivial_host);
  const auto t = weak_equiv_subcat(tw, s_construct(tw, 2));
  CHECK(t.object_count() == 1);
  CHECK(t.morphism_count() == 1);
}

TEST_CASE("K-spectrum levels") {
  const auto host = hosts::vector_spaces(2, 2);
  const auto w = waldhausen_of(host);
  const auto k0level = k_spectrum_level(w, 0, 3);
  for (std::size_t m = 0; m <= 3; ++m) CHECK(k0level.size(m) == 1);
  const auto k1 = k_spectrum_level(w, 1, 2);
  CHECK(k1.size(1) == 8);  // |GL_0| + |GL_1(F2)| + |GL_2(F2)| = 1 + 1 + 6
  const auto k2 = k_spectrum_level(w, 2, 2);
  CHECK(check_simplicial_identities(k2).ok());
  CHECK(check_simplicial_identities(k1).ok());
}

TEST_CASE("K0 examples") {
  CHECK(k0(exact::full_exact_structure(hosts::vector_spaces(2, 0))).normal_form().is_trivial());
  const auto f2_3 = k0(exact::full_exact_structure(hosts::vector_spaces(2, 3)));
  CHECK(f2_3.normal_form().free_rank == 1);
  CHECK(f2_3.normal_form().torsion.empty());
  CHECK(oracle::invariant_factors(IntMatrix{{1, -2}}) == std::vector<Int>{1});
  CHECK(k0_factors_by_dimension({0, 1, 2, 3}) == std::vector<Int>{1, 1, 1});

  const auto a = exact::full_exact_structure(hosts::vector_spaces(2, 1));
  const auto prod = exact::product(a, a);
  const auto g = k0(prod);
  CHECK(g.normal_form().free_rank == 2);
  CHECK(g.normal_form().torsion.empty());
  CHECK(groups_isomorphic(g, k0(a).direct_sum(k0(a))));

  const auto b = exact::full_exact_structure(hosts::vector_spaces(2, 2));
  CHECK(groups_isomorphic(k0(exact::product(b, a)), k0(b).direct_sum(k0(a))));
}

TEST_CASE("K0 agrees with the dimension-count oracle") {
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{0, 1}, {0, 1, 2}, {0, 2}, {0, 1, 3}, {0, 2, 3}}) {
    const auto host = hosts::vector_spaces(dims.back() == 3 ? 2 : 3, dims);
    const auto g = k0(exact::full_exact_structure(host));
    const auto factors = k0_factors_by_dimension(dims);
    std::size_t rank = dims.size();
    std::vector<Int> torsion;
    for (Int f : factors) {
      --rank;
      if (f > 1) torsion.push_back(f);
    }
    CAPTURE(dims.size());
    CHECK(g.normal_form().free_rank == rank);
    CHECK(g.normal_form().torsion == torsion);
  }
}

TEST_CASE("K0 is invariant under presentation changes") {
  auto e = exact::full_exact_structure(hosts::vector_spaces(2, 2));
  const auto base = k0(e);
  std::mt19937 rng(31);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(e.sigma.begin(), e.sigma.end(), rng);
    CHECK(groups_isomorphic(k0(e), base));
  }
  // Objects listed in another order, and a duplicate copy of V1.
  const auto reordered = hosts::vector_spaces(2, {2, 0, 1});
  CHECK(groups_isomorphic(k0(exact::full_exact_structure(reordered)), base));
  const auto duplicated = hosts::vector_spaces(2, {0, 1, 1, 2});
  CHECK(groups_isomorphic(k0(exact::full_exact_structure(duplicated)), base));

  const auto groups = hosts::finite_groups({{}, {2}, {4}, {2, 2}});
  const auto gz = k0(exact::full_exact_structure(groups));
  CHECK(gz.normal_form().free_rank == 1);
  CHECK(gz.normal_form().torsion.empty());
}
