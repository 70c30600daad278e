#include <random>
#include <set>

#include "doctest.h"
#include "kcat/error.hpp"
#include "kcat/pndp/pndp.hpp"

using namespace kcat;
using namespace kcat::pndp;

namespace {

PNDPSpec spec(std::int64_t rank_e, std::string id = {}) { return {std::move(id), 1, 1, 2, rank_e}; }

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Every family of subsets of an n-point set that satisfies the axioms.
std::vector<FiniteTopSpace> all_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<FiniteTopSpace> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (!(family & 1u) || !(family >> (subsets - 1) & 1u)) continue;
    FiniteTopSpace t;
    t.points = names(n);
    for (std::uint64_t s = 0; s < subsets; ++s)
      if (family >> s & 1u) t.opens.push_back(s);
    if (t.check_axioms().ok()) out.push_back(std::move(t));
  }
  return out;
}

/// Topology generated by random subsets: closure under unions and intersections.
FiniteTopSpace random_topology(std::size_t n, std::mt19937& rng) {
  FiniteTopSpace t;
  t.points = names(n);
  std::set<std::uint64_t> opens{0, t.whole()};
  const int gens = 1 + static_cast<int>(rng() % 5);
  for (int g = 0; g < gens; ++g) opens.insert(rng() & t.whole());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> cur(opens.begin(), opens.end());
    for (auto u : cur)
      for (auto v : cur) grew |= opens.insert(u | v).second | opens.insert(u & v).second;
  }
  t.opens.assign(opens.begin(), opens.end());
  return t;
}

}  // namespace

TEST_CASE("virtual dimension examples") {
  CHECK(virtual_dimension(spec(4)) == VirtualDimension{-2, 0});
  CHECK(virtual_dimension(spec(2)) == VirtualDimension{0, 2});
  CHECK(virtual_dimension(spec(6)) == VirtualDimension{-4, -2});
  CHECK_THROWS_AS(virtual_dimension({"x", -1, 0, 0, 0}), StructuralError);
}

TEST_CASE("adding to rank E lowers both dimensions by the same amount") {
  for (std::int64_t b1 = 0; b1 < 4; ++b1)
    for (std::int64_t f = 0; f < 4; ++f)
      for (std::int64_t r = 0; r < 6; ++r)
        for (std::int64_t k = 0; k < 4; ++k) {
          const auto a = virtual_dimension({"", b1, 2, f, r});
          const auto b = virtual_dimension({"", b1, 2, f, r + k});
          CHECK(b.dim_f == a.dim_f - k);
          CHECK(b.dim_m == a.dim_m - k);
        }
}

TEST_CASE("topology counts on small sets") {
  const std::vector<std::size_t> expected{1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(all_topologies(n).size() == expected[n]);
}

TEST_CASE("discrete means the full power set, exhaustively up to 4 points") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& t : all_topologies(n)) {
      const bool power_set = t.opens.size() == (std::size_t{1} << n);
      CHECK(is_discrete_space(t) == power_set);
      const auto z = zero_manifold_equiv(t);
      CHECK(z.agree);
      CHECK(z.discrete == power_set);
    }
}

TEST_CASE("discrete means the full power set on random 5 and 6 point spaces") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 5 + static_cast<std::size_t>(trial % 2);
    const auto t = random_topology(n, rng);
    REQUIRE(t.check_axioms().ok());
    CHECK(is_discrete_space(t) == (t.opens.size() == (std::size_t{1} << n)));
    CHECK(zero_manifold_equiv(t).agree);
  }
  CHECK(is_discrete_space(FiniteTopSpace::discrete(names(6))));
}

TEST_CASE("discreteness examples") {
  CHECK(is_discrete_space(FiniteTopSpace::discrete(names(3))));
  FiniteTopSpace sierpinski{{"a", "b"}, {0, 1, 3}};
  CHECK_FALSE(is_discrete_space(sierpinski));
  CHECK(is_discrete_space(FiniteTopSpace{{}, {0}}));

  const auto z = zero_manifold_equiv(sierpinski);
  CHECK_FALSE(z.locally_point);
  CHECK_FALSE(z.discrete);
  CHECK(z.agree);
  CHECK(z.witnesses[0].singleton);
  CHECK_FALSE(z.witnesses[1].singleton);
  CHECK(z.witnesses[1].neighborhood == 3);

  const auto two = zero_manifold_equiv(FiniteTopSpace::discrete(names(2)));
  CHECK(two.locally_point);
  CHECK(two.agree);
  const auto one = zero_manifold_equiv(FiniteTopSpace::discrete(names(1)));
  CHECK(one.locally_point);
  CHECK(one.discrete);
}

TEST_CASE("axiom violations are structural errors") {
  FiniteTopSpace no_union{{"a", "b"}, {0, 1, 2}};
  CHECK(no_union.check_axioms().has_law("whole-open"));
  CHECK_THROWS_AS(is_discrete_space(no_union), StructuralError);
  FiniteTopSpace gap{{"a", "b", "c"}, {0, 1, 2, 7}};
  CHECK(gap.check_axioms().has_law("union-closed"));
  FiniteTopSpace meet{{"a", "b", "c"}, {0, 3, 6, 7}};
  CHECK(meet.check_axioms().has_law("intersection-closed"));
  CHECK_THROWS_AS(zero_manifold_equiv(meet), StructuralError);
}

TEST_CASE("point-like specs emerge as a discrete brane") {
  const auto three = emerge_brane_points({spec(4, "p1"), spec(4, "p2"), spec(4, "p3")});
  CHECK(three.points.size() == 3);
  CHECK(is_discrete_space(three));
  CHECK(zero_manifold_equiv(three).locally_point);
  CHECK(emerge_brane_points({}).points.empty());
  try {
    emerge_brane_points({spec(4, "p1"), spec(2, "fat")});
    FAIL("expected NonPointlikeError");
  } catch (const NonPointlikeError& e) {
    CHECK(std::string(e.what()).find("fat") != std::string::npos);
  }
  std::vector<PNDPSpec> many(kMaxDiscretePoints + 1, spec(4));
  CHECK_THROWS_AS(emerge_brane_points(many), OverflowError);
}
