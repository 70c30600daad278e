#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "kcat/cat/category.hpp"
#include "kcat/cat/diagram.hpp"
#include "kcat/cat/functor.hpp"
#include "kcat/cat/pushout.hpp"
#include "kcat/error.hpp"
#include "kcat/exact/module_category.hpp"

using namespace kcat;
using namespace kcat::cat;

namespace {

CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

MorId named(const FinCategory& c, const std::string& name) {
  auto m = c.find_morphism(name);
  REQUIRE(m);
  return *m;
}

/// a → b → d and a → c → d with the two composites distinct.
FinCategory free_square() {
  FinCategory::Builder b;
  const ObjId a = b.add_object("a"), bb = b.add_object("b"), c = b.add_object("c"), d = b.add_object("d");
  for (ObjId o : {a, bb, c, d}) b.add_identity(o, "id_" + std::to_string(o.value));
  const MorId ab = b.add_morphism("ab", a, bb), bd = b.add_morphism("bd", bb, d);
  const MorId ac = b.add_morphism("ac", a, c), cd = b.add_morphism("cd", c, d);
  const MorId abd = b.add_morphism("abd", a, d), acd = b.add_morphism("acd", a, d);
  b.set_composite(bd, ab, abd);
  b.set_composite(cd, ac, acd);
  b.fill_identity_composites();
  return std::move(b).build();
}

CategoryPtr f2_host(std::size_t max_dim) {
  std::vector<exact::NamedModule> objs;
  for (std::size_t d = 0; d <= max_dim; ++d) objs.push_back({"F2^" + std::to_string(d), exact::FGModule::over(Ring::mod_p(2), d)});
  return exact::ModuleCategory::enumerate(Ring::mod_p(2), objs).category();
}

/// All composites of directed paths from s to t, by explicit DFS.
std::set<MorId> path_composites(const Diagram& d, std::size_t s, std::size_t t) {
  std::set<MorId> out;
  std::function<void(std::size_t, MorId)> walk = [&](std::size_t node, MorId acc) {
    if (node == t) out.insert(acc);
    for (const auto& e : d.edges)
      if (e.from == node) walk(e.to, compose(*d.host, acc, *e.label));
  };
  walk(s, d.host->identity(d.nodes[s]));
  return out;
}

}  // namespace

TEST_CASE("axioms hold for standard categories") {
  CHECK(check_category_axioms(terminal_category()).ok());
  CHECK(check_category_axioms(chain_category(3)).ok());
  CHECK(check_category_axioms(cyclic_group_category(5)).ok());
  CHECK(check_category_axioms(free_square()).ok());
  CHECK(check_category_axioms(product(chain_category(2), cyclic_group_category(2))).ok());
}

TEST_CASE("associativity failure is reported with its triple") {
  FinCategory::Builder b;
  const ObjId o = b.add_object("*");
  const MorId e = b.add_identity(o, "e");
  const MorId a = b.add_morphism("a", o, o), c = b.add_morphism("b", o, o);
  b.set_composite(a, a, c);
  b.set_composite(a, c, c);
  b.set_composite(c, a, a);
  b.set_composite(c, c, a);
  b.fill_identity_composites();
  (void)e;
  const auto report = check_category_axioms(std::move(b).build());
  REQUIRE(report.has_law("associativity"));
  bool found = false;
  for (const auto& v : report.violations) found |= v.witness.find("a") != std::string::npos;
  CHECK(found);
}

TEST_CASE("malformed tables are structural errors") {
  FinCategory::Builder b;
  const ObjId x = b.add_object("x"), y = b.add_object("y");
  b.add_identity(x, "id_x");
  b.add_identity(y, "id_y");
  const MorId f = b.add_morphism("f", x, y);
  b.set_composite(f, f, f);
  b.fill_identity_composites();
  CHECK_THROWS_AS(check_category_axioms(std::move(b).build()), StructuralError);

  FinCategory::Builder missing_id;
  missing_id.add_object("x");
  CHECK_THROWS_AS(std::move(missing_id).build(), StructuralError);
}

TEST_CASE("missing composites are reported") {
  FinCategory::Builder b;
  const ObjId x = b.add_object("x"), y = b.add_object("y"), z = b.add_object("z");
  for (ObjId o : {x, y, z}) b.add_identity(o, "id_" + std::to_string(o.value));
  b.add_morphism("f", x, y);
  b.add_morphism("g", y, z);
  b.fill_identity_composites();
  CHECK(check_category_axioms(std::move(b).build()).has_law("composition-total"));
}

TEST_CASE("compose") {
  const auto c = chain_category(3);
  const MorId f = named(c, "0->1"), g = named(c, "1->2");
  CHECK(compose(c, f, g) == named(c, "0->2"));
  CHECK(compose(c, c.identity(*c.find_object("0")), f) == f);
  CHECK_THROWS_AS(compose(c, f, f), CompositionError);
}

TEST_CASE("functors") {
  const auto chain = share(chain_category(3));
  CHECK(check_functor(identity_functor(chain)).ok());
  const auto point = share(terminal_category());
  Functor collapse{chain, point, std::vector<ObjId>(3, ObjId{0}), std::vector<MorId>(chain->morphism_count(), MorId{0})};
  CHECK(check_functor(collapse).ok());
  // Z/4 → Z/2 reduction is a functor; Z/2 → Z/4 by inclusion is not.
  const auto z4 = share(cyclic_group_category(4)), z2 = share(cyclic_group_category(2));
  Functor reduce{z4, z2, {ObjId{0}}, {MorId{0}, MorId{1}, MorId{0}, MorId{1}}};
  CHECK(check_functor(reduce).ok());
  Functor include{z2, z4, {ObjId{0}}, {MorId{0}, MorId{1}}};
  CHECK(check_functor(include).has_law("preserves-composition"));
  Functor bad_size{z2, z4, {ObjId{0}}, {MorId{0}}};
  CHECK_THROWS_AS(check_functor(bad_size), StructuralError);
}

TEST_CASE("commutativity of small diagrams") {
  const auto sq = share(free_square());
  Diagram d{sq, {ObjId{0}, ObjId{1}, ObjId{2}, ObjId{3}}, {}, {}};
  d.edges = {{0, 1, named(*sq, "ab")}, {1, 3, named(*sq, "bd")}, {0, 2, named(*sq, "ac")}, {2, 3, named(*sq, "cd")}};
  const auto r = check_commutes(d);
  CHECK_FALSE(r.commutes);
  REQUIRE(r.nodes);
  CHECK(*r.nodes == std::pair<std::size_t, std::size_t>{0, 3});

  const auto point = share(terminal_category());
  Diagram ids{point, std::vector<ObjId>(4, ObjId{0}), {}, {}};
  ids.edges = {{0, 1, MorId{0}}, {1, 3, MorId{0}}, {0, 2, MorId{0}}, {2, 3, MorId{0}}};
  CHECK(check_commutes(ids).commutes);

  ids.edges[0].label.reset();
  CHECK_THROWS_AS(check_commutes(ids), StructuralError);
}

TEST_CASE("check_commutes agrees with path enumeration on random diagrams") {
  const auto host = f2_host(2);
  std::mt19937 rng(17);
  int disagreements = 0, noncommuting = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::uniform_int_distribution<std::uint32_t> obj(0, 2);
    Diagram d{host, {}, {}, {}};
    for (std::size_t i = 0; i < n; ++i) d.nodes.push_back(ObjId{obj(rng)});
    std::bernoulli_distribution coin(0.35);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!coin(rng)) continue;
        const auto hom = host->hom(d.nodes[i], d.nodes[j]);
        // Bias towards commuting diagrams: mostly zero maps.
        const std::size_t pick = std::bernoulli_distribution(0.6)(rng) ? 0 : rng() % hom.size();
        d.edges.push_back({i, j, hom[pick]});
      }
    bool brute = true;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (path_composites(d, s, t).size() > 1) brute = false;
    const auto r = check_commutes(d);
    disagreements += r.commutes != brute;
    noncommuting += !brute;
  }
  CHECK(disagreements == 0);
  CHECK(noncommuting > 0);
}

TEST_CASE("pushouts") {
  const auto point = terminal_category();
  const auto p = pushout(point, {MorId{0}, MorId{0}});
  CHECK(p.apex == ObjId{0});

  const auto chain = chain_category(3);
  const auto join = pushout(chain, {named(chain, "0->1"), named(chain, "0->2")});
  CHECK(chain.object_name(join.apex) == "2");

  // Two objects reachable from x with no common target.
  FinCategory::Builder b;
  const ObjId x = b.add_object("x"), a = b.add_object("a"), c = b.add_object("b");
  for (ObjId o : {x, a, c}) b.add_identity(o, "id_" + std::to_string(o.value));
  const MorId f = b.add_morphism("f", x, a), g = b.add_morphism("g", x, c);
  b.fill_identity_composites();
  const auto vee = std::move(b).build();
  CHECK_THROWS_AS(pushout(vee, {f, g}), PushoutMissing);
  CHECK_THROWS_AS(pushout(vee, {f, named(vee, "id_1")}), StructuralError);
}

TEST_CASE("pushouts are unique up to isomorphism") {
  const auto host = f2_host(2);
  const auto& c = *host;
  std::size_t spans = 0;
  for (ObjId x : c.objects())
    for (ObjId a : c.objects())
      for (ObjId b : c.objects())
        for (MorId f : c.hom(x, a))
          for (MorId g : c.hom(x, b)) {
            const auto all = all_pushouts(c, {f, g});
            if (all.empty()) continue;
            ++spans;
            for (const auto& p : all) {
              CHECK(is_pushout(c, {f, g}, p));
              const auto m = mediating_morphism(c, all.front(), p);
              REQUIRE(m);
              CHECK(c.is_isomorphism(*m));
            }
          }
  CHECK(spans > 0);
}
