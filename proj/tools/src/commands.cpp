#include "kcat/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>

#include "kcat/brane/brane.hpp"
#include "kcat/cat/category.hpp"
#include "kcat/cli/build.hpp"
#include "kcat/complex/cochain.hpp"
#include "kcat/complex/theorem.hpp"
#include "kcat/error.hpp"
#include "kcat/exact/waldhausen.hpp"
#include "kcat/kth/k0.hpp"
#include "kcat/kth/s_construction.hpp"
#include "kcat/kth/simplicial_set.hpp"

namespace kcat::cli {

namespace {

constexpr std::size_t kShownViolations = 3;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vector_text(const std::vector<Int>& v) {
  std::vector<std::string> parts;
  for (Int x : v) parts.push_back(std::to_string(x));
  return "[" + join(parts, ", ") + "]";
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string violations_text(const ValidationReport& r) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < r.violations.size() && i < kShownViolations; ++i)
    parts.push_back(r.violations[i].law + ": " + r.violations[i].witness);
  std::string out = join(parts, "; ");
  if (r.violations.size() > kShownViolations)
    out += " (+" + std::to_string(r.violations.size() - kShownViolations) + " more)";
  return out;
}

void add_validation(Report& rep, const std::string& name, const ValidationReport& r, const std::string& ok_witness) {
  rep.check(name, r.ok(), r.ok() ? ok_witness : violations_text(r));
  if (!r.notes.empty()) rep.info(name + ".notes", std::to_string(r.notes.size()) + " notes, first: " + r.notes.front());
}

std::string group_text(const kth::GroupNormalForm& g) { return g.to_string() + " (" + g.describe() + ")"; }

class Runner {
 public:
  Runner(const CommandArgs& args, const Document& doc, Report& rep) : args_(args), doc_(doc), rep_(rep) {}

  std::vector<const Block*> blocks(const std::string& kind) const {
    std::vector<const Block*> out;
    if (args_.blocks.empty()) {
      out = doc_.of_kind(kind);
    } else {
      for (const auto& name : args_.blocks) {
        const auto* b = doc_.find(name);
        if (!b) throw UsageError("no block named '" + name + "'");
        if (b->kind != kind) throw UsageError("block '" + name + "' is a " + b->kind + " block, expected " + kind);
        out.push_back(b);
      }
    }
    if (out.empty()) rep_.info("input", "no " + kind + " blocks");
    return out;
  }

  Ring ring() const {
    try {
      return Ring::parse(args_.ring);
    } catch (const Error& e) {
      throw UsageError(std::string("--ring: ") + e.what());
    }
  }

  void check_category() {
    for (const auto* b : blocks("category")) {
      const auto c = build_category(*b);
      add_validation(rep_, b->name + ".axioms", cat::check_category_axioms(*c),
                     std::to_string(c->object_count()) + " objects, " + std::to_string(c->morphism_count()) + " morphisms");
      std::vector<std::string> zeros;
      for (auto z : c->zero_objects()) zeros.push_back(c->object_name(z));
      rep_.info(b->name + ".zero-objects", zeros.empty() ? "none" : join(zeros, ", "));
    }
  }

  void check_exact() {
    for (const auto* b : blocks("exact")) {
      const auto e = build_exact(doc_, *b);
      rep_.info(b->name + ".sigma", std::to_string(e.sigma.size()) + " sequences over " +
                                        std::to_string(e.host->category()->object_count()) + " objects");
      add_validation(rep_, b->name + ".axioms", exact::check_exact_axioms(e), "all exact-category axioms hold");
    }
  }

  /// nullopt after recording a refused conversion.
  std::optional<exact::WaldhausenStructure> waldhausen(const Block& b) {
    try {
      return build_waldhausen(doc_, b);
    } catch (const ConversionRefused& e) {
      rep_.check(b.name + ".conversion", false, e.what());
      return std::nullopt;
    }
  }

  void check_waldhausen() {
    for (const auto* b : blocks("waldhausen")) {
      const auto w = waldhausen(*b);
      if (!w) continue;
      rep_.info(b->name + ".classes", std::to_string(w->cofibrations.size()) + " cofibrations, " +
                                          std::to_string(w->weak_equivalences.size()) + " weak equivalences");
      add_validation(rep_, b->name + ".axioms", exact::check_waldhausen_axioms(*w), "all Waldhausen axioms hold");
    }
  }

  void s_construct() {
    const std::string tag = "S" + std::to_string(args_.level);
    for (const auto* b : blocks("waldhausen")) {
      const auto w = waldhausen(*b);
      if (!w) continue;
      if (const auto axioms = cat::check_category_axioms(*w->host); !axioms.ok()) {
        rep_.check(b->name + ".host", false, violations_text(axioms));
        continue;
      }
      try {
        const auto s = kth::s_construct(*w, args_.level);
        rep_.check(b->name + "." + tag, true,
                   std::to_string(s.staircases.size()) + " staircases, " + std::to_string(s.maps.size()) + " maps");
        add_validation(rep_, b->name + "." + tag + ".category", cat::check_category_axioms(*s.category),
                       "category axioms hold");
        const auto weak = kth::weak_equiv_subcat(*w, s);
        rep_.info(b->name + ".w" + tag, std::to_string(weak.morphism_count()) + " weak maps");
      } catch (const EnumerationIncomplete& e) {
        rep_.check(b->name + "." + tag, false, e.what());
      }
    }
  }

  static std::string level_sizes(const kth::SimplicialSet& s) {
    std::vector<std::string> parts;
    for (std::size_t m = 0; m <= s.truncation; ++m)
      parts.push_back("N" + std::to_string(m) + "=" + std::to_string(s.size(m)) + "(" +
                      std::to_string(s.nondegenerate_count(m)) + " nondeg)");
    return join(parts, " ");
  }

  void nerve() {
    for (const auto* b : blocks("category")) {
      const auto c = build_category(*b);
      const auto axioms = cat::check_category_axioms(*c);
      if (!axioms.ok()) {
        rep_.check(b->name + ".axioms", false, violations_text(axioms));
        continue;
      }
      const auto n = kth::nerve(*c, args_.truncate);
      rep_.info(b->name + ".nerve", level_sizes(n));
      add_validation(rep_, b->name + ".simplicial-identities", kth::check_simplicial_identities(n),
                     "face and degeneracy identities hold up to level " + std::to_string(args_.truncate));
    }
  }

  void k0() {
    for (const auto* b : blocks("exact")) {
      const auto e = build_exact(doc_, *b);
      add_validation(rep_, b->name + ".exact-axioms", exact::check_exact_axioms(e), "Σ is an exact structure");
      const auto r = kth::k0_detailed(e);
      rep_.info(b->name + ".iso-classes", std::to_string(r.classes.size()) + " classes, " +
                                              std::to_string(r.group.relations().rows()) + " relations");
      rep_.info(b->name + ".k0", group_text(r.group.normal_form()));
    }
  }

  void cohomology() {
    const auto ring = this->ring();
    for (const auto* b : blocks("complex")) {
      const auto k = build_complex(*b).complex;
      const auto c = complex::cochain_from_simplicial(k, ring);
      add_validation(rep_, b->name + ".d-squared", c.check_d_squared(), "d∘d = 0 in every degree");
      const auto h = complex::cohomology(c);
      for (std::size_t n = 0; n < h.size(); ++n)
        rep_.info(b->name + ".H" + std::to_string(n), h[n].normal_form().to_string());
    }
  }

  void potential() {
    const auto ring = this->ring();
    for (const auto* b : blocks("complex")) {
      const auto data = build_complex(*b);
      const auto c = complex::cochain_from_simplicial(data.complex, ring);
      if (data.cochains.empty()) rep_.info(b->name, "no cochains");
      for (std::size_t i = 0; i < data.cochains.size(); ++i) {
        const auto& phi = data.cochains[i];
        const std::string name = b->name + ".cochain" + std::to_string(i + 1);
        try {
          const auto p = complex::potential_sequence(c, {phi.degree, phi.values});
          rep_.info(name + ".closed", p.closed ? "dφ = 0" : "dφ = " + vector_text(p.d_phi.values));
          if (p.solvable)
            rep_.info(name + ".exact", "potential " + vector_text(p.potential->values));
          else if (p.obstruction)
            rep_.info(name + ".exact", "not exact, class " + vector_text(*p.obstruction) + " in H" +
                                           std::to_string(phi.degree));
          else
            rep_.info(name + ".exact", "not closed, no potential");
          rep_.check(name + ".gauge", p.gauge_invariant,
                     "d(φ + dχ) = dφ for " + std::to_string(p.gauge_checks) + " basis cochains χ");
        } catch (const NoPotentialDegree& e) {
          rep_.info(name + ".exact", e.what());
        }
      }
    }
  }

  static std::string f_vector(const complex::SimplicialComplex& k) {
    std::vector<std::string> parts;
    for (int d = 0; d <= k.dimension(); ++d) parts.push_back(std::to_string(k.count(static_cast<std::size_t>(d))));
    return "(" + join(parts, ", ") + ")";
  }

  void refine() {
    for (const auto* b : blocks("complex")) {
      const auto k = build_complex(*b).complex;
      const auto r = complex::barycentric_refine(k);
      rep_.info(b->name + ".refined", f_vector(k) + " -> " + f_vector(r));
      rep_.check(b->name + ".euler", k.euler_characteristic() == r.euler_characteristic(),
                 "χ = " + std::to_string(k.euler_characteristic()) + " -> " + std::to_string(r.euler_characteristic()));
    }
  }

  void compare(const std::string& label, const complex::SimplicialComplex& a, const complex::SimplicialComplex& b) {
    const auto r = complex::theorem_check(a, b, ring());
    for (const auto& c : r.comparisons)
      rep_.check(label + "." + c.name, c.match, c.left.to_string() + " vs " + c.right.to_string());
    for (const auto& c : r.classes)
      rep_.check(label + "." + c.name, c.match, std::to_string(c.left) + " vs " + std::to_string(c.right));
    rep_.check(label + ".preserved", r.preserved, r.preserved ? "preserved" : "not preserved");
  }

  void theorem_check() {
    if (args_.blocks.size() == 2) {
      std::vector<complex::SimplicialComplex> ks;
      for (const auto& name : args_.blocks) {
        const auto* b = doc_.find(name);
        if (!b || b->kind != "complex") throw UsageError("'" + name + "' is not a complex block");
        ks.push_back(build_complex(*b).complex);
      }
      compare(args_.blocks[0] + "~" + args_.blocks[1], ks[0], ks[1]);
      return;
    }
    if (args_.blocks.size() > 2) throw UsageError("theorem-check takes at most two complex blocks");
    for (const auto* b : blocks("complex")) {
      const auto k = build_complex(*b).complex;
      compare(b->name + "~refined", k, complex::barycentric_refine(k));
    }
  }

  void gft_roundtrip() {
    gft::GroupSpec g;
    try {
      g = gft::GroupSpec::parse(args_.group);
    } catch (const Error& e) {
      throw UsageError(std::string("--group: ") + e.what());
    }
    for (const auto* b : blocks("field")) {
      const auto data = build_field(*b);
      try {
        const auto f = gft::gft_decompose(data.grid, data.values, g);
        const auto a = gft::argument_count_check(f);
        rep_.check(b->name + ".arguments", a.conforming, std::to_string(a.count) + " group arguments");
        rep_.info(b->name + ".regions", std::to_string(f.region_ids.size()) + " regions, " +
                                            std::to_string(data.grid.site_count()) + " sites, " + g.to_string());
        if (f.truncated_sites) rep_.info(b->name + ".truncated", std::to_string(f.truncated_sites) + " sites projected out");
        const auto back = gft::gft_reconstruct(f, data.grid);
        double err = 0.0;
        for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::abs(back[i] - data.values[i]));
        rep_.check(b->name + ".roundtrip", err <= 1e-12, "max error " + scientific(err) + " (tolerance 1e-12)");
      } catch (const ResolutionError& e) {
        rep_.check(b->name + ".resolution", false, e.what());
      }
    }
  }

  void branes_classify() {
    for (const auto* b : blocks("branes")) {
      const auto data = build_branes(doc_, *b);
      const auto g = brane::gauge_group(data.config);
      std::size_t total = 0;
      for (const auto& br : data.config.branes) total += br.stack;
      rep_.info(b->name + ".gauge", g.to_string());
      rep_.check(b->name + ".rank-bound", g.total_rank() == total,
                 "sum of factors " + std::to_string(g.total_rank()) + " = N " + std::to_string(total));
      for (const auto& s : data.strings)
        rep_.info(b->name + ".string." + s.start + "-" + s.end,
                  brane::loop_nontrivial(s, data.config) ? "loop nontrivial" : "loop trivial");
      if (total > 0) {
        const auto e = brane::extension_rank_check(total);
        rep_.check(b->name + ".extension", e.additive, "dim U(N) = dim U(1) + dim PU(N): " + e.to_string());
      }
    }
  }

  void twist_class() {
    for (const auto* b : blocks("complex")) {
      const auto data = build_complex(*b);
      std::size_t k = 0;
      for (const auto& c : data.cochains) {
        if (c.degree != 3) continue;
        const std::string name = b->name + ".twist" + std::to_string(++k);
        try {
          const auto t = brane::twist_class({data.complex, c.values});
          rep_.check(name, true, (t.trivial ? "trivial class" : "class " + vector_text(t.coordinates)) + " in H3 = " +
                                     t.group.to_string());
        } catch (const InvariantViolation& e) {
          rep_.check(name, false, e.what());
        }
      }
      if (k == 0) rep_.info(b->name, "no degree-3 cochains");
    }
  }

  void pndp() {
    for (const auto* b : blocks("pndp")) {
      const auto specs = build_pndp(*b);
      for (const auto& s : specs) {
        const auto v = pndp::virtual_dimension(s);
        rep_.info(b->name + "." + s.id, "dim F = " + std::to_string(v.dim_f) + ", dim M = " + std::to_string(v.dim_m));
      }
      try {
        const auto space = pndp::emerge_brane_points(specs);
        rep_.check(b->name + ".emerge", true, std::to_string(space.points.size()) + "-point brane");
        rep_.check(b->name + ".discrete", pndp::is_discrete_space(space), "every singleton is open");
        const auto z = pndp::zero_manifold_equiv(space);
        rep_.check(b->name + ".zero-manifold", z.agree,
                   std::string("locally point ") + (z.locally_point ? "yes" : "no") + ", discrete " +
                       (z.discrete ? "yes" : "no"));
      } catch (const NonPointlikeError& e) {
        rep_.check(b->name + ".emerge", false, e.what());
      }
    }
  }

 private:
  const CommandArgs& args_;
  const Document& doc_;
  Report& rep_;
};

using Handler = void (Runner::*)();

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t{
      {"check-category", &Runner::check_category}, {"check-exact", &Runner::check_exact},
      {"check-waldhausen", &Runner::check_waldhausen}, {"s-construct", &Runner::s_construct},
      {"nerve", &Runner::nerve},                   {"k0", &Runner::k0},
      {"cohomology", &Runner::cohomology},         {"potential", &Runner::potential},
      {"refine", &Runner::refine},                 {"theorem-check", &Runner::theorem_check},
      {"gft-roundtrip", &Runner::gft_roundtrip},   {"branes-classify", &Runner::branes_classify},
      {"twist-class", &Runner::twist_class},       {"pndp", &Runner::pndp},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string echo(const std::string& cmd, const CommandArgs& args) {
  std::string out = cmd;
  if (!args.input.empty()) out += " --input " + args.input;
  if (cmd == "s-construct") out += " --level " + std::to_string(args.level);
  if (cmd == "nerve") out += " --truncate " + std::to_string(args.truncate);
  if (cmd == "cohomology" || cmd == "potential" || cmd == "theorem-check") out += " --ring " + args.ring;
  if (cmd == "gft-roundtrip") out += " --group " + args.group;
  for (const auto& b : args.blocks) out += " " + b;
  return out;
}

Report run_command(const std::string& cmd, const CommandArgs& args, const Document& doc) {
  const auto& t = table();
  const auto it = std::find_if(t.begin(), t.end(), [&](const auto& e) { return e.first == cmd; });
  if (it == t.end()) throw UsageError("unknown subcommand '" + cmd + "'");
  Report rep;
  rep.command = echo(cmd, args);
  Runner runner(args, doc, rep);
  try {
    (runner.*(it->second))();
  } catch (const DocumentError&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    rep.check(cmd, false, e.what());
  }
  return rep;
}

}  // namespace kcat::cli
