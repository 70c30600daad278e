#include "kcat/cli/build.hpp"

#include <map>
#include <memory>
#include <set>

#include "kcat/error.hpp"
#include "kcat/exact/module_category.hpp"

namespace kcat::cli {

namespace {

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DocumentError&) {
    throw;
  } catch (const ConversionRefused&) {
    throw;
  } catch (const Error& e) {
    throw DocumentError(line, e.what());
  }
}

Int to_int(const std::string& s) { return static_cast<Int>(std::stoll(s)); }
std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); }

}  // namespace

cat::CategoryPtr build_category(const Block& b) {
  return at_line(b.line, [&] {
    cat::FinCategory::Builder builder;
    std::map<std::string, cat::ObjId> objects;
    std::map<std::string, cat::MorId> morphisms;
    for (const auto* l : b.lines("object")) objects[l->tokens[1]] = builder.add_object(l->tokens[1]);
    std::set<std::string> with_identity;
    for (const auto* l : b.lines("morphism")) {
      const auto& t = l->tokens;
      const auto src = objects.at(t[2]), tgt = objects.at(t[3]);
      if (t[1] == "id_" + t[2] && t[2] == t[3]) {
        morphisms[t[1]] = at_line(l->number, [&] { return builder.add_identity(src, t[1]); });
        with_identity.insert(t[2]);
      } else {
        morphisms[t[1]] = builder.add_morphism(t[1], src, tgt);
      }
    }
    for (const auto& [name, id] : objects)
      if (!with_identity.count(name)) morphisms["id_" + name] = builder.add_identity(id, "id_" + name);
    for (const auto* l : b.lines("compose")) {
      const auto& t = l->tokens;
      at_line(l->number, [&] {
        builder.set_composite(morphisms.at(t[1]), morphisms.at(t[2]), morphisms.at(t[4]));
        return 0;
      });
    }
    builder.fill_identity_composites();
    return std::make_shared<const cat::FinCategory>(std::move(builder).build());
  });
}

exact::ExactStructure build_exact(const Document& doc, const Block& b) {
  if (const auto p = b.lines("product"); !p.empty()) {
    const auto& t = p.front()->tokens;
    const auto left = build_exact(doc, *doc.find(t[1]));
    const auto right = build_exact(doc, *doc.find(t[2]));
    return at_line(p.front()->number, [&] { return exact::product(left, right); });
  }
  Ring ring = Ring::integers();
  for (const auto* l : b.lines("ring")) ring = at_line(l->number, [&] { return Ring::parse(l->tokens[1]); });
  std::vector<exact::NamedModule> modules;
  for (const auto* l : b.lines("object")) {
    const auto& t = l->tokens;
    modules.push_back({t[1], at_line(l->number, [&] {
                         if (t[2] == "rank") return exact::FGModule::over(ring, to_size(t[3]));
                         std::vector<Int> orders;
                         for (std::size_t i = 3; i < t.size(); ++i) orders.push_back(to_int(t[i]));
                         return exact::FGModule::cyclic(orders);
                       })});
  }
  auto host = at_line(b.line, [&] {
    return std::make_shared<const exact::ModuleCategory>(exact::ModuleCategory::enumerate(ring, modules));
  });
  const auto& cat = *host->category();
  auto object = [&](const std::string& name) { return *cat.find_object(name); };

  std::map<std::string, cat::MorId> morphisms;
  for (const auto* l : b.lines("morphism")) {
    const auto& t = l->tokens;
    const auto src = object(t[2]), tgt = object(t[3]);
    const auto rows = host->module(tgt).generators(), cols = host->module(src).generators();
    if (t.size() - 4 != rows * cols)
      throw DocumentError(l->number, "morphism '" + t[1] + "' needs " + std::to_string(rows * cols) +
                                         " matrix entries (" + std::to_string(rows) + "x" + std::to_string(cols) + ")");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_int(t[4 + r * cols + c]);
    const auto found = host->find(src, tgt, m);
    if (!found) throw DocumentError(l->number, "morphism '" + t[1] + "' is not a homomorphism " + t[2] + " -> " + t[3]);
    morphisms[t[1]] = *found;
  }

  exact::ExactStructure e{host, {}};
  if (!b.lines("sigma").empty()) e = exact::full_exact_structure(host);
  for (const auto* l : b.lines("seq")) {
    const auto& t = l->tokens;
    const exact::SigmaSequence s{object(t[1]), object(t[2]), object(t[3]), morphisms.at(t[4]), morphisms.at(t[5])};
    if (cat.source(s.mono) != s.left || cat.target(s.mono) != s.middle || cat.source(s.epi) != s.middle ||
        cat.target(s.epi) != s.right)
      throw DocumentError(l->number, "sequence morphisms do not match " + t[1] + " -> " + t[2] + " -> " + t[3]);
    e.sigma.push_back(s);
  }
  std::sort(e.sigma.begin(), e.sigma.end());
  e.sigma.erase(std::unique(e.sigma.begin(), e.sigma.end()), e.sigma.end());
  return e;
}

exact::WaldhausenStructure build_waldhausen(const Document& doc, const Block& b) {
  exact::WaldhausenStructure w;
  if (const auto from = b.lines("from"); !from.empty()) {
    w = exact::exact_to_waldhausen(build_exact(doc, *doc.find(from.front()->tokens[1])));
  } else {
    w.host = build_category(*doc.find(b.lines("host").front()->tokens[1]));
    w.zero = *w.host->find_object(b.lines("zero").front()->tokens[1]);
    for (const auto* l : b.lines("cofibration"))
      for (std::size_t i = 1; i < l->tokens.size(); ++i) w.cofibrations.push_back(*w.host->find_morphism(l->tokens[i]));
    for (const auto* l : b.lines("weak"))
      for (std::size_t i = 1; i < l->tokens.size(); ++i)
        w.weak_equivalences.push_back(*w.host->find_morphism(l->tokens[i]));
    w.policy = exact::PushoutPolicy::Required;
  }
  for (const auto* l : b.lines("policy"))
    w.policy = l->tokens[1] == "declared" ? exact::PushoutPolicy::WithinDeclaredObjects : exact::PushoutPolicy::Required;
  w.normalize();
  return w;
}

ComplexData build_complex(const Block& b) {
  ComplexData out;
  std::vector<complex::Simplex> facets;
  for (const auto* l : b.lines("simplex")) {
    complex::Simplex s;
    for (std::size_t i = 1; i < l->tokens.size(); ++i) s.push_back(static_cast<std::uint32_t>(to_size(l->tokens[i])));
    at_line(l->number, [&] { return complex::SimplicialComplex::from_facets({s}); });
    facets.push_back(std::move(s));
  }
  out.complex = at_line(b.line, [&] { return complex::SimplicialComplex::from_facets(facets); });
  for (const auto* l : b.lines("cochain")) {
    NumberedCochain c{l->number, to_size(l->tokens[1]), {}};
    for (std::size_t i = 2; i < l->tokens.size(); ++i) c.values.push_back(to_int(l->tokens[i]));
    if (c.values.size() != out.complex.count(c.degree))
      throw DocumentError(l->number, "degree-" + std::to_string(c.degree) + " cochain needs " +
                                         std::to_string(out.complex.count(c.degree)) + " values, got " +
                                         std::to_string(c.values.size()));
    out.cochains.push_back(std::move(c));
  }
  return out;
}

FieldData build_field(const Block& b) {
  FieldData out;
  const auto& e = b.lines("extent").front()->tokens;
  for (std::size_t a = 0; a < 4; ++a) out.grid.extents[a] = to_size(e[1 + a]);
  if (out.grid.site_count() == 0) throw DocumentError(b.lines("extent").front()->number, "extents must be positive");
  out.grid.region_of.assign(out.grid.site_count(), 0);
  out.values.assign(out.grid.site_count(), 0.0);
  std::set<std::size_t> seen;
  for (const auto* l : b.lines("site")) {
    const auto& t = l->tokens;
    std::array<std::size_t, 4> x{};
    for (std::size_t a = 0; a < 4; ++a) x[a] = to_size(t[1 + a]);
    const auto idx = at_line(l->number, [&] { return out.grid.site_index(x); });
    if (!seen.insert(idx).second) throw DocumentError(l->number, "site listed twice");
    out.values[idx] = std::stod(t[6]);
    if (t.size() == 9) out.grid.region_of[idx] = std::stoll(t[8]);
  }
  return out;
}

BraneData build_branes(const Document& doc, const Block& b) {
  BraneData out;
  out.config.host = build_complex(*doc.find(b.lines("host").front()->tokens[1])).complex;
  for (const auto* l : b.lines("brane")) {
    const auto& t = l->tokens;
    out.config.branes.push_back({t[1], to_size(t[3]), build_complex(*doc.find(t[5])).complex});
    const auto r = out.config.validate();
    if (!r.ok()) throw DocumentError(l->number, r.violations.back().law + ": brane " + t[1]);
  }
  for (const auto* l : b.lines("string")) out.strings.push_back({l->tokens[1], l->tokens[2]});
  return out;
}

std::vector<pndp::PNDPSpec> build_pndp(const Block& b) {
  std::vector<pndp::PNDPSpec> out;
  for (const auto* l : b.lines("pndp")) {
    const auto& t = l->tokens;
    out.push_back({t[1], std::stoll(t[3]), std::stoll(t[5]), std::stoll(t[7]), std::stoll(t[9])});
  }
  return out;
}

}  // namespace kcat::cli
