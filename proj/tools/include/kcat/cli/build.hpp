#pragma once

#include <string>
#include <vector>

#include "kcat/brane/brane.hpp"
#include "kcat/cat/category.hpp"
#include "kcat/cli/document.hpp"
#include "kcat/complex/simplicial_complex.hpp"
#include "kcat/exact/exact_structure.hpp"
#include "kcat/exact/waldhausen.hpp"
#include "kcat/gft/gft.hpp"
#include "kcat/pndp/pndp.hpp"

namespace kcat::cli {

// Turn validated blocks into library values. Library errors raised while
// building become DocumentErrors carrying the offending line.

/// Missing identities are added as id_<object>; a declared endomorphism
/// named id_<object> is used as that object's identity.
cat::CategoryPtr build_category(const Block& b);

exact::ExactStructure build_exact(const Document& doc, const Block& b);

/// Either exact_to_waldhausen of the referenced exact block (ConversionRefused
/// propagates) or the explicit classes over a category block.
exact::WaldhausenStructure build_waldhausen(const Document& doc, const Block& b);

struct NumberedCochain {
  std::size_t line = 0;
  std::size_t degree = 0;
  std::vector<Int> values;
};

struct ComplexData {
  complex::SimplicialComplex complex;
  std::vector<NumberedCochain> cochains;
};

/// Face closure of the listed simplices; cochain lengths are checked.
ComplexData build_complex(const Block& b);

struct FieldData {
  gft::ChunkGrid grid;
  std::vector<double> values;
};

/// Unlisted sites hold 0 in region 0.
FieldData build_field(const Block& b);

struct BraneData {
  brane::BraneConfig config;
  std::vector<brane::StringConfig> strings;
};

BraneData build_branes(const Document& doc, const Block& b);

std::vector<pndp::PNDPSpec> build_pndp(const Block& b);

}  // namespace kcat::cli
