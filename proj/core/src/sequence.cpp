#include "kcat/exact/sequence.hpp"

#include "kcat/kth/smith.hpp"

namespace kcat::exact {

ExactnessDetail exactness(const ShortExactSeq& s) {
  require_homomorphism(s.mono, s.left, s.middle, "first map");
  require_homomorphism(s.epi, s.middle, s.right, "second map");

  ExactnessDetail d;
  d.injective = is_injective(s.mono, s.left, s.middle);
  d.surjective = is_surjective(s.epi, s.right);
  d.image_in_kernel = is_zero_map(s.epi * s.mono, s.right);

  // ker(epi) = {x : epi x ∈ rel(right)}, compared against im(mono) + rel(middle).
  const IntMatrix kernel = kth::kernel_basis(s.epi.hstack(s.right.relations()));
  const IntMatrix kernel_part = kernel.slice(0, s.middle.generators(), 0, kernel.cols());
  d.kernel_in_image = kth::column_span_contains(s.mono.hstack(s.middle.relations()), kernel_part);
  return d;
}

bool is_exact_sequence(const ShortExactSeq& s) { return exactness(s).exact(); }

ShortExactSeq split_sequence(const FGModule& left, const FGModule& right) {
  const std::size_t a = left.generators(), b = right.generators();
  IntMatrix inclusion(a + b, a);
  for (std::size_t i = 0; i < a; ++i) inclusion(i, i) = 1;
  IntMatrix projection(b, a + b);
  for (std::size_t i = 0; i < b; ++i) projection(i, a + i) = 1;
  return {left, left.direct_sum(right), right, std::move(inclusion), std::move(projection)};
}

}  // namespace kcat::exact
