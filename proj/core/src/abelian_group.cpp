#include "kcat/kth/abelian_group.hpp"

#include <sstream>

#include "kcat/error.hpp"
#include "kcat/kth/smith.hpp"

namespace kcat::kth {

std::string GroupNormalForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank > 0) {
    sep();
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
  }
  for (Int t : torsion) {
    sep();
    os << "Z/" << t;
  }
  if (first) os << '0';
  return os.str();
}

std::string GroupNormalForm::describe() const {
  std::ostringstream os;
  os << "free rank " << free_rank << ", ";
  if (torsion.empty()) {
    os << "no torsion";
  } else {
    os << "torsion ";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? " + " : "") << "Z/" << torsion[i];
  }
  return os.str();
}

GroupNormalForm normalize(std::size_t generators, const IntMatrix& relations) {
  if (relations.cols() != generators && !(relations.rows() == 0))
    throw StructuralError("relation matrix has " + std::to_string(relations.cols()) + " columns for " +
                          std::to_string(generators) + " generators");
  GroupNormalForm nf;
  if (relations.rows() == 0) {
    nf.free_rank = generators;
    return nf;
  }
  const SmithForm s = smith_normal_form(relations);
  nf.free_rank = generators - s.rank;
  for (Int f : s.factors)
    if (f > 1) nf.torsion.push_back(f);
  return nf;
}

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() == 0) relations_ = IntMatrix(0, generators_);
  normal_form_ = normalize(generators_, relations_);
}

AbelianGroupPresentation AbelianGroupPresentation::from_normal_form(const GroupNormalForm& nf) {
  const std::size_t g = nf.free_rank + nf.torsion.size();
  IntMatrix rel(nf.torsion.size(), g);
  for (std::size_t i = 0; i < nf.torsion.size(); ++i) rel(i, nf.free_rank + i) = nf.torsion[i];
  return {g, std::move(rel)};
}

AbelianGroupPresentation AbelianGroupPresentation::free(std::size_t rank) { return {rank, IntMatrix(0, rank)}; }

AbelianGroupPresentation AbelianGroupPresentation::direct_sum(const AbelianGroupPresentation& other) const {
  return {generators_ + other.generators_, relations_.block_diagonal(other.relations_)};
}

bool groups_isomorphic(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b) {
  return a.normal_form() == b.normal_form();
}

}  // namespace kcat::kth
