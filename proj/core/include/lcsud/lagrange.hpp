#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcsud/ffield.hpp"
#include "lcsud/matrix.hpp"

namespace lcsud {

/// Interpolation targets (betas, one per data part) and machine points
/// (alphas, one per machine). All distinct, the two sets disjoint.
struct EvaluationPoints {
  std::vector<FieldElement> betas;
  std::vector<FieldElement> alphas;

  /// 1-based accessors matching machine labels and part indices.
  const FieldElement& alpha_for(int machine) const {
    return alphas[static_cast<std::size_t>(machine - 1)];
  }
  const FieldElement& beta(int part) const {
    return betas[static_cast<std::size_t>(part - 1)];
  }
};

/// Deterministic point rule: beta_l = l-1, alpha_n = L-1+n. The seed is
/// reserved for randomized selection rules and is ignored by the default.
/// Throws FieldTooSmall when p < machines + recovery_threshold.
EvaluationPoints generate_points(const PrimeField& field, int machines,
                                 int recovery_threshold,
                                 std::uint64_t seed = 0);

/// Lagrange basis values at z over the given nodes:
/// weight_j = prod_{j' != j} (z - node_j') / (node_j - node_j').
/// Throws DuplicateNodes.
std::vector<FieldElement> lagrange_weights(std::span<const FieldElement> nodes,
                                           FieldElement z);

/// Evaluates the degree-(L-1) matrix polynomial through (beta_l, parts_l)
/// at alpha. encode_block(parts, betas, beta_l) == parts_l.
FieldMatrix encode_block(std::span<const FieldMatrix> parts,
                         std::span<const FieldElement> betas,
                         FieldElement alpha);

/// Interpolates the matrix polynomial through (node_j, value_j) at target.
/// Exact for degree < |nodes|.
FieldMatrix interpolate_at(std::span<const FieldElement> nodes,
                           std::span<const FieldMatrix> values,
                           FieldElement target);

/// One machine's coded payload: the encoding polynomial of either the whole
/// data matrix (group absent) or one group slice, evaluated at the machine's
/// point.
struct CodedBlock {
  int machine;
  std::optional<int> group;
  FieldElement point;
  FieldMatrix payload;
};

}  // namespace lcsud
