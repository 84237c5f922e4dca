#include "lcsud/lagrange.hpp"

namespace lcsud {

EvaluationPoints generate_points(const PrimeField& field, int machines,
                                 int recovery_threshold, std::uint64_t seed) {
  (void)seed;
  const long required = static_cast<long>(machines) + recovery_threshold;
  if (field.modulus() < static_cast<std::uint64_t>(required)) {
    throw FieldTooSmall(field.modulus(), required);
  }
  EvaluationPoints points;
  points.betas.reserve(static_cast<std::size_t>(recovery_threshold));
  for (int l = 1; l <= recovery_threshold; ++l) {
    points.betas.push_back(field.element(static_cast<std::uint64_t>(l - 1)));
  }
  points.alphas.reserve(static_cast<std::size_t>(machines));
  for (int n = 1; n <= machines; ++n) {
    points.alphas.push_back(
        field.element(static_cast<std::uint64_t>(recovery_threshold - 1 + n)));
  }
  return points;
}

std::vector<FieldElement> lagrange_weights(std::span<const FieldElement> nodes,
                                           FieldElement z) {
  const std::size_t n = nodes.size();
  if (n == 0) throw DimError("lagrange_weights needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[i] == nodes[j]) throw DuplicateNodes();
    }
  }
  const FieldElement unit = nodes[0].pow(0);
  std::vector<FieldElement> weights(n, unit);
  if (n == 1) return weights;  // constant polynomial, weight 1 everywhere

  // Denominators inverted in one batch; numerators by direct product.
  std::vector<FieldElement> denominators(n, unit);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      denominators[j] = denominators[j] * (nodes[j] - nodes[k]);
    }
  }
  const std::vector<FieldElement> inverses = batch_inv(denominators);

  for (std::size_t j = 0; j < n; ++j) {
    FieldElement w = inverses[j];
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      w = w * (z - nodes[k]);
    }
    weights[j] = w;
  }
  return weights;
}

FieldMatrix encode_block(std::span<const FieldMatrix> parts,
                         std::span<const FieldElement> betas,
                         FieldElement alpha) {
  if (parts.size() != betas.size() || parts.empty()) {
    throw DimError("encode_block needs one beta per part");
  }
  const std::vector<FieldElement> weights = lagrange_weights(betas, alpha);
  return linear_combination(parts, weights);
}

FieldMatrix interpolate_at(std::span<const FieldElement> nodes,
                           std::span<const FieldMatrix> values,
                           FieldElement target) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw DimError("interpolate_at needs one value per node");
  }
  const std::vector<FieldElement> weights = lagrange_weights(nodes, target);
  return linear_combination(values, weights);
}

}  // namespace lcsud
