#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lcsud/errors.hpp"
#include "lcsud/ffield.hpp"

namespace lcsud {

/// Direction along which a matrix is split or concatenated.
enum class Axis { RowWise, ColumnWise };

/// Equal-extent partition of one matrix dimension.
struct BlockLayout {
  Axis axis;
  long parts;
  long part_extent;
};

/// Throws PartitionError if dimension is not divisible by parts.
BlockLayout make_block_layout(long dimension, Axis axis, long parts);

/// Dense row-major matrix over a prime field. Immutable use is the norm;
/// entries are canonical residues, so equality is exact.
class FieldMatrix {
 public:
  FieldMatrix(const PrimeField& field, long rows, long cols);

  static FieldMatrix identity(const PrimeField& field, long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long symbol_count() const { return rows_ * cols_; }
  const PrimeField& field() const { return field_; }

  FieldElement at(long row, long col) const {
    return entries_[static_cast<std::size_t>(row * cols_ + col)];
  }
  void set(long row, long col, FieldElement value);

  FieldMatrix row_slice(long begin, long end) const;  // rows [begin, end)
  FieldMatrix col_slice(long begin, long end) const;  // cols [begin, end)

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) {
    return !(a == b);
  }

 private:
  long rows_;
  long cols_;
  PrimeField field_;
  std::vector<FieldElement> entries_;
};

/// Splits m into k equal blocks along axis. Throws PartitionError.
std::vector<FieldMatrix> partition(const FieldMatrix& m, Axis axis, long parts);

/// Concatenates conforming blocks along axis; inverse of partition.
/// Throws AssemblyError on shape or field mismatch.
FieldMatrix assemble(const std::vector<FieldMatrix>& blocks, Axis axis);

/// Exact product by the textbook triple loop; the ground-truth oracle.
/// Throws DimError on nonconforming shapes or mismatched fields.
FieldMatrix reference_matmul(const FieldMatrix& a, const FieldMatrix& b);

/// True iff same shape, same field, identical canonical entries.
bool matrices_equal(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix matrix_add(const FieldMatrix& a, const FieldMatrix& b);

/// sum_i blocks[i] * weights[i]; all blocks conformal. Throws DimError.
FieldMatrix linear_combination(std::span<const FieldMatrix> blocks,
                               std::span<const FieldElement> weights);

/// Deterministic seeded fill; entries are engine outputs reduced mod p.
FieldMatrix random_matrix(const PrimeField& field, long rows, long cols,
                          std::uint64_t seed);

/// Text fixture format: first line "rows cols p", then row-major integers.
FieldMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const FieldMatrix& m);

}  // namespace lcsud
