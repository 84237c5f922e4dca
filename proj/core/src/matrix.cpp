#include "lcsud/matrix.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <string>

namespace lcsud {

BlockLayout make_block_layout(long dimension, Axis axis, long parts) {
  if (parts < 1 || dimension % parts != 0) {
    throw PartitionError(dimension, parts);
  }
  return BlockLayout{axis, parts, dimension / parts};
}

FieldMatrix::FieldMatrix(const PrimeField& field, long rows, long cols)
    : rows_(rows),
      cols_(cols),
      field_(field),
      entries_(static_cast<std::size_t>(rows * cols), field.zero()) {
  if (rows < 0 || cols < 0) throw DimError("negative matrix dimension");
}

FieldMatrix FieldMatrix::identity(const PrimeField& field, long n) {
  FieldMatrix m(field, n, n);
  for (long i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

void FieldMatrix::set(long row, long col, FieldElement value) {
  if (value.modulus() != field_.modulus()) {
    throw FieldMismatch(field_.modulus(), value.modulus());
  }
  entries_[static_cast<std::size_t>(row * cols_ + col)] = value;
}

FieldMatrix FieldMatrix::row_slice(long begin, long end) const {
  if (begin < 0 || end > rows_ || begin > end) {
    throw DimError("row slice [" + std::to_string(begin) + ", " +
                   std::to_string(end) + ") out of range");
  }
  FieldMatrix out(field_, end - begin, cols_);
  for (long i = begin; i < end; ++i) {
    for (long j = 0; j < cols_; ++j) out.set(i - begin, j, at(i, j));
  }
  return out;
}

FieldMatrix FieldMatrix::col_slice(long begin, long end) const {
  if (begin < 0 || end > cols_ || begin > end) {
    throw DimError("column slice [" + std::to_string(begin) + ", " +
                   std::to_string(end) + ") out of range");
  }
  FieldMatrix out(field_, rows_, end - begin);
  for (long i = 0; i < rows_; ++i) {
    for (long j = begin; j < end; ++j) out.set(i, j - begin, at(i, j));
  }
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.entries_ == b.entries_;
}

bool matrices_equal(const FieldMatrix& a, const FieldMatrix& b) {
  return a == b;
}

std::vector<FieldMatrix> partition(const FieldMatrix& m, Axis axis, long parts) {
  const long dimension = (axis == Axis::RowWise) ? m.rows() : m.cols();
  const BlockLayout layout = make_block_layout(dimension, axis, parts);
  std::vector<FieldMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(parts));
  for (long k = 0; k < parts; ++k) {
    const long lo = k * layout.part_extent;
    const long hi = lo + layout.part_extent;
    blocks.push_back(axis == Axis::RowWise ? m.row_slice(lo, hi)
                                           : m.col_slice(lo, hi));
  }
  return blocks;
}

FieldMatrix assemble(const std::vector<FieldMatrix>& blocks, Axis axis) {
  if (blocks.empty()) throw AssemblyError("no blocks");
  const FieldMatrix& first = blocks.front();
  long total = 0;
  for (const FieldMatrix& b : blocks) {
    if (!(b.field() == first.field())) throw AssemblyError("field mismatch");
    if (axis == Axis::RowWise && b.cols() != first.cols()) {
      throw AssemblyError("column counts differ");
    }
    if (axis == Axis::ColumnWise && b.rows() != first.rows()) {
      throw AssemblyError("row counts differ");
    }
    total += (axis == Axis::RowWise) ? b.rows() : b.cols();
  }
  FieldMatrix out(first.field(),
                  axis == Axis::RowWise ? total : first.rows(),
                  axis == Axis::RowWise ? first.cols() : total);
  long offset = 0;
  for (const FieldMatrix& b : blocks) {
    for (long i = 0; i < b.rows(); ++i) {
      for (long j = 0; j < b.cols(); ++j) {
        if (axis == Axis::RowWise) {
          out.set(offset + i, j, b.at(i, j));
        } else {
          out.set(i, offset + j, b.at(i, j));
        }
      }
    }
    offset += (axis == Axis::RowWise) ? b.rows() : b.cols();
  }
  return out;
}

FieldMatrix reference_matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimError("matmul " + std::to_string(a.rows()) + "x" +
                   std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                   "x" + std::to_string(b.cols()));
  }
  if (!(a.field() == b.field())) {
    throw DimError("matmul operands over different fields");
  }
  FieldMatrix out(a.field(), a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < b.cols(); ++j) {
      FieldElement acc = a.field().zero();
      for (long k = 0; k < a.cols(); ++k) {
        acc += a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

FieldMatrix matrix_add(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) {
    throw DimError("matrix addition shape or field mismatch");
  }
  FieldMatrix out(a.field(), a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  }
  return out;
}

FieldMatrix linear_combination(std::span<const FieldMatrix> blocks,
                               std::span<const FieldElement> weights) {
  if (blocks.empty() || blocks.size() != weights.size()) {
    throw DimError("linear combination needs equally many blocks and weights");
  }
  const FieldMatrix& first = blocks.front();
  FieldMatrix out(first.field(), first.rows(), first.cols());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const FieldMatrix& b = blocks[k];
    if (b.rows() != first.rows() || b.cols() != first.cols() ||
        !(b.field() == first.field())) {
      throw DimError("linear combination blocks not conformal");
    }
    if (weights[k].is_zero()) continue;
    for (long i = 0; i < b.rows(); ++i) {
      for (long j = 0; j < b.cols(); ++j) {
        out.set(i, j, out.at(i, j) + b.at(i, j) * weights[k]);
      }
    }
  }
  return out;
}

FieldMatrix random_matrix(const PrimeField& field, long rows, long cols,
                          std::uint64_t seed) {
  // Raw engine output mod p: fully specified by the standard, so fixtures
  // are reproducible across platforms.
  std::mt19937_64 engine(seed);
  FieldMatrix out(field, rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) out.set(i, j, field.element(engine()));
  }
  return out;
}

FieldMatrix read_matrix(std::istream& in) {
  long rows = 0;
  long cols = 0;
  std::uint64_t modulus = 0;
  if (!(in >> rows >> cols >> modulus)) {
    throw DimError("matrix fixture header must be 'rows cols p'");
  }
  PrimeField field(modulus);
  FieldMatrix out(field, rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      std::uint64_t v = 0;
      if (!(in >> v)) throw DimError("matrix fixture truncated");
      out.set(i, j, field.element(v));
    }
  }
  return out;
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.rows() << " " << m.cols() << " " << m.field().modulus() << "\n";
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      out << m.at(i, j).value() << (j + 1 == m.cols() ? "" : " ");
    }
    out << "\n";
  }
}

}  // namespace lcsud
