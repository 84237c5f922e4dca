#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcsud {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Operands belong to different prime fields.
class FieldMismatch : public Error {
 public:
  FieldMismatch(std::uint64_t lhs_modulus, std::uint64_t rhs_modulus)
      : Error("field mismatch: modulus " + std::to_string(lhs_modulus) +
              " vs " + std::to_string(rhs_modulus)) {}
};

/// Inversion of zero; carries the offending index for batch operations.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
  explicit DivisionByZero(std::size_t batch_index)
      : Error("division by zero in prime field at index " +
              std::to_string(batch_index)),
        index_(batch_index) {}

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// A dimension is not divisible by the requested part count.
class PartitionError : public Error {
 public:
  PartitionError(long dimension, long parts)
      : Error("dimension " + std::to_string(dimension) +
              " not divisible into " + std::to_string(parts) + " parts"),
        dimension_(dimension),
        parts_(parts) {}

  long dimension() const { return dimension_; }
  long parts() const { return parts_; }

 private:
  long dimension_;
  long parts_;
};

/// Blocks do not conform for concatenation.
class AssemblyError : public Error {
 public:
  explicit AssemblyError(const std::string& message)
      : Error("assembly error: " + message) {}
};

/// Matrix shape mismatch.
class DimError : public Error {
 public:
  explicit DimError(const std::string& message)
      : Error("dimension error: " + message) {}
};

/// Interpolation nodes are not pairwise distinct.
class DuplicateNodes : public Error {
 public:
  DuplicateNodes() : Error("interpolation nodes are not pairwise distinct") {}
};

/// The field has fewer than N + L distinct elements.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(std::uint64_t modulus, long required)
      : Error("field of size " + std::to_string(modulus) +
              " cannot supply " + std::to_string(required) +
              " distinct evaluation points") {}
};

/// A realization has fewer members than the group width L + S.
class InsufficientMachines : public Error {
 public:
  InsufficientMachines(int available, int required)
      : Error("realization of size " + std::to_string(available) +
              " is below the group width " + std::to_string(required)) {}
};

/// Realization enumeration would exceed the configured cap.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(unsigned long long count, unsigned long long cap)
      : Error("realization count " + std::to_string(count) +
              " exceeds enumeration cap " + std::to_string(cap)) {}
};

/// A group received fewer results than the recovery threshold.
class DecodeThresholdNotMet : public Error {
 public:
  DecodeThresholdNotMet(int group, int received, int required)
      : Error("group " + std::to_string(group) + " has " +
              std::to_string(received) + " results, needs " +
              std::to_string(required)),
        group_(group) {}

  int group() const { return group_; }

 private:
  int group_;
};

/// A worker is missing a stored or downloaded payload it needs.
class IncompleteInputs : public Error {
 public:
  explicit IncompleteInputs(const std::string& message)
      : Error("incomplete worker inputs: " + message) {}
};

/// Unrecognized scheme or cost-model identifier.
class UnknownScheme : public Error {
 public:
  explicit UnknownScheme(const std::string& id)
      : Error("unknown scheme id: " + id) {}
};

/// Invalid simulation configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error("config error: " + message) {}
};

/// A required slice is not covered by the machine's stored placement.
class MissingStorage : public Error {
 public:
  MissingStorage(int machine, const std::string& what)
      : Error("machine " + std::to_string(machine) +
              " does not store required " + what) {}
};

}  // namespace lcsud
