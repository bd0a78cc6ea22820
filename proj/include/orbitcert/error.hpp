#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitcert {

enum class ErrorKind {
  InvalidLetter,
  InvalidPoint,
  InvalidSpec,
  InvalidArgument,
  ParseError,
  NotSimple,
  NotProper,
  CertificateInvalid,
  OrbitIsFinite,
  BudgetTooSmall,
  BudgetExceeded,
  MetricBudgetExceeded,
  WindowDisjoint,
  NotFinitePerm,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by ray search when the whole orbit was exhausted before reaching
/// the requested length. `diameter` is the largest BFS depth in the orbit.
class OrbitIsFiniteError : public Error {
 public:
  OrbitIsFiniteError(std::int64_t diameter, std::size_t orbit_size);

  std::int64_t diameter() const noexcept { return diameter_; }
  std::size_t orbit_size() const noexcept { return orbit_size_; }

 private:
  std::int64_t diameter_;
  std::size_t orbit_size_;
};

/// Two prefix points of a ray coincide: s_n...s_1 x == s_m...s_1 x.
/// Index 0 denotes the base point itself.
class NotSimpleError : public Error {
 public:
  NotSimpleError(std::size_t first, std::size_t second);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace orbitcert
