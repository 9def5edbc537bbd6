// Copyright 2026 The bhwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bhwalk {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition or physical constraint.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Vertex, qubit or basis index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested Fock space exceeds the configured dimension cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what), requested_(requested), cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Krylov propagation could not reach its error target.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A layer of simultaneous gates cannot be realized with the allowed controls.
class InfeasibleSchedule : public Error {
 public:
  InfeasibleSchedule(const std::string& what, std::vector<std::size_t> gates)
      : Error(what), gates_(std::move(gates)) {}

  /// Indices (into the source circuit) of the conflicting gates.
  const std::vector<std::size_t>& gates() const noexcept { return gates_; }

 private:
  std::vector<std::size_t> gates_;
};

/// Structured input (JSON document) does not match its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace bhwalk
