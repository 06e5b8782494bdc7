// Copyright 2026 The schurlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the domain of the operation (e.g. not in the algebra).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A family of automorphisms fails the homomorphism property at (r, s).
class ActionError : public Error {
 public:
  ActionError(const std::string& what, int r, int s) : Error(what), r_(r), s_(s) {}
  int r() const { return r_; }
  int s() const { return s_; }

 private:
  int r_;
  int s_;
};

/// A family expected to be linearly independent is numerically rank deficient.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Generator words fail to span the domain of a duality isomorphism.
class ExtensionError : public Error {
 public:
  ExtensionError(const std::string& what, int achieved, int required)
      : Error(what), achieved_(achieved), required_(required) {}
  int achieved_rank() const { return achieved_; }
  int required_rank() const { return required_; }

 private:
  int achieved_;
  int required_;
};

class NotSchurMultiplierError : public Error {
 public:
  using Error::Error;
};

class NotHerzSchurError : public Error {
 public:
  using Error::Error;
};

class InvarianceViolationError : public Error {
 public:
  using Error::Error;
};

/// Module action does not intertwine with the group action.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver did not converge; carries the best bounds found.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}
  double best_lower() const { return lower_; }
  double best_upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace schurlab
