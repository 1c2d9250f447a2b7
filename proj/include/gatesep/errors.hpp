// Copyright 2026 The gatesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATESEP_ERRORS_HPP
#define GATESEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gatesep {

/// Base of every error raised by the library. Callers that only need a
/// message can catch this; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix handed to an operation that requires a gate is not unitary
/// within `Tolerance::eps_unitary`.
class NotUnitary : public Error {
 public:
  NotUnitary(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class UnknownGateName : public Error {
 public:
  using Error::Error;
};

/// No square-root sign pattern reproduces the phase-normalized matrix.
class ReconstructionFailed : public Error {
 public:
  ReconstructionFailed(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// The entrywise test battery and the realignment oracle disagree.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class TooManyLines : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class LineIndexError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace gatesep

#endif  // GATESEP_ERRORS_HPP
