// Copyright 2026 The nqec Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace nqec {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NQEC_DEFINE_ERROR(Name)     \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

NQEC_DEFINE_ERROR(NonHermitianInput)
NQEC_DEFINE_ERROR(NegativeSpectrum)
NQEC_DEFINE_ERROR(DimensionMismatch)
NQEC_DEFINE_ERROR(OutOfRange)
NQEC_DEFINE_ERROR(InconsistentGroup)
NQEC_DEFINE_ERROR(ParseError)
NQEC_DEFINE_ERROR(NonOrthonormal)
NQEC_DEFINE_ERROR(NonUnitary)
NQEC_DEFINE_ERROR(SubspacesOverlap)
NQEC_DEFINE_ERROR(NotEigenspace)
NQEC_DEFINE_ERROR(UnsupportedDimension)
NQEC_DEFINE_ERROR(IllConditioned)
NQEC_DEFINE_ERROR(NoConvergence)
NQEC_DEFINE_ERROR(TruthTableMismatch)

#undef NQEC_DEFINE_ERROR

// Carries the offending residual so callers can report it.
class ToleranceViolation : public Error {
 public:
  ToleranceViolation(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace nqec
