// Copyright 2026 The Authors.
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

#ifndef SSMTSP_PREDICTOR_H_
#define SSMTSP_PREDICTOR_H_

#include <span>
#include <stdexcept>
#include <string>

#include "ssmtsp/sssp.h"

namespace ssmtsp {

class PredictorError : public std::runtime_error {
 public:
  explicit PredictorError(const std::string& what)
      : std::runtime_error(what) {}
};

// Produces an estimate of the target distance from the trace of the first
// iterations. Implementations are immutable once built, so one instance may
// serve concurrent searches.
class Predictor {
 public:
  virtual ~Predictor() = default;

  // A positive real, or kInf for "no estimate".
  virtual double Predict(std::span<const TracePoint> trace) const = 0;
  virtual std::string kind() const = 0;
};

class ConstantPredictor final : public Predictor {
 public:
  explicit ConstantPredictor(double value) : value_(value) {}

  double Predict(std::span<const TracePoint>) const override { return value_; }
  std::string kind() const override { return "constant"; }

 private:
  double value_;
};

}  // namespace ssmtsp

#endif  // SSMTSP_PREDICTOR_H_
