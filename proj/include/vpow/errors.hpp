/*
 * Copyright 2026 The vpow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VPOW_ERRORS_HPP
#define VPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vpow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed game, configuration, model or file contents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An algorithm was asked to run outside its domain (e.g. minimum winning
/// events on a non-monotone rule, permutation Shapley-Shubik on a ternary
/// game).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of probability zero.
class UndefinedConditionalError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose denominator vanishes (Coleman measures with Pr(O) in {0,1}).
class UndefinedDenominatorError : public Error {
 public:
  using Error::Error;
};

/// The configuration space is larger than the exact enumeration cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Monte-Carlo estimation could not proceed (e.g. rejection rate too high).
class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vpow

#endif  // VPOW_ERRORS_HPP
