// Copyright 2026 The ncgeom Authors
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

#ifndef NCG_ERROR_HPP
#define NCG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace ncg {

/// Thrown when a caller breaks a precondition (dimension mismatch, wrong
/// ambient space, non-central argument where one is required).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mathematical failure reported as data: a stable machine-readable code
/// plus a human-readable message carrying the witness.
struct Failure {
  std::string code;
  std::string message;
};

/// Either a value or a Failure.
template <class T>
class Outcome {
 public:
  Outcome(T value) : state_(std::move(value)) {}        // NOLINT
  Outcome(Failure failure) : state_(std::move(failure)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::runtime_error(failure().code + ": " + failure().message);
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::runtime_error(failure().code + ": " + failure().message);
    return std::get<T>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Failure& failure() const { return std::get<Failure>(state_); }

 private:
  std::variant<T, Failure> state_;
};

}  // namespace ncg

#endif  // NCG_ERROR_HPP
