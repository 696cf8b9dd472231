// Copyright 2026 The rispace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rispace {

/// Failure categories surfaced by the library.  The CLI maps every kind to
/// exit status 1; inconclusive numeric verdicts are not errors and use
/// exit status 2 instead.
enum class ErrorKind {
  parameter,            // bad argument value (e.g. t_min out of range)
  range,                // interval outside a grid span
  shape,                // grid mismatch between two sampled functions
  spec,                 // inadmissible space specification
  domain,               // input outside an operator's domain (e.g. negative f)
  precondition,         // violated theorem hypothesis
  unsupported_duality,  // associate space not in the closed-form table
  parse,                // mini-language or file syntax error
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::range: return "range";
    case ErrorKind::shape: return "shape";
    case ErrorKind::spec: return "spec";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::unsupported_duality: return "unsupported-duality";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace rispace
