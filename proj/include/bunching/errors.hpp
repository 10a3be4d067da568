// Copyright 2026 The Bunching Authors
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

#ifndef BUNCHING_ERRORS_HPP
#define BUNCHING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bunching {

/// Base class of every error raised by the library. The CLI maps all of
/// these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (non-square, mismatched dimensions).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Structured input (circuit, occupations, files) failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a size guard.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The input is incompatible with the requested statistics model.
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace bunching

#endif
