/*
   Copyright 2026 The hfrac authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hfrac {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact division failed: division by zero, or a quotient that would
/// leave a remainder where the algorithm requires exactness.
class DivisionError : public Error {
   public:
    using Error::Error;
};

/// An inverse was requested for a ring element that has none (for example a
/// non-constant polynomial, or a series whose constant term is zero).
class InvertibilityError : public Error {
   public:
    using Error::Error;
};

/// A structural precondition on a continued fraction or matrix was violated
/// (wrong delta, illegal degree, missing level, non-square matrix, ...).
class StructureError : public Error {
   public:
    using Error::Error;
};

/// A computation could not be carried to the requested order/depth, e.g. a
/// truncated series does not hold enough trusted coefficients.
class DepthError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace hfrac
