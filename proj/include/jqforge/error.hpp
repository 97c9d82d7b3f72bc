/*
 * Copyright 2026 The jqforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace jqforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Malformed textual input. */
class ParseError : public Error {
public:
    using Error::Error;
};

/* Input outside the domain of an operation (arity mismatch, undefined closed form, ...). */
class DomainError : public Error {
public:
    using Error::Error;
};

/* A scalar with even denominator was fed to something that needs Z_2. */
class NotInZ2Error : public DomainError {
public:
    using DomainError::DomainError;
};

class IndecomposableError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedCoefficientsError : public DomainError {
public:
    using DomainError::DomainError;
};

/* A search over finite bounds came back empty. */
class NotFoundError : public Error {
public:
    using Error::Error;
};

}  // namespace jqforge
