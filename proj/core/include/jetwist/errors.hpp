/*
   Copyright 2026 The jetwist Authors

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

#ifndef JETWIST_ERRORS_HPP
#define JETWIST_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace jetwist {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression or problem-file text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(format(msg, line, column)), message_(msg), line_(line), column_(column) {}
    ParseError(const std::string& msg, std::size_t column)
        : ParseError(msg, 1, column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without its position prefix.
    const std::string& message() const noexcept { return message_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
    }
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(const std::string& name)
        : Error("unknown symbol '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A substitution or evaluation did not cover every symbol of its target.
class MissingSymbols : public Error {
public:
    explicit MissingSymbols(std::vector<std::string> names)
        : Error(format(names)), names_(std::move(names)) {}
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    static std::string format(const std::vector<std::string>& names) {
        std::string s = "unassigned symbols:";
        for (const auto& n : names) s += " " + n;
        return s;
    }
    std::vector<std::string> names_;
};

/// Numeric evaluation left the real domain (ln of a non-positive value, division by zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A matrix whose determinant is identically zero.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (wrong field kind, order too low, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A field set whose linear system for the involution coefficients has no unique solution.
class RankDeficient : public Error {
public:
    using Error::Error;
};

/// A field set not closed under commutation.
class NotInInvolution : public Error {
public:
    using Error::Error;
};

/// A twist that violates the horizontal Maurer-Cartan equation where it is required.
class MaurerCartanViolation : public Error {
public:
    using Error::Error;
};

}  // namespace jetwist

#endif
