#pragma once

#include <stdexcept>
#include <string>

namespace qvote {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed scenario files, order strings, or amplitude literals.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A projection annihilated the state: Tr(P rho P) fell below tolerance.
class ZeroSupportError : public Error {
public:
  explicit ZeroSupportError(const std::string& what) : Error(what) {}
};

// QMR2 destructive interference: society's unnormalized state vanished.
class RevoteRequired : public Error {
public:
  RevoteRequired() : Error("revote required: society's state interfered to zero") {}
};

// QMR2 is defined on pure states only.
class NonPureInput : public Error {
public:
  explicit NonPureInput(const std::string& what) : Error(what) {}
};

class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

} // namespace qvote
