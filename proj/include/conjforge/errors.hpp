#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquarefreeError : public Error {
 public:
  NotSquarefreeError() : Error("polynomial is not squarefree over Q") {}
};

class NotPrimeError : public Error {
 public:
  explicit NotPrimeError(std::uint64_t n)
      : Error("modulus " + std::to_string(n) + " is not prime") {}
};

// Dedekind-style factor patterns are only defined when the reduction mod p
// stays squarefree; callers must skip (or reject) such primes explicitly.
class NotSquarefreeModPError : public Error {
 public:
  explicit NotSquarefreeModPError(std::uint64_t p)
      : Error("polynomial is not squarefree modulo " + std::to_string(p)),
        prime(p) {}
  std::uint64_t prime;
};

class DegreeMismatchError : public Error {
 public:
  explicit DegreeMismatchError(const std::string& what) : Error(what) {}
};

class SearchExhaustedError : public Error {
 public:
  explicit SearchExhaustedError(std::uint64_t budget_used)
      : Error("search exhausted its iteration budget (" +
              std::to_string(budget_used) + ")"),
        budget(budget_used) {}
  std::uint64_t budget;
};

class NotNormalizingError : public Error {
 public:
  NotNormalizingError()
      : Error("element does not normalize the generated subgroup") {}
};

class PrincipalHomogeneityViolatedError : public Error {
 public:
  explicit PrincipalHomogeneityViolatedError(const std::string& what)
      : Error(what) {}
};

class CertificateRequiredError : public Error {
 public:
  CertificateRequiredError()
      : Error("operation requires a field with a symmetric-group certificate") {
  }
};

class MissingSplitWitnessError : public Error {
 public:
  explicit MissingSplitWitnessError(std::uint64_t p)
      : Error("field carries no split-prime witness for p = " +
              std::to_string(p)) {}
};

class InvalidDatumError : public Error {
 public:
  explicit InvalidDatumError(std::vector<std::string> violation_list)
      : Error(join(violation_list)), violations(std::move(violation_list)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid datum:";
    for (const auto& s : v) out += " [" + s + "]";
    return out;
  }
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace conjforge
