#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypersparse {

/// An evaluation oracle returned a value outside its declared range.
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(std::size_t edge, const std::string& what)
      : std::runtime_error("edge " + std::to_string(edge) + ": " + what),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

/// Raised instead of silently enumerating 2^n subsets for large n.
class EnumerationLimitExceeded : public std::length_error {
 public:
  EnumerationLimitExceeded(int n, int limit)
      : std::length_error("refusing to enumerate 2^" + std::to_string(n) +
                          " subsets (limit n <= " + std::to_string(limit) +
                          ")") {}
};

class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotALiftedEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(std::uint64_t worst_cut, double max_rel_error,
                     const std::string& what)
      : std::runtime_error(what),
        worst_cut_(worst_cut),
        max_rel_error_(max_rel_error) {}
  std::uint64_t worst_cut() const { return worst_cut_; }
  double max_rel_error() const { return max_rel_error_; }

 private:
  std::uint64_t worst_cut_;
  double max_rel_error_;
};

class CertificationFailed : public std::runtime_error {
 public:
  CertificationFailed(std::size_t edge, const std::string& what)
      : std::runtime_error("edge " + std::to_string(edge) + ": " + what),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypersparse
