#pragma once

#include <stdexcept>
#include <string>

namespace mfib {

// Precondition violated: wrong length, point outside its declared domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rank-deficient or otherwise degenerate numerical input.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid request that this library deliberately does not handle (n too large,
// general Pluecker relations, ...).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutsideChart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested magnitudes admit no closing phase configuration.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bounded randomized search or rejection sampling ran out of trials.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mfib
