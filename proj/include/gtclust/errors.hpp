#pragma once

#include <stdexcept>
#include <string>

namespace gtclust {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation needs d_max > 0 but every pairwise distance is
// zero (all points coincide, or the dataset has a single point).
class DegenerateDataset : public Error {
 public:
  using Error::Error;
};

// Raised when a solution concept needs a positive grand-coalition value but
// the game is identically zero (for example an equilateral point set, where
// every distance equals d_max and all similarities vanish).
class DegenerateGame : public Error {
 public:
  using Error::Error;
};

// CSV ingestion failure; the message names the offending 1-based line.
class CsvError : public Error {
 public:
  using Error::Error;
};

// Linear-program backend failure (not infeasibility or unboundedness, which
// are reported as ordinary verdicts).
class LpError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtclust
