#pragma once

#include <stdexcept>
#include <string>

namespace cheegerlab {

// Base class for every error thrown by the library.
struct LabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain construction / field conformance.
struct NonPositiveWeightA : LabError { using LabError::LabError; };
struct NegativeWeightB : LabError { using LabError::LabError; };
struct NonFiniteWeight : LabError { using LabError::LabError; };
struct EmptyDomain : LabError { using LabError::LabError; };
struct ZeroMassB : LabError { using LabError::LabError; };
struct DisconnectedMask : LabError { using LabError::LabError; };
struct DomainMismatch : LabError { using LabError::LabError; };
struct NegativeField : LabError { using LabError::LabError; };

// Eigen solver.
struct InvalidExponent : LabError { using LabError::LabError; };
struct DegenerateDomain : LabError { using LabError::LabError; };
struct ZeroDenominator : LabError { using LabError::LabError; };
struct NotConverged : LabError { using LabError::LabError; };
struct BadExponent : LabError { using LabError::LabError; };

// Cheeger solvers.
struct NegativeT : LabError { using LabError::LabError; };
struct TooLarge : LabError { using LabError::LabError; };
struct TouchesBoundary : LabError { using LabError::LabError; };
struct LayerTooThin : LabError { using LabError::LabError; };

// Sweep checks.
struct NotComparable : LabError { using LabError::LabError; };
struct InsufficientData : LabError { using LabError::LabError; };

// Config / expression parsing. `line` and `col` are 1-based; 0 = unknown.
struct ParseError : LabError {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : LabError(msg + " (line " + std::to_string(line_) + ", col " +
                 std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

struct ValidationError : LabError { using LabError::LabError; };

}  // namespace cheegerlab
