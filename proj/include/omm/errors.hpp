#pragma once

#include <stdexcept>
#include <string>

namespace omm {

// Base class for every library error; catch this to handle the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParam : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };

// Norm layer: vector numerically indistinguishable from zero.
struct ZeroVector : Error { using Error::Error; };
struct ZeroClassifier : Error { using Error::Error; };

// Geometry layer.
struct EmptyClass : Error { using Error::Error; };
struct NotSeparable : Error { using Error::Error; };
struct DegenerateCertificates : Error { using Error::Error; };

// Baselines.
struct InfeasibleUpdate : Error { using Error::Error; };

// Data layer.
struct IoError : Error { using Error::Error; };
struct SchemaMismatch : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& msg, long row, long column)
      : Error(msg + " (row " + std::to_string(row) + ", column " +
              std::to_string(column) + ")"),
        row(row),
        column(column) {}
  long row;
  long column;
};

}  // namespace omm
