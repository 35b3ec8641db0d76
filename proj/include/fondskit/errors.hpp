#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fondskit {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// signature grammar
struct MalformedSignature : Error { using Error::Error; };
struct AmbiguousDate : Error { using Error::Error; };
struct InvalidDate : Error { using Error::Error; };
struct DisambiguatorExhausted : Error { using Error::Error; };

// classification plan
struct DuplicateCode : Error { using Error::Error; };
struct OrphanCode : Error { using Error::Error; };
struct BadLabel : Error { using Error::Error; };
struct UnknownCode : Error { using Error::Error; };

// model / queries
struct NotInDossier : Error { using Error::Error; };
struct UnknownField : Error { using Error::Error; };
struct UnknownPerson : Error { using Error::Error; };

// normalization
struct UnparseableDate : Error { using Error::Error; };
struct EmptyName : Error { using Error::Error; };

// store
class CsvSyntax : public Error {
public:
    CsvSyntax(std::size_t row, std::size_t column, const std::string &what)
        : Error("csv syntax error at row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
          row(row), column(column) {}
    std::size_t row;    // 1-based physical row
    std::size_t column; // 1-based field index
};

struct SchemaMismatch : Error { using Error::Error; };

class CellParse : public Error {
public:
    CellParse(std::size_t row, const std::string &column, const std::string &kind, const std::string &what)
        : Error("cell parse error at row " + std::to_string(row) + ", column \"" + column + "\" (" + kind + "): " + what),
          row(row), column(column), kind(kind) {}
    std::size_t row; // 1-based data row
    std::string column;
    std::string kind;
};

struct FondsMismatch : Error { using Error::Error; };

// harvest
struct MissingSourceField : Error { using Error::Error; };
struct NoSignatureMapping : Error { using Error::Error; };

} // namespace fondskit
