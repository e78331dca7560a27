#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aoc {

// Source position inside a SourceUnit. file indexes SourceUnit::files;
// -1 means "no file" (synthetic input such as an in-memory netlist).
struct SourceLoc {
  int file = -1;
  int line = 0;
  int column = 0;

  bool valid() const { return line > 0; }
  bool operator==(const SourceLoc&) const = default;
};

enum class ErrorKind {
  kUsage,
  kIo,
  kSyntax,
  kUnsupportedConstruct,
  kSchema,
  kDanglingReference,
  kMultiDriver,
  kRecursiveInstantiation,
  kUnresolvedParameter,
  kLoop,
  kLatch,
  kUndriven,
  kConstantClock,
  kClockDependencyCycle,
  kOscillation,
  kDeadlock,
  kWaitInsideDut,
  kToolchainMissing,
  kTraceMismatch,
  kInternal,
};

// Exit-status category used by the CLI: 1 usage, 2 design, 3 simulation.
int ExitStatusFor(ErrorKind kind);

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourceLoc loc = {})
      : std::runtime_error(std::move(message)), kind_(kind), loc_(loc) {}

  ErrorKind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }

 private:
  ErrorKind kind_;
  SourceLoc loc_;
};

// Formats "path:line:col: message" when file names are known; the frontend
// passes the file table so diagnostics always carry a position.
std::string FormatDiagnostic(const std::string& file_name, SourceLoc loc,
                             const std::string& message);

[[noreturn]] void Raise(ErrorKind kind, const std::string& message,
                        SourceLoc loc = {});

}  // namespace aoc
