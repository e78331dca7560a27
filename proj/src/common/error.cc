#include "common/error.h"

namespace aoc {

int ExitStatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
    case ErrorKind::kIo:
      return 1;
    case ErrorKind::kSyntax:
    case ErrorKind::kUnsupportedConstruct:
    case ErrorKind::kSchema:
    case ErrorKind::kDanglingReference:
    case ErrorKind::kMultiDriver:
    case ErrorKind::kRecursiveInstantiation:
    case ErrorKind::kUnresolvedParameter:
    case ErrorKind::kLoop:
    case ErrorKind::kLatch:
    case ErrorKind::kUndriven:
    case ErrorKind::kConstantClock:
    case ErrorKind::kClockDependencyCycle:
    case ErrorKind::kWaitInsideDut:
      return 2;
    case ErrorKind::kOscillation:
    case ErrorKind::kDeadlock:
    case ErrorKind::kTraceMismatch:
      return 3;
    case ErrorKind::kToolchainMissing:
    case ErrorKind::kInternal:
      return 3;
  }
  return 3;
}

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kUnsupportedConstruct: return "unsupported-construct";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kDanglingReference: return "dangling-reference";
    case ErrorKind::kMultiDriver: return "multi-driver";
    case ErrorKind::kRecursiveInstantiation: return "recursive-instantiation";
    case ErrorKind::kUnresolvedParameter: return "unresolved-parameter";
    case ErrorKind::kLoop: return "combinational-loop";
    case ErrorKind::kLatch: return "latch";
    case ErrorKind::kUndriven: return "undriven";
    case ErrorKind::kConstantClock: return "constant-clock";
    case ErrorKind::kClockDependencyCycle: return "clock-dependency-cycle";
    case ErrorKind::kOscillation: return "oscillation";
    case ErrorKind::kDeadlock: return "deadlock";
    case ErrorKind::kWaitInsideDut: return "wait-inside-dut";
    case ErrorKind::kToolchainMissing: return "toolchain-missing";
    case ErrorKind::kTraceMismatch: return "trace-mismatch";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

std::string FormatDiagnostic(const std::string& file_name, SourceLoc loc,
                             const std::string& message) {
  if (!loc.valid()) {
    return file_name.empty() ? message : file_name + ": " + message;
  }
  return file_name + ":" + std::to_string(loc.line) + ":" +
         std::to_string(loc.column) + ": " + message;
}

void Raise(ErrorKind kind, const std::string& message, SourceLoc loc) {
  throw Error(kind, message, loc);
}

}  // namespace aoc
