#pragma once

#include <stdexcept>
#include <string>

namespace pennyrig {

// Failure categories surfaced by the library. Every throwing operation uses
// Error so callers (CLI, bindings) can map failures to exit codes uniformly.
enum class ErrorKind {
    Parse,                  // malformed input file / inconsistent graph data
    DimensionUnsupported,   // operation only implemented for specific d
    InstanceTooLarge,       // exact algorithm guarded by a size limit
    GraphMismatch,          // two frameworks do not share the same graph
    DegenerateSpan,         // realization does not affinely span dimension d
    PreconditionFailed,     // named hypothesis of an operation is violated
    WitnessInvalid,         // supplied realization fails validation
    Internal,               // invariant breach inside the library
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

} // namespace pennyrig
