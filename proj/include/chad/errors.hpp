#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chad {

// Exit codes used by the CLI, one per failure family.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitIo = 3,
    kExitParse = 4,
    kExitSolver = 5,
};

/// Invalid configuration values or combinations (semantically bad input).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failures (cannot open, short write, ...).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file content. Carries file name and 1-based line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, long line, const std::string& what)
        : std::runtime_error(format(file, line, what)), file_(std::move(file)), line_(line) {}

    const std::string& file() const noexcept { return file_; }
    long line() const noexcept { return line_; }

private:
    static std::string format(const std::string& file, long line, const std::string& what) {
        std::string s = file;
        if (line > 0) s += ":" + std::to_string(line);
        s += ": " + what;
        return s;
    }
    std::string file_;
    long line_ = 0;
};

/// Root-solver or integrator convergence failure. Carries the iteration
/// trace of the offending solve for post-mortem inspection.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what, std::vector<double> trace = {})
        : std::runtime_error(trace.empty() ? what : what + trace_summary(trace)),
          trace_(std::move(trace)) {}

    const std::vector<double>& trace() const noexcept { return trace_; }

private:
    static std::string trace_summary(const std::vector<double>& t);
    std::vector<double> trace_;
};

/// A state handed to the kinetics was negative beyond the configured tolerance.
class InvalidStateError : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace chad
