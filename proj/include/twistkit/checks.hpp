#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistkit/modelfile.hpp"

namespace twistkit {

enum class Verdict { Pass, Fail, Error };

struct CheckReport {
    std::string name;
    std::vector<std::string> args;
    Verdict verdict = Verdict::Error;
    std::vector<std::pair<std::string, std::string>> witnesses;  // label -> printed value
    std::string error_message;
    long long micros = 0;
};

/// Empty string when the invocation is well-formed against the file;
/// otherwise a diagnostic (unknown check, wrong arity, unresolved name).
std::string validate_check_invocation(const ModelFile& f, const CheckInvocation& inv);

/// Runs the file's checks in order. A failing or erroring check never stops
/// the rest.
std::vector<CheckReport> run_checks(const ModelFile& f);

/// Human-readable rendering (includes timings).
std::string render_text(const std::vector<CheckReport>& reports, const std::string& filename);

/// Line-delimited machine rendering, schema twistkit.report.v1; byte-stable
/// across runs (no timings).
std::string render_machine(const std::vector<CheckReport>& reports, const std::string& filename,
                           std::uint64_t seed);

/// 0 when every check passed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace twistkit
