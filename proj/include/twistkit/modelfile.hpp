#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/hermitian.hpp"
#include "twistkit/twist.hpp"

namespace twistkit {

struct CheckInvocation {
    std::string name;
    std::vector<std::string> args;

    friend bool operator==(const CheckInvocation& a, const CheckInvocation& b) {
        return a.name == b.name && a.args == b.args;
    }
};

/// Parsed model description: MODEL, STRUCTURE, TWIST and CHECKS sections.
struct ModelFile {
    CoframeModel model;
    std::vector<std::pair<std::string, AlmostComplexStructure>> complexes;
    std::vector<std::pair<std::string, HermitianMetric>> metrics;
    std::vector<std::pair<std::string, std::array<std::string, 3>>> triples;
    std::vector<std::pair<std::string, Form>> forms;
    std::optional<TwistData> twist;
    std::vector<CheckInvocation> checks;

    const AlmostComplexStructure& complex_structure(const std::string& name) const;
    const HermitianMetric& metric(const std::string& name) const;
    const std::array<std::string, 3>& triple(const std::string& name) const;
    const Form& named_form(const std::string& name) const;

    friend bool operator==(const ModelFile& a, const ModelFile& b);
    friend bool operator!=(const ModelFile& a, const ModelFile& b) { return !(a == b); }
};

/// Parses the published grammar; throws ParseError with line/column on
/// syntax errors and semantic errors (unknown names, shape mismatches).
ModelFile parse_model_file(const std::string& text);

/// Canonical printer; parse(print(f)) == f.
std::string print_model_file(const ModelFile& f);

}  // namespace twistkit
