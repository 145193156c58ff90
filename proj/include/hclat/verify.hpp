#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace hclat {

struct InvariantResult {
    std::string name;
    /// "pass", "fail", or "MISMATCH (documented)" for a known, expected finding.
    std::string status;
    std::string detail;  // grid size on success, first counterexample otherwise
    bool ok() const { return status != "fail"; }
};

struct SuiteReport {
    std::string suite;
    std::vector<InvariantResult> results;
    bool ok() const;
};

struct VerifyOptions {
    /// Negative control: perturbs every E-coefficient by +1 before checking.
    bool corrupt = false;
};

const std::vector<std::string>& suite_names();  // hecke, modules, lattice, contraction, borelweil

/// Runs one suite, or every suite for "all". Throws DomainError on an unknown name.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& options = {});

nlohmann::json to_json(const SuiteReport& r);

}  // namespace hclat
