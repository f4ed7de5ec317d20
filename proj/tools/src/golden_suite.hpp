#pragma once

#include "ldb/algebra.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ldwb {

/// The worked example algebras as typed in by hand; the suite builds everything else from these.
struct GoldenInputs {
    ldb::DendAlgebra abelian_circ_2d;
    ldb::DendAlgebra affine_2d;
};

GoldenInputs golden_inputs();

/// Perturbs one structure constant of the named input ("abelian-circ-2d" or "affine-2d").
/// Throws std::invalid_argument for other names.
void corrupt_input(GoldenInputs& in, const std::string& name);

struct GoldenCase {
    std::string name;
    /// Returns the list of mismatches; empty means the case passes.
    std::function<std::vector<std::string>(const GoldenInputs&)> run;
};

const std::vector<GoldenCase>& golden_cases();

struct CaseResult {
    std::string name;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

struct SuiteOptions {
    /// Substring filters on case names; empty runs everything.
    std::vector<std::string> only;
    std::string corrupt;
};

struct SuiteResult {
    std::vector<CaseResult> cases;
    bool ok() const;
};

SuiteResult run_golden_suite(const SuiteOptions& opts);

/// Prints one line per case and a summary; returns the process exit code.
int report_golden_suite(const SuiteResult& result, std::ostream& out, std::ostream& err);

}  // namespace ldwb
