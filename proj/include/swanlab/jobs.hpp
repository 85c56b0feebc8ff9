#pragma once

// JSON input/output layer shared by the CLI and the Python bindings.
//
// Every result object starts with the keys schema / command / field /
// witt_length / input / status, in that order, followed by the
// command-specific payload. Key insertion order is preserved, values
// are rendered canonically, and no timing or host information is ever
// emitted, so identical inputs produce byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"

#include "swanlab/ramification.hpp"

namespace swanlab {

using OrderedJson = nlohmann::ordered_json;

struct JobSpec {
    FieldConfig field;
    std::vector<std::string> witt;  // component expressions
    ReduceOptions opts;
};

inline constexpr const char* kSchemaTag = "swanlab/1";

// Field config from {"p": .., "e"/"q"/"modulus": .., "residue": ..}.
// Residue kind strings: "perfect", "rational", "rational(y)".
FieldConfig field_from_json(const OrderedJson& j);
OrderedJson field_to_json(const FieldConfig& F);

// One batch entry: field keys plus "witt" and optional "budget" /
// "depth" / "phase1_cap".
JobSpec job_from_json(const OrderedJson& j);

WittVec parse_witt_input(const FieldConfig& F,
                         const std::vector<std::string>& comps);

OrderedJson graded_to_json(const FieldConfig& F, const GradedForm& g);
OrderedJson normal_form_to_json(const FieldConfig& F,
                                const GradedNormalForm& nf);

// --- per-command results ---------------------------------------------------

OrderedJson conductor_result(const JobSpec& job);
OrderedJson reduce_result(const JobSpec& job);
OrderedJson filtration_result(const JobSpec& job, long n_lo, long n_hi);
OrderedJson normalform_result(const FieldConfig& F, Basis basis, long n,
                              const std::string& alpha,
                              const std::string& beta);
// op: add | neg | frobenius | v ("add" reads the second operand)
OrderedJson witt_op_result(const JobSpec& job, const std::string& op,
                           const std::vector<std::string>& other);
OrderedJson selftest_result(const std::vector<std::string>& suites);

// Batch document: an array of jobs, or an object {"jobs": [...]}.
// Jobs run in parallel; the output array keeps the input order.
OrderedJson conductor_batch(const OrderedJson& doc);

// {"schema": .., "status": "error", "error": .., "position"?: ..};
// printed on stdout with exit code 1.
OrderedJson error_json(const std::string& message, long position = -1);

// 0 ok, 1 error, 2 out_of_theorem_range / unsupported_range,
// 3 budget_exceeded. Batches: 1 if any job errored, else the highest
// per-job code.
int exit_code_for(const OrderedJson& result);

}  // namespace swanlab
