#pragma once

#include <string>

namespace eqc {

/// Result of running a JSON run specification end to end.
///
/// input_ok is false when the spec fails to parse or the described data
/// fails construction (bad tables, failed cocycle condition, missing weight
/// tags, ...); `error` then carries the reason. verify_ok reports whether
/// every *requested* verification passed. The JSON report has sorted keys
/// and no timing data, so identical specs produce identical bytes.
struct RunOutcome {
    bool input_ok = false;
    bool verify_ok = false;
    std::string report_json;
    std::string report_text;
    std::string error;
};

/// Parses and runs a JSON run specification (see the README for the schema):
/// builds the catalog collection, the group and its action, the optional
/// twisting cocycle, runs the requested verifications, builds the
/// equivariant collection and its hom grid, and renders the report.
RunOutcome run_spec_json(const std::string& spec_json);

/// Runs a group-free catalog inspection from a shortcut such as
/// "projective:3", "quadric:5", "grassmannian:2,4" or "delpezzo:kn3".
RunOutcome run_catalog_shortcut(const std::string& shortcut);

}  // namespace eqc
