#ifndef FOURDESCENT_REPORT_HPP
#define FOURDESCENT_REPORT_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourdescent/covering.hpp"
#include "fourdescent/surface.hpp"

namespace fourdescent {

using Json = nlohmann::ordered_json;

struct RunConfig {
    QuarticCurveModel quartic;
    std::array<Rat, 4> epsilon;
    Poly surface_p, surface_q;
    long height = 50;
    std::vector<Int> primes_override;  // empty: use the computed bad-prime set
    int depth_cap = 0;                 // 0: automatic residue-tree bound
    bool assume_rank_zero = true;

    enum class Format { kHuman, kMachine };
    Format format = Format::kHuman;
    bool timings = false;  // machine format stays byte-identical unless set

    static RunConfig defaults();
    // Missing fields fall back to the built-in instance. Rationals are
    // strings "n" or "n/d"; polynomials are coefficient arrays, constant
    // term first. Throws std::invalid_argument on malformed input.
    static RunConfig from_json(const Json& j);
    Json to_json() const;

    SurfaceModel surface() const;
    bool default_quartic() const;
    bool default_epsilon() const;
    bool default_surface_pair() const;
};

enum class CheckStatus { kPass, kFail, kAssumed, kUnknown };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string anchor;  // the verbatim source anchor this check reproduces
    CheckStatus status = CheckStatus::kFail;
    Json payload;
    double ms = 0.0;
    bool resource_limited = false;
};

struct Report {
    std::vector<CheckResult> checks;
    std::vector<std::string> assumptions;

    bool has_fail() const;
    bool resource_limited() const;
    std::string overall() const;  // "PASS" / "FAIL"
};

// The full reproduction pipeline, in order: resolvent identification,
// torsion certificate, irreducibility, epsilon norm and admissibility,
// 4-covering construction and reference comparison, bad primes, local
// solubility of C and C', surface validation, rational point search,
// adelic verdict. Module errors become FAIL entries; the pipeline always
// runs to completion.
Report run_reproduce(const RunConfig& config);

// Subcommand slices of the pipeline.
Report run_resolvent(const RunConfig& config);
Report run_fourcover(const RunConfig& config);
Report run_local(const RunConfig& config);
Report run_surface(const RunConfig& config);
Report run_search(const RunConfig& config);

// human: aligned text with one PASS/FAIL line per check;
// machine: a single JSON document with stable field names
// (check_id, anchor, status, payload, ms), byte-identical across runs
// unless timings are enabled.
std::string emit_report(const Report& r, RunConfig::Format format, bool timings);

// 0: no FAIL; 1: some FAIL; 3: a resource limit was hit.
int exit_code_for(const Report& r);

}  // namespace fourdescent

#endif
