#pragma once

// Case registry and suite orchestration.

#include "lz/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lz {

struct RankRange {
    std::string name;
    int lo = 0;
    std::optional<int> hi;  // empty = unbounded
};

struct Quadruple {
    std::string when;  // rank condition, empty when there is one variant
    std::string G, H, rho_H, iota;
};

struct CaseDescriptor {
    std::string id;     // appendix label, with a suffix for split rows
    std::string table;  // "2", "22+S" or "disconnected"
    std::string dual_group;
    std::string tau;
    std::vector<Quadruple> quadruples;
    std::vector<RankRange> ranks;
    std::string central;  // central character constraint, empty if none
    std::string remark;   // literature tag
    bool table1 = false;    // listed among the multiplicity-free targets
    bool excluded = false;  // left out of the main construction
    bool disconnected = false;
    std::vector<std::string> zeta_cases;    // ZetaKind names
    std::vector<std::string> cauchy_cases;  // CauchyCase names
};

const std::vector<CaseDescriptor>& list_cases();
// throws std::out_of_range for unknown ids
const CaseDescriptor& describe_case(const std::string& id);
// the descriptor owning a zeta kind name
const CaseDescriptor& case_for_zeta(const std::string& kind);

void to_json(json& j, const CaseDescriptor& c);

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    std::vector<std::string> suites;  // empty = every suite
    std::vector<std::string> only;    // "suite" or "suite:key" filters, key prefix up to '-' or '('
    std::optional<std::string> case_name;
    std::optional<int> rank_m, rank_n;
    std::optional<int> deg_x, deg_y;
    int trials = 3;
    std::uint64_t seed = 1;
    std::string json_path;
    int jobs = 1;

    void validate() const;  // throws ConfigError
};

std::vector<std::string> suite_names();

struct Cell {
    std::string suite;
    std::string key;
    std::function<IdentityReport()> run;

    std::string id() const { return suite + ":" + key; }
};

// cells selected by the config in canonical order; throws ConfigError
std::vector<Cell> plan_suite(const SuiteConfig& cfg);

struct SuiteResult {
    std::vector<IdentityReport> reports;
    json report;
    int exit_code = 0;  // 0 all pass, 1 any failure
};

// runs the plan with up to cfg.jobs worker threads; writes cfg.json_path if set
SuiteResult run_suite(const SuiteConfig& cfg);

// structural check of an aggregate report; empty string when valid
std::string validate_report(const json& j);

json environment_json();

}  // namespace lz
