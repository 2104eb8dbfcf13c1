#pragma once

#include "sgps/config.hpp"
#include "sgps/report.hpp"

namespace sgps {

/// Terminal status of a campaign instance.
enum class InstanceStatus { verified, vacuous, counterexample, skipped, capacity };
std::string to_string(InstanceStatus s);

struct CampaignOutcome {
    ojson report;   // full JSON document
    int exit_code;  // 0 clean; 1 counterexample under hypotheses; 3 capacity on an instance
};

/// Runs hypothesis profiling and the selected checkers over every
/// (ring, monoid, action) combination. Instances failing the theorem
/// hypotheses still run the McCoy search, labeled as exploration.
CampaignOutcome run_campaign(const CampaignConfig& cfg);

/// Serializes with stable field order; byte-identical for identical
/// config+seed (timings are included only when cfg.timings is set).
std::string report_to_string(const ojson& report);

void write_report(const ojson& report, const std::string& path);

}  // namespace sgps
