#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgps/mccoy.hpp"

namespace sgps {

/// Campaign configuration: flat text format with [rings], [monoids],
/// [actions] and [run] sections. Ring and monoid specs use the same strings
/// as the CLI; [actions] lines read "<ring spec> = all|id|e<k>[,e<j>...]"
/// with "default = ..." applying to unlisted rings.
struct CampaignConfig {
    std::vector<std::string> rings;
    std::vector<std::string> monoids{"N"};
    std::map<std::string, std::string> actions;  // keyed by canonical ring name
    std::string default_action = "all";

    int degree = 2;
    std::uint64_t budget = 10'000'000;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100'000;
    int workers = 0;
    std::vector<std::string> checkers;  // empty = all
    std::string out_path;
    int sn_n = 2;
    int lemma_tuple_bound = 2;
    bool timings = false;  // include wall-clock timings in the report

    Caps caps;
};

extern const std::vector<std::string> kAllCheckers;

bool checker_selected(const CampaignConfig& cfg, const std::string& name);

/// Parses the text format; errors carry the line number and field name.
CampaignConfig parse_campaign_config(const std::string& text);
CampaignConfig load_campaign_config(const std::string& path);

/// Applies SGPS_BUDGET / SGPS_IDEAL_CAP / SGPS_ENDO_CAP when set.
void apply_env_overrides(Caps& caps);

}  // namespace sgps
