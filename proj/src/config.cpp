#include "sgps/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sgps {

const std::vector<std::string> kAllCheckers = {
    "generation",    "quasi_duo", "maximal_prime", "annihilator_nonzero",
    "compatible_membership",      "coefficients_in_radical",
    "theorem",       "fields",    "sn_transfer",   "two_primal"};

bool checker_selected(const CampaignConfig& cfg, const std::string& name) {
    if (cfg.checkers.empty()) return true;
    return std::find(cfg.checkers.begin(), cfg.checkers.end(), name) != cfg.checkers.end();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& field) {
    try {
        std::size_t pos = 0;
        std::uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw SpecError("config line " + std::to_string(line) + ": field '" + field +
                        "' expects an integer, got '" + v + "'");
    }
}

}  // namespace

CampaignConfig parse_campaign_config(const std::string& text) {
    CampaignConfig cfg;
    cfg.rings.clear();
    cfg.monoids.clear();
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw SpecError("config line " + std::to_string(line) + ": unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section != "rings" && section != "monoids" && section != "actions" &&
                section != "run")
                throw SpecError("config line " + std::to_string(line) + ": unknown section '" +
                                section + "'");
            continue;
        }
        if (section.empty())
            throw SpecError("config line " + std::to_string(line) +
                            ": content before any [section] header");
        if (section == "rings") {
            cfg.rings.push_back(s);
        } else if (section == "monoids") {
            cfg.monoids.push_back(s);
        } else if (section == "actions") {
            std::size_t eq = s.find('=');
            if (eq == std::string::npos)
                throw SpecError("config line " + std::to_string(line) +
                                ": [actions] lines read '<ring> = <selection>'");
            std::string key = trim(s.substr(0, eq));
            std::string val = trim(s.substr(eq + 1));
            if (key == "default")
                cfg.default_action = val;
            else
                cfg.actions[build_ring(key).name] = val;
        } else {  // run
            std::size_t eq = s.find('=');
            if (eq == std::string::npos)
                throw SpecError("config line " + std::to_string(line) +
                                ": [run] lines read 'key = value'");
            std::string key = trim(s.substr(0, eq));
            std::string val = trim(s.substr(eq + 1));
            if (key == "degree")
                cfg.degree = (int)parse_u64(val, line, key);
            else if (key == "budget")
                cfg.budget = parse_u64(val, line, key);
            else if (key == "seed")
                cfg.seed = parse_u64(val, line, key);
            else if (key == "trials")
                cfg.trials = parse_u64(val, line, key);
            else if (key == "workers")
                cfg.workers = (int)parse_u64(val, line, key);
            else if (key == "sn_n")
                cfg.sn_n = (int)parse_u64(val, line, key);
            else if (key == "lemma_bound")
                cfg.lemma_tuple_bound = (int)parse_u64(val, line, key);
            else if (key == "out")
                cfg.out_path = val;
            else if (key == "mode") {
                if (val == "exhaustive")
                    cfg.mode = SearchMode::exhaustive;
                else if (val == "random")
                    cfg.mode = SearchMode::random;
                else
                    throw SpecError("config line " + std::to_string(line) +
                                    ": field 'mode' expects exhaustive|random, got '" + val + "'");
            } else if (key == "checkers") {
                if (val != "all") {
                    std::istringstream cs(val);
                    std::string tok;
                    while (std::getline(cs, tok, ',')) {
                        tok = trim(tok);
                        if (std::find(kAllCheckers.begin(), kAllCheckers.end(), tok) ==
                            kAllCheckers.end())
                            throw SpecError("config line " + std::to_string(line) +
                                            ": unknown checker '" + tok + "'");
                        cfg.checkers.push_back(tok);
                    }
                }
            } else {
                throw SpecError("config line " + std::to_string(line) + ": unknown field '" + key +
                                "'");
            }
        }
    }
    if (cfg.rings.empty()) throw SpecError("config has no [rings] entries");
    if (cfg.monoids.empty()) cfg.monoids.push_back("N");
    if (cfg.degree < 1) throw SpecError("config field 'degree' must be >= 1");
    if (cfg.budget < 1) throw SpecError("config field 'budget' must be >= 1");
    // validate specs early so errors carry the offending string
    for (const auto& spec : cfg.rings) build_ring(spec);
    for (const auto& spec : cfg.monoids) OrderedMonoid::parse(spec);
    return cfg;
}

CampaignConfig load_campaign_config(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw SpecError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_campaign_config(ss.str());
}

void apply_env_overrides(Caps& caps) {
    if (const char* v = std::getenv("SGPS_BUDGET")) caps.budget = std::stoull(v);
    if (const char* v = std::getenv("SGPS_IDEAL_CAP")) caps.ideal_cap = std::stoi(v);
    if (const char* v = std::getenv("SGPS_ENDO_CAP")) caps.endo_cap = std::stoi(v);
}

}  // namespace sgps
