#include "sgps/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "sgps/catalog.hpp"
#include "sgps/version.hpp"

namespace sgps {

std::string to_string(InstanceStatus s) {
    switch (s) {
        case InstanceStatus::verified: return "verified";
        case InstanceStatus::vacuous: return "vacuous";
        case InstanceStatus::counterexample: return "counterexample";
        case InstanceStatus::skipped: return "skipped";
        default: return "capacity";
    }
}

namespace {

ojson config_echo(const CampaignConfig& cfg) {
    ojson j;
    j["rings"] = cfg.rings;
    j["monoids"] = cfg.monoids;
    ojson actions;
    actions["default"] = cfg.default_action;
    for (const auto& [k, v] : cfg.actions) actions[k] = v;
    j["actions"] = actions;
    j["degree"] = cfg.degree;
    j["budget"] = cfg.budget;
    j["mode"] = cfg.mode == SearchMode::exhaustive ? "exhaustive" : "random";
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    // worker count is an execution knob, not part of the searched space; keep
    // it out of the echo so reports stay byte-identical across thread counts
    j["checkers"] = cfg.checkers.empty() ? ojson("all") : ojson(cfg.checkers);
    j["sn_n"] = cfg.sn_n;
    j["lemma_bound"] = cfg.lemma_tuple_bound;
    return j;
}

std::vector<Endomorphism> resolve_actions(const FiniteRing& ring, const OrderedMonoid& monoid,
                                          const std::string& selection, const Caps& caps) {
    std::vector<Endomorphism> chosen;
    if (selection == "id") {
        chosen.push_back(identity_endo(ring));
    } else {
        std::vector<Endomorphism> all = enumerate_endomorphisms(ring, caps.endo_cap);
        if (selection == "all") {
            chosen = std::move(all);
        } else {
            std::istringstream ss(selection);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                bool found = false;
                for (const auto& e : all)
                    if (e.name == tok) {
                        chosen.push_back(e);
                        found = true;
                        break;
                    }
                if (!found)
                    throw SpecError("ring " + ring.name + " has no endomorphism named '" + tok +
                                    "'");
            }
        }
    }
    if (monoid.is_group()) {
        std::vector<Endomorphism> autos;
        for (auto& e : chosen)
            if (e.is_bijective()) autos.push_back(std::move(e));
        chosen = std::move(autos);
    }
    return chosen;
}

}  // namespace

CampaignOutcome run_campaign(const CampaignConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();

    SearchParams params;
    params.mode = cfg.mode;
    params.budget = cfg.budget;
    params.seed = cfg.seed;
    params.trials = cfg.trials;
    params.threads = cfg.workers;

    std::vector<FiniteRing> rings;
    for (const auto& spec : cfg.rings) rings.push_back(build_ring(spec));

    ojson instances = ojson::array();
    std::map<std::string, std::uint64_t> summary{{"verified", 0},
                                                 {"vacuous", 0},
                                                 {"counterexample", 0},
                                                 {"skipped", 0},
                                                 {"capacity", 0}};
    bool hypothesis_counterexample = false;
    bool capacity_hit = false;

    for (const FiniteRing& ring : rings) {
        for (const auto& monoid_spec : cfg.monoids) {
            OrderedMonoid monoid = OrderedMonoid::parse(monoid_spec);
            std::string selection = cfg.default_action;
            if (auto it = cfg.actions.find(ring.name); it != cfg.actions.end())
                selection = it->second;

            std::vector<Endomorphism> endos;
            bool resolve_capacity = false;
            std::string resolve_note;
            try {
                endos = resolve_actions(ring, monoid, selection, cfg.caps);
            } catch (const CapacityError& e) {
                resolve_capacity = true;
                resolve_note = e.what();
            }
            if (resolve_capacity) {
                ojson inst;
                inst["ring"] = ring.name;
                inst["monoid"] = monoid.name();
                inst["action"] = selection;
                inst["status"] = "capacity";
                inst["note"] = resolve_note;
                instances.push_back(inst);
                ++summary["capacity"];
                capacity_hit = true;
                continue;
            }
            if (endos.empty()) {
                ojson inst;
                inst["ring"] = ring.name;
                inst["monoid"] = monoid.name();
                inst["action"] = selection;
                inst["status"] = "skipped";
                inst["note"] = "no admissible action (group monoids need automorphisms)";
                instances.push_back(inst);
                ++summary["skipped"];
                continue;
            }

            for (const Endomorphism& endo : endos) {
                auto ti = std::chrono::steady_clock::now();
                ojson inst;
                inst["ring"] = ring.name;
                inst["monoid"] = monoid.name();
                inst["action"] = endo.name;
                InstanceStatus status = InstanceStatus::vacuous;
                try {
                    MonoidAction action(ring, monoid,
                                        std::vector<Endomorphism>(monoid.rank(), endo));
                    HypothesisProfile prof = hypothesis_profile(ring, action, cfg.caps);
                    inst["hypotheses_hold"] = prof.theorem_hypotheses_hold;
                    inst["hypothesis_profile"] = hypothesis_json(ring, prof);

                    ojson lemmas = ojson::array();
                    auto add_lemma = [&](const LemmaReport& rep) { lemmas.push_back(lemma_json(rep)); };
                    if (checker_selected(cfg, "generation"))
                        add_lemma(verify_lemma_generation(ring, cfg.caps, cfg.lemma_tuple_bound));
                    if (checker_selected(cfg, "quasi_duo")) add_lemma(verify_quasi_duo(ring, cfg.caps));
                    if (checker_selected(cfg, "maximal_prime"))
                        add_lemma(verify_maximal_prime(ring, cfg.caps));
                    if (checker_selected(cfg, "annihilator_nonzero"))
                        add_lemma(verify_annihilator_nonzero(ring, cfg.caps));
                    if (checker_selected(cfg, "compatible_membership"))
                        add_lemma(verify_compatible_membership(action, cfg.caps));
                    if (checker_selected(cfg, "coefficients_in_radical")) {
                        Window w = largest_exhaustive_window(monoid, ring.order,
                                                             std::min(cfg.degree, 2), cfg.budget);
                        add_lemma(verify_coefficients_in_radical(action, w, cfg.caps));
                    }
                    if (checker_selected(cfg, "fields") && ring.commutative)
                        add_lemma(fields_witness_check(ring, cfg.degree, cfg.caps, cfg.workers));
                    if (checker_selected(cfg, "sn_transfer"))
                        add_lemma(verify_sn_transfer(ring, cfg.sn_n, cfg.caps));
                    bool lemma_failure = false;
                    for (const auto& lj : lemmas)
                        if (lj.contains("status") && lj["status"] == "failed") lemma_failure = true;
                    inst["lemmas"] = lemmas;
                    inst["lemma_failures"] = lemma_failure;

                    if (checker_selected(cfg, "theorem")) {
                        Window w =
                            largest_exhaustive_window(monoid, ring.order, cfg.degree, cfg.budget);
                        McCoyVerdict right = mccoy_search(action, w, SeriesSide::right, params);
                        McCoyVerdict left = mccoy_search(action, w, SeriesSide::left, params);
                        inst["mccoy"] = {{"right", verdict_json(right)},
                                         {"left", verdict_json(left)}};
                        inst["exploration"] = !prof.theorem_hypotheses_hold;
                        bool ce = right.outcome == McCoyOutcome::counterexample ||
                                  left.outcome == McCoyOutcome::counterexample;
                        bool witnessed = right.zero_divisor_pairs + left.zero_divisor_pairs > 0;
                        status = ce          ? InstanceStatus::counterexample
                                 : witnessed ? InstanceStatus::verified
                                             : InstanceStatus::vacuous;
                        if (ce && prof.theorem_hypotheses_hold) hypothesis_counterexample = true;
                    } else {
                        status = InstanceStatus::verified;
                    }
                } catch (const CapacityError& e) {
                    status = InstanceStatus::capacity;
                    inst["note"] = e.what();
                    capacity_hit = true;
                }
                inst["status"] = to_string(status);
                ++summary[to_string(status)];
                if (cfg.timings) {
                    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - ti)
                                  .count();
                    inst["elapsed_ms"] = ms;
                }
                instances.push_back(inst);
            }
        }
    }

    ojson report;
    report["version"] = kVersion;
    report["config"] = config_echo(cfg);
    report["instances"] = instances;
    if (checker_selected(cfg, "two_primal")) {
        std::vector<const FiniteRing*> ring_ptrs;
        for (const auto& r : rings) ring_ptrs.push_back(&r);
        OrderedMonoid monoid = OrderedMonoid::parse(cfg.monoids.front());
        report["two_primal_exploration"] =
            exploration_json(two_primal_exploration(ring_ptrs, monoid, cfg.degree, params, cfg.caps));
    }
    ojson sj;
    std::uint64_t total = 0;
    for (const auto& [k, v] : summary) total += v;
    sj["verified"] = summary["verified"];
    sj["vacuous"] = summary["vacuous"];
    sj["counterexample"] = summary["counterexample"];
    sj["skipped"] = summary["skipped"];
    sj["capacity"] = summary["capacity"];
    sj["instances"] = total;
    report["summary"] = sj;
    if (total != instances.size())
        throw InternalError("summary counts do not match the instance list");
    if (cfg.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report["elapsed_ms"] = ms;
    }

    CampaignOutcome out;
    out.report = std::move(report);
    out.exit_code = hypothesis_counterexample ? 1 : capacity_hit ? 3 : 0;
    return out;
}

std::string report_to_string(const ojson& report) { return report.dump(2) + "\n"; }

void write_report(const ojson& report, const std::string& path) {
    write_text_atomic(path, report_to_string(report));
}

}  // namespace sgps
