// Command-line front end: profile rings, run McCoy searches and lemma
// checkers, and drive whole campaigns from a config file.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgps/campaign.hpp"
#include "sgps/catalog.hpp"
#include "sgps/version.hpp"

using namespace sgps;

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

Endomorphism find_action(const FiniteRing& ring, const OrderedMonoid& monoid,
                         const std::string& name, const Caps& caps) {
    for (const auto& e : enumerate_endomorphisms(ring, caps.endo_cap)) {
        if (e.name != name) continue;
        if (monoid.is_group() && !e.is_bijective())
            throw SpecError("action '" + name + "' is not an automorphism; Z needs one");
        return e;
    }
    throw SpecError("ring " + ring.name + " has no endomorphism named '" + name +
                    "' (use id or e<k> from 'profile')");
}

MonoidAction make_action(const FiniteRing& ring, const OrderedMonoid& monoid,
                         const std::string& names, const Caps& caps) {
    std::vector<Endomorphism> gens;
    std::istringstream ss(names);
    std::string tok;
    while (std::getline(ss, tok, ',')) gens.push_back(find_action(ring, monoid, tok, caps));
    if ((int)gens.size() == 1 && monoid.rank() > 1)
        gens.assign(monoid.rank(), gens.front());
    return MonoidAction(ring, monoid, std::move(gens));
}

void print_profile_text(const FiniteRing& ring, const PropertyProfile& p) {
    std::cout << "ring " << ring.name << " (order " << p.order << ", " << ring.provenance << ")\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::cout << "  abelian:      " << flag(p.abelian.abelian);
    if (!p.abelian.abelian)
        std::cout << "  (witness e=" << ring.elem_name(p.abelian.e)
                  << ", r=" << ring.elem_name(p.abelian.r) << ")";
    std::cout << "\n  regular:      " << flag(p.regular.regular);
    if (!p.regular.regular) std::cout << "  (witness a=" << ring.elem_name(p.regular.witness) << ")";
    std::cout << "\n  semi-regular: " << flag(p.semiregular.semiregular);
    std::cout << "\n  quasi-duo:    " << flag(p.quasi_duo.quasi_duo);
    std::cout << "\n  2-primal:     " << flag(p.nil.two_primal);
    std::cout << "\n  J(R):         {";
    bool first = true;
    for (ElemId e : p.radical.elems.to_vector()) {
        if (!first) std::cout << ", ";
        std::cout << ring.elem_name(e);
        first = false;
    }
    std::cout << "}";
    if (p.radical_nilpotency_index)
        std::cout << "  nilpotency index " << *p.radical_nilpotency_index;
    std::cout << "\n  maximal left ideals: " << p.maximal_left.size()
              << ", maximal right ideals: " << p.maximal_right.size() << "\n";
}

void print_verdict_text(const McCoyVerdict& v) {
    std::cout << to_string(v.side) << ": " << to_string(v.outcome) << "  (pairs "
              << v.pairs_examined << ", zero-divisor pairs " << v.zero_divisor_pairs << ")\n";
    if (v.example)
        std::cout << "  witnessed pair f = " << v.example->f.text << ", g = " << v.example->g.text
                  << ", c = " << v.example->witness_c << "\n";
    if (v.counterexample)
        std::cout << "  counterexample f = " << v.counterexample->f.text
                  << ", g = " << v.counterexample->g.text << " (no nonzero witness)\n";
    std::cout << "  note: verdicts cover finitely supported series with support in D only\n";
}

int run(int argc, char** argv) {
    CLI::App app{"skew generalized power series laboratory over finite rings"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Caps caps;
    apply_env_overrides(caps);

    // catalog
    auto* cat = app.add_subcommand("catalog", "print the default ring catalog");
    int max_order = 8;
    bool cat_json = false;
    cat->add_option("--max-order", max_order, "largest zmod modulus")->capture_default_str();
    cat->add_flag("--json", cat_json);

    // profile
    auto* prof = app.add_subcommand("profile", "decide the structural predicates of a ring");
    std::vector<std::string> prof_spec;
    bool prof_json = false;
    prof->add_option("ring", prof_spec, "ring spec, e.g. \"zmod 4\" or zmod4")->required();
    prof->add_flag("--json", prof_json);

    // mccoy
    auto* mc = app.add_subcommand("mccoy", "window-exhaustive (S,omega)-McCoy search");
    std::string mc_ring, mc_monoid, mc_action = "id", mc_side = "both", mc_mode = "exhaustive";
    int mc_degree = 2;
    std::int64_t mc_lo = 0;
    bool mc_lo_set = false, mc_json = false;
    std::uint64_t mc_seed = 0, mc_trials = 100'000, mc_budget = caps.budget;
    int mc_workers = 0;
    mc->add_option("ring", mc_ring)->required();
    mc->add_option("monoid", mc_monoid, "N | Z | \"N^k lex\"")->required();
    mc->add_option("action", mc_action, "id | e<k> | comma list for N^k");
    mc->add_option("--degree", mc_degree, "largest window exponent")->capture_default_str();
    mc->add_option("--lo", mc_lo, "smallest window exponent (Z only)")
        ->each([&](const std::string&) { mc_lo_set = true; });
    mc->add_option("--side", mc_side, "left | right | both")->capture_default_str();
    mc->add_option("--mode", mc_mode, "exhaustive | random")->capture_default_str();
    mc->add_option("--seed", mc_seed);
    mc->add_option("--trials", mc_trials);
    mc->add_option("--budget", mc_budget)->capture_default_str();
    mc->add_option("--workers", mc_workers);
    mc->add_flag("--json", mc_json);

    // lemmas
    auto* lem = app.add_subcommand("lemmas", "run the lemma checkers on one ring");
    std::string lem_ring, lem_action = "id";
    int lem_degree = 2, lem_sn = 2;
    bool lem_json = false;
    lem->add_option("ring", lem_ring)->required();
    lem->add_option("--action", lem_action)->capture_default_str();
    lem->add_option("--degree", lem_degree)->capture_default_str();
    lem->add_option("--sn-n", lem_sn)->capture_default_str();
    lem->add_flag("--json", lem_json);

    // theorem
    auto* thm = app.add_subcommand("theorem", "hypothesis profile plus both-sided McCoy search");
    std::string thm_ring, thm_monoid, thm_action = "id";
    int thm_degree = 2, thm_workers = 0;
    std::uint64_t thm_budget = caps.budget;
    bool thm_json = false;
    thm->add_option("ring", thm_ring)->required();
    thm->add_option("monoid", thm_monoid)->required();
    thm->add_option("action", thm_action);
    thm->add_option("--degree", thm_degree)->capture_default_str();
    thm->add_option("--budget", thm_budget)->capture_default_str();
    thm->add_option("--workers", thm_workers);
    thm->add_flag("--json", thm_json);

    // campaign
    auto* camp = app.add_subcommand("campaign", "run a config-driven verification campaign");
    std::string camp_config, camp_out;
    int camp_workers = -1;
    bool camp_timings = false, camp_json = false;
    camp->add_option("--config", camp_config)->required();
    camp->add_option("--out", camp_out, "report path (overrides the config)");
    camp->add_option("--workers", camp_workers);
    camp->add_flag("--timings", camp_timings, "include wall-clock timings in the report");
    camp->add_flag("--json", camp_json, "print the report to stdout");

    CLI11_PARSE(app, argc, argv);

    if (*cat) {
        auto specs = catalog_generate(max_order);
        if (cat_json) {
            ojson j;
            j["max_order"] = max_order;
            j["rings"] = specs;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& s : specs) std::cout << s << "\n";
        }
        return 0;
    }

    if (*prof) {
        FiniteRing ring = build_ring(join(prof_spec));
        PropertyProfile p = compute_property_profile(ring, caps);
        if (prof_json) {
            ojson j = profile_json(ring, p);
            ojson endos = ojson::array();
            OrderedMonoid nat = OrderedMonoid::naturals();
            for (const auto& e : enumerate_endomorphisms(ring, caps.endo_cap)) {
                MonoidAction a(ring, nat, {e});
                endos.push_back({{"name", e.name},
                                 {"bijective", e.is_bijective()},
                                 {"compatible", is_compatible(a).compatible}});
            }
            j["endomorphisms"] = endos;
            std::cout << j.dump(2) << "\n";
        } else {
            print_profile_text(ring, p);
            std::cout << "  endomorphisms:";
            OrderedMonoid nat = OrderedMonoid::naturals();
            for (const auto& e : enumerate_endomorphisms(ring, caps.endo_cap)) {
                MonoidAction a(ring, nat, {e});
                std::cout << " " << e.name << (is_compatible(a).compatible ? "(compatible)" : "");
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (*mc) {
        FiniteRing ring = build_ring(mc_ring);
        OrderedMonoid monoid = OrderedMonoid::parse(mc_monoid);
        MonoidAction action = make_action(ring, monoid, mc_action, caps);
        if (!mc_lo_set) mc_lo = monoid.is_group() ? -mc_degree : 0;
        Window w = Window::degree_range(monoid, mc_lo, mc_degree);
        SearchParams params;
        params.mode = mc_mode == "random" ? SearchMode::random : SearchMode::exhaustive;
        if (mc_mode != "random" && mc_mode != "exhaustive")
            throw SpecError("--mode expects exhaustive|random");
        params.seed = mc_seed;
        params.trials = mc_trials;
        params.budget = mc_budget;
        params.threads = mc_workers;

        std::vector<McCoyVerdict> verdicts;
        if (mc_side == "right" || mc_side == "both")
            verdicts.push_back(mccoy_search(action, w, SeriesSide::right, params));
        if (mc_side == "left" || mc_side == "both")
            verdicts.push_back(mccoy_search(action, w, SeriesSide::left, params));
        if (verdicts.empty()) throw SpecError("--side expects left|right|both");

        bool ce = false;
        for (const auto& v : verdicts) ce |= v.outcome == McCoyOutcome::counterexample;
        if (mc_json) {
            ojson j = ojson::array();
            for (const auto& v : verdicts) j.push_back(verdict_json(v));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& v : verdicts) print_verdict_text(v);
        }
        return ce ? 1 : 0;
    }

    if (*lem) {
        FiniteRing ring = build_ring(lem_ring);
        OrderedMonoid nat = OrderedMonoid::naturals();
        MonoidAction action = make_action(ring, nat, lem_action, caps);
        std::vector<LemmaReport> reports;
        reports.push_back(verify_lemma_generation(ring, caps));
        reports.push_back(verify_quasi_duo(ring, caps));
        reports.push_back(verify_maximal_prime(ring, caps));
        reports.push_back(verify_annihilator_nonzero(ring, caps));
        reports.push_back(verify_compatible_membership(action, caps));
        Window w = largest_exhaustive_window(nat, ring.order, lem_degree, caps.budget);
        reports.push_back(verify_coefficients_in_radical(action, w, caps));
        if (ring.commutative) reports.push_back(fields_witness_check(ring, lem_degree, caps));
        reports.push_back(verify_sn_transfer(ring, lem_sn, caps));

        bool failed = false;
        for (const auto& rep : reports) failed |= !rep.ok();
        if (lem_json) {
            ojson j = ojson::array();
            for (const auto& rep : reports) j.push_back(lemma_json(rep));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& rep : reports) {
                std::cout << rep.lemma << ": ";
                if (rep.skipped)
                    std::cout << "skipped (" << rep.skip_reason << ")";
                else if (!rep.ok())
                    std::cout << "FAILED (" << rep.conclusion_failures << " failures)";
                else if (rep.is_vacuous())
                    std::cout << "vacuous";
                else
                    std::cout << "holds (" << rep.instances_checked << " instances)";
                std::cout << "\n";
            }
        }
        return failed ? 1 : 0;
    }

    if (*thm) {
        FiniteRing ring = build_ring(thm_ring);
        OrderedMonoid monoid = OrderedMonoid::parse(thm_monoid);
        MonoidAction action = make_action(ring, monoid, thm_action, caps);
        SearchParams params;
        params.budget = thm_budget;
        params.threads = thm_workers;
        HypothesisProfile prof_result = hypothesis_profile(ring, action, caps);
        Window w = largest_exhaustive_window(monoid, ring.order, thm_degree, thm_budget);

        if (!prof_result.theorem_hypotheses_hold) {
            McCoyVerdict right = mccoy_search(action, w, SeriesSide::right, params);
            McCoyVerdict left = mccoy_search(action, w, SeriesSide::left, params);
            if (thm_json) {
                ojson j;
                j["hypotheses"] = hypothesis_json(ring, prof_result);
                j["exploration"] = true;
                j["right"] = verdict_json(right);
                j["left"] = verdict_json(left);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "hypotheses do not hold; exploration outcome recorded\n";
                print_verdict_text(right);
                print_verdict_text(left);
            }
            return 0;  // no claim outside the hypotheses
        }

        TheoremRun run = verify_main_theorem(action, w, params, caps);
        if (thm_json) {
            ojson j;
            j["hypotheses"] = hypothesis_json(ring, run.profile);
            j["exploration"] = false;
            j["right"] = verdict_json(run.right);
            j["left"] = verdict_json(run.left);
            j["passed"] = run.passed;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "hypotheses hold; window " << w.desc << "\n";
            print_verdict_text(run.right);
            print_verdict_text(run.left);
        }
        return run.passed ? 0 : 1;
    }

    // campaign
    CampaignConfig cfg = load_campaign_config(camp_config);
    cfg.caps = caps;
    cfg.timings = camp_timings;
    if (camp_workers >= 0) cfg.workers = camp_workers;
    if (!camp_out.empty()) cfg.out_path = camp_out;
    CampaignOutcome out = run_campaign(cfg);
    if (!cfg.out_path.empty()) {
        write_report(out.report, cfg.out_path);
        std::cerr << "report written to " << cfg.out_path << "\n";
    }
    if (camp_json || cfg.out_path.empty()) std::cout << report_to_string(out.report);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
