#include "sgps/report.hpp"

#include <cstdio>
#include <fstream>

namespace sgps {

namespace {

ojson names_json(const FiniteRing& r, const std::vector<ElemId>& ids) {
    ojson arr = ojson::array();
    for (ElemId e : ids) arr.push_back(r.elem_name(e));
    return arr;
}

ojson set_json(const FiniteRing& r, const ElemSet& s) { return names_json(r, s.to_vector()); }

ojson windowed_json(const WindowedSeries& s) {
    ojson j;
    j["text"] = s.text;
    j["coefs"] = s.coefs;
    return j;
}

}  // namespace

ojson validation_json(const ValidationReport& rep) {
    ojson j;
    j["all_pass"] = rep.all_pass;
    j["mul_commutative"] = rep.mul_commutative;
    ojson checks = ojson::array();
    for (const auto& c : rep.checks) {
        ojson cj;
        cj["law"] = c.law;
        cj["pass"] = c.pass;
        if (!c.pass) cj["witness"] = {c.witness[0], c.witness[1], c.witness[2]};
        checks.push_back(cj);
    }
    j["checks"] = checks;
    if (!rep.all_pass) j["first_failure"] = rep.first_failure;
    return j;
}

ojson ideal_json(const FiniteRing& r, const Ideal& ideal) {
    ojson j;
    j["side"] = to_string(ideal.side);
    j["order"] = ideal.elems.count();
    j["elements"] = set_json(r, ideal.elems);
    return j;
}

ojson profile_json(const FiniteRing& r, const PropertyProfile& p) {
    ojson j;
    j["ring"] = p.ring_name;
    j["order"] = p.order;

    ojson ab;
    ab["value"] = p.abelian.abelian;
    if (!p.abelian.abelian)
        ab["witness"] = {{"e", r.elem_name(p.abelian.e)}, {"r", r.elem_name(p.abelian.r)}};
    j["abelian"] = ab;

    ojson reg;
    reg["value"] = p.regular.regular;
    if (!p.regular.regular) reg["witness"] = r.elem_name(p.regular.witness);
    j["regular"] = reg;

    ojson sr;
    sr["value"] = p.semiregular.semiregular;
    if (!p.semiregular.semiregular) {
        sr["failed_clause"] = p.semiregular.failed_clause;
        sr["witness"] = p.semiregular.witness;
    }
    j["semi_regular"] = sr;

    ojson qd;
    qd["value"] = p.quasi_duo.quasi_duo;
    if (!p.quasi_duo.quasi_duo) {
        qd["offender"] = ideal_json(r, *p.quasi_duo.offender);
        qd["absorb_fail"] = {r.elem_name(p.quasi_duo.absorb_fail.first),
                             r.elem_name(p.quasi_duo.absorb_fail.second)};
    }
    j["quasi_duo"] = qd;

    ojson np;
    np["nil"] = set_json(r, p.nil.nil);
    np["nil_star"] = set_json(r, p.nil.nil_star.elems);
    np["two_primal"] = p.nil.two_primal;
    j["nil_structure"] = np;

    ojson rad;
    rad["elements"] = set_json(r, p.radical.elems);
    if (p.radical_nilpotency_index)
        rad["nilpotency_index"] = *p.radical_nilpotency_index;
    else
        rad["nilpotency_index"] = "not nilpotent";
    j["radical"] = rad;

    ojson idems = ojson::array();
    for (const auto& info : p.idems)
        idems.push_back({{"e", r.elem_name(info.e)}, {"central", info.central}});
    j["idempotents"] = idems;

    ojson ml = ojson::array(), mr = ojson::array();
    for (const auto& m : p.maximal_left) ml.push_back(set_json(r, m.elems));
    for (const auto& m : p.maximal_right) mr.push_back(set_json(r, m.elems));
    j["maximal_left_ideals"] = ml;
    j["maximal_right_ideals"] = mr;
    return j;
}

ojson hypothesis_json(const FiniteRing& r, const HypothesisProfile& h) {
    ojson j;
    j["action"] = h.action_name;
    ojson c;
    c["value"] = h.compat.compatible;
    if (!h.compat.compatible)
        c["witness"] = {{"a", r.elem_name(h.compat.a)},
                        {"b", r.elem_name(h.compat.b)},
                        {"generator", h.compat.generator}};
    j["s_compatible"] = c;
    j["theorem_hypotheses_hold"] = h.theorem_hypotheses_hold;
    j["profile"] = profile_json(r, h.props);
    return j;
}

ojson verdict_json(const McCoyVerdict& v) {
    ojson j;
    j["side"] = to_string(v.side);
    j["search_space"] = v.search_space;
    j["outcome"] = to_string(v.outcome);
    j["pairs_examined"] = v.pairs_examined;
    j["zero_divisor_pairs"] = v.zero_divisor_pairs;
    j["caveat"] =
        "verdict covers finitely supported series with support in D only; it never certifies the "
        "McCoy property outright";
    if (v.example) {
        ojson e;
        e["f"] = windowed_json(v.example->f);
        e["g"] = windowed_json(v.example->g);
        e["witness_c"] = v.example->witness_c;
        j["example"] = e;
    }
    if (v.counterexample) {
        ojson c;
        c["f"] = windowed_json(v.counterexample->f);
        c["g"] = windowed_json(v.counterexample->g);
        c["product_rechecked"] = v.counterexample->product_rechecked;
        ojson fails = ojson::array();
        for (const auto& wf : v.counterexample->failures)
            fails.push_back({{"c", wf.c}, {"exp_index", wf.exp_index}, {"value", wf.value}});
        c["witness_failures"] = fails;
        j["counterexample"] = c;
    }
    return j;
}

ojson lemma_json(const LemmaReport& rep) {
    ojson j;
    j["lemma"] = rep.lemma;
    j["subject"] = rep.subject;
    if (rep.skipped) {
        j["status"] = "skipped";
        j["skip_reason"] = rep.skip_reason;
        return j;
    }
    j["status"] = rep.conclusion_failures   ? "failed"
                  : rep.instances_checked == 0 ? "vacuous"
                                               : "holds";
    j["instances_checked"] = rep.instances_checked;
    j["conclusions_held"] = rep.conclusions_held;
    j["conclusion_failures"] = rep.conclusion_failures;
    j["vacuous_instances"] = rep.vacuous;
    if (!rep.failures.empty()) {
        ojson fails = ojson::array();
        for (const auto& f : rep.failures)
            fails.push_back({{"instance", f.desc}, {"witness", f.witness}});
        j["failures"] = fails;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

ojson exploration_json(const ExplorationReport& rep) {
    ojson j;
    j["label"] = rep.note;
    j["stratum_empty"] = rep.stratum_empty;
    ojson entries = ojson::array();
    for (const auto& e : rep.entries) {
        ojson ej;
        ej["ring"] = e.ring;
        ej["action"] = e.action;
        ej["right"] = verdict_json(e.right);
        ej["left"] = verdict_json(e.left);
        entries.push_back(ej);
    }
    j["entries"] = entries;
    return j;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.good()) throw Error("cannot write to '" + tmp + "'");
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace sgps
