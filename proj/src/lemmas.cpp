#include "sgps/lemmas.hpp"

#include <algorithm>

namespace sgps {

namespace {

std::string elems_text(const FiniteRing& r, const ElemSet& s) {
    std::string out = "{";
    bool first = true;
    for (ElemId e : s.to_vector()) {
        if (!first) out += ",";
        out += r.elem_name(e);
        first = false;
    }
    return out + "}";
}

bool trio_holds(const PropertyProfile& p) {
    return p.abelian.abelian && p.semiregular.semiregular &&
           p.radical_nilpotency_index.has_value();
}

std::string trio_skip_reason(const PropertyProfile& p) {
    if (!p.abelian.abelian) return "not abelian";
    if (!p.semiregular.semiregular) return "not semi-regular";
    if (!p.radical_nilpotency_index) return "J(R) not nilpotent";
    return "";
}

}  // namespace

HypothesisProfile hypothesis_profile(const FiniteRing& r, const MonoidAction& action,
                                     const Caps& caps) {
    HypothesisProfile h;
    h.props = compute_property_profile(r, caps);
    h.compat = is_compatible(action);
    h.action_name = action.name();
    h.theorem_hypotheses_hold = trio_holds(h.props) && h.compat.compatible;
    return h;
}

LemmaReport verify_lemma_generation(const FiniteRing& r, const Caps& caps, int max_n) {
    LemmaReport rep;
    rep.lemma = "generation";
    rep.subject = r.name;
    PropertyProfile p = compute_property_profile(r, caps);
    if (!trio_holds(p)) {
        rep.skipped = true;
        rep.skip_reason = trio_skip_reason(p);
        return rep;
    }
    const int n = r.order;
    std::vector<ElemId> tuple;
    // iterate tuples of each length via an odometer
    for (int len = 1; len <= max_n + 1; ++len) {
        tuple.assign(len, 0);
        for (;;) {
            Ideal two = ideal_closure(r, tuple, Side::two_sided);
            if (two.elems.count() == n) {
                ++rep.instances_checked;
                Ideal left = ideal_closure(r, tuple, Side::left);
                if (left.elems.count() == n) {
                    ++rep.conclusions_held;
                } else {
                    ++rep.conclusion_failures;
                    std::string desc = "tuple (";
                    for (std::size_t i = 0; i < tuple.size(); ++i)
                        desc += (i ? "," : "") + r.elem_name(tuple[i]);
                    desc += ")";
                    rep.failures.push_back(
                        {desc, false, "left ideal sum = " + elems_text(r, left.elems)});
                }
            } else {
                ++rep.vacuous;
            }
            int i = len - 1;
            while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
            if (i < 0) break;
            ++tuple[i];
        }
    }
    if (rep.instances_checked == 0) rep.note = "vacuous stratum: no tuple generates R two-sidedly";
    return rep;
}

LemmaReport verify_quasi_duo(const FiniteRing& r, const Caps& caps) {
    LemmaReport rep;
    rep.lemma = "quasi_duo";
    rep.subject = r.name;
    PropertyProfile p = compute_property_profile(r, caps);
    if (!p.abelian.abelian || !p.semiregular.semiregular) {
        rep.skipped = true;
        rep.skip_reason = p.abelian.abelian ? "not semi-regular" : "not abelian";
        return rep;
    }
    ++rep.instances_checked;
    if (p.quasi_duo.quasi_duo) {
        ++rep.conclusions_held;
    } else {
        ++rep.conclusion_failures;
        const auto& off = *p.quasi_duo.offender;
        rep.failures.push_back({"maximal " + to_string(off.side) + " ideal " +
                                    elems_text(r, off.elems),
                                false,
                                "absorption fails at (" + r.elem_name(p.quasi_duo.absorb_fail.first) +
                                    ", " + r.elem_name(p.quasi_duo.absorb_fail.second) + ")"});
    }
    return rep;
}

LemmaReport verify_maximal_prime(const FiniteRing& r, const Caps& caps) {
    LemmaReport rep;
    rep.lemma = "maximal_prime";
    rep.subject = r.name;
    PropertyProfile p = compute_property_profile(r, caps);
    if (!p.abelian.abelian || !p.semiregular.semiregular) {
        rep.skipped = true;
        rep.skip_reason = p.abelian.abelian ? "not semi-regular" : "not abelian";
        return rep;
    }
    for (Side side : {Side::left, Side::right}) {
        const auto& maximals = side == Side::left ? p.maximal_left : p.maximal_right;
        for (const auto& m : maximals) {
            ++rep.instances_checked;
            std::string desc = "maximal " + to_string(side) + " ideal " + elems_text(r, m.elems);
            std::pair<ElemId, ElemId> w;
            if (!is_ideal(r, m.elems, Side::two_sided, &w)) {
                ++rep.conclusion_failures;
                rep.failures.push_back({desc, false, "not two-sided"});
                continue;
            }
            Ideal two{&r, m.elems, Side::two_sided};
            PrimeResult pr = is_prime_ideal(r, two);
            if (pr.prime) {
                ++rep.conclusions_held;
            } else {
                ++rep.conclusion_failures;
                rep.failures.push_back({desc, false,
                                        "not prime: aRb inside for a=" + r.elem_name(pr.a) +
                                            ", b=" + r.elem_name(pr.b)});
            }
        }
    }
    return rep;
}

LemmaReport verify_annihilator_nonzero(const FiniteRing& r, const Caps& caps) {
    LemmaReport rep;
    rep.lemma = "annihilator_nonzero";
    rep.subject = r.name;
    PropertyProfile p = compute_property_profile(r, caps);
    if (!trio_holds(p)) {
        rep.skipped = true;
        rep.skip_reason = trio_skip_reason(p);
        return rep;
    }
    for (Side side : {Side::left, Side::right}) {
        const auto& maximals = side == Side::left ? p.maximal_left : p.maximal_right;
        for (const auto& m : maximals) {
            for (Side ann_side : {Side::right, Side::left}) {
                ++rep.instances_checked;
                ElemSet ann = annihilator(r, m.elems.to_vector(), ann_side);
                if (ann.count() > 1) {
                    ++rep.conclusions_held;
                } else {
                    ++rep.conclusion_failures;
                    rep.failures.push_back({"maximal " + to_string(side) + " ideal " +
                                                elems_text(r, m.elems),
                                            false,
                                            to_string(ann_side) + " annihilator is zero"});
                }
            }
        }
    }
    return rep;
}

LemmaReport verify_compatible_membership(const MonoidAction& action, const Caps& caps) {
    const FiniteRing& r = action.ring();
    LemmaReport rep;
    rep.lemma = "compatible_membership";
    rep.subject = r.name + " / action " + action.name();
    HypothesisProfile h = hypothesis_profile(r, action, caps);
    if (!h.theorem_hypotheses_hold) {
        rep.skipped = true;
        rep.skip_reason = h.compat.compatible ? trio_skip_reason(h.props) : "not S-compatible";
        return rep;
    }
    for (Side side : {Side::left, Side::right}) {
        const auto& maximals = side == Side::left ? h.props.maximal_left : h.props.maximal_right;
        for (const auto& m : maximals) {
            ++rep.instances_checked;
            bool holds = true;
            std::string witness;
            for (std::size_t gi = 0; gi < action.generators().size() && holds; ++gi) {
                const auto& sigma = action.generators()[gi];
                for (ElemId a = 0; a < r.order && holds; ++a)
                    for (ElemId b = 0; b < r.order; ++b) {
                        bool plain = m.elems.test(r.mul(a, b));
                        bool twisted = m.elems.test(r.mul(a, sigma.map[b]));
                        if (plain != twisted) {
                            holds = false;
                            witness = "a=" + r.elem_name(a) + ", b=" + r.elem_name(b) +
                                      ", generator " + sigma.name;
                            break;
                        }
                    }
            }
            if (holds) {
                ++rep.conclusions_held;
            } else {
                ++rep.conclusion_failures;
                rep.failures.push_back({"maximal " + to_string(side) + " ideal " +
                                            elems_text(r, m.elems),
                                        false, witness});
            }
        }
    }
    return rep;
}

LemmaReport verify_coefficients_in_radical(const MonoidAction& action, const Window& window,
                                           const Caps& caps) {
    const FiniteRing& r = action.ring();
    LemmaReport rep;
    rep.lemma = "coefficients_in_radical";
    rep.subject = r.name + " / action " + action.name() + " / D=" + window.desc;
    HypothesisProfile h = hypothesis_profile(r, action, caps);
    if (!h.theorem_hypotheses_hold) {
        rep.skipped = true;
        rep.skip_reason = h.compat.compatible ? trio_skip_reason(h.props) : "not S-compatible";
        return rep;
    }
    const auto& max_right = h.props.maximal_right;
    const ElemSet& radical = h.props.radical.elems;

    std::uint64_t pairs_seen = 0;
    for_each_zero_divisor_pair(
        action, window, caps.budget,
        [&](const std::vector<ElemId>& fc, const std::vector<ElemId>& gc) {
            ++pairs_seen;
            // hypothesis: C_f escapes every maximal right ideal
            for (const auto& m : max_right) {
                bool contained = true;
                for (ElemId c : fc)
                    if (c != r.zero && !m.elems.test(c)) {
                        contained = false;
                        break;
                    }
                if (contained) {
                    ++rep.vacuous;
                    return;
                }
            }
            ++rep.instances_checked;
            bool inside = true;
            ElemId offender = -1;
            for (ElemId c : gc)
                if (c != r.zero && !radical.test(c)) {
                    inside = false;
                    offender = c;
                    break;
                }
            if (inside) {
                ++rep.conclusions_held;
            } else {
                ++rep.conclusion_failures;
                SkewSeries fs = series_from_window(action, window, fc);
                SkewSeries gs = series_from_window(action, window, gc);
                rep.failures.push_back({"f = " + fs.to_string() + ", g = " + gs.to_string(), false,
                                        "coefficient " + r.elem_name(offender) + " outside J(R)"});
            }
        });
    if (pairs_seen == 0)
        rep.note = "vacuous stratum: no zero-divisor pairs in the window";
    else if (rep.instances_checked == 0)
        rep.note = "vacuous stratum: every zero-divisor pair has C_f inside a maximal right ideal";
    return rep;
}

TheoremRun verify_main_theorem(const MonoidAction& action, const Window& window,
                               const SearchParams& params, const Caps& caps) {
    TheoremRun run;
    run.profile = hypothesis_profile(action.ring(), action, caps);
    if (!run.profile.theorem_hypotheses_hold)
        throw SpecError("theorem hypotheses do not hold for " + action.ring().name +
                        "; run exploration mode instead");
    run.right = mccoy_search(action, window, SeriesSide::right, params);
    run.left = mccoy_search(action, window, SeriesSide::left, params);
    run.passed = run.right.outcome != McCoyOutcome::counterexample &&
                 run.left.outcome != McCoyOutcome::counterexample;
    return run;
}

LemmaReport fields_witness_check(const FiniteRing& r, int degree, const Caps& caps, int threads) {
    LemmaReport rep;
    rep.lemma = "fields_witness";
    rep.subject = r.name + " / D={0.." + std::to_string(degree) + "}";
    if (!r.commutative) throw SpecError("fields_witness_check requires a commutative ring");

    OrderedMonoid nat = OrderedMonoid::naturals();
    MonoidAction action = trivial_action(r, nat);
    Window window = Window::degree_range(nat, 0, degree);

    std::vector<char> zd = window_zero_divisor_flags(action, window, caps.budget, threads);
    std::vector<ElemId> wit = left_witness_table(action, window);

    const std::uint64_t count = zd.size();
    std::vector<ElemId> coefs(window.exps.size());
    std::uint64_t zero_rank = 0;
    for (std::size_t i = 0; i < window.exps.size(); ++i)
        zero_rank = zero_rank * r.order + (std::uint64_t)r.zero;
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        if (rank == zero_rank) continue;
        ++rep.instances_checked;
        bool is_zd = zd[rank] != 0;
        bool has_witness = wit[rank] >= 0;
        if (is_zd == has_witness) {
            ++rep.conclusions_held;
        } else {
            ++rep.conclusion_failures;
            std::uint64_t t = rank;
            for (int w = (int)window.exps.size() - 1; w >= 0; --w) {
                coefs[w] = (ElemId)(t % r.order);
                t /= r.order;
            }
            SkewSeries fs = series_from_window(action, window, coefs);
            rep.failures.push_back({"f = " + fs.to_string(), false,
                                    is_zd ? "window zero divisor without constant annihilator"
                                          : "constant annihilator without window partner"});
        }
    }
    rep.note = "classical-McCoy polynomial shadow over the finite window";
    return rep;
}

LemmaReport verify_sn_transfer(const FiniteRing& r, int n, const Caps& caps) {
    LemmaReport rep;
    rep.lemma = "sn_transfer";
    rep.subject = r.name + " / n=" + std::to_string(n);
    FiniteRing sn = build_s_matrix(n, r);
    if (sn.order > caps.ideal_cap) {
        rep.skipped = true;
        rep.skip_reason = "S_n(R) order " + std::to_string(sn.order) + " exceeds ideal cap";
        return rep;
    }
    PropertyProfile pr = compute_property_profile(r, caps);
    PropertyProfile ps = compute_property_profile(sn, caps);

    ++rep.instances_checked;
    bool base = trio_holds(pr), lifted = trio_holds(ps);
    QuotientRing qr = quotient_ring(r, pr.radical);
    QuotientRing qs = quotient_ring(sn, ps.radical);
    bool quotient_match = qr.ring.order == qs.ring.order;
    if (base == lifted && quotient_match) {
        ++rep.conclusions_held;
    } else {
        ++rep.conclusion_failures;
        rep.failures.push_back(
            {"biconditional", false,
             "base trio=" + std::string(base ? "true" : "false") + ", S_n trio=" +
                 std::string(lifted ? "true" : "false") + ", |R/J|=" +
                 std::to_string(qr.ring.order) + ", |S_n/J|=" + std::to_string(qs.ring.order)});
    }
    rep.note = "|R/J(R)| = " + std::to_string(qr.ring.order) +
               ", |S_n(R)/J(S_n(R))| = " + std::to_string(qs.ring.order);
    return rep;
}

ExplorationReport two_primal_exploration(const std::vector<const FiniteRing*>& rings,
                                         const OrderedMonoid& monoid, int degree,
                                         const SearchParams& params, const Caps& caps) {
    ExplorationReport out;
    out.note = "exploration of the open two-primal question; no claim either way";
    for (const FiniteRing* rp : rings) {
        const FiniteRing& r = *rp;
        PropertyProfile p = compute_property_profile(r, caps);
        if (p.abelian.abelian) continue;  // the open question concerns non-abelian rings
        if (!p.nil.two_primal || !p.semiregular.semiregular || !p.radical_nilpotency_index)
            continue;
        std::vector<Endomorphism> endos;
        try {
            endos = enumerate_endomorphisms(r, caps.endo_cap);
        } catch (const CapacityError&) {
            endos.push_back(identity_endo(r));
        }
        for (const auto& endo : endos) {
            if (monoid.is_group() && !endo.is_bijective()) continue;
            MonoidAction action(r, monoid, std::vector<Endomorphism>(monoid.rank(), endo));
            if (!is_compatible(action).compatible) continue;
            Window window = largest_exhaustive_window(monoid, r.order, degree, params.budget);
            ExplorationEntry e;
            e.ring = r.name;
            e.action = action.name();
            e.right = mccoy_search(action, window, SeriesSide::right, params);
            e.left = mccoy_search(action, window, SeriesSide::left, params);
            out.entries.push_back(std::move(e));
            out.stratum_empty = false;
        }
    }
    if (out.stratum_empty) out.note += " (empty stratum for this catalog)";
    return out;
}

}  // namespace sgps
