#include "sgps/ring_predicates.hpp"

#include <algorithm>
#include <set>

namespace sgps {

std::string to_string(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        default: return "two-sided";
    }
}

Ideal ideal_closure(const FiniteRing& r, const std::vector<ElemId>& gens, Side side) {
    const int n = r.order;
    ElemSet cur(n);
    cur.set(r.zero);
    for (ElemId g : gens) cur.set(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElemId> elems = cur.to_vector();
        for (ElemId a : elems)
            for (ElemId b : elems) {
                ElemId s = r.add(a, b);
                if (!cur.test(s)) {
                    cur.set(s);
                    grew = true;
                }
            }
        elems = cur.to_vector();
        for (ElemId x : elems)
            for (ElemId t = 0; t < n; ++t) {
                if (side != Side::right) {
                    ElemId p = r.mul(t, x);
                    if (!cur.test(p)) {
                        cur.set(p);
                        grew = true;
                    }
                }
                if (side != Side::left) {
                    ElemId p = r.mul(x, t);
                    if (!cur.test(p)) {
                        cur.set(p);
                        grew = true;
                    }
                }
            }
    }
    return Ideal{&r, cur, side};
}

bool is_ideal(const FiniteRing& r, const ElemSet& s, Side side,
              std::pair<ElemId, ElemId>* absorb_witness) {
    if (!s.test(r.zero)) return false;
    std::vector<ElemId> elems = s.to_vector();
    for (ElemId a : elems)
        for (ElemId b : elems)
            if (!s.test(r.add(a, b))) return false;
    for (ElemId x : elems)
        for (ElemId t = 0; t < r.order; ++t) {
            if (side != Side::right && !s.test(r.mul(t, x))) {
                if (absorb_witness) *absorb_witness = {t, x};
                return false;
            }
            if (side != Side::left && !s.test(r.mul(x, t))) {
                if (absorb_witness) *absorb_witness = {t, x};
                return false;
            }
        }
    return true;
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& r, Side side, const Caps& caps) {
    if (r.order > caps.ideal_cap)
        throw CapacityError("ideal enumeration cap " + std::to_string(caps.ideal_cap) +
                            " exceeded by ring of order " + std::to_string(r.order));
    std::set<ElemSet> seen;
    std::vector<ElemSet> queue;
    ElemSet zero_ideal = ideal_closure(r, {}, side).elems;
    seen.insert(zero_ideal);
    queue.push_back(zero_ideal);
    while (!queue.empty()) {
        ElemSet cur = queue.back();
        queue.pop_back();
        for (ElemId x = 0; x < r.order; ++x) {
            if (cur.test(x)) continue;
            std::vector<ElemId> gens = cur.to_vector();
            gens.push_back(x);
            ElemSet next = ideal_closure(r, gens, side).elems;
            if (next.count() == r.order) continue;  // proper ideals only
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Ideal> out;
    for (const auto& s : seen) out.push_back(Ideal{&r, s, side});
    return out;  // std::set iteration is already the canonical order
}

std::vector<Ideal> one_sided_maximal_ideals(const FiniteRing& r, Side side, const Caps& caps) {
    std::vector<Ideal> all = enumerate_ideals(r, side, caps);
    std::vector<Ideal> maximal;
    for (const auto& i : all) {
        bool is_max = true;
        for (const auto& j : all)
            if (j.elems != i.elems && j.elems.contains(i.elems)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(i);
    }
    return maximal;
}

std::vector<IdempotentInfo> idempotents(const FiniteRing& r) {
    std::vector<IdempotentInfo> out;
    for (ElemId e = 0; e < r.order; ++e) {
        if (r.mul(e, e) != e) continue;
        bool central = true;
        for (ElemId x = 0; x < r.order; ++x)
            if (r.mul(e, x) != r.mul(x, e)) {
                central = false;
                break;
            }
        out.push_back({e, central});
    }
    return out;
}

AbelianResult is_abelian(const FiniteRing& r) {
    for (ElemId e = 0; e < r.order; ++e) {
        if (r.mul(e, e) != e) continue;
        for (ElemId x = 0; x < r.order; ++x)
            if (r.mul(e, x) != r.mul(x, e)) return {false, e, x};
    }
    return {};
}

RegularResult is_regular(const FiniteRing& r) {
    for (ElemId a = 0; a < r.order; ++a) {
        bool ok = false;
        for (ElemId x = 0; x < r.order && !ok; ++x)
            if (r.mul(r.mul(a, x), a) == a) ok = true;
        if (!ok) return {false, a};
    }
    return {};
}

namespace {

bool has_left_inverse(const FiniteRing& r, ElemId a) {
    for (ElemId x = 0; x < r.order; ++x)
        if (r.mul(x, a) == r.one) return true;
    return false;
}

}  // namespace

Ideal jacobson_radical(const FiniteRing& r, const Caps& caps) {
    ElemSet quasi(r.order);
    for (ElemId a = 0; a < r.order; ++a) {
        bool in_radical = true;
        for (ElemId t = 0; t < r.order && in_radical; ++t)
            if (!has_left_inverse(r, r.sub(r.one, r.mul(t, a)))) in_radical = false;
        if (in_radical) quasi.set(a);
    }
    ElemSet inter = ElemSet::full(r.order);
    for (const auto& m : one_sided_maximal_ideals(r, Side::left, caps)) inter &= m.elems;
    if (inter != quasi)
        throw InternalError("jacobson radical characterizations disagree on " + r.name);
    return Ideal{&r, quasi, Side::two_sided};
}

std::optional<int> nilpotency_index(const Ideal& ideal) {
    const FiniteRing& r = *ideal.ring;
    ElemSet zero_only = ElemSet::single(r.order, r.zero);
    ElemSet power = ideal.elems;  // I^1
    int k = 1;
    for (;;) {
        if (power == zero_only) return k;
        // I^{k+1}: additive closure of products (element of I^k) * (element of I)
        ElemSet next(r.order);
        next.set(r.zero);
        for (ElemId a : power.to_vector())
            for (ElemId b : ideal.elems.to_vector()) next.set(r.mul(a, b));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<ElemId> elems = next.to_vector();
            for (ElemId a : elems)
                for (ElemId b : elems) {
                    ElemId s = r.add(a, b);
                    if (!next.test(s)) {
                        next.set(s);
                        grew = true;
                    }
                }
        }
        if (next == power) return std::nullopt;  // stabilized above zero
        power = next;
        ++k;
        if (k > r.order + 1) return std::nullopt;
    }
}

QuotientRing quotient_ring(const FiniteRing& r, const Ideal& ideal) {
    if (ideal.side != Side::two_sided)
        throw SpecError("quotient requires a two-sided ideal, got " + to_string(ideal.side));
    std::pair<ElemId, ElemId> w;
    if (!is_ideal(r, ideal.elems, Side::two_sided, &w))
        throw SpecError("quotient requires a two-sided ideal (absorption fails)");

    const int n = r.order;
    std::vector<ElemId> rep(n, -1);  // smallest member of each coset
    for (ElemId a = 0; a < n; ++a) {
        ElemId best = a;
        for (ElemId i : ideal.elems.to_vector()) best = std::min(best, r.add(a, i));
        rep[a] = best;
    }
    std::vector<ElemId> reps;
    for (ElemId a = 0; a < n; ++a)
        if (rep[a] == a) reps.push_back(a);
    std::vector<ElemId> coset_of(n);
    for (ElemId a = 0; a < n; ++a)
        coset_of[a] = (ElemId)(std::lower_bound(reps.begin(), reps.end(), rep[a]) - reps.begin());

    FiniteRing q;
    q.order = (int)reps.size();
    q.add_table.resize(q.order * q.order);
    q.mul_table.resize(q.order * q.order);
    for (int i = 0; i < q.order; ++i)
        for (int j = 0; j < q.order; ++j) {
            q.add_table[i * q.order + j] = coset_of[r.add(reps[i], reps[j])];
            q.mul_table[i * q.order + j] = coset_of[r.mul(reps[i], reps[j])];
        }
    q.zero = coset_of[r.zero];
    q.one = coset_of[r.one];
    q.name = r.name + " / I";
    q.provenance = "quotient of " + r.name + " by an ideal of order " +
                   std::to_string(ideal.elems.count());
    q.elem_names.resize(q.order);
    for (int i = 0; i < q.order; ++i) q.elem_names[i] = r.elem_name(reps[i]) + "+I";
    auto rep_check = validate_ring_axioms(q);
    if (!rep_check.all_pass) throw InternalError("quotient ring failed axioms: " + rep_check.first_failure);
    q.finalize();

    // projection must be a surjective unital homomorphism
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b)
            if (coset_of[r.add(a, b)] != q.add(coset_of[a], coset_of[b]) ||
                coset_of[r.mul(a, b)] != q.mul(coset_of[a], coset_of[b]))
                throw InternalError("quotient projection is not a homomorphism");
    return {std::move(q), std::move(coset_of)};
}

SemiregularResult is_semiregular(const FiniteRing& r, const Caps& caps) {
    Ideal j = jacobson_radical(r, caps);
    QuotientRing q = quotient_ring(r, j);
    RegularResult reg = is_regular(q.ring);
    if (!reg.regular) return {false, "quotient-not-regular", reg.witness};
    for (const auto& info : idempotents(q.ring)) {
        bool lifts = false;
        for (ElemId e = 0; e < r.order && !lifts; ++e)
            if (r.mul(e, e) == e && q.projection[e] == info.e) lifts = true;
        if (!lifts) return {false, "idempotent-does-not-lift", info.e};
    }
    return {};
}

QuasiDuoResult is_quasi_duo(const FiniteRing& r, const Caps& caps) {
    for (Side side : {Side::left, Side::right}) {
        for (const auto& m : one_sided_maximal_ideals(r, side, caps)) {
            std::pair<ElemId, ElemId> w;
            if (!is_ideal(r, m.elems, Side::two_sided, &w)) return {false, m, w};
        }
    }
    return {};
}

PrimeResult is_prime_ideal(const FiniteRing& r, const Ideal& p) {
    if (p.side != Side::two_sided) throw SpecError("prime test requires a two-sided ideal");
    if (!p.is_proper()) throw SpecError("prime test requires a proper ideal");
    std::pair<ElemId, ElemId> w;
    if (!is_ideal(r, p.elems, Side::two_sided, &w))
        throw SpecError("prime test requires a genuine two-sided ideal");
    for (ElemId a = 0; a < r.order; ++a) {
        if (p.elems.test(a)) continue;
        for (ElemId b = 0; b < r.order; ++b) {
            if (p.elems.test(b)) continue;
            bool inside = true;
            for (ElemId t = 0; t < r.order && inside; ++t)
                if (!p.elems.test(r.mul(r.mul(a, t), b))) inside = false;
            if (inside) return {false, a, b};
        }
    }
    return {};
}

NilStructure nil_structure(const FiniteRing& r, const Caps& caps) {
    NilStructure out;
    out.nil = ElemSet(r.order);
    for (ElemId a = 0; a < r.order; ++a) {
        ElemId p = a;
        for (int k = 1; k <= r.order; ++k) {
            if (p == r.zero) {
                out.nil.set(a);
                break;
            }
            p = r.mul(p, a);
        }
        if (p == r.zero) out.nil.set(a);
    }
    ElemSet inter = ElemSet::full(r.order);
    for (const auto& i : enumerate_ideals(r, Side::two_sided, caps)) {
        if (!i.is_proper()) continue;
        Ideal p{&r, i.elems, Side::two_sided};
        if (is_prime_ideal(r, p).prime) inter &= i.elems;
    }
    out.nil_star = Ideal{&r, inter, Side::two_sided};
    out.two_primal = (out.nil == inter);
    return out;
}

ElemSet annihilator(const FiniteRing& r, const std::vector<ElemId>& xs, Side side) {
    ElemSet out(r.order);
    for (ElemId c = 0; c < r.order; ++c) {
        bool kills = true;
        for (ElemId x : xs) {
            ElemId p = (side == Side::right) ? r.mul(x, c) : r.mul(c, x);
            if (p != r.zero) {
                kills = false;
                break;
            }
        }
        if (kills) out.set(c);
    }
    return out;
}

PropertyProfile compute_property_profile(const FiniteRing& r, const Caps& caps) {
    PropertyProfile p;
    p.ring_name = r.name;
    p.order = r.order;
    p.abelian = is_abelian(r);
    p.regular = is_regular(r);
    p.semiregular = is_semiregular(r, caps);
    p.quasi_duo = is_quasi_duo(r, caps);
    p.nil = nil_structure(r, caps);
    p.radical = jacobson_radical(r, caps);
    p.radical_nilpotency_index = nilpotency_index(p.radical);
    p.idems = idempotents(r);
    p.maximal_left = one_sided_maximal_ideals(r, Side::left, caps);
    p.maximal_right = one_sided_maximal_ideals(r, Side::right, caps);
    return p;
}

}  // namespace sgps
