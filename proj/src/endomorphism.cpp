#include "sgps/endomorphism.hpp"

#include <algorithm>

namespace sgps {

bool Endomorphism::is_identity() const {
    for (ElemId a = 0; a < ring->order; ++a)
        if (map[a] != a) return false;
    return true;
}

bool Endomorphism::is_bijective() const {
    std::vector<char> seen(ring->order, 0);
    for (ElemId a = 0; a < ring->order; ++a) {
        if (seen[map[a]]) return false;
        seen[map[a]] = 1;
    }
    return true;
}

bool is_unital_endomorphism(const FiniteRing& r, const std::vector<ElemId>& map,
                            std::pair<ElemId, ElemId>* witness) {
    if ((int)map.size() != r.order) return false;
    if (map[r.one] != r.one) {
        if (witness) *witness = {r.one, r.one};
        return false;
    }
    for (ElemId a = 0; a < r.order; ++a)
        for (ElemId b = 0; b < r.order; ++b) {
            if (map[r.add(a, b)] != r.add(map[a], map[b]) ||
                map[r.mul(a, b)] != r.mul(map[a], map[b])) {
                if (witness) *witness = {a, b};
                return false;
            }
        }
    return true;
}

Endomorphism identity_endo(const FiniteRing& r) {
    Endomorphism e{&r, std::vector<ElemId>(r.order), "id"};
    for (ElemId a = 0; a < r.order; ++a) e.map[a] = a;
    return e;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    Endomorphism h{f.ring, std::vector<ElemId>(f.ring->order), f.name + "*" + g.name};
    for (ElemId a = 0; a < f.ring->order; ++a) h.map[a] = f.map[g.map[a]];
    return h;
}

std::optional<Endomorphism> inverse(const Endomorphism& f) {
    if (!f.is_bijective()) return std::nullopt;
    Endomorphism h{f.ring, std::vector<ElemId>(f.ring->order), f.name + "^-1"};
    for (ElemId a = 0; a < f.ring->order; ++a) h.map[f.map[a]] = a;
    return h;
}

namespace {

// Derivation of every element from {0, 1, generators} under + and *.
// kind: 0 = constant, 1 = generator, 2 = sum, 3 = product.
struct Derivation {
    int kind;
    int a, b;  // operand ids, or generator index for kind 1
};

struct ExprClosure {
    std::vector<int> gens;               // generator element ids
    std::vector<Derivation> derivation;  // indexed by element id
    std::vector<int> eval_order;         // ids in derivation-safe order
};

ExprClosure build_expr_closure(const FiniteRing& r) {
    const int n = r.order;
    ExprClosure ec;
    ec.derivation.assign(n, {-1, -1, -1});
    std::vector<char> known(n, 0);
    auto learn = [&](ElemId e, Derivation d) {
        if (!known[e]) {
            known[e] = 1;
            ec.derivation[e] = d;
            ec.eval_order.push_back(e);
        }
    };
    learn(r.zero, {0, r.zero, -1});
    learn(r.one, {0, r.one, -1});
    for (;;) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur = ec.eval_order;
            for (int a : cur)
                for (int b : cur) {
                    ElemId s = r.add(a, b), p = r.mul(a, b);
                    if (!known[s]) {
                        learn(s, {2, a, b});
                        grew = true;
                    }
                    if (!known[p]) {
                        learn(p, {3, a, b});
                        grew = true;
                    }
                }
        }
        ElemId next = -1;
        for (ElemId e = 0; e < n; ++e)
            if (!known[e]) {
                next = e;
                break;
            }
        if (next < 0) break;
        ec.gens.push_back(next);
        learn(next, {1, (int)ec.gens.size() - 1, -1});
    }
    return ec;
}

}  // namespace

std::vector<Endomorphism> enumerate_endomorphisms(const FiniteRing& r, int cap) {
    if (r.order > cap)
        throw CapacityError("endomorphism enumeration cap " + std::to_string(cap) +
                            " exceeded by ring of order " + std::to_string(r.order));
    const int n = r.order;
    ExprClosure ec = build_expr_closure(r);
    const int k = (int)ec.gens.size();

    std::vector<Endomorphism> found;
    std::vector<int> images(k, 0);
    std::vector<ElemId> map(n);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < k; ++i) {
            images[i] = (int)(t % n);
            t /= n;
        }
        for (int e : ec.eval_order) {
            const Derivation& d = ec.derivation[e];
            switch (d.kind) {
                case 0: map[e] = d.a; break;
                case 1: map[e] = images[d.a]; break;
                case 2: map[e] = r.add(map[d.a], map[d.b]); break;
                default: map[e] = r.mul(map[d.a], map[d.b]); break;
            }
        }
        if (is_unital_endomorphism(r, map)) found.push_back({&r, map, ""});
    }

    std::sort(found.begin(), found.end(), [](const Endomorphism& a, const Endomorphism& b) {
        bool ia = true, ib = true;
        for (std::size_t i = 0; i < a.map.size(); ++i) {
            if (a.map[i] != (ElemId)i) ia = false;
            if (b.map[i] != (ElemId)i) ib = false;
        }
        if (ia != ib) return ia;
        return a.map < b.map;
    });
    for (std::size_t i = 0; i < found.size(); ++i)
        found[i].name = (i == 0 && found[i].is_identity()) ? "id" : "e" + std::to_string(i);
    return found;
}

}  // namespace sgps
