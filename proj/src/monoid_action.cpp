#include "sgps/monoid_action.hpp"

namespace sgps {

MonoidAction::MonoidAction(const FiniteRing& ring, OrderedMonoid monoid,
                           std::vector<Endomorphism> generators)
    : ring_(&ring), monoid_(monoid), gens_(std::move(generators)) {
    if ((int)gens_.size() != monoid_.rank())
        throw SpecError("action needs " + std::to_string(monoid_.rank()) +
                        " generator endomorphism(s), got " + std::to_string(gens_.size()));
    for (const auto& g : gens_) {
        if (g.ring != ring_) throw SpecError("generator endomorphism belongs to a different ring");
        std::pair<ElemId, ElemId> w;
        if (!is_unital_endomorphism(ring, g.map, &w))
            throw SpecError("generator '" + g.name + "' is not a unital endomorphism (fails at (" +
                            ring.elem_name(w.first) + ", " + ring.elem_name(w.second) + "))");
    }
    // homomorphism law reduces to commuting generators
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            for (ElemId a = 0; a < ring.order; ++a)
                if (gens_[i].map[gens_[j].map[a]] != gens_[j].map[gens_[i].map[a]])
                    throw SpecError("generators '" + gens_[i].name + "' and '" + gens_[j].name +
                                    "' do not commute (witness " + ring.elem_name(a) + ")");
    if (monoid_.is_group()) {
        for (const auto& g : gens_) {
            auto inv = inverse(g);
            if (!inv)
                throw SpecError("generator '" + g.name +
                                "' is not bijective; Z actions need automorphisms");
            gen_inverses_.push_back(std::move(*inv));
        }
    }
    cache_[monoid_.identity()] = identity_endo(ring).map;
}

std::string MonoidAction::name() const {
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].name;
    }
    return s;
}

bool MonoidAction::is_trivial() const {
    for (const auto& g : gens_)
        if (!g.is_identity()) return false;
    return true;
}

namespace {

std::vector<ElemId> compose_maps(const std::vector<ElemId>& f, const std::vector<ElemId>& g) {
    std::vector<ElemId> h(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) h[a] = f[g[a]];
    return h;
}

// map^e by binary exponentiation, e >= 0
std::vector<ElemId> map_power(std::vector<ElemId> base, std::int64_t e, int n) {
    std::vector<ElemId> acc(n);
    for (int a = 0; a < n; ++a) acc[a] = a;
    while (e > 0) {
        if (e & 1) acc = compose_maps(acc, base);
        base = compose_maps(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace

const std::vector<ElemId>& MonoidAction::table(const MonElem& s) const {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    if (!monoid_.contains(s))
        throw SpecError("exponent " + monoid_.to_string(s) + " is outside the monoid");
    const int n = ring_->order;
    std::vector<ElemId> acc(n);
    for (int a = 0; a < n; ++a) acc[a] = a;
    for (int i = 0; i < monoid_.rank(); ++i) {
        std::int64_t e = s[i];
        const std::vector<ElemId>& base = e >= 0 ? gens_[i].map : gen_inverses_[i].map;
        acc = compose_maps(acc, map_power(base, e >= 0 ? e : -e, n));
    }
    return cache_.emplace(s, std::move(acc)).first->second;
}

void MonoidAction::prefetch(const std::vector<MonElem>& exps) const {
    for (const auto& s : exps) table(s);
}

MonoidAction trivial_action(const FiniteRing& ring, const OrderedMonoid& monoid) {
    std::vector<Endomorphism> gens(monoid.rank(), identity_endo(ring));
    return MonoidAction(ring, monoid, std::move(gens));
}

CompatibilityResult is_compatible(const MonoidAction& action) {
    const FiniteRing& r = action.ring();
    int gi = 0;
    for (const auto& g : action.generators()) {
        for (ElemId a = 0; a < r.order; ++a)
            for (ElemId b = 0; b < r.order; ++b) {
                bool plain = r.mul(a, b) == r.zero;
                bool twisted = r.mul(a, g.map[b]) == r.zero;
                if (plain != twisted) return {false, a, b, gi};
            }
        ++gi;
    }
    return {};
}

}  // namespace sgps
