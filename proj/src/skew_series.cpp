#include "sgps/skew_series.hpp"

#include <algorithm>

namespace sgps {

namespace {

void require_same_action(const SkewSeries& f, const SkewSeries& g) {
    if (&f.action() != &g.action())
        throw SpecError("series belong to different (ring, monoid, action) configurations");
}

}  // namespace

SkewSeries::SkewSeries(const MonoidAction& action, std::vector<std::pair<MonElem, ElemId>> terms)
    : action_(&action) {
    for (auto& [s, c] : terms) add_term(s, c);
}

std::vector<MonElem> SkewSeries::support() const {
    std::vector<MonElem> out;
    out.reserve(terms_.size());
    for (const auto& [s, c] : terms_) out.push_back(s);
    return out;
}

ElemId SkewSeries::coeff(const MonElem& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? action_->ring().zero : it->second;
}

void SkewSeries::add_term(const MonElem& s, ElemId c) {
    const FiniteRing& r = action_->ring();
    if (!action_->monoid().contains(s))
        throw SpecError("exponent " + action_->monoid().to_string(s) + " is outside the monoid");
    auto it = terms_.find(s);
    ElemId sum = it == terms_.end() ? c : r.add(it->second, c);
    if (sum == r.zero) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(s, sum);
    } else {
        it->second = sum;
    }
}

bool SkewSeries::operator==(const SkewSeries& o) const {
    return action_ == o.action_ && terms_ == o.terms_;
}

std::string SkewSeries::to_string() const {
    if (terms_.empty()) return "0";
    const FiniteRing& r = action_->ring();
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cn = r.elem_name(c);
        if (cn.find('+') != std::string::npos) cn = "(" + cn + ")";
        out += cn + "*x^" + action_->monoid().to_string(s);
    }
    return out;
}

SkewSeries series_add(const SkewSeries& f, const SkewSeries& g) {
    require_same_action(f, g);
    SkewSeries out = f;
    for (const auto& [s, c] : g.terms()) out.add_term(s, c);
    return out;
}

SkewSeries series_neg(const SkewSeries& f) {
    const FiniteRing& r = f.action().ring();
    SkewSeries out(f.action());
    for (const auto& [s, c] : f.terms()) out.add_term(s, r.neg(c));
    return out;
}

SkewSeries series_mul(const SkewSeries& f, const SkewSeries& g) {
    require_same_action(f, g);
    const MonoidAction& act = f.action();
    const FiniteRing& r = act.ring();
    const OrderedMonoid& m = act.monoid();

    // candidate product support comes from pairwise sums of the supports
    std::set<MonElem> candidates;
    for (const auto& [u, fu] : f.terms())
        for (const auto& [v, gv] : g.terms()) candidates.insert(m.op(u, v));

    SkewSeries out(act);
    for (const MonElem& s : candidates) {
        // X_s(f, g) walked by solving u * v = s for each u in Supp(f)
        ElemId acc = r.zero;
        for (const auto& [u, fu] : f.terms()) {
            auto v = m.solve_right(u, s);
            if (!v) continue;
            auto it = g.terms().find(*v);
            if (it == g.terms().end()) continue;
            acc = r.add(acc, r.mul(fu, act.apply(u, it->second)));
        }
        if (acc != r.zero) out.add_term(s, acc);
    }
    return out;
}

SkewSeries series_mul_truncated(const SkewSeries& f, const SkewSeries& g, const MonElem& bound) {
    const OrderedMonoid& m = f.action().monoid();
    SkewSeries full = series_mul(f, g);
    SkewSeries out(f.action());
    for (const auto& [s, c] : full.terms())
        if (m.compare(s, bound) <= 0) out.add_term(s, c);
    return out;
}

SkewSeries embed_const(const MonoidAction& action, ElemId c) {
    SkewSeries out(action);
    if (c != action.ring().zero) out.add_term(action.monoid().identity(), c);
    return out;
}

SkewSeries embed_monoid(const MonoidAction& action, const MonElem& s) {
    SkewSeries out(action);
    out.add_term(s, action.ring().one);
    return out;
}

std::set<ElemId> coefficient_set(const std::vector<const SkewSeries*>& fs) {
    std::set<ElemId> out;
    for (const SkewSeries* f : fs)
        for (const auto& [s, c] : f->terms()) out.insert(c);
    return out;
}

SkewSeries scale_right_const(const SkewSeries& f, ElemId c) {
    return series_mul(f, embed_const(f.action(), c));
}

SkewSeries scale_left_const(ElemId c, const SkewSeries& f) {
    return series_mul(embed_const(f.action(), c), f);
}

}  // namespace sgps
