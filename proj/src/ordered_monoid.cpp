#include "sgps/ordered_monoid.hpp"

#include <algorithm>
#include <sstream>

namespace sgps {

OrderedMonoid OrderedMonoid::naturals_lex(int k) {
    if (k < 2) throw SpecError("N^k lex requires k >= 2");
    if (k > 8) throw SpecError("N^k lex rank capped at 8");
    return OrderedMonoid(MonoidKind::naturals_lex, k);
}

OrderedMonoid OrderedMonoid::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!isspace((unsigned char)c) && c != '-') s += c;
    if (s == "N") return naturals();
    if (s == "Z") return integers();
    if (s.rfind("N^", 0) == 0) {
        std::string rest = s.substr(2);
        if (rest.size() > 3 && rest.substr(rest.size() - 3) == "lex") rest.resize(rest.size() - 3);
        try {
            return naturals_lex(std::stoi(rest));
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception&) {
        }
    }
    throw SpecError("unknown monoid spec '" + spec + "' (expected N, Z, or N^k lex)");
}

std::string OrderedMonoid::name() const {
    switch (kind_) {
        case MonoidKind::naturals: return "N";
        case MonoidKind::integers: return "Z";
        default: return "N^" + std::to_string(rank_) + " lex";
    }
}

MonElem OrderedMonoid::op(const MonElem& a, const MonElem& b) const {
    MonElem c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = a[i] + b[i];
    return c;
}

int OrderedMonoid::compare(const MonElem& a, const MonElem& b) const {
    for (int i = 0; i < rank_; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

bool OrderedMonoid::contains(const MonElem& a) const {
    if ((int)a.size() != rank_) return false;
    if (kind_ == MonoidKind::integers) return true;
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; });
}

std::optional<MonElem> OrderedMonoid::solve_right(const MonElem& u, const MonElem& s) const {
    MonElem v(rank_);
    for (int i = 0; i < rank_; ++i) v[i] = s[i] - u[i];
    if (!contains(v)) return std::nullopt;
    return v;
}

std::string OrderedMonoid::to_string(const MonElem& a) const {
    if (rank_ == 1) return std::to_string(a[0]);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank_; ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

namespace {

std::vector<MonElem> bounded_elements(const OrderedMonoid& m, int bound) {
    std::int64_t lo = m.is_group() ? -bound : 0;
    std::int64_t hi = bound;
    std::vector<MonElem> elems;
    MonElem cur(m.rank(), lo);
    for (;;) {
        elems.push_back(cur);
        int i = m.rank() - 1;
        while (i >= 0 && cur[i] == hi) {
            cur[i] = lo;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return elems;
}

}  // namespace

StrictOrderReport validate_strict_order(const OrderedMonoid& m, int sample_bound) {
    StrictOrderReport rep;
    if (sample_bound < 1) throw SpecError("sample bound must be >= 1");
    auto elems = bounded_elements(m, sample_bound);
    for (const auto& a : elems)
        for (const auto& b : elems) {
            if (m.compare(a, b) >= 0) continue;
            for (const auto& t : elems) {
                ++rep.triples_checked;
                if (m.compare(m.op(a, t), m.op(b, t)) >= 0 ||
                    m.compare(m.op(t, a), m.op(t, b)) >= 0) {
                    rep.pass = false;
                    rep.s1 = a;
                    rep.s2 = b;
                    rep.t = t;
                    return rep;
                }
            }
        }
    return rep;
}

SupportReport validate_support(const OrderedMonoid& m, const std::vector<MonElem>& support) {
    SupportReport rep;
    rep.size = support.size();
    for (const auto& s : support) {
        if (!rep.min || m.compare(s, *rep.min) < 0) rep.min = s;
        if (!rep.max || m.compare(s, *rep.max) > 0) rep.max = s;
    }
    return rep;
}

}  // namespace sgps
