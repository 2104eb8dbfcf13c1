#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sgps/monoid_action.hpp"

namespace sgps {

/// Finitely supported element of the skew series ring over (R, S, omega):
/// a map from exponents to nonzero coefficients, kept in canonical form
/// (zero coefficients are never stored). Addition is pointwise; the product
/// coefficient at s sums f(u) * omega_u(g(v)) over the factorizations
/// s = u * v with u in Supp(f), v in Supp(g).
class SkewSeries {
public:
    explicit SkewSeries(const MonoidAction& action) : action_(&action) {}
    SkewSeries(const MonoidAction& action, std::vector<std::pair<MonElem, ElemId>> terms);

    const MonoidAction& action() const { return *action_; }
    const std::map<MonElem, ElemId>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::vector<MonElem> support() const;
    /// Coefficient at s (zero id when s is outside the support).
    ElemId coeff(const MonElem& s) const;

    /// Adds c at exponent s, re-canonicalizing.
    void add_term(const MonElem& s, ElemId c);

    bool operator==(const SkewSeries& o) const;
    std::string to_string() const;

private:
    const MonoidAction* action_;
    std::map<MonElem, ElemId> terms_;
};

SkewSeries series_add(const SkewSeries& f, const SkewSeries& g);
SkewSeries series_neg(const SkewSeries& f);
SkewSeries series_mul(const SkewSeries& f, const SkewSeries& g);

/// Diagnostic only: the product with terms above `bound` discarded. A zero
/// truncation does not certify fg = 0, so this never feeds a McCoy verdict.
SkewSeries series_mul_truncated(const SkewSeries& f, const SkewSeries& g, const MonElem& bound);

/// c_r: the constant series with coefficient r at the monoid identity.
SkewSeries embed_const(const MonoidAction& action, ElemId r);
/// e_s: the single term 1 * x^s.
SkewSeries embed_monoid(const MonoidAction& action, const MonElem& s);

/// All nonzero coefficients appearing in any of the given series.
std::set<ElemId> coefficient_set(const std::vector<const SkewSeries*>& fs);

/// f * c_c; coefficient at s is f(s) * omega_s(c). This is the right McCoy
/// witness equation, exposed as a named operation.
SkewSeries scale_right_const(const SkewSeries& f, ElemId c);
/// c_c * f; coefficient at s is c * f(s) (omega_identity = id, so the left
/// witness equation carries no twist).
SkewSeries scale_left_const(ElemId c, const SkewSeries& f);

}  // namespace sgps
