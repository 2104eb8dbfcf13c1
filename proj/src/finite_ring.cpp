#include "sgps/finite_ring.hpp"

#include <sstream>

namespace sgps {

void FiniteRing::finalize() {
    const int n = order;
    if (n <= 1) throw SpecError("ring must have at least two elements (0 != 1)");
    if (zero == one) throw SpecError("ring identity coincides with zero");
    neg_table.assign(n, -1);
    for (ElemId a = 0; a < n; ++a) {
        for (ElemId b = 0; b < n; ++b) {
            if (add(a, b) == zero) {
                neg_table[a] = b;
                break;
            }
        }
        if (neg_table[a] < 0) throw InternalError("element without additive inverse survived validation");
    }
    commutative = true;
    for (ElemId a = 0; a < n && commutative; ++a)
        for (ElemId b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) {
                commutative = false;
                break;
            }
    if ((int)elem_names.size() != n) {
        elem_names.resize(n);
        for (ElemId a = 0; a < n; ++a)
            if (elem_names[a].empty()) elem_names[a] = "e" + std::to_string(a);
    }
}

namespace {

std::string triple(const FiniteRing& r, ElemId a, ElemId b, ElemId c) {
    std::ostringstream os;
    os << "(" << a << ", " << b;
    if (c >= 0) os << ", " << c;
    os << ")";
    (void)r;
    return os.str();
}

}  // namespace

ValidationReport validate_ring_axioms(const FiniteRing& r) {
    ValidationReport rep;
    const int n = r.order;
    auto check = [&](const std::string& law, bool pass, ElemId a, ElemId b, ElemId c) {
        AxiomCheck ax{law, pass, {a, b, c}};
        if (!pass && rep.all_pass) {
            rep.all_pass = false;
            rep.first_failure = law + " fails at " + triple(r, a, b, c);
        }
        rep.checks.push_back(std::move(ax));
    };

    // table totality / id range
    bool total = (int)r.add_table.size() == n * n && (int)r.mul_table.size() == n * n;
    for (std::size_t i = 0; total && i < r.add_table.size(); ++i)
        if (r.add_table[i] < 0 || r.add_table[i] >= n || r.mul_table[i] < 0 || r.mul_table[i] >= n)
            total = false;
    check("tables-total", total, -1, -1, -1);
    if (!total) return rep;

    bool ok = true;
    ElemId wa = -1, wb = -1, wc = -1;

    // additive associativity
    ok = true;
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n && ok; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
                    ok = false;
                    wa = a, wb = b, wc = c;
                    break;
                }
    check("add-associative", ok, wa, wb, wc);

    // additive commutativity
    ok = true;
    wa = wb = wc = -1;
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n; ++b)
            if (r.add(a, b) != r.add(b, a)) {
                ok = false;
                wa = a, wb = b;
                break;
            }
    check("add-commutative", ok, wa, wb, -1);

    // additive identity
    ok = true;
    wa = -1;
    for (ElemId a = 0; a < n; ++a)
        if (r.add(r.zero, a) != a || r.add(a, r.zero) != a) {
            ok = false;
            wa = a;
            break;
        }
    check("add-identity", ok, wa, -1, -1);

    // additive inverses
    ok = true;
    wa = -1;
    for (ElemId a = 0; a < n; ++a) {
        bool found = false;
        for (ElemId b = 0; b < n; ++b)
            if (r.add(a, b) == r.zero) {
                found = true;
                break;
            }
        if (!found) {
            ok = false;
            wa = a;
            break;
        }
    }
    check("add-inverses", ok, wa, -1, -1);

    // multiplicative associativity
    ok = true;
    wa = wb = wc = -1;
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n && ok; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
                    ok = false;
                    wa = a, wb = b, wc = c;
                    break;
                }
    check("mul-associative", ok, wa, wb, wc);

    // multiplicative identity
    ok = true;
    wa = -1;
    for (ElemId a = 0; a < n; ++a)
        if (r.mul(r.one, a) != a || r.mul(a, r.one) != a) {
            ok = false;
            wa = a;
            break;
        }
    check("mul-identity", ok, wa, -1, -1);

    // distributivity, both sides
    ok = true;
    wa = wb = wc = -1;
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n && ok; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
                    ok = false;
                    wa = a, wb = b, wc = c;
                    break;
                }
    check("left-distributive", ok, wa, wb, wc);

    ok = true;
    wa = wb = wc = -1;
    for (ElemId a = 0; a < n && ok; ++a)
        for (ElemId b = 0; b < n && ok; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
                    ok = false;
                    wa = a, wb = b, wc = c;
                    break;
                }
    check("right-distributive", ok, wa, wb, wc);

    // informational only
    rep.mul_commutative = true;
    for (ElemId a = 0; a < n && rep.mul_commutative; ++a)
        for (ElemId b = a + 1; b < n; ++b)
            if (r.mul(a, b) != r.mul(b, a)) {
                rep.mul_commutative = false;
                break;
            }

    return rep;
}

}  // namespace sgps
