#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "sgps/finite_ring.hpp"

namespace sgps {

namespace {

constexpr int kMaxBuildOrder = 1024;  // tables are order^2 entries

void require(bool cond, const std::string& msg) {
    if (!cond) throw SpecError(msg);
}

void validate_or_throw(FiniteRing& r) {
    auto rep = validate_ring_axioms(r);
    if (!rep.all_pass) throw AxiomError("ring axiom violation: " + rep.first_failure);
    r.finalize();
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- Z/p polynomial helpers for the gf constructor ---

using Poly = std::vector<int>;  // little-endian coefficients over Z_p

int pdeg(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

// remainder of a by monic m
Poly pmod(Poly a, const Poly& m, int p) {
    int dm = pdeg(m);
    for (int i = pdeg(a); i >= dm; i = pdeg(a)) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(dm > 0 ? dm : 1);
    return a;
}

bool divides(const Poly& d, const Poly& f, int p) {
    Poly r = pmod(f, d, p);
    return pdeg(r) < 0;
}

bool is_irreducible(const Poly& f, int p) {
    int k = pdeg(f);
    if (k < 1) return false;
    for (int d = 1; 2 * d <= k; ++d) {
        // all monic candidates of degree d
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Poly cand(d + 1, 0);
            std::int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = (int)(t % p);
                t /= p;
            }
            cand[d] = 1;
            if (divides(cand, f, p)) return false;
        }
    }
    return true;
}

int mod_inverse(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw SpecError("non-invertible leading coefficient mod " + std::to_string(p));
}

Poly parse_poly(const std::string& text, int p) {
    // e.g. "x^2+x+1", "x^3+2x+1"
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    require(!s.empty(), "empty modulus polynomial");
    Poly f;
    auto bump = [&](int e, int c) {
        if ((int)f.size() <= e) f.resize(e + 1, 0);
        f[e] = ((f[e] + c) % p + p) % p;
    };
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '+') {
            ++i;
            continue;
        }
        int coef = 1;
        bool saw_digits = false;
        std::size_t start = i;
        while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
        if (i > start) {
            coef = std::stoi(s.substr(start, i - start));
            saw_digits = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                start = i;
                while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
                require(i > start, "malformed exponent in polynomial '" + text + "'");
                e = std::stoi(s.substr(start, i - start));
            }
            bump(e, coef);
        } else {
            require(saw_digits, "malformed term in polynomial '" + text + "'");
            bump(0, coef);
        }
    }
    return f;
}

std::string default_gf_poly(int q) {
    switch (q) {
        case 4: return "x^2+x+1";
        case 8: return "x^3+x+1";
        case 9: return "x^2+1";
        case 16: return "x^4+x+1";
        case 25: return "x^2+x+1";
        case 27: return "x^3+2x+1";
        default: return "";
    }
}

std::string gf_elem_name(const Poly& c) {
    std::string s;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]);
            s += (i == 1) ? "g" : "g^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::string wrap_name(const std::string& n) {
    if (n.find('+') != std::string::npos || n.find(',') != std::string::npos) return "(" + n + ")";
    return n;
}

}  // namespace

FiniteRing build_zmod(int n) {
    require(n >= 2, "zmod requires modulus >= 2, got " + std::to_string(n));
    require(n <= kMaxBuildOrder, "zmod modulus too large");
    FiniteRing r;
    r.order = n;
    r.add_table.resize(n * n);
    r.mul_table.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add_table[a * n + b] = (a + b) % n;
            r.mul_table[a * n + b] = (a * b) % n;
        }
    r.zero = 0;
    r.one = 1;
    r.name = "zmod " + std::to_string(n);
    r.provenance = "integers modulo " + std::to_string(n);
    r.elem_names.resize(n);
    for (int a = 0; a < n; ++a) r.elem_names[a] = std::to_string(a);
    validate_or_throw(r);
    return r;
}

FiniteRing build_gf(int q, const std::string& poly_text) {
    require(q >= 2 && q <= kMaxBuildOrder, "gf order out of range");
    int p = 0, k = 0, m = q;
    for (int d = 2; d <= m; ++d)
        if (m % d == 0) {
            p = d;
            break;
        }
    require(is_prime(p), "gf order must be a prime power, got " + std::to_string(q));
    while (m > 1) {
        require(m % p == 0, "gf order must be a prime power, got " + std::to_string(q));
        m /= p;
        ++k;
    }

    std::string ptext = poly_text;
    if (ptext.empty() && k > 1) {
        ptext = default_gf_poly(q);
        require(!ptext.empty(),
                "no default modulus polynomial for gf " + std::to_string(q) + "; pass poly=...");
    }

    Poly modp;
    if (k == 1) {
        modp = {0, 1};  // plain prime field; modulus is irrelevant
    } else {
        modp = parse_poly(ptext, p);
        require(pdeg(modp) == k, "modulus polynomial degree " + std::to_string(pdeg(modp)) +
                                     " does not match gf " + std::to_string(q));
        int lead = modp[k];
        if (lead != 1) {
            int inv = mod_inverse(lead, p);
            for (auto& c : modp) c = c * inv % p;
        }
        require(is_irreducible(modp, p), "modulus polynomial '" + ptext + "' is reducible mod " +
                                             std::to_string(p));
    }

    FiniteRing r;
    r.order = q;
    r.add_table.resize(q * q);
    r.mul_table.resize(q * q);
    auto decode = [&](int id) {
        Poly c(k, 0);
        for (int i = 0; i < k; ++i) {
            c[i] = id % p;
            id /= p;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int id = 0, w = 1;
        for (int i = 0; i < k; ++i) {
            id += (i < (int)c.size() ? c[i] : 0) * w;
            w *= p;
        }
        return id;
    };
    for (int a = 0; a < q; ++a) {
        Poly ca = decode(a);
        for (int b = 0; b < q; ++b) {
            Poly cb = decode(b);
            Poly s(k, 0);
            for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            r.add_table[a * q + b] = encode(s);
            r.mul_table[a * q + b] = encode(pmod(pmul(ca, cb, p), modp, p));
        }
    }
    r.zero = 0;
    r.one = 1;
    bool default_poly = (k == 1) || (ptext == default_gf_poly(q));
    r.name = "gf " + std::to_string(q) + (default_poly ? "" : " poly=" + ptext);
    r.provenance = k == 1 ? "prime field of order " + std::to_string(q)
                          : "GF(" + std::to_string(q) + ") = Z" + std::to_string(p) + "[x]/(" +
                                ptext + ")";
    r.elem_names.resize(q);
    for (int a = 0; a < q; ++a) r.elem_names[a] = k == 1 ? std::to_string(a) : gf_elem_name(decode(a));
    validate_or_throw(r);
    return r;
}

FiniteRing build_product(const FiniteRing& a, const FiniteRing& b) {
    require((std::int64_t)a.order * b.order <= kMaxBuildOrder, "product ring too large");
    FiniteRing r;
    const int n = a.order * b.order;
    r.order = n;
    r.add_table.resize(n * n);
    r.mul_table.resize(n * n);
    auto enc = [&](int x, int y) { return x + y * a.order; };
    for (int x = 0; x < n; ++x) {
        int x1 = x % a.order, x2 = x / a.order;
        for (int y = 0; y < n; ++y) {
            int y1 = y % a.order, y2 = y / a.order;
            r.add_table[x * n + y] = enc(a.add(x1, y1), b.add(x2, y2));
            r.mul_table[x * n + y] = enc(a.mul(x1, y1), b.mul(x2, y2));
        }
    }
    r.zero = enc(a.zero, b.zero);
    r.one = enc(a.one, b.one);
    auto compact = [](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        return s;
    };
    r.name = "product " + compact(a.name) + " " + compact(b.name);
    r.provenance = "direct product (" + a.provenance + ") x (" + b.provenance + ")";
    r.elem_names.resize(n);
    for (int x = 0; x < n; ++x)
        r.elem_names[x] = "(" + a.elem_name(x % a.order) + "," + b.elem_name(x / a.order) + ")";
    validate_or_throw(r);
    return r;
}

FiniteRing build_s_matrix(int n, const FiniteRing& base) {
    require(n >= 1, "smatrix requires n >= 1");
    std::int64_t order = 1;
    for (int i = 0; i < n; ++i) {
        order *= base.order;
        require(order <= kMaxBuildOrder, "smatrix ring too large");
    }
    const int q = base.order, N = (int)order;
    FiniteRing r;
    r.order = N;
    r.add_table.resize((std::size_t)N * N);
    r.mul_table.resize((std::size_t)N * N);
    std::vector<int> ca(n), cb(n), cc(n);
    auto decode = [&](int id, std::vector<int>& c) {
        for (int i = 0; i < n; ++i) {
            c[i] = id % q;
            id /= q;
        }
    };
    auto encode = [&](const std::vector<int>& c) {
        int id = 0, w = 1;
        for (int i = 0; i < n; ++i) {
            id += c[i] * w;
            w *= q;
        }
        return id;
    };
    for (int x = 0; x < N; ++x) {
        decode(x, ca);
        for (int y = 0; y < N; ++y) {
            decode(y, cb);
            for (int i = 0; i < n; ++i) cc[i] = base.add(ca[i], cb[i]);
            r.add_table[(std::size_t)x * N + y] = encode(cc);
            // truncated convolution: the shift matrix E is central with E^n = 0
            for (int i = 0; i < n; ++i) cc[i] = base.zero;
            for (int i = 0; i < n; ++i)
                for (int j = 0; i + j < n; ++j)
                    cc[i + j] = base.add(cc[i + j], base.mul(ca[i], cb[j]));
            r.mul_table[(std::size_t)x * N + y] = encode(cc);
        }
    }
    std::vector<int> zc(n, base.zero), oc(n, base.zero);
    oc[0] = base.one;
    r.zero = encode(zc);
    r.one = encode(oc);
    std::string bn = base.name;
    bn.erase(std::remove(bn.begin(), bn.end(), ' '), bn.end());
    r.name = "smatrix " + std::to_string(n) + " " + bn;
    r.provenance = "constant-diagonal upper triangular " + std::to_string(n) + "x" +
                   std::to_string(n) + " matrices over " + base.provenance;
    r.elem_names.resize(N);
    for (int x = 0; x < N; ++x) {
        decode(x, ca);
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (ca[i] == base.zero) continue;
            if (!s.empty()) s += "+";
            std::string cn = base.elem_name(ca[i]);
            if (i == 0) {
                s += cn;
            } else {
                if (cn != "1") s += wrap_name(cn);
                s += (i == 1) ? "E" : "E^" + std::to_string(i);
            }
        }
        r.elem_names[x] = s.empty() ? "0" : s;
    }
    validate_or_throw(r);
    return r;
}

FiniteRing build_upper_triangular(int n, const FiniteRing& base) {
    require(n >= 1, "uppertri requires n >= 1");
    const int m = n * (n + 1) / 2;
    std::int64_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= base.order;
        require(order <= kMaxBuildOrder, "uppertri ring too large");
    }
    const int q = base.order, N = (int)order;

    // coordinate index of entry (i,j), i <= j, row-major over the upper triangle
    std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pos[i][j] = idx++;
    }
    std::vector<int> ca(m), cb(m), cc(m);
    auto decode = [&](int id, std::vector<int>& c) {
        for (int i = 0; i < m; ++i) {
            c[i] = id % q;
            id /= q;
        }
    };
    auto encode = [&](const std::vector<int>& c) {
        int id = 0, w = 1;
        for (int i = 0; i < m; ++i) {
            id += c[i] * w;
            w *= q;
        }
        return id;
    };

    FiniteRing r;
    r.order = N;
    r.add_table.resize((std::size_t)N * N);
    r.mul_table.resize((std::size_t)N * N);
    for (int x = 0; x < N; ++x) {
        decode(x, ca);
        for (int y = 0; y < N; ++y) {
            decode(y, cb);
            for (int i = 0; i < m; ++i) cc[i] = base.add(ca[i], cb[i]);
            r.add_table[(std::size_t)x * N + y] = encode(cc);
            for (int i = 0; i < m; ++i) cc[i] = base.zero;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    int acc = base.zero;
                    for (int l = i; l <= j; ++l)
                        acc = base.add(acc, base.mul(ca[pos[i][l]], cb[pos[l][j]]));
                    cc[pos[i][j]] = acc;
                }
            r.mul_table[(std::size_t)x * N + y] = encode(cc);
        }
    }
    std::vector<int> zc(m, base.zero), oc(m, base.zero);
    for (int i = 0; i < n; ++i) oc[pos[i][i]] = base.one;
    r.zero = encode(zc);
    r.one = encode(oc);
    std::string bn = base.name;
    bn.erase(std::remove(bn.begin(), bn.end(), ' '), bn.end());
    r.name = "uppertri " + std::to_string(n) + " " + bn;
    r.provenance = "upper triangular " + std::to_string(n) + "x" + std::to_string(n) +
                   " matrices over " + base.provenance;
    r.elem_names.resize(N);
    for (int x = 0; x < N; ++x) {
        decode(x, ca);
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            if (i) s += ";";
            for (int j = 0; j < n; ++j) {
                if (j) s += ",";
                s += (j < i) ? base.elem_name(base.zero) : base.elem_name(ca[pos[i][j]]);
            }
        }
        r.elem_names[x] = s + "]";
    }
    validate_or_throw(r);
    return r;
}

FiniteRing build_table(int n, ElemId one, std::vector<ElemId> add, std::vector<ElemId> mul,
                       const std::string& name) {
    require(n >= 2 && n <= kMaxBuildOrder, "table ring order out of range");
    require((int)add.size() == n * n && (int)mul.size() == n * n,
            "table ring needs two n x n matrices");
    require(one >= 0 && one < n, "one=" + std::to_string(one) + " out of range");
    FiniteRing r;
    r.order = n;
    r.add_table = std::move(add);
    r.mul_table = std::move(mul);
    r.one = one;
    // locate the additive identity before full validation
    r.zero = -1;
    for (int z = 0; z < n; ++z) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (r.add_table[z * n + a] != a || r.add_table[a * n + z] != a) ok = false;
        if (ok) {
            r.zero = z;
            break;
        }
    }
    if (r.zero < 0) throw AxiomError("ring axiom violation: add-identity fails (no zero element)");
    r.name = name;
    r.provenance = "explicit tables (" + std::to_string(n) + " elements)";
    validate_or_throw(r);
    return r;
}

FiniteRing build_table_from_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open table file '" + path + "'");
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    int n = 0;
    std::string onetok;
    hs >> n >> onetok;
    require(n >= 2, "table file header must be 'n one=<id>'");
    require(onetok.rfind("one=", 0) == 0, "table file header must be 'n one=<id>'");
    int one = std::stoi(onetok.substr(4));
    std::vector<ElemId> add(n * n), mul(n * n);
    for (auto& v : add) require(bool(in >> v), "table file truncated in add table");
    for (auto& v : mul) require(bool(in >> v), "table file truncated in mul table");
    return build_table(n, one, std::move(add), std::move(mul), "table file=" + path);
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

// compact inner form: zmodN | gfQ
FiniteRing build_inner(const std::string& tok) {
    if (tok.rfind("zmod", 0) == 0 && tok.size() > 4) return build_zmod(std::stoi(tok.substr(4)));
    if (tok.rfind("gf", 0) == 0 && tok.size() > 2) return build_gf(std::stoi(tok.substr(2)));
    throw SpecError("unknown inner ring spec '" + tok + "' (expected zmodN or gfQ)");
}

int parse_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw SpecError("expected integer for " + what + ", got '" + tok + "'");
    }
}

}  // namespace

FiniteRing build_ring(const std::string& spec) {
    auto toks = tokenize(spec);
    require(!toks.empty(), "empty ring spec");
    const std::string& kind = toks[0];

    if (kind == "zmod") {
        require(toks.size() == 2, "usage: zmod <n>");
        return build_zmod(parse_int(toks[1], "zmod modulus"));
    }
    if (kind == "gf") {
        require(toks.size() == 2 || toks.size() == 3, "usage: gf <q> [poly=...]");
        std::string poly;
        if (toks.size() == 3) {
            require(toks[2].rfind("poly=", 0) == 0, "gf option must be poly=..., got '" + toks[2] + "'");
            poly = toks[2].substr(5);
        }
        return build_gf(parse_int(toks[1], "gf order"), poly);
    }
    if (kind == "product") {
        require(toks.size() == 3, "usage: product <ring> <ring>");
        return build_product(build_inner(toks[1]), build_inner(toks[2]));
    }
    if (kind == "smatrix") {
        require(toks.size() == 3, "usage: smatrix <n> <ring>");
        return build_s_matrix(parse_int(toks[1], "smatrix size"), build_inner(toks[2]));
    }
    if (kind == "uppertri") {
        require(toks.size() == 3, "usage: uppertri <n> <ring>");
        return build_upper_triangular(parse_int(toks[1], "uppertri size"), build_inner(toks[2]));
    }
    if (kind == "table") {
        require(toks.size() == 2 && toks[1].rfind("file=", 0) == 0, "usage: table file=<path>");
        return build_table_from_file(toks[1].substr(5));
    }
    // single compact token, e.g. "zmod4" / "gf8"
    if (toks.size() == 1) return build_inner(kind);
    throw SpecError("unknown ring kind '" + kind + "'");
}

}  // namespace sgps
