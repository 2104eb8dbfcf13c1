#include "sgps/mccoy.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgps {

std::string to_string(SeriesSide s) { return s == SeriesSide::left ? "left" : "right"; }

std::string to_string(McCoyOutcome o) {
    switch (o) {
        case McCoyOutcome::verified_up_to_bound: return "verified_up_to_bound";
        case McCoyOutcome::counterexample: return "counterexample";
        default: return "vacuous";
    }
}

Window Window::degree_range(const OrderedMonoid& m, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw SpecError("window bounds out of order");
    if (lo < 0 && !m.is_group())
        throw SpecError("negative exponents require a group monoid (Z)");
    Window w;
    if (m.rank() == 1) {
        for (std::int64_t e = lo; e <= hi; ++e) w.exps.push_back({e});
        w.desc = "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    } else {
        MonElem cur(m.rank(), lo);
        for (;;) {
            w.exps.push_back(cur);
            int i = m.rank() - 1;
            while (i >= 0 && cur[i] == hi) {
                cur[i] = lo;
                --i;
            }
            if (i < 0) break;
            ++cur[i];
        }
        std::sort(w.exps.begin(), w.exps.end(),
                  [&](const MonElem& a, const MonElem& b) { return m.compare(a, b) < 0; });
        w.desc = "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}^" +
                 std::to_string(m.rank());
    }
    return w;
}

namespace {

constexpr std::uint64_t kHuge = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kHuge / 4 / base) return kHuge / 4;
        r *= base;
    }
    return r;
}

// splitmix64; kept local so random mode is reproducible across platforms
std::uint64_t next_u64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct DenseCtx {
    const MonoidAction* action = nullptr;
    const FiniteRing* r = nullptr;
    const Window* window = nullptr;
    int n = 0, k = 0, nslots = 0;
    std::vector<int> slot;                   // k*k -> product slot
    std::vector<std::vector<ElemId>> omega;  // omega table per window exponent
    std::uint64_t series_count = 0;          // n^k
    std::uint64_t zero_rank = 0;
};

DenseCtx make_ctx(const MonoidAction& action, const Window& window) {
    DenseCtx ctx;
    ctx.action = &action;
    ctx.r = &action.ring();
    ctx.window = &window;
    ctx.n = ctx.r->order;
    ctx.k = (int)window.exps.size();
    if (ctx.k == 0) throw SpecError("empty window");
    const OrderedMonoid& m = action.monoid();
    for (int i = 0; i + 1 < ctx.k; ++i)
        if (m.compare(window.exps[i], window.exps[i + 1]) >= 0)
            throw SpecError("window exponents must be strictly increasing");

    std::vector<MonElem> sums;
    for (const auto& u : window.exps)
        for (const auto& v : window.exps) sums.push_back(m.op(u, v));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    ctx.nslots = (int)sums.size();
    ctx.slot.resize(ctx.k * ctx.k);
    for (int a = 0; a < ctx.k; ++a)
        for (int b = 0; b < ctx.k; ++b) {
            MonElem s = m.op(window.exps[a], window.exps[b]);
            ctx.slot[a * ctx.k + b] =
                (int)(std::lower_bound(sums.begin(), sums.end(), s) - sums.begin());
        }
    action.prefetch(window.exps);
    for (const auto& e : window.exps) ctx.omega.push_back(action.table(e));

    ctx.series_count = checked_pow(ctx.n, ctx.k);
    std::uint64_t zr = 0;
    for (int i = 0; i < ctx.k; ++i) zr = zr * ctx.n + (std::uint64_t)ctx.r->zero;
    ctx.zero_rank = zr;
    return ctx;
}

void decode_rank(const DenseCtx& ctx, std::uint64_t rank, std::vector<ElemId>& coefs) {
    // big-endian: the coefficient of the smallest exponent is most significant
    for (int w = ctx.k - 1; w >= 0; --w) {
        coefs[w] = (ElemId)(rank % ctx.n);
        rank /= ctx.n;
    }
}

void increment_digits(const DenseCtx& ctx, std::vector<ElemId>& coefs) {
    int w = ctx.k - 1;
    while (w >= 0 && coefs[w] == ctx.n - 1) coefs[w--] = 0;
    if (w >= 0) ++coefs[w];
}

bool product_is_zero(const DenseCtx& ctx, const std::vector<ElemId>& fc,
                     const std::vector<ElemId>& gc, std::vector<ElemId>& acc) {
    const ElemId zero = ctx.r->zero;
    const ElemId* add = ctx.r->add_table.data();
    const ElemId* mul = ctx.r->mul_table.data();
    const int n = ctx.n, k = ctx.k;
    std::fill(acc.begin(), acc.end(), zero);
    for (int a = 0; a < k; ++a) {
        ElemId fa = fc[a];
        if (fa == zero) continue;
        const ElemId* om = ctx.omega[a].data();
        const int* sl = &ctx.slot[a * k];
        const ElemId* mrow = mul + (std::size_t)fa * n;
        for (int b = 0; b < k; ++b) {
            ElemId gb = gc[b];
            if (gb == zero) continue;
            int s = sl[b];
            acc[s] = add[(std::size_t)acc[s] * n + mrow[om[gb]]];
        }
    }
    for (ElemId v : acc)
        if (v != zero) return false;
    return true;
}

ElemId right_witness_for(const DenseCtx& ctx, const std::vector<ElemId>& fc) {
    const ElemId zero = ctx.r->zero;
    for (ElemId c = 0; c < ctx.n; ++c) {
        if (c == zero) continue;
        bool kills = true;
        for (int w = 0; w < ctx.k && kills; ++w) {
            if (fc[w] == zero) continue;
            if (ctx.r->mul(fc[w], ctx.omega[w][c]) != zero) kills = false;
        }
        if (kills) return c;
    }
    return -1;
}

ElemId left_witness_for(const DenseCtx& ctx, const std::vector<ElemId>& gc) {
    const ElemId zero = ctx.r->zero;
    for (ElemId c = 0; c < ctx.n; ++c) {
        if (c == zero) continue;
        bool kills = true;
        for (int w = 0; w < ctx.k && kills; ++w) {
            if (gc[w] == zero) continue;
            if (ctx.r->mul(c, gc[w]) != zero) kills = false;
        }
        if (kills) return c;
    }
    return -1;
}

std::vector<ElemId> witness_table(const DenseCtx& ctx, SeriesSide side) {
    std::vector<ElemId> out(ctx.series_count, -1);
    std::vector<ElemId> coefs(ctx.k, 0);
    for (std::uint64_t rank = 0; rank < ctx.series_count; ++rank) {
        if (rank != 0) increment_digits(ctx, coefs);
        if (rank == ctx.zero_rank) continue;
        out[rank] = side == SeriesSide::right ? right_witness_for(ctx, coefs)
                                              : left_witness_for(ctx, coefs);
    }
    return out;
}

std::string window_text(const DenseCtx& ctx, const std::vector<ElemId>& coefs) {
    const FiniteRing& r = *ctx.r;
    const OrderedMonoid& m = ctx.action->monoid();
    std::string out;
    for (int w = 0; w < ctx.k; ++w) {
        if (coefs[w] == r.zero) continue;
        if (!out.empty()) out += " + ";
        std::string cn = r.elem_name(coefs[w]);
        if (cn.find('+') != std::string::npos) cn = "(" + cn + ")";
        out += cn + "*x^" + m.to_string(ctx.window->exps[w]);
    }
    return out.empty() ? "0" : out;
}

WindowedSeries windowed(const DenseCtx& ctx, const std::vector<ElemId>& coefs) {
    return {coefs, window_text(ctx, coefs)};
}

McCoyCounterexample build_counterexample(const DenseCtx& ctx, SeriesSide side,
                                         const std::vector<ElemId>& fc,
                                         const std::vector<ElemId>& gc) {
    McCoyCounterexample ce;
    ce.f = windowed(ctx, fc);
    ce.g = windowed(ctx, gc);
    SkewSeries fs = series_from_window(*ctx.action, *ctx.window, fc);
    SkewSeries gs = series_from_window(*ctx.action, *ctx.window, gc);
    ce.product_rechecked = series_mul(fs, gs).is_zero();
    if (!ce.product_rechecked)
        throw InternalError("counterexample product does not recheck to zero");
    const ElemId zero = ctx.r->zero;
    for (ElemId c = 0; c < ctx.n; ++c) {
        if (c == zero) continue;
        bool refuted = false;
        for (int w = 0; w < ctx.k && !refuted; ++w) {
            const std::vector<ElemId>& sc = side == SeriesSide::right ? fc : gc;
            if (sc[w] == zero) continue;
            ElemId v = side == SeriesSide::right ? ctx.r->mul(sc[w], ctx.omega[w][c])
                                                 : ctx.r->mul(c, sc[w]);
            if (v != zero) {
                ce.failures.push_back({c, w, v});
                refuted = true;
            }
        }
        if (!refuted) throw InternalError("counterexample has a surviving witness candidate");
    }
    return ce;
}

std::string describe(const DenseCtx& ctx, SeriesSide side, const SearchParams& p) {
    std::string s = "R=" + ctx.r->name + "; S=" + ctx.action->monoid().name() +
                    "; action=" + ctx.action->name() + "; D=" + ctx.window->desc +
                    "; side=" + to_string(side) + "; mode=";
    if (p.mode == SearchMode::exhaustive)
        s += "exhaustive";
    else
        s += "random(seed=" + std::to_string(p.seed) + ",trials=" + std::to_string(p.trials) + ")";
    return s;
}

struct PairBest {
    std::uint64_t f = kHuge, g = kHuge;
    bool operator<(const PairBest& o) const { return f != o.f ? f < o.f : g < o.g; }
    bool found() const { return f != kHuge; }
};

McCoyVerdict finish(const DenseCtx& ctx, SeriesSide side, const SearchParams& params,
                    std::uint64_t pairs, std::uint64_t zeros, const PairBest& first_zero,
                    const PairBest& first_ce, const std::vector<ElemId>& witness) {
    McCoyVerdict v;
    v.side = side;
    v.search_space = describe(ctx, side, params);
    v.pairs_examined = pairs;
    v.zero_divisor_pairs = zeros;
    std::vector<ElemId> fc(ctx.k), gc(ctx.k);
    if (first_ce.found()) {
        v.outcome = McCoyOutcome::counterexample;
        decode_rank(ctx, first_ce.f, fc);
        decode_rank(ctx, first_ce.g, gc);
        v.counterexample = build_counterexample(ctx, side, fc, gc);
    } else if (zeros > 0) {
        v.outcome = McCoyOutcome::verified_up_to_bound;
        decode_rank(ctx, first_zero.f, fc);
        decode_rank(ctx, first_zero.g, gc);
        ElemId w = side == SeriesSide::right ? witness[first_zero.f] : witness[first_zero.g];
        v.example = McCoyWitnessedPair{windowed(ctx, fc), windowed(ctx, gc), w};
    } else {
        v.outcome = McCoyOutcome::vacuous;
    }
    return v;
}

McCoyVerdict run_exhaustive(const DenseCtx& ctx, SeriesSide side, const SearchParams& params) {
    const std::uint64_t m = ctx.series_count - 1;  // nonzero series
    if (m > 0 && m > params.budget / m)
        throw CapacityError("exhaustive search needs " + std::to_string(m) + "^2 pairs, over the budget of " +
                            std::to_string(params.budget) + "; shrink the window or use random mode");
    const std::uint64_t pairs = m * m;
    std::vector<ElemId> witness = witness_table(ctx, side);

    std::uint64_t zeros = 0;
    PairBest first_zero, first_ce;

    int threads = params.threads;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif

#pragma omp parallel num_threads(threads)
    {
        std::vector<ElemId> fc(ctx.k), gc(ctx.k), acc(ctx.nslots);
        std::uint64_t local_zeros = 0;
        PairBest local_zero, local_ce;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
        for (std::int64_t fr = 0; fr < (std::int64_t)ctx.series_count; ++fr) {
            if ((std::uint64_t)fr == ctx.zero_rank) continue;
            decode_rank(ctx, (std::uint64_t)fr, fc);
            bool f_witnessed = side == SeriesSide::left || witness[fr] >= 0;
            std::fill(gc.begin(), gc.end(), 0);
            for (std::uint64_t gr = 0; gr < ctx.series_count; ++gr) {
                if (gr != 0) increment_digits(ctx, gc);
                if (gr == ctx.zero_rank) continue;
                if (!product_is_zero(ctx, fc, gc, acc)) continue;
                ++local_zeros;
                PairBest here{(std::uint64_t)fr, gr};
                if (here < local_zero) local_zero = here;
                bool witnessed =
                    side == SeriesSide::right ? f_witnessed : witness[gr] >= 0;
                if (!witnessed && here < local_ce) local_ce = here;
            }
        }
#pragma omp critical
        {
            zeros += local_zeros;
            if (local_zero < first_zero) first_zero = local_zero;
            if (local_ce < first_ce) first_ce = local_ce;
        }
    }
    return finish(ctx, side, params, pairs, zeros, first_zero, first_ce, witness);
}

McCoyVerdict run_random(const DenseCtx& ctx, SeriesSide side, const SearchParams& params) {
    if (params.trials > params.budget)
        throw CapacityError("random trials exceed the pair budget");
    const std::uint64_t m = ctx.series_count - 1;
    if (m == 0) throw SpecError("window admits no nonzero series");
    std::vector<ElemId> witness = witness_table(ctx, side);
    std::uint64_t state = params.seed;
    std::vector<ElemId> fc(ctx.k), gc(ctx.k), acc(ctx.nslots);
    std::uint64_t zeros = 0;
    PairBest first_zero, first_ce;
    for (std::uint64_t t = 0; t < params.trials; ++t) {
        std::uint64_t fr = next_u64(state) % m;
        std::uint64_t gr = next_u64(state) % m;
        if (fr >= ctx.zero_rank) ++fr;
        if (gr >= ctx.zero_rank) ++gr;
        decode_rank(ctx, fr, fc);
        decode_rank(ctx, gr, gc);
        if (!product_is_zero(ctx, fc, gc, acc)) continue;
        ++zeros;
        if (!first_zero.found()) first_zero = {fr, gr};
        bool witnessed = side == SeriesSide::right ? witness[fr] >= 0 : witness[gr] >= 0;
        if (!witnessed && !first_ce.found()) first_ce = {fr, gr};
    }
    return finish(ctx, side, params, params.trials, zeros, first_zero, first_ce, witness);
}

}  // namespace

McCoyVerdict mccoy_search(const MonoidAction& action, const Window& window, SeriesSide side,
                          const SearchParams& params) {
    DenseCtx ctx = make_ctx(action, window);
    return params.mode == SearchMode::exhaustive ? run_exhaustive(ctx, side, params)
                                                 : run_random(ctx, side, params);
}

McCoyVerdict mccoy_search_reference(const MonoidAction& action, const Window& window,
                                    SeriesSide side, const SearchParams& params) {
    DenseCtx ctx = make_ctx(action, window);
    const FiniteRing& r = action.ring();
    const std::uint64_t m = ctx.series_count - 1;
    if (params.mode == SearchMode::exhaustive && m > 0 && m > params.budget / m)
        throw CapacityError("exhaustive search over budget; shrink the window or use random mode");
    if (params.mode == SearchMode::random && params.trials > params.budget)
        throw CapacityError("random trials exceed the pair budget");

    auto series_at = [&](std::uint64_t rank) {
        std::vector<ElemId> c(ctx.k);
        decode_rank(ctx, rank, c);
        return series_from_window(action, window, c);
    };
    auto witness_of = [&](std::uint64_t rank) -> ElemId {
        SkewSeries s = series_at(rank);
        for (ElemId c = 0; c < r.order; ++c) {
            if (c == r.zero) continue;
            bool kills = side == SeriesSide::right ? scale_right_const(s, c).is_zero()
                                                   : scale_left_const(c, s).is_zero();
            if (kills) return c;
        }
        return -1;
    };

    std::uint64_t zeros = 0, pairs = 0;
    PairBest first_zero, first_ce;
    std::vector<ElemId> witness(ctx.series_count, -1);
    std::vector<char> witness_known(ctx.series_count, 0);
    auto lookup_witness = [&](std::uint64_t rank) {
        if (!witness_known[rank]) {
            witness[rank] = witness_of(rank);
            witness_known[rank] = 1;
        }
        return witness[rank];
    };

    auto consider = [&](std::uint64_t fr, std::uint64_t gr, const SkewSeries& fs,
                        const SkewSeries& gs) {
        if (!series_mul(fs, gs).is_zero()) return;
        ++zeros;
        PairBest here{fr, gr};
        if (here < first_zero) first_zero = here;
        ElemId w = side == SeriesSide::right ? lookup_witness(fr) : lookup_witness(gr);
        if (w < 0 && here < first_ce) first_ce = here;
    };

    if (params.mode == SearchMode::exhaustive) {
        pairs = m * m;
        for (std::uint64_t fr = 0; fr < ctx.series_count; ++fr) {
            if (fr == ctx.zero_rank) continue;
            SkewSeries fs = series_at(fr);
            for (std::uint64_t gr = 0; gr < ctx.series_count; ++gr) {
                if (gr == ctx.zero_rank) continue;
                consider(fr, gr, fs, series_at(gr));
            }
        }
    } else {
        pairs = params.trials;
        std::uint64_t state = params.seed;
        for (std::uint64_t t = 0; t < params.trials; ++t) {
            std::uint64_t fr = next_u64(state) % m;
            std::uint64_t gr = next_u64(state) % m;
            if (fr >= ctx.zero_rank) ++fr;
            if (gr >= ctx.zero_rank) ++gr;
            if (!series_mul(series_at(fr), series_at(gr)).is_zero()) continue;
            ++zeros;
            if (!first_zero.found()) first_zero = {fr, gr};
            ElemId w = side == SeriesSide::right ? lookup_witness(fr) : lookup_witness(gr);
            if (w < 0 && !first_ce.found()) first_ce = {fr, gr};
        }
    }

    // lazily computed witnesses may be missing for the reported pair; fill them
    if (first_zero.found()) {
        lookup_witness(side == SeriesSide::right ? first_zero.f : first_zero.g);
    }
    return finish(ctx, side, params, pairs, zeros, first_zero, first_ce, witness);
}

bool replay_verdict(const MonoidAction& action, const Window& window, const McCoyVerdict& v) {
    const FiniteRing& r = action.ring();
    if (v.outcome == McCoyOutcome::vacuous) return true;
    if (v.outcome == McCoyOutcome::verified_up_to_bound) {
        if (!v.example) return false;
        SkewSeries f = series_from_window(action, window, v.example->f.coefs);
        SkewSeries g = series_from_window(action, window, v.example->g.coefs);
        if (f.is_zero() || g.is_zero()) return false;
        if (!series_mul(f, g).is_zero()) return false;
        ElemId c = v.example->witness_c;
        if (c == r.zero) return false;
        return v.side == SeriesSide::right ? scale_right_const(f, c).is_zero()
                                           : scale_left_const(c, g).is_zero();
    }
    if (!v.counterexample) return false;
    SkewSeries f = series_from_window(action, window, v.counterexample->f.coefs);
    SkewSeries g = series_from_window(action, window, v.counterexample->g.coefs);
    if (f.is_zero() || g.is_zero()) return false;
    if (!series_mul(f, g).is_zero()) return false;
    for (ElemId c = 0; c < r.order; ++c) {
        if (c == r.zero) continue;
        bool kills = v.side == SeriesSide::right ? scale_right_const(f, c).is_zero()
                                                 : scale_left_const(c, g).is_zero();
        if (kills) return false;  // a witness exists, so this is no counterexample
    }
    return true;
}

std::vector<ElemId> right_witness_table(const MonoidAction& action, const Window& window) {
    return witness_table(make_ctx(action, window), SeriesSide::right);
}

std::vector<ElemId> left_witness_table(const MonoidAction& action, const Window& window) {
    return witness_table(make_ctx(action, window), SeriesSide::left);
}

std::vector<char> window_zero_divisor_flags(const MonoidAction& action, const Window& window,
                                            std::uint64_t budget, int threads) {
    DenseCtx ctx = make_ctx(action, window);
    const std::uint64_t m = ctx.series_count - 1;
    if (m > 0 && m > budget / m)
        throw CapacityError("window zero-divisor scan over budget");
    std::vector<char> flags(ctx.series_count, 0);

#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
#pragma omp parallel num_threads(threads)
    {
        std::vector<ElemId> fc(ctx.k), gc(ctx.k), acc(ctx.nslots);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (std::int64_t fr = 0; fr < (std::int64_t)ctx.series_count; ++fr) {
            if ((std::uint64_t)fr == ctx.zero_rank) continue;
            decode_rank(ctx, (std::uint64_t)fr, fc);
            std::fill(gc.begin(), gc.end(), 0);
            for (std::uint64_t gr = 0; gr < ctx.series_count; ++gr) {
                if (gr != 0) increment_digits(ctx, gc);
                if (gr == ctx.zero_rank) continue;
                if (product_is_zero(ctx, fc, gc, acc)) {
                    flags[fr] = 1;
                    break;
                }
            }
        }
    }
    return flags;
}

void for_each_zero_divisor_pair(const MonoidAction& action, const Window& window,
                                std::uint64_t budget,
                                const std::function<void(const std::vector<ElemId>&,
                                                         const std::vector<ElemId>&)>& fn) {
    DenseCtx ctx = make_ctx(action, window);
    const std::uint64_t m = ctx.series_count - 1;
    if (m > 0 && m > budget / m)
        throw CapacityError("zero-divisor pair scan over budget");
    std::vector<ElemId> fc(ctx.k, 0), gc(ctx.k), acc(ctx.nslots);
    for (std::uint64_t fr = 0; fr < ctx.series_count; ++fr) {
        if (fr != 0) increment_digits(ctx, fc);
        if (fr == ctx.zero_rank) continue;
        std::fill(gc.begin(), gc.end(), 0);
        for (std::uint64_t gr = 0; gr < ctx.series_count; ++gr) {
            if (gr != 0) increment_digits(ctx, gc);
            if (gr == ctx.zero_rank) continue;
            if (product_is_zero(ctx, fc, gc, acc)) fn(fc, gc);
        }
    }
}

SkewSeries series_from_window(const MonoidAction& action, const Window& window,
                              const std::vector<ElemId>& coefs) {
    SkewSeries s(action);
    for (std::size_t i = 0; i < window.exps.size(); ++i)
        if (coefs[i] != action.ring().zero) s.add_term(window.exps[i], coefs[i]);
    return s;
}

Window largest_exhaustive_window(const OrderedMonoid& m, int ring_order, int max_degree,
                                 std::uint64_t budget) {
    for (int d = max_degree; d >= 1; --d) {
        int size;
        if (m.rank() > 1) {
            std::uint64_t s = checked_pow((std::uint64_t)d + 1, m.rank());
            if (s > 1u << 20) continue;
            size = (int)s;
        } else {
            size = m.is_group() ? 2 * d + 1 : d + 1;
        }
        std::uint64_t count = checked_pow((std::uint64_t)ring_order, size);
        if (count == 0) continue;
        std::uint64_t nonzero = count - 1;
        if (nonzero > 0 && nonzero <= budget / nonzero)
            return Window::degree_range(m, m.is_group() ? -d : 0, d);
    }
    throw CapacityError("no exhaustive window of degree >= 1 fits the budget for ring order " +
                        std::to_string(ring_order));
}

}  // namespace sgps
