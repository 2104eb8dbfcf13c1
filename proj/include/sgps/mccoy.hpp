#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgps/ring_predicates.hpp"
#include "sgps/skew_series.hpp"

namespace sgps {

/// Right: fg = 0 must force a nonzero c with f * c_c = 0.
/// Left:  fg = 0 must force a nonzero c with c_c * g = 0.
enum class SeriesSide { left, right };
std::string to_string(SeriesSide s);

/// Finite exponent window; searched series have support inside it.
struct Window {
    std::vector<MonElem> exps;  // strictly increasing
    std::string desc;

    /// Exponents lo..hi for rank-1 monoids; all vectors with coordinates in
    /// [lo, hi] (lex order) for N^k. lo may be negative only for groups.
    static Window degree_range(const OrderedMonoid& m, std::int64_t lo, std::int64_t hi);
};

/// Largest window of the standard shape ({0..d} for N and N^k, {-d..d} for Z)
/// whose exhaustive pair count fits the budget. Throws CapacityError when not
/// even d = 1 fits.
Window largest_exhaustive_window(const OrderedMonoid& m, int ring_order, int max_degree,
                                 std::uint64_t budget);

enum class SearchMode { exhaustive, random };

struct SearchParams {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t budget = 10'000'000;  // exhaustive pair cap
    std::uint64_t seed = 0;             // random mode (reproducibility requires it)
    std::uint64_t trials = 100'000;     // random mode sample count
    int threads = 0;                    // 0 = OpenMP default
};

enum class McCoyOutcome { verified_up_to_bound, counterexample, vacuous };
std::string to_string(McCoyOutcome o);

/// Series restricted to a window: coefficient ids aligned with Window::exps.
struct WindowedSeries {
    std::vector<ElemId> coefs;
    std::string text;
};

/// Per-candidate refutation: the exponent where the witness equation fails.
struct WitnessFailure {
    ElemId c;
    int exp_index;
    ElemId value;
};

struct McCoyCounterexample {
    WindowedSeries f, g;
    bool product_rechecked = false;        // fg = 0 re-verified through SkewSeries
    std::vector<WitnessFailure> failures;  // one per nonzero c
};

/// First zero-divisor pair found, with its smallest witness (for verified
/// outcomes; doubles as the replay anchor).
struct McCoyWitnessedPair {
    WindowedSeries f, g;
    ElemId witness_c;
};

struct McCoyVerdict {
    SeriesSide side = SeriesSide::right;
    std::string search_space;
    McCoyOutcome outcome = McCoyOutcome::vacuous;
    std::uint64_t pairs_examined = 0;
    std::uint64_t zero_divisor_pairs = 0;
    std::optional<McCoyCounterexample> counterexample;
    std::optional<McCoyWitnessedPair> example;
};

/// Dense enumeration kernel. Pairs of nonzero series with support in the
/// window are scanned in lexicographic coefficient order; the work is split
/// over OpenMP threads in disjoint chunks and merged by taking the smallest
/// counterexample, so the result is identical to a single-threaded run.
McCoyVerdict mccoy_search(const MonoidAction& action, const Window& window, SeriesSide side,
                          const SearchParams& params = {});

/// Serial reference: the same enumeration driven through SkewSeries
/// arithmetic (series_mul / scale_*_const) instead of the dense kernel.
/// Slow; kept as the independent cross-check and for benchmarking.
McCoyVerdict mccoy_search_reference(const MonoidAction& action, const Window& window,
                                    SeriesSide side, const SearchParams& params = {});

/// Re-verifies a verdict's payload through SkewSeries arithmetic: the stored
/// pair must multiply to zero, a stored witness must satisfy its equation and
/// a stored counterexample must refute every nonzero c.
bool replay_verdict(const MonoidAction& action, const Window& window, const McCoyVerdict& v);

/// Smallest nonzero c with f * c_c = 0 (resp. c_c * g = 0) for each series
/// rank in the window enumeration; -1 when none exists. Entry at the zero
/// series' rank is -1.
std::vector<ElemId> right_witness_table(const MonoidAction& action, const Window& window);
std::vector<ElemId> left_witness_table(const MonoidAction& action, const Window& window);

/// flag[rank] = 1 iff that nonzero series has a nonzero partner g in the
/// window with fg = 0. Parallel over f; deterministic.
std::vector<char> window_zero_divisor_flags(const MonoidAction& action, const Window& window,
                                            std::uint64_t budget, int threads = 0);

/// Serial scan invoking fn(f_coefs, g_coefs) for every zero-divisor pair.
void for_each_zero_divisor_pair(const MonoidAction& action, const Window& window,
                                std::uint64_t budget,
                                const std::function<void(const std::vector<ElemId>&,
                                                         const std::vector<ElemId>&)>& fn);

/// Builds the SkewSeries corresponding to windowed coefficients.
SkewSeries series_from_window(const MonoidAction& action, const Window& window,
                              const std::vector<ElemId>& coefs);

}  // namespace sgps
