#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgps/mccoy.hpp"

namespace sgps {

/// Everything the main-theorem hypotheses ask of one (R, omega) pair.
struct HypothesisProfile {
    PropertyProfile props;
    CompatibilityResult compat;
    std::string action_name;
    bool theorem_hypotheses_hold = false;  // abelian, semi-regular, J nilpotent, S-compatible
};

HypothesisProfile hypothesis_profile(const FiniteRing& r, const MonoidAction& action,
                                     const Caps& caps = {});

/// One checked instance inside a lemma report. A failure is always replayable
/// from `witness`.
struct LemmaInstance {
    std::string desc;
    bool conclusion_holds = true;
    std::string witness;
};

struct LemmaReport {
    std::string lemma;
    std::string subject;
    bool skipped = false;        // ring-level hypotheses failed; nothing asserted
    std::string skip_reason;
    std::uint64_t instances_checked = 0;   // instances whose hypotheses held
    std::uint64_t conclusions_held = 0;
    std::uint64_t conclusion_failures = 0;
    std::uint64_t vacuous = 0;             // instances filtered by per-instance hypotheses
    std::vector<LemmaInstance> failures;
    std::string note;

    bool ok() const { return conclusion_failures == 0; }
    /// True when nothing was actually confirmed (vacuous stratum or skip).
    bool is_vacuous() const { return !skipped && instances_checked == 0; }
};

/// If the two-sided ideal generated by a tuple is all of R, the left ideal it
/// generates must be too. Tuples of length 1..max_n+1 are scanned.
LemmaReport verify_lemma_generation(const FiniteRing& r, const Caps& caps = {}, int max_n = 2);

/// Abelian semi-regular rings are quasi-duo.
LemmaReport verify_quasi_duo(const FiniteRing& r, const Caps& caps = {});

/// Every maximal one-sided ideal of an abelian semi-regular ring is two-sided
/// and prime.
LemmaReport verify_maximal_prime(const FiniteRing& r, const Caps& caps = {});

/// Nonzero annihilators of maximal one-sided ideals (both annihilator sides).
LemmaReport verify_annihilator_nonzero(const FiniteRing& r, const Caps& caps = {});

/// ab in M iff a sigma(b) in M, for maximal one-sided M and generator images
/// sigma, under compatibility + the theorem hypotheses.
LemmaReport verify_compatible_membership(const MonoidAction& action, const Caps& caps = {});

/// For zero-divisor pairs fg = 0 (g != 0) whose left factor's coefficients
/// escape every maximal right ideal, the right factor's coefficients must lie
/// in J(R). Usually a vacuous stratum at desk scale; the report says so.
LemmaReport verify_coefficients_in_radical(const MonoidAction& action, const Window& window,
                                           const Caps& caps = {});

struct TheoremRun {
    HypothesisProfile profile;
    McCoyVerdict right, left;
    bool passed = false;  // no counterexample on either side
};

/// Requires theorem_hypotheses_hold (throws SpecError otherwise); runs the
/// McCoy search on both sides.
TheoremRun verify_main_theorem(const MonoidAction& action, const Window& window,
                               const SearchParams& params = {}, const Caps& caps = {});

/// Classical polynomial shadow of the series zero-divisor criterion, over a
/// commutative ring with the trivial action: restricted to the window, f has
/// a nonzero partner with fg = 0 iff a single nonzero r kills every
/// coefficient of f.
LemmaReport fields_witness_check(const FiniteRing& r, int degree, const Caps& caps = {},
                                 int threads = 0);

/// The trio (abelian, semi-regular, J nilpotent) transfers between R and the
/// constant-diagonal triangular ring, and |R/J| matches.
LemmaReport verify_sn_transfer(const FiniteRing& r, int n, const Caps& caps = {});

/// McCoy exploration over rings that are 2-primal, semi-regular, J-nilpotent
/// and S-compatible but NOT abelian. Records outcomes without asserting them.
struct ExplorationEntry {
    std::string ring;
    std::string action;
    McCoyVerdict right, left;
};
struct ExplorationReport {
    std::vector<ExplorationEntry> entries;
    bool stratum_empty = true;
    std::string note;  // always carries the no-claim label
};
ExplorationReport two_primal_exploration(const std::vector<const FiniteRing*>& rings,
                                         const OrderedMonoid& monoid, int degree,
                                         const SearchParams& params = {}, const Caps& caps = {});

}  // namespace sgps
