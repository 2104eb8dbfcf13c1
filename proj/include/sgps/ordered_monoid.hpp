#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgps/errors.hpp"

namespace sgps {

/// Exponent of a series term: a vector of integers of the monoid's rank
/// (rank 1 for N and Z). Comparison is lexicographic, which coincides with
/// the usual order at rank 1.
using MonElem = std::vector<std::int64_t>;

enum class MonoidKind { naturals, integers, naturals_lex };

/// Strictly totally ordered commutative monoid used as exponent structure:
/// (N,+), (Z,+), or (N^k, +) under the lexicographic order.
class OrderedMonoid {
public:
    static OrderedMonoid naturals() { return OrderedMonoid(MonoidKind::naturals, 1); }
    static OrderedMonoid integers() { return OrderedMonoid(MonoidKind::integers, 1); }
    static OrderedMonoid naturals_lex(int k);
    /// Accepts "N", "Z", "N^k lex" (also the compact "N^k-lex" / "N^klex").
    static OrderedMonoid parse(const std::string& spec);

    MonoidKind kind() const { return kind_; }
    int rank() const { return rank_; }
    bool is_group() const { return kind_ == MonoidKind::integers; }
    std::string name() const;

    MonElem identity() const { return MonElem(rank_, 0); }
    MonElem op(const MonElem& a, const MonElem& b) const;
    /// -1 / 0 / +1 for a < b / a == b / a > b.
    int compare(const MonElem& a, const MonElem& b) const;
    bool contains(const MonElem& a) const;
    /// The v with u*v = s, when it lies in the monoid.
    std::optional<MonElem> solve_right(const MonElem& u, const MonElem& s) const;

    std::string to_string(const MonElem& a) const;

private:
    OrderedMonoid(MonoidKind k, int rank) : kind_(k), rank_(rank) {}
    MonoidKind kind_;
    int rank_;
};

/// Exhaustive monotonicity check on all triples with coordinates bounded by
/// `sample_bound` (symmetric around 0 for Z).
struct StrictOrderReport {
    bool pass = true;
    std::uint64_t triples_checked = 0;
    MonElem s1, s2, t;  // witness when pass == false
};
StrictOrderReport validate_strict_order(const OrderedMonoid& m, int sample_bound);

/// Finite supports are trivially artinian and narrow; this records the fact
/// together with the extremal elements so reports can state it explicitly.
struct SupportReport {
    bool artinian = true;
    bool narrow = true;
    std::size_t size = 0;
    std::optional<MonElem> min, max;
};
SupportReport validate_support(const OrderedMonoid& m, const std::vector<MonElem>& support);

}  // namespace sgps
