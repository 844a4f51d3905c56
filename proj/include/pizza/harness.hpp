#pragma once

// Pizza families, claim verification over them, and extremal-example search.

#include "pizza/core.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pizza {

/// Lexicographically smallest rotation of the sequence or of its reversal.
std::vector<Size> canonical_form(std::span<const Size> sizes);
bool is_canonical(std::span<const Size> sizes);

/**
 * Calls `visit` for every sequence of length n over the alphabet, or for one
 * representative per rotation+reflection class when canonical is set.
 * Returning false from `visit` stops the enumeration.
 */
void for_each_pizza(std::size_t n, std::span<const Size> alphabet, bool canonical,
                    const std::function<bool(const Pizza&)>& visit);

std::vector<Pizza> enumerate(std::size_t n, std::span<const Size> alphabet, bool canonical);

/// Independent uniform sizes in 0..max_size, fixed by the seed.
Pizza random_pizza(std::size_t n, Size max_size, std::uint64_t seed);

struct PizzaFamily {
    enum class Kind { Exhaustive, Random, List };

    Kind kind = Kind::Exhaustive;
    // exhaustive
    std::vector<std::size_t> piece_counts;
    std::vector<Size> alphabet{0, 1, 2};
    bool canonical = true;
    // random
    std::size_t random_n = 0;
    Size max_size = 0;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    // list
    std::vector<Pizza> pizzas;

    static PizzaFamily exhaustive(std::vector<std::size_t> ns, std::vector<Size> alphabet, bool canonical = true);
    static PizzaFamily random(std::size_t n, Size max_size, std::uint64_t seed, std::size_t count);
    static PizzaFamily list(std::vector<Pizza> pizzas);

    std::string describe() const;
    /// Materializes the members in a deterministic order.
    std::vector<Pizza> members() const;
};

/// Result of one claim on one pizza.
struct ClaimOutcome {
    bool applicable = true;
    bool holds = true;
    bool tight = false; // the bound is met with equality
    Size value = 0;     // the quantity the claim bounds
    std::string detail; // what failed
};

struct Claim {
    std::string id;
    std::string description;
    std::function<ClaimOutcome(const Pizza&)> check;
};

const std::vector<Claim>& claim_registry();
/// Throws Error(NotFound) for unknown ids.
const Claim& find_claim(const std::string& id);

struct Violation {
    Pizza pizza;
    std::string detail;
};

struct Witness {
    Pizza pizza;
    Size value = 0;
};

struct VerificationReport {
    std::string claim;
    std::string family;
    std::uint64_t checked = 0;      // members the claim applied to
    std::uint64_t not_applicable = 0;
    std::vector<Violation> violations;
    std::vector<Witness> witnesses; // tight instances, capped
    std::uint64_t tight_count = 0;
    std::chrono::milliseconds wall_time{0};

    bool ok() const noexcept { return violations.empty(); }
    /// Associative merge of partial reports over disjoint members.
    void merge(const VerificationReport& other, std::size_t max_witnesses = 16, std::size_t max_violations = 64);
};

struct VerifyOptions {
    unsigned threads = 0; // 0: PIZZA_THREADS or hardware concurrency
    std::size_t max_witnesses = 16;
    std::size_t max_violations = 64;
};

/// Worker count from PIZZA_THREADS, else the hardware concurrency.
unsigned default_threads();

VerificationReport verify_family(const PizzaFamily& family, const std::string& claim_id,
                                 const VerifyOptions& options = {});

inline constexpr std::uint64_t search_space_limit = std::uint64_t{1} << 24;

struct SearchOptions {
    std::optional<Size> total;               // only pizzas of this total
    unsigned threads = 0;
    bool force = false;                      // ignore search_space_limit
    std::optional<std::string> checkpoint;   // NDJSON of finished prefixes
    std::size_t max_matches = 0;             // 0: unlimited
};

struct SearchResult {
    std::vector<Pizza> matches; // canonical, sorted
    std::uint64_t visited = 0;
    std::uint64_t units = 0;
    std::uint64_t resumed_units = 0;
};

using PizzaPredicate = std::function<bool(const Pizza&)>;

/// Pizzas with total > 0 and den * optimal <= num * total.
PizzaPredicate optimal_ratio_at_most(Size num, Size den);

/**
 * All canonical n-piece pizzas over the alphabet satisfying the predicate.
 * Throws Error(Infeasible) when |alphabet|^n exceeds search_space_limit
 * unless forced.
 */
SearchResult find_extremal(std::size_t n, std::span<const Size> alphabet, const PizzaPredicate& predicate,
                           const SearchOptions& options = {});

struct MinimalityResult {
    std::size_t first_n = 0;        // smallest n with a match, 0 if none
    std::vector<std::size_t> scanned;
    std::vector<Pizza> matches;     // at first_n
};

/// Scans n = 1..max_n for the first n admitting a predicate match.
MinimalityResult minimality_scan(std::size_t max_n, std::span<const Size> alphabet, const PizzaPredicate& predicate,
                                 const SearchOptions& options = {});

} // namespace pizza
