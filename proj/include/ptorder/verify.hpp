#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptorder/orders.hpp"

namespace ptorder {

struct Failure {
	std::uint64_t index = 0;
	std::string inputs;   // words and parameters in canonical printer form
	std::string expected;
	std::string got;
	bool operator==(const Failure &) const = default;
};

/// Machine-readable result of one suite run. Identical (suite_id, config,
/// selector, seed, samples) produce identical failure lists; elapsed_ms is
/// the only field that varies between runs.
struct SuiteReport {
	std::string suite_id;
	OrderConfig config;
	std::string selector; // empty when the suite takes none
	std::uint64_t seed = 0;
	std::uint64_t samples = 0;
	std::vector<Failure> failures;
	bool passed = false;
	std::int64_t elapsed_ms = 0;

	/// JSON document {suite_id, config: {...}, seed, samples,
	/// failures: [{index, inputs, expected, got}], passed, elapsed_ms}.
	std::string to_json() const;
};

struct ConvexitySelector {
	enum class Group { G2, G3, G4, Cgamma };
	Group group = Group::G2;
	Cell cell{}; // only for Cgamma

	/// "G2" | "G3" | "G4" | "Cgamma:m,n"
	static ConvexitySelector parse(std::string_view text);
	std::string str() const;
};

/// Suite ids accepted by run_suite. "convexity" takes a selector (default
/// G2); "chain_Cgamma" walks the cells (0,0), (-1,0), (1,0).
inline constexpr const char *kSuiteIds[] = {
    "cone_axioms",    "invariance",   "convexity",         "cover_laws",
    "magnus_laws",    "chain_Cgamma", "standard_stability", "witnesses",
    "mutation_coverage",
};

/// Runs `samples` deterministic checks; sample i draws everything from
/// Rng::stream(seed, i). Resource-cap errors are recorded as failures with a
/// "[resource]" tag, never thrown. The convexity suite always prepends the
/// lemma witness pair (y, z) to the random samples when the selector is G3.
SuiteReport run_suite(const std::string &suite_id, const OrderConfig &cfg,
                      std::uint64_t samples, std::uint64_t seed,
                      std::optional<ConvexitySelector> selector = std::nullopt);

/// Reproduces the concrete lemma witnesses on the configured bundle:
/// gamma0 gamma1^-1 in G3; y, z in gamma0 G3; p2(y) = 2 p2(gamma0) -
/// p2(gamma1); y and z take opposite nonzero signs; both have total winding
/// number 1. Requires a nonstandard config.
SuiteReport check_lemma_witnesses(const OrderConfig &cfg);

/// Deliberate defects for self-testing the suites. FlipCellSign, DropQ2 and
/// E1Lex mutate a nonstandard order; SwapLex and XYLex mutate a standard
/// one. E1Lex and XYLex produce genuine bi-orders that merely fail monodromy
/// invariance; SwapLex produces a valid alternative order detectable only by
/// reference comparison.
enum class Mutation { FlipCellSign, SwapLex, DropQ2, E1Lex, XYLex };

std::string to_string(Mutation m);

struct MutantOrder {
	std::string name;
	OrderConfig config; // the config the mutant claims to implement
	std::function<Sign(const Word &, Branch &)> sign_traced;

	Sign sign(const Word &w) const
	{
		Branch b;
		return sign_traced(w, b);
	}
};

MutantOrder mutate_order(const OrderConfig &cfg, Mutation m, Cell flip_cell = {0, 0});

/// Runs every shipped mutant against the detector suites (plus a
/// branch-trace comparison against the unmutated order) and records any
/// mutant that no detector flags as a failure.
SuiteReport run_mutation_coverage(const OrderConfig &cfg, std::uint64_t samples,
                                  std::uint64_t seed);

} // namespace ptorder
