#pragma once

#include "autoplex/automata.hpp"
#include "autoplex/bigint.hpp"
#include "autoplex/words.hpp"

#include <cstddef>
#include <optional>

namespace autoplex {

struct ComplexityResult {
  std::size_t value = 0;  // A(x)
  Dfa witness;            // value states, uniquely accepts x
};

inline constexpr std::size_t kExactSearchCap = 18;
inline constexpr std::size_t kBruteLengthCap = 10;
inline constexpr std::size_t kBruteStateCap = 7;

/// A(x) by canonical walk search. Throws CapExceeded if |x| > max_length.
ComplexityResult exact_A(const BitString& x, std::size_t max_length = kExactSearchCap);

/// As exact_A, but gives up (nullopt) when A(x) > max_states.
std::optional<ComplexityResult> exact_A_bounded(const BitString& x, std::size_t max_states,
                                                std::size_t max_length = kExactSearchCap);

/// Independent oracle: every initially-connected DFA with up to
/// max_states states (BFS-canonical numbering, all accept subsets).
/// nullopt when A(x) > max_states.
std::optional<ComplexityResult> brute_A(const BitString& x, std::size_t max_states = 4);

/// brute_A for every string of length n at once, indexed by x.window(0, n)
/// (bit 0 most significant). Each DFA is enumerated once; a state reached
/// by exactly one length-n path isolates that path's label.
std::vector<std::optional<std::size_t>> brute_A_table(std::size_t n, std::size_t max_states = 4);

/// Transition tables the oracle enumerates for q states: initially
/// connected DFAs up to isomorphism, accept sets not included.
std::uint64_t canonical_dfa_count(std::size_t q);

/// (|x| + 1) / k when x has no k-power, nullopt otherwise.
std::optional<Rational> powerfree_lower_bound(const BitString& x, std::size_t k);

nlohmann::json to_json(const ComplexityResult& r);

}  // namespace autoplex
