#pragma once

#include "autoplex/bigint.hpp"
#include "autoplex/words.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace autoplex {

using State = std::uint32_t;

/// Total deterministic automaton over {0,1}.
class Dfa {
 public:
  /// Throws std::invalid_argument if any index is outside [0, states).
  Dfa(std::size_t states, State start, std::vector<std::array<State, 2>> delta, const std::vector<State>& accept);

  std::size_t state_count() const noexcept { return delta_.size(); }
  State start() const noexcept { return start_; }
  State next(State s, bool bit) const noexcept { return delta_[s][bit ? 1 : 0]; }
  bool is_accepting(State s) const noexcept { return accepting_[s] != 0; }
  const std::vector<std::array<State, 2>>& transitions() const noexcept { return delta_; }
  std::vector<State> accept_states() const;

  /// Copy with the accept set replaced.
  Dfa with_accept(const std::vector<State>& accept) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  State start_;
  std::vector<std::array<State, 2>> delta_;
  std::vector<std::uint8_t> accepting_;
};

State run(const Dfa& m, const BitString& x);
bool accepts(const Dfa& m, const BitString& x);

/// Number of length-n paths from the start state ending in each state.
std::vector<BigInt> path_counts(const Dfa& m, std::size_t n);

/// |L(m) ∩ {0,1}^n|, exactly.
BigInt count_accepted(const Dfa& m, std::size_t n);

/// L(m) ∩ {0,1}^|x| = {x}.
bool uniquely_accepts(const Dfa& m, const BitString& x);

// Interchange format: {"states": q, "start": s, "accept": [...], "delta": [[t0, t1], ...]}
nlohmann::json to_json(const Dfa& m);
Dfa dfa_from_json(const nlohmann::json& j);

}  // namespace autoplex
