#include "autoplex/automata.hpp"

#include <stdexcept>

namespace autoplex {

Dfa::Dfa(std::size_t states, State start, std::vector<std::array<State, 2>> delta, const std::vector<State>& accept)
    : start_(start), delta_(std::move(delta)), accepting_(states, 0) {
  if (states == 0) throw std::invalid_argument("a DFA needs at least one state");
  if (delta_.size() != states) throw std::invalid_argument("transition table size differs from state count");
  if (start_ >= states) throw std::invalid_argument("start state out of range");
  for (const auto& row : delta_) {
    if (row[0] >= states || row[1] >= states) throw std::invalid_argument("transition target out of range");
  }
  for (State a : accept) {
    if (a >= states) throw std::invalid_argument("accepting state out of range");
    accepting_[a] = 1;
  }
}

std::vector<State> Dfa::accept_states() const {
  std::vector<State> out;
  for (std::size_t s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) out.push_back(static_cast<State>(s));
  }
  return out;
}

Dfa Dfa::with_accept(const std::vector<State>& accept) const {
  return Dfa(state_count(), start_, delta_, accept);
}

State run(const Dfa& m, const BitString& x) {
  State s = m.start();
  for (std::size_t i = 0; i < x.size(); ++i) s = m.next(s, x[i]);
  return s;
}

bool accepts(const Dfa& m, const BitString& x) { return m.is_accepting(run(m, x)); }

std::vector<BigInt> path_counts(const Dfa& m, std::size_t n) {
  const std::size_t q = m.state_count();
  std::vector<BigInt> cur(q), next(q);
  cur[m.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    for (auto& v : next) v = 0;
    for (std::size_t s = 0; s < q; ++s) {
      if (cur[s].is_zero()) continue;
      const auto& row = m.transitions()[s];
      next[row[0]] += cur[s];
      next[row[1]] += cur[s];
    }
    cur.swap(next);
  }
  return cur;
}

BigInt count_accepted(const Dfa& m, std::size_t n) {
  const std::vector<BigInt> counts = path_counts(m, n);
  BigInt total = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (m.is_accepting(static_cast<State>(s))) total += counts[s];
  }
  return total;
}

bool uniquely_accepts(const Dfa& m, const BitString& x) {
  return accepts(m, x) && count_accepted(m, x.size()) == 1;
}

nlohmann::json to_json(const Dfa& m) {
  nlohmann::json delta = nlohmann::json::array();
  for (const auto& row : m.transitions()) delta.push_back({row[0], row[1]});
  return {{"states", m.state_count()}, {"start", m.start()}, {"accept", m.accept_states()}, {"delta", delta}};
}

Dfa dfa_from_json(const nlohmann::json& j) {
  try {
    const auto states = j.at("states").get<std::size_t>();
    const auto start = j.at("start").get<State>();
    const auto accept = j.at("accept").get<std::vector<State>>();
    std::vector<std::array<State, 2>> delta;
    for (const auto& row : j.at("delta")) {
      if (!row.is_array() || row.size() != 2) throw std::invalid_argument("each delta row needs two targets");
      delta.push_back({row[0].get<State>(), row[1].get<State>()});
    }
    return Dfa(states, start, std::move(delta), accept);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DFA JSON: ") + e.what());
  }
}

}  // namespace autoplex
