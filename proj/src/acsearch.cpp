#include "autoplex/acsearch.hpp"

#include "autoplex/error.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoplex {

namespace {

// Path counts saturate here; the search only distinguishes 0, 1 and "more".
constexpr std::uint32_t kSaturate = 2;

// Walk-first search for a q-state DFA uniquely accepting x. States are
// numbered by first visit along the walk of x, so each isomorphism class
// of walks is generated once. The accept set is {end of walk}.
class WalkSearch {
 public:
  WalkSearch(const BitString& x, std::size_t q)
      : x_(x), len_(x.size()), q_(static_cast<int>(q)), trans_(q, {-1, -1}), walk_(x.size() + 1, 0),
        cur_(q), next_(q), reach_(q) {}

  std::optional<Dfa> run() {
    walk_[0] = 0;
    used_ = 1;
    if (!extend(0)) return std::nullopt;
    return build_witness();
  }

 private:
  // Length-`steps` paths from state 0 to `target` over assigned transitions.
  std::uint32_t paths_to(std::size_t steps, int target) {
    std::fill(cur_.begin(), cur_.end(), 0);
    cur_[0] = 1;
    for (std::size_t i = 0; i < steps; ++i) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int s = 0; s < q_; ++s) {
        if (cur_[s] == 0) continue;
        for (int b = 0; b < 2; ++b) {
          const int t = trans_[s][b];
          if (t >= 0) next_[t] = std::min(kSaturate, next_[t] + cur_[s]);
        }
      }
      cur_.swap(next_);
    }
    return cur_[target];
  }

  // Every prefix path of length i+1 ending at walk_[i+1] extends along the
  // rest of the walk, so a count above 1 here can never come back down.
  bool extend(std::size_t i) {
    if (i == len_) return close_walk();
    const int s = walk_[i];
    const int b = x_[i] ? 1 : 0;
    if (trans_[s][b] >= 0) {
      walk_[i + 1] = trans_[s][b];
      return paths_to(i + 1, walk_[i + 1]) <= 1 && extend(i + 1);
    }
    const int limit = used_ < q_ ? used_ : used_ - 1;
    for (int t = 0; t <= limit; ++t) {
      const bool fresh = (t == used_);
      trans_[s][b] = t;
      if (fresh) ++used_;
      walk_[i + 1] = t;
      if (paths_to(i + 1, t) <= 1 && extend(i + 1)) return true;
      if (fresh) --used_;
      trans_[s][b] = -1;
    }
    return false;
  }

  bool close_walk() {
    accept_ = walk_[len_];
    // A spare state becomes an absorbing dead state; every completion's
    // path set contains the dead completion's, and the walk already has
    // exactly one accepted path.
    if (used_ < q_) return true;
    return complete();
  }

  // Free (state, bit) pair whose source is reachable in fewer than len_
  // steps; only such pairs can lie on a length-len_ path.
  std::optional<std::pair<int, int>> relevant_free_pair() {
    std::fill(reach_.begin(), reach_.end(), 0);
    std::vector<std::uint8_t> frontier(q_, 0), seen(q_, 0);
    frontier[0] = 1;
    for (std::size_t step = 0; step < len_; ++step) {
      std::vector<std::uint8_t> following(q_, 0);
      for (int s = 0; s < q_; ++s) {
        if (!frontier[s]) continue;
        seen[s] = 1;
        for (int b = 0; b < 2; ++b) {
          if (trans_[s][b] >= 0) following[trans_[s][b]] = 1;
        }
      }
      frontier.swap(following);
    }
    for (int s = 0; s < q_; ++s) {
      if (!seen[s]) continue;
      for (int b = 0; b < 2; ++b) {
        if (trans_[s][b] < 0) return std::make_pair(s, b);
      }
    }
    return std::nullopt;
  }

  bool complete() {
    const auto pair = relevant_free_pair();
    if (!pair) return true;
    const auto [s, b] = *pair;
    for (int t = 0; t < q_; ++t) {
      trans_[s][b] = t;
      if (paths_to(len_, accept_) <= 1 && complete()) return true;
    }
    trans_[s][b] = -1;
    return false;
  }

  Dfa build_witness() const {
    const auto q = static_cast<std::size_t>(q_);
    std::vector<std::array<State, 2>> delta(q);
    const int dead = used_ < q_ ? used_ : -1;
    for (int s = 0; s < q_; ++s) {
      for (int b = 0; b < 2; ++b) {
        int t = trans_[s][b];
        if (t < 0) t = dead >= 0 ? dead : s;
        delta[s][b] = static_cast<State>(t);
      }
    }
    return Dfa(q, 0, std::move(delta), {static_cast<State>(accept_)});
  }

  const BitString& x_;
  std::size_t len_;
  int q_;
  std::vector<std::array<int, 2>> trans_;
  std::vector<int> walk_;
  int used_ = 1;
  int accept_ = 0;
  std::vector<std::uint32_t> cur_, next_;
  std::vector<std::uint8_t> reach_;
};

void check_length(const BitString& x, std::size_t max_length) {
  if (x.size() > max_length) {
    throw CapExceeded("exact search is capped at length " + std::to_string(max_length));
  }
}

}  // namespace

std::optional<ComplexityResult> exact_A_bounded(const BitString& x, std::size_t max_states, std::size_t max_length) {
  check_length(x, max_length);
  const std::size_t top = std::min(max_states, x.size() + 2);
  for (std::size_t q = 1; q <= top; ++q) {
    WalkSearch search(x, q);
    if (auto witness = search.run()) {
      if (!uniquely_accepts(*witness, x)) throw std::logic_error("exact search produced an invalid witness");
      return ComplexityResult{q, std::move(*witness)};
    }
  }
  return std::nullopt;
}

ComplexityResult exact_A(const BitString& x, std::size_t max_length) {
  auto r = exact_A_bounded(x, x.size() + 2, max_length);
  if (!r) throw std::logic_error("no DFA with |x| + 2 states found");
  return std::move(*r);
}

namespace {

// Transition tables in BFS-canonical order: slots are visited as (0,0),
// (0,1), (1,0), ...; a target may be any discovered state or the next
// undiscovered one, and state s must be discovered before its slots. Only
// tables reaching all q states are visited. `visit` returns true to stop.
template <class Visit>
bool canonical_tables(std::vector<std::size_t>& slots, std::size_t slot, std::size_t max_seen, Visit& visit) {
  const std::size_t q = slots.size() / 2;
  if (slot == slots.size()) return max_seen + 1 == q && visit();
  if (slot / 2 > max_seen) return false;
  const std::size_t limit = std::min(max_seen + 1, q - 1);
  for (std::size_t t = 0; t <= limit; ++t) {
    slots[slot] = t;
    if (canonical_tables(slots, slot + 1, std::max(max_seen, t), visit)) return true;
  }
  return false;
}

class BruteEnumerator {
 public:
  BruteEnumerator(const BitString& x, std::size_t q) : x_(x), q_(q), table_(2 * q, 0) {}

  std::optional<Dfa> run() {
    auto visit = [this] { return check(); };
    if (canonical_tables(table_, 0, 0, visit)) return found_;
    return std::nullopt;
  }

 private:
  bool check() {
    // Counts of every length-|x| string by final state.
    std::vector<std::uint64_t> counts(q_, 0), next(q_, 0);
    counts[0] = 1;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t s = 0; s < q_; ++s) {
        next[table_[2 * s]] += counts[s];
        next[table_[2 * s + 1]] += counts[s];
      }
      counts.swap(next);
    }
    std::size_t end = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) end = table_[2 * end + (x_[i] ? 1 : 0)];
    if (counts[end] != 1) return false;  // every accept set containing `end` fails
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q_); ++mask) {
      if (!((mask >> end) & 1)) continue;
      std::uint64_t total = 0;
      for (std::size_t s = 0; s < q_; ++s) {
        if ((mask >> s) & 1) total += counts[s];
      }
      if (total == 1) {
        std::vector<std::array<State, 2>> delta(q_);
        std::vector<State> accept;
        for (std::size_t s = 0; s < q_; ++s) {
          delta[s] = {static_cast<State>(table_[2 * s]), static_cast<State>(table_[2 * s + 1])};
          if ((mask >> s) & 1) accept.push_back(static_cast<State>(s));
        }
        found_.emplace(q_, 0, std::move(delta), accept);
        return true;
      }
    }
    return false;
  }

  const BitString& x_;
  std::size_t q_;
  std::vector<std::size_t> table_;
  std::optional<Dfa> found_;
};

}  // namespace

std::optional<ComplexityResult> brute_A(const BitString& x, std::size_t max_states) {
  if (x.size() > kBruteLengthCap) throw CapExceeded("brute force is capped at length " + std::to_string(kBruteLengthCap));
  if (max_states > kBruteStateCap) {
    throw CapExceeded("brute force is capped at " + std::to_string(kBruteStateCap) + " states");
  }
  for (std::size_t q = 1; q <= max_states; ++q) {
    BruteEnumerator e(x, q);
    if (auto m = e.run()) return ComplexityResult{q, std::move(*m)};
  }
  return std::nullopt;
}

namespace {

class TableEnumerator {
 public:
  TableEnumerator(std::size_t n, std::size_t q, std::vector<std::optional<std::size_t>>& table)
      : n_(n), q_(q), slots_(2 * q, 0), layers_(n + 1, std::vector<std::uint64_t>(q, 0)), table_(table) {}

  void run() {
    auto visit = [this] {
      harvest();
      return false;
    };
    canonical_tables(slots_, 0, 0, visit);
  }

 private:
  void harvest() {
    for (auto& layer : layers_) std::fill(layer.begin(), layer.end(), 0);
    layers_[0][0] = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t s = 0; s < q_; ++s) {
        layers_[i + 1][slots_[2 * s]] += layers_[i][s];
        layers_[i + 1][slots_[2 * s + 1]] += layers_[i][s];
      }
    }
    for (std::size_t r = 0; r < q_; ++r) {
      if (layers_[n_][r] != 1) continue;
      // Walk the single path backwards.
      std::uint64_t rank = 0;
      std::size_t cur = r;
      for (std::size_t i = n_; i-- > 0;) {
        for (std::size_t slot = 0; slot < 2 * q_; ++slot) {
          if (slots_[slot] == cur && layers_[i][slot / 2] != 0) {
            if (slot & 1) rank |= std::uint64_t{1} << (n_ - 1 - i);
            cur = slot / 2;
            break;
          }
        }
      }
      auto& best = table_[rank];
      if (!best || *best > q_) best = q_;
    }
  }

  std::size_t n_;
  std::size_t q_;
  std::vector<std::size_t> slots_;
  std::vector<std::vector<std::uint64_t>> layers_;
  std::vector<std::optional<std::size_t>>& table_;
};

}  // namespace

std::vector<std::optional<std::size_t>> brute_A_table(std::size_t n, std::size_t max_states) {
  if (n > kBruteLengthCap) throw CapExceeded("brute force is capped at length " + std::to_string(kBruteLengthCap));
  if (max_states > kBruteStateCap) {
    throw CapExceeded("brute force is capped at " + std::to_string(kBruteStateCap) + " states");
  }
  std::vector<std::optional<std::size_t>> table(std::size_t{1} << n);
  for (std::size_t q = 1; q <= max_states; ++q) TableEnumerator(n, q, table).run();
  return table;
}

std::uint64_t canonical_dfa_count(std::size_t q) {
  if (q == 0 || q > kBruteStateCap) throw CapExceeded("canonical enumeration needs 1 <= q <= " + std::to_string(kBruteStateCap));
  std::vector<std::size_t> slots(2 * q, 0);
  std::uint64_t count = 0;
  auto visit = [&count] {
    ++count;
    return false;
  };
  canonical_tables(slots, 0, 0, visit);
  return count;
}

std::optional<Rational> powerfree_lower_bound(const BitString& x, std::size_t k) {
  if (!is_k_power_free(x, k)) return std::nullopt;
  return Rational(BigInt(x.size() + 1), BigInt(k));
}

nlohmann::json to_json(const ComplexityResult& r) { return {{"value", r.value}, {"witness", to_json(r.witness)}}; }

}  // namespace autoplex
