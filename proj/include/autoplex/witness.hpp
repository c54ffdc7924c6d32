#pragma once

#include "autoplex/automata.hpp"
#include "autoplex/bigint.hpp"
#include "autoplex/dio.hpp"
#include "autoplex/psc.hpp"
#include "autoplex/tseq.hpp"
#include "autoplex/words.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace autoplex {

/// One piece of a symbolic edge label.
struct Atom {
  enum class Kind { zeros, ones, psc_range, tseq_range, debruijn, debruijn_tail, group };

  Kind kind = Kind::zeros;
  BigInt count;     // zeros/ones: run length; group: repetitions
  BigInt from;      // ranges: start index; debruijn: rotation
  BigInt length;    // ranges only
  int order = 0;    // debruijn, debruijn_tail
  TseqMode mode = TseqMode::scaled;
  std::vector<Atom> children;  // group only

  static Atom zeros(BigInt n);
  static Atom ones(BigInt n);
  static Atom psc(BigInt from, BigInt length);
  static Atom tseq(TseqMode mode, BigInt from, BigInt length);
  /// Rotation of the lex-least de Bruijn string of the PSC construction.
  static Atom debruijn(int order, BigInt rotation = 0);
  /// v_n, where the lex-least d_n = 0^n 1 v_n.
  static Atom debruijn_tail(int order);
  static Atom group(std::vector<Atom> body, BigInt times);
};

using Label = std::vector<Atom>;

BigInt label_length(const Atom& a);
BigInt label_length(const Label& label);
std::string render(const Label& label);

enum class SegmentKind { chain, loop };

struct Segment {
  SegmentKind kind = SegmentKind::chain;
  Label label;
  /// Loops: traversals made by the intended path. When the accepting state
  /// lies strictly inside this loop, the last traversal is the partial one.
  BigInt repeats = 0;

  BigInt length() const { return label_length(label); }
};

/// Where the accepting state sits. Chains: offset in [1, length], the state
/// after that many bits. Loops: offset in [0, length), 0 being the root.
struct AcceptPoint {
  std::size_t segment = 0;
  BigInt offset = 0;
};

/// Chain-and-loop automaton: each segment starts at the state where the
/// previous one ended; a loop returns to its root and the next segment
/// leaves from that root. Everything off the construction goes to the
/// dead state.
struct WitnessSpec {
  std::string name;
  std::vector<Segment> segments;
  AcceptPoint accept;
  BigInt target;  // length of the string the spec is meant to accept
  bool includes_dead_state = true;

  /// 1 (start) + chain lengths + (loop length - 1) per loop + dead state.
  BigInt state_count() const;
  /// Length of the path that follows every segment `repeats` times up to
  /// the accepting state.
  BigInt intended_length() const;
};

/// Throws DomainError on empty segments, loops with no traversals, or an
/// accept point outside its segment.
void validate(const WitnessSpec& spec);

/// Bits come from these sources when labels are resolved.
struct BitSources {
  const PscSequence& psc;
  const TSequence& tseq_scaled;
  const TSequence& tseq_exact;
};

/// Lex-least PSC and both T-sequence modes.
const BitSources& default_sources();

BitString resolve(const Label& label, const BitSources& src, std::size_t budget);

/// The string read along the intended path.
BitString spell(const WitnessSpec& spec, const BitSources& src = default_sources(),
                std::size_t budget = std::size_t{1} << 28);

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 22;

/// Explicit total DFA with the spec's state count. Throws CapExceeded over
/// the budget, DomainError when two segments leave a state on the same bit.
Dfa materialize(const WitnessSpec& spec, const BitSources& src = default_sources(),
                std::size_t state_budget = kDefaultStateBudget);

enum class EquationRegime {
  natural,       // loop variables >= 0; a loop holding the accept state >= 1
  all_positive,  // every loop variable >= 1
};

/// Lengths of accepted strings: constant + sum length_i * v_i = target_len,
/// one variable per loop up to the accepting segment. A loop holding the
/// accepting state strictly inside counts begun traversals.
DioCertificate acceptance_length_equation(const WitnessSpec& spec, const BigInt& target_len,
                                          EquationRegime regime = EquationRegime::natural);

/// The variable values of the intended path, in equation order.
std::vector<BigInt> intended_solution(const WitnessSpec& spec);

// --- T-sequence machines ---

WitnessSpec build_M1(int n, TseqMode mode);
/// 1 <= w_len <= 2^n (f(n) - 1) + 2^(n+1).
WitnessSpec build_M2(int n, const BigInt& w_len, TseqMode mode);
/// M1's shape with the accepting state wherever a path of length `target`
/// ends; requires |T_1...T_{n-1}| < target <= |T_1...T_n|.
WitnessSpec build_M1_at(int n, const BigInt& target, TseqMode mode);
BigInt m2_max_w(int n, TseqMode mode);

// --- PSC machines ---

/// 1: n a power of two; 2: n + 1 a power of two; 3: n even, not a power of
/// two; 4: n odd with n + 1 not a power of two. Case 1 needs n >= 2.
bool case_applies(int case_id, int n);
/// The case used for n (2 when n = 1).
int case_for(int n);

/// Prefix C_1...C_{n+1} p with |p| = p_len, 0 <= p_len < |C_{n+2}|.
WitnessSpec build_case(int case_id, int n, const BigInt& p_len);
/// Same machine, accepting wherever the intended path has read `target`
/// bits, anywhere from the first arrival at the second loop onwards.
WitnessSpec build_case_at(int case_id, int n, const BigInt& target);
/// Path length on first arrival at the second loop's root.
BigInt case_second_loop_entry(int case_id, int n);

/// Closed-form state-count upper bounds for each case.
BigInt quoted_case_bound(int case_id, int n, const BigInt& p_len);

/// Four-loop machine for C_1...C_65.
WitnessSpec build_Mhat();
/// Closed-form n_2, with a 7 * 2^63 term where the machine has 7 * 2^64.
BigInt quoted_n2();
/// |C_1...C_63| + 2^64 + 2^65 + 128.
BigInt quoted_n1();

nlohmann::json to_json(const WitnessSpec& spec);

}  // namespace autoplex
