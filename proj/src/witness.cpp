#include "autoplex/witness.hpp"

#include "autoplex/debruijn.hpp"
#include "autoplex/error.hpp"

#include <stdexcept>
#include <string>

namespace autoplex {

Atom Atom::zeros(BigInt n) {
  Atom a;
  a.kind = Kind::zeros;
  a.count = std::move(n);
  return a;
}

Atom Atom::ones(BigInt n) {
  Atom a;
  a.kind = Kind::ones;
  a.count = std::move(n);
  return a;
}

Atom Atom::psc(BigInt from, BigInt length) {
  Atom a;
  a.kind = Kind::psc_range;
  a.from = std::move(from);
  a.length = std::move(length);
  return a;
}

Atom Atom::tseq(TseqMode mode, BigInt from, BigInt length) {
  Atom a;
  a.kind = Kind::tseq_range;
  a.mode = mode;
  a.from = std::move(from);
  a.length = std::move(length);
  return a;
}

Atom Atom::debruijn(int order, BigInt rotation) {
  Atom a;
  a.kind = Kind::debruijn;
  a.order = order;
  a.from = std::move(rotation);
  return a;
}

Atom Atom::debruijn_tail(int order) {
  Atom a;
  a.kind = Kind::debruijn_tail;
  a.order = order;
  return a;
}

Atom Atom::group(std::vector<Atom> body, BigInt times) {
  Atom a;
  a.kind = Kind::group;
  a.children = std::move(body);
  a.count = std::move(times);
  return a;
}

BigInt label_length(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::zeros:
    case Atom::Kind::ones:
      return a.count;
    case Atom::Kind::psc_range:
    case Atom::Kind::tseq_range:
      return a.length;
    case Atom::Kind::debruijn:
      return pow2(static_cast<std::uint64_t>(a.order));
    case Atom::Kind::debruijn_tail:
      return pow2(static_cast<std::uint64_t>(a.order)) - a.order - 1;
    case Atom::Kind::group:
      return a.count * label_length(a.children);
  }
  return 0;
}

BigInt label_length(const Label& label) {
  BigInt total = 0;
  for (const Atom& a : label) total += label_length(a);
  return total;
}

namespace {

std::string power(const std::string& base, const BigInt& k) { return k == 1 ? base : base + "^" + k.str(); }

std::string render_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::zeros:
      return power("0", a.count);
    case Atom::Kind::ones:
      return power("1", a.count);
    case Atom::Kind::psc_range:
      return "C[" + a.from.str() + ",+" + a.length.str() + ")";
    case Atom::Kind::tseq_range:
      return "T[" + a.from.str() + ",+" + a.length.str() + ")";
    case Atom::Kind::debruijn: {
      const std::string o = std::to_string(a.order);
      return a.from == 0 ? "d_" + o : "d_{" + o + "," + a.from.str() + "}";
    }
    case Atom::Kind::debruijn_tail:
      return "v_" + std::to_string(a.order);
    case Atom::Kind::group:
      return power("(" + render(a.children) + ")", a.count);
  }
  return {};
}

}  // namespace

std::string render(const Label& label) {
  std::string out;
  for (const Atom& a : label) {
    if (!out.empty()) out += ' ';
    out += render_atom(a);
  }
  return out;
}

BigInt WitnessSpec::state_count() const {
  BigInt total = 1;
  for (const Segment& seg : segments) {
    total += seg.kind == SegmentKind::chain ? seg.length() : seg.length() - 1;
  }
  if (includes_dead_state) total += 1;
  return total;
}

BigInt WitnessSpec::intended_length() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& seg = segments[i];
    if (i < accept.segment) {
      total += seg.kind == SegmentKind::chain ? seg.length() : seg.length() * seg.repeats;
      continue;
    }
    if (seg.kind == SegmentKind::chain) return total + accept.offset;
    if (accept.offset == 0) return total + seg.length() * seg.repeats;
    return total + seg.length() * (seg.repeats - 1) + accept.offset;
  }
  throw std::logic_error("accept point past the last segment");
}

void validate(const WitnessSpec& spec) {
  if (spec.segments.empty()) throw DomainError("witness has no segments");
  for (const Segment& seg : spec.segments) {
    if (seg.length() < 1) throw DomainError("witness segment of length zero");
    if (seg.kind == SegmentKind::loop && seg.repeats < 1) throw DomainError("loop without traversals");
  }
  if (spec.accept.segment >= spec.segments.size()) throw DomainError("accept point past the last segment");
  const Segment& seg = spec.segments[spec.accept.segment];
  const BigInt len = seg.length();
  if (seg.kind == SegmentKind::chain ? (spec.accept.offset < 1 || spec.accept.offset > len)
                                     : (spec.accept.offset < 0 || spec.accept.offset >= len)) {
    throw DomainError("accept offset outside its segment");
  }
}

const BitSources& default_sources() {
  static const PscSequence psc;
  static const TSequence scaled(TseqMode::scaled);
  static const TSequence exact(TseqMode::exact);
  static const BitSources sources{psc, scaled, exact};
  return sources;
}

namespace {

std::size_t checked_size(const BigInt& v, std::size_t budget) {
  if (v < 0 || v > budget) throw CapExceeded("label needs " + v.str() + " bits, over the budget of " + std::to_string(budget));
  return static_cast<std::size_t>(v);
}

void append_atom(BitString& out, const Atom& a, const BitSources& src, std::size_t budget) {
  const std::size_t room = budget - out.size();
  switch (a.kind) {
    case Atom::Kind::zeros:
      out.append(BitString::zeros(checked_size(a.count, room)));
      return;
    case Atom::Kind::ones:
      out.append(BitString::ones(checked_size(a.count, room)));
      return;
    case Atom::Kind::psc_range:
      out.append(src.psc.slice(a.from, checked_size(a.length, room)));
      return;
    case Atom::Kind::tseq_range: {
      const TSequence& t = a.mode == TseqMode::scaled ? src.tseq_scaled : src.tseq_exact;
      out.append(t.slice(a.from, checked_size(a.length, room)));
      return;
    }
    case Atom::Kind::debruijn: {
      checked_size(label_length(a), room);
      const BitString& d = src.psc.debruijn(a.order);
      out.append(rotate_left(d, static_cast<std::size_t>(a.from % d.size())));
      return;
    }
    case Atom::Kind::debruijn_tail:
      checked_size(label_length(a), room);
      out.append(src.psc.v_tail(a.order));
      return;
    case Atom::Kind::group: {
      checked_size(label_length(a), room);
      out.append_repeated(resolve(a.children, src, room), static_cast<std::size_t>(a.count));
      return;
    }
  }
}

}  // namespace

BitString resolve(const Label& label, const BitSources& src, std::size_t budget) {
  BitString out;
  for (const Atom& a : label) append_atom(out, a, src, budget);
  return out;
}

BitString spell(const WitnessSpec& spec, const BitSources& src, std::size_t budget) {
  validate(spec);
  checked_size(spec.intended_length(), budget);
  BitString out;
  for (std::size_t i = 0; i <= spec.accept.segment; ++i) {
    const Segment& seg = spec.segments[i];
    const BitString bits = resolve(seg.label, src, budget);
    if (i < spec.accept.segment) {
      out.append_repeated(bits, seg.kind == SegmentKind::chain ? 1 : static_cast<std::size_t>(seg.repeats));
    } else if (seg.kind == SegmentKind::chain) {
      out.append(bits.substr(0, static_cast<std::size_t>(spec.accept.offset)));
    } else if (spec.accept.offset == 0) {
      out.append_repeated(bits, static_cast<std::size_t>(seg.repeats));
    } else {
      out.append_repeated(bits, static_cast<std::size_t>(seg.repeats) - 1);
      out.append(bits.substr(0, static_cast<std::size_t>(spec.accept.offset)));
    }
  }
  return out;
}

Dfa materialize(const WitnessSpec& spec, const BitSources& src, std::size_t state_budget) {
  validate(spec);
  const BigInt total = spec.state_count();
  if (total > state_budget) {
    throw CapExceeded("witness has " + total.str() + " states, over the budget of " + std::to_string(state_budget));
  }
  const auto q = static_cast<std::size_t>(total);
  const auto dead = static_cast<State>(q - 1);
  constexpr State kUnset = ~State{0};
  std::vector<std::array<State, 2>> delta(q, {kUnset, kUnset});
  State next_state = 1;
  State cur = 0;
  State accept = 0;

  auto link = [&](State from, bool bit, State to) {
    auto& slot = delta[from][bit ? 1 : 0];
    if (slot != kUnset) {
      throw DomainError("two segments leave one state on bit " + std::string(bit ? "1" : "0") + "; not deterministic");
    }
    slot = to;
  };

  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const Segment& seg = spec.segments[i];
    const BitString bits = resolve(seg.label, src, state_budget);
    const bool here = (i == spec.accept.segment);
    const auto offset = here ? static_cast<std::size_t>(spec.accept.offset) : 0;
    if (seg.kind == SegmentKind::chain) {
      for (std::size_t k = 0; k < bits.size(); ++k) {
        link(cur, bits[k], next_state);
        cur = next_state++;
        if (here && k + 1 == offset) accept = cur;
      }
    } else {
      const State root = cur;
      if (here && offset == 0) accept = root;
      for (std::size_t k = 0; k + 1 < bits.size(); ++k) {
        link(cur, bits[k], next_state);
        cur = next_state++;
        if (here && k + 1 == offset) accept = cur;
      }
      link(cur, bits[bits.size() - 1], root);
      cur = root;
    }
  }
  if (spec.includes_dead_state) {
    for (auto& row : delta) {
      for (State& t : row) {
        if (t == kUnset) t = dead;
      }
    }
  } else {
    for (std::size_t s = 0; s < q; ++s) {
      for (State& t : delta[s]) {
        if (t == kUnset) t = static_cast<State>(s);
      }
    }
  }
  return Dfa(q, 0, std::move(delta), {accept});
}

DioCertificate acceptance_length_equation(const WitnessSpec& spec, const BigInt& target_len, EquationRegime regime) {
  validate(spec);
  std::vector<BigInt> coefficients;
  std::vector<BigInt> lower;
  BigInt constant = 0;
  for (std::size_t i = 0; i <= spec.accept.segment; ++i) {
    const Segment& seg = spec.segments[i];
    const bool here = (i == spec.accept.segment);
    if (seg.kind == SegmentKind::chain) {
      constant += here ? spec.accept.offset : seg.length();
      continue;
    }
    coefficients.push_back(seg.length());
    lower.push_back(regime == EquationRegime::all_positive ? 1 : 0);
    if (here && spec.accept.offset != 0) {
      constant += spec.accept.offset - seg.length();
      lower.back() = 1;
    }
  }
  if (coefficients.empty()) throw DomainError("accepting state is not reachable through any loop");
  return enumerate_nonneg(std::move(coefficients), std::move(constant), target_len, std::move(lower));
}

std::vector<BigInt> intended_solution(const WitnessSpec& spec) {
  std::vector<BigInt> values;
  for (std::size_t i = 0; i <= spec.accept.segment && i < spec.segments.size(); ++i) {
    if (spec.segments[i].kind == SegmentKind::loop) values.push_back(spec.segments[i].repeats);
  }
  return values;
}

namespace {

void append_chain(WitnessSpec& spec, Label label) {
  if (label_length(label) == 0) return;
  spec.segments.push_back({SegmentKind::chain, std::move(label), 0});
}

void append_loop(WitnessSpec& spec, Label label, BigInt repeats) {
  spec.segments.push_back({SegmentKind::loop, std::move(label), std::move(repeats)});
}

// Accept after `into` bits of the path that starts at the last loop's root
// on first arrival: inside or at the root of the loop, or at the end of an
// exit chain taken from `exit_from` (the path position of the root after
// the loop's last full traversal).
void place_accept(WitnessSpec& spec, const BigInt& into, const BigInt& exit_from, const BigInt& root_at,
                  const Label& exit_label_from_root) {
  Segment& loop = spec.segments.back();
  const BigInt len = loop.length();
  const std::size_t loop_index = spec.segments.size() - 1;
  const BigInt covered = exit_from - root_at;
  if (into <= covered) {
    const BigInt full = into / len;
    const BigInt rem = into % len;
    if (rem == 0) {
      loop.repeats = full;
      spec.accept = {loop_index, 0};
    } else {
      loop.repeats = full + 1;
      spec.accept = {loop_index, rem};
    }
    return;
  }
  loop.repeats = covered / len;
  append_chain(spec, exit_label_from_root);
  spec.accept = {spec.segments.size() - 1, label_length(exit_label_from_root)};
}

void finish(WitnessSpec& spec) {
  validate(spec);
  if (spec.intended_length() != spec.target) throw std::logic_error(spec.name + ": intended path misses the target");
}

BigInt tseq_cumulative(int n, TseqMode mode) {
  const auto& src = default_sources();
  return (mode == TseqMode::scaled ? src.tseq_scaled : src.tseq_exact).cumulative_length(n);
}

BigInt tseq_exponent(int n, TseqMode mode) {
  const auto& src = default_sources();
  return (mode == TseqMode::scaled ? src.tseq_scaled : src.tseq_exact).exponent(n);
}

WitnessSpec m1_shape(int n, TseqMode mode, const std::string& name) {
  if (n < 1) throw DomainError("machine order must be positive");
  WitnessSpec spec;
  spec.name = name;
  const BigInt prefix = tseq_cumulative(n - 1, mode);
  append_chain(spec, {Atom::tseq(mode, 0, prefix)});
  append_loop(spec, {Atom::tseq(mode, prefix, pow2(static_cast<std::uint64_t>(n)))}, 1);
  return spec;
}

}  // namespace

WitnessSpec build_M1(int n, TseqMode mode) {
  WitnessSpec spec = m1_shape(n, mode, "M1");
  spec.segments.back().repeats = tseq_exponent(n, mode);
  spec.accept = {spec.segments.size() - 1, 0};
  spec.target = tseq_cumulative(n, mode);
  finish(spec);
  return spec;
}

BigInt m2_max_w(int n, TseqMode mode) {
  const BigInt p = pow2(static_cast<std::uint64_t>(n));
  return p * (tseq_exponent(n, mode) - 1) + 2 * p;
}

WitnessSpec build_M2(int n, const BigInt& w_len, TseqMode mode) {
  if (n < 1) throw DomainError("machine order must be positive");
  if (w_len < 1 || w_len > m2_max_w(n, mode)) {
    throw DomainError("w length must lie in [1, 2^n (f(n) - 1) + 2^(n+1)]");
  }
  WitnessSpec spec = m1_shape(n, mode, "M2");
  spec.segments.back().repeats = tseq_exponent(n, mode);
  const BigInt tn = tseq_cumulative(n, mode);
  append_chain(spec, {Atom::tseq(mode, tn, w_len)});
  spec.accept = {spec.segments.size() - 1, w_len};
  spec.target = tn + w_len;
  finish(spec);
  return spec;
}

WitnessSpec build_M1_at(int n, const BigInt& target, TseqMode mode) {
  WitnessSpec spec = m1_shape(n, mode, "M1@");
  const BigInt start = tseq_cumulative(n - 1, mode);
  const BigInt end = tseq_cumulative(n, mode);
  if (target <= start || target > end) throw DomainError("target outside the zone this machine loops on");
  spec.target = target;
  place_accept(spec, target - start, end, start, {});
  finish(spec);
  return spec;
}

bool case_applies(int case_id, int n) {
  if (n < 1) return false;
  const auto un = static_cast<std::uint64_t>(n);
  switch (case_id) {
    case 1:
      return un >= 2 && is_power_of_two(un);
    case 2:
      return is_power_of_two(un + 1);
    case 3:
      return un % 2 == 0 && !is_power_of_two(un);
    case 4:
      return un % 2 == 1 && !is_power_of_two(un + 1);
    default:
      return false;
  }
}

int case_for(int n) {
  if (n < 1) throw DomainError("zone order must be positive");
  if (case_applies(2, n)) return 2;
  for (int id : {1, 3, 4}) {
    if (case_applies(id, n)) return id;
  }
  throw std::logic_error("no case applies");
}

namespace {

struct CaseLayout {
  WitnessSpec spec;  // up to and including the second loop
  BigInt root_at;    // path length on first arrival at the second loop's root
  BigInt exit_from;  // path length when leaving it: |C_1...C_{n+1}| + h
};

CaseLayout case_layout(int case_id, int n) {
  if (!case_applies(case_id, n)) {
    throw DomainError("case " + std::to_string(case_id) + " does not apply to n = " + std::to_string(n));
  }
  const auto un = static_cast<std::uint64_t>(n);
  const ZoneFactorization f = factorize(un);
  const ZoneFactorization f1 = factorize(un + 1);
  const BigInt prefix = cumulative_length(un - 1);

  CaseLayout out;
  WitnessSpec& spec = out.spec;
  spec.name = "case" + std::to_string(case_id);
  append_chain(spec, {Atom::psc(0, prefix), Atom::zeros(n)});

  auto with_power = [](Label body, int order, const BigInt& times) {
    if (times > 0) body.insert(body.end() - 1, Atom::group({Atom::debruijn(order)}, times));
    return body;
  };

  BigInt h;
  switch (case_id) {
    case 1:
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n), Atom::zeros(n - 1)}, n);
      append_chain(spec, {Atom::zeros(n + 1)});
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n + 1), Atom::zeros(n + 1)}, n + 1);
      h = n + 1;
      break;
    case 2:
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n), Atom::zeros(n)}, n);
      append_chain(spec, {Atom::zeros(1)});
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n + 1), Atom::zeros(n)}, n + 1);
      h = 0;
      break;
    case 3:
      append_loop(spec, with_power({Atom::ones(1), Atom::debruijn_tail(n), Atom::zeros(n - 1)}, n, f.t - 1),
                  pow2(f.s));
      append_chain(spec, {Atom::zeros(pow2(f.s) + 1)});
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n + 1), Atom::zeros(n + 1)}, n + 1);
      h = n + 1;
      break;
    case 4:
      append_loop(spec, {Atom::ones(1), Atom::debruijn_tail(n), Atom::zeros(n)}, n);
      append_chain(spec, {Atom::zeros(1)});
      append_loop(spec,
                  with_power({Atom::ones(1), Atom::debruijn_tail(n + 1), Atom::zeros(n)}, n + 1, f1.t - 1),
                  pow2(f1.s));
      h = BigInt(n + 1) - pow2(f1.s);
      break;
  }
  out.exit_from = cumulative_length(un + 1) + h;
  const Segment& loop_b = spec.segments.back();
  out.root_at = out.exit_from - loop_b.length() * loop_b.repeats;
  return out;
}

}  // namespace

BigInt case_second_loop_entry(int case_id, int n) { return case_layout(case_id, n).root_at; }

WitnessSpec build_case_at(int case_id, int n, const BigInt& target) {
  CaseLayout layout = case_layout(case_id, n);
  if (target <= layout.root_at) throw DomainError("target ends before the second loop");
  const auto un = static_cast<std::uint64_t>(n);
  if (target >= cumulative_length(un + 2)) throw DomainError("target reaches past zone n + 2");
  WitnessSpec spec = std::move(layout.spec);
  spec.target = target;
  Label exit;
  if (target > layout.exit_from) exit.push_back(Atom::psc(layout.exit_from, target - layout.exit_from));
  place_accept(spec, target - layout.root_at, layout.exit_from, layout.root_at, exit);
  finish(spec);
  return spec;
}

WitnessSpec build_case(int case_id, int n, const BigInt& p_len) {
  if (n < 1) throw DomainError("zone order must be positive");
  const auto un = static_cast<std::uint64_t>(n);
  if (p_len < 0 || p_len >= zone_length(un + 2)) throw DomainError("p length must lie in [0, |C_{n+2}|)");
  return build_case_at(case_id, n, cumulative_length(un + 1) + p_len);
}

BigInt quoted_case_bound(int case_id, int n, const BigInt& p_len) {
  if (!case_applies(case_id, n)) {
    throw DomainError("case " + std::to_string(case_id) + " does not apply to n = " + std::to_string(n));
  }
  const auto un = static_cast<std::uint64_t>(n);
  const ZoneFactorization f = factorize(un);
  const ZoneFactorization f1 = factorize(un + 1);
  const BigInt base = cumulative_length(un - 1) + pow2(un) + pow2(un + 1) + p_len;
  switch (case_id) {
    case 1:
      return base + 1 + 2 * n;
    case 2:
      return base + n;
    case 3:
      return base + n + pow2(un) * (f.t - 1) + pow2(f.s);
    case 4:
      return base + n + pow2(un + 1) * (f1.t - 1);
    default:
      throw std::logic_error("unreachable");
  }
}

WitnessSpec build_Mhat() {
  WitnessSpec spec;
  spec.name = "Mhat";
  append_chain(spec, {Atom::psc(0, cumulative_length(61)), Atom::zeros(62)});
  append_loop(spec,
              {Atom::ones(1), Atom::debruijn_tail(62), Atom::group({Atom::debruijn(62)}, 30), Atom::zeros(61)}, 2);
  append_chain(spec, {Atom::zeros(3)});
  append_loop(spec, {Atom::group({Atom::ones(1), Atom::debruijn_tail(63), Atom::zeros(63)}, 21)}, 3);
  append_chain(spec, {Atom::zeros(1), Atom::ones(1), Atom::debruijn_tail(64), Atom::zeros(63)});
  append_loop(spec, {Atom::group({Atom::ones(1), Atom::debruijn_tail(64), Atom::zeros(63)}, 7)}, 9);
  append_chain(spec, {Atom::zeros(65)});
  append_loop(spec, {Atom::group({Atom::ones(1), Atom::debruijn_tail(65), Atom::zeros(65)}, 5)}, 13);
  const Segment& last = spec.segments.back();
  spec.accept = {spec.segments.size() - 1, last.length() - 65};
  spec.target = cumulative_length(65);
  finish(spec);
  return spec;
}

BigInt quoted_n2() {
  return cumulative_length(61) + 31 * pow2(62) + 7 * pow2(63) + 8 * pow2(64) + 5 * pow2(65) + 120;
}

BigInt quoted_n1() { return cumulative_length(63) + pow2(64) + pow2(65) + 128; }

nlohmann::json to_json(const WitnessSpec& spec) {
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& seg : spec.segments) {
    nlohmann::json s = {{"kind", seg.kind == SegmentKind::chain ? "chain" : "loop"},
                        {"label", render(seg.label)},
                        {"length", seg.length().str()}};
    if (seg.kind == SegmentKind::loop) s["repeats"] = seg.repeats.str();
    segs.push_back(std::move(s));
  }
  return {{"name", spec.name},
          {"state_count", spec.state_count().str()},
          {"target", spec.target.str()},
          {"accept", {{"segment", spec.accept.segment}, {"offset", spec.accept.offset.str()}}},
          {"segments", segs}};
}

}  // namespace autoplex
