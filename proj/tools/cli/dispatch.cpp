#include "dispatch.hpp"

#include "autoplex/acsearch.hpp"
#include "autoplex/analysis.hpp"
#include "autoplex/automata.hpp"
#include "autoplex/debruijn.hpp"
#include "autoplex/dio.hpp"
#include "autoplex/error.hpp"
#include "autoplex/psc.hpp"
#include "autoplex/tseq.hpp"
#include "autoplex/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace autoplex::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Config {
  std::string format = "text";
  int zone_cap = PscSequence::kDefaultZoneCap;
  std::size_t state_cap = kDefaultStateBudget;
  std::size_t prefix_cap = std::size_t{1} << 24;
  std::uint64_t seed = 20240611;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }
};

BigInt parse_big(const std::string& text, const std::string& what) {
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start || !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                                           [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  return BigInt(text);
}

std::size_t small(const BigInt& v, const std::string& what, std::size_t cap) {
  if (v < 0) throw UsageError(what + " must be nonnegative");
  if (v > cap) throw DomainError(what + " = " + v.str() + " exceeds the cap " + std::to_string(cap));
  return static_cast<std::size_t>(v);
}

BitString parse_bits(const std::string& text) {
  try {
    return BitString::from_text(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string tuple_text(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string equation_text(const DioCertificate& c) {
  static const char* names = "abcdefghijklmnopqrstuvwxyz";
  std::string s = c.constant.str();
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
    s += " + " + c.coefficients[i].str() + "*" + (i < 26 ? std::string(1, names[i]) : "v" + std::to_string(i));
  }
  s += " = " + c.target.str();
  for (std::size_t i = 0; i < c.lower_bounds.size(); ++i) {
    if (c.lower_bounds[i] > 0) s += ", " + std::string(1, names[i % 26]) + " >= " + c.lower_bounds[i].str();
  }
  return s;
}

void write_solutions(std::ostream& out, const DioCertificate& c) {
  out << "solutions:";
  if (c.solutions.empty()) out << " none";
  for (const auto& s : c.solutions) out << ' ' << tuple_text(s);
  out << '\n';
}

void no_csv(const Config& cfg, const std::string& command) {
  if (cfg.fmt() == Format::csv) throw UsageError("--format csv is not available for '" + command + "'");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- handlers -------------------------------------------------------------

struct DebruijnArgs {
  int order = 0;
  std::optional<int> start_bit;
  std::string rotate = "0";
};

void run_debruijn(const Config& cfg, const DebruijnArgs& a, std::ostream& out) {
  no_csv(cfg, "debruijn");
  if (a.order < 1 || a.order > kMaxDeBruijnOrder) {
    throw DomainError("order must lie in [1, " + std::to_string(kMaxDeBruijnOrder) + "]");
  }
  DeBruijnString d = a.start_bit ? generate_with_start_bit(a.order, *a.start_bit != 0) : generate_lex_least(a.order);
  const BigInt j = parse_big(a.rotate, "--rotate");
  if (j != 0) {
    if (j < 0 || j >= pow2(static_cast<std::uint64_t>(a.order))) throw DomainError("rotation must lie in [0, 2^order)");
    d = rotate(d, static_cast<std::uint64_t>(j));
  }
  if (cfg.fmt() == Format::json) {
    out << json{{"order", d.order}, {"rotation", d.rotation}, {"bits", d.bits.to_text()}}.dump(2) << '\n';
  } else {
    out << d.bits << '\n';
  }
}

struct SeqArgs {
  int n = 0;
  std::string m = "0";
  std::string index = "0";
  std::string mode = "scaled";
  bool log10 = false;
};

void run_psc(const Config& cfg, const std::string& sub, const SeqArgs& a, std::ostream& out) {
  const PscSequence psc({}, cfg.zone_cap);
  const Format f = cfg.fmt();
  no_csv(cfg, "psc " + sub);
  if (sub == "zone") {
    const BitString& z = psc.zone(a.n);
    if (f == Format::json) {
      const ZoneFactorization fz = factorize(static_cast<std::uint64_t>(a.n));
      out << json{{"n", a.n}, {"s", fz.s}, {"t", fz.t}, {"length", z.size()}, {"bits", z.to_text()}}.dump(2) << '\n';
    } else {
      out << z << '\n';
    }
  } else if (sub == "prefix") {
    const BitString x = psc.prefix(small(parse_big(a.m, "--bits"), "--bits", cfg.prefix_cap));
    if (f == Format::json) {
      out << json{{"length", x.size()}, {"bits", x.to_text()}}.dump(2) << '\n';
    } else {
      out << x << '\n';
    }
  } else if (sub == "bit") {
    const bool b = psc.bit_at(parse_big(a.index, "--index"));
    if (f == Format::json) {
      out << json{{"index", a.index}, {"bit", b ? 1 : 0}}.dump(2) << '\n';
    } else {
      out << (b ? 1 : 0) << '\n';
    }
  } else if (sub == "verify") {
    const bool ok = psc.verify_zone(a.n);
    if (f == Format::json) {
      json viol = json::array();
      if (!ok) {
        const auto counts = block_counts(psc.zone(a.n), a.n);
        const auto un = static_cast<std::size_t>(a.n);
        for (std::uint64_t r = 0; r < counts.size(); ++r) {
          if (counts[r] == 1) continue;
          std::string w(un, '0');
          for (std::size_t i = 0; i < un; ++i) w[i] = ((r >> (un - 1 - i)) & 1) ? '1' : '0';
          viol.push_back({{"word", w}, {"count", counts[r]}});
        }
      }
      out << json{{"n", a.n}, {"ok", ok}, {"violations", viol}}.dump(2) << '\n';
    } else {
      out << yes_no(ok) << '\n';
    }
  } else if (sub == "lemma") {
    const LoopLemmaReport r = psc.verify_loop_lemma(a.n);
    json viol = json::array();
    for (const Square& sq : r.violations) viol.push_back({{"position", sq.position}, {"half", sq.half}});
    if (f == Format::json) {
      out << json{{"j", r.j},
                  {"modulus", r.modulus},
                  {"squares_checked", r.squares_checked},
                  {"half_lengths", json(std::vector<std::size_t>(r.half_lengths.begin(), r.half_lengths.end()))},
                  {"violations", viol},
                  {"ok", r.ok()}}
                 .dump(2)
          << '\n';
    } else {
      out << "j: " << r.j << "\nmodulus: " << r.modulus << "\nsquares: " << r.squares_checked << "\nhalf_lengths:";
      for (std::size_t h : r.half_lengths) out << ' ' << h;
      out << "\nviolations: " << r.violations.size() << '\n';
    }
  }
}

void run_tseq(const Config& cfg, const std::string& sub, const SeqArgs& a, std::ostream& out) {
  no_csv(cfg, "tseq " + sub);
  const TSequence t(parse_tseq_mode(a.mode));
  const Format f = cfg.fmt();
  if (sub == "prefix") {
    const BitString x = t.prefix(small(parse_big(a.m, "--bits"), "--bits", cfg.prefix_cap));
    if (f == Format::json) {
      out << json{{"mode", a.mode}, {"length", x.size()}, {"bits", x.to_text()}}.dump(2) << '\n';
    } else {
      out << x << '\n';
    }
  } else if (sub == "bit") {
    const bool b = t.bit_at(parse_big(a.index, "--index"));
    if (f == Format::json) {
      out << json{{"mode", a.mode}, {"index", a.index}, {"bit", b ? 1 : 0}}.dump(2) << '\n';
    } else {
      out << (b ? 1 : 0) << '\n';
    }
  } else if (sub == "len") {
    const SizeMagnitude s = t.zone_length_magnitude(a.n);
    if (f == Format::json) {
      json j{{"j", a.n}, {"mode", a.mode}, {"log10_digits", s.log10_digits}};
      j["length"] = s.exact ? json(s.exact->str()) : json(nullptr);
      j["digits"] = s.digits ? json(s.digits->str()) : json(nullptr);
      if (s.exact) j["cumulative"] = t.cumulative_length(a.n).str();
      out << j.dump(2) << '\n';
    } else if (a.log10 || !s.exact) {
      out << "log10(digits of |T_" << a.n << "|) = " << s.log10_digits << '\n';
      if (s.digits) out << "digits: " << *s.digits << '\n';
    } else {
      out << *s.exact << '\n';
    }
  }
}

struct DfaArgs {
  std::size_t len = 0;
  std::string inline_json;
  std::string file;
  std::optional<std::string> string;
};

void run_dfa(const Config& cfg, const DfaArgs& a, std::ostream& out) {
  no_csv(cfg, "dfa count");
  json j;
  try {
    if (!a.inline_json.empty()) {
      j = json::parse(a.inline_json);
    } else if (!a.file.empty()) {
      std::ifstream in(a.file);
      if (!in) throw UsageError("cannot open " + a.file);
      j = json::parse(in);
    } else {
      j = json::parse(std::cin);
    }
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("DFA JSON: ") + e.what());
  }
  const Dfa m = dfa_from_json(j);
  const BigInt c = count_accepted(m, a.len);
  std::optional<bool> unique;
  if (a.string) unique = uniquely_accepts(m, parse_bits(*a.string));
  if (cfg.fmt() == Format::json) {
    json r{{"states", m.state_count()}, {"length", a.len}, {"count", c.str()}};
    if (unique) r["uniquely_accepts"] = *unique;
    out << r.dump(2) << '\n';
  } else {
    out << c << '\n';
    if (unique) out << "uniquely_accepts: " << yes_no(*unique) << '\n';
  }
}

struct AcxArgs {
  std::string string;
  std::optional<std::size_t> max_states;
};

void run_acx(const Config& cfg, const std::string& sub, const AcxArgs& a, std::ostream& out) {
  no_csv(cfg, "acx " + sub);
  const BitString x = parse_bits(a.string);
  std::optional<ComplexityResult> r;
  std::size_t limit = 0;
  if (sub == "exact") {
    limit = a.max_states.value_or(x.size() + 2);
    r = exact_A_bounded(x, limit);
  } else {
    limit = a.max_states.value_or(4);
    r = brute_A(x, limit);
  }
  if (cfg.fmt() == Format::json) {
    json j = r ? to_json(*r) : json{{"value", nullptr}, {"max_states", limit}};
    j["string"] = x.to_text();
    out << j.dump(2) << '\n';
  } else if (r) {
    out << r->value << '\n';
  } else {
    out << "A(x) > " << limit << '\n';
  }
}

struct WitnessArgs {
  int case_id = 0;
  int n = 0;
  std::string plen = "0";
  std::string w = "1";
  std::string mode = "scaled";
  bool materialize = false;
};

void report_witness(const Config& cfg, const WitnessSpec& spec, std::optional<BigInt> quoted, bool mat,
                    std::ostream& out) {
  const DioCertificate cert = acceptance_length_equation(spec, spec.target);
  std::optional<std::pair<std::size_t, BigInt>> dfa_info;
  bool dfa_unique = false;
  if (mat) {
    const PscSequence psc({}, cfg.zone_cap);
    const TSequence scaled(TseqMode::scaled);
    const TSequence exact(TseqMode::exact);
    const BitSources src{psc, scaled, exact};
    const Dfa m = materialize(spec, src, cfg.state_cap);
    const BitString x = spell(spec, src, cfg.prefix_cap);
    dfa_info.emplace(m.state_count(), count_accepted(m, x.size()));
    dfa_unique = uniquely_accepts(m, x);
  }
  if (cfg.fmt() == Format::json) {
    json j{{"witness", to_json(spec)},
           {"state_count", spec.state_count().str()},
           {"equation", to_json(cert)},
           {"solutions", to_json(cert)["solutions"]},
           {"unique", cert.unique()}};
    if (quoted) j["quoted_bound"] = quoted->str();
    if (dfa_info) {
      j["materialized"] = {{"states", dfa_info->first},
                           {"count_accepted", dfa_info->second.str()},
                           {"uniquely_accepts", dfa_unique}};
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "name: " << spec.name << "\nstate_count: " << spec.state_count() << '\n';
  if (quoted) out << "quoted_bound: " << *quoted << '\n';
  out << "target: " << spec.target << '\n';
  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const Segment& s = spec.segments[i];
    out << (s.kind == SegmentKind::chain ? "chain " : "loop ") << render(s.label);
    if (s.kind == SegmentKind::loop) out << "  x" << s.repeats;
    if (i == spec.accept.segment) out << "  [accept at offset " << spec.accept.offset << "]";
    out << '\n';
  }
  out << "equation: " << equation_text(cert) << '\n';
  write_solutions(out, cert);
  out << "unique: " << yes_no(cert.unique()) << '\n';
  if (dfa_info) {
    out << "materialized_states: " << dfa_info->first << "\ncount_accepted: " << dfa_info->second
        << "\nuniquely_accepts: " << yes_no(dfa_unique) << '\n';
  }
}

void run_mhat(const Config& cfg, std::ostream& out) {
  no_csv(cfg, "witness mhat");
  const WitnessSpec spec = build_Mhat();
  const DioCertificate nat = acceptance_length_equation(spec, spec.target, EquationRegime::natural);
  const DioCertificate pos = acceptance_length_equation(spec, spec.target, EquationRegime::all_positive);
  const BigInt n2 = quoted_n2();
  const BigInt n1 = quoted_n1();
  const BigInt machine = spec.state_count();
  const BigInt target = spec.target;
  const Rational quoted_ratio(n2, target);
  const Rational machine_ratio(machine, target);
  const Rational bound(173, 1000);
  if (cfg.fmt() == Format::json) {
    json j{{"target", target.str()},
           {"equation", to_json(nat)},
           {"solutions", to_json(nat)["solutions"]},
           {"solutions_all_positive", to_json(pos)["solutions"]},
           {"unique", nat.unique()},
           {"n2_quoted", n2.str()},
           {"n1", n1.str()},
           {"state_count", machine.str()},
           {"n2_lt_n1", n2 < n1},
           {"ratio_quoted", to_decimal_string(quoted_ratio, 6)},
           {"ratio_lt_0173", quoted_ratio < bound},
           {"ratio_machine", to_decimal_string(machine_ratio, 6)},
           {"machine_lt_n1", machine < n1},
           {"machine_ratio_lt_quarter", machine_ratio < Rational(1, 4)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "target: " << target << "\nequation: " << equation_text(nat) << '\n';
  write_solutions(out, nat);
  out << "solutions (all >= 1):";
  for (const auto& s : pos.solutions) out << ' ' << tuple_text(s);
  out << "\nn2 (quoted): " << n2 << "\nn1: " << n1 << "\nstate_count (machine): " << machine
      << "\nn2 < n1: " << yes_no(n2 < n1) << "\nn2/|C_1..C_65|: " << to_decimal_string(quoted_ratio, 6)
      << "\nratio < 0.173: " << yes_no(quoted_ratio < bound)
      << "\nmachine ratio: " << to_decimal_string(machine_ratio, 6) << '\n';
}

void run_witness(const Config& cfg, const std::string& sub, const WitnessArgs& a, std::ostream& out) {
  if (sub == "mhat") return run_mhat(cfg, out);
  no_csv(cfg, "witness " + sub);
  if (sub == "case") {
    const BigInt p = parse_big(a.plen, "--plen");
    report_witness(cfg, build_case(a.case_id, a.n, p), quoted_case_bound(a.case_id, a.n, p), a.materialize, out);
  } else if (sub == "m1") {
    report_witness(cfg, build_M1(a.n, parse_tseq_mode(a.mode)), std::nullopt, a.materialize, out);
  } else if (sub == "m2") {
    report_witness(cfg, build_M2(a.n, parse_big(a.w, "--w"), parse_tseq_mode(a.mode)), std::nullopt, a.materialize,
                   out);
  }
}

struct DioArgs {
  std::vector<std::string> coeffs;
  std::string constant = "0";
  std::string target;
  std::vector<std::string> min_vars;
};

void run_dio(const Config& cfg, const DioArgs& a, std::ostream& out) {
  std::vector<BigInt> coeffs;
  for (const auto& c : a.coeffs) coeffs.push_back(parse_big(c, "--coeffs"));
  std::vector<BigInt> lower(coeffs.size(), 0);
  for (const auto& mv : a.min_vars) {
    const auto colon = mv.find(':');
    if (colon == std::string::npos) throw UsageError("--min-var expects i:v, got '" + mv + "'");
    const BigInt i = parse_big(mv.substr(0, colon), "--min-var index");
    if (i < 0 || i >= coeffs.size()) throw UsageError("--min-var index out of range");
    lower[static_cast<std::size_t>(i)] = parse_big(mv.substr(colon + 1), "--min-var value");
  }
  const DioCertificate cert =
      enumerate_nonneg(coeffs, parse_big(a.constant, "--const"), parse_big(a.target, "--target"), lower);
  switch (cfg.fmt()) {
    case Format::json:
      out << to_json(cert).dump(2) << '\n';
      break;
    case Format::csv:
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << "v" << i;
      out << '\n';
      for (const auto& s : cert.solutions) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
        out << '\n';
      }
      break;
    case Format::text:
      out << "equation: " << equation_text(cert) << '\n';
      write_solutions(out, cert);
      out << "unique: " << yes_no(cert.unique()) << '\n';
      break;
  }
}

struct RatesArgs {
  std::string seq = "psc";
  std::string mode = "scaled";
  std::string from = "1";
  std::string to = "100";
  std::string step = "1";
  std::string which;
  std::vector<int> n_list;
};

void run_rates(const Config& cfg, const RatesArgs& a, std::ostream& out) {
  const BigInt from = parse_big(a.from, "--from");
  const BigInt to = parse_big(a.to, "--to");
  const BigInt step = parse_big(a.step, "--step");
  if (step < 1) throw UsageError("--step must be positive");
  if (from < 0 || to < from) throw UsageError("need 0 <= --from <= --to");
  if ((to - from) / step > 1000000) throw DomainError("more than a million rate points requested");
  std::vector<BigInt> ms;
  for (BigInt m = from; m <= to; m += step) ms.push_back(m);
  const auto points = rate_profile(parse_sequence_kind(a.seq), ms, parse_tseq_mode(a.mode));
  switch (cfg.fmt()) {
    case Format::csv:
      write_rates_csv(out, points);
      break;
    case Format::json: {
      json arr = json::array();
      for (const RatePoint& p : points) {
        arr.push_back({{"m", p.m.str()},
                       {"states", p.states.str()},
                       {"bound_num", boost::multiprecision::numerator(p.bound).str()},
                       {"bound_den", boost::multiprecision::denominator(p.bound).str()},
                       {"bound_decimal", to_decimal_string(p.bound, 6)},
                       {"source", p.source}});
      }
      out << json{{"sequence", a.seq}, {"points", arr}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const RatePoint& p : points) {
        out << "m=" << p.m << "  " << to_decimal_string(p.bound, 6) << "  " << p.source << '\n';
      }
      break;
  }
}

void run_series(const Config& cfg, const RatesArgs& a, std::ostream& out) {
  const SeriesKind kind = parse_series_kind(a.which);
  const auto values = bound_series(kind, a.n_list, parse_tseq_mode(a.mode));
  switch (cfg.fmt()) {
    case Format::csv:
      out << "n,value_num,value_den,value_decimal\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << a.n_list[i] << ',' << boost::multiprecision::numerator(values[i]) << ','
            << boost::multiprecision::denominator(values[i]) << ',' << to_decimal_string(values[i], 6) << '\n';
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        arr.push_back({{"n", a.n_list[i]},
                       {"num", boost::multiprecision::numerator(values[i]).str()},
                       {"den", boost::multiprecision::denominator(values[i]).str()},
                       {"decimal", to_decimal_string(values[i], 6)}});
      }
      out << json{{"series", a.which}, {"values", arr}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << "n=" << a.n_list[i] << "  " << to_decimal_string(values[i], 6) << '\n';
      }
      break;
  }
}

// Quick end-to-end self check at desk scale.
bool run_verify(const Config& cfg, std::ostream& out) {
  no_csv(cfg, "verify");
  std::vector<std::pair<std::string, bool>> results;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      out << "error in " << name << ": " << e.what() << '\n';
    }
    results.emplace_back(name, ok);
  };

  check("debruijn orders 1..12", [] {
    for (int n = 1; n <= 12; ++n) {
      const BitString d = generate_lex_least(n).bits;
      const auto un = static_cast<std::size_t>(n);
      if (!is_debruijn(d, n) || d.substr(0, un) != BitString::zeros(un) ||
          d.substr(d.size() - un, un) != BitString::ones(un)) {
        return false;
      }
    }
    return true;
  });
  check("champernowne zones 1..10", [&] {
    const PscSequence psc({}, cfg.zone_cap);
    for (int n = 1; n <= 10; ++n) {
      if (!psc.verify_zone(n)) return false;
    }
    return true;
  });
  check("loop lemmas j = 3, 4, 5", [] {
    const PscSequence psc;
    return psc.verify_loop_lemma(3).ok() && psc.verify_loop_lemma(4).ok() && psc.verify_loop_lemma(5).ok();
  });
  check("exact search vs brute force, length <= 6", [] {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto table = brute_A_table(n, 5);
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, (r >> (n - 1 - i)) & 1);
        if (!table[r] || *table[r] != exact_A(x).value) return false;
      }
    }
    return true;
  });
  check("exact search vs brute force, sampled length 9", [&] {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 20; ++k) {
      BitString x(9);
      for (std::size_t i = 0; i < 9; ++i) x.set(i, rng() & 1);
      const auto b = brute_A(x, 4);
      const auto e = exact_A_bounded(x, 4);
      if (b.has_value() != e.has_value() || (b && b->value != e->value)) return false;
    }
    return true;
  });
  check("case machines uniquely accept", [&] {
    for (auto [id, n] : {std::pair{1, 4}, {2, 3}, {3, 6}, {4, 5}}) {
      const WitnessSpec spec = build_case(id, n, 0);
      const Dfa m = materialize(spec, default_sources(), cfg.state_cap);
      const BigInt c = count_accepted(m, static_cast<std::size_t>(spec.target));
      if (c != 1 || acceptance_length_equation(spec, spec.target).solutions.size() != 1) return false;
    }
    return true;
  });
  check("M1/M2 uniquely accept (scaled)", [&] {
    for (int n : {2, 3}) {
      for (const WitnessSpec& spec : {build_M1(n, TseqMode::scaled), build_M2(n, 1, TseqMode::scaled)}) {
        const Dfa m = materialize(spec, default_sources(), cfg.state_cap);
        if (!uniquely_accepts(m, spell(spec))) return false;
      }
    }
    return true;
  });
  check("four-loop equation has the single solution (2,3,9,13)", [] {
    const WitnessSpec spec = build_Mhat();
    const auto cert = acceptance_length_equation(spec, spec.target);
    return cert.unique() && cert.solutions[0] == std::vector<BigInt>{2, 3, 9, 13} && quoted_n2() < quoted_n1();
  });

  bool all = true;
  for (const auto& [name, ok] : results) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automatic complexity of normal and Champernowne sequences", "autoplex"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("AUTOPLEX_FORMAT");
  app.add_option("--zone-cap", cfg.zone_cap, "Largest PSC zone to materialize")
      ->check(CLI::PositiveNumber)
      ->envname("AUTOPLEX_ZONE_CAP");
  app.add_option("--state-cap", cfg.state_cap, "Largest DFA to materialize")
      ->check(CLI::PositiveNumber)
      ->envname("AUTOPLEX_STATE_CAP");
  app.add_option("--prefix-cap", cfg.prefix_cap, "Longest prefix to materialize, in bits")
      ->check(CLI::PositiveNumber)
      ->envname("AUTOPLEX_PREFIX_CAP");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->envname("AUTOPLEX_SEED");

  std::function<int()> action;

  DebruijnArgs db;
  auto* debruijn = app.add_subcommand("debruijn", "Lex-least de Bruijn string");
  debruijn->add_option("--order", db.order, "Order n")->required();
  debruijn->add_option("--start-bit", db.start_bit, "Force the first bit")->check(CLI::Range(0, 1));
  debruijn->add_option("--rotate", db.rotate, "Left rotation");
  debruijn->callback([&] { action = [&] { return run_debruijn(cfg, db, out), 0; }; });

  SeqArgs sa;
  auto* psc = app.add_subcommand("psc", "Pierce-Shields Champernowne sequence");
  psc->require_subcommand(1);
  auto psc_sub = [&](const std::string& name, const std::string& help) {
    auto* c = psc->add_subcommand(name, help);
    c->callback([&, name] { action = [&, name] { return run_psc(cfg, name, sa, out), 0; }; });
    return c;
  };
  psc_sub("zone", "Zone C_n")->add_option("--n", sa.n, "Zone order")->required();
  psc_sub("prefix", "First M bits")->add_option("--bits", sa.m, "Prefix length")->required();
  psc_sub("bit", "Single bit")->add_option("--index", sa.index, "Bit index")->required();
  psc_sub("verify", "Check the Champernowne property of C_n")->add_option("--n", sa.n, "Zone order")->required();
  psc_sub("lemma", "Scan squares in C_j")->add_option("--j", sa.n, "Zone order")->required();

  auto* tseq = app.add_subcommand("tseq", "T = d_1^f(1) d_2^f(2) ...");
  tseq->require_subcommand(1);
  auto tseq_sub = [&](const std::string& name, const std::string& help) {
    auto* c = tseq->add_subcommand(name, help);
    c->add_option("--mode", sa.mode, "scaled or exact")->check(CLI::IsMember({"scaled", "exact"}));
    c->callback([&, name] { action = [&, name] { return run_tseq(cfg, name, sa, out), 0; }; });
    return c;
  };
  tseq_sub("prefix", "First M bits")->add_option("--bits", sa.m, "Prefix length")->required();
  tseq_sub("bit", "Single bit")->add_option("--index", sa.index, "Bit index")->required();
  auto* tlen = tseq_sub("len", "Zone length |T_j|");
  tlen->add_option("--zone", sa.n, "Zone index")->required();
  tlen->add_flag("--log10", sa.log10, "Print the size of the length only");

  DfaArgs da;
  auto* dfa = app.add_subcommand("dfa", "DFA utilities");
  dfa->require_subcommand(1);
  auto* count = dfa->add_subcommand("count", "Accepted strings of one length (DFA JSON on stdin)");
  count->add_option("--len", da.len, "String length")->required();
  count->add_option("--dfa", da.inline_json, "DFA JSON instead of stdin");
  count->add_option("--file", da.file, "Read the DFA JSON from a file");
  count->add_option("--string", da.string, "Also check unique acceptance of this string");
  count->callback([&] { action = [&] { return run_dfa(cfg, da, out), 0; }; });

  AcxArgs aa;
  auto* acx = app.add_subcommand("acx", "Automatic complexity A(x)");
  acx->require_subcommand(1);
  for (const char* name : {"exact", "brute"}) {
    auto* c = acx->add_subcommand(name, std::string(name) == "exact" ? "Canonical walk search" : "Exhaustive oracle");
    c->add_option("--string", aa.string, "Binary string")->required();
    c->add_option("--max-states", aa.max_states, "Give up above this many states")->check(CLI::PositiveNumber);
    const std::string sub = name;
    c->callback([&, sub] { action = [&, sub] { return run_acx(cfg, sub, aa, out), 0; }; });
  }

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Witness automata");
  witness->require_subcommand(1);
  auto witness_sub = [&](const std::string& name, const std::string& help) {
    auto* c = witness->add_subcommand(name, help);
    c->callback([&, name] { action = [&, name] { return run_witness(cfg, name, wa, out), 0; }; });
    return c;
  };
  auto* wcase = witness_sub("case", "Two-loop machine for C_1...C_{n+1} p");
  wcase->add_option("--case", wa.case_id, "Case 1-4")->required()->check(CLI::Range(1, 4));
  wcase->add_option("--n", wa.n, "n")->required();
  wcase->add_option("--plen", wa.plen, "|p|");
  wcase->add_flag("--materialize", wa.materialize, "Build the DFA and count accepted strings");
  witness_sub("mhat", "Four-loop machine for C_1...C_65");
  for (const char* name : {"m1", "m2"}) {
    auto* c = witness_sub(name, std::string(name) == "m1" ? "Chain plus d_n loop" : "M1 plus an exit chain");
    c->add_option("--n", wa.n, "n")->required();
    c->add_option("--mode", wa.mode, "scaled or exact")->check(CLI::IsMember({"scaled", "exact"}));
    c->add_flag("--materialize", wa.materialize, "Build the DFA and count accepted strings");
    if (std::string(name) == "m2") c->add_option("--w", wa.w, "|w|")->required();
  }

  DioArgs dargs;
  auto* dio = app.add_subcommand("dio", "Linear Diophantine equations");
  dio->require_subcommand(1);
  auto* solve = dio->add_subcommand("solve", "Enumerate const + sum c_i v_i = target, v_i >= bound_i");
  solve->add_option("--coeffs", dargs.coeffs, "Positive coefficients")->required()->delimiter(',');
  solve->add_option("--const", dargs.constant, "Constant term");
  solve->add_option("--target", dargs.target, "Right-hand side")->required();
  solve->add_option("--min-var", dargs.min_vars, "Lower bound i:v (repeatable)");
  solve->callback([&] { action = [&] { return run_dio(cfg, dargs, out), 0; }; });

  RatesArgs ra;
  auto* rates = app.add_subcommand("rates", "Upper bounds on A(prefix)/(m+1)");
  rates->require_subcommand(0, 1);
  rates->add_option("--seq", ra.seq, "psc or tseq")->check(CLI::IsMember({"psc", "tseq"}));
  rates->add_option("--mode", ra.mode, "T-sequence mode")->check(CLI::IsMember({"scaled", "exact"}));
  rates->add_option("--from", ra.from, "First m");
  rates->add_option("--to", ra.to, "Last m");
  rates->add_option("--step", ra.step, "Step");
  auto* series = rates->add_subcommand("series", "Closed-form bound series");
  series->add_option("--which", ra.which, "sup1 | case3 | case1_limit | case2_limit | case4_limit | ic_quarter | m1_ratio")
      ->required();
  series->add_option("--n-list", ra.n_list, "Values of n")->required()->delimiter(',');
  series->add_option("--mode", ra.mode, "T-sequence mode")->check(CLI::IsMember({"scaled", "exact"}));
  rates->callback([&] {
    if (!action) action = [&] { return run_rates(cfg, ra, out), 0; };
  });
  series->callback([&] { action = [&] { return run_series(cfg, ra, out), 0; }; });

  auto* verify = app.add_subcommand("verify", "Quick self-check");
  verify->callback([&] { action = [&] { return run_verify(cfg, out) ? 0 : 1; }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace autoplex::cli
