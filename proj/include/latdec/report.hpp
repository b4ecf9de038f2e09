#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "latdec/act.hpp"
#include "latdec/allais.hpp"
#include "latdec/lottery.hpp"
#include "latdec/oracle.hpp"
#include "latdec/problem.hpp"

namespace latdec {

/// Optional rounded-decimal annotation for printed rationals. Exact values
/// are always printed; the decimal is an explicitly marked extra.
struct DecimalOpt {
  std::optional<unsigned> digits;
};

inline std::string fmt_rat(const Rat& r, const DecimalOpt& opt) {
  std::string out = to_string(r);
  if (opt.digits && denominator(r) != 1)
    out += " (~" + to_decimal_string(r, *opt.digits) + ", rounded)";
  return out;
}

namespace detail {

inline std::string verdict_text(const RelationOutcome& o) {
  switch (o.verdict) {
    case Verdict::holds:
      return "yes";
    case Verdict::fails:
      return o.note.empty() ? "no" : "no (" + o.note + ")";
    default:
      return "undecided (" + o.note + ")";
  }
}

inline nlohmann::json verdict_json(const RelationOutcome& o) {
  nlohmann::json j;
  j["verdict"] = o.verdict == Verdict::holds ? "holds" : o.verdict == Verdict::fails ? "fails" : "undecided";
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

}  // namespace detail

inline std::string render_comparison(const std::string& left, const std::string& right,
                                     const Act& a, const Act& b, const ComparisonResult& r,
                                     const DecimalOpt& opt = {}) {
  std::ostringstream os;
  os << "act " << left << " on " << a.domain().to_string() << ": " << a.to_string() << "\n";
  os << "act " << right << " on " << b.domain().to_string() << ": " << b.to_string() << "\n";
  os << "exp(" << left << ") = " << fmt_rat(r.exp_left, opt) << "\n";
  os << "exp(" << right << ") = " << fmt_rat(r.exp_right, opt) << "\n";
  auto line = [&](const std::string& rel, const RelationOutcome& lr, const RelationOutcome& rl) {
    os << left << " " << rel << " " << right << ": " << detail::verdict_text(lr) << "\n";
    os << right << " " << rel << " " << left << ": " << detail::verdict_text(rl) << "\n";
  };
  line("<=_E", r.dominance_lr, r.dominance_rl);
  line("<=_exp", r.exp_order_lr, r.exp_order_rl);
  line("<=_v", r.valuation_order_lr, r.valuation_order_rl);
  line("<=_meet", r.meet_order_lr, r.meet_order_rl);
  line("<=_join", r.join_order_lr, r.join_order_rl);
  return os.str();
}

inline nlohmann::json comparison_to_json(const std::string& left, const std::string& right,
                                         const Act& a, const Act& b, const ComparisonResult& r) {
  nlohmann::json j;
  j["left"] = {{"name", left}, {"partition", a.domain().to_string()}, {"act", a.to_string()}};
  j["right"] = {{"name", right}, {"partition", b.domain().to_string()}, {"act", b.to_string()}};
  j["exp"] = {{left, to_string(r.exp_left)}, {right, to_string(r.exp_right)}};
  j["same_domain"] = r.same_domain;
  auto pair = [&](const RelationOutcome& lr, const RelationOutcome& rl) {
    return nlohmann::json{{"left_right", detail::verdict_json(lr)}, {"right_left", detail::verdict_json(rl)}};
  };
  j["dominance"] = pair(r.dominance_lr, r.dominance_rl);
  j["expected"] = pair(r.exp_order_lr, r.exp_order_rl);
  j["valuation"] = pair(r.valuation_order_lr, r.valuation_order_rl);
  j["meet_comparison"] = pair(r.meet_order_lr, r.meet_order_rl);
  j["join_comparison"] = pair(r.join_order_lr, r.join_order_rl);
  return j;
}

inline std::string render_allais(const AllaisInstance& inst, const DecimalOpt& opt = {}) {
  std::ostringstream os;
  const AllaisThresholds t = allais_thresholds(inst.x, inst.y);
  os << "stakes: x = " << to_string(inst.x) << ", y = " << to_string(inst.y) << "\n";
  os << "conditions " << inst.conditions.to_string() << " with chances 1/100, 1/10, 89/100\n";
  auto row = [&](const char* name, const Act& act) {
    os << name << ": " << act.to_string() << "\n";
    os << "  exp = " << fmt_rat(expected_value(act, inst.chances), opt)
       << ", intrinsic = " << fmt_rat(intrinsic_exp(act, inst.chances), opt) << "\n";
  };
  row("option_1a", inst.option_1a);
  row("option_1b", inst.option_1b);
  row("option_2a", inst.option_2a);
  row("option_2b", inst.option_2b);
  os << "expected value prefers 1b over 1a iff y > 11/10 * x = " << fmt_rat(t.exp_bound, opt) << ": "
     << (t.exp_prefers_risky ? "yes" : "no") << "\n";
  os << "intrinsic value prefers 1a over 1b iff y > 167/70 * x = " << fmt_rat(t.intrinsic_bound, opt)
     << ": " << (t.intrinsic_prefers_sure ? "yes" : "no") << "\n";
  os << "intrinsic value always prefers 2b over 2a\n";
  os << "paradox pattern (expected picks 1b, intrinsic picks 1a): "
     << (t.paradox_pattern ? "yes" : "no") << "\n";
  return os.str();
}

inline nlohmann::json allais_to_json(const AllaisInstance& inst) {
  const AllaisThresholds t = allais_thresholds(inst.x, inst.y);
  nlohmann::json j;
  j["x"] = to_string(inst.x);
  j["y"] = to_string(inst.y);
  auto row = [&](const Act& act) {
    return nlohmann::json{{"act", act.to_string()},
                          {"exp", to_string(expected_value(act, inst.chances))},
                          {"intrinsic", to_string(intrinsic_exp(act, inst.chances))}};
  };
  j["option_1a"] = row(inst.option_1a);
  j["option_1b"] = row(inst.option_1b);
  j["option_2a"] = row(inst.option_2a);
  j["option_2b"] = row(inst.option_2b);
  j["exp_bound"] = to_string(t.exp_bound);
  j["intrinsic_bound"] = to_string(t.intrinsic_bound);
  j["exp_prefers_risky"] = t.exp_prefers_risky;
  j["intrinsic_prefers_sure"] = t.intrinsic_prefers_sure;
  j["paradox_pattern"] = t.paradox_pattern;
  return j;
}

inline std::string render_document_summary(const ProblemDocument& doc) {
  std::ostringstream os;
  os << "lattice: " << doc.lattice.size() << " elements over " << doc.lattice.point_count()
     << (doc.lattice.is_boolean() ? " atoms (Boolean)" : " poset points") << "\n";
  os << "valuations: " << doc.valuations.size() << ", partitions: " << doc.partitions.size()
     << ", acts: " << doc.acts.size() << ", lotteries: " << doc.lotteries.size() << "\n";
  for (const auto& [name, v] : doc.valuations)
    os << "  valuation " << name << ":" << (v.bounded() ? " bounded" : "") << (v.additive() ? " additive" : "")
       << (v.strictly_isotone() ? " strictly isotone" : v.isotone() ? " isotone" : "") << "\n";
  for (const auto& [name, p] : doc.partitions) os << "  partition " << name << " = " << p.to_string() << "\n";
  for (const auto& [name, a] : doc.acts)
    os << "  act " << name << " on " << a.domain().to_string() << " = " << a.to_string() << "\n";
  for (const auto& [name, l] : doc.lotteries) os << "  lottery " << name << " = " << l.to_string() << "\n";
  return os.str();
}

inline std::string render_bundle(const ActBundle& bundle, const DecimalOpt& opt = {}) {
  std::ostringstream os;
  os << "lattice: Boolean over " << bundle.lattice.point_count() << " atoms\n";
  os << "partition: " << bundle.partition.to_string() << "\n";
  os << "act: " << bundle.act.to_string() << "\n";
  os << "weights:";
  for (const Element& atom : bundle.lattice.atoms())
    os << " " << bundle.lattice.name(atom) << "=" << to_string(bundle.valuation.value(atom));
  os << "\n";
  os << "exp = " << fmt_rat(expected_value(bundle.act, bundle.valuation), opt) << "\n";
  return os.str();
}

inline std::string render_witness(const NontransitivityWitness& w, const Valuation& v) {
  std::ostringstream os;
  os << "first  on " << w.first.domain().to_string() << ": " << w.first.to_string() << "\n";
  os << "second on " << w.second.domain().to_string() << ": " << w.second.to_string() << "\n";
  os << "third  on " << w.third.domain().to_string() << ": " << w.third.to_string() << "\n";
  os << "first <=_join second: " << (leq_join(w.first, w.second, v) ? "yes" : "no") << "\n";
  os << "second <=_join third: " << (leq_join(w.second, w.third, v) ? "yes" : "no") << "\n";
  os << "first <=_join third: " << (leq_join(w.first, w.third, v) ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace latdec
