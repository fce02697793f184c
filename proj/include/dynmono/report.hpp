#pragma once

// JSON forms of the analysis results. Integers that may exceed 64 bits are
// written as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "dynmono/analyzer.hpp"
#include "dynmono/dedekind.hpp"
#include "dynmono/orenewton.hpp"
#include "dynmono/pcf.hpp"
#include "dynmono/shape.hpp"
#include "dynmono/splitting.hpp"

namespace dynmono {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolName = "dynmono";
inline constexpr const char* kToolVersion = "1.0.0";

inline Json to_json(const Integer& v) { return v.get_str(); }

inline Json to_json(const Dyadic& d) { return Json{{"num", d.num().get_str()}, {"exp2", d.exp2()}}; }

inline Dyadic dyadic_from_json(const Json& j) {
  return Dyadic(Integer(j.at("num").get<std::string>()), j.at("exp2").get<unsigned long>());
}

inline Json to_json(const QuadParams& q) {
  return Json{{"b", q.b.get_str()}, {"c", q.c.get_str()}, {"poly", q.poly().to_string()}};
}

inline Json to_json(const SplittingShape& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries()) entries.push_back({{"e", e.e}, {"f", e.f}, {"count", e.count}});
  Json out;
  if (s.level()) out["level"] = *s.level();
  out["total_degree"] = s.total_degree();
  out["entries"] = entries;
  return out;
}

inline SplittingShape shape_from_json(const Json& j) {
  SplittingShape s;
  if (j.contains("level")) s.set_level(j.at("level").get<int>());
  for (const auto& e : j.at("entries")) s.add(e.at("e").get<int>(), e.at("f").get<int>(), e.at("count").get<std::uint64_t>());
  return s;
}

inline Json to_json(const TwoClass& t) {
  return Json{{"tag", std::string(to_string(t.tag))}, {"detail", t.detail}, {"ramification", t.ramification()}};
}

inline Json to_json(const CriticalOrbit& o) {
  Json values = Json::array();
  for (const auto& v : o.values) values.push_back(to_json(v));
  Json out{{"values", values}};
  out["preperiod"] = o.preperiod ? Json(*o.preperiod) : Json(nullptr);
  out["period"] = o.period ? Json(*o.period) : Json(nullptr);
  out["finite"] = o.is_finite();
  out["truncated"] = o.truncated;
  out["escaping"] = o.escaping;
  if (!o.stop_reason.empty()) out["stop_reason"] = o.stop_reason;
  return out;
}

inline Json to_json(const OddObstruction& ob) {
  Json primes = Json::array();
  for (const auto& p : ob.offending_primes) primes.push_back(p.get_str());
  Json out{{"n", ob.n}, {"odd_part", ob.odd_part.get_str()}, {"complete", ob.complete}};
  // Offending primes are UNKNOWN when the factorization is incomplete and nothing was found.
  if (!ob.complete && primes.empty()) {
    out["offending_primes"] = "UNKNOWN";
  } else {
    out["offending_primes"] = primes;
  }
  if (!ob.note.empty()) out["note"] = ob.note;
  return out;
}

inline Json to_json(const Verdict& v) {
  Json out{{"kind", std::string(to_string(v.kind))}, {"text", v.to_string()}};
  if (v.kind == VerdictKind::not_monogenic_at) {
    out["n"] = v.n;
    out["p"] = v.p.get_str();
  } else if (v.kind == VerdictKind::monogenic_to_n) {
    out["n"] = v.n;
  } else if (v.kind == VerdictKind::unknown) {
    out["reason"] = v.reason;
  }
  return out;
}

inline Json to_json(const MonogenicityReport& r) {
  Json obs = Json::array();
  for (const auto& ob : r.obstructions) obs.push_back(to_json(ob));
  Json out;
  out["params"] = to_json(r.params);
  out["disc"] = r.params.disc().get_str();
  out["N"] = r.all_levels ? Json("ALL") : Json(r.depth);
  out["stability"] = std::string(to_string(r.stability));
  out["irreducibility"] = std::string(to_string(r.irreducibility));
  out["witness_prime"] = r.witness_prime ? Json(*r.witness_prime) : Json(nullptr);
  out["two_class"] = to_json(r.two_class);
  out["pcf"] = to_json(r.orbit);
  out["obstructions"] = obs;
  out["verdict"] = to_json(r.verdict);
  out["notes"] = r.notes;
  return out;
}

inline Json to_json(const FactorBudget& b) {
  return Json{{"trial_bound", b.trial_bound}, {"rho_iterations", b.rho_iterations}, {"max_rho_bits", b.max_rho_bits}};
}

inline Json to_json(const GF2Factor& f) {
  return Json{{"poly", f.poly.to_string()}, {"degree", f.poly.degree()}, {"exponent", f.exponent}};
}

inline Json to_json(const PolygonSide& s) {
  return Json{{"start", {s.start.i, s.start.y}},
              {"end", {s.end.i, s.end.y}},
              {"slope", "-" + std::to_string(s.h()) + "/" + std::to_string(s.e())},
              {"e", s.e()},
              {"h", s.h()},
              {"degree", s.degree()}};
}

inline Json to_json(const OreReport& r) {
  Json factors = Json::array();
  for (const auto& a : r.factors) {
    Json sides = Json::array();
    for (std::size_t k = 0; k < a.polygon.sides.size(); ++k) {
      Json s = to_json(a.polygon.sides[k]);
      s["residual_polynomial"] = a.residuals[k].to_string();
      s["separable"] = a.residuals[k].is_separable();
      sides.push_back(s);
    }
    Json vals = Json::array();
    for (const auto& v : a.development.valuations) vals.push_back(v ? Json(*v) : Json("inf"));
    factors.push_back({{"phi", a.phi.to_string()},
                       {"multiplicity", a.multiplicity},
                       {"valuations", vals},
                       {"sides", sides},
                       {"lattice_count", a.lattice_count},
                       {"regular", a.regular}});
  }
  Json out{{"p", r.p},
           {"factors", factors},
           {"index_lower_bound", r.index_lower_bound},
           {"exact", r.exact},
           {"p_maximal", r.p_maximal}};
  out["shape"] = r.shape ? to_json(*r.shape) : Json(nullptr);
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

inline Json to_json(const FamilyVerdict& v) {
  Json out;
  out["monogenic_all_n"] = v.monogenic_all_n ? Json(*v.monogenic_all_n) : Json("UNKNOWN");
  out["reasons"] = v.reasons;
  return out;
}

inline Json to_json(const FamilyScanRow& r) {
  Json out{{"a", r.param.a.get_str()}, {"params", to_json(r.param.params())}};
  out["verdict"] = to_json(r.verdict);
  out["reducible"] = r.reducible;
  out["analyzer"] = r.analyzer_verdict;
  out["oracle"] = r.oracle_detail;
  out["orbit_matches"] = r.orbit_matches;
  out["consistent"] = r.consistent;
  return out;
}

inline Json to_json(const CheckItem& c) {
  return Json{{"suite", c.suite},
              {"name", c.name},
              {"status", c.informational ? "info" : (c.passed ? "pass" : "fail")},
              {"detail", c.detail}};
}

// Envelope shared by every command.
struct ReportDocument {
  std::string command;
  Json args = Json::object();
  Json result = Json::object();
  Json error = nullptr;
  Json provenance = Json::object();

  Json to_json() const {
    Json out{{"schema_version", kSchemaVersion}, {"command", command}, {"args", args}};
    if (error.is_null()) {
      out["result"] = result;
    } else {
      out["error"] = error;
    }
    out["provenance"] = provenance;
    return out;
  }

  static ReportDocument from_json(const Json& j) {
    if (j.at("schema_version").get<std::string>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    ReportDocument d;
    d.command = j.at("command").get<std::string>();
    d.args = j.at("args");
    if (j.contains("result")) d.result = j.at("result");
    if (j.contains("error")) d.error = j.at("error");
    d.provenance = j.at("provenance");
    return d;
  }

  friend bool operator==(const ReportDocument& a, const ReportDocument& b) {
    return a.to_json() == b.to_json();
  }
};

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

inline void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        out += pad + k + ": " + scalar_text(v) + "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar_text(x);
        out += pad + k + ": [" + line + "]\n";
      } else {
        out += pad + k + ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out += pad + "- " + scalar_text(v) + "\n";
      } else {
        std::string inner;
        render(v, indent + 2, inner);
        inner.replace(static_cast<std::size_t>(indent), 2, "- ");
        out += inner;
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace detail

// Text form: the same document, laid out as indented key/value lines.
inline std::string render_text(const Json& doc) {
  std::string out;
  detail::render(doc, 0, out);
  return out;
}

}  // namespace dynmono
