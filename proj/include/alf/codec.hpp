#pragma once

// JSON encodings of samples, verdicts, outcomes and traces.
//
//   Point    [x0, x1, ...]
//   PN       {"P": [...], "N": [...]}
//   ICE      {"P": [...], "N": [...], "I": [[from, to], ...]}
//   Grounded {"V": [...]}
//   Verdict  "accept" | {"feedback": sample}
//
// Hypotheses are strings produced by the per-domain printers.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "alf/core.hpp"
#include "alf/samples.hpp"

namespace alf {

using Json = nlohmann::json;

/// Malformed document; `path` is a JSON-pointer-like location.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string path, const std::string& reason)
      : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json to_json(const Point& p);
Json to_json(const PNSample& s);
Json to_json(const ICESample& s);
Json to_json(const GroundedSample& s);

/// A bare integer is accepted as a 1-D point.
Point point_from_json(const Json& j, const std::string& path);
PNSample pn_from_json(const Json& j, const std::string& path);
ICESample ice_from_json(const Json& j, const std::string& path);
GroundedSample grounded_from_json(const Json& j, const std::string& path);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

template <class S>
Json verdict_to_json(const Verdict<S>& v) {
  if (const auto* fb = std::get_if<Feedback<S>>(&v)) return Json{{"feedback", to_json(fb->sample)}};
  return "accept";
}

template <class H>
using HypPrinter = std::function<std::string(const H&)>;

/// Status strings: converged, unrealizable, budget-exhausted, cap-exhausted.
template <class H>
Json outcome_to_json(const RunOutcome<H>& o, const HypPrinter<H>& print) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Converged<H>>) {
          return {{"status", "converged"}, {"rounds", v.rounds}, {"hypothesis", print(v.hypothesis)}};
        } else if constexpr (std::is_same_v<T, UnrealizableAt>) {
          return {{"status", "unrealizable"}, {"rounds", v.rounds}};
        } else if constexpr (std::is_same_v<T, BudgetExhausted>) {
          return {{"status", "budget-exhausted"}, {"budget", v.budget}};
        } else {
          return {{"status", "cap-exhausted"}, {"rounds", v.rounds}, {"cap", to_string(v.cap)}};
        }
      },
      o);
}

template <class S, class H>
Json rounds_to_json(const Trace<S, H>& t, const HypPrinter<H>& print) {
  Json rounds = Json::array();
  for (const auto& st : t.steps) {
    rounds.push_back({{"round", st.round},
                      {"sample", to_json(st.sample)},
                      {"hypothesis", print(st.hypothesis)},
                      {"verdict", verdict_to_json(st.verdict)}});
  }
  return rounds;
}

/// Decodes the `rounds` array of a trace document. The outcome is not
/// decoded; callers compare it as JSON.
template <class S, class H>
Trace<S, H> trace_from_json(const Json& doc,
                            const std::function<S(const Json&, const std::string&)>& sample,
                            const std::function<H(const std::string&)>& hypothesis) {
  if (!doc.is_object() || !doc.contains("rounds") || !doc["rounds"].is_array()) {
    throw DecodeError("/rounds", "missing or not an array");
  }
  Trace<S, H> t;
  const auto& rounds = doc["rounds"];
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const std::string at = "/rounds/" + std::to_string(i);
    const auto& r = rounds[i];
    if (!r.is_object()) throw DecodeError(at, "not an object");
    for (const char* key : {"round", "sample", "hypothesis", "verdict"}) {
      if (!r.contains(key)) throw DecodeError(at + "/" + key, "missing");
    }
    if (!r["round"].is_number_unsigned()) throw DecodeError(at + "/round", "not a natural");
    if (!r["hypothesis"].is_string()) throw DecodeError(at + "/hypothesis", "not a string");
    Step<S, H> st{r["round"].get<std::size_t>(), sample(r["sample"], at + "/sample"),
                  hypothesis(r["hypothesis"].get<std::string>()), Accept{}};
    const auto& v = r["verdict"];
    if (v.is_object() && v.contains("feedback")) {
      st.verdict = Feedback<S>{sample(v["feedback"], at + "/verdict/feedback")};
    } else if (v != "accept") {
      throw DecodeError(at + "/verdict", "expected \"accept\" or {\"feedback\": ...}");
    }
    t.steps.push_back(std::move(st));
  }
  return t;
}

}  // namespace alf
