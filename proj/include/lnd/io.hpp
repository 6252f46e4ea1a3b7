#ifndef LND_IO_HPP
#define LND_IO_HPP

// File formats: derivation JSON and verification-report JSON.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lnd/derivation.hpp"
#include "lnd/paperlab.hpp"
#include "lnd/parse.hpp"

namespace lnd {

using json = nlohmann::json;

class FormatError : public Error {
 public:
  using Error::Error;
};

/// Reads
///   { "ring": { "vars": [...], "weights": [...] },
///     "derivation": { "<var>": "<polynomial>", ... } }
/// Variables missing from "derivation" map to 0; "weights" is optional.
inline Derivation derivation_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ring") || !doc["ring"].is_object())
    throw FormatError("derivation file needs a \"ring\" object");
  const json& r = doc["ring"];
  if (!r.contains("vars") || !r["vars"].is_array()) throw FormatError("ring needs a \"vars\" array");
  std::vector<std::string> vars;
  for (const auto& v : r["vars"]) {
    if (!v.is_string()) throw FormatError("ring variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  std::optional<std::vector<std::int64_t>> weights;
  if (r.contains("weights") && !r["weights"].is_null()) {
    if (!r["weights"].is_array()) throw FormatError("\"weights\" must be an array");
    weights.emplace();
    for (const auto& w : r["weights"]) {
      if (!w.is_number_integer()) throw FormatError("weights must be integers");
      weights->push_back(w.get<std::int64_t>());
    }
  }
  const Ring ring(std::move(vars), std::move(weights));
  std::vector<Polynomial> images(ring.size(), Polynomial(ring));
  if (doc.contains("derivation")) {
    const json& d = doc["derivation"];
    if (!d.is_object()) throw FormatError("\"derivation\" must be an object");
    for (auto it = d.begin(); it != d.end(); ++it) {
      const std::size_t i = ring.index_of(it.key());
      if (!it.value().is_string()) throw FormatError("image of '" + it.key() + "' must be a polynomial string");
      try {
        images[i] = parse_polynomial(it.value().get<std::string>(), ring);
      } catch (const ParseUnknownVariable& e) {
        throw UnknownVariable(e.name());
      }
    }
  }
  return Derivation(ring, std::move(images));
}

inline json derivation_to_json(const Derivation& d) {
  json ring{{"vars", d.ring().variables()}};
  if (d.ring().graded()) ring["weights"] = *d.ring().weights();
  json images = json::object();
  for (std::size_t i = 0; i < d.ring().size(); ++i)
    if (!d.image(i).is_zero()) images[d.ring().name(i)] = print_canonical(d.image(i));
  return json{{"ring", ring}, {"derivation", images}};
}

/// A derivation together with the slice it is usually localized with.
struct NamedDerivation {
  Derivation derivation;
  std::optional<LaurentElement> slice;
};

/// `builtin:D`, `builtin:Delta`, `builtin:DeltaPrime`, or a path to a JSON
/// derivation file.
inline NamedDerivation load_derivation(const std::string& source) {
  static const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    const PaperContext ctx = builtin_context();
    if (name == "D") return {ctx.D, ctx.slice_D};
    if (name == "Delta") return {ctx.Delta, ctx.slice_Delta};
    if (name == "DeltaPrime") return {ctx.DeltaPrime, ctx.slice_DeltaPrime};
    throw InvalidArgument("unknown builtin derivation '" + name + "' (expected D, Delta or DeltaPrime)");
  }
  std::ifstream in(source);
  if (!in) throw InvalidArgument("cannot open derivation file '" + source + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON in '") + source + "': " + e.what());
  }
  return {derivation_from_json(doc), std::nullopt};
}

inline json report_to_json(const VerificationReport& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back(json{{"name", c.name}, {"status", c.passed ? "ok" : "FAIL"}, {"witness", c.witness}});
  return out;
}

}  // namespace lnd

#endif  // LND_IO_HPP
