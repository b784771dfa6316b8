#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "desir/extension.hpp"
#include "desir/gamble.hpp"

namespace desir {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "desir/1";

Json rational_to_json(const Rational& r);
/// Accepts rational strings ("-3/4") and JSON integers.
Rational rational_from_json(const Json& j);

Json gamble_to_json(const Gamble& g);
Gamble gamble_from_json(const Json& j, std::size_t dim);

Json set_to_json(const GambleSet& s);

/// {"generators","target","lambdas","remainder"}: a self-contained cone
/// membership claim that `verify_certificates` can re-check.
Json certificate_to_json(std::span<const Gamble> generators, const Gamble& target, const Certificate& cert);

/// {"answer", "certificates", "mode", "witness_list", "miss"?}.
Json ext_answer_to_json(const ExtAnswer& answer, const GambleSet& b, Regularity mode);

struct VerifyReport {
    std::size_t verified = 0;
    std::vector<std::string> failures;
};

/// Walks any JSON document, re-validating every certificate object found.
/// The document's top-level "mode" selects the validity predicate.
VerifyReport verify_certificates(const Json& document);

struct InstanceQuery {
    std::string kind;
    std::optional<GambleSet> set;
    std::optional<std::vector<Gamble>> generators;
    std::optional<Gamble> gamble;
    std::vector<std::vector<Gamble>> sequences;
};

struct Instance {
    PossibilitySpace omega = PossibilitySpace::with_size(1);
    std::map<std::string, Gamble> gambles;
    Assessment assessment{1};
    InstanceQuery query;
};

/// Parses the instance file format. Throws InputError on a wrong schema tag,
/// unknown names or malformed numbers, DimensionError on wrong lengths.
Instance parse_instance(const Json& j);
Instance load_instance(const std::string& path);

/// Serializes a generated instance with gambles named g0, g1, ... and an
/// in-ext query on the generated set.
Json instance_to_json(const Assessment& a, const GambleSet& b);

} // namespace desir
