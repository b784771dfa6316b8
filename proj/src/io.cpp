#include "desir/io.hpp"

#include <fstream>

#include "desir/error.hpp"

namespace desir {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    throw InputError("expected a rational string or an integer, got " + j.dump());
}

Json gamble_to_json(const Gamble& g) {
    Json out = Json::array();
    for (const auto& v : g.values()) {
        out.push_back(rational_to_json(v));
    }
    return out;
}

Gamble gamble_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) {
        throw InputError("a gamble must be an array, got " + j.dump());
    }
    if (j.size() != dim) {
        throw DimensionError("gamble " + j.dump() + " has " + std::to_string(j.size()) + " values, expected " +
                             std::to_string(dim));
    }
    std::vector<Rational> values;
    for (const auto& v : j) {
        values.push_back(rational_from_json(v));
    }
    return Gamble(std::move(values));
}

Json set_to_json(const GambleSet& s) {
    Json out = Json::array();
    for (const auto& g : s) {
        out.push_back(gamble_to_json(g));
    }
    return out;
}

Json certificate_to_json(std::span<const Gamble> generators, const Gamble& target, const Certificate& cert) {
    Json gens = Json::array();
    for (const auto& g : generators) {
        gens.push_back(gamble_to_json(g));
    }
    Json lambdas = Json::array();
    for (const auto& l : cert.lambdas) {
        lambdas.push_back(rational_to_json(l));
    }
    return Json{{"generators", gens},
                {"target", gamble_to_json(target)},
                {"lambdas", lambdas},
                {"remainder", gamble_to_json(cert.remainder)}};
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Skip: return "skip";
    case Verdict::Hit: return "hit";
    case Verdict::Miss: return "miss";
    }
    return "miss";
}

std::vector<Gamble> chosen(const ExtAnswer& answer, const SequenceEvidence& ev) {
    std::vector<Gamble> seq;
    for (std::size_t k = 0; k < ev.choice.size(); ++k) {
        seq.push_back(answer.witness_list[k][ev.choice[k]]);
    }
    return seq;
}

Json sequence_json(const std::vector<Gamble>& seq) {
    Json out = Json::array();
    for (const auto& g : seq) {
        out.push_back(gamble_to_json(g));
    }
    return out;
}

} // namespace

Json ext_answer_to_json(const ExtAnswer& answer, const GambleSet& b, Regularity mode) {
    Json out;
    out["answer"] = answer.member;
    out["mode"] = mode == Regularity::Strict ? "strict" : "weak";
    Json witness = Json::array();
    for (const auto& s : answer.witness_list) {
        witness.push_back(set_to_json(s));
    }
    out["witness_list"] = witness;
    Json certs = Json::array();
    if (answer.direct_hit) {
        const Gamble& f = b[*answer.direct_hit];
        Json c = certificate_to_json({}, f, Certificate{{}, f});
        c["verdict"] = "direct";
        certs.push_back(c);
    }
    const Gamble zero = Gamble::zero(b.dim());
    for (const auto& ev : answer.per_sequence) {
        const auto seq = chosen(answer, ev);
        if (ev.verdict == Verdict::Miss) {
            out["miss"] = Json{{"sequence", sequence_json(seq)}};
            continue;
        }
        const Gamble& target = ev.verdict == Verdict::Hit ? b[*ev.hit] : zero;
        Json c = certificate_to_json(ev.generators, target, *ev.certificate);
        c["verdict"] = verdict_name(ev.verdict);
        c["sequence"] = sequence_json(seq);
        certs.push_back(c);
    }
    out["certificates"] = certs;
    return out;
}

namespace {

bool is_certificate(const Json& j) {
    return j.is_object() && j.contains("generators") && j.contains("target") && j.contains("lambdas") &&
           j.contains("remainder");
}

void walk(const Json& j, Regularity mode, const std::string& path, VerifyReport& report) {
    if (is_certificate(j)) {
        try {
            const Json& target = j.at("target");
            const std::size_t dim = target.size();
            std::vector<Gamble> gens;
            for (const auto& g : j.at("generators")) {
                gens.push_back(gamble_from_json(g, dim));
            }
            Certificate cert{{}, gamble_from_json(j.at("remainder"), dim)};
            for (const auto& l : j.at("lambdas")) {
                cert.lambdas.push_back(rational_from_json(l));
            }
            if (cert.lambdas.size() != gens.size() ||
                !verify_certificate(gens, gamble_from_json(target, dim), cert, mode)) {
                report.failures.push_back(path + ": certificate does not reconstruct its target");
            } else {
                ++report.verified;
            }
        } catch (const std::exception& e) {
            report.failures.push_back(path + ": " + e.what());
        }
        return;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            walk(value, mode, path + "/" + key, report);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            walk(j[i], mode, path + "/" + std::to_string(i), report);
        }
    }
}

} // namespace

VerifyReport verify_certificates(const Json& document) {
    Regularity mode = Regularity::Weak;
    if (document.is_object() && document.contains("mode") && document["mode"] == "strict") {
        mode = Regularity::Strict;
    }
    VerifyReport report;
    walk(document, mode, "", report);
    return report;
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(where + " is missing \"" + key + "\"");
    }
    return j.at(key);
}

Gamble resolve(const Instance& inst, const Json& ref) {
    if (ref.is_string()) {
        const auto name = ref.get<std::string>();
        auto it = inst.gambles.find(name);
        if (it == inst.gambles.end()) {
            throw InputError("unknown gamble name \"" + name + "\"");
        }
        return it->second;
    }
    return gamble_from_json(ref, inst.omega.size());
}

std::vector<Gamble> resolve_list(const Instance& inst, const Json& refs, const std::string& where) {
    if (!refs.is_array()) {
        throw InputError(where + " must be an array");
    }
    std::vector<Gamble> out;
    for (const auto& r : refs) {
        out.push_back(resolve(inst, r));
    }
    return out;
}

} // namespace

Instance parse_instance(const Json& j) {
    if (!j.is_object()) {
        throw InputError("instance must be a JSON object");
    }
    if (j.contains("schema") && j["schema"] != kSchema) {
        throw InputError("unsupported schema " + j["schema"].dump() + ", expected \"" + kSchema + "\"");
    }
    Instance inst;
    const Json& omega = require(j, "omega", "instance");
    if (!omega.is_array()) {
        throw InputError("\"omega\" must be an array of labels");
    }
    std::vector<std::string> labels;
    for (const auto& l : omega) {
        if (!l.is_string()) {
            throw InputError("omega labels must be strings");
        }
        labels.push_back(l.get<std::string>());
    }
    inst.omega = PossibilitySpace(std::move(labels));
    const std::size_t dim = inst.omega.size();
    if (j.contains("gambles")) {
        if (!j["gambles"].is_object()) {
            throw InputError("\"gambles\" must map names to value arrays");
        }
        for (const auto& [name, values] : j["gambles"].items()) {
            inst.gambles.emplace(name, gamble_from_json(values, dim));
        }
    }
    std::vector<GambleSet> sets;
    if (j.contains("assessment")) {
        if (!j["assessment"].is_array()) {
            throw InputError("\"assessment\" must be a list of sets");
        }
        for (const auto& s : j["assessment"]) {
            sets.emplace_back(dim, resolve_list(inst, s, "an assessment set"));
        }
    }
    inst.assessment = Assessment(dim, std::move(sets));
    if (j.contains("query")) {
        const Json& q = j["query"];
        if (!q.is_object()) {
            throw InputError("\"query\" must be an object");
        }
        if (q.contains("kind")) {
            inst.query.kind = q["kind"].get<std::string>();
        }
        if (q.contains("set")) {
            inst.query.set = GambleSet(dim, resolve_list(inst, q["set"], "query.set"));
        }
        if (q.contains("generators")) {
            inst.query.generators = resolve_list(inst, q["generators"], "query.generators");
        }
        if (q.contains("gamble")) {
            inst.query.gamble = resolve(inst, q["gamble"]);
        }
        if (q.contains("sequences")) {
            for (const auto& s : q["sequences"]) {
                inst.query.sequences.push_back(resolve_list(inst, s, "query.sequences"));
            }
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open instance file " + path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return parse_instance(j);
}

Json instance_to_json(const Assessment& a, const GambleSet& b) {
    const auto space = PossibilitySpace::with_size(a.dim());
    Json gambles = Json::object();
    Json assessment = Json::array();
    std::map<Gamble, std::string> names;
    auto name_of = [&](const Gamble& g, const std::string& prefix) {
        auto it = names.find(g);
        if (it != names.end()) {
            return it->second;
        }
        std::string name = prefix + std::to_string(names.size());
        names.emplace(g, name);
        gambles[name] = gamble_to_json(g);
        return name;
    };
    for (const auto& s : a.sets()) {
        Json names_json = Json::array();
        for (const auto& g : s) {
            names_json.push_back(name_of(g, "g"));
        }
        assessment.push_back(names_json);
    }
    Json query_set = Json::array();
    for (const auto& g : b) {
        query_set.push_back(name_of(g, "g"));
    }
    return Json{{"schema", kSchema},
                {"omega", space.labels()},
                {"gambles", gambles},
                {"assessment", assessment},
                {"query", Json{{"kind", "in-ext"}, {"set", query_set}}}};
}

} // namespace desir
