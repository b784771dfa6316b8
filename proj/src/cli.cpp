#include "desir/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "desir/error.hpp"
#include "desir/formulations.hpp"
#include "desir/io.hpp"
#include "desir/oracle.hpp"
#include "desir/render.hpp"
#include "desir/representation.hpp"

namespace desir {

namespace {

struct Flags {
    bool strict = false;
    std::uint64_t cap = 1'000'000;
    std::uint64_t seed = 0;
    std::string file;
    std::string output;
    std::string verify;
    std::size_t omega = 2;
    std::size_t sets = 2;
    std::size_t size = 2;
    std::int64_t range = 2;
    std::size_t count = 50;
};

Regularity mode_of(const Flags& f) { return f.strict ? Regularity::Strict : Regularity::Weak; }

ClosureOptions options_of(const Flags& f) {
    ClosureOptions o;
    o.regularity = mode_of(f);
    o.max_sequences = f.cap;
    return o;
}

const char* mode_name(Regularity m) { return m == Regularity::Strict ? "strict" : "weak"; }

const GambleSet& need_set(const Instance& inst) {
    if (!inst.query.set) {
        throw InputError("instance has no query.set");
    }
    return *inst.query.set;
}

ConeGenerators need_generators(const Instance& inst) {
    if (!inst.query.generators) {
        throw InputError("instance has no query.generators");
    }
    return ConeGenerators(inst.omega.size(), *inst.query.generators);
}

void reject_strict(const Flags& f, const std::string& command) {
    if (f.strict) {
        throw InputError(command + " has no regularity mode; drop --strict");
    }
}

Json cmd_consistency(const Flags& f) {
    const Instance inst = load_instance(f.file);
    const GambleSet empty(inst.omega.size());
    const ExtAnswer ans = ext_contains(inst.assessment, empty, options_of(f));
    Json out = ext_answer_to_json(ans, empty, mode_of(f));
    out["answer"] = !ans.member;
    return out;
}

Json cmd_in_ext(const Flags& f) {
    const Instance inst = load_instance(f.file);
    const GambleSet& b = need_set(inst);
    return ext_answer_to_json(ext_contains(inst.assessment, b, options_of(f)), b, mode_of(f));
}

Json cmd_in_desext(const Flags& f) {
    const Instance inst = load_instance(f.file);
    const ConeGenerators e = need_generators(inst);
    if (!inst.query.gamble) {
        throw InputError("instance has no query.gamble");
    }
    const Gamble& g = *inst.query.gamble;
    const auto cert = cone_contains(e, g, mode_of(f));
    Json out{{"answer", cert.has_value()}, {"mode", mode_name(mode_of(f))}, {"certificates", Json::array()}};
    if (cert) {
        out["certificates"].push_back(certificate_to_json(e.generators(), g, *cert));
    }
    return out;
}

Json cmd_zero(const Flags& f, bool report_coherence) {
    const Instance inst = load_instance(f.file);
    const ConeGenerators e = need_generators(inst);
    const auto cert = zero_in_cone(e, mode_of(f));
    Json out{{"answer", report_coherence ? !cert.has_value() : cert.has_value()},
             {"mode", mode_name(mode_of(f))},
             {"certificates", Json::array()}};
    if (cert) {
        out["certificates"].push_back(certificate_to_json(e.generators(), Gamble::zero(e.dim()), *cert));
        if (!report_coherence) {
            Json lambdas = Json::array();
            for (const auto& l : cert->lambdas) {
                lambdas.push_back(rational_to_json(l));
            }
            out["lambdas"] = lambdas;
        }
    }
    return out;
}

Json cmd_equiv(const Flags& f) {
    reject_strict(f, "equiv");
    const Instance inst = load_instance(f.file);
    const GambleSet& b = need_set(inst);
    const ExtAnswer natext = ext_contains(inst.assessment, b, options_of(f));
    const ExtAnswer decadt = ext_contains_decadt(inst.assessment, b);
    const ExtAnswer dbdc = ext_contains_dbdc(inst.assessment, b);
    const bool agree = natext.member == decadt.member && decadt.member == dbdc.member;
    return Json{{"answer", agree},
                {"mode", "weak"},
                {"natext", ext_answer_to_json(natext, b, Regularity::Weak)},
                {"decadt", ext_answer_to_json(decadt, b, Regularity::Weak)},
                {"dbdc", ext_answer_to_json(dbdc, b, Regularity::Weak)}};
}

Json cmd_repr(const Flags& f) {
    reject_strict(f, "repr");
    const Instance inst = load_instance(f.file);
    const GambleSet& b = need_set(inst);
    if (inst.assessment.empty()) {
        throw InputError("repr needs a nonempty assessment");
    }
    if (!is_consistent(inst.assessment, options_of(f))) {
        throw InconsistentAssessment("the assessment is inconsistent; no family of coherent sets represents it");
    }
    const FamilyAnswer fam = k_family_answer(DFamilySpec{inst.assessment.sets()}, b, f.cap);
    const bool ext = ext_contains(inst.assessment, b, options_of(f)).member;
    Json witnesses = Json::array();
    for (const auto& w : fam.witnesses) {
        Json seq = Json::array();
        for (const auto& g : w.sequence) {
            seq.push_back(gamble_to_json(g));
        }
        Json entry{{"sequence", seq}, {"inconsistent", w.inconsistent}};
        if (w.certificate) {
            entry["certificate"] = certificate_to_json(w.sequence, b[*w.hit], *w.certificate);
        }
        witnesses.push_back(entry);
    }
    return Json{{"answer", fam.member}, {"ext", ext}, {"agrees", fam.member == ext},
                {"mode", "weak"}, {"witnesses", witnesses}};
}

Json cmd_render(const Flags& f) {
    const Instance inst = load_instance(f.file);
    if (inst.omega.size() != 2) {
        throw DimensionError("render needs exactly two outcomes, the instance has " +
                             std::to_string(inst.omega.size()));
    }
    std::vector<RenderPanel> panels;
    auto title = [](const std::vector<Gamble>& seq) {
        std::string t = "desext{";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            t += (i ? ", " : "") + to_string(seq[i]);
        }
        return t + "}";
    };
    if (!inst.query.sequences.empty()) {
        for (const auto& s : inst.query.sequences) {
            panels.push_back({title(s), s});
        }
    } else if (inst.query.generators) {
        panels.push_back({title(*inst.query.generators), *inst.query.generators});
    } else if (!inst.assessment.empty()) {
        const auto& list = inst.assessment.sets();
        const std::uint64_t total = product_size(list);
        if (total > f.cap) {
            throw CapExceeded("render would draw " + std::to_string(total) + " panels, cap is " +
                              std::to_string(f.cap));
        }
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto choice = sequence_at(list, i);
            std::vector<Gamble> seq;
            for (std::size_t k = 0; k < list.size(); ++k) {
                seq.push_back(list[k][choice[k]]);
            }
            panels.push_back({title(seq), seq});
        }
    } else {
        panels.push_back({title({}), {}});
    }
    const std::string svg = render_svg(panels);
    std::ofstream file(f.output, std::ios::binary);
    if (!file) {
        throw InputError("cannot write " + f.output);
    }
    file << svg;
    return Json{{"answer", true}, {"output", f.output}, {"panels", panels.size()}};
}

Json cmd_gen(const Flags& f) {
    InstanceGenConfig cfg{f.seed, f.omega, f.sets, f.size, f.range};
    const auto [a, b] = gen_instance(cfg);
    return instance_to_json(a, b);
}

Json cmd_selftest(const Flags& f) {
    if (!f.verify.empty()) {
        std::ifstream in(f.verify);
        if (!in) {
            throw InputError("cannot open " + f.verify);
        }
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw InputError("malformed JSON in " + f.verify + ": " + e.what());
        }
        const VerifyReport report = verify_certificates(doc);
        return Json{{"answer", report.failures.empty()}, {"verified", report.verified},
                    {"failures", report.failures}};
    }
    Json failures = Json::array();
    std::size_t checks = 0;
    for (std::size_t i = 0; i < f.count; ++i) {
        const InstanceGenConfig cfg{f.seed + i, 2 + i % 2, 1 + i % 3, 1 + (i / 3) % 3, 2};
        const auto [a, b] = gen_instance(cfg);
        const ExtAnswer ans = ext_contains(a, b);
        ++checks;
        if (!verify_answer(ans, b)) {
            failures.push_back("certificate check, seed " + std::to_string(cfg.seed));
        }
        ++checks;
        if (ans.member != brute_ext_contains(a, b, a.size() + 1)) {
            failures.push_back("brute-force disagreement, seed " + std::to_string(cfg.seed));
        }
        ++checks;
        if (!formulations_agree(a, b)) {
            failures.push_back("formulation disagreement, seed " + std::to_string(cfg.seed));
        }
        for (const auto& s : a.sets()) {
            ++checks;
            if (zero_in_desext(ConeGenerators(s)).has_value() != fm_zero_in_desext(s.members())) {
                failures.push_back("cone/FM disagreement, seed " + std::to_string(cfg.seed));
            }
        }
    }
    return Json{{"answer", failures.empty()}, {"checks", checks}, {"failures", failures}};
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decisions for sets of desirable gamble sets"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    app.add_flag("--strict", flags.strict, "Use strictly positive gambles as the background cone");
    app.add_option("--cap", flags.cap, "Maximum number of sequences in a product")->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "Seed for gen and selftest");

    auto with_file = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", flags.file, "Instance file (JSON)")->required()->check(CLI::ExistingFile);
        return sub;
    };
    with_file("consistency", "Is the empty set outside the natural extension?");
    with_file("in-ext", "Is query.set in the natural extension of the assessment?");
    with_file("in-desext", "Is query.gamble in desext(query.generators)?");
    with_file("zero-in-desext", "Is 0 in desext(query.generators)?");
    with_file("coherent-d", "Is desext(query.generators) coherent?");
    with_file("equiv", "Compare the three natural extension formulations");
    with_file("repr", "Check membership through the family of coherent cones");
    with_file("render", "Draw desext cones of a two-outcome instance as SVG")
        ->add_option("-o,--output", flags.output, "SVG file to write")
        ->required();
    CLI::App* gen = app.add_subcommand("gen", "Print a seeded random instance");
    gen->add_option("--omega", flags.omega, "Number of outcomes")->check(CLI::PositiveNumber);
    gen->add_option("--sets", flags.sets, "Number of assessment sets")->check(CLI::PositiveNumber);
    gen->add_option("--size", flags.size, "Gambles per set")->check(CLI::PositiveNumber);
    gen->add_option("--range", flags.range, "Entries lie in [-range, range]")->check(CLI::PositiveNumber);
    CLI::App* self = app.add_subcommand("selftest", "Cross-check engines, or re-verify certificates in a file");
    self->add_option("--verify", flags.verify, "JSON output of another command")->check(CLI::ExistingFile);
    self->add_option("--count", flags.count, "Number of seeded instances")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Json result;
        if (command == "consistency") {
            result = cmd_consistency(flags);
        } else if (command == "in-ext") {
            result = cmd_in_ext(flags);
        } else if (command == "in-desext") {
            result = cmd_in_desext(flags);
        } else if (command == "zero-in-desext") {
            result = cmd_zero(flags, false);
        } else if (command == "coherent-d") {
            result = cmd_zero(flags, true);
        } else if (command == "equiv") {
            result = cmd_equiv(flags);
        } else if (command == "repr") {
            result = cmd_repr(flags);
        } else if (command == "render") {
            result = cmd_render(flags);
        } else if (command == "gen") {
            result = cmd_gen(flags);
        } else {
            result = cmd_selftest(flags);
        }
        out << result.dump(2) << "\n";
        return 0;
    } catch (const InconsistentAssessment& e) {
        err << "inconsistent assessment: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 1;
    } catch (const DimensionError& e) {
        err << "dimension mismatch: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace desir
