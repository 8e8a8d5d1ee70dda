#ifndef STABLEREV_CLI_HPP
#define STABLEREV_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stablerev/serialize.hpp"

namespace stablerev::cli {

namespace detail {

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

struct LoadedMeasure {
    Space space;
    Measure measure;
};

inline LoadedMeasure load_measure(const std::string& path, const std::string& space_path) {
    Json doc = load_json(path);
    Space space = space_path.empty() ? space_of_measure_doc(doc)
                                     : space_from_json(load_json(space_path));
    return {space, measure_from_json(doc, space)};
}

struct LoadedSigma {
    Space space;
    SelectionFunction sigma;
};

inline LoadedSigma load_sigma(const std::string& path, const std::string& space_path) {
    Json doc = load_json(path);
    Space space = space_path.empty() ? space_of_selection_doc(doc)
                                     : space_from_json(load_json(space_path));
    return {space, selection_from_json(doc, space)};
}

inline Event parse_event_arg(const std::string& text, const Space& space) {
    return event_from_json(parse_json_text(text), space);
}

/// Plain two-column rendering of a JSON document for human reading.
inline void render_table(const Json& doc, std::ostream& out, const std::string& prefix = "") {
    auto scalar = [](const Json& v) {
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    };
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            std::string label = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object()))
                render_table(value, out, label);
            else {
                out << label;
                for (size_t pad = label.size(); pad < 28; ++pad)
                    out << ' ';
                out << ' ' << scalar(value) << "\n";
            }
        }
    } else if (doc.is_array()) {
        int i = 0;
        for (const auto& item : doc)
            render_table(item, out, prefix + "[" + std::to_string(i++) + "]");
    } else {
        out << prefix << " " << scalar(doc) << "\n";
    }
}

struct Emitter {
    std::string out_path;
    std::string format = "json";

    int emit(const Json& doc, int exit_code, std::ostream& out) const {
        std::ostringstream rendered;
        if (format == "table")
            render_table(doc, rendered);
        else
            rendered << doc.dump() << "\n";
        if (out_path.empty()) {
            out << rendered.str();
        } else {
            std::ofstream file(out_path);
            if (!file)
                throw SchemaError("cannot write " + out_path);
            file << rendered.str();
        }
        return exit_code;
    }
};

// ---- certify ----------------------------------------------------------------

inline bool certify_represent(const Json& problem, const Json& result) {
    Space space = space_of_selection_doc(problem);
    SelectionFunction sigma = selection_from_json(problem, space);
    Threshold t = Threshold::from_t(parse_rational(result.at("t").get<std::string>()));
    std::string status = result.at("status").get<std::string>();
    if (status == "measure") {
        Measure mu = measure_from_json(result.at("measure"), space);
        return revision_operator(mu, t) == sigma;
    }
    const Json& w = result.at("witness");
    std::string kind = w.at("kind").get<std::string>();
    if (kind == "balance") {
        ScottWitness witness{sequence_pair_from_json(w, space), t,
                             w.at("strict_index").get<size_t>()};
        return verify_scott_witness(sigma, witness);
    }
    if (kind == "axiom") {
        RepresentationResult again = decide_t_representable(sigma, t);
        return again.axiom && again.axiom->axiom == w.at("axiom").get<std::string>();
    }
    return false;
}

inline bool certify_order(const std::string& task, const Json& problem, const Json& result) {
    RelationPair rel = relation_pair_from_json(problem);
    if (task == "strong") {
        // derive the strict part the same way the decider does
        RelationPair derived{rel.space, {}, rel.weak};
        for (const auto& [a, b] : rel.weak)
            if (!rel.weak.count({b, a}))
                derived.strict.emplace(a, b);
        rel = derived;
    }
    std::string status = result.at("status").get<std::string>();
    if (status == "measure") {
        Measure mu = measure_from_json(result.at("measure"), rel.space);
        for (const auto& [a, b] : rel.strict)
            if (mu.mass(Event(rel.space, a)) >= mu.mass(Event(rel.space, b)))
                return false;
        if (task != "partial")
            for (const auto& [a, b] : rel.weak)
                if (mu.mass(Event(rel.space, a)) > mu.mass(Event(rel.space, b)))
                    return false;
        return true;
    }
    const Json& w = result.at("witness");
    if (w.at("kind").get<std::string>() != "balance")
        return false;
    EventSequencePair pair = sequence_pair_from_json(w, rel.space);
    auto member = [&](const Event& dom, const Event& sub, RelTag tag) {
        auto key = std::make_pair(sub.mask(), dom.mask());
        if (tag == RelTag::Strict)
            return rel.strict.count(key) != 0;
        return rel.weak.count(key) != 0;
    };
    return verify_order_witness(rel.space, pair, member);
}

inline bool certify_k_represent(const Json& problem, const Json& result) {
    RelationPair rel = relation_pair_from_json(problem);
    Rational k = parse_rational(result.at("k").get<std::string>());
    std::string status = result.at("status").get<std::string>();
    if (status == "measure") {
        Measure mu = measure_from_json(result.at("measure"), rel.space);
        for (EventMask a = 0; a < rel.space.event_count(); ++a)
            for (EventMask b = 0; b < rel.space.event_count(); ++b) {
                bool claimed = rel.strict.count({a, b}) != 0;
                bool holds = mu.mass(Event(rel.space, a)) > k * mu.mass(Event(rel.space, b));
                if (claimed != holds)
                    return false;
            }
        return true;
    }
    const Json& w = result.at("witness");
    if (w.at("kind").get<std::string>() != "balance")
        return false;
    return verify_k_witness(rel.space, rel.strict, k, sequence_pair_from_json(w, rel.space));
}

inline bool certify_quota(const Json& problem, const Json& result) {
    auto [players, games] = simple_games_from_json(problem);
    std::string status = result.at("status").get<std::string>();
    if (status == "measure") {
        Measure mu = measure_from_json(result.at("measure"), players);
        for (int i = 0; i < players.size(); ++i) {
            EventMask domain = players.full_mask() & ~(EventMask(1u) << i);
            for (EventMask x = domain;; x = (x - 1) & domain) {
                bool wins = games[i].winning.count(x) != 0;
                bool holds = mu.mass(Event(players, x)) >= mu.weight(i);
                if (wins != holds)
                    return false;
                if (x == 0)
                    break;
            }
        }
        return true;
    }
    const Json& w = result.at("witness");
    if (w.at("kind").get<std::string>() != "balance")
        return false;
    EventSequencePair pair = sequence_pair_from_json(w, players);
    auto member = [&](const Event& dom, const Event& sub, RelTag tag) {
        if (tag == RelTag::Weak) {
            if (sub.size() != 1)
                return false;
            int i = std::countr_zero(sub.mask());
            return games[i].winning.count(dom.mask()) != 0;
        }
        if (dom.size() != 1)
            return false;
        int i = std::countr_zero(dom.mask());
        return games[i].winning.count(sub.mask()) == 0;
    };
    return verify_order_witness(players, pair, member);
}

inline bool certify_find_threshold(const Json& problem, const Json& result) {
    Space space = space_of_selection_doc(problem);
    SelectionFunction sigma = selection_from_json(problem, space);
    if (!result.at("found").get<bool>())
        return false;
    Threshold t = Threshold::from_t(parse_rational(result.at("t").get<std::string>()));
    Measure mu = measure_from_json(result.at("measure"), space);
    return revision_operator(mu, t) == sigma;
}

inline bool certify_solve(const Json& problem, const Json& result) {
    LinearSystem sys = system_from_json(problem);
    FeasibilityOutcome outcome = outcome_from_json(result);
    if (outcome.ray) {
        bool nonzero = false;
        for (const auto& v : *outcome.ray) {
            if (sys.nonneg && v < 0)
                return false;
            if (v != 0)
                nonzero = true;
        }
        if (!nonzero)
            return false;
        for (const auto& row : sys.weak_rows) {
            Rational s = 0;
            for (int i = 0; i < sys.dimension; ++i)
                s += row[i] * (*outcome.ray)[i];
            if (s < 0)
                return false;
        }
        for (const auto& row : sys.strict_rows) {
            Rational s = 0;
            for (int i = 0; i < sys.dimension; ++i)
                s += row[i] * (*outcome.ray)[i];
            if (s <= 0)
                return false;
        }
        return true;
    }
    return verify_certificate(sys, *outcome.certificate);
}

inline bool certify(const Json& problem, const Json& result) {
    if (!result.contains("task"))
        throw SchemaError("result document carries no task tag");
    std::string task = result["task"].get<std::string>();
    if (task == "represent")
        return certify_represent(problem, result);
    if (task == "joint" || task == "almost" || task == "partial" || task == "strong")
        return certify_order(task, problem, result);
    if (task == "k-represent")
        return certify_k_represent(problem, result);
    if (task == "voting-simultaneous")
        return certify_quota(problem, result);
    if (task == "find-threshold")
        return certify_find_threshold(problem, result);
    if (task == "solve")
        return certify_solve(problem, result);
    throw SchemaError("unknown task \"" + task + "\" in result document");
}

} // namespace detail

/// Entry point of the command-line front end; returns the process exit code.
/// 0: decided positive; 1: decided negative, witness attached; 2: usage or
/// schema error; 3: search budget exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact probabilistically stable belief revision toolkit"};
    app.require_subcommand(1);

    detail::Emitter emitter;
    std::string measure_path, other_path, sigma_path, space_path, relations_path, games_path,
        game_path, problem_path, result_path;
    std::string t_text = "1/2", k_text = "1", eps_text, event_text, committee_text,
        coalition_text, rule_name_text, property_name_text, player_text;
    int max_denominator = 12, max_atoms = 10, k_max_atoms = 6, sep_m = 2, sep_n = 3,
        family_bound = 3, grid_denominator = 12;
    bool all_flag = false, clip_flag = false, region_flag = false, simultaneous_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", emitter.out_path, "write the result document to a file");
        sub->add_option("--format", emitter.format, "json (default) or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* stable_set = app.add_subcommand("stable-set", "strongest stable set of a measure");
    stable_set->add_option("--measure", measure_path)->required();
    stable_set->add_option("--space", space_path);
    stable_set->add_option("--t", t_text);
    add_common(stable_set);

    CLI::App* revise = app.add_subcommand("revise", "revision table or one revised entry");
    revise->add_option("--measure", measure_path)->required();
    revise->add_option("--space", space_path);
    revise->add_option("--t", t_text);
    revise->add_option("--event", event_text, "single event as a JSON array of atoms");
    add_common(revise);

    CLI::App* chain = app.add_subcommand("chain", "all stable events in inclusion order");
    chain->add_option("--measure", measure_path)->required();
    chain->add_option("--space", space_path);
    chain->add_option("--t", t_text);
    add_common(chain);

    CLI::App* equivalent = app.add_subcommand("equivalent", "do two measures revise alike");
    equivalent->add_option("--measure", measure_path)->required();
    equivalent->add_option("--other", other_path)->required();
    equivalent->add_option("--space", space_path);
    equivalent->add_option("--t", t_text);
    add_common(equivalent);

    CLI::App* interval = app.add_subcommand("interval", "odds-ratio interval of a revision plan");
    interval->add_option("--measure", measure_path)->required();
    interval->add_option("--sigma", sigma_path, "selection table (defaults to the plan at --t)");
    interval->add_option("--space", space_path);
    interval->add_option("--t", t_text);
    interval->add_flag("--clip", clip_flag, "intersect with the majority regime k >= 1");
    add_common(interval);

    CLI::App* represent = app.add_subcommand("represent", "decide t-representability of a table");
    represent->add_option("--sigma", sigma_path)->required();
    represent->add_option("--space", space_path);
    represent->add_option("--t", t_text);
    represent->add_option("--max-atoms", max_atoms);
    add_common(represent);

    CLI::App* find_threshold = app.add_subcommand("find-threshold", "scan thresholds in order");
    find_threshold->add_option("--sigma", sigma_path)->required();
    find_threshold->add_option("--space", space_path);
    find_threshold->add_option("--max-denominator", max_denominator);
    add_common(find_threshold);

    CLI::App* joint = app.add_subcommand("joint", "joint weak representability of (strict, weak)");
    joint->add_option("--relations", relations_path)->required();
    add_common(joint);
    CLI::App* almost = app.add_subcommand("almost", "almost representability of a weak relation");
    almost->add_option("--relations", relations_path)->required();
    add_common(almost);
    CLI::App* partial = app.add_subcommand("partial", "partial representability of a strict relation");
    partial->add_option("--relations", relations_path)->required();
    add_common(partial);
    CLI::App* strong = app.add_subcommand("strong", "strong representability of a weak relation");
    strong->add_option("--relations", relations_path)->required();
    add_common(strong);

    CLI::App* krep = app.add_subcommand("k-represent", "ratio-threshold representability");
    krep->add_option("--relations", relations_path)->required();
    krep->add_option("--k", k_text);
    krep->add_option("--max-atoms", k_max_atoms);
    add_common(krep);

    CLI::App* axioms = app.add_subcommand("axioms", "selection-function axiom report");
    axioms->add_option("--sigma", sigma_path)->required();
    axioms->add_option("--space", space_path);
    axioms->add_option("--family-bound", family_bound);
    add_common(axioms);

    CLI::App* rules = app.add_subcommand("rules", "check consequence rules on a model");
    rules->add_option("--measure", measure_path)->required();
    rules->add_option("--space", space_path);
    rules->add_option("--t", t_text);
    rules->add_option("--rule", rule_name_text);
    rules->add_flag("--all", all_flag);
    rules->add_flag("--or-region", region_flag, "grid statistics of Or-rule failures");
    rules->add_option("--grid", grid_denominator);
    add_common(rules);

    CLI::App* voting = app.add_subcommand("voting", "weighted voting queries");
    voting->add_option("--game", game_path);
    voting->add_option("--core", event_text, "committee pool as a JSON array of players");
    voting->add_option("--decisive", coalition_text, "coalition as a JSON array");
    voting->add_option("--committee", committee_text, "committee pool for --decisive");
    voting->add_option("--project", player_text, "player whose outweighing game to emit");
    voting->add_flag("--simultaneous", simultaneous_flag);
    voting->add_option("--games", games_path, "simultaneous games document");
    add_common(voting);

    CLI::App* choice = app.add_subcommand("choice", "choice-function property checks");
    choice->add_option("--sigma", sigma_path)->required();
    choice->add_option("--space", space_path);
    choice->add_option("--property", property_name_text);
    choice->add_flag("--all", all_flag);
    add_common(choice);

    CLI::App* separator = app.add_subcommand("generate-separator",
                                             "threshold-separating construction");
    separator->add_option("--t", t_text);
    separator->add_option("--m", sep_m);
    separator->add_option("--n", sep_n);
    separator->add_option("--eps", eps_text)->required();
    add_common(separator);

    CLI::App* certify = app.add_subcommand("certify", "re-verify a result without re-solving");
    certify->add_option("--problem", problem_path)->required();
    certify->add_option("--result", result_path)->required();
    add_common(certify);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (stable_set->parsed()) {
            auto loaded = detail::load_measure(measure_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            Json doc;
            doc["tau"] = event_to_json(strongest_stable_set(loaded.measure, t));
            return emitter.emit(doc, 0, out);
        }
        if (revise->parsed()) {
            auto loaded = detail::load_measure(measure_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            if (!event_text.empty()) {
                Event e = detail::parse_event_arg(event_text, loaded.space);
                Json doc;
                doc["in"] = event_to_json(e);
                doc["out"] = event_to_json(revision_operator(loaded.measure, t).get(e));
                return emitter.emit(doc, 0, out);
            }
            Json doc;
            doc["sigma"] = selection_to_json(revision_operator(loaded.measure, t));
            return emitter.emit(doc, 0, out);
        }
        if (chain->parsed()) {
            auto loaded = detail::load_measure(measure_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            Json arr = Json::array();
            for (const auto& e : stable_chain(loaded.measure, t))
                arr.push_back(event_to_json(e));
            Json doc;
            doc["chain"] = std::move(arr);
            return emitter.emit(doc, 0, out);
        }
        if (equivalent->parsed()) {
            auto first = detail::load_measure(measure_path, space_path);
            Json other_doc = detail::load_json(other_path);
            Measure second = measure_from_json(other_doc, first.space);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            bool same = revision_equivalent(first.measure, second, t);
            Json doc;
            doc["equivalent"] = same;
            return emitter.emit(doc, same ? 0 : 1, out);
        }
        if (interval->parsed()) {
            auto loaded = detail::load_measure(measure_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            SelectionFunction sigma = sigma_path.empty()
                                          ? revision_operator(loaded.measure, t)
                                          : selection_from_json(detail::load_json(sigma_path),
                                                                loaded.space);
            Json doc = ratio_interval_to_json(threshold_interval(loaded.measure, sigma, clip_flag));
            return emitter.emit(doc, 0, out);
        }
        if (represent->parsed()) {
            auto loaded = detail::load_sigma(sigma_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            RepresentationResult r = decide_t_representable(loaded.sigma, t, max_atoms);
            Json doc;
            doc["task"] = "represent";
            doc["t"] = format_rational(t.t());
            doc.update(representation_result_to_json(r));
            return emitter.emit(doc, r.representable() ? 0 : 1, out);
        }
        if (find_threshold->parsed()) {
            auto loaded = detail::load_sigma(sigma_path, space_path);
            auto found = find_representable_threshold(loaded.sigma, max_denominator);
            Json doc;
            doc["task"] = "find-threshold";
            doc["found"] = found.has_value();
            if (found) {
                doc["t"] = format_rational(found->first.t());
                doc["measure"] = measure_to_json(found->second);
            }
            return emitter.emit(doc, found ? 0 : 1, out);
        }
        if (joint->parsed() || almost->parsed() || partial->parsed() || strong->parsed()) {
            RelationPair rel = relation_pair_from_json(detail::load_json(relations_path));
            RepresentationResult r;
            std::string task;
            if (joint->parsed()) {
                task = "joint";
                r = decide_joint_weak_representable(rel);
            } else if (almost->parsed()) {
                task = "almost";
                r = decide_almost_representable(rel);
            } else if (partial->parsed()) {
                task = "partial";
                r = decide_partial_representable(rel);
            } else {
                task = "strong";
                r = decide_strong_representable(rel);
            }
            Json doc;
            doc["task"] = task;
            doc.update(representation_result_to_json(r));
            return emitter.emit(doc, r.representable() ? 0 : 1, out);
        }
        if (krep->parsed()) {
            RelationPair rel = relation_pair_from_json(detail::load_json(relations_path));
            Rational k = parse_rational(k_text);
            RepresentationResult r =
                decide_k_representable(rel.space, rel.strict, k, k_max_atoms);
            Json doc;
            doc["task"] = "k-represent";
            doc["k"] = format_rational(k);
            doc.update(representation_result_to_json(r));
            return emitter.emit(doc, r.representable() ? 0 : 1, out);
        }
        if (axioms->parsed()) {
            auto loaded = detail::load_sigma(sigma_path, space_path);
            AxiomReport report = check_axioms(loaded.sigma, family_bound);
            Json doc;
            doc["axioms"] = axiom_report_to_json(report);
            return emitter.emit(doc, report.all_pass() ? 0 : 1, out);
        }
        if (rules->parsed()) {
            auto loaded = detail::load_measure(measure_path, space_path);
            Threshold t = Threshold::from_t(parse_rational(t_text));
            if (region_flag) {
                OrFailureRegion region = find_or_failure_region(loaded.space, t, grid_denominator);
                Json doc;
                doc["sampled"] = region.sampled;
                doc["failures"] = region.failures;
                doc["fraction"] = format_rational(region.fraction);
                doc["witness"] = measure_to_json(region.witness);
                return emitter.emit(doc, 0, out);
            }
            Model model(loaded.measure, t);
            auto check_one = [&](RuleId rule) {
                Json doc;
                doc["rule"] = rule_name(rule);
                auto cx = check_rule(model, rule);
                doc["status"] = cx ? "fails" : "valid";
                if (cx)
                    doc["counterexample"] = rule_counterexample_to_json(*cx);
                return std::make_pair(std::move(doc), !cx.has_value());
            };
            if (all_flag) {
                Json arr = Json::array();
                bool all_valid = true;
                for (RuleId rule : {RuleId::Ref, RuleId::LeftEquiv, RuleId::RightWeak, RuleId::And,
                                    RuleId::Or, RuleId::ExOr, RuleId::WAnd, RuleId::WOr,
                                    RuleId::Cut, RuleId::CM, RuleId::RM, RuleId::VCM, RuleId::WO2,
                                    RuleId::WO3}) {
                    auto [doc, valid] = check_one(rule);
                    all_valid = all_valid && valid;
                    arr.push_back(std::move(doc));
                }
                Json doc;
                doc["rules"] = std::move(arr);
                return emitter.emit(doc, all_valid ? 0 : 1, out);
            }
            auto rule = rule_from_name(rule_name_text);
            if (!rule)
                throw SchemaError("unknown rule \"" + rule_name_text + "\"");
            auto [doc, valid] = check_one(*rule);
            return emitter.emit(doc, valid ? 0 : 1, out);
        }
        if (voting->parsed()) {
            if (simultaneous_flag) {
                Json games_doc = detail::load_json(games_path);
                auto [players, games] = simple_games_from_json(games_doc);
                RepresentationResult r = decide_simultaneous_quota(players, games);
                Json doc;
                doc["task"] = "voting-simultaneous";
                doc.update(representation_result_to_json(r));
                return emitter.emit(doc, r.representable() ? 0 : 1, out);
            }
            WeightedGame game = weighted_game_from_json(detail::load_json(game_path));
            if (!player_text.empty()) {
                int p = game.players.index_of(player_text);
                Json doc;
                doc["player"] = player_text;
                doc["game"] = simple_game_to_json(projected_game(game, p));
                return emitter.emit(doc, 0, out);
            }
            if (!coalition_text.empty()) {
                Event c = detail::parse_event_arg(coalition_text, game.players);
                Event x = committee_text.empty()
                              ? Event::full(game.players)
                              : detail::parse_event_arg(committee_text, game.players);
                bool decisive = stably_decisive(game, c, x);
                Json doc;
                doc["coalition"] = event_to_json(c);
                doc["committee"] = event_to_json(x);
                doc["decisive"] = decisive;
                return emitter.emit(doc, decisive ? 0 : 1, out);
            }
            Event pool = event_text.empty() ? Event::full(game.players)
                                            : detail::parse_event_arg(event_text, game.players);
            Json doc;
            doc["group"] = event_to_json(pool);
            doc["core"] = event_to_json(smallest_stably_decisive(game, pool));
            return emitter.emit(doc, 0, out);
        }
        if (choice->parsed()) {
            auto loaded = detail::load_sigma(sigma_path, space_path);
            auto check_one = [&](ChoiceProperty prop) {
                Json doc;
                doc["property"] = choice_property_name(prop);
                auto cx = check_choice_property(loaded.sigma, prop);
                doc["status"] = cx ? "fails" : "holds";
                if (cx)
                    doc["counterexample"] = choice_counterexample_to_json(*cx);
                return std::make_pair(std::move(doc), !cx.has_value());
            };
            if (all_flag) {
                Json arr = Json::array();
                bool all_hold = true;
                for (ChoiceProperty prop :
                     {ChoiceProperty::Alpha, ChoiceProperty::Beta, ChoiceProperty::GammaExpansion,
                      ChoiceProperty::IntersectionSelection, ChoiceProperty::Aizerman,
                      ChoiceProperty::WIIA, ChoiceProperty::RIIA, ChoiceProperty::WARP,
                      ChoiceProperty::SetRationalizable, ChoiceProperty::DominanceStability}) {
                    auto [doc, holds] = check_one(prop);
                    all_hold = all_hold && holds;
                    arr.push_back(std::move(doc));
                }
                Json doc;
                doc["properties"] = std::move(arr);
                return emitter.emit(doc, all_hold ? 0 : 1, out);
            }
            auto prop = choice_property_from_name(property_name_text);
            if (!prop)
                throw SchemaError("unknown choice property \"" + property_name_text + "\"");
            auto [doc, holds] = check_one(*prop);
            return emitter.emit(doc, holds ? 0 : 1, out);
        }
        if (separator->parsed()) {
            Threshold t = Threshold::from_t(parse_rational(t_text));
            auto [space, mu, sigma] =
                generate_threshold_separator(t, sep_m, sep_n, parse_rational(eps_text));
            Json doc;
            doc["space"] = space_to_json(space);
            doc["measure"] = measure_to_json(mu);
            doc["sigma"] = selection_to_json(sigma);
            return emitter.emit(doc, 0, out);
        }
        if (certify->parsed()) {
            Json problem = detail::load_json(problem_path);
            Json result = detail::load_json(result_path);
            bool ok = detail::certify(problem, result);
            Json doc;
            doc["certified"] = ok;
            return emitter.emit(doc, ok ? 0 : 1, out);
        }
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: malformed document: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

} // namespace stablerev::cli

#endif
