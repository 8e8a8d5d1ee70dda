#ifndef STABLEREV_SERIALIZE_HPP
#define STABLEREV_SERIALIZE_HPP

#include "stablerev/feasibility.hpp"
#include "stablerev/games.hpp"
#include "stablerev/json_io.hpp"
#include "stablerev/logic.hpp"
#include "stablerev/representation.hpp"

namespace stablerev {

// ---- sequence pairs and witnesses ------------------------------------------

inline Json sequence_pair_to_json(const EventSequencePair& pair) {
    Json a = Json::array(), b = Json::array(), rel = Json::array();
    for (size_t i = 0; i < pair.size(); ++i) {
        a.push_back(event_to_json(pair.a[i]));
        b.push_back(event_to_json(pair.b[i]));
        rel.push_back(pair.rel[i] == RelTag::Strict ? "strict" : "weak");
    }
    Json doc;
    doc["A"] = std::move(a);
    doc["B"] = std::move(b);
    doc["rel"] = std::move(rel);
    return doc;
}

inline EventSequencePair sequence_pair_from_json(const Json& doc, const Space& space) {
    EventSequencePair pair;
    if (!doc.contains("A") || !doc.contains("B") || !doc.contains("rel"))
        throw SchemaError("witness must carry A, B and rel");
    for (const auto& e : doc["A"])
        pair.a.push_back(event_from_json(e, space));
    for (const auto& e : doc["B"])
        pair.b.push_back(event_from_json(e, space));
    for (const auto& r : doc["rel"]) {
        std::string tag = r.get<std::string>();
        if (tag == "strict")
            pair.rel.push_back(RelTag::Strict);
        else if (tag == "weak")
            pair.rel.push_back(RelTag::Weak);
        else
            throw SchemaError("rel tags must be \"strict\" or \"weak\"");
    }
    pair.validate(space);
    return pair;
}

inline Json representation_result_to_json(const RepresentationResult& r) {
    Json doc;
    if (r.measure) {
        doc["status"] = "measure";
        doc["measure"] = measure_to_json(*r.measure);
    } else if (r.scott) {
        doc["status"] = "witness";
        Json w = sequence_pair_to_json(r.scott->pair);
        w["kind"] = "balance";
        w["counts"] = "adjusted";
        w["t"] = format_rational(r.scott->threshold.t());
        w["strict_index"] = r.scott->strict_index;
        doc["witness"] = std::move(w);
    } else if (r.plain) {
        doc["status"] = "witness";
        Json w = sequence_pair_to_json(*r.plain);
        w["kind"] = "balance";
        w["counts"] = "plain";
        doc["witness"] = std::move(w);
    } else if (r.axiom) {
        doc["status"] = "witness";
        Json w;
        w["kind"] = "axiom";
        w["axiom"] = r.axiom->axiom;
        w["detail"] = r.axiom->detail;
        doc["witness"] = std::move(w);
    }
    return doc;
}

// ---- relations ----------------------------------------------------------------

/// {"atoms": [...], "strict": [[A, B], ...], "weak": [[A, B], ...]}
inline RelationPair relation_pair_from_json(const Json& doc) {
    Space space = space_from_json(doc);
    RelationPair rel{space, {}, {}};
    auto read = [&](const char* key, std::set<std::pair<EventMask, EventMask>>& into) {
        if (!doc.contains(key))
            return;
        for (const auto& row : doc[key]) {
            if (!row.is_array() || row.size() != 2)
                throw SchemaError("relation entries must be [A, B] pairs of events");
            into.emplace(event_from_json(row[0], space).mask(),
                         event_from_json(row[1], space).mask());
        }
    };
    read("strict", rel.strict);
    read("weak", rel.weak);
    return rel;
}

// ---- feasibility ----------------------------------------------------------------

inline LinearSystem system_from_json(const Json& doc) {
    LinearSystem sys;
    sys.dimension = doc.at("n").get<int>();
    sys.nonneg = doc.value("nonneg", true);
    auto rows = [&](const char* key, std::vector<std::vector<Rational>>& into) {
        if (!doc.contains(key))
            return;
        for (const auto& row : doc[key]) {
            std::vector<Rational> r;
            for (const auto& v : row)
                r.push_back(rational_from_json(v));
            into.push_back(std::move(r));
        }
    };
    rows("weak", sys.weak_rows);
    rows("strict", sys.strict_rows);
    sys.validate();
    return sys;
}

inline Json system_to_json(const LinearSystem& sys) {
    Json doc;
    doc["n"] = sys.dimension;
    doc["nonneg"] = sys.nonneg;
    auto rows = [&](const std::vector<std::vector<Rational>>& from) {
        Json arr = Json::array();
        for (const auto& row : from) {
            Json r = Json::array();
            for (const auto& v : row)
                r.push_back(format_rational(v));
            arr.push_back(std::move(r));
        }
        return arr;
    };
    doc["weak"] = rows(sys.weak_rows);
    doc["strict"] = rows(sys.strict_rows);
    return doc;
}

inline Json outcome_to_json(const FeasibilityOutcome& outcome) {
    Json doc;
    if (outcome.ray) {
        doc["status"] = "ray";
        Json x = Json::array();
        for (const auto& v : *outcome.ray)
            x.push_back(format_rational(v));
        doc["x"] = std::move(x);
    } else {
        doc["status"] = "certificate";
        auto ints = [&](const std::vector<Int>& v) {
            Json arr = Json::array();
            for (const auto& i : v)
                arr.push_back(i.str());
            return arr;
        };
        doc["gamma"] = ints(outcome.certificate->gamma);
        doc["alpha"] = ints(outcome.certificate->alpha);
        doc["beta"] = ints(outcome.certificate->beta);
    }
    return doc;
}

inline FeasibilityOutcome outcome_from_json(const Json& doc) {
    FeasibilityOutcome outcome;
    std::string status = doc.at("status").get<std::string>();
    if (status == "ray") {
        std::vector<Rational> x;
        for (const auto& v : doc.at("x"))
            x.push_back(rational_from_json(v));
        outcome.ray = std::move(x);
    } else if (status == "certificate") {
        MotzkinCertificate cert;
        auto ints = [&](const char* key, std::vector<Int>& into) {
            for (const auto& v : doc.at(key))
                into.emplace_back(v.get<std::string>());
        };
        ints("gamma", cert.gamma);
        ints("alpha", cert.alpha);
        ints("beta", cert.beta);
        outcome.certificate = std::move(cert);
    } else {
        throw SchemaError("outcome status must be \"ray\" or \"certificate\"");
    }
    return outcome;
}

// ---- games ------------------------------------------------------------------------

/// {"players": [...], "weights": {player: rational}, "t": rational}
inline WeightedGame weighted_game_from_json(const Json& doc) {
    if (!doc.contains("players"))
        throw SchemaError("game document must list players");
    std::vector<std::string> labels;
    for (const auto& p : doc["players"])
        labels.push_back(p.get<std::string>());
    Space players = Space::create(std::move(labels));
    std::vector<Rational> weights(players.size(), Rational(0));
    for (const auto& [key, value] : doc.at("weights").items())
        weights[players.index_of(key)] = rational_from_json(value);
    Rational t = doc.contains("t") ? rational_from_json(doc["t"]) : Rational(1, 2);
    WeightedGame game{players, std::move(weights), Threshold::from_t(t)};
    game.validate();
    return game;
}

inline Json weighted_game_to_json(const WeightedGame& game) {
    Json doc;
    doc["players"] = game.players.atoms();
    Json weights;
    for (int i = 0; i < game.players.size(); ++i)
        weights[game.players.atom(i)] = format_rational(game.weight[i]);
    doc["weights"] = std::move(weights);
    doc["t"] = format_rational(game.t.t());
    return doc;
}

inline Json simple_game_to_json(const SimpleGame& game) {
    Json doc;
    Json winning = Json::array();
    for (EventMask w : game.winning)
        winning.push_back(event_to_json(Event(game.players, w)));
    doc["domain"] = event_to_json(Event(game.players, game.domain));
    doc["winning"] = std::move(winning);
    return doc;
}

/// {"players": [...], "games": [{"player": p, "winning": [[..], ...]}, ...]}
inline std::pair<Space, std::vector<SimpleGame>> simple_games_from_json(const Json& doc) {
    if (!doc.contains("players") || !doc.contains("games"))
        throw SchemaError("simultaneous-games document must carry players and games");
    std::vector<std::string> labels;
    for (const auto& p : doc["players"])
        labels.push_back(p.get<std::string>());
    Space players = Space::create(std::move(labels));
    std::vector<SimpleGame> games(players.size(),
                                  SimpleGame{players, 0, {}});
    std::vector<bool> seen(players.size(), false);
    for (const auto& g : doc["games"]) {
        int i = players.index_of(g.at("player").get<std::string>());
        if (seen[i])
            throw SchemaError("duplicate game for player " + players.atom(i));
        seen[i] = true;
        SimpleGame game{players, players.full_mask() & ~(EventMask(1u) << i), {}};
        for (const auto& w : g.at("winning"))
            game.winning.insert(event_from_json(w, players).mask());
        game.validate();
        games[i] = std::move(game);
    }
    for (int i = 0; i < players.size(); ++i)
        if (!seen[i])
            throw SchemaError("missing game for player " + players.atom(i));
    return {players, games};
}

// ---- misc ------------------------------------------------------------------------

inline Json ratio_interval_to_json(const RatioInterval& interval) {
    Json doc;
    doc["lower"] = format_rational(interval.lower);
    if (interval.upper)
        doc["upper"] = format_rational(*interval.upper);
    else
        doc["upper"] = nullptr;
    doc["units"] = "odds-ratio";
    return doc;
}

inline Json axiom_report_to_json(const AxiomReport& report) {
    Json doc;
    auto put = [&](const char* name, const std::optional<AxiomViolation>& v) {
        if (!v) {
            doc[name] = "pass";
        } else {
            Json f;
            f["status"] = "fail";
            f["detail"] = v->detail;
            doc[name] = std::move(f);
        }
    };
    put("S1", report.s1);
    put("S2", report.s2);
    put("S3", report.s3);
    put("S4", report.s4);
    put("S5", report.s5);
    put("wO", report.wo);
    return doc;
}

inline Json rule_counterexample_to_json(const RuleCounterexample& cx) {
    Json doc;
    for (const auto& [name, event] : cx.events)
        doc[name] = event_to_json(event);
    return doc;
}

inline Json choice_counterexample_to_json(const ChoiceCounterexample& cx) {
    Json doc;
    for (const auto& [name, event] : cx.events)
        doc[name] = event_to_json(event);
    return doc;
}

} // namespace stablerev

#endif
