#ifndef STABLEREV_GAMES_HPP
#define STABLEREV_GAMES_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stablerev/representation.hpp"

namespace stablerev {

// ---- weighted voting --------------------------------------------------------

/// Players with nonnegative voting weights; committee votes pass at a strict
/// t-supermajority of the committee's weight.
struct WeightedGame {
    Space players;
    std::vector<Rational> weight;
    Threshold t;

    void validate() const {
        if (static_cast<int>(weight.size()) != players.size())
            throw SchemaError("one weight per player required");
        bool positive = false;
        for (const auto& w : weight) {
            if (w < 0)
                throw SchemaError("negative voting weight");
            if (w > 0)
                positive = true;
        }
        if (!positive)
            throw SchemaError("at least one positive voting weight required");
    }

    Rational coalition_weight(EventMask m) const {
        Rational sum = 0;
        for (int i = 0; i < players.size(); ++i)
            if ((m >> i) & 1u)
                sum += weight[i];
        return sum;
    }

    Measure normalized() const {
        validate();
        return Measure::normalized(players, weight);
    }
};

/// Whether the members of C force the outcome of every positive-weight
/// committee within X that they intersect.
inline bool stably_decisive(const WeightedGame& game, const Event& c, const Event& x) {
    game.validate();
    if (c.space() != game.players || x.space() != game.players)
        throw DomainError("coalition belongs to a different player set");
    if (!c.subset_of(x))
        throw DomainError("coalition must lie inside the committee pool");
    EventMask xm = x.mask();
    for (EventMask y = xm;; y = (y - 1) & xm) {
        if ((y & c.mask()) != 0) {
            Rational wy = game.coalition_weight(y);
            if (wy > 0 && game.coalition_weight(y & c.mask()) <= game.t.t() * wy)
                return false;
        }
        if (y == 0)
            break;
    }
    return true;
}

/// The smallest stably decisive coalition for the pool X: the strongest
/// stable set of the normalized weights conditioned on X.
inline Event smallest_stably_decisive(const WeightedGame& game, const Event& x) {
    Measure mu = game.normalized();
    if (mu.mass(x) == 0)
        throw DomainError("committee pool carries no weight");
    return strongest_stable_set(conditional(mu, x), game.t);
}

// ---- simple games -----------------------------------------------------------

/// A simple game: winning coalitions drawn from the subsets of a fixed
/// domain, closed under supersets within that domain.
struct SimpleGame {
    Space players;
    EventMask domain;
    std::set<EventMask> winning;

    void validate() const {
        for (EventMask w : winning) {
            if ((w & ~domain) != 0)
                throw SchemaError("winning coalition outside the game domain");
            EventMask extra = domain & ~w;
            for (EventMask add = extra;; add = (add - 1) & extra) {
                if (!winning.count(w | add))
                    throw SchemaError("winning coalitions not closed under supersets");
                if (add == 0)
                    break;
            }
        }
    }
};

/// The game of coalitions that outweigh player p (quota = p's weight, met
/// weakly, on the other players).
inline SimpleGame projected_game(const WeightedGame& game, int player) {
    game.validate();
    if (player < 0 || player >= game.players.size())
        throw DomainError("no such player");
    SimpleGame out{game.players, game.players.full_mask() & ~(EventMask(1u) << player), {}};
    for (EventMask x = out.domain;; x = (x - 1) & out.domain) {
        if (game.coalition_weight(x) >= game.weight[player])
            out.winning.insert(x);
        if (x == 0)
            break;
    }
    out.validate();
    return out;
}

/// Simultaneous quota representation: one game per player, each asking its
/// winning coalitions to weigh at least as much as that player and its losing
/// coalitions strictly less. Returns a measure on the players or a
/// plain-count cancellation witness.
inline RepresentationResult decide_simultaneous_quota(const Space& players,
                                                      const std::vector<SimpleGame>& games) {
    if (static_cast<int>(games.size()) != players.size())
        throw DomainError("one game per player required");
    std::vector<ComparisonRow> weak_rows, strict_rows;
    for (int i = 0; i < players.size(); ++i) {
        const SimpleGame& g = games[i];
        if (g.players != players)
            throw DomainError("games must share one player set");
        EventMask expected = players.full_mask() & ~(EventMask(1u) << i);
        if (g.domain != expected)
            throw DomainError("game " + std::to_string(i) +
                              " must range over the other players");
        g.validate();
        Event self = Event::singleton(players, i);
        for (EventMask x = g.domain;; x = (x - 1) & g.domain) {
            if (g.winning.count(x))
                weak_rows.push_back({Event(players, x), self, RelTag::Weak});
            else
                strict_rows.push_back({self, Event(players, x), RelTag::Strict});
            if (x == 0)
                break;
        }
    }
    RepresentationResult r = detail::decide_order_system(players, weak_rows, strict_rows);
    if (r.plain) {
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
        if (!verify_order_witness(players, *r.plain, member))
            throw Error("internal: quota witness failed verification");
    }
    return r;
}

// ---- choice-function properties -----------------------------------------------

enum class ChoiceProperty {
    Alpha,
    Beta,
    GammaExpansion,
    IntersectionSelection,
    Aizerman,
    WIIA,
    RIIA,
    WARP,
    SetRationalizable,
    DominanceStability,
};

inline const char* choice_property_name(ChoiceProperty p) {
    switch (p) {
    case ChoiceProperty::Alpha: return "alpha";
    case ChoiceProperty::Beta: return "beta";
    case ChoiceProperty::GammaExpansion: return "gamma_expansion";
    case ChoiceProperty::IntersectionSelection: return "intersection_selection";
    case ChoiceProperty::Aizerman: return "aizerman";
    case ChoiceProperty::WIIA: return "WIIA";
    case ChoiceProperty::RIIA: return "RIIA";
    case ChoiceProperty::WARP: return "WARP";
    case ChoiceProperty::SetRationalizable: return "set_rationalizable";
    case ChoiceProperty::DominanceStability: return "dominance_stability";
    }
    return "?";
}

inline std::optional<ChoiceProperty> choice_property_from_name(const std::string& name) {
    for (ChoiceProperty p :
         {ChoiceProperty::Alpha, ChoiceProperty::Beta, ChoiceProperty::GammaExpansion,
          ChoiceProperty::IntersectionSelection, ChoiceProperty::Aizerman, ChoiceProperty::WIIA,
          ChoiceProperty::RIIA, ChoiceProperty::WARP, ChoiceProperty::SetRationalizable,
          ChoiceProperty::DominanceStability})
        if (name == choice_property_name(p))
            return p;
    return std::nullopt;
}

struct ChoiceCounterexample {
    ChoiceProperty property;
    std::vector<std::pair<std::string, Event>> events;
};

/// All dominance-stable subsets of X: nonempty S (empty only when X is) such
/// that the selection over A u B lands in A \ B for every nonempty A inside S
/// and every B outside S within X. X itself always qualifies.
inline std::vector<Event> dominance_stable_sets(const SelectionFunction& sigma, const Event& x) {
    const Space& space = sigma.space();
    if (x.space() != space)
        throw DomainError("event belongs to a different space");
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    std::vector<Event> out;
    if (x.is_empty()) {
        out.push_back(x);
        return out;
    }
    EventMask xm = x.mask();
    for (EventMask s = xm;; s = (s - 1) & xm) {
        if (s != 0) {
            bool stable = true;
            EventMask rest = xm & ~s;
            for (EventMask a = s; stable; a = (a - 1) & s) {
                if (a != 0)
                    for (EventMask b = rest;; b = (b - 1) & rest) {
                        if ((sigma.get_mask(a | b) & ~(a & ~b)) != 0) {
                            stable = false;
                            break;
                        }
                        if (b == 0)
                            break;
                    }
                if (a == 0)
                    break;
            }
            if (stable)
                out.push_back(Event(space, s));
        }
        if (s == 0)
            break;
    }
    std::sort(out.begin(), out.end(), [](const Event& a, const Event& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
    });
    return out;
}

/// Exhaustively checks one choice-function property and returns its first
/// counterexample. set_rationalizable is decided through its equivalence
/// with RIIA.
inline std::optional<ChoiceCounterexample> check_choice_property(const SelectionFunction& sigma,
                                                                 ChoiceProperty prop) {
    const Space& space = sigma.space();
    const int n = space.size();
    if (n > 5)
        throw BudgetError("choice property scan limited to 5 atoms");
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    const EventMask count = static_cast<EventMask>(space.event_count());
    auto ev = [&](EventMask m) { return Event(space, m); };
    auto hit = [&](std::vector<std::pair<std::string, EventMask>> vars) {
        ChoiceCounterexample cx{prop, {}};
        for (auto& [name, mask] : vars)
            cx.events.emplace_back(name, ev(mask));
        return cx;
    };

    switch (prop) {
    case ChoiceProperty::Alpha:
        for (EventMask y = 0; y < count; ++y)
            for (EventMask x = y;; x = (x - 1) & y) {
                if (((x & sigma.get_mask(y)) & ~sigma.get_mask(x)) != 0)
                    return hit({{"X", x}, {"Y", y}});
                if (x == 0)
                    break;
            }
        return std::nullopt;
    case ChoiceProperty::Beta:
        for (EventMask y = 0; y < count; ++y)
            for (EventMask x = y;; x = (x - 1) & y) {
                EventMask sx = sigma.get_mask(x), sy = sigma.get_mask(y);
                if ((sx & sy) != 0 && (sx & ~sy) != 0)
                    return hit({{"X", x}, {"Y", y}});
                if (x == 0)
                    break;
            }
        return std::nullopt;
    case ChoiceProperty::GammaExpansion:
        for (EventMask x = 0; x < count; ++x)
            for (EventMask y = 0; y < count; ++y)
                if ((sigma.get_mask(x & y) & ~sigma.get_mask(x | y)) != 0)
                    return hit({{"X", x}, {"Y", y}});
        return std::nullopt;
    case ChoiceProperty::IntersectionSelection:
        for (EventMask x = 0; x < count; ++x)
            for (EventMask y = 0; y < count; ++y)
                if (((sigma.get_mask(x) & sigma.get_mask(y)) & ~sigma.get_mask(x | y)) != 0)
                    return hit({{"X", x}, {"Y", y}});
        return std::nullopt;
    case ChoiceProperty::Aizerman:
        for (EventMask x = 0; x < count; ++x)
            for (EventMask y = x;; y = (y - 1) & x) {
                if ((sigma.get_mask(x) & ~y) == 0 &&
                    (sigma.get_mask(y) & ~sigma.get_mask(x)) != 0)
                    return hit({{"X", x}, {"Y", y}});
                if (y == 0)
                    break;
            }
        return std::nullopt;
    case ChoiceProperty::WIIA:
        for (EventMask y = 0; y < count; ++y)
            for (EventMask x = y;; x = (x - 1) & y) {
                if ((sigma.get_mask(y) & x) != 0 &&
                    (sigma.get_mask(x) & ~sigma.get_mask(y)) != 0)
                    return hit({{"X", x}, {"Y", y}});
                if (x == 0)
                    break;
            }
        return std::nullopt;
    case ChoiceProperty::RIIA:
    case ChoiceProperty::SetRationalizable:
        for (EventMask y = 0; y < count; ++y)
            for (EventMask x = y;; x = (x - 1) & y) {
                if ((sigma.get_mask(y) & ~x) == 0 && sigma.get_mask(x) != sigma.get_mask(y))
                    return hit({{"X", x}, {"Y", y}});
                if (x == 0)
                    break;
            }
        return std::nullopt;
    case ChoiceProperty::WARP: {
        // X R Y when some Z above Y selects exactly X; the revealed relation
        // must have no two-cycle between distinct sets
        std::map<std::pair<EventMask, EventMask>, EventMask> via;
        for (EventMask z = 0; z < count; ++z) {
            EventMask sel = sigma.get_mask(z);
            for (EventMask y = z;; y = (y - 1) & z) {
                via.emplace(std::make_pair(sel, y), z);
                if (y == 0)
                    break;
            }
        }
        for (const auto& [pair, z1] : via) {
            if (pair.first == pair.second)
                continue;
            auto back = via.find({pair.second, pair.first});
            if (back != via.end())
                return hit({{"X", pair.first},
                            {"Y", pair.second},
                            {"Z1", z1},
                            {"Z2", back->second}});
        }
        return std::nullopt;
    }
    case ChoiceProperty::DominanceStability:
        for (EventMask x = 0; x < count; ++x) {
            std::vector<Event> stable = dominance_stable_sets(sigma, ev(x));
            // the least element must exist and be the selection
            const Event* least = nullptr;
            for (const auto& s : stable) {
                bool minimal = true;
                for (const auto& other : stable)
                    if (!s.subset_of(other)) {
                        minimal = false;
                        break;
                    }
                if (minimal) {
                    least = &s;
                    break;
                }
            }
            if (!least || least->mask() != sigma.get_mask(x))
                return hit({{"X", x}, {"sigma(X)", sigma.get_mask(x)}});
        }
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace stablerev

#endif
