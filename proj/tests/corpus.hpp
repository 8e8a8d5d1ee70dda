// Shared fixtures: the running examples every suite leans on, plus a
// deterministic random-measure generator.
#ifndef STABLEREV_TESTS_CORPUS_HPP
#define STABLEREV_TESTS_CORPUS_HPP

#include <random>

#include "stablerev/serialize.hpp"

namespace corpus {

using namespace stablerev;

inline Threshold half() { return Threshold::from_t(Rational(1, 2)); }
inline Threshold two_thirds() { return Threshold::from_t(Rational(2, 3)); }
inline Threshold three_quarters() { return Threshold::from_t(Rational(3, 4)); }

inline Measure ints_measure(const Space& space, std::vector<long> parts) {
    std::vector<Rational> raw;
    raw.reserve(parts.size());
    for (long p : parts)
        raw.emplace_back(p);
    return Measure::normalized(space, raw);
}

// the 4 red / 3 green / 3 blue draw
inline Space rgb() { return Space::create({"R", "G", "B"}); }
inline Measure urn() { return ints_measure(rgb(), {4, 3, 3}); }

// weights 0.4 / 0.35 / 0.25
inline Space w3() { return Space::create({"w1", "w2", "w3"}); }
inline Measure tilted() { return ints_measure(w3(), {8, 7, 5}); }

inline Space species_space() {
    return Space::create({"Sparrow", "Turtle", "PitViper", "KingCobra", "Platypus"});
}
inline Measure species() { return ints_measure(species_space(), {40, 20, 20, 16, 4}); }
inline Event oviparous(const Space& s) {
    return Event::of_atoms(s, {"Sparrow", "Turtle", "KingCobra", "Platypus"});
}
inline Event venomous(const Space& s) {
    return Event::of_atoms(s, {"PitViper", "KingCobra", "Platypus"});
}
inline Event furry(const Space& s) { return Event::of_atoms(s, {"Platypus"}); }

inline WeightedGame college_council() {
    Space players = Space::create({"c", "m", "e", "h", "a", "d", "f"});
    std::vector<Rational> w{30, 25, 10, 4, 3, 2, 2};
    return WeightedGame{players, std::move(w), half()};
}

inline Space generic_space(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back("w" + std::to_string(i));
    return Space::create(labels);
}

/// Random measure with integer weights in [lo, hi] (regular when lo >= 1).
inline Measure random_measure(std::mt19937& rng, const Space& space, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    for (;;) {
        std::vector<long> parts(space.size());
        long sum = 0;
        for (auto& p : parts) {
            p = dist(rng);
            sum += p;
        }
        if (sum > 0)
            return ints_measure(space, parts);
    }
}

/// Random selection function keeping S1 and S2 only: a nonempty random
/// subset of each nonempty event.
inline SelectionFunction random_choice_table(std::mt19937& rng, const Space& space) {
    SelectionFunction sigma(space);
    sigma.set(Event::empty(space), Event::empty(space));
    for (EventMask m = 1; m < space.event_count(); ++m) {
        std::uniform_int_distribution<EventMask> dist(0, m);
        EventMask pick = 0;
        while (pick == 0)
            pick = dist(rng) & m ? (dist(rng) & m) : m;
        sigma.set(Event(space, m), Event(space, pick));
    }
    return sigma;
}

} // namespace corpus

#endif
