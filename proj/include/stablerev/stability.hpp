#ifndef STABLEREV_STABILITY_HPP
#define STABLEREV_STABILITY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "stablerev/measure.hpp"
#include "stablerev/selection.hpp"
#include "stablerev/threshold.hpp"

namespace stablerev {

/// Whether X keeps conditional probability above t under conditioning on any
/// positive-probability event compatible with it. Decided by the defeater
/// criterion: an atom w of X defeats X when the test event X^c u {w} has
/// positive mass and mu(w) <= k * mu(X^c). Empty events do not count as
/// stable (the stability rule minimizes over nonempty stable sets).
inline bool is_stable(const Event& x, const Measure& mu, const Threshold& t) {
    if (x.space() != mu.space())
        throw DomainError("event belongs to a different space");
    if (x.is_empty())
        return false;
    Rational k = t.k();
    Rational outside = mu.mass(x.complement());
    for (int i = 0; i < mu.space().size(); ++i) {
        if (!x.contains(i))
            continue;
        const Rational& w = mu.weight(i);
        if (w > k * outside)
            continue;
        if (w == 0 && outside == 0)
            continue; // test event has mass zero, so it cannot defeat
        return false;
    }
    return true;
}

/// The strongest (subset-least) stable set: sort the support by descending
/// weight and return the first prefix whose lightest atom outweighs k times
/// the remaining mass. Ties are never split because k >= 1, so the tie-break
/// by atom order does not affect the result.
inline Event strongest_stable_set(const Measure& mu, const Threshold& t) {
    EventMask support = mu.support_mask();
    if (support == 0)
        throw DomainError("measure has empty support");
    std::vector<int> atoms;
    for (int i = 0; i < mu.space().size(); ++i)
        if ((support >> i) & 1u)
            atoms.push_back(i);
    std::stable_sort(atoms.begin(), atoms.end(),
                     [&](int a, int b) { return mu.weight(a) > mu.weight(b); });
    Rational k = t.k();
    EventMask prefix = 0;
    Rational prefix_mass = 0;
    for (size_t j = 0; j < atoms.size(); ++j) {
        prefix |= EventMask(1u) << atoms[j];
        prefix_mass += mu.weight(atoms[j]);
        // min weight of the prefix is the weight of its last (lightest) atom
        if (mu.weight(atoms[j]) > k * (1 - prefix_mass))
            return Event(mu.space(), prefix);
    }
    // unreachable: the full support always qualifies (remaining mass is 0)
    return Event(mu.space(), support);
}

/// Independent oracle for strongest_stable_set: enumerate all events, decide
/// stability from the raw conditional-probability definition, and take the
/// subset-least stable one.
inline Event brute_force_strongest_stable(const Measure& mu, const Threshold& t) {
    const Space& space = mu.space();
    if (space.size() > 12)
        throw BudgetError("brute-force oracle limited to 12 atoms");
    if (mu.support_mask() == 0)
        throw DomainError("measure has empty support");
    std::vector<Rational> mass(space.event_count());
    mass[0] = 0;
    for (EventMask m = 1; m < space.event_count(); ++m)
        mass[m] = mass[m & (m - 1)] + mu.weight(std::countr_zero(m));
    auto stable_by_definition = [&](EventMask x) {
        if (x == 0)
            return false;
        for (EventMask e = 1; e < space.event_count(); ++e) {
            if ((x & e) == 0 || mass[e] == 0)
                continue;
            if (mass[x & e] / mass[e] <= t.t())
                return false;
        }
        return true;
    };
    std::optional<EventMask> least;
    for (EventMask x = 1; x < space.event_count(); ++x) {
        if (!stable_by_definition(x))
            continue;
        if (!least || (x & ~*least) == 0)
            least = x;
    }
    // every stable event contains the minimum, so verify minimality outright
    for (EventMask x = 1; x < space.event_count(); ++x)
        if (stable_by_definition(x) && (*least & ~x) != 0)
            throw Error("no least stable event");
    return Event(space, *least);
}

/// All stable events contained in the support, in inclusion order. Stable
/// events of full measure that stretch beyond the support are supersets of
/// the last element and are omitted.
inline std::vector<Event> stable_chain(const Measure& mu, const Threshold& t) {
    const Space& space = mu.space();
    EventMask support = mu.support_mask();
    if (support == 0)
        throw DomainError("measure has empty support");
    std::vector<Event> chain;
    for (EventMask x = 1; x < space.event_count(); ++x) {
        if ((x & ~support) != 0)
            continue;
        Event e(space, x);
        if (is_stable(e, mu, t))
            chain.push_back(e);
    }
    std::sort(chain.begin(), chain.end(),
              [](const Event& a, const Event& b) { return a.size() < b.size(); });
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i].subset_of(chain[i + 1]))
            throw Error("stable events failed to form a chain");
    return chain;
}

/// The revision plan generated by mu and t: the total table
/// E -> strongest stable set of mu(.|E), with sigma(E) empty on null events.
inline SelectionFunction revision_operator(const Measure& mu, const Threshold& t) {
    const Space& space = mu.space();
    SelectionFunction sigma(space);
    for (EventMask e = 0; e < space.event_count(); ++e) {
        Event ev(space, e);
        if (mu.mass(ev) == 0)
            sigma.set(ev, Event::empty(space));
        else
            sigma.set(ev, strongest_stable_set(conditional(mu, ev), t));
    }
    return sigma;
}

/// Two measures generate the same revision plan exactly when they have the
/// same support and agree on the side of every fixed-odds hyperplane
/// mu(w) = k * mu(X), over all pairs (w, X) with w not in X.
inline bool revision_equivalent(const Measure& mu, const Measure& rho, const Threshold& t) {
    if (mu.space() != rho.space())
        throw DomainError("measures live on different spaces");
    if (mu.support_mask() != rho.support_mask())
        return false;
    const Space& space = mu.space();
    Rational k = t.k();
    for (int w = 0; w < space.size(); ++w) {
        EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
        for (EventMask x = rest;; x = (x - 1) & rest) {
            bool mu_side = mu.weight(w) > k * mu.mass(x);
            bool rho_side = rho.weight(w) > k * rho.mass(x);
            if (mu_side != rho_side)
                return false;
            if (x == 0)
                break;
        }
    }
    return true;
}

/// A half-open interval [lower, upper) of odds ratios k; upper is absent
/// when the interval is unbounded.
struct RatioInterval {
    Rational lower;
    std::optional<Rational> upper;

    bool contains(const Rational& k) const {
        return k >= lower && (!upper || k < *upper);
    }
};

/// The exact range of odds ratios k whose thresholds make mu generate sigma:
///   lower = max over weak pairs (X >= w, mu(X) > 0) of mu(w)/mu(X),
///   upper = min over strict pairs (w > X, mu(X) > 0) of mu(w)/mu(X).
/// Null dominated events contribute no upper bound; with no weak constraint
/// the interval is closed below at 0. Set clip_to_majority to intersect with
/// k >= 1, the regime of thresholds t >= 1/2.
inline RatioInterval threshold_interval(const Measure& mu, const SelectionFunction& sigma,
                                        bool clip_to_majority = false) {
    if (mu.space() != sigma.space())
        throw DomainError("measure and selection function live on different spaces");
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    const Space& space = mu.space();
    Rational lower = 0;
    std::optional<Rational> upper;
    for (int w = 0; w < space.size(); ++w) {
        EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
        for (EventMask x = rest;; x = (x - 1) & rest) {
            EventMask test = x | (EventMask(1u) << w);
            bool strict = sigma.get_mask(test) == (EventMask(1u) << w);
            Rational mx = mu.mass(x);
            if (strict) {
                if (mu.weight(w) == 0)
                    throw DomainError("selection function is not generated by the measure");
                if (mx > 0) {
                    Rational bound = mu.weight(w) / mx;
                    if (!upper || bound < *upper)
                        upper = bound;
                }
            } else if (mx > 0) {
                Rational bound = mu.weight(w) / mx;
                if (bound > lower)
                    lower = bound;
            } else if (mu.weight(w) > 0) {
                // mu(w) <= k * 0 cannot hold: sigma is not generated by mu
                throw DomainError("selection function is not generated by the measure");
            }
            if (x == 0)
                break;
        }
    }
    if (upper && *upper <= lower)
        throw DomainError("selection function is not generated by the measure");
    // verify the precondition: some majority-regime ratio in the interval
    // must regenerate sigma exactly
    Rational check = lower < 1 ? Rational(1) : lower;
    if (upper && *upper <= check)
        throw DomainError("selection function is not generated by the measure at any t >= 1/2");
    if (revision_operator(mu, Threshold::from_ratio(check)) != sigma)
        throw DomainError("selection function is not generated by the measure");
    if (clip_to_majority && lower < 1)
        lower = 1;
    return RatioInterval{lower, upper};
}

} // namespace stablerev

#endif
