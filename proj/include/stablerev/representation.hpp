#ifndef STABLEREV_REPRESENTATION_HPP
#define STABLEREV_REPRESENTATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stablerev/comparative.hpp"
#include "stablerev/feasibility.hpp"
#include "stablerev/stability.hpp"

namespace stablerev {

// ---- axiom checking ---------------------------------------------------------

struct AxiomViolation {
    std::string axiom;
    std::string detail;
};

/// Verdicts for the selection-function axioms; a missing entry means pass.
struct AxiomReport {
    std::optional<AxiomViolation> s1, s2, s3, s4, s5, wo;

    bool all_pass() const { return !s1 && !s2 && !s3 && !s4 && !s5 && !wo; }
    std::optional<AxiomViolation> first() const {
        for (const auto* v : {&s1, &s2, &s3, &s4, &s5, &wo})
            if (*v)
                return **v;
        return std::nullopt;
    }
};

namespace detail {

inline std::string mask_name(const Space& space, EventMask m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < space.size(); ++i)
        if ((m >> i) & 1u) {
            if (!first)
                s += ",";
            s += space.atom(i);
            first = false;
        }
    return s + "}";
}

/// S4 instantiated over all families of singletons: for every event A, every
/// nonempty set X of atoms x with sigma(A u {x}) = {x} must have
/// sigma(A u X) included in X. This is the instantiation the representation
/// argument actually consumes.
inline std::optional<AxiomViolation> check_s4_singletons(const SelectionFunction& sigma) {
    const Space& space = sigma.space();
    const int n = space.size();
    for (EventMask a = 0; a < space.event_count(); ++a) {
        EventMask pool = 0;
        for (int x = 0; x < n; ++x)
            if (sigma.get_mask(a | (EventMask(1u) << x)) == (EventMask(1u) << x))
                pool |= EventMask(1u) << x;
        if (pool == 0)
            continue;
        for (EventMask x = pool;; x = (x - 1) & pool) {
            if (x != 0 && (sigma.get_mask(a | x) & ~x) != 0)
                return AxiomViolation{"S4", "family of singletons " + mask_name(space, x) +
                                                " over A=" + mask_name(space, a)};
            if (x == 0)
                break;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Checks S1, S2, S3, S4 (singleton families always; general families of up
/// to family_bound sets when the space has at most 5 atoms), S5 and the weak
/// Or rule for families of two and three sets.
inline AxiomReport check_axioms(const SelectionFunction& sigma, int family_bound = 3) {
    const Space& space = sigma.space();
    const int n = space.size();
    if (n > 10)
        throw BudgetError("axiom check limited to 10 atoms");
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    AxiomReport report;
    auto nm = [&](EventMask m) { return detail::mask_name(space, m); };

    for (EventMask x = 1; x < space.event_count() && !report.s1; ++x)
        if (sigma.get_mask(x) == 0)
            report.s1 = AxiomViolation{"S1", "sigma(" + nm(x) + ") is empty"};

    for (EventMask x = 0; x < space.event_count() && !report.s2; ++x)
        if ((sigma.get_mask(x) & ~x) != 0)
            report.s2 = AxiomViolation{"S2", "sigma(" + nm(x) + ") = " + nm(sigma.get_mask(x)) +
                                                 " leaves the input"};

    for (EventMask a = 0; a < space.event_count() && !report.s3; ++a) {
        EventMask sa = sigma.get_mask(a);
        for (EventMask b = 0; b < space.event_count(); ++b) {
            if ((sa & b) == 0)
                continue;
            if ((sigma.get_mask(a & b) & ~(sa & b)) != 0) {
                report.s3 = AxiomViolation{"S3", "A=" + nm(a) + ", B=" + nm(b)};
                break;
            }
        }
    }

    report.s4 = detail::check_s4_singletons(sigma);
    if (!report.s4 && n <= 5 && family_bound >= 1) {
        // general families: all events X with sigma(A u X) = X, up to
        // family_bound of them at a time
        for (EventMask a = 0; a < space.event_count() && !report.s4; ++a) {
            std::vector<EventMask> fixed;
            for (EventMask x = 0; x < space.event_count(); ++x)
                if (sigma.get_mask(a | x) == x)
                    fixed.push_back(x);
            size_t fs = fixed.size();
            for (size_t i = 0; i < fs && !report.s4; ++i) {
                EventMask u1 = fixed[i];
                if ((sigma.get_mask(a | u1) & ~u1) != 0) {
                    report.s4 = AxiomViolation{"S4", "A=" + nm(a) + ", X1=" + nm(fixed[i])};
                    break;
                }
                if (family_bound < 2)
                    continue;
                for (size_t j = i; j < fs && !report.s4; ++j) {
                    EventMask u2 = u1 | fixed[j];
                    if ((sigma.get_mask(a | u2) & ~u2) != 0) {
                        report.s4 = AxiomViolation{"S4", "A=" + nm(a) + ", X1=" + nm(fixed[i]) +
                                                             ", X2=" + nm(fixed[j])};
                        break;
                    }
                    if (family_bound < 3)
                        continue;
                    for (size_t l = j; l < fs; ++l) {
                        EventMask u3 = u2 | fixed[l];
                        if ((sigma.get_mask(a | u3) & ~u3) != 0) {
                            report.s4 = AxiomViolation{"S4", "A=" + nm(a) + ", X1=" + nm(fixed[i]) +
                                                                 ", X2=" + nm(fixed[j]) +
                                                                 ", X3=" + nm(fixed[l])};
                            break;
                        }
                    }
                }
            }
        }
    }

    // S5: pairwise disjoint A, B, C
    for (EventMask a = 0; a < space.event_count() && !report.s5; ++a) {
        EventMask resta = space.full_mask() & ~a;
        for (EventMask b = resta; !report.s5; b = (b - 1) & resta) {
            if ((sigma.get_mask(a | b) & ~a) == 0) {
                EventMask restb = resta & ~b;
                for (EventMask c = restb;; c = (c - 1) & restb) {
                    if ((sigma.get_mask(b | c) & ~b) == 0 && (sigma.get_mask(a | c) & ~a) != 0) {
                        report.s5 = AxiomViolation{"S5", "A=" + nm(a) + ", B=" + nm(b) +
                                                             ", C=" + nm(c)};
                        break;
                    }
                    if (c == 0)
                        break;
                }
            }
            if (b == 0)
                break;
        }
    }

    // weak Or for families of two and three sets
    auto wo_holds = [&](const std::vector<EventMask>& xs) {
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = 0; j < xs.size(); ++j)
                if (i != j && ((xs[i] & ~xs[j]) & ~sigma.get_mask(xs[i])) != 0)
                    return true; // side condition not met, instance vacuous
        EventMask un = 0, sel = 0;
        for (EventMask x : xs) {
            un |= x;
            sel |= sigma.get_mask(x);
        }
        return (sigma.get_mask(un) & ~sel) == 0;
    };
    for (EventMask x1 = 0; x1 < space.event_count() && !report.wo; ++x1)
        for (EventMask x2 = x1; x2 < space.event_count(); ++x2)
            if (!wo_holds({x1, x2})) {
                report.wo = AxiomViolation{"wO", "X1=" + nm(x1) + ", X2=" + nm(x2)};
                break;
            }
    if (!report.wo && n <= 7) {
        for (EventMask x1 = 0; x1 < space.event_count() && !report.wo; ++x1)
            for (EventMask x2 = x1; x2 < space.event_count() && !report.wo; ++x2)
                for (EventMask x3 = x2; x3 < space.event_count(); ++x3)
                    if (!wo_holds({x1, x2, x3})) {
                        report.wo = AxiomViolation{"wO", "X1=" + nm(x1) + ", X2=" + nm(x2) +
                                                             ", X3=" + nm(x3)};
                        break;
                    }
    }

    return report;
}

// ---- results ----------------------------------------------------------------

/// A binary relation pair over the events of one space: strict pairs (A, B)
/// read as A < B and weak pairs read as A <= B under any representing
/// measure.
struct RelationPair {
    Space space;
    std::set<std::pair<EventMask, EventMask>> strict;
    std::set<std::pair<EventMask, EventMask>> weak;
};

/// Outcome of a representability decision: exactly one of
///   - a measure that provably regenerates the input,
///   - a cancellation witness (adjusted counts for threshold deciders, plain
///     counts for the order deciders; its sequences always Pareto-dominate),
///   - an axiom counterexample that already rules representability out.
struct RepresentationResult {
    std::optional<Measure> measure;
    std::optional<ScottWitness> scott;         // adjusted-count witness
    std::optional<EventSequencePair> plain;    // plain-count witness
    std::optional<AxiomViolation> axiom;

    bool representable() const { return measure.has_value(); }
};

/// A constraint row read off a claimed comparison: the dominant side must
/// outweigh the dominated side, weakly or strictly.
struct ComparisonRow {
    Event dominant;
    Event dominated;
    RelTag tag;
};

namespace detail {

inline size_t small_count(const Int& v) {
    if (v < 0 || v > 100000)
        throw Error("internal: certificate multiplier out of expected range");
    return static_cast<size_t>(v);
}

/// Expands a certificate over tagged rows into a sequence pair: each row
/// contributes as many copies of its (dominant, dominated) position as its
/// multiplier says. Weak positions come first; the last position is strict
/// whenever any strict multiplier is positive.
inline EventSequencePair expand_certificate(const std::vector<ComparisonRow>& weak_rows,
                                            const std::vector<ComparisonRow>& strict_rows,
                                            const MotzkinCertificate& cert) {
    EventSequencePair pair;
    auto add = [&](const ComparisonRow& row, const Int& count) {
        for (size_t c = 0; c < small_count(count); ++c) {
            pair.a.push_back(row.dominant);
            pair.b.push_back(row.dominated);
            pair.rel.push_back(row.tag);
        }
    };
    for (size_t i = 0; i < weak_rows.size(); ++i)
        add(weak_rows[i], cert.alpha[i]);
    for (size_t j = 0; j < strict_rows.size(); ++j)
        add(strict_rows[j], cert.beta[j]);
    return pair;
}

} // namespace detail

/// The full constraint system of a selection function at a threshold: one row
/// per (atom, event) pair of the induced order. Solutions over the reals are
/// exactly the (non-normalized) measures whose revision plan is sigma.
struct ThresholdSystem {
    LinearSystem system;
    std::vector<ComparisonRow> weak;
    std::vector<ComparisonRow> strict;
};

inline ThresholdSystem build_threshold_system(const SelectionFunction& sigma, const Threshold& t) {
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    const Space& space = sigma.space();
    const int n = space.size();
    InducedOrder ord = induced_order(sigma);
    ThresholdSystem out;
    out.system.dimension = n;
    out.system.nonneg = false; // rows w > {} force positivity outright
    Rational p(t.p()), q(t.q());
    for (int w = 0; w < n; ++w) {
        EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
        for (EventMask x = rest;; x = (x - 1) & rest) {
            std::vector<Rational> row(n, Rational(0));
            if (ord.strict(w, x)) {
                row[w] = q;
                for (int i = 0; i < n; ++i)
                    if ((x >> i) & 1u)
                        row[i] -= p;
                out.system.strict_rows.push_back(std::move(row));
                out.strict.push_back({Event::singleton(space, w), Event(space, x), RelTag::Strict});
            } else {
                for (int i = 0; i < n; ++i)
                    if ((x >> i) & 1u)
                        row[i] = p;
                row[w] -= q;
                out.system.weak_rows.push_back(std::move(row));
                out.weak.push_back({Event(space, x), Event::singleton(space, w), RelTag::Weak});
            }
            if (x == 0)
                break;
        }
    }
    return out;
}

// ---- witness verification -----------------------------------------------------

/// A cancellation witness against sigma being representable at its threshold:
/// every position must lie in the induced order, the adjusted counts must
/// balance, and the final position must be strict.
inline bool verify_scott_witness(const SelectionFunction& sigma, const ScottWitness& w) {
    if (w.pair.size() == 0 || !sigma.is_total())
        return false;
    const Space& space = sigma.space();
    w.pair.validate(space);
    InducedOrder ord = induced_order(sigma);
    bool any_strict = false;
    for (size_t i = 0; i < w.pair.size(); ++i) {
        if (w.pair.rel[i] == RelTag::Strict) {
            any_strict = true;
            if (w.pair.a[i].size() != 1)
                return false;
            int atom = std::countr_zero(w.pair.a[i].mask());
            if (w.pair.b[i].contains(atom) || !ord.strict(atom, w.pair.b[i].mask()))
                return false;
        } else {
            if (w.pair.b[i].size() != 1)
                return false;
            int atom = std::countr_zero(w.pair.b[i].mask());
            if (w.pair.a[i].contains(atom) || ord.strict(atom, w.pair.a[i].mask()))
                return false;
        }
    }
    if (!any_strict || w.strict_index >= w.pair.size() ||
        w.pair.rel[w.strict_index] != RelTag::Strict)
        return false;
    return is_t_balanced(w.pair, w.threshold);
}

/// A cancellation witness against an order-decider input. Membership of each
/// position is delegated to the caller; the counts must be dominated when a
/// strict position exists and strictly dominated otherwise.
inline bool verify_order_witness(
    const Space& space, const EventSequencePair& pair,
    const std::function<bool(const Event&, const Event&, RelTag)>& member) {
    if (pair.size() == 0)
        return false;
    pair.validate(space);
    bool any_strict = false;
    for (size_t i = 0; i < pair.size(); ++i) {
        if (!member(pair.a[i], pair.b[i], pair.rel[i]))
            return false;
        any_strict = any_strict || pair.rel[i] == RelTag::Strict;
    }
    return any_strict ? is_dominated(pair, space) : is_strictly_dominated(pair, space);
}

// ---- representability at a threshold ------------------------------------------

namespace detail {

/// Gate for the regular case: S1, S2, S3 and singleton-family S4 are exactly
/// what the reduction from tables to induced-order constraints consumes, so
/// a feasible constraint system past this gate always regenerates sigma.
inline std::optional<AxiomViolation> representation_gate(const SelectionFunction& sigma) {
    const Space& space = sigma.space();
    auto nm = [&](EventMask m) { return mask_name(space, m); };
    for (EventMask x = 1; x < space.event_count(); ++x)
        if (sigma.get_mask(x) == 0)
            return AxiomViolation{"S1", "sigma(" + nm(x) + ") is empty"};
    for (EventMask x = 0; x < space.event_count(); ++x)
        if ((sigma.get_mask(x) & ~x) != 0)
            return AxiomViolation{"S2", "sigma(" + nm(x) + ") leaves the input"};
    for (EventMask a = 0; a < space.event_count(); ++a) {
        EventMask sa = sigma.get_mask(a);
        for (EventMask b = 0; b < space.event_count(); ++b) {
            if ((sa & b) == 0)
                continue;
            if ((sigma.get_mask(a & b) & ~(sa & b)) != 0)
                return AxiomViolation{"S3", "A=" + nm(a) + ", B=" + nm(b)};
        }
    }
    return check_s4_singletons(sigma);
}

/// Decides representability of a total selection function with no null
/// events except the empty one.
inline RepresentationResult decide_regular(const SelectionFunction& sigma, const Threshold& t) {
    RepresentationResult result;
    if (auto violation = representation_gate(sigma)) {
        result.axiom = violation;
        return result;
    }
    ThresholdSystem ts = build_threshold_system(sigma, t);
    FeasibilityOutcome outcome = solve(ts.system);
    if (outcome.feasible()) {
        Measure mu = Measure::normalized(sigma.space(), *outcome.ray);
        if (revision_operator(mu, t) != sigma)
            throw Error("internal: solved measure fails to regenerate the table");
        result.measure = std::move(mu);
        return result;
    }
    ScottWitness witness{expand_certificate(ts.weak, ts.strict, *outcome.certificate), t, 0};
    witness.strict_index = witness.pair.size() - 1;
    if (!verify_scott_witness(sigma, witness))
        throw Error("internal: extracted witness failed verification");
    result.scott = std::move(witness);
    return result;
}

} // namespace detail

/// Decides whether sigma is the revision plan of some measure at threshold t.
/// Null events beyond the empty one are allowed as long as they form an ideal
/// consistent with sigma; the decision then happens on the restriction to the
/// non-null atoms and the measure is extended with zero weights.
inline RepresentationResult decide_t_representable(const SelectionFunction& sigma,
                                                   const Threshold& t, int max_atoms = 10) {
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    const Space& space = sigma.space();
    if (space.size() > max_atoms)
        throw BudgetError("representation decider limited to " + std::to_string(max_atoms) +
                          " atoms");
    RepresentationResult result;
    auto nm = [&](EventMask m) { return detail::mask_name(space, m); };

    // S2 first: everything below leans on selections staying inside the input
    for (EventMask x = 0; x < space.event_count(); ++x)
        if ((sigma.get_mask(x) & ~x) != 0) {
            result.axiom = AxiomViolation{"S2", "sigma(" + nm(x) + ") leaves the input"};
            return result;
        }

    EventMask null_union = 0;
    for (EventMask x = 1; x < space.event_count(); ++x)
        if (sigma.get_mask(x) == 0)
            null_union |= x;
    if (null_union == 0)
        return detail::decide_regular(sigma, t);
    if (null_union == space.full_mask()) {
        result.axiom = AxiomViolation{"S1", "every atom is null: sigma(Omega) is empty"};
        return result;
    }

    // the null family must be the ideal of subsets of its union ...
    for (EventMask x = null_union;; x = (x - 1) & null_union) {
        if (x != 0 && sigma.get_mask(x) != 0) {
            result.axiom = AxiomViolation{
                "S1", "null events do not form an ideal: sigma(" + nm(x) + ") is nonempty but " +
                          nm(x) + " lies under the null union " + nm(null_union)};
            return result;
        }
        if (x == 0)
            break;
    }
    // ... and sigma must not distinguish events that differ by null atoms
    for (EventMask e = 0; e < space.event_count(); ++e) {
        EventMask live = e & ~null_union;
        if (live == 0) {
            if (sigma.get_mask(e) != 0) {
                result.axiom = AxiomViolation{
                    "S1", "null events do not form an ideal: sigma(" + nm(e) + ") is nonempty"};
                return result;
            }
        } else if (sigma.get_mask(e) != sigma.get_mask(live)) {
            result.axiom = AxiomViolation{
                "S1", "sigma(" + nm(e) + ") differs from sigma(" + nm(live) +
                          ") although they differ only by null atoms"};
            return result;
        }
    }

    // restrict to the live atoms, decide there, and map everything back
    std::vector<std::string> live_labels;
    std::vector<int> live_atoms;
    for (int i = 0; i < space.size(); ++i)
        if (!((null_union >> i) & 1u)) {
            live_labels.push_back(space.atom(i));
            live_atoms.push_back(i);
        }
    Space sub = Space::create(live_labels);
    auto project = [&](EventMask full) {
        EventMask m = 0;
        for (size_t k = 0; k < live_atoms.size(); ++k)
            if ((full >> live_atoms[k]) & 1u)
                m |= EventMask(1u) << k;
        return m;
    };
    auto inject = [&](EventMask small) {
        EventMask m = 0;
        for (size_t k = 0; k < live_atoms.size(); ++k)
            if ((small >> k) & 1u)
                m |= EventMask(1u) << live_atoms[k];
        return m;
    };
    SelectionFunction restricted(sub);
    for (EventMask x = 0; x < sub.event_count(); ++x)
        restricted.set(Event(sub, x), Event(sub, project(sigma.get_mask(inject(x)))));

    RepresentationResult inner = detail::decide_regular(restricted, t);
    if (inner.measure) {
        std::vector<Rational> weights(space.size(), Rational(0));
        for (size_t k = 0; k < live_atoms.size(); ++k)
            weights[live_atoms[k]] = inner.measure->weight(static_cast<int>(k));
        Measure mu = Measure::create(space, std::move(weights));
        if (revision_operator(mu, t) != sigma)
            throw Error("internal: extended measure fails to regenerate the table");
        result.measure = std::move(mu);
        return result;
    }
    if (inner.scott) {
        ScottWitness mapped{{}, t, inner.scott->strict_index};
        for (size_t i = 0; i < inner.scott->pair.size(); ++i) {
            mapped.pair.a.push_back(Event(space, inject(inner.scott->pair.a[i].mask())));
            mapped.pair.b.push_back(Event(space, inject(inner.scott->pair.b[i].mask())));
            mapped.pair.rel.push_back(inner.scott->pair.rel[i]);
        }
        if (!verify_scott_witness(sigma, mapped))
            throw Error("internal: mapped witness failed verification");
        result.scott = std::move(mapped);
        return result;
    }
    result.axiom = inner.axiom;
    return result;
}

/// Scans thresholds t = p/(p+q) with p+q <= max_denominator in increasing
/// order of t and returns the first one whose decider produces a measure.
/// A bounded search: absence does not refute representability at larger
/// denominators.
inline std::optional<std::pair<Threshold, Measure>> find_representable_threshold(
    const SelectionFunction& sigma, int max_denominator) {
    if (max_denominator < 2)
        throw DomainError("max denominator must be at least 2");
    std::vector<Rational> ts;
    for (int total = 2; total <= max_denominator; ++total)
        for (int p = (total + 1) / 2; p < total; ++p) {
            Rational t(p, total);
            if (t >= Rational(1, 2) && t < 1 && num(t) == p) // skip reducible forms
                ts.push_back(t);
        }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    bool first = true;
    for (const auto& tv : ts) {
        Threshold t = Threshold::from_t(tv);
        RepresentationResult r = decide_t_representable(sigma, t);
        if (r.measure)
            return std::make_pair(t, *r.measure);
        if (first && r.axiom)
            return std::nullopt; // the axiom gate does not depend on t
        first = false;
    }
    return std::nullopt;
}

// ---- order representability ---------------------------------------------------

namespace detail {

/// Shared core of the order deciders: weak rows force mu(dominant) >=
/// mu(dominated), strict rows the strict version, over nonnegative measures.
/// Multipliers of an infeasibility certificate expand into the plain-count
/// cancellation witness.
inline RepresentationResult decide_order_system(const Space& space,
                                                const std::vector<ComparisonRow>& weak_rows,
                                                const std::vector<ComparisonRow>& strict_rows) {
    const int n = space.size();
    LinearSystem sys;
    sys.dimension = n;
    sys.nonneg = true;
    auto to_row = [&](const ComparisonRow& r) {
        std::vector<Rational> row(n, Rational(0));
        for (int i = 0; i < n; ++i) {
            if (r.dominant.contains(i))
                row[i] += 1;
            if (r.dominated.contains(i))
                row[i] -= 1;
        }
        return row;
    };
    for (const auto& r : weak_rows)
        sys.weak_rows.push_back(to_row(r));
    for (const auto& r : strict_rows)
        sys.strict_rows.push_back(to_row(r));

    RepresentationResult result;
    if (strict_rows.empty() && weak_rows.empty()) {
        std::vector<Rational> uniform(n, Rational(1, n));
        result.measure = Measure::create(space, std::move(uniform));
        return result;
    }
    FeasibilityOutcome outcome = solve(sys);
    if (outcome.feasible()) {
        Measure mu = Measure::normalized(space, *outcome.ray);
        for (const auto& r : weak_rows)
            if (mu.mass(r.dominant) < mu.mass(r.dominated))
                throw Error("internal: measure violates a weak comparison");
        for (const auto& r : strict_rows)
            if (mu.mass(r.dominant) <= mu.mass(r.dominated))
                throw Error("internal: measure violates a strict comparison");
        result.measure = std::move(mu);
        return result;
    }
    result.plain = expand_certificate(weak_rows, strict_rows, *outcome.certificate);
    return result;
}

} // namespace detail

/// Almost representability of a weak relation: some measure with
/// mu(A) <= mu(B) for every pair A <= B. A refusal returns an all-weak
/// witness whose dominant-side counts are strictly below the dominated side.
inline RepresentationResult decide_almost_representable(const RelationPair& rel) {
    std::vector<ComparisonRow> weak_rows;
    for (const auto& [a, b] : rel.weak)
        weak_rows.push_back(
            {Event(rel.space, b), Event(rel.space, a), RelTag::Weak}); // B >= A
    RepresentationResult r = detail::decide_order_system(rel.space, weak_rows, {});
    if (r.plain) {
        auto member = [&](const Event& dom, const Event& sub, RelTag) {
            return rel.weak.count({sub.mask(), dom.mask()}) != 0;
        };
        if (!verify_order_witness(rel.space, *r.plain, member))
            throw Error("internal: order witness failed verification");
    }
    return r;
}

/// Joint weak representability of a (strict, weak) relation pair.
inline RepresentationResult decide_joint_weak_representable(const RelationPair& rel) {
    if (rel.strict.empty())
        return decide_almost_representable(rel);
    std::vector<ComparisonRow> weak_rows, strict_rows;
    for (const auto& [a, b] : rel.weak)
        weak_rows.push_back({Event(rel.space, b), Event(rel.space, a), RelTag::Weak});
    for (const auto& [a, b] : rel.strict)
        strict_rows.push_back({Event(rel.space, b), Event(rel.space, a), RelTag::Strict});
    RepresentationResult r = detail::decide_order_system(rel.space, weak_rows, strict_rows);
    if (r.plain) {
        auto member = [&](const Event& dom, const Event& sub, RelTag tag) {
            auto key = std::make_pair(sub.mask(), dom.mask());
            return tag == RelTag::Strict ? rel.strict.count(key) != 0 : rel.weak.count(key) != 0;
        };
        if (!verify_order_witness(rel.space, *r.plain, member))
            throw Error("internal: order witness failed verification");
    }
    return r;
}

/// Partial representability of a strict relation (A < B forces mu(A) < mu(B)).
inline RepresentationResult decide_partial_representable(const RelationPair& rel) {
    std::vector<ComparisonRow> strict_rows;
    for (const auto& [a, b] : rel.strict)
        strict_rows.push_back({Event(rel.space, b), Event(rel.space, a), RelTag::Strict});
    RepresentationResult r = detail::decide_order_system(rel.space, {}, strict_rows);
    if (r.plain) {
        auto member = [&](const Event& dom, const Event& sub, RelTag tag) {
            return tag == RelTag::Strict && rel.strict.count({sub.mask(), dom.mask()}) != 0;
        };
        if (!verify_order_witness(rel.space, *r.plain, member))
            throw Error("internal: order witness failed verification");
    }
    return r;
}

/// Strong representability of a weak relation: the derived strict relation
/// A < B iff [A <= B and not B <= A] must be partially represented alongside.
/// A symmetric relation derives an empty strict part and reduces to almost
/// representability.
inline RepresentationResult decide_strong_representable(const RelationPair& rel) {
    RelationPair derived{rel.space, {}, rel.weak};
    for (const auto& [a, b] : rel.weak)
        if (!rel.weak.count({b, a}))
            derived.strict.emplace(a, b);
    if (derived.strict.empty())
        return decide_almost_representable(derived);
    return decide_joint_weak_representable(derived);
}

/// Scott-style representability of a reflexive total order on all events:
/// a measure with A <= B iff mu(A) <= mu(B).
inline RepresentationResult decide_total_order_representable(const RelationPair& rel) {
    const Space& space = rel.space;
    for (EventMask a = 0; a < space.event_count(); ++a) {
        if (!rel.weak.count({a, a}))
            throw DomainError("order is not reflexive at " + detail::mask_name(space, a));
        for (EventMask b = 0; b < space.event_count(); ++b)
            if (!rel.weak.count({a, b}) && !rel.weak.count({b, a}))
                throw DomainError("order is not total at " + detail::mask_name(space, a) + ", " +
                                  detail::mask_name(space, b));
    }
    std::vector<ComparisonRow> weak_rows, strict_rows;
    for (EventMask a = 0; a < space.event_count(); ++a)
        for (EventMask b = 0; b < space.event_count(); ++b) {
            if (rel.weak.count({a, b}))
                weak_rows.push_back({Event(space, b), Event(space, a), RelTag::Weak});
            else
                strict_rows.push_back({Event(space, a), Event(space, b), RelTag::Strict});
        }
    RepresentationResult r = detail::decide_order_system(space, weak_rows, strict_rows);
    if (r.measure) {
        for (EventMask a = 0; a < space.event_count(); ++a)
            for (EventMask b = 0; b < space.event_count(); ++b) {
                bool claimed = rel.weak.count({a, b}) != 0;
                bool holds = r.measure->mass(Event(space, a)) <= r.measure->mass(Event(space, b));
                if (claimed != holds)
                    throw Error("internal: measure fails the order biconditional");
            }
    }
    if (r.plain) {
        auto member = [&](const Event& dom, const Event& sub, RelTag tag) {
            if (tag == RelTag::Weak)
                return rel.weak.count({sub.mask(), dom.mask()}) != 0;
            return rel.weak.count({dom.mask(), sub.mask()}) == 0;
        };
        if (!verify_order_witness(rel.space, *r.plain, member))
            throw Error("internal: order witness failed verification");
    }
    return r;
}

// ---- ratio comparisons ----------------------------------------------------------

/// A refusal witness for ratio representability: positions in the relation
/// (strict) or its complement reversed (weak), adjusted counts dominated,
/// and strictly dominated when no strict position occurs.
inline bool verify_k_witness(const Space& space,
                             const std::set<std::pair<EventMask, EventMask>>& strict_rel,
                             const Rational& k, const EventSequencePair& pair) {
    if (pair.size() == 0 || k < 1)
        return false;
    pair.validate(space);
    Threshold t = Threshold::from_ratio(k);
    bool any_strict = false;
    for (size_t i = 0; i < pair.size(); ++i) {
        if (pair.rel[i] == RelTag::Strict) {
            any_strict = true;
            if (!strict_rel.count({pair.a[i].mask(), pair.b[i].mask()}))
                return false;
        } else if (strict_rel.count({pair.b[i].mask(), pair.a[i].mask()})) {
            return false;
        }
    }
    if (!is_t_dominated(pair, t))
        return false;
    if (!any_strict) {
        std::vector<Int> left, right;
        detail::t_adjusted_counts(pair, t, left, right);
        for (size_t i = 0; i < left.size(); ++i)
            if (left[i] >= right[i])
                return false;
    }
    return true;
}

/// Decides whether a strict relation over events is exactly the relation
/// "more than k times as likely" of some probability measure:
///   A > B  iff  mu(A) > k * mu(B), for every ordered pair of events.
/// k must be at least 1. A refusal produces an adjusted-count witness whose
/// left counts never exceed the right counts.
inline RepresentationResult decide_k_representable(
    const Space& space, const std::set<std::pair<EventMask, EventMask>>& strict_rel,
    const Rational& k, int max_atoms = 6) {
    if (k < 1)
        throw DomainError("ratio representability requires k >= 1");
    if (space.size() > max_atoms)
        throw BudgetError("ratio decider limited to " + std::to_string(max_atoms) + " atoms");
    Threshold t = Threshold::from_ratio(k);
    Rational p(t.p()), q(t.q());
    const int n = space.size();

    LinearSystem sys;
    sys.dimension = n;
    sys.nonneg = true;
    std::vector<ComparisonRow> weak_rows, strict_rows;
    for (EventMask a = 0; a < space.event_count(); ++a)
        for (EventMask b = 0; b < space.event_count(); ++b) {
            std::vector<Rational> row(n, Rational(0));
            if (strict_rel.count({a, b})) {
                for (int i = 0; i < n; ++i) {
                    if ((a >> i) & 1u)
                        row[i] += q;
                    if ((b >> i) & 1u)
                        row[i] -= p;
                }
                sys.strict_rows.push_back(std::move(row));
                strict_rows.push_back({Event(space, a), Event(space, b), RelTag::Strict});
            } else {
                for (int i = 0; i < n; ++i) {
                    if ((b >> i) & 1u)
                        row[i] += p;
                    if ((a >> i) & 1u)
                        row[i] -= q;
                }
                sys.weak_rows.push_back(std::move(row));
                weak_rows.push_back({Event(space, b), Event(space, a), RelTag::Weak});
            }
        }

    RepresentationResult result;
    FeasibilityOutcome outcome = solve(sys);
    if (outcome.feasible()) {
        Measure mu = Measure::normalized(space, *outcome.ray);
        for (EventMask a = 0; a < space.event_count(); ++a)
            for (EventMask b = 0; b < space.event_count(); ++b) {
                bool claimed = strict_rel.count({a, b}) != 0;
                bool holds = mu.mass(Event(space, a)) > k * mu.mass(Event(space, b));
                if (claimed != holds)
                    throw Error("internal: measure fails the ratio biconditional");
            }
        result.measure = std::move(mu);
        return result;
    }
    ScottWitness witness{detail::expand_certificate(weak_rows, strict_rows, *outcome.certificate),
                         t, 0};
    for (size_t i = 0; i < witness.pair.size(); ++i)
        if (witness.pair.rel[i] == RelTag::Strict)
            witness.strict_index = i;
    if (!verify_k_witness(space, strict_rel, k, witness.pair))
        throw Error("internal: ratio witness failed verification");
    result.scott = std::move(witness);
    return result;
}

// ---- Fishburn structures ---------------------------------------------------------

struct FishburnResult {
    bool is_fishburn = false;
    std::optional<Measure> measure;          // partially represents the dominance order
    std::optional<AxiomViolation> violation; // which requirement failed
};

/// A Fishburn structure satisfies S1-S4 and has a partially representable
/// dominance order. For any representing measure, the selected set of every
/// nonempty event is stable under conditioning on it at threshold 1/2.
inline FishburnResult is_fishburn_structure(const SelectionFunction& sigma) {
    FishburnResult result;
    AxiomReport axioms = check_axioms(sigma);
    for (const auto* v : {&axioms.s1, &axioms.s2, &axioms.s3, &axioms.s4})
        if (*v) {
            result.violation = **v;
            return result;
        }
    DominanceRelation dom = dominance_relation(sigma);
    RelationPair rel{sigma.space(), {}, {}};
    for (const auto& [a, b] : dom.pairs())
        rel.strict.emplace(b, a); // A dominates B, so B < A in measure terms
    RepresentationResult partial = decide_partial_representable(rel);
    if (!partial.measure) {
        result.violation = AxiomViolation{"GFA", "dominance order admits no partial representation"};
        return result;
    }
    // sanity: sigma(A) is stable for the conditioned measure on every
    // nonempty, nonnull A
    Threshold half = Threshold::from_t(Rational(1, 2));
    const Space& space = sigma.space();
    for (EventMask a = 1; a < space.event_count(); ++a) {
        Event ev(space, a);
        if (partial.measure->mass(ev) == 0)
            continue;
        if (!is_stable(sigma.get(ev), conditional(*partial.measure, ev), half))
            throw Error("internal: selected set is not stable under the Fishburn measure");
    }
    result.is_fishburn = true;
    result.measure = partial.measure;
    return result;
}

// ---- threshold-separating construction --------------------------------------------

/// Builds the (m+n)-atom space, measure and selection function that are
/// representable at threshold t but stop being representable at any
/// threshold whose odds ratio K satisfies K^m - n*K >= 0. Requires
/// k^m - n*k < 0 and 0 < eps <= (n*k - k^m) / sum_{j<m} k^j for k = t/(1-t).
inline std::tuple<Space, Measure, SelectionFunction> generate_threshold_separator(
    const Threshold& t, int m, int n, const Rational& eps) {
    if (m < 1 || n < 1)
        throw DomainError("separator construction needs m >= 1 and n >= 1");
    Rational k = t.k();
    Rational km = 1;
    for (int j = 0; j < m; ++j)
        km *= k;
    if (km - Rational(n) * k >= 0)
        throw DomainError("separator construction needs k^m - n*k < 0");
    Rational geom = 0, kj = 1;
    for (int j = 0; j < m; ++j) {
        geom += kj;
        kj *= k;
    }
    if (eps <= 0 || eps > (Rational(n) * k - km) / geom)
        throw DomainError("eps outside (0, (n*k - k^m)/sum k^j]");

    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i)
        labels.push_back("b" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        labels.push_back("c" + std::to_string(i));
    Space space = Space::create(labels);

    std::vector<Rational> raw(space.size(), Rational(1));
    for (int i = 1; i <= m; ++i) {
        Rational power = 1;
        for (int j = 0; j < m - i + 1; ++j)
            power *= k;
        Rational tail = 0, kk = 1;
        for (int j = 0; j <= m - i; ++j) {
            tail += kk;
            kk *= k;
        }
        raw[i - 1] = power + eps * tail;
    }
    Measure mu = Measure::normalized(space, raw);
    SelectionFunction sigma = revision_operator(mu, t);

    // the construction must satisfy its defining selections
    for (int i = 1; i < m; ++i) {
        EventMask pair = (EventMask(1u) << (i - 1)) | (EventMask(1u) << i);
        if (sigma.get_mask(pair) != (EventMask(1u) << (i - 1)))
            throw Error("internal: separator construction broke a chain constraint");
    }
    for (int i = 0; i < n; ++i) {
        EventMask pair = (EventMask(1u) << (m - 1)) | (EventMask(1u) << (m + i));
        if (sigma.get_mask(pair) != (EventMask(1u) << (m - 1)))
            throw Error("internal: separator construction broke a floor constraint");
    }
    EventMask top = EventMask(1u);
    for (int i = 0; i < n; ++i)
        top |= EventMask(1u) << (m + i);
    if (sigma.get_mask(top) == EventMask(1u))
        throw Error("internal: separator construction failed the ceiling constraint");

    return {space, mu, sigma};
}

} // namespace stablerev

#endif
