#ifndef STABLEREV_LOGIC_HPP
#define STABLEREV_LOGIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stablerev/stability.hpp"

namespace stablerev {

/// A probabilistic model: a measure with a threshold, whose revision table
/// is materialized on first use. The consequence relation reads
///   A |~ B  iff  the selected set after learning A entails B, or A is null.
class Model {
public:
    Model(Measure mu, Threshold t) : mu_(std::move(mu)), t_(std::move(t)) {}

    const Measure& measure() const { return mu_; }
    const Threshold& threshold() const { return t_; }
    const Space& space() const { return mu_.space(); }

    const SelectionFunction& sigma() const {
        if (!sigma_)
            sigma_ = std::make_shared<SelectionFunction>(revision_operator(mu_, t_));
        return *sigma_;
    }

    bool consequence_mask(EventMask a, EventMask b) const {
        if ((a & mu_.support_mask()) == 0)
            return true; // null antecedent
        return (sigma().get_mask(a) & ~b) == 0;
    }

private:
    Measure mu_;
    Threshold t_;
    mutable std::shared_ptr<SelectionFunction> sigma_;
};

inline bool consequence(const Model& model, const Event& a, const Event& b) {
    if (a.space() != model.space() || b.space() != model.space())
        throw DomainError("event belongs to a different space");
    return model.consequence_mask(a.mask(), b.mask());
}

/// The atypical part of an event: what learning it rules out.
inline Event atypical(const Model& model, const Event& a) {
    return a.minus(model.sigma().get(a));
}

enum class RuleId {
    Ref,
    LeftEquiv,
    RightWeak,
    And,
    Or,
    ExOr,
    WAnd,
    WOr,
    Cut,
    CM,
    RM,
    VCM,
    WO2,
    WO3,
};

inline const char* rule_name(RuleId rule) {
    switch (rule) {
    case RuleId::Ref: return "Ref";
    case RuleId::LeftEquiv: return "LeftEquiv";
    case RuleId::RightWeak: return "RightWeak";
    case RuleId::And: return "And";
    case RuleId::Or: return "Or";
    case RuleId::ExOr: return "exOr";
    case RuleId::WAnd: return "WAnd";
    case RuleId::WOr: return "WOr";
    case RuleId::Cut: return "Cut";
    case RuleId::CM: return "CM";
    case RuleId::RM: return "RM";
    case RuleId::VCM: return "VCM";
    case RuleId::WO2: return "wO2";
    case RuleId::WO3: return "wO3";
    }
    return "?";
}

inline std::optional<RuleId> rule_from_name(const std::string& name) {
    for (RuleId r : {RuleId::Ref, RuleId::LeftEquiv, RuleId::RightWeak, RuleId::And, RuleId::Or,
                     RuleId::ExOr, RuleId::WAnd, RuleId::WOr, RuleId::Cut, RuleId::CM, RuleId::RM,
                     RuleId::VCM, RuleId::WO2, RuleId::WO3})
        if (name == rule_name(r))
            return r;
    return std::nullopt;
}

/// An instantiation making every premise true and the conclusion false;
/// events are listed with the variable names of the rule schema.
struct RuleCounterexample {
    RuleId rule;
    std::vector<std::pair<std::string, Event>> events;
};

/// Exhaustively instantiates the rule over all events of the model's space,
/// in lexicographic mask order, and returns the first counterexample.
inline std::optional<RuleCounterexample> check_rule(const Model& model, RuleId rule) {
    const Space& space = model.space();
    const int n = space.size();
    if (n > 5)
        throw BudgetError("rule scan limited to 5 atoms");
    const EventMask count = static_cast<EventMask>(space.event_count());
    const EventMask full = space.full_mask();
    auto cons = [&](EventMask a, EventMask b) { return model.consequence_mask(a, b); };
    auto ev = [&](EventMask m) { return Event(space, m); };
    auto hit = [&](std::vector<std::pair<std::string, EventMask>> vars) {
        RuleCounterexample cx{rule, {}};
        for (auto& [name, mask] : vars)
            cx.events.emplace_back(name, ev(mask));
        return cx;
    };

    switch (rule) {
    case RuleId::Ref:
        for (EventMask a = 0; a < count; ++a)
            if (!cons(a, a))
                return hit({{"A", a}});
        return std::nullopt;
    case RuleId::LeftEquiv:
        // events are extensional, so equivalent antecedents are identical
        return std::nullopt;
    case RuleId::RightWeak:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b) {
                if (!cons(a, b))
                    continue;
                for (EventMask c = 0; c < count; ++c)
                    if ((b & ~c) == 0 && !cons(a, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
            }
        return std::nullopt;
    case RuleId::And:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, b) && cons(a, c) && !cons(a, b & c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::Or:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, c) && cons(b, c) && !cons(a | b, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::ExOr:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask c = 0; c < count; ++c)
                if (cons(a, c) && cons(full & ~a, c) && !cons(full, c))
                    return hit({{"A", a}, {"C", c}});
        return std::nullopt;
    case RuleId::WAnd:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, b) && cons(a & ~c, c) && !cons(a, b & c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::WOr:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a & b, c) && cons(a & ~b, c) && !cons(a, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::Cut:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a & b, c) && cons(a, b) && !cons(a, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::CM:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, b) && cons(a, c) && !cons(a & b, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::RM:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, c) && !cons(a, full & ~b) && !cons(a & b, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::VCM:
        for (EventMask a = 0; a < count; ++a)
            for (EventMask b = 0; b < count; ++b)
                for (EventMask c = 0; c < count; ++c)
                    if (cons(a, b & c) && !cons(a & b, c))
                        return hit({{"A", a}, {"B", b}, {"C", c}});
        return std::nullopt;
    case RuleId::WO2:
    case RuleId::WO3: {
        const SelectionFunction& sigma = model.sigma();
        auto side_ok = [&](const std::vector<EventMask>& xs) {
            for (size_t i = 0; i < xs.size(); ++i)
                for (size_t j = 0; j < xs.size(); ++j)
                    if (i != j && ((xs[i] & ~xs[j]) & ~sigma.get_mask(xs[i])) != 0)
                        return false;
            return true;
        };
        int arity = rule == RuleId::WO2 ? 2 : 3;
        std::vector<EventMask> xs(arity, 0);
        for (EventMask x1 = 0; x1 < count; ++x1)
            for (EventMask x2 = 0; x2 < count; ++x2) {
                if (arity == 2) {
                    xs = {x1, x2};
                    if (!side_ok(xs))
                        continue;
                    for (EventMask c = 0; c < count; ++c)
                        if (cons(x1, c) && cons(x2, c) && !cons(x1 | x2, c))
                            return hit({{"X1", x1}, {"X2", x2}, {"A", c}});
                } else {
                    for (EventMask x3 = 0; x3 < count; ++x3) {
                        xs = {x1, x2, x3};
                        if (!side_ok(xs))
                            continue;
                        for (EventMask c = 0; c < count; ++c)
                            if (cons(x1, c) && cons(x2, c) && cons(x3, c) &&
                                !cons(x1 | x2 | x3, c))
                                return hit({{"X1", x1}, {"X2", x2}, {"X3", x3}, {"A", c}});
                    }
                }
            }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

/// Failure statistics for the Or rule over the grid of measures with the
/// given denominator, plus the constructive witness measure with
/// weight a = midpoint of (t/(2-t), t] on the first atom and (1-a)/2 on the
/// next two.
struct OrFailureRegion {
    long long sampled = 0;
    long long failures = 0;
    Rational fraction;
    Measure witness;
};

inline OrFailureRegion find_or_failure_region(const Space& space, const Threshold& t,
                                              int grid_denominator) {
    const int n = space.size();
    if (n < 3)
        throw DomainError("Or-failure region needs at least 3 atoms");
    if (n > 4 || grid_denominator > 24)
        throw BudgetError("Or-failure grid limited to 4 atoms and denominator 24");

    // constructive witness
    Rational low = t.t() / (2 - t.t());
    Rational a = (low + t.t()) / 2;
    std::vector<Rational> w(n, Rational(0));
    w[0] = a;
    w[1] = (1 - a) / 2;
    w[2] = (1 - a) / 2;
    Measure witness = Measure::create(space, std::move(w));
    if (!check_rule(Model(witness, t), RuleId::Or))
        throw Error("internal: constructed witness fails to break the Or rule");

    OrFailureRegion out{0, 0, Rational(0), witness};
    std::vector<int> parts(n, 0);
    auto scan = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == n - 1) {
            parts[idx] = remaining;
            std::vector<Rational> weights;
            weights.reserve(n);
            for (int i = 0; i < n; ++i)
                weights.emplace_back(parts[i], grid_denominator);
            Measure mu = Measure::create(space, std::move(weights));
            if (mu.support_mask() == 0)
                return;
            ++out.sampled;
            if (check_rule(Model(mu, t), RuleId::Or))
                ++out.failures;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    scan(scan, 0, grid_denominator);
    out.fraction = Rational(out.failures, out.sampled);
    return out;
}

} // namespace stablerev

#endif
