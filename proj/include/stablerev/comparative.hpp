#ifndef STABLEREV_COMPARATIVE_HPP
#define STABLEREV_COMPARATIVE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stablerev/selection.hpp"
#include "stablerev/threshold.hpp"

namespace stablerev {

// ---- sequences and balancedness --------------------------------------------

enum class RelTag { Strict, Weak };

/// Two aligned sequences of events; rel[i] records whether position i claims
/// a strict (A_i > B_i) or weak (A_i >= B_i) comparison.
struct EventSequencePair {
    std::vector<Event> a;
    std::vector<Event> b;
    std::vector<RelTag> rel;

    size_t size() const { return a.size(); }

    void validate(const Space& space) const {
        if (a.size() != b.size() || a.size() != rel.size())
            throw DomainError("sequence pair fields must have equal length");
        for (const auto& e : a)
            if (e.space() != space)
                throw DomainError("sequence event on a different space");
        for (const auto& e : b)
            if (e.space() != space)
                throw DomainError("sequence event on a different space");
    }
};

/// Per-atom occurrence counts across a sequence of events.
inline std::vector<Int> occurrence_counts(const Space& space, const std::vector<Event>& seq) {
    std::vector<Int> counts(space.size(), Int(0));
    for (const auto& e : seq) {
        if (e.space() != space)
            throw DomainError("sequence event on a different space");
        for (int i = 0; i < space.size(); ++i)
            if (e.contains(i))
                ++counts[i];
    }
    return counts;
}

/// Plain balancedness: every atom occurs equally often on both sides.
inline bool is_balanced(const EventSequencePair& pair, const Space& space) {
    pair.validate(space);
    return occurrence_counts(space, pair.a) == occurrence_counts(space, pair.b);
}

/// A-side counts <= B-side counts for every atom.
inline bool is_dominated(const EventSequencePair& pair, const Space& space) {
    pair.validate(space);
    auto ca = occurrence_counts(space, pair.a);
    auto cb = occurrence_counts(space, pair.b);
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] > cb[i])
            return false;
    return true;
}

/// A-side counts strictly below B-side counts for every atom.
inline bool is_strictly_dominated(const EventSequencePair& pair, const Space& space) {
    pair.validate(space);
    auto ca = occurrence_counts(space, pair.a);
    auto cb = occurrence_counts(space, pair.b);
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] >= cb[i])
            return false;
    return true;
}

namespace detail {

/// Adjusted occurrence counts for threshold t = p/(p+q): an occurrence on the
/// dominant side of a strict comparison weighs q and of a weak one p; on the
/// dominated side p for strict and q for weak.
inline void t_adjusted_counts(const EventSequencePair& pair, const Threshold& t,
                              std::vector<Int>& left, std::vector<Int>& right) {
    int n = pair.a.empty() ? 0 : pair.a[0].space().size();
    left.assign(n, Int(0));
    right.assign(n, Int(0));
    for (size_t i = 0; i < pair.size(); ++i) {
        const Int& la = (pair.rel[i] == RelTag::Strict) ? t.q() : t.p();
        const Int& rb = (pair.rel[i] == RelTag::Strict) ? t.p() : t.q();
        for (int k = 0; k < n; ++k) {
            if (pair.a[i].contains(k))
                left[k] += la;
            if (pair.b[i].contains(k))
                right[k] += rb;
        }
    }
}

} // namespace detail

/// t-balancedness: adjusted left and right counts agree on every atom.
/// Independent of the chosen ratio representation of t because (p, q) is the
/// coprime pair.
inline bool is_t_balanced(const EventSequencePair& pair, const Threshold& t) {
    if (pair.size() == 0)
        return true;
    pair.validate(pair.a[0].space());
    std::vector<Int> left, right;
    detail::t_adjusted_counts(pair, t, left, right);
    return left == right;
}

/// Adjusted left counts bounded by adjusted right counts on every atom; the
/// non-regular variant of the cancellation antecedent.
inline bool is_t_dominated(const EventSequencePair& pair, const Threshold& t) {
    if (pair.size() == 0)
        return true;
    pair.validate(pair.a[0].space());
    std::vector<Int> left, right;
    detail::t_adjusted_counts(pair, t, left, right);
    for (size_t i = 0; i < left.size(); ++i)
        if (left[i] > right[i])
            return false;
    return true;
}

// ---- the sigma-induced order ------------------------------------------------

/// The order induced by a selection function on (atom, event) pairs with the
/// atom outside the event: w > X exactly when sigma(X u {w}) = {w}, and
/// X >= w otherwise. Every such pair falls on exactly one side.
class InducedOrder {
public:
    InducedOrder(Space space, std::vector<std::vector<bool>> strict)
        : space_(std::move(space)), strict_(std::move(strict)) {}

    const Space& space() const { return space_; }

    /// w > X; requires w not in X.
    bool strict(int atom, EventMask x) const {
        if ((x >> atom) & 1u)
            throw DomainError("induced order queried with atom inside the event");
        return strict_[atom][x];
    }

    /// X >= w; requires w not in X.
    bool weak(EventMask x, int atom) const { return !strict(atom, x); }

private:
    Space space_;
    std::vector<std::vector<bool>> strict_;
};

inline InducedOrder induced_order(const SelectionFunction& sigma) {
    const Space& space = sigma.space();
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    std::vector<std::vector<bool>> strict(space.size(),
                                          std::vector<bool>(space.event_count(), false));
    for (int w = 0; w < space.size(); ++w) {
        EventMask bit = EventMask(1u) << w;
        EventMask rest = space.full_mask() & ~bit;
        for (EventMask x = rest;; x = (x - 1) & rest) {
            strict[w][x] = sigma.get_mask(x | bit) == bit;
            if (x == 0)
                break;
        }
    }
    return InducedOrder(space, std::move(strict));
}

// ---- bounded search for cancellation violations -----------------------------

/// A sequence pair violating the cancellation axiom for its threshold: it is
/// t-balanced, every position lies in the induced order, and the position at
/// strict_index (by convention the last) is strict.
struct ScottWitness {
    EventSequencePair pair;
    Threshold threshold;
    size_t strict_index;
};

/// Exhaustive search for a Scott[t] violation among multisets of induced-order
/// comparisons of size <= max_len whose atoms lie in a common subset of at
/// most max_len atoms. A desk-scale oracle: absence within the bound proves
/// nothing; the feasibility engine is the decider.
inline std::optional<ScottWitness> find_scott_violation(const SelectionFunction& sigma,
                                                        const Threshold& t, int max_len) {
    const Space& space = sigma.space();
    const int n = space.size();
    if (max_len < 1)
        return std::nullopt;
    InducedOrder order = induced_order(sigma);
    if (t.p() > 1000000 || t.q() > 1000000)
        throw BudgetError("scott search restricted to small threshold numerators");
    const long long p = static_cast<long long>(t.p());
    const long long q = static_cast<long long>(t.q());

    struct Comparison {
        bool strict;
        int atom;
        EventMask x;
    };

    // subsets in canonical order: by size, then by mask value
    std::vector<EventMask> subsets;
    for (EventMask s = 1; s < space.event_count(); ++s)
        if (std::popcount(s) <= max_len)
            subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](EventMask a, EventMask b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });

    std::vector<long long> net(n, 0);
    std::vector<size_t> chosen;
    for (EventMask s : subsets) {
        std::vector<Comparison> pool;
        for (int w = 0; w < n; ++w) {
            if (!((s >> w) & 1u))
                continue;
            EventMask rest = s & ~(EventMask(1u) << w);
            for (EventMask x = rest;; x = (x - 1) & rest) {
                pool.push_back({order.strict(w, x), w, x});
                if (x == 0)
                    break;
            }
        }
        std::fill(net.begin(), net.end(), 0);
        chosen.clear();
        int strict_count = 0;

        // net holds adjusted left minus right counts for the chosen multiset
        auto apply = [&](const Comparison& c, int dir) {
            if (c.strict) {
                net[c.atom] += dir * q;
                for (int a = 0; a < n; ++a)
                    if ((c.x >> a) & 1u)
                        net[a] -= dir * p;
            } else {
                for (int a = 0; a < n; ++a)
                    if ((c.x >> a) & 1u)
                        net[a] += dir * p;
                net[c.atom] -= dir * q;
            }
        };

        std::optional<ScottWitness> found;
        auto dfs = [&](auto&& self, size_t from, int remaining) -> void {
            if (found)
                return;
            if (strict_count > 0 && !chosen.empty()) {
                bool balanced = true;
                for (int a = 0; a < n; ++a)
                    if (net[a] != 0) {
                        balanced = false;
                        break;
                    }
                if (balanced) {
                    // assemble: weak positions first, final position strict
                    EventSequencePair pair;
                    auto push = [&](const Comparison& c) {
                        if (c.strict) {
                            pair.a.push_back(Event::singleton(space, c.atom));
                            pair.b.push_back(Event(space, c.x));
                            pair.rel.push_back(RelTag::Strict);
                        } else {
                            pair.a.push_back(Event(space, c.x));
                            pair.b.push_back(Event::singleton(space, c.atom));
                            pair.rel.push_back(RelTag::Weak);
                        }
                    };
                    for (size_t idx : chosen)
                        if (!pool[idx].strict)
                            push(pool[idx]);
                    for (size_t idx : chosen)
                        if (pool[idx].strict)
                            push(pool[idx]);
                    found = ScottWitness{std::move(pair), t, chosen.size() - 1};
                    return;
                }
            }
            if (remaining == 0)
                return;
            for (int a = 0; a < n; ++a) {
                long long bound = remaining * std::max(p, q);
                if (net[a] > bound || net[a] < -bound)
                    return;
            }
            for (size_t j = from; j < pool.size(); ++j) {
                apply(pool[j], +1);
                chosen.push_back(j);
                strict_count += pool[j].strict ? 1 : 0;
                self(self, j, remaining - 1);
                strict_count -= pool[j].strict ? 1 : 0;
                chosen.pop_back();
                apply(pool[j], -1);
                if (found)
                    return;
            }
        };
        dfs(dfs, 0, max_len);
        if (found)
            return found;
    }
    return std::nullopt;
}

// ---- classical order properties ---------------------------------------------

struct OrderPropertyResult {
    bool holds = true;
    std::string counterexample; // empty when the property holds
};

struct OrderPropertiesReport {
    OrderPropertyResult m1, m2, m3, m4, sc;

    bool all_pass() const {
        return m1.holds && m2.holds && m3.holds && m4.holds && sc.holds;
    }
};

/// Exhaustively verifies M1-M4 and, bounded by `bound` sequence length, the
/// plain cancellation property (Sc) of the induced order.
inline OrderPropertiesReport check_order_properties(const SelectionFunction& sigma, int bound) {
    const Space& space = sigma.space();
    const int n = space.size();
    if (n > 6)
        throw BudgetError("order property scan limited to 6 atoms");
    InducedOrder ord = induced_order(sigma);
    OrderPropertiesReport report;
    auto name = [&](int a) { return space.atom(a); };
    auto set_name = [&](EventMask m) {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1u) {
                if (!first)
                    s += ",";
                s += space.atom(i);
                first = false;
            }
        return s + "}";
    };

    // M1: w > X and Y subset of X imply w > Y
    for (int w = 0; w < n && report.m1.holds; ++w) {
        EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
        for (EventMask x = rest; report.m1.holds; x = (x - 1) & rest) {
            if (ord.strict(w, x))
                for (EventMask y = x;; y = (y - 1) & x) {
                    if (!ord.strict(w, y)) {
                        report.m1 = {false, "M1: " + name(w) + " > " + set_name(x) +
                                                " but not " + name(w) + " > " + set_name(y)};
                        break;
                    }
                    if (y == 0)
                        break;
                }
            if (x == 0)
                break;
        }
    }

    // M2: w > X, v in X, v > Y imply w > (X \ {v}) u Y  (when in domain)
    for (int w = 0; w < n && report.m2.holds; ++w) {
        EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
        for (EventMask x = rest; report.m2.holds; x = (x - 1) & rest) {
            if (ord.strict(w, x)) {
                for (int v = 0; v < n && report.m2.holds; ++v) {
                    if (!((x >> v) & 1u))
                        continue;
                    EventMask vrest = space.full_mask() & ~(EventMask(1u) << v);
                    for (EventMask y = vrest;; y = (y - 1) & vrest) {
                        if (ord.strict(v, y)) {
                            EventMask target = (x & ~(EventMask(1u) << v)) | y;
                            if (!((target >> w) & 1u) && !ord.strict(w, target)) {
                                report.m2 = {false, "M2 fails at " + name(w) + ", " + name(v) +
                                                        ", " + set_name(x) + ", " + set_name(y)};
                                break;
                            }
                        }
                        if (y == 0)
                            break;
                    }
                }
            }
            if (x == 0)
                break;
        }
    }

    // M3: w1 !> B1, w2 !> B2, B1 and B2 disjoint imply
    //     every w > B1 u B2 also has w > {w1, w2}   (when in domain)
    for (int w1 = 0; w1 < n && report.m3.holds; ++w1)
        for (int w2 = 0; w2 < n && report.m3.holds; ++w2)
            for (EventMask b1 = 0; b1 < space.event_count() && report.m3.holds; ++b1) {
                if ((b1 >> w1) & 1u)
                    continue;
                if (ord.strict(w1, b1))
                    continue;
                EventMask b2rest = space.full_mask() & ~b1;
                for (EventMask b2 = b2rest;; b2 = (b2 - 1) & b2rest) {
                    if (!((b2 >> w2) & 1u) && !ord.strict(w2, b2)) {
                        EventMask pairmask = (EventMask(1u) << w1) | (EventMask(1u) << w2);
                        for (int w = 0; w < n; ++w) {
                            EventMask u = b1 | b2;
                            if (((u >> w) & 1u) || ((pairmask >> w) & 1u))
                                continue;
                            if (ord.strict(w, u) && !ord.strict(w, pairmask)) {
                                report.m3 = {false, "M3 fails at " + name(w) + " with " +
                                                        set_name(b1) + ", " + set_name(b2)};
                                break;
                            }
                        }
                    }
                    if (b2 == 0 || !report.m3.holds)
                        break;
                }
            }

    // M4: [exists X, w with w !> X u {v1} and w > X u {v2}] implies v1 > {v2}
    for (int v1 = 0; v1 < n && report.m4.holds; ++v1)
        for (int v2 = 0; v2 < n && report.m4.holds; ++v2) {
            if (v1 == v2)
                continue;
            EventMask pairbits = (EventMask(1u) << v1) | (EventMask(1u) << v2);
            for (int w = 0; w < n && report.m4.holds; ++w) {
                if (w == v1 || w == v2)
                    continue;
                EventMask rest = space.full_mask() & ~pairbits & ~(EventMask(1u) << w);
                for (EventMask x = rest;; x = (x - 1) & rest) {
                    if (!ord.strict(w, x | (EventMask(1u) << v1)) &&
                        ord.strict(w, x | (EventMask(1u) << v2)) &&
                        !ord.strict(v1, EventMask(1u) << v2)) {
                        report.m4 = {false, "M4 fails at " + name(v1) + ", " + name(v2) +
                                                " via " + name(w) + ", " + set_name(x)};
                        break;
                    }
                    if (x == 0)
                        break;
                }
            }
        }

    // Sc: balanced (A_i), (B_i) with w_i > A_i for all i force some w_i > B_i
    {
        std::vector<std::pair<int, EventMask>> strict_pairs;
        for (int w = 0; w < n; ++w) {
            EventMask rest = space.full_mask() & ~(EventMask(1u) << w);
            for (EventMask x = rest;; x = (x - 1) & rest) {
                if (ord.strict(w, x))
                    strict_pairs.emplace_back(w, x);
                if (x == 0)
                    break;
            }
        }
        std::vector<size_t> picks;
        std::vector<EventMask> bs;
        auto counts_of = [&](const std::vector<EventMask>& sets) {
            std::vector<int> c(n, 0);
            for (EventMask m : sets)
                for (int i = 0; i < n; ++i)
                    if ((m >> i) & 1u)
                        ++c[i];
            return c;
        };
        std::optional<std::string> violation;
        long long steps = 0;
        auto try_bs = [&](auto&& self, size_t idx, std::vector<int>& deficit) -> void {
            if (violation)
                return;
            if (++steps > 100000000)
                throw BudgetError("Sc search budget exceeded; lower the bound");
            if (idx == picks.size()) {
                for (int c : deficit)
                    if (c != 0)
                        return;
                std::string msg = "Sc fails for picks";
                for (size_t i = 0; i < picks.size(); ++i)
                    msg += " " + name(strict_pairs[picks[i]].first) + ">" +
                           set_name(strict_pairs[picks[i]].second) + "/" + set_name(bs[i]);
                violation = msg;
                return;
            }
            int w = strict_pairs[picks[idx]].first;
            // candidate B_i may only spend atoms with remaining deficit
            EventMask allowed = space.full_mask() & ~(EventMask(1u) << w);
            for (int i = 0; i < n; ++i)
                if (deficit[i] == 0)
                    allowed &= ~(EventMask(1u) << i);
            for (EventMask b = allowed;; b = (b - 1) & allowed) {
                if (!ord.strict(w, b)) {
                    for (int i = 0; i < n; ++i)
                        if ((b >> i) & 1u)
                            --deficit[i];
                    bs.push_back(b);
                    self(self, idx + 1, deficit);
                    bs.pop_back();
                    for (int i = 0; i < n; ++i)
                        if ((b >> i) & 1u)
                            ++deficit[i];
                }
                if (b == 0 || violation)
                    break;
            }
        };
        auto dfs_picks = [&](auto&& self, size_t from, int remaining) -> void {
            if (violation)
                return;
            if (!picks.empty()) {
                std::vector<EventMask> as;
                for (size_t i : picks)
                    as.push_back(strict_pairs[i].second);
                std::vector<int> deficit = counts_of(as);
                bs.clear();
                try_bs(try_bs, 0, deficit);
                if (violation)
                    return;
            }
            if (remaining == 0)
                return;
            for (size_t j = from; j < strict_pairs.size() && !violation; ++j) {
                picks.push_back(j);
                self(self, j, remaining - 1);
                picks.pop_back();
            }
        };
        dfs_picks(dfs_picks, 0, bound);
        if (violation)
            report.sc = {false, *violation};
    }

    return report;
}

// ---- dominance relation -------------------------------------------------------

/// The relation A |> B: the selection over A u B avoids B, or some event
/// disjoint from both separates them (it dominates B but not A). For any
/// representing measure, A |> B forces mu(A) > mu(B).
class DominanceRelation {
public:
    DominanceRelation(Space space, std::set<std::pair<EventMask, EventMask>> pairs)
        : space_(std::move(space)), pairs_(std::move(pairs)) {}

    const Space& space() const { return space_; }
    const std::set<std::pair<EventMask, EventMask>>& pairs() const { return pairs_; }

    bool holds(const Event& a, const Event& b) const {
        if (a.space() != space_ || b.space() != space_)
            throw DomainError("event belongs to a different space");
        return pairs_.count({a.mask(), b.mask()}) != 0;
    }

private:
    Space space_;
    std::set<std::pair<EventMask, EventMask>> pairs_;
};

inline DominanceRelation dominance_relation(const SelectionFunction& sigma) {
    const Space& space = sigma.space();
    const int n = space.size();
    if (n > 6)
        throw BudgetError("dominance relation scan limited to 6 atoms");
    if (!sigma.is_total())
        throw DomainError("selection table is incomplete");
    std::set<std::pair<EventMask, EventMask>> pairs;
    auto avoids = [&](EventMask input, EventMask avoided) {
        return (sigma.get_mask(input) & avoided) == 0;
    };
    for (EventMask a = 0; a < space.event_count(); ++a)
        for (EventMask b = 0; b < space.event_count(); ++b) {
            bool direct = (a | b) != 0 && avoids(a | b, b);
            bool separated = false;
            if (!direct) {
                EventMask drest = space.full_mask() & ~(a | b);
                for (EventMask d = drest;; d = (d - 1) & drest) {
                    if (avoids(d | b, b) && !avoids(d | a, a)) {
                        separated = true;
                        break;
                    }
                    if (d == 0)
                        break;
                }
            }
            if (direct || separated)
                pairs.emplace(a, b);
        }
    return DominanceRelation(space, std::move(pairs));
}

} // namespace stablerev

#endif
