// Acceptance suite: one test per numbered criterion, each printing a
// PASS/FAIL line with its elapsed time.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "corpus.hpp"

using namespace stablerev;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("criterion %2d  %-58s %s  (%lld ms)\n", number, title.c_str(),
                    ok ? "PASS" : "FAIL", static_cast<long long>(ms));
        for (const auto& note : notes)
            std::printf("              - %s\n", note.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(ok, title);
    }
};

std::vector<Measure> measure_grid(const Space& space, long max_denominator) {
    std::vector<Measure> out;
    int n = space.size();
    std::vector<long> parts(n, 0);
    for (long d = 1; d <= max_denominator; ++d) {
        auto rec = [&](auto&& self, int idx, long remaining) -> void {
            if (idx == n - 1) {
                parts[idx] = remaining;
                out.push_back(corpus::ints_measure(space, parts));
                return;
            }
            for (long v = 0; v <= remaining; ++v) {
                parts[idx] = v;
                self(self, idx + 1, remaining - v);
            }
        };
        rec(rec, 0, d);
    }
    return out;
}

} // namespace

TEST_CASE("criterion 1: urn reproduction") {
    Criterion c(1, "urn consequence verdicts");
    Space s = corpus::rgb();
    Model model(corpus::urn(), corpus::half());
    Event not_blue = Event::of_atoms(s, {"R", "G"});
    c.expect(consequence(model, Event::of_atoms(s, {"R", "B"}), not_blue),
             "RB should entail not-B");
    c.expect(consequence(model, Event::of_atoms(s, {"G"}), not_blue),
             "G should entail not-B");
    c.expect(!consequence(model, Event::full(s), not_blue),
             "the tautology should not entail not-B");
    c.finish();
}

TEST_CASE("criterion 2: the tilted measure and the minimisation failure") {
    Criterion c(2, "non-order-representable revision plan");
    Space s = corpus::w3();
    Measure mu = corpus::tilted();
    Threshold t = corpus::half();
    Event e = Event::of_atoms(s, {"w1", "w2"});
    c.expect(strongest_stable_set(mu, t) == e, "prior acceptance should be {w1,w2}");
    c.expect(strongest_stable_set(conditional(mu, e), t) == Event::of_atoms(s, {"w1"}),
             "conditioning on {w1,w2} should shrink acceptance to {w1}");
    // the union-minimisation property fails on some instance
    SelectionFunction sigma = revision_operator(mu, t);
    bool failure_found = false;
    for (EventMask x1 = 0; x1 < s.event_count() && !failure_found; ++x1)
        for (EventMask x2 = 0; x2 < s.event_count(); ++x2)
            if ((sigma.get_mask(x1 | x2) &
                 ~(sigma.get_mask(x1) | sigma.get_mask(x2))) != 0) {
                failure_found = true;
                break;
            }
    c.expect(failure_found, "a union-minimisation failure instance should exist");
    c.finish();
}

TEST_CASE("criterion 3: species example") {
    Criterion c(3, "species selections and the weak-Or inference");
    Space s = corpus::species_space();
    Model model(corpus::species(), corpus::half());
    const SelectionFunction& sigma = model.sigma();
    c.expect(sigma.get(corpus::oviparous(s)) ==
                 Event::of_atoms(s, {"Sparrow", "Turtle", "KingCobra"}),
             "selection from oviparous");
    c.expect(sigma.get(corpus::venomous(s)) == Event::of_atoms(s, {"PitViper", "KingCobra"}),
             "selection from venomous");
    c.expect(atypical(model, corpus::oviparous(s)) == corpus::furry(s),
             "atypical oviparous state");
    c.expect(atypical(model, corpus::venomous(s)) == corpus::furry(s),
             "atypical venomous state");
    c.expect(consequence(model, corpus::oviparous(s).unite(corpus::venomous(s)),
                         corpus::furry(s).complement()),
             "oviparous-or-venomous should entail not-furry");
    c.finish();
}

TEST_CASE("criterion 4: college council") {
    Criterion c(4, "council cores, representation and refusal");
    WeightedGame game = corpus::college_council();
    const Space& p = game.players;
    auto core = [&](std::vector<std::string> group) {
        return smallest_stably_decisive(game, Event::of_atoms(p, group));
    };
    c.expect(core({"c", "m", "e", "h", "a", "d", "f"}) == Event::of_atoms(p, {"c", "m"}),
             "full council core");
    c.expect(core({"c", "m"}) == Event::of_atoms(p, {"c"}), "formal sciences core");
    c.expect(core({"d", "f"}) == Event::of_atoms(p, {"d", "f"}), "arts core");
    c.expect(core({"e", "h", "a"}) == Event::of_atoms(p, {"e"}), "humanities core");
    c.expect(core({"e", "h", "a", "d", "f"}) == Event::of_atoms(p, {"e", "h", "a", "d", "f"}),
             "arts and humanities core");

    SelectionFunction sigma = revision_operator(game.normalized(), game.t);
    RepresentationResult at_half = decide_t_representable(sigma, corpus::half());
    c.expect(at_half.representable(), "representable at one half");
    if (at_half.measure)
        c.expect(revision_operator(*at_half.measure, corpus::half()) == sigma,
                 "round-trip at one half");

    RepresentationResult at_23 = decide_t_representable(sigma, corpus::two_thirds());
    c.expect(!at_23.representable(), "refused at two thirds");
    c.expect(at_23.scott.has_value(), "refusal carries a witness");
    if (at_23.scott) {
        c.expect(is_t_balanced(at_23.scott->pair, corpus::two_thirds()),
                 "witness is balanced for two thirds");
        c.expect(verify_scott_witness(sigma, *at_23.scott), "witness verifies");
    }
    ThresholdSystem ts = build_threshold_system(sigma, corpus::two_thirds());
    FeasibilityOutcome outcome = solve(ts.system);
    c.expect(!outcome.feasible(), "constraint system is infeasible at two thirds");
    if (outcome.certificate)
        c.expect(verify_certificate(ts.system, *outcome.certificate),
                 "raw certificate verifies");
    c.finish();
}

TEST_CASE("criterion 5: oracle equivalence on exhaustive grids") {
    Criterion c(5, "greedy rule equals definitional oracle on full grids");
    long disagreements = 0;
    for (const Measure& mu : measure_grid(corpus::generic_space(3), 10))
        for (const Threshold& t : {corpus::half(), corpus::two_thirds()})
            if (strongest_stable_set(mu, t) != brute_force_strongest_stable(mu, t))
                ++disagreements;
    for (const Measure& mu : measure_grid(corpus::generic_space(4), 6))
        for (const Threshold& t : {corpus::half(), corpus::two_thirds()})
            if (strongest_stable_set(mu, t) != brute_force_strongest_stable(mu, t))
                ++disagreements;
    c.expect(disagreements == 0,
             "disagreements: " + std::to_string(disagreements));
    c.finish();
}

namespace {

std::vector<Measure> random_corpus() {
    std::mt19937 rng(202608);
    std::vector<Measure> corpus_measures;
    for (int i = 0; i < 200; ++i) {
        Space s = corpus::generic_space(2 + static_cast<int>(rng() % 3u));
        corpus_measures.push_back(corpus::random_measure(rng, s, 0, 16));
    }
    return corpus_measures;
}

} // namespace

TEST_CASE("criterion 6: representation round-trip on 200 random measures") {
    Criterion c(6, "round-trip representation of sampled plans");
    long failures = 0;
    for (const Measure& mu : random_corpus())
        for (const Threshold& t :
             {corpus::half(), corpus::two_thirds(), corpus::three_quarters()}) {
            SelectionFunction sigma = revision_operator(mu, t);
            RepresentationResult r = decide_t_representable(sigma, t);
            if (!r.representable() || revision_operator(*r.measure, t) != sigma)
                ++failures;
        }
    c.expect(failures == 0, "failures: " + std::to_string(failures));
    c.finish();
}

TEST_CASE("criterion 7: rule validity matrix") {
    Criterion c(7, "validity matrix over the sampled corpus");
    std::vector<Model> models;
    for (const Measure& mu : random_corpus())
        models.emplace_back(mu, corpus::half());
    models.emplace_back(corpus::urn(), corpus::half());
    models.emplace_back(corpus::tilted(), corpus::half());

    const std::vector<RuleId> valid_rules = {RuleId::Ref,  RuleId::RightWeak, RuleId::And,
                                             RuleId::CM,   RuleId::RM,        RuleId::VCM,
                                             RuleId::WAnd, RuleId::WO2};
    const std::vector<RuleId> failable_rules = {RuleId::Or, RuleId::ExOr, RuleId::WOr,
                                                RuleId::Cut};
    for (RuleId rule : valid_rules) {
        long failures = 0;
        for (const Model& model : models)
            if (check_rule(model, rule))
                ++failures;
        c.expect(failures == 0,
                 std::string(rule_name(rule)) + " failed on " + std::to_string(failures) +
                     " corpus models");
        std::printf("              rule %-10s never fails: %s\n", rule_name(rule),
                    failures == 0 ? "yes" : "NO");
    }
    for (RuleId rule : failable_rules) {
        long failures = 0;
        for (const Model& model : models)
            if (check_rule(model, rule))
                ++failures;
        c.expect(failures > 0, std::string(rule_name(rule)) + " never failed on the corpus");
        std::printf("              rule %-10s fails on %ld models\n", rule_name(rule), failures);
    }
    c.finish();
}

TEST_CASE("criterion 8: threshold separation") {
    Criterion c(8, "separator accepted at one half, refused at three quarters");
    auto [space, mu, sigma] =
        generate_threshold_separator(corpus::half(), 2, 3, Rational(1, 4));
    (void)mu;
    RepresentationResult at_half = decide_t_representable(sigma, corpus::half());
    c.expect(at_half.representable(), "accepted at one half");
    RepresentationResult at_34 = decide_t_representable(sigma, corpus::three_quarters());
    c.expect(!at_34.representable(), "refused at three quarters");
    c.expect(at_34.scott.has_value(), "refusal carries a witness");
    if (at_34.scott)
        c.expect(verify_scott_witness(sigma, *at_34.scott), "witness verifies");
    c.finish();
}

TEST_CASE("criterion 9: choice-property suite") {
    Criterion c(9, "choice axioms on the epsilon instance");
    Space s = Space::create({"a", "b", "c"});
    Measure mu = Measure::normalized(s, {Rational(1), Rational(3, 2), Rational(2)});
    SelectionFunction sigma = revision_operator(mu, corpus::half());

    auto alpha = check_choice_property(sigma, ChoiceProperty::Alpha);
    c.expect(alpha.has_value(), "alpha should fail");
    if (alpha)
        c.expect(alpha->events[0].second == Event::of_atoms(s, {"b", "c"}) &&
                     alpha->events[1].second == Event::full(s),
                 "alpha counterexample should be X={b,c}, Y=Omega");
    auto gamma = check_choice_property(sigma, ChoiceProperty::GammaExpansion);
    c.expect(gamma.has_value(), "gamma expansion should fail");
    {
        Event xa = Event::of_atoms(s, {"a", "b"}), ya = Event::of_atoms(s, {"a", "c"});
        c.expect(!sigma.get(xa.intersect(ya)).subset_of(sigma.get(xa.unite(ya))),
                 "X={a,b}, Y={a,c} should violate gamma expansion");
    }
    c.expect(check_choice_property(sigma, ChoiceProperty::RIIA).has_value(),
             "RIIA should fail");
    c.expect(!check_choice_property(sigma, ChoiceProperty::Beta).has_value(), "beta holds");
    c.expect(!check_choice_property(sigma, ChoiceProperty::Aizerman).has_value(),
             "aizerman holds");
    c.expect(!check_choice_property(sigma, ChoiceProperty::WIIA).has_value(), "WIIA holds");
    c.expect(!check_choice_property(sigma, ChoiceProperty::IntersectionSelection).has_value(),
             "intersection selection holds");

    std::mt19937 rng(71);
    int agreements = 0;
    for (int i = 0; i < 50; ++i) {
        Space rs = corpus::generic_space(2 + static_cast<int>(rng() % 3u));
        SelectionFunction rep =
            revision_operator(corpus::random_measure(rng, rs, 0, 9), corpus::half());
        if (check_choice_property(rep, ChoiceProperty::WARP).has_value() ==
            check_choice_property(rep, ChoiceProperty::RIIA).has_value())
            ++agreements;
        SelectionFunction mut = corpus::random_choice_table(rng, rs);
        if (check_choice_property(mut, ChoiceProperty::WARP).has_value() ==
            check_choice_property(mut, ChoiceProperty::RIIA).has_value())
            ++agreements;
    }
    c.expect(agreements == 100,
             "WARP/RIIA agreement on " + std::to_string(agreements) + "/100 tables");
    c.finish();
}

TEST_CASE("criterion 10: convexity of representor sets") {
    Criterion c(10, "midpoints of revision-equivalent pairs");
    std::mt19937 rng(73);
    Space s = corpus::generic_space(3);
    Threshold t = corpus::half();
    int pairs = 0, good = 0;
    while (pairs < 50) {
        Measure a = corpus::random_measure(rng, s, 1, 20);
        Measure b = corpus::random_measure(rng, s, 1, 20);
        if (!revision_equivalent(a, b, t))
            continue;
        ++pairs;
        std::vector<Rational> mix;
        for (int i = 0; i < s.size(); ++i)
            mix.push_back((a.weight(i) + b.weight(i)) / 2);
        Measure mid = Measure::create(s, mix);
        if (revision_operator(mid, t) == revision_operator(a, t))
            ++good;
    }
    c.expect(good == 50, "midpoint regenerated for " + std::to_string(good) + "/50 pairs");
    c.finish();
}

TEST_CASE("criterion 11: feasibility engine cross-validation") {
    Criterion c(11, "simplex versus elimination on 500 random systems");
    std::mt19937 rng(79);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> rows(1, 12);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    long mismatches = 0, bad_certificates = 0;
    for (int trial = 0; trial < 500; ++trial) {
        LinearSystem sys;
        sys.dimension = dim(rng);
        sys.nonneg = coin(rng) == 1;
        int total = rows(rng);
        int strict = 1 + static_cast<int>(rng() % static_cast<unsigned>(total));
        for (int i = 0; i < total; ++i) {
            std::vector<Rational> r(sys.dimension);
            for (auto& v : r)
                v = coef(rng);
            if (i < strict)
                sys.strict_rows.push_back(std::move(r));
            else
                sys.weak_rows.push_back(std::move(r));
        }
        FeasibilityOutcome outcome = solve(sys);
        if (outcome.feasible() != fourier_motzkin_feasible(sys))
            ++mismatches;
        if (!outcome.feasible()) {
            bool beta_nonzero = false;
            for (const auto& b : outcome.certificate->beta)
                beta_nonzero = beta_nonzero || b > 0;
            if (!verify_certificate(sys, *outcome.certificate) || !beta_nonzero)
                ++bad_certificates;
        }
    }
    c.expect(mismatches == 0, "oracle mismatches: " + std::to_string(mismatches));
    c.expect(bad_certificates == 0,
             "invalid certificates: " + std::to_string(bad_certificates));
    c.finish();
}
