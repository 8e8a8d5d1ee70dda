#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"

using namespace stablerev;

namespace {

Model urn_model() { return Model(corpus::urn(), corpus::half()); }

} // namespace

TEST_CASE("consequence on the urn") {
    Space s = corpus::rgb();
    Model model = urn_model();
    Event not_blue = Event::of_atoms(s, {"R", "G"});
    CHECK(consequence(model, Event::of_atoms(s, {"R", "B"}), not_blue));
    CHECK(consequence(model, Event::of_atoms(s, {"G"}), not_blue));
    CHECK_FALSE(consequence(model, Event::full(s), not_blue));
    // reflexivity across the board
    for (EventMask m = 0; m < s.event_count(); ++m)
        CHECK(consequence(model, Event(s, m), Event(s, m)));
}

TEST_CASE("consequence is monotone in the consequent") {
    Model model = urn_model();
    Space s = corpus::rgb();
    for (EventMask a = 0; a < s.event_count(); ++a)
        for (EventMask b = 0; b < s.event_count(); ++b)
            if (model.consequence_mask(a, b))
                for (EventMask c = b;; c = (c + 1) | b) { // supersets of b
                    CHECK(model.consequence_mask(a, c));
                    if (c == s.full_mask())
                        break;
                }
}

TEST_CASE("null antecedents entail everything") {
    Space s = corpus::rgb();
    Model model(corpus::ints_measure(s, {1, 1, 0}), corpus::half());
    CHECK(consequence(model, Event::of_atoms(s, {"B"}), Event::empty(s)));
}

TEST_CASE("the urn breaks Or but keeps rational monotonicity") {
    Model model = urn_model();
    auto or_cx = check_rule(model, RuleId::Or);
    REQUIRE(or_cx.has_value());
    // re-evaluate the counterexample semantics
    const auto& events = or_cx->events;
    EventMask a = events[0].second.mask(), b = events[1].second.mask(),
              c = events[2].second.mask();
    CHECK(model.consequence_mask(a, c));
    CHECK(model.consequence_mask(b, c));
    CHECK_FALSE(model.consequence_mask(a | b, c));

    CHECK_FALSE(check_rule(model, RuleId::RM).has_value());
    CHECK_FALSE(check_rule(model, RuleId::Ref).has_value());
}

TEST_CASE("exclusive Or and weak Or break on the urn") {
    Model model = urn_model();
    CHECK(check_rule(model, RuleId::ExOr).has_value());
    CHECK(check_rule(model, RuleId::WOr).has_value());
}

TEST_CASE("Cut breaks on the tilted measure") {
    Model model(corpus::tilted(), corpus::half());
    auto cx = check_rule(model, RuleId::Cut);
    REQUIRE(cx.has_value());
    EventMask a = cx->events[0].second.mask(), b = cx->events[1].second.mask(),
              c = cx->events[2].second.mask();
    CHECK(model.consequence_mask(a & b, c));
    CHECK(model.consequence_mask(a, b));
    CHECK_FALSE(model.consequence_mask(a, c));
}

TEST_CASE("the always-valid rules never fail on sampled models") {
    std::mt19937 rng(59);
    std::vector<Model> models;
    models.push_back(urn_model());
    models.emplace_back(corpus::tilted(), corpus::half());
    models.emplace_back(corpus::species(), corpus::half());
    for (int i = 0; i < 12; ++i) {
        Space s = corpus::generic_space(2 + static_cast<int>(rng() % 3u));
        models.emplace_back(corpus::random_measure(rng, s, 0, 9),
                            i % 2 ? corpus::two_thirds() : corpus::half());
    }
    for (const Model& model : models)
        for (RuleId rule : {RuleId::Ref, RuleId::LeftEquiv, RuleId::RightWeak, RuleId::And,
                            RuleId::WAnd, RuleId::CM, RuleId::RM, RuleId::VCM, RuleId::WO2,
                            RuleId::WO3})
            CHECK_FALSE(check_rule(model, rule).has_value());
}

TEST_CASE("atypical states") {
    Space s = corpus::species_space();
    Model model(corpus::species(), corpus::half());
    CHECK(atypical(model, corpus::oviparous(s)) == corpus::furry(s));
    CHECK(atypical(model, corpus::venomous(s)) == corpus::furry(s));
    CHECK(atypical(model, Event::empty(s)) == Event::empty(s));

    Model tilted(corpus::tilted(), corpus::half());
    CHECK(atypical(tilted, Event::full(corpus::w3())) ==
          Event::of_atoms(corpus::w3(), {"w3"}));
}

TEST_CASE("the species inference goes through the weak Or rule") {
    Space s = corpus::species_space();
    Model model(corpus::species(), corpus::half());
    Event ovi = corpus::oviparous(s), ven = corpus::venomous(s);
    Event not_furry = corpus::furry(s).complement();
    CHECK(atypical(model, ovi).subset_of(ven));
    CHECK(atypical(model, ven).subset_of(ovi));
    CHECK(consequence(model, ovi, not_furry));
    CHECK(consequence(model, ven, not_furry));
    CHECK(consequence(model, ovi.unite(ven), not_furry));
}

TEST_CASE("Or failures fill a positive grid fraction") {
    Space s = corpus::generic_space(3);
    OrFailureRegion region = find_or_failure_region(s, corpus::half(), 12);
    CHECK(region.sampled > 0);
    CHECK(region.failures > 0);
    CHECK(region.fraction > 0);
    // the constructive witness uses the midpoint weight 5/12
    CHECK(region.witness.weight(0) == Rational(5, 12));
    CHECK(check_rule(Model(region.witness, corpus::half()), RuleId::Or).has_value());

    // degenerate point masses never break Or
    Model point(corpus::ints_measure(s, {12, 0, 0}), corpus::half());
    CHECK_FALSE(check_rule(point, RuleId::Or).has_value());

    Space two = corpus::generic_space(2);
    CHECK_THROWS_AS((void)find_or_failure_region(two, corpus::half(), 12), DomainError);
}

TEST_CASE("rule scan budget") {
    std::mt19937 rng(61);
    Space big = corpus::generic_space(6);
    Model model(corpus::random_measure(rng, big, 1, 5), corpus::half());
    CHECK_THROWS_AS((void)check_rule(model, RuleId::Or), BudgetError);
}
