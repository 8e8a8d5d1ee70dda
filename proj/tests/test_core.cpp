#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"

using namespace stablerev;

TEST_CASE("rational strings parse exactly") {
    CHECK(parse_rational("4/10") == Rational(2, 5));
    CHECK(parse_rational("0.4") == Rational(2, 5));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("12.50") == Rational(25, 2));
    CHECK(format_rational(parse_rational("4/10")) == "2/5");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("abc"), SchemaError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), SchemaError);
    CHECK_THROWS_AS(parse_rational(""), SchemaError);
    CHECK_THROWS_AS(parse_rational("1/-2"), SchemaError);
}

TEST_CASE("rational arithmetic agrees with big-integer cross multiplication") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> nums(-1000, 1000);
    std::uniform_int_distribution<long> dens(1, 1000);
    for (int i = 0; i < 500; ++i) {
        long a = nums(rng), b = dens(rng), c = nums(rng), d = dens(rng);
        Rational sum = Rational(a, b) + Rational(c, d);
        // independent route: cross-multiplied big integers
        Int numerator = Int(a) * d + Int(c) * b;
        Int denominator = Int(b) * d;
        CHECK(sum == Rational(numerator, denominator));
        Rational prod = Rational(a, b) * Rational(c, d);
        CHECK(prod == Rational(Int(a) * c, Int(b) * d));
    }
}

TEST_CASE("space parsing") {
    Space s = parse_space("{\"atoms\":[\"R\",\"G\",\"B\"]}");
    CHECK(s.size() == 3);
    CHECK(s.atom(0) == "R");
    CHECK(s.index_of("B") == 2);
    CHECK_THROWS_AS(parse_space("{\"atoms\":[\"w1\",\"w1\"]}"), SchemaError);
    CHECK_THROWS_AS(parse_space("{\"atoms\":[]}"), SchemaError);
    CHECK_THROWS_AS(parse_space("{\"atoms\":[\"\"]}"), SchemaError);
    CHECK_THROWS_AS(parse_space("not json"), SchemaError);
}

TEST_CASE("event algebra laws hold on every event") {
    Space s = corpus::generic_space(4);
    for (EventMask m = 0; m < s.event_count(); ++m) {
        Event e(s, m);
        CHECK(e.complement().complement() == e);
        CHECK(e.unite(e.complement()) == Event::full(s));
        CHECK(e.intersect(e.complement()) == Event::empty(s));
    }
}

TEST_CASE("cross-space operations are rejected") {
    Space a = corpus::rgb();
    Space b = corpus::generic_space(3);
    Event ea = Event::full(a), eb = Event::full(b);
    CHECK_THROWS_AS(ea.unite(eb), DomainError);
    CHECK_THROWS_AS(corpus::urn().mass(eb), DomainError);
}

TEST_CASE("measure parsing") {
    Space s = corpus::rgb();
    Measure mu = parse_measure("{\"weights\":{\"R\":\"4/10\",\"G\":\"3/10\",\"B\":\"3/10\"}}", s);
    CHECK(mu.weight(0) == Rational(2, 5));
    CHECK(mu.mass(Event::full(s)) == 1);

    Space one = Space::create({"a"});
    Measure point = parse_measure("{\"weights\":{\"a\":\"1\"}}", one);
    CHECK(point.weight(0) == 1);

    CHECK_THROWS_WITH_AS(
        (void)parse_measure("{\"weights\":{\"R\":\"1/2\",\"G\":\"1/2\",\"B\":\"1/2\"}}", s),
        "weights sum to 3/2, expected 1", SchemaError);
    CHECK_THROWS_AS((void)parse_measure("{\"weights\":{\"R\":\"-1/2\",\"G\":\"1\",\"B\":\"1/2\"}}", s),
                    SchemaError);
    CHECK_THROWS_AS((void)parse_measure("{\"weights\":{\"Q\":\"1\"}}", s), SchemaError);
    // integer weights are accepted
    Measure intw = parse_measure("{\"weights\":{\"R\":1,\"G\":0,\"B\":0}}", s);
    CHECK(intw.weight(0) == 1);
}

TEST_CASE("selection table parsing") {
    Space s = corpus::rgb();
    SelectionFunction sigma = revision_operator(corpus::urn(), corpus::half());
    Json doc = selection_to_json(sigma);
    SelectionFunction back = selection_from_json(doc, s);
    CHECK(back == sigma);

    // drop one row in complete mode
    doc["map"].erase(3);
    CHECK_THROWS_WITH_AS((void)selection_from_json(doc, s), "incomplete table", SchemaError);

    // sparse mode parses but missing lookups fail downstream
    doc["complete"] = false;
    SelectionFunction sparse = selection_from_json(doc, s);
    CHECK_FALSE(sparse.is_total());
    bool hit_missing = false;
    for (EventMask m = 0; m < s.event_count(); ++m)
        if (!sparse.defined(m)) {
            CHECK_THROWS_AS((void)sparse.get(Event(s, m)), DomainError);
            hit_missing = true;
        }
    CHECK(hit_missing);

    // duplicate inputs
    Json dup = selection_to_json(sigma);
    dup["map"].push_back(dup["map"][0]);
    CHECK_THROWS_AS((void)selection_from_json(dup, s), SchemaError);

    // output atom outside the space
    CHECK_THROWS_AS(
        (void)selection_from_json(parse_json_text("{\"map\":[{\"in\":[\"R\"],\"out\":[\"Q\"]}]}"), s),
        SchemaError);
}

TEST_CASE("sigma of the empty event may be nonempty at parse time") {
    // flagged later by the axiom checker, not by the parser
    Space s = Space::create({"a"});
    SelectionFunction sigma(s);
    sigma.set(Event::empty(s), Event::of_atoms(s, {"a"}));
    sigma.set(Event::full(s), Event::of_atoms(s, {"a"}));
    AxiomReport report = check_axioms(sigma);
    REQUIRE(report.s2.has_value());
    CHECK(report.s2->axiom == "S2");
}

TEST_CASE("parse-serialize-parse is the identity") {
    Space s = corpus::species_space();
    CHECK(space_from_json(space_to_json(s)) == s);
    Measure mu = corpus::species();
    CHECK(measure_from_json(measure_to_json(mu), s) == mu);
    SelectionFunction sigma = revision_operator(mu, corpus::half());
    CHECK(selection_from_json(selection_to_json(sigma), s) == sigma);
    // byte-level stability of serialization
    CHECK(measure_to_json(mu).dump() == measure_to_json(measure_from_json(measure_to_json(mu), s)).dump());
}

TEST_CASE("threshold invariants") {
    Threshold t = corpus::two_thirds();
    CHECK(t.p() == 2);
    CHECK(t.q() == 1);
    CHECK(t.k() == 2);
    Threshold h = corpus::half();
    CHECK(h.p() == 1);
    CHECK(h.q() == 1);
    CHECK(Threshold::from_t(Rational(7, 12)).p() == 7);
    CHECK(Threshold::from_t(Rational(7, 12)).q() == 5);
    CHECK_THROWS_AS(Threshold::from_t(Rational(1, 4)), DomainError);
    CHECK_THROWS_AS(Threshold::from_t(Rational(1)), DomainError);
    CHECK(Threshold::from_ratio(Rational(3)).t() == Rational(3, 4));
    CHECK_THROWS_AS(Threshold::from_ratio(Rational(1, 2)), DomainError);
}
