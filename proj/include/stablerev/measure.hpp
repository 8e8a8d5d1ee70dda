#ifndef STABLEREV_MEASURE_HPP
#define STABLEREV_MEASURE_HPP

#include <utility>
#include <vector>

#include "stablerev/rational.hpp"
#include "stablerev/space.hpp"

namespace stablerev {

/// An exact probability assignment on the atoms of a space: weights are
/// nonnegative rationals summing to exactly 1.
class Measure {
public:
    static Measure create(Space space, std::vector<Rational> weights) {
        if (static_cast<int>(weights.size()) != space.size())
            throw SchemaError("measure has " + std::to_string(weights.size()) + " weights for " +
                              std::to_string(space.size()) + " atoms");
        Rational sum = 0;
        for (int i = 0; i < space.size(); ++i) {
            if (weights[i] < 0)
                throw SchemaError("negative weight " + format_rational(weights[i]) + " on atom \"" +
                                  space.atom(i) + "\"");
            sum += weights[i];
        }
        if (sum != 1)
            throw SchemaError("weights sum to " + format_rational(sum) + ", expected 1");
        return Measure(std::move(space), std::move(weights));
    }

    /// Normalizes arbitrary nonnegative weights with positive total mass.
    static Measure normalized(Space space, const std::vector<Rational>& raw) {
        Rational sum = 0;
        for (const auto& w : raw) {
            if (w < 0)
                throw DomainError("cannot normalize a negative weight");
            sum += w;
        }
        if (sum == 0)
            throw DomainError("cannot normalize all-zero weights");
        std::vector<Rational> weights;
        weights.reserve(raw.size());
        for (const auto& w : raw)
            weights.push_back(w / sum);
        return create(std::move(space), std::move(weights));
    }

    const Space& space() const { return space_; }
    const Rational& weight(int atom) const { return weights_[atom]; }
    const std::vector<Rational>& weights() const { return weights_; }

    Rational mass(const Event& event) const {
        if (event.space() != space_)
            throw DomainError("event belongs to a different space");
        Rational sum = 0;
        for (int i = 0; i < space_.size(); ++i)
            if (event.contains(i))
                sum += weights_[i];
        return sum;
    }

    Rational mass(EventMask mask) const {
        Rational sum = 0;
        for (int i = 0; i < space_.size(); ++i)
            if ((mask >> i) & 1u)
                sum += weights_[i];
        return sum;
    }

    EventMask support_mask() const {
        EventMask m = 0;
        for (int i = 0; i < space_.size(); ++i)
            if (weights_[i] > 0)
                m |= EventMask(1u) << i;
        return m;
    }
    Event support() const { return Event(space_, support_mask()); }
    bool is_regular() const { return support_mask() == space_.full_mask(); }

    bool operator==(const Measure& other) const {
        return space_ == other.space_ && weights_ == other.weights_;
    }

private:
    Measure(Space space, std::vector<Rational> weights)
        : space_(std::move(space)), weights_(std::move(weights)) {}

    Space space_;
    std::vector<Rational> weights_;
};

/// Bayesian conditioning: mu_E(w) = mu(w)/mu(E) inside E, 0 outside.
inline Measure conditional(const Measure& mu, const Event& e) {
    Rational me = mu.mass(e);
    if (me == 0)
        throw DomainError("conditioning on null event");
    std::vector<Rational> weights(mu.space().size(), Rational(0));
    for (int i = 0; i < mu.space().size(); ++i)
        if (e.contains(i))
            weights[i] = mu.weight(i) / me;
    return Measure::create(mu.space(), std::move(weights));
}

} // namespace stablerev

#endif
