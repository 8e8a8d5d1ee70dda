#ifndef STABLEREV_THRESHOLD_HPP
#define STABLEREV_THRESHOLD_HPP

#include "stablerev/rational.hpp"

namespace stablerev {

/// A stability threshold t in [1/2, 1) together with its odds ratio
/// k = t/(1-t) and the coprime pair (p, q) with t = p/(p+q), k = p/q.
/// Since t >= 1/2 we always have p >= q >= 1.
class Threshold {
public:
    static Threshold from_t(const Rational& t) {
        if (t < Rational(1, 2) || t >= 1)
            throw DomainError("threshold must lie in [1/2, 1), got " + format_rational(t));
        // t = p/(p+q) in lowest terms gives p = num(t), q = den(t) - num(t),
        // and gcd(p, q) = gcd(num, den) = 1 carries over.
        Int p = num(t);
        Int q = den(t) - num(t);
        return Threshold(t, p, q);
    }

    /// Builds the threshold with odds ratio k >= 1, i.e. t = k/(k+1).
    static Threshold from_ratio(const Rational& k) {
        if (k < 1)
            throw DomainError("odds ratio must be >= 1, got " + format_rational(k));
        return from_t(Rational(num(k), num(k) + den(k)));
    }

    const Rational& t() const { return t_; }
    Rational k() const { return Rational(p_, q_); }
    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    bool operator==(const Threshold& other) const { return t_ == other.t_; }

private:
    Threshold(Rational t, Int p, Int q) : t_(std::move(t)), p_(std::move(p)), q_(std::move(q)) {}

    Rational t_;
    Int p_, q_;
};

} // namespace stablerev

#endif
