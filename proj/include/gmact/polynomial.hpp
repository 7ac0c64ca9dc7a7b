#pragma once
#include "gmact/rational.hpp"
#include "gmact/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gmact {

struct Term {
    Exponents mono;
    Rational coeff;
};

/// Exact multivariate polynomial over Q. Terms are kept in strictly descending
/// term order with no zero coefficients, so equality is structural equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, size_t index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, Exponents e, Rational c = Rational(1));
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const; // throws on zero polynomial
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial pow(long e) const; // e >= 0

    /// c * x^e * this
    Polynomial times_term(const Rational& c, const Exponents& e) const;

    Polynomial derivative(size_t var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Ring homomorphism: variable i goes to images[i]; exact.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    /// Same polynomial in another ring, matching variables by name.
    /// A variable used with positive exponent must exist in the target.
    Polynomial transport(const RingPtr& target) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void check_compatible(const Polynomial& rhs) const;
};

struct WeightedDegree {
    enum class Kind { Zero, Homogeneous, Mixed } kind = Kind::Zero;
    long degree = 0;          // meaningful for Homogeneous
    Exponents witness_a, witness_b; // two terms of different weighted degree, for Mixed
};

WeightedDegree weighted_degree(const Polynomial& p);

/// True iff every term has the stated weighted degree.
bool is_homogeneous(const Polynomial& p);

Polynomial operator*(const Rational& c, const Polynomial& p);

} // namespace gmact
