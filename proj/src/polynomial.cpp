#include "gmact/polynomial.hpp"
#include "gmact/errors.hpp"

#include <algorithm>

namespace gmact {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({Exponents(p.ring_->nvars(), 0), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t index) {
    Polynomial p(std::move(ring));
    Exponents e(p.ring_->nvars(), 0);
    e.at(index) = 1;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    size_t idx = ring->index_of(name);
    return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, Rational c) {
    if (e.size() != ring->nvars())
        throw ring_mismatch("exponent vector length does not match ring");
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.size() != ring->nvars())
            throw ring_mismatch("exponent vector length does not match ring");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->compare(a.mono, b.mono) > 0;
    });
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
        if (t.coeff == 0)
            continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_is_one(terms_[0].mono));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw error("leading term of zero polynomial");
    return terms_.front();
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && exp_is_one(terms_.back().mono))
        return terms_.back().coeff;
    return Rational(0);
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
    if (ring_ == rhs.ring_)
        return;
    if (!ring_ || !rhs.ring_ || !ring_->same_variables(*rhs.ring_))
        throw ring_mismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = ring_->compare(terms_[i].mono, rhs.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(rhs.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + rhs.terms_[j].coeff;
            if (s != 0)
                r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j)
        r.terms_.push_back(rhs.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::times_term(const Rational& c, const Exponents& e) const {
    Polynomial r(ring_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({exp_mul(t.mono, e), t.coeff * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_compatible(rhs);
    // accumulate into a sorted map keyed by monomial (descending)
    auto cmp = [this](const Exponents& a, const Exponents& b) {
        return ring_->compare(a, b) > 0;
    };
    std::map<Exponents, Rational, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            Exponents m = exp_mul(a.mono, b.mono);
            auto [it, inserted] = acc.try_emplace(std::move(m), a.coeff * b.coeff);
            if (!inserted)
                it->second += a.coeff * b.coeff;
        }
    }
    Polynomial r(ring_);
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            r.terms_.push_back({mono, std::move(coeff)});
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p * c;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (ring_ != rhs.ring_) {
        if (!ring_ || !rhs.ring_ || !ring_->same_variables(*rhs.ring_))
            return false;
    }
    if (terms_.size() != rhs.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0)
        throw input_error("negative polynomial power");
    Polynomial r = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(size_t var) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0)
            continue;
        Term d;
        d.mono = t.mono;
        d.mono[var] -= 1;
        d.coeff = t.coeff * e;
        r.terms_.push_back(std::move(d));
    }
    // descending order is preserved by dividing every term by the same variable
    return from_terms(ring_, std::move(r.terms_));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->nvars())
        throw input_error("evaluation point has wrong arity");
    Rational total(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.mono[i] != 0)
                v *= rational_pow(point[i], t.mono[i]);
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars())
        throw input_error("substitute: one image per variable required");
    for (const auto& img : images)
        if (img.ring() != target && !img.ring()->same_variables(*target))
            throw ring_mismatch("substitute: images must live in the target ring");
    Polynomial total = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.mono[i] != 0)
                prod = prod * images[i].pow(t.mono[i]);
        total = total + prod;
    }
    return total;
}

Polynomial Polynomial::transport(const RingPtr& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(target->nvars(), 0);
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            const auto& name = ring_->var(i).name;
            e[target->index_of(name)] = t.mono[i];
        }
        out.push_back({std::move(e), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        bool negative = c < 0;
        if (i == 0) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational a = negative ? Rational(-c) : c;
        bool is_one_mono = exp_is_one(t.mono);
        if (is_one_mono) {
            out += to_string(a);
        } else if (a == 1) {
            out += ring_->monomial_string(t.mono);
        } else {
            out += to_string(a) + "*" + ring_->monomial_string(t.mono);
        }
    }
    return out;
}

WeightedDegree weighted_degree(const Polynomial& p) {
    WeightedDegree r;
    if (p.is_zero()) {
        r.kind = WeightedDegree::Kind::Zero;
        return r;
    }
    const auto& ring = *p.ring();
    long d0 = ring.weighted_degree(p.terms()[0].mono);
    for (size_t i = 1; i < p.terms().size(); ++i) {
        long d = ring.weighted_degree(p.terms()[i].mono);
        if (d != d0) {
            r.kind = WeightedDegree::Kind::Mixed;
            r.witness_a = p.terms()[0].mono;
            r.witness_b = p.terms()[i].mono;
            return r;
        }
    }
    r.kind = WeightedDegree::Kind::Homogeneous;
    r.degree = d0;
    return r;
}

bool is_homogeneous(const Polynomial& p) {
    return weighted_degree(p).kind != WeightedDegree::Kind::Mixed;
}

} // namespace gmact
