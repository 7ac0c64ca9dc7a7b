#include "gmact/ring.hpp"
#include "gmact/errors.hpp"

#include <algorithm>

namespace gmact {

PolyRing::PolyRing(std::vector<Variable> vars, TermOrder order)
    : vars_(std::move(vars)), order_(order) {}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<Variable> vars, TermOrder order) {
    auto ring = std::shared_ptr<PolyRing>(new PolyRing(std::move(vars), order));
    for (size_t i = 0; i < ring->vars_.size(); ++i) {
        const auto& name = ring->vars_[i].name;
        if (name.empty())
            throw input_error("empty variable name");
        if (!ring->index_.emplace(name, i).second)
            throw input_error("duplicate variable name: " + name);
    }
    if (order.kind == OrderKind::Block && order.block_split > ring->vars_.size())
        throw input_error("block order split out of range");
    return ring;
}

bool PolyRing::has_var(const std::string& name) const {
    return index_.count(name) != 0;
}

size_t PolyRing::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw input_error("unknown variable: " + name);
    return it->second;
}

long PolyRing::weighted_degree(const Exponents& e) const {
    long d = 0;
    for (size_t i = 0; i < vars_.size(); ++i)
        d += static_cast<long>(e[i]) * vars_[i].weight;
    return d;
}

int lex_compare(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int grevlex_compare(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
    long da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    // equal degree: rightmost differing exponent, smaller one wins
    for (size_t i = hi; i > lo; --i) {
        int ai = a[i - 1], bi = b[i - 1];
        if (ai != bi)
            return ai > bi ? -1 : 1;
    }
    return 0;
}

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
    switch (order_.kind) {
    case OrderKind::Lex:
        return lex_compare(a, b, 0, vars_.size());
    case OrderKind::GrevLex:
        return grevlex_compare(a, b, 0, vars_.size());
    case OrderKind::Block: {
        int c = lex_compare(a, b, 0, order_.block_split);
        if (c != 0)
            return c;
        return grevlex_compare(a, b, order_.block_split, vars_.size());
    }
    }
    return 0;
}

bool PolyRing::same_variables(const PolyRing& other) const {
    if (vars_.size() != other.vars_.size())
        return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].weight != other.vars_[i].weight)
            return false;
    return true;
}

std::string PolyRing::monomial_string(const Exponents& e) const {
    std::string out;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars_[i].name;
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents exp_div(const Exponents& b, const Exponents& a) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = b[i] - a[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_gcd(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = std::min(a[i], b[i]);
    return r;
}

long exp_total_degree(const Exponents& a) {
    long d = 0;
    for (int e : a)
        d += e;
    return d;
}

bool exp_is_one(const Exponents& a) {
    for (int e : a)
        if (e != 0)
            return false;
    return true;
}

RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep, TermOrder order) {
    std::vector<Variable> vars;
    for (const auto& name : keep)
        vars.push_back(ring->var(ring->index_of(name)));
    return PolyRing::make(std::move(vars), order);
}

RingPtr concat_rings(const std::vector<Variable>& front, const std::vector<Variable>& back,
                     TermOrder order) {
    std::vector<Variable> vars = front;
    vars.insert(vars.end(), back.begin(), back.end());
    return PolyRing::make(std::move(vars), order);
}

} // namespace gmact
