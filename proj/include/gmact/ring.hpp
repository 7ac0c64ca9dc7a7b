#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gmact {

enum class OrderKind { Lex, GrevLex, Block };

/// Block means: lex on variables [0, block_split), then grevlex on the rest.
/// Used as an elimination order for the leading block.
struct TermOrder {
    OrderKind kind = OrderKind::GrevLex;
    size_t block_split = 0;
};

struct Variable {
    std::string name;
    int weight = 0;
};

using Exponents = std::vector<int>;

/// Polynomial ring over Q: named variables with integer weights plus a term order.
/// Immutable after construction; shared by the polynomials living in it.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> make(std::vector<Variable> vars,
                                                TermOrder order = {});

    size_t nvars() const { return vars_.size(); }
    const Variable& var(size_t i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }
    const TermOrder& order() const { return order_; }

    bool has_var(const std::string& name) const;
    size_t index_of(const std::string& name) const; // throws input_error if absent

    long weighted_degree(const Exponents& e) const;

    /// Three-way comparison in the ring's term order: negative if a < b.
    int compare(const Exponents& a, const Exponents& b) const;

    bool same_variables(const PolyRing& other) const;

    std::string monomial_string(const Exponents& e) const;

private:
    PolyRing(std::vector<Variable> vars, TermOrder order);
    std::vector<Variable> vars_;
    TermOrder order_;
    std::map<std::string, size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// exponent-vector arithmetic
Exponents exp_mul(const Exponents& a, const Exponents& b);
bool exp_divides(const Exponents& a, const Exponents& b); // a | b
Exponents exp_div(const Exponents& b, const Exponents& a); // b / a, requires a | b
Exponents exp_lcm(const Exponents& a, const Exponents& b);
Exponents exp_gcd(const Exponents& a, const Exponents& b);
long exp_total_degree(const Exponents& a);
bool exp_is_one(const Exponents& a);

int lex_compare(const Exponents& a, const Exponents& b, size_t lo, size_t hi);
int grevlex_compare(const Exponents& a, const Exponents& b, size_t lo, size_t hi);

/// New ring keeping the named variables (in their current relative order).
RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep,
                TermOrder order = {});

/// New ring with `front` variables first, then `back`; names must not clash.
RingPtr concat_rings(const std::vector<Variable>& front,
                     const std::vector<Variable>& back, TermOrder order);

} // namespace gmact
