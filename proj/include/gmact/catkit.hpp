#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gmact::cat {

struct CheckReport {
    bool passed = false;
    std::string detail;
};

/// Finite category given by explicit tables. Associativity, unit laws and
/// source/target consistency are verified at construction.
struct FiniteCategory {
    struct Mor {
        std::string name;
        size_t src = 0, tgt = 0;
    };
    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<size_t> identity;            // per object
    std::vector<std::vector<long>> table;    // table[g][f] = g∘f, -1 when not composable

    static FiniteCategory make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                               std::vector<size_t> identity,
                               std::vector<std::vector<long>> table);

    bool composable(size_t g, size_t f) const {
        return morphisms[g].src == morphisms[f].tgt;
    }
    size_t compose(size_t g, size_t f) const; // g∘f, throws if not composable
    size_t n_objects() const { return objects.size(); }
    size_t n_morphisms() const { return morphisms.size(); }
    bool is_groupoid() const;
    std::optional<size_t> inverse_of(size_t f) const;
};

/// Finite monoid with a two-sided zero, by explicit multiplication table.
struct FiniteMonoidWithZero {
    std::vector<std::string> elements;
    size_t unit = 0, zero = 0;
    std::vector<std::vector<size_t>> mul;

    static FiniteMonoidWithZero make(std::vector<std::string> elements, size_t unit, size_t zero,
                                     std::vector<std::vector<size_t>> mul);
};

/// Two objects b, s with End(b) = M, a single morphism each way, the inward
/// composite equal to id_s and the outward one equal to the zero of M.
FiniteCategory p_category(const FiniteMonoidWithZero& M);

// Names used by p_category for the special morphisms.
extern const char* const kAlphaPlus;  // s -> b
extern const char* const kAlphaMinus; // b -> s
extern const char* const kIdSmall;

/// Twisted arrow category: objects are the arrows of C, a morphism f -> f'
/// is a pair (u,v) with f = v∘f'∘u, composed by juxtaposition.
struct TwistedArrow {
    FiniteCategory tw;
    std::vector<size_t> base;                        // tw object -> C morphism
    std::vector<std::pair<size_t, size_t>> factors;  // tw morphism -> (u, v) in C

    size_t object_of(size_t c_morphism) const;       // inverse of `base`
    /// the canonical arrow f -> id_{src f}, i.e. (id, f)
    size_t left_leg(const FiniteCategory& C, size_t f) const;
    /// the canonical arrow f -> id_{tgt f}, i.e. (f, id)
    size_t right_leg(const FiniteCategory& C, size_t f) const;
    /// arrow g∘f -> g, i.e. (f, id); requires composability
    size_t square_to_g(const FiniteCategory& C, size_t g, size_t f) const;
    /// arrow g∘f -> f, i.e. (id, g)
    size_t square_to_f(const FiniteCategory& C, size_t g, size_t f) const;
};

TwistedArrow twisted_arrow(const FiniteCategory& C);

/// The square g∘f -> {g, f} -> id_{middle} commutes for every composable pair.
CheckReport twisted_square_check(const FiniteCategory& C, const TwistedArrow& T);

/// Span of finite sets {0..left-1} <- {0..apex-1} -> {0..right-1}.
struct Span {
    size_t left = 0, apex = 0, right = 0;
    std::vector<size_t> left_leg, right_leg; // arrays of length apex
};

Span identity_span(size_t n);

struct ComposedSpan {
    Span span;
    std::vector<std::pair<size_t, size_t>> pairs; // composite apex elements, in order
};

/// Fiber product of apexes over the shared boundary.
ComposedSpan span_compose(const Span& first, const Span& second);

/// Functor Tw(C) -> FinSet: a set size per object, a function per morphism.
struct SetFunctor {
    std::vector<size_t> set_size;          // per tw object
    std::vector<std::vector<size_t>> fn;   // per tw morphism
};

CheckReport functor_valid(const TwistedArrow& T, const SetFunctor& F);

/// Lax-functor data extracted from a functor on the twisted arrow category:
/// a span per morphism of C and a comparison map into a pullback per
/// composable pair, with coherence and unitality checked exhaustively.
struct LaxData {
    std::vector<Span> spans; // per C-morphism
    struct Comparison {
        size_t g = 0, f = 0;                          // composable pair
        std::vector<std::pair<size_t, size_t>> pullback; // (x in F(g), y in F(f))
        std::vector<size_t> map;                      // F(g∘f) -> pullback index
        bool bijective = false;
    };
    std::vector<Comparison> comparisons;
    bool coherent = false;  // the two routes through triple pullbacks agree
    bool unital = false;    // comparisons with an identity factor are bijections
    bool passed() const { return coherent && unital; }
};

LaxData lax_from_tw(const FiniteCategory& C, const TwistedArrow& T, const SetFunctor& F);

/// Does F send the square of (g, f) to a pullback square? Computed directly
/// from the F-images of the four corners, independent of LaxData.
bool square_is_pullback(const FiniteCategory& C, const TwistedArrow& T, const SetFunctor& F,
                        size_t g, size_t f);

/// For a groupoid C, the source projection Tw(C) -> C is an equivalence:
/// essentially surjective and fully faithful, verified exhaustively.
CheckReport groupoid_equiv_check(const FiniteCategory& C);

} // namespace gmact::cat
