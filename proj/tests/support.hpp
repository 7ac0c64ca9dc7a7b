#pragma once
// Shared test helpers: deterministic random generators and an independent
// linear-algebra ideal-membership oracle (no Groebner machinery involved).
#include "gmact/groebner.hpp"
#include "gmact/parse.hpp"
#include "gmact/polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace testsupport {

using namespace gmact;

// xorshift-style PRNG, fixed seed for reproducible suites
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline Rational random_rational(Rng& rng, long num_bound = 5) {
    long n = rng.range(-num_bound, num_bound);
    long d = rng.range(1, 3);
    return make_rational(Integer(n), Integer(d));
}

inline Polynomial random_polynomial(Rng& rng, const RingPtr& ring, long max_terms = 4,
                                    int max_exp = 2) {
    std::vector<Term> terms;
    long nt = rng.range(1, max_terms);
    for (long t = 0; t < nt; ++t) {
        Exponents e(ring->nvars());
        for (size_t i = 0; i < ring->nvars(); ++i)
            e[i] = static_cast<int>(rng.range(0, max_exp));
        terms.push_back({std::move(e), random_rational(rng)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

// all exponent vectors in nvars variables with total degree <= bound
inline void enumerate_monomials(size_t nvars, int bound, Exponents& cur, size_t pos,
                                std::vector<Exponents>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (size_t i = 0; i < pos; ++i)
        used += cur[i];
    for (int e = 0; e + used <= bound; ++e) {
        cur[pos] = e;
        enumerate_monomials(nvars, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

inline std::vector<Exponents> monomials_up_to(size_t nvars, int bound) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    enumerate_monomials(nvars, bound, cur, 0, out);
    return out;
}

/// Independent oracle: is g in the ideal of `gens` via cofactors of total
/// degree <= cofactor_bound? Solves the exact linear system by Gaussian
/// elimination over Q. Sound but incomplete (bounded search).
inline bool bruteforce_ideal_member(const Polynomial& g, const std::vector<Polynomial>& gens,
                                    int cofactor_bound) {
    const RingPtr& ring = g.ring();
    auto cof_monos = monomials_up_to(ring->nvars(), cofactor_bound);

    // columns: (generator index, cofactor monomial); rows: product monomials
    struct Col {
        size_t gen;
        Exponents mono;
    };
    std::vector<Col> cols;
    for (size_t k = 0; k < gens.size(); ++k)
        for (const auto& m : cof_monos)
            cols.push_back({k, m});

    std::map<Exponents, size_t> row_of;
    auto row_index = [&](const Exponents& m) {
        auto [it, fresh] = row_of.try_emplace(m, row_of.size());
        (void)fresh;
        return it->second;
    };

    std::vector<std::map<size_t, Rational>> col_entries(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        Polynomial prod = gens[cols[c].gen].times_term(Rational(1), cols[c].mono);
        for (const auto& t : prod.terms())
            col_entries[c][row_index(t.mono)] = t.coeff;
    }
    std::vector<Rational> rhs_dense;
    size_t nrows_for_g = 0;
    for (const auto& t : g.terms())
        nrows_for_g = std::max(nrows_for_g, row_index(t.mono) + 1);
    (void)nrows_for_g;

    size_t nrows = row_of.size();
    size_t ncols = cols.size();
    // dense assembly; desk-scale sizes only
    std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols, Rational(0)));
    std::vector<Rational> b(nrows, Rational(0));
    for (size_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : col_entries[c])
            A[r][c] = v;
    for (const auto& t : g.terms())
        b[row_of[t.mono]] = t.coeff;

    // Gaussian elimination on [A|b]; system solvable iff no pivot in b column
    size_t rank_row = 0;
    for (size_t c = 0; c < ncols && rank_row < nrows; ++c) {
        size_t pivot = rank_row;
        while (pivot < nrows && A[pivot][c] == 0)
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(A[pivot], A[rank_row]);
        std::swap(b[pivot], b[rank_row]);
        Rational inv = Rational(1) / A[rank_row][c];
        for (size_t cc = c; cc < ncols; ++cc)
            A[rank_row][cc] *= inv;
        b[rank_row] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank_row || A[r][c] == 0)
                continue;
            Rational f = A[r][c];
            for (size_t cc = c; cc < ncols; ++cc)
                A[r][cc] -= f * A[rank_row][cc];
            b[r] -= f * b[rank_row];
        }
        ++rank_row;
    }
    for (size_t r = rank_row; r < nrows; ++r)
        if (b[r] != 0)
            return false;
    // consistent: also need rows below pivots to vanish, handled above
    for (size_t r = 0; r < nrows; ++r) {
        bool all_zero = true;
        for (size_t c = 0; c < ncols; ++c)
            if (A[r][c] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero && b[r] != 0)
            return false;
    }
    return true;
}

} // namespace testsupport
