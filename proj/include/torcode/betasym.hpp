#pragma once

/*
 * Two-sided digit sequences over the lambda-compacta.
 *
 * Index n carries weight lambda^-n, so u_k (a single 1 at index k) has value
 * lambda^-k and the shift moves the digit at n+1 to n.
 *
 * A word is split at the origin:
 *
 *     x1 = sum_{n >= 1} eps_n lambda^-n          (real, in [0,1) for admissible words)
 *     x2 = sum_{n <= 0} eps_n conj(lambda)^-n    (converges since |conj(lambda)| < 1)
 *
 * Tails are summed in closed form. The formal value x1 + conj(x2) equals the
 * ordinary sum for words with a zero left tail, and identifies homoclinic
 * words that are the same group element.
 *
 * Tail tags: alt_r0 is r,0,r,0,... with the r next to the core (markov kinds);
 * const_r2 is (r-2),(r-2),... (sofic).
 */

#include "torcode/qfield.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torcode {

enum class Kind { markov, sofic, markov_reversed };
enum class Tail { zero, alt_r0, const_r2 };

struct Compactum {
        Kind kind = Kind::markov;
        long r = 1;

        int sigma() const { return kind == Kind::sofic ? 1 : -1; }
        long digit_max() const { return kind == Kind::sofic ? r - 1 : r; }
        std::string describe() const;
        friend bool operator==(const Compactum &, const Compactum &) = default;
};

Compactum compactum_for(const Int &r, int sigma);
Compactum reversed(const Compactum &c);

struct SymWord {
        long offset = 0;          /* index of core[0] */
        std::vector<long> core;
        Tail left = Tail::zero;
        Tail right = Tail::zero;

        long end() const { return offset + (long)core.size(); }
        bool finite() const { return left == Tail::zero && right == Tail::zero; }
        friend bool operator==(const SymWord &, const SymWord &) = default;
};

SymWord zero_word();
SymWord unit_word(long k);
long digit_at(const SymWord &w, long n, long r);
/* Same word with the core covering at least [lo, hi). */
SymWord materialize(const SymWord &w, long lo, long hi, long r);
/* Drops leading/trailing core digits absorbed by the tails. */
SymWord trim(const SymWord &w, long r);
SymWord shift(const SymWord &w, long k = 1);

std::string word_to_string(const SymWord &w);
SymWord parse_word(const std::string &s);
const char *tail_name(Tail t);

struct ParryData {
        std::vector<long> prefix, period;       /* d(1) = prefix period^inf */
        std::vector<long> qg_prefix, qg_period; /* quasi-greedy d*(1) */
};
ParryData parry_expansion(const Int &r, int sigma);

struct DerivedCompactum {
        Compactum compactum;
        std::vector<std::vector<long>> forbidden; /* minimal forbidden words up to max_len */
};
DerivedCompactum derive_compactum(const Int &r, int sigma, int max_len = 6);
/* Minimal forbidden words of the named family up to max_len. */
std::vector<std::vector<long>> forbidden_family(const Compactum &c, int max_len);

bool is_admissible(const SymWord &w, const Compactum &c);
bool is_homoclinic_word(const SymWord &w, const Compactum &c);

std::pair<QuadExt, QuadExt> split_value(const SymWord &w, const Compactum &c);
QuadExt value(const SymWord &w, const Compactum &c);

/* Fundamental domain Pi of the split coordinates, half-open. */
bool in_Pi(const QuadExt &x1, const QuadExt &x2, const Compactum &c);
std::vector<std::pair<QuadExt, QuadExt>> Pi_vertices(const Compactum &c);
/* (x1 - L, x2 + conj L) in Pi for L in Z + lambda Z; returns the reduced pair. */
std::pair<QuadExt, QuadExt> reduce_into_Pi(const QuadExt &x1, const QuadExt &x2, const Compactum &c);

struct Expansion {
        SymWord word;
        bool exact = true; /* false when cut off by the window */
};
/* Word with split (x1, x2) in Pi; at most max_digits on each side. */
Expansion expand_split(const QuadExt &x1, const QuadExt &x2, const Compactum &c, long max_digits);
/* Canonical word of a formal value. */
SymWord word_from_value(const QuadExt &v, const Compactum &c, long max_digits = 4000);

SymWord normalize(const std::vector<long> &raw, long offset, const Compactum &c);
SymWord normalize_value(const QuadExt &v, const Compactum &c);
SymWord word_add(const SymWord &w1, const SymWord &w2, const Compactum &c);
SymWord word_neg(const SymWord &w, const Compactum &c);
SymWord word_sub(const SymWord &w1, const SymWord &w2, const Compactum &c);
SymWord canonicalize_identified(const SymWord &w, const Compactum &c);
SymWord adic_step(const SymWord &w, long k, const Compactum &c);
SymWord reverse_map(const SymWord &w);

} // namespace torcode
