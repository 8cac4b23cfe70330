#include "torcode/betasym.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torcode {

std::string Compactum::describe() const
{
        switch (kind) {
        case Kind::markov:
                return "markov(" + std::to_string(r) + ")";
        case Kind::sofic:
                return "sofic(" + std::to_string(r) + ")";
        case Kind::markov_reversed:
                return "markov_reversed(" + std::to_string(r) + ")";
        }
        return "?";
}

Compactum compactum_for(const Int &r, int sigma)
{
        if (r <= 0 || !r.fits_slong_p())
                throw std::invalid_argument("compactum needs trace r > 0, got " + r.get_str());
        if (sigma == -1)
                return Compactum{Kind::markov, r.get_si()};
        if (sigma == 1 && r >= 3)
                return Compactum{Kind::sofic, r.get_si()};
        throw std::invalid_argument("(r, sigma) = (" + r.get_str() + ", " + std::to_string(sigma) +
                                    ") is not hyperbolic");
}

Compactum reversed(const Compactum &c)
{
        switch (c.kind) {
        case Kind::markov:
                return Compactum{Kind::markov_reversed, c.r};
        case Kind::markov_reversed:
                return Compactum{Kind::markov, c.r};
        case Kind::sofic:
                return c;
        }
        return c;
}

static void require_expandable(const Compactum &c)
{
        if (c.kind == Kind::markov_reversed)
                throw std::invalid_argument("operation not defined on the reversed compactum; apply reverse_map first");
}

SymWord zero_word() { return SymWord{}; }

SymWord unit_word(long k) { return SymWord{k, {1}, Tail::zero, Tail::zero}; }

static std::vector<long> tail_pattern(Tail t, long r)
{
        switch (t) {
        case Tail::zero:
                return {0};
        case Tail::alt_r0:
                return {r, 0};
        case Tail::const_r2:
                return {r - 2};
        }
        return {0};
}

long digit_at(const SymWord &w, long n, long r)
{
        if (n >= w.offset && n < w.end())
                return w.core[n - w.offset];
        if (n >= w.end()) {
                auto p = tail_pattern(w.right, r);
                return p[(n - w.end()) % p.size()];
        }
        auto p = tail_pattern(w.left, r);
        return p[(w.offset - 1 - n) % p.size()];
}

SymWord materialize(const SymWord &w, long lo, long hi, long r)
{
        SymWord out = w;
        auto lp = tail_pattern(w.left, r), rp = tail_pattern(w.right, r);
        while (out.offset > lo) {
                out.core.insert(out.core.begin(), lp.rbegin(), lp.rend());
                out.offset -= (long)lp.size();
        }
        while (out.end() < hi)
                out.core.insert(out.core.end(), rp.begin(), rp.end());
        return out;
}

SymWord trim(const SymWord &w, long r)
{
        SymWord out = w;
        auto rp = tail_pattern(w.right, r), lp = tail_pattern(w.left, r);
        while (out.core.size() >= rp.size() &&
               std::equal(rp.begin(), rp.end(), out.core.end() - (long)rp.size()))
                out.core.resize(out.core.size() - rp.size());
        while (out.core.size() >= lp.size() && std::equal(lp.rbegin(), lp.rend(), out.core.begin())) {
                out.core.erase(out.core.begin(), out.core.begin() + (long)lp.size());
                out.offset += (long)lp.size();
        }
        if (out.core.empty() && out.finite())
                out.offset = 0;
        return out;
}

SymWord shift(const SymWord &w, long k)
{
        SymWord out = w;
        out.offset -= k;
        return out;
}

const char *tail_name(Tail t)
{
        switch (t) {
        case Tail::zero:
                return "zero";
        case Tail::alt_r0:
                return "alt_r0";
        case Tail::const_r2:
                return "const_r2";
        }
        return "?";
}

static Tail parse_tail(std::string s)
{
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (s == "zero" || s.empty())
                return Tail::zero;
        if (s == "alt_r0")
                return Tail::alt_r0;
        if (s == "const_r2")
                return Tail::const_r2;
        throw std::invalid_argument("unknown tail tag \"" + s + "\" (expected zero, alt_r0 or const_r2)");
}

std::string word_to_string(const SymWord &w)
{
        std::string s = std::string(tail_name(w.left)) + "|";
        for (size_t i = 0; i < w.core.size(); ++i)
                s += (i ? " " : "") + std::to_string(w.core[i]);
        return s + "|" + tail_name(w.right) + " @" + std::to_string(w.offset);
}

SymWord parse_word(const std::string &s)
{
        size_t a = s.find('|'), b = a == std::string::npos ? a : s.find('|', a + 1);
        if (b == std::string::npos)
                throw std::invalid_argument("word \"" + s + "\" is not of the form tail|digits|tail @offset");
        SymWord w;
        w.left = parse_tail(s.substr(0, a));
        std::string rest = s.substr(b + 1);
        size_t at = rest.find('@');
        w.right = parse_tail(rest.substr(0, at));
        if (at != std::string::npos) {
                try {
                        size_t used = 0;
                        std::string o = rest.substr(at + 1);
                        w.offset = std::stol(o, &used);
                        if (o.find_first_not_of(" \t", used) != std::string::npos)
                                throw std::invalid_argument("trailing text");
                } catch (const std::exception &) {
                        throw std::invalid_argument("bad offset in word \"" + s + "\"");
                }
        }
        std::istringstream ds(s.substr(a + 1, b - a - 1));
        std::string tok;
        while (ds >> tok) {
                size_t used = 0;
                long d;
                try {
                        d = std::stol(tok, &used);
                } catch (const std::exception &) {
                        used = 0;
                }
                if (used != tok.size())
                        throw std::invalid_argument("bad digit \"" + tok + "\" in word \"" + s + "\"");
                w.core.push_back(d);
        }
        return w;
}

/* sum_{i>=0} pat[i % Q] x^i for |x| < 1 */
static QuadExt periodic_sum(const std::vector<long> &pat, const QuadExt &x)
{
        QuadExt one = qx_int(1, x.D), acc = qx_int(0, x.D), pw = one;
        for (long d : pat) {
                acc = acc + Int(d) * pw;
                pw = pw * x;
        }
        return acc / (one - pw);
}

static QuadExt eventual_sum(const std::vector<long> &prefix, const std::vector<long> &period, const QuadExt &lam)
{
        QuadExt inv = qx_int(1, lam.D) / lam, acc = qx_int(0, lam.D), pw = inv;
        for (long d : prefix) {
                acc = acc + Int(d) * pw;
                pw = pw * inv;
        }
        if (!period.empty())
                acc = acc + pw * periodic_sum(period, inv);
        return acc;
}

ParryData parry_expansion(const Int &r, int sigma)
{
        Compactum c = compactum_for(r, sigma);
        (void)c;
        QuadExt lam = qx_lambda(r, sigma);
        std::map<std::pair<Int, std::pair<Int, Int>>, size_t> seen;
        std::vector<long> digits;
        QuadExt z = qx_int(1, lam.D);
        ParryData pd;
        for (int step = 0; step < 1000; ++step) {
                QuadExt y = lam * z;
                Int d = qx_floor(y);
                digits.push_back(d.get_si());
                z = y - qx_int(d, lam.D);
                if (z.is_zero()) {
                        pd.prefix = digits;
                        break;
                }
                auto key = std::make_pair(z.p, std::make_pair(z.q, z.s));
                auto it = seen.find(key);
                if (it != seen.end()) {
                        pd.prefix.assign(digits.begin(), digits.begin() + (long)it->second);
                        pd.period.assign(digits.begin() + (long)it->second, digits.end());
                        break;
                }
                seen[key] = digits.size();
        }
        if (pd.prefix.empty() && pd.period.empty())
                throw std::runtime_error("parry_expansion: no period found");
        if (!(eventual_sum(pd.prefix, pd.period, lam) == qx_int(1, lam.D)))
                throw std::logic_error("parry_expansion: expansion does not sum to 1");
        if (pd.period.empty()) {
                pd.qg_period = pd.prefix;
                pd.qg_period.back() -= 1;
        } else {
                pd.qg_prefix = pd.prefix;
                pd.qg_period = pd.period;
        }
        if (!(eventual_sum(pd.qg_prefix, pd.qg_period, lam) == qx_int(1, lam.D)))
                throw std::logic_error("parry_expansion: quasi-greedy expansion does not sum to 1");
        return pd;
}

static long qg_digit(const ParryData &pd, size_t i)
{
        if (i < pd.qg_prefix.size())
                return pd.qg_prefix[i];
        return pd.qg_period[(i - pd.qg_prefix.size()) % pd.qg_period.size()];
}

/* every suffix is lexicographically <= the prefix of d*(1) of the same length */
static bool parry_allowed(const std::vector<long> &u, const ParryData &pd)
{
        for (size_t i = 0; i < u.size(); ++i)
                for (size_t j = i; j < u.size(); ++j) {
                        long q = qg_digit(pd, j - i);
                        if (u[j] < q)
                                break;
                        if (u[j] > q)
                                return false;
                }
        return true;
}

std::vector<std::vector<long>> forbidden_family(const Compactum &c, int max_len)
{
        std::vector<std::vector<long>> out;
        long r = c.r;
        if (c.kind == Kind::sofic) {
                for (int j = 0; j + 2 <= max_len; ++j) {
                        std::vector<long> u(j + 2, r - 2);
                        u.front() = u.back() = r - 1;
                        out.push_back(u);
                }
        } else {
                for (long x = 1; x <= r; ++x)
                        out.push_back(c.kind == Kind::markov ? std::vector<long>{r, x} : std::vector<long>{x, r});
        }
        std::sort(out.begin(), out.end());
        return out;
}

DerivedCompactum derive_compactum(const Int &r, int sigma, int max_len)
{
        Compactum c = compactum_for(r, sigma);
        ParryData pd = parry_expansion(r, sigma);
        long amax = qx_floor(qx_lambda(r, sigma)).get_si();
        if (amax != c.digit_max())
                throw std::logic_error("derive_compactum: alphabet mismatch");
        DerivedCompactum out{c, {}};
        std::vector<std::vector<long>> frontier{{}};
        for (int len = 1; len <= max_len; ++len) {
                std::vector<std::vector<long>> next;
                for (const auto &u : frontier)
                        for (long d = 0; d <= amax; ++d) {
                                std::vector<long> v = u;
                                v.push_back(d);
                                if (parry_allowed(v, pd)) {
                                        next.push_back(v);
                                        continue;
                                }
                                std::vector<long> suf(v.begin() + 1, v.end());
                                if (parry_allowed(suf, pd))
                                        out.forbidden.push_back(v);
                        }
                frontier = std::move(next);
        }
        std::sort(out.forbidden.begin(), out.forbidden.end());
        if (out.forbidden != forbidden_family(c, max_len))
                throw std::logic_error("derive_compactum: Parry constraints differ from " + c.describe());
        return out;
}

static bool tail_allowed(Tail t, const Compactum &c)
{
        if (t == Tail::zero)
                return true;
        if (t == Tail::alt_r0)
                return c.kind != Kind::sofic;
        return c.kind == Kind::sofic;
}

bool is_homoclinic_word(const SymWord &w, const Compactum &c)
{
        return tail_allowed(w.left, c) && tail_allowed(w.right, c);
}

bool is_admissible(const SymWord &w, const Compactum &c)
{
        if (!is_homoclinic_word(w, c))
                return false;
        for (long d : w.core)
                if (d < 0 || d > c.digit_max())
                        return false;
        long r = c.r;
        SymWord m = materialize(w, w.offset - 4, w.end() + 4, r);
        const auto &d = m.core;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
                if (c.kind == Kind::markov && d[i] == r && d[i + 1] != 0)
                        return false;
                if (c.kind == Kind::markov_reversed && d[i + 1] == r && d[i] != 0)
                        return false;
        }
        if (c.kind == Kind::sofic)
                for (size_t i = 0; i < d.size(); ++i) {
                        if (d[i] != r - 1)
                                continue;
                        size_t j = i + 1;
                        while (j < d.size() && d[j] == r - 2)
                                ++j;
                        if (j < d.size() && d[j] == r - 1)
                                return false;
                }
        return true;
}

std::pair<QuadExt, QuadExt> split_value(const SymWord &w, const Compactum &c)
{
        QuadExt lam = qx_lambda(c.r, c.sigma()), lamb = qx_lambda_bar(c.r, c.sigma());
        SymWord m = materialize(w, std::min(w.offset, 1L), std::max(w.end(), 1L), c.r);
        QuadExt x1 = qx_int(0, lam.D), x2 = x1;
        for (size_t i = 0; i < m.core.size(); ++i) {
                long n = m.offset + (long)i;
                if (m.core[i] == 0)
                        continue;
                if (n >= 1)
                        x1 = x1 + Int(m.core[i]) * qx_pow(lam, -n);
                else
                        x2 = x2 + Int(m.core[i]) * qx_pow(lamb, -n);
        }
        if (m.right != Tail::zero)
                x1 = x1 + qx_pow(lam, -m.end()) * periodic_sum(tail_pattern(m.right, c.r), qx_pow(lam, -1));
        if (m.left != Tail::zero)
                x2 = x2 + qx_pow(lamb, 1 - m.offset) * periodic_sum(tail_pattern(m.left, c.r), lamb);
        return {x1, x2};
}

QuadExt value(const SymWord &w, const Compactum &c)
{
        auto [x1, x2] = split_value(w, c);
        return x1 + qx_conj(x2);
}

bool in_Pi(const QuadExt &x1, const QuadExt &x2, const Compactum &c)
{
        require_expandable(c);
        QuadExt lam = qx_lambda(c.r, c.sigma());
        QuadExt one = qx_int(1, lam.D), zero = qx_int(0, lam.D), linv = one / lam;
        if (x1 < zero || x1 >= one)
                return false;
        if (c.sigma() == -1) {
                if (x2 < -one || x2 >= lam)
                        return false;
                return !(x1 >= linv && x2 >= lam - one);
        }
        if (x2 < zero || x2 >= lam)
                return false;
        return !(x1 >= one - linv && x2 >= lam - one);
}

std::vector<std::pair<QuadExt, QuadExt>> Pi_vertices(const Compactum &c)
{
        require_expandable(c);
        QuadExt lam = qx_lambda(c.r, c.sigma());
        QuadExt one = qx_int(1, lam.D), zero = qx_int(0, lam.D), linv = one / lam;
        if (c.sigma() == -1)
                return {{zero, -one}, {one, -one}, {one, lam - one}, {linv, lam - one}, {linv, lam}, {zero, lam}};
        return {{zero, zero}, {one, zero}, {one, lam - one}, {one - linv, lam - one}, {one - linv, lam}, {zero, lam}};
}

std::pair<QuadExt, QuadExt> reduce_into_Pi(const QuadExt &x1, const QuadExt &x2, const Compactum &c)
{
        require_expandable(c);
        QuadExt lam = qx_lambda(c.r, c.sigma()), lamb = qx_lambda_bar(c.r, c.sigma());
        double l = lam.to_double(), lb = lamb.to_double();
        double c1 = 0.5, c2 = c.sigma() == -1 ? (l - 1) / 2 : l / 2;
        /* m + n l = x1 - c1, m + n lb = c2 - x2 */
        double a = x1.to_double() - c1, b = c2 - x2.to_double();
        double n0 = std::round((a - b) / (l - lb)), m0 = std::round(a - n0 * l);
        auto shifted = [&](long dm, long dn) {
                Int m = Int(m0) + dm, n = Int(n0) + dn;
                QuadExt L = qx_int(m, lam.D) + n * lam, Lb = qx_int(m, lam.D) + n * lamb;
                return std::make_pair(x1 - L, x2 + Lb);
        };
        for (long rad = 3; rad <= 48; rad *= 4) {
                std::vector<std::pair<QuadExt, QuadExt>> hits;
                for (long dm = -rad; dm <= rad; ++dm)
                        for (long dn = -rad; dn <= rad; ++dn) {
                                auto p = shifted(dm, dn);
                                if (in_Pi(p.first, p.second, c))
                                        hits.push_back(p);
                        }
                if (hits.size() > 1)
                        throw std::logic_error("reduce_into_Pi: translates of Pi overlap");
                if (hits.size() == 1)
                        return hits[0];
        }
        throw std::logic_error("reduce_into_Pi: no lattice translate lands in the fundamental domain");
}

Expansion expand_split(const QuadExt &x1, const QuadExt &x2, const Compactum &c, long max_digits)
{
        if (!in_Pi(x1, x2, c))
                throw std::invalid_argument("expand_split: point is outside the fundamental domain");
        long r = c.r;
        QuadExt lam = qx_lambda(c.r, c.sigma());
        QuadExt one = qx_int(1, lam.D), zero = qx_int(0, lam.D);
        Expansion ex;
        SymWord &w = ex.word;

        std::vector<long> right;
        QuadExt z = x1, r2_state = (lam - one) / lam;
        for (;;) {
                if (z.is_zero())
                        break;
                if (c.kind == Kind::sofic && z == r2_state) {
                        w.right = Tail::const_r2;
                        break;
                }
                if ((long)right.size() >= max_digits) {
                        ex.exact = false;
                        break;
                }
                QuadExt y = lam * z;
                Int d = qx_floor(y);
                right.push_back(d.get_si());
                z = y - qx_int(d, lam.D);
        }

        std::vector<long> left; /* eps_0, eps_-1, ... */
        z = x2;
        long prev = right.empty() ? (w.right == Tail::const_r2 ? r - 2 : 0) : right.front();
        for (;;) {
                if (z.is_zero())
                        break;
                if (c.sigma() == -1) {
                        if (z == lam && prev == 0) {
                                w.left = Tail::alt_r0;
                                break;
                        }
                        if (z == -one) {
                                left.push_back(0);
                                w.left = Tail::alt_r0;
                                break;
                        }
                } else if (z == lam - one) {
                        w.left = Tail::const_r2;
                        break;
                }
                if ((long)left.size() >= max_digits + 1) {
                        ex.exact = false;
                        break;
                }
                long d;
                QuadExt nz;
                if (c.sigma() == -1) {
                        long dmax = prev == 0 ? r : r - 1;
                        for (d = 0; d <= dmax; ++d) {
                                nz = -(lam * (z - qx_int(d, lam.D)));
                                /* r is allowed next only after a 0 */
                                QuadExt hi = d == 0 ? lam : lam - one;
                                if (nz >= -one && nz <= hi)
                                        break;
                        }
                        if (d > dmax)
                                throw std::logic_error("expand_split: no feasible digit");
                } else {
                        d = qx_floor(z).get_si();
                        nz = lam * (z - qx_int(d, lam.D));
                }
                left.push_back(d);
                prev = d;
                z = nz;
        }

        w.offset = 1 - (long)left.size();
        w.core.assign(left.rbegin(), left.rend());
        w.core.insert(w.core.end(), right.begin(), right.end());
        w = trim(w, r);
        return ex;
}

SymWord word_from_value(const QuadExt &v, const Compactum &c, long max_digits)
{
        auto [x1, x2] = reduce_into_Pi(v, qx_int(0, v.D), c);
        Expansion ex = expand_split(x1, x2, c, max_digits);
        if (!ex.exact)
                throw std::runtime_error("value " + v.str() + " has no expansion with supported tails within " +
                                         std::to_string(max_digits) + " digits");
        return ex.word;
}

SymWord normalize_value(const QuadExt &v, const Compactum &c)
{
        require_expandable(c);
        QuadExt lam = qx_lambda(c.r, c.sigma());
        QuadExt zero = qx_int(0, lam.D), one = qx_int(1, lam.D);
        if (v < zero)
                throw std::invalid_argument("normalize: negative value " + v.str());
        if (v.is_zero())
                return zero_word();
        long k = 0;
        QuadExt pk = one;
        while (pk > v) {
                --k;
                pk = pk / lam;
        }
        while (pk * lam <= v) {
                ++k;
                pk = pk * lam;
        }
        QuadExt z = v / (pk * lam), r2_state = (lam - one) / lam;
        SymWord w;
        w.offset = -k;
        for (int step = 0;; ++step) {
                if (z.is_zero())
                        break;
                if (c.kind == Kind::sofic && z == r2_state) {
                        w.right = Tail::const_r2;
                        break;
                }
                if (step > 20000)
                        throw std::runtime_error("normalize: expansion of " + v.str() + " does not terminate");
                QuadExt y = lam * z;
                Int d = qx_floor(y);
                w.core.push_back(d.get_si());
                z = y - qx_int(d, lam.D);
        }
        return trim(w, c.r);
}

SymWord normalize(const std::vector<long> &raw, long offset, const Compactum &c)
{
        require_expandable(c);
        QuadExt lam = qx_lambda(c.r, c.sigma());
        QuadExt v = qx_int(0, lam.D);
        for (size_t i = 0; i < raw.size(); ++i) {
                if (raw[i] < 0)
                        throw std::invalid_argument("normalize: negative digit " + std::to_string(raw[i]));
                if (raw[i])
                        v = v + Int(raw[i]) * qx_pow(lam, -(offset + (long)i));
        }
        return normalize_value(v, c);
}

SymWord word_add(const SymWord &w1, const SymWord &w2, const Compactum &c)
{
        require_expandable(c);
        QuadExt v = value(w1, c) + value(w2, c);
        if (w1.left == Tail::zero && w2.left == Tail::zero)
                return normalize_value(v, c);
        return word_from_value(v, c);
}

SymWord word_neg(const SymWord &w, const Compactum &c)
{
        require_expandable(c);
        return word_from_value(-value(w, c), c);
}

SymWord word_sub(const SymWord &w1, const SymWord &w2, const Compactum &c)
{
        require_expandable(c);
        return word_from_value(value(w1, c) - value(w2, c), c);
}

SymWord canonicalize_identified(const SymWord &w, const Compactum &c)
{
        require_expandable(c);
        QuadExt v = value(w, c);
        if (w.left == Tail::zero && v.sign() >= 0)
                return normalize_value(v, c);
        return word_from_value(v, c);
}

SymWord adic_step(const SymWord &w, long k, const Compactum &c) { return word_add(w, unit_word(k), c); }

SymWord reverse_map(const SymWord &w)
{
        SymWord out;
        out.core.assign(w.core.rbegin(), w.core.rend());
        out.offset = w.core.empty() ? -w.offset : -(w.end() - 1);
        out.left = w.right;
        out.right = w.left;
        return out;
}

} // namespace torcode
