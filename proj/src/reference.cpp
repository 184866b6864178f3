#include "ppbase/reference.hpp"

#include <algorithm>
#include <unordered_map>

#include "ppbase/bitset.hpp"
#include "ppbase/numeric.hpp"
#include "ppbase/structure.hpp"
#include "ppbase/table.hpp"

#include <gmpxx.h>

namespace ppbase::ref {

std::vector<PermGroup> all_subgroups_bruteforce(const PermGroup& G) {
    if (G.order() > 48) throw CapExceeded("brute-force subgroup oracle limited to order 48");
    auto T = G.table();
    const std::size_t n = T->size();

    std::vector<TSub> subs;
    std::unordered_map<std::uint64_t, std::vector<unsigned>> seen;
    auto add = [&](TSub s) {
        auto& bucket = seen[s.bits.hash()];
        for (unsigned i : bucket)
            if (subs[i].bits == s.bits) return;
        bucket.push_back(static_cast<unsigned>(subs.size()));
        subs.push_back(std::move(s));
    };

    for (std::size_t a = 0; a < n; ++a) {
        std::vector<EIdx> one{static_cast<EIdx>(a)};
        add(closure_of(*T, one));
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<EIdx> two{static_cast<EIdx>(a), static_cast<EIdx>(b)};
            add(closure_of(*T, two));
        }
    }
    // join pairs to a fixpoint
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = subs.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                if (subs[i].bits.is_subset_of(subs[j].bits) ||
                    subs[j].bits.is_subset_of(subs[i].bits))
                    continue;
                std::vector<EIdx> seeds = subs[i].elems;
                seeds.insert(seeds.end(), subs[j].elems.begin(), subs[j].elems.end());
                std::size_t before = subs.size();
                add(closure_of(*T, seeds));
                if (subs.size() != before) grew = true;
            }
    }
    std::vector<PermGroup> out;
    for (const auto& s : subs) out.push_back(subgroup_to_permgroup(*T, G.degree(), s));
    return out;
}

namespace {

struct BruteSearch {
    const GroupTable& T;
    Bitset phi_closure_seed;          // Frattini elements
    std::vector<EIdx> phi_gens;
    std::vector<EIdx> candidates;     // eligible elements, ascending
    unsigned best = 0;

    bool generates_all(const std::vector<EIdx>& xs) const {
        std::vector<EIdx> seeds = xs;
        seeds.insert(seeds.end(), phi_gens.begin(), phi_gens.end());
        return closure_of(T, seeds).order() == T.size();
    }

    bool independent(const std::vector<EIdx>& xs) const {
        for (std::size_t skip = 0; skip < xs.size(); ++skip) {
            std::vector<EIdx> rest = phi_gens;
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (j != skip) rest.push_back(xs[j]);
            if (closure_of(T, rest).bits.test(xs[skip])) return false;
        }
        return true;
    }

    void dfs(std::vector<EIdx>& cur, std::size_t from) {
        if (!cur.empty() && !independent(cur)) return;
        if (!cur.empty() && generates_all(cur)) {
            best = std::max(best, static_cast<unsigned>(cur.size()));
            return;  // nothing extends an independent generating set
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            cur.push_back(candidates[i]);
            dfs(cur, i + 1);
            cur.pop_back();
        }
    }
};

BruteSearch make_brute(const PermGroup& G, bool pp_only) {
    auto T = G.table();
    PermGroup phi = frattini(G, 2016);
    BruteSearch bs{*T, Bitset(T->size()), {}, {}, 0};
    for (const auto& g : phi.generators()) bs.phi_gens.push_back(T->index_of(g));
    for (std::size_t e = 1; e < T->size(); ++e)
        if (!pp_only || T->is_pp(static_cast<EIdx>(e))) bs.candidates.push_back(static_cast<EIdx>(e));
    return bs;
}

}  // namespace

unsigned max_independent_bruteforce(const PermGroup& G) {
    if (G.order() == 1) return 0;
    auto bs = make_brute(G, false);
    std::vector<EIdx> cur;
    bs.dfs(cur, 0);
    return bs.best;
}

unsigned max_pp_independent_bruteforce(const PermGroup& G) {
    if (G.order() == 1) return 0;
    auto bs = make_brute(G, true);
    std::vector<EIdx> cur;
    bs.dfs(cur, 0);
    return bs.best;
}

unsigned min_pp_generating_bruteforce(const PermGroup& G) {
    if (G.order() == 1) return 0;
    auto T = G.table();
    std::vector<EIdx> cand;
    for (std::size_t e = 1; e < T->size(); ++e)
        if (T->is_pp(static_cast<EIdx>(e))) cand.push_back(static_cast<EIdx>(e));
    for (unsigned k = 1;; ++k) {
        std::vector<EIdx> cur;
        auto rec = [&](auto&& self, std::size_t from) -> bool {
            if (cur.size() == k) return closure_of(*T, cur).order() == T->size();
            for (std::size_t i = from; i < cand.size(); ++i) {
                cur.push_back(cand[i]);
                if (self(self, i + 1)) return true;
                cur.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return k;
        if (k > 32) throw Error("min_pp_generating_bruteforce runaway");
    }
}

std::vector<std::pair<std::uint64_t, unsigned>> feit_scan_serial(std::uint64_t x_max,
                                                                 unsigned n_max) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t x = 2; x <= x_max; ++x) {
        for (unsigned n = 2; n <= n_max; ++n) {
            mpz_class v;
            mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(x), n);
            v -= 1;
            // full factorization by trial division (callers keep ranges small)
            std::vector<std::pair<mpz_class, unsigned>> fac;
            mpz_class m = v, d = 2;
            while (d * d <= m) {
                if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
                    unsigned e = 0;
                    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
                        m /= d;
                        ++e;
                    }
                    fac.emplace_back(d, e);
                }
                d += 1;
            }
            if (m > 1) fac.emplace_back(m, 1);

            bool has_large = false;
            for (const auto& [r, e] : fac) {
                // primitive: multiplicative order of x mod r equals n
                if (!r.fits_ulong_p()) {
                    // r > x^{n/2} certainly exceeds n+1; primitivity still needs
                    // the order check, done with mpz arithmetic.
                    mpz_class acc = x % r, base = x % r;
                    unsigned ord = 1;
                    while (acc != 1) {
                        acc = acc * base % r;
                        ++ord;
                    }
                    if (ord == n) has_large = true;
                    continue;
                }
                std::uint64_t ru = mpz_get_ui(r.get_mpz_t());
                if (x % ru == 0) continue;
                if (multiplicative_order(x % ru, ru) != n) continue;  // not primitive
                if (ru > std::uint64_t(n) + 1 || e >= 2) has_large = true;
            }
            if (!has_large) out.emplace_back(x, n);
        }
    }
    return out;
}

}  // namespace ppbase::ref
