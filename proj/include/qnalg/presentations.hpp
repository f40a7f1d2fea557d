#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "block_string.hpp"
#include "free_algebra.hpp"
#include "subset.hpp"

namespace qnalg {

enum class relation_kind { q_rels, x_rels, s1, s2, s3, s4, s1_bar, s2_bar, s3_bar };

inline std::string to_string(relation_kind k) {
    switch (k) {
        case relation_kind::q_rels: return "q_rels";
        case relation_kind::x_rels: return "x_rels";
        case relation_kind::s1: return "s1";
        case relation_kind::s2: return "s2";
        case relation_kind::s3: return "s3";
        case relation_kind::s4: return "s4";
        case relation_kind::s1_bar: return "s1_bar";
        case relation_kind::s2_bar: return "s2_bar";
        case relation_kind::s3_bar: return "s3_bar";
    }
    return "?";
}

struct relation_family {
    relation_kind kind;
    int n;
    std::vector<free_element> elements;
};

namespace detail {

// Sign of a permutation given as distinct values, relative to DESCENDING
// order: the identity ordering here is largest first.
inline int parity_vs_descending(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] < seq[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

inline void check_vab_args(int n, subset_mask a, subset_mask b) {
    if (!a.fits(n)) throw std::invalid_argument("V(A:B): A does not fit ambient size");
    if (!b.subset_of(a)) throw std::invalid_argument("V(A:B): B must be a subset of A");
}

}  // namespace detail

/// The quadratic-to-degree-k alternating relation element: a signed sum over
/// all orderings (c_1,...,c_k) of B of three groups of words built from the
/// removal chain A, A\c_1, A\c_1\c_2, .... The ordering listing B in
/// decreasing order carries sign +1. Words containing the empty set (which
/// arise only when B = A) are dropped: v(emptyset) is read as 0.
inline free_element make_V(int n, subset_mask a, subset_mask b) {
    detail::check_vab_args(n, a, b);
    if (b.size() < 2) throw std::invalid_argument("V(A:B): |B| >= 2 required");
    std::vector<int> base = b.elements();
    std::reverse(base.begin(), base.end());
    const int k = static_cast<int>(base.size());

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    free_element out(side::primal);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        const Rational sign = inversions % 2 ? -1 : 1;

        std::vector<subset_mask> chain(k + 1);
        chain[0] = a;
        for (int i = 0; i < k; ++i) chain[i + 1] = chain[i].without(base[perm[i]]);

        word main{side::primal, std::vector<subset_mask>(chain.begin(), chain.begin() + k)};
        out.add_term(main, sign);

        for (int u = 1; u <= k - 1; ++u) {
            word w{side::primal, {}};
            w.letters.reserve(k);
            for (int i = 1; i <= u; ++i) w.letters.push_back(chain[i]);
            for (int i = u; i <= k - 1; ++i) w.letters.push_back(chain[i]);
            out.add_term(w, u % 2 ? -sign : sign);
        }

        if (!chain[k].empty()) {
            word w{side::primal, std::vector<subset_mask>(chain.begin() + 1, chain.end())};
            out.add_term(w, k % 2 ? -sign : sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// V(A:B) for B listed in an explicit order; equals the descending-order
/// element up to the sign of the reordering.
inline free_element make_V_ordered(int n, subset_mask a, const std::vector<int>& seq) {
    subset_mask b;
    for (int e : seq) {
        if (b.contains(e)) throw std::invalid_argument("V(A:B): repeated element in ordering");
        b = b.with(e);
    }
    free_element v = make_V(n, a, b);
    return detail::parity_vs_descending(seq) < 0 ? -v : v;
}

/// The degree-(k-1) alternating sum over orderings of B of the chain word
/// v(A\c_1) v(A\c_1\c_2) ... (k-1 letters), descending order positive.
inline free_element alternating_chain(int n, subset_mask a, subset_mask b) {
    detail::check_vab_args(n, a, b);
    if (b.size() < 2) throw std::invalid_argument("alternating_chain: |B| >= 2 required");
    std::vector<int> base = b.elements();
    std::reverse(base.begin(), base.end());
    const int k = static_cast<int>(base.size());

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    free_element out(side::primal);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        const Rational sign = inversions % 2 ? -1 : 1;

        word w{side::primal, {}};
        w.letters.reserve(k - 1);
        subset_mask cur = a;
        for (int i = 0; i < k - 1; ++i) {
            cur = cur.without(base[perm[i]]);
            w.letters.push_back(cur);
        }
        out.add_term(w, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// The defining degree-2 relations of Q_n: one V(A:{i,j}) per subset A with
/// |A| >= 2 and unordered pair {i,j} in A. Ordered by (A, pair) mask value.
inline relation_family relations_Q(int n) {
    relation_family fam{relation_kind::q_rels, n, {}};
    for (subset_mask a : nonempty_subsets(n)) {
        if (a.size() < 2) continue;
        for (subset_mask p : nonempty_subsets(n))
            if (p.size() == 2 && p.subset_of(a)) fam.elements.push_back(make_V(n, a, p));
    }
    return fam;
}

/// The associated-graded relations: v(A)(v(A\i) - v(A\j)) with i > j, one per
/// (A, pair), same ordering as relations_Q.
inline relation_family relations_X(int n) {
    relation_family fam{relation_kind::x_rels, n, {}};
    for (subset_mask a : nonempty_subsets(n)) {
        if (a.size() < 2) continue;
        for (subset_mask p : nonempty_subsets(n)) {
            if (p.size() != 2 || !p.subset_of(a)) continue;
            const int hi = p.max_element(), lo = p.min_element();
            fam.elements.push_back(v(a) * (v(a.without(hi)) - v(a.without(lo))));
        }
    }
    return fam;
}

struct dual_sets {
    relation_family s1, s2, s3, s4;
    std::vector<free_element> all() const {
        std::vector<free_element> out;
        for (const auto* f : {&s1, &s2, &s3, &s4})
            out.insert(out.end(), f->elements.begin(), f->elements.end());
        return out;
    }
};

// A dual word v*(A)v*(B) survives in the dual quotient only when B drops at
// most one element from A; every other pair is itself orthogonal to the
// primal relations and goes into S1.
inline bool chain_compatible(subset_mask a, subset_mask b) {
    return b.subset_of(a) && (b.size() == a.size() || b.size() == a.size() - 1);
}

/// The four explicit spanning sets for the dual relation space.
inline dual_sets dual_relation_sets(int n) {
    if (n < 1) throw std::invalid_argument("dual_relation_sets: n >= 1 required");
    dual_sets out{{relation_kind::s1, n, {}},
                  {relation_kind::s2, n, {}},
                  {relation_kind::s3, n, {}},
                  {relation_kind::s4, n, {}}};
    for (subset_mask a : nonempty_subsets(n))
        for (subset_mask b : nonempty_subsets(n))
            if (!chain_compatible(a, b)) out.s1.elements.push_back(vstar(a) * vstar(b));
    for (subset_mask c : nonempty_subsets(n)) {
        if (c.size() < 2) continue;
        free_element sum(side::dual);
        for (int i : c.elements()) sum += vstar(c.without(i));
        out.s2.elements.push_back(vstar(c) * sum + vstar(c) * vstar(c));
    }
    const subset_mask full = subset_mask::full(n);
    for (subset_mask c : nonempty_subsets(n)) {
        if (c == full) continue;
        free_element sum(side::dual);
        for (int i = 1; i <= n; ++i)
            if (!c.contains(i)) sum += vstar(c.with(i)) * vstar(c);
        out.s3.elements.push_back(sum + vstar(c) * vstar(c));
    }
    out.s4.elements.push_back(vstar(full) * vstar(full));
    return out;
}

struct gr_dual_sets {
    relation_family s1_bar, s2_bar, s3_bar;
    std::vector<free_element> all() const {
        std::vector<free_element> out;
        for (const auto* f : {&s1_bar, &s2_bar, &s3_bar})
            out.insert(out.end(), f->elements.begin(), f->elements.end());
        return out;
    }
};

/// Relations presenting the associated graded of the dual: S1 unchanged, the
/// S2 sums without their square term, and every generator square.
inline gr_dual_sets gr_dual_relation_sets(int n) {
    if (n < 1) throw std::invalid_argument("gr_dual_relation_sets: n >= 1 required");
    gr_dual_sets out{{relation_kind::s1_bar, n, {}},
                     {relation_kind::s2_bar, n, {}},
                     {relation_kind::s3_bar, n, {}}};
    for (subset_mask a : nonempty_subsets(n))
        for (subset_mask b : nonempty_subsets(n))
            if (!chain_compatible(a, b)) out.s1_bar.elements.push_back(vstar(a) * vstar(b));
    for (subset_mask c : nonempty_subsets(n)) {
        if (c.size() < 2) continue;
        free_element sum(side::dual);
        for (int i : c.elements()) sum += vstar(c.without(i));
        out.s2_bar.elements.push_back(vstar(c) * sum);
    }
    for (subset_mask c : nonempty_subsets(n)) out.s3_bar.elements.push_back(vstar(c) * vstar(c));
    return out;
}

/// Index (A,B) of a monomial basis word of the dual algebra: B inside A
/// avoiding min(A), spelled as the descending removal chain from A.
struct dual_basis_word {
    subset_mask a, b;
    word w;
};

/// All dual basis words, ordered by (degree, A, B); degree |B|+1. B may be
/// empty (the single-letter words). The count in degree i with |A| = u is
/// C(n,u)*C(u-1,i-1).
inline std::vector<dual_basis_word> dual_basis_words(int n) {
    if (n < 1) throw std::invalid_argument("dual_basis_words: n >= 1 required");
    std::vector<dual_basis_word> out;
    for (subset_mask a : nonempty_subsets(n)) {
        const int lo = a.min_element();
        // subsets of A avoiding min(A), the empty set included
        const std::uint32_t pool = a.without(lo).bits();
        for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
            subset_mask b(sub);
            word w{side::dual, {a}};
            subset_mask cur = a;
            std::vector<int> elems = b.elements();
            for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
                cur = cur.without(*it);
                w.letters.push_back(cur);
            }
            out.push_back({a, b, std::move(w)});
            if (sub == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const dual_basis_word& x, const dual_basis_word& y) {
        if (x.b.size() != y.b.size()) return x.b.size() < y.b.size();
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

inline std::vector<word> dual_basis_words_of_degree(int n, int degree) {
    std::vector<word> out;
    if (degree < 1) return out;
    for (const auto& dbw : dual_basis_words(n))
        if (dbw.w.degree() == degree) out.push_back(dbw.w);
    return out;
}

}  // namespace qnalg
