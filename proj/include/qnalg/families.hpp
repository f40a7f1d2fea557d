#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "block_string.hpp"
#include "numeric.hpp"
#include "subset.hpp"

namespace qnalg {

// Distinguished families of canonical strings.
//   y         all canonical strings
//   y1        every block contains 1
//   y1_dagger every block contains 1 and has at least two elements
//   y_hat1    no block contains 1
//   u(a,j)    y1 strings whose final maximal chain is exactly (a:j)
//   z(b)      y1 strings whose final chain (A_s:j_s) has A_s >= b, |A_s|-j_s = |b|
//   w         concatenations (y1 string)(y_hat1 string), both nonempty, canonical
enum class family_tag { y, y1, y1_dagger, y_hat1, u, z, w };

struct family_spec {
    family_tag tag = family_tag::y;
    subset_mask a{};
    int j = 0;
    subset_mask b{};

    static family_spec y() { return {family_tag::y, {}, 0, {}}; }
    static family_spec y1() { return {family_tag::y1, {}, 0, {}}; }
    static family_spec y1_dagger() { return {family_tag::y1_dagger, {}, 0, {}}; }
    static family_spec y_hat1() { return {family_tag::y_hat1, {}, 0, {}}; }
    static family_spec u(subset_mask a, int j) { return {family_tag::u, a, j, {}}; }
    static family_spec z(subset_mask b) { return {family_tag::z, {}, 0, b}; }
    static family_spec w() { return {family_tag::w, {}, 0, {}}; }

    void validate(int n) const {
        if (n < 0 || n > max_ambient) throw std::invalid_argument("family_spec: ambient size out of range");
        switch (tag) {
            case family_tag::u:
                if (a.empty() || !a.fits(n) || !a.contains(1))
                    throw std::invalid_argument("family_spec: u(A,j) needs 1 in A within the ambient set");
                if (j < 1 || j > a.size()) throw std::invalid_argument("family_spec: u(A,j) needs 1 <= j <= |A|");
                break;
            case family_tag::z:
                if (!b.fits(n) || b.contains(1))
                    throw std::invalid_argument("family_spec: z(B) needs B inside {2..n}");
                break;
            default:
                break;
        }
    }

    std::string str() const {
        switch (tag) {
            case family_tag::y: return "Y";
            case family_tag::y1: return "Y(1)";
            case family_tag::y1_dagger: return "Y(1)dagger";
            case family_tag::y_hat1: return "Y(1hat)";
            case family_tag::u: return "U(" + a.str() + ":" + std::to_string(j) + ")";
            case family_tag::z: return "Z(" + b.str() + ")";
            case family_tag::w: return "W";
        }
        return "?";
    }
};

namespace detail {

// Transition rules shared by membership, counting and enumeration.  A partial
// string is summarized by the head of its last maximal chain and the number
// of blocks that chain has emitted so far.

inline bool head_allowed(family_tag tag, subset_mask c) {
    switch (tag) {
        case family_tag::y: return true;
        case family_tag::y_hat1: return !c.contains(1);
        default: return c.contains(1);  // y1, y1_dagger, u, z and the w prefix
    }
}

// Whether chain (a:*) may emit its j-th block under the family's block rules.
inline bool emission_allowed(family_tag tag, subset_mask a, int j) {
    if (j < 1 || j > a.size()) return false;
    if (tag == family_tag::y1_dagger && a.size() - j + 1 < 2) return false;
    return true;
}

// A new chain headed by c may follow state (a, j) unless c lies inside a with
// exactly the cardinality the old chain would have produced next.
inline bool junction_allowed(subset_mask a, int j, subset_mask c) {
    return !(c.subset_of(a) && c.size() == a.size() - j);
}

// Block j+1 of the chain headed by a.
inline subset_mask chain_next(subset_mask a, int j) {
    subset_mask cur = a;
    for (int m = 0; m < j; ++m) cur = cur.without(cur.max_element());
    return cur;
}

inline constexpr int max_count_length = 512;

// Dense DP table indexed by (head mask, emitted blocks).
struct state_table {
    int n = 0;
    std::vector<Int> v;  // (mask) * (max_ambient + 1) + j

    explicit state_table(int n_) : n(n_), v(static_cast<std::size_t>((std::size_t{1} << n_) * (max_ambient + 1))) {}

    Int& at(std::uint32_t mask, int j) { return v[static_cast<std::size_t>(mask) * (max_ambient + 1) + static_cast<std::size_t>(j)]; }
    const Int& at(std::uint32_t mask, int j) const { return v[static_cast<std::size_t>(mask) * (max_ambient + 1) + static_cast<std::size_t>(j)]; }

    Int total() const {
        Int t = 0;
        for (const auto& x : v) t += x;
        return t;
    }
};

// Sum over states (a, |a|-|c|) with a a strict superset of c: the states a new
// chain headed by c is barred from following.
inline Int barred_sum(const state_table& f, subset_mask c) {
    const std::uint32_t univ = f.n == 0 ? 0u : ((1u << f.n) - 1u);
    const std::uint32_t rest = univ & ~c.bits();
    Int bad = 0;
    for (std::uint32_t d = rest; d != 0; d = (d - 1) & rest) {
        const subset_mask a(c.bits() | d);
        bad += f.at(a.bits(), std::popcount(d));
    }
    return bad;
}

// One transition step for a single-phase family.
inline state_table step(family_tag tag, const state_table& f) {
    state_table g(f.n);
    const std::uint32_t univ = f.n == 0 ? 0u : ((1u << f.n) - 1u);
    for (std::uint32_t m = 1; univ != 0 && m <= univ; ++m) {
        const subset_mask a(m);
        for (int j = 1; j < a.size(); ++j) {
            const Int& cnt = f.at(m, j);
            if (cnt != 0 && emission_allowed(tag, a, j + 1)) g.at(m, j + 1) += cnt;
        }
    }
    const Int total = f.total();
    if (total != 0) {
        for (std::uint32_t m = 1; univ != 0 && m <= univ; ++m) {
            const subset_mask c(m);
            if (!head_allowed(tag, c) || !emission_allowed(tag, c, 1)) continue;
            g.at(m, 1) += total - barred_sum(f, c);
        }
    }
    return g;
}

inline state_table initial(family_tag tag, int n) {
    state_table f(n);
    const std::uint32_t univ = n == 0 ? 0u : ((1u << n) - 1u);
    for (std::uint32_t m = 1; univ != 0 && m <= univ; ++m) {
        const subset_mask c(m);
        if (head_allowed(tag, c) && emission_allowed(tag, c, 1)) f.at(m, 1) = 1;
    }
    return f;
}

}  // namespace detail

inline bool in_family(const block_string& s, const family_spec& f) {
    s.validate();
    f.validate(s.n);

    const auto canonical = [&] { return vee(s) == s; };
    const auto blocks_contain_1 = [&] {
        for (auto b : s.blocks)
            if (!b.contains(1)) return false;
        return true;
    };

    switch (f.tag) {
        case family_tag::y:
            return canonical();
        case family_tag::y1:
            return blocks_contain_1() && canonical();
        case family_tag::y1_dagger: {
            for (auto b : s.blocks)
                if (b.size() < 2) return false;
            return blocks_contain_1() && canonical();
        }
        case family_tag::y_hat1: {
            for (auto b : s.blocks)
                if (b.contains(1)) return false;
            return canonical();
        }
        case family_tag::u: {
            if (s.blocks.empty() || !blocks_contain_1() || !canonical()) return false;
            const auto segs = chain_segments(s);
            return segs.back() == chain_segment{f.a, f.j};
        }
        case family_tag::z: {
            if (s.blocks.empty() || !blocks_contain_1() || !canonical()) return false;
            const auto seg = chain_segments(s).back();
            return f.b.subset_of(seg.head) && seg.head.size() - seg.length == f.b.size();
        }
        case family_tag::w: {
            const int l = s.length();
            if (l < 2) return false;
            int cut = 0;
            while (cut < l && s.blocks[static_cast<std::size_t>(cut)].contains(1)) ++cut;
            if (cut == 0 || cut == l) return false;
            for (int p = cut; p < l; ++p)
                if (s.blocks[static_cast<std::size_t>(p)].contains(1)) return false;
            const block_string prefix{s.n, {s.blocks.begin(), s.blocks.begin() + cut}};
            const block_string suffix{s.n, {s.blocks.begin() + cut, s.blocks.end()}};
            return vee(prefix) == prefix && vee(suffix) == suffix && canonical();
        }
    }
    return false;
}

// Number of length-l members.  Linear-time dynamic programming over chain
// states; exact arbitrary-precision counts.
inline Int count_family(int n, const family_spec& f, int length) {
    f.validate(n);
    if (length < 0) throw std::invalid_argument("count_family: negative length");
    if (length > detail::max_count_length)
        throw resource_limit_error("count_family: length " + std::to_string(length) + " exceeds cap " +
                                   std::to_string(detail::max_count_length));

    const bool contains_empty =
        f.tag == family_tag::y || f.tag == family_tag::y1 || f.tag == family_tag::y1_dagger || f.tag == family_tag::y_hat1;
    if (length == 0) return contains_empty ? 1 : 0;

    if (f.tag == family_tag::w) {
        // Two phases: a y1 prefix, then a y_hat1 suffix, junction rules at
        // every chain boundary including the crossing.
        detail::state_table f1 = detail::initial(family_tag::y1, n);
        detail::state_table f2(n);
        const std::uint32_t univ = n == 0 ? 0u : ((1u << n) - 1u);
        for (int step = 1; step < length; ++step) {
            detail::state_table g1 = detail::step(family_tag::y1, f1);
            detail::state_table g2 = detail::step(family_tag::y_hat1, f2);
            const Int total1 = f1.total();
            if (total1 != 0) {
                for (std::uint32_t m = 1; univ != 0 && m <= univ; ++m) {
                    const subset_mask c(m);
                    if (c.contains(1)) continue;
                    g2.at(m, 1) += total1 - detail::barred_sum(f1, c);
                }
            }
            f1 = std::move(g1);
            f2 = std::move(g2);
        }
        return f2.total();
    }

    const family_tag phase = f.tag;
    detail::state_table t = detail::initial(phase, n);
    for (int step = 1; step < length; ++step) t = detail::step(phase, t);

    switch (f.tag) {
        case family_tag::u:
            return t.at(f.a.bits(), f.j);
        case family_tag::z: {
            const std::uint32_t univ = n == 0 ? 0u : ((1u << n) - 1u);
            const std::uint32_t rest = univ & ~f.b.bits();
            Int total = 0;
            for (std::uint32_t d = rest; d != 0; d = (d - 1) & rest) {
                const subset_mask a(f.b.bits() | d);
                total += t.at(a.bits(), std::popcount(d));
            }
            return total;
        }
        default:
            return t.total();
    }
}

namespace detail {

inline const Int max_enumeration(2'000'000);

struct enum_walker {
    int n;
    family_spec spec;
    int target_length;
    std::uint32_t univ;
    std::vector<block_string>* out;

    // phase 0: single-phase families and the w prefix; phase 1: the w suffix.
    family_tag phase_tag(int phase) const {
        if (spec.tag == family_tag::w) return phase == 0 ? family_tag::y1 : family_tag::y_hat1;
        if (spec.tag == family_tag::u || spec.tag == family_tag::z) return family_tag::y1;
        return spec.tag;
    }

    void walk(block_string& cur, subset_mask head, int emitted, int phase) {
        if (cur.length() == target_length) {
            if (accept(head, emitted, phase)) out->push_back(cur);
            return;
        }
        const bool empty = cur.blocks.empty();
        subset_mask cont{};
        bool have_cont = false;
        if (!empty && emitted < head.size() && emission_allowed(phase_tag(phase), head, emitted + 1)) {
            cont = chain_next(head, emitted);
            have_cont = true;
        }
        for (std::uint32_t m = 1; univ != 0 && m <= univ; ++m) {
            const subset_mask c(m);
            if (have_cont && c == cont) {
                cur.blocks.push_back(c);
                walk(cur, head, emitted + 1, phase);
                cur.blocks.pop_back();
                continue;
            }
            if (!empty && !junction_allowed(head, emitted, c)) continue;
            int next_phase = phase;
            if (spec.tag == family_tag::w) {
                if (c.contains(1)) {
                    if (phase == 1) continue;  // no blocks containing 1 after the crossing
                } else {
                    if (empty) continue;  // the prefix must be nonempty
                    next_phase = 1;
                }
            }
            const family_tag tag = phase_tag(next_phase);
            if (!head_allowed(tag, c) || !emission_allowed(tag, c, 1)) continue;
            cur.blocks.push_back(c);
            walk(cur, c, 1, next_phase);
            cur.blocks.pop_back();
        }
    }

    bool accept(subset_mask head, int emitted, int phase) const {
        switch (spec.tag) {
            case family_tag::u:
                return head == spec.a && emitted == spec.j;
            case family_tag::z:
                return spec.b.subset_of(head) && head.size() - emitted == spec.b.size();
            case family_tag::w:
                return phase == 1;
            default:
                return true;
        }
    }
};

}  // namespace detail

// All length-l members in lexicographic order (blocks compared as mask
// integers).  Guarded by a result-count cap; use count_family to probe sizes.
inline std::vector<block_string> enumerate_family(int n, const family_spec& f, int length) {
    const Int total = count_family(n, f, length);
    if (total > detail::max_enumeration)
        throw resource_limit_error("enumerate_family: " + total.str() + " results exceed cap " +
                                   detail::max_enumeration.str());

    std::vector<block_string> out;
    if (length == 0) {
        if (total == 1) out.push_back(block_string{n, {}});
        return out;
    }
    out.reserve(total.convert_to<std::size_t>());
    detail::enum_walker walker{n, f, length, n == 0 ? 0u : ((1u << n) - 1u), &out};
    block_string cur{n, {}};
    walker.walk(cur, subset_mask{}, 0, 0);
    return out;
}

}  // namespace qnalg
