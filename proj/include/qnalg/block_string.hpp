#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "subset.hpp"

namespace qnalg {

// A string of nonempty subsets (B_1,...,B_l).  The grading of the algebras
// counts blocks, so length(s) is the degree of the corresponding monomial;
// weight(s) sums cardinalities and indexes the filtration.
struct block_string {
    int n = 0;
    std::vector<subset_mask> blocks;

    int length() const { return static_cast<int>(blocks.size()); }

    int weight() const {
        int w = 0;
        for (auto b : blocks) w += b.size();
        return w;
    }

    void validate() const {
        if (n < 0 || n > max_ambient) throw std::invalid_argument("block_string: ambient size out of range");
        for (auto b : blocks) {
            if (b.empty()) throw std::invalid_argument("block_string: empty block");
            if (!b.fits(n)) throw std::invalid_argument("block_string: block exceeds ambient set");
        }
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += ",";
            s += blocks[i].str();
        }
        return s + ")";
    }

    auto operator<=>(const block_string&) const = default;
};

// The chain (A:j) = (A, A\a1, A\a1\a2, ...): j blocks, each obtained from the
// previous one by removing its largest element.  Requires 1 <= j <= |A|.
inline block_string chain_expand(int n, subset_mask a, int j) {
    if (a.empty() || !a.fits(n)) throw std::invalid_argument("chain_expand: head must be a nonempty subset of the ambient set");
    if (j < 1 || j > a.size()) throw std::invalid_argument("chain_expand: chain length must be between 1 and |A|");
    block_string out{n, {}};
    out.blocks.reserve(static_cast<std::size_t>(j));
    subset_mask cur = a;
    out.blocks.push_back(cur);
    for (int m = 1; m < j; ++m) {
        cur = cur.without(cur.max_element());
        out.blocks.push_back(cur);
    }
    return out;
}

// Positions where a fresh maximal chain starts, 1-based, with a final
// sentinel l+1.  A block at position p continues the chain headed at position
// h while it sits inside the head block and its cardinality is |B_h| + h - p.
inline std::vector<int> skeleton(const block_string& s) {
    s.validate();
    const int l = s.length();
    std::vector<int> idx{1};
    for (int p = 2; p <= l; ++p) {
        const int h = idx.back();
        const subset_mask head = s.blocks[static_cast<std::size_t>(h - 1)];
        const subset_mask cur = s.blocks[static_cast<std::size_t>(p - 1)];
        const bool continues = cur.subset_of(head) && cur.size() == head.size() + h - p;
        if (!continues) idx.push_back(p);
    }
    if (idx.back() != l + 1) idx.push_back(l + 1);  // empty string: (1) alone
    return idx;
}

struct chain_segment {
    subset_mask head;
    int length = 0;

    auto operator<=>(const chain_segment&) const = default;
};

// The maximal chain decomposition read off the skeleton: heads and lengths.
inline std::vector<chain_segment> chain_segments(const block_string& s) {
    const auto idx = skeleton(s);
    std::vector<chain_segment> segs;
    segs.reserve(idx.size() - 1);
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        segs.push_back({s.blocks[static_cast<std::size_t>(idx[k] - 1)], idx[k + 1] - idx[k]});
    return segs;
}

// Canonical form: every maximal chain segment is replaced by the chain
// generated by its head.  Length and weight are preserved; fixed points are
// exactly the strings whose monomials form the graded basis.
inline block_string vee(const block_string& s) {
    block_string out{s.n, {}};
    out.blocks.reserve(s.blocks.size());
    for (const auto& seg : chain_segments(s)) {
        if (seg.length == 0) continue;
        const block_string chain = chain_expand(s.n, seg.head, seg.length);
        out.blocks.insert(out.blocks.end(), chain.blocks.begin(), chain.blocks.end());
    }
    return out;
}

}  // namespace qnalg
