#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "free_algebra.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "presentations.hpp"
#include "subset.hpp"

namespace qnalg {

/// A finitely presented quadratic algebra T(V)/<R>, with exact graded
/// dimensions, canonical normal forms, span membership and Koszul dual.
///
/// Degree-i words are indexed lexicographically (mixed radix over the label
/// list), relations are positioned as w1 * r * w2 over all splits, and a
/// sparse elimination with leftmost pivots fixes a canonical quotient basis:
/// the non-pivot words. Everything is cached per degree behind a lock; copies
/// share the cache, which is sound because presentations are immutable.
class quadratic_presentation {
public:
    static constexpr std::uint64_t word_cap = 1'000'000;

    quadratic_presentation(int n, side sd, std::vector<subset_mask> labels,
                           std::vector<free_element> relations, std::string name)
        : n_(n), side_(sd), labels_(std::move(labels)), relations_(std::move(relations)),
          name_(std::move(name)), state_(std::make_shared<state_t>()) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!labels_[i].fits(n_) || labels_[i].empty())
                throw std::invalid_argument(name_ + ": bad generator label");
            if (!label_index_.emplace(labels_[i], static_cast<std::uint32_t>(i)).second)
                throw std::invalid_argument(name_ + ": duplicate generator label");
        }
        for (const auto& r : relations_) {
            if (r.element_side() != side_) throw std::invalid_argument(name_ + ": relation on wrong side");
            auto deg = r.homogeneous_degree();
            if (!deg || *deg != 2)
                throw std::invalid_argument(name_ + ": relations must be homogeneous of degree 2");
            for (const auto& [w, c] : r.terms())
                for (auto l : w.letters)
                    if (!label_index_.count(l))
                        throw std::invalid_argument(name_ + ": relation uses a foreign label " + l.str());
        }
    }

    int n() const { return n_; }
    side algebra_side() const { return side_; }
    const std::string& name() const { return name_; }
    const std::vector<subset_mask>& labels() const { return labels_; }
    const std::vector<free_element>& relations() const { return relations_; }
    std::size_t generator_count() const { return labels_.size(); }

    /// Number of degree-i words of the free algebra, d^i.
    Int free_dim(int degree) const {
        if (degree < 0) throw std::invalid_argument("free_dim: negative degree");
        Int out = 1;
        for (int i = 0; i < degree; ++i) out *= Int(labels_.size());
        return out;
    }

    int relation_rank() const {
        if (relations_.empty() || labels_.empty()) return 0;
        return static_cast<int>(degree_data(2).rank());
    }

    /// Exact dimension of the degree-i component of the quotient.
    Int dim_component(int degree) const {
        if (degree < 0) throw std::invalid_argument("dim_component: negative degree");
        if (degree == 0) return 1;
        if (labels_.empty()) return 0;
        if (degree == 1) return Int(labels_.size());
        if (relations_.empty()) return free_dim(degree);
        return free_dim(degree) - Int(degree_data(degree).rank());
    }

    /// Dimension computed over GF(p). Fast, but the rank can drop mod p, so
    /// the value is an upper bound on the true dimension; probabilistic only.
    Int dim_component_mod(int degree, std::uint64_t p) const {
        if (degree < 0) throw std::invalid_argument("dim_component_mod: negative degree");
        if (degree == 0) return 1;
        if (labels_.empty()) return 0;
        if (degree == 1) return Int(labels_.size());
        if (relations_.empty()) return free_dim(degree);
        std::unique_lock lock(state_->mu);
        auto key = std::make_pair(degree, p);
        if (auto it = state_->modular.find(key); it != state_->modular.end()) return it->second;
        lock.unlock();
        eliminator<prime_field> elim{prime_field(p)};
        build_rows(degree, elim);
        Int dim = free_dim(degree) - Int(elim.rank());
        lock.lock();
        return state_->modular.emplace(key, dim).first->second;
    }

    /// Canonical normal form: the unique representative of e supported on the
    /// non-pivot (free) words of its degree. Zero iff e lies in the ideal.
    free_element quotient_coordinates(const free_element& e) const {
        if (e.element_side() != side_) throw std::invalid_argument(name_ + ": element on wrong side");
        if (e.is_zero()) return e;
        auto deg = e.homogeneous_degree();
        if (!deg) throw std::invalid_argument(name_ + ": quotient_coordinates needs a homogeneous element");
        for (const auto& [w, c] : e.terms())
            for (auto l : w.letters)
                if (!label_index_.count(l)) throw std::invalid_argument(name_ + ": foreign label " + l.str());
        if (*deg < 2 || relations_.empty() || labels_.empty()) return e;
        const auto& elim = degree_data(*deg);
        auto reduced = elim.reduce(element_row<rational_field>(e, *deg));
        free_element out(side_);
        for (const auto& [col, val] : reduced) out.add_term(index_word(col, *deg), val);
        return out;
    }

    bool in_ideal(const free_element& e) const { return quotient_coordinates(e).is_zero(); }

    /// The canonical basis words of the degree-i component (non-pivot words).
    std::vector<word> free_words(int degree) const {
        if (degree < 0) throw std::invalid_argument("free_words: negative degree");
        std::vector<word> out;
        if (labels_.empty() && degree > 0) return out;
        if (degree == 0) {
            out.push_back(word{side_, {}});
            return out;
        }
        const std::uint64_t total = checked_word_count(degree);
        if (degree == 1 || relations_.empty()) {
            for (std::uint64_t i = 0; i < total; ++i) out.push_back(index_word(static_cast<std::uint32_t>(i), degree));
            return out;
        }
        const auto& elim = degree_data(degree);
        for (std::uint64_t i = 0; i < total; ++i)
            if (!elim.is_pivot(static_cast<std::uint32_t>(i)))
                out.push_back(index_word(static_cast<std::uint32_t>(i), degree));
        return out;
    }

    /// Do the images of these degree-i words span the degree-i component?
    /// Together with |ws| == dim_component(i) this certifies a basis.
    bool words_span(int degree, const std::vector<word>& ws) const {
        if (degree < 0) throw std::invalid_argument("words_span: negative degree");
        if (degree == 0) return !ws.empty();
        eliminator<rational_field> elim;
        if (degree >= 2 && !relations_.empty() && !labels_.empty()) elim = degree_data(degree);
        checked_word_count(degree);
        for (const auto& w : ws) {
            if (w.degree() != degree) throw std::invalid_argument("words_span: degree mismatch");
            elim.insert({{word_index(w), rational_field::one()}});
        }
        return Int(elim.rank()) == free_dim(degree);
    }

    bool words_are_basis(int degree, const std::vector<word>& ws) const {
        return Int(ws.size()) == dim_component(degree) && words_span(degree, ws);
    }

    /// The dual quadratic algebra: same labels on the other side, relations a
    /// basis of the annihilator of R inside the dual degree-2 span.
    quadratic_presentation koszul_dual(std::string dual_name) const {
        const side dual_side = side_ == side::primal ? side::dual : side::primal;
        std::vector<free_element> dual_rels;
        if (!labels_.empty()) {
            eliminator<rational_field> elim;
            if (!relations_.empty()) elim = degree_data(2);
            const std::uint64_t cols = checked_word_count(2);
            for (auto& nsrow : elim.nullspace(static_cast<std::uint32_t>(cols))) {
                free_element rel(dual_side);
                for (const auto& [col, val] : nsrow) {
                    word w = index_word(col, 2);
                    w.sd = dual_side;
                    rel.add_term(w, val);
                }
                dual_rels.push_back(std::move(rel));
            }
        }
        return quadratic_presentation(n_, dual_side, labels_, std::move(dual_rels), std::move(dual_name));
    }

    std::uint32_t word_index(const word& w) const {
        std::uint64_t idx = 0;
        for (auto l : w.letters) {
            auto it = label_index_.find(l);
            if (it == label_index_.end()) throw std::invalid_argument(name_ + ": foreign label " + l.str());
            idx = idx * labels_.size() + it->second;
        }
        return static_cast<std::uint32_t>(idx);
    }

    word index_word(std::uint64_t idx, int degree) const {
        word w{side_, std::vector<subset_mask>(degree)};
        for (int i = degree - 1; i >= 0; --i) {
            w.letters[i] = labels_[idx % labels_.size()];
            idx /= labels_.size();
        }
        return w;
    }

private:
    struct state_t {
        std::mutex mu;
        std::map<int, eliminator<rational_field>> exact;
        std::map<std::pair<int, std::uint64_t>, Int> modular;
    };

    std::uint64_t checked_word_count(int degree) const {
        const Int total = free_dim(degree);
        if (total > Int(word_cap))
            throw resource_limit_error(name_ + ": degree-" + std::to_string(degree) + " word space has " +
                                       to_string(total) + " words, over the cap " + std::to_string(word_cap));
        return total.convert_to<std::uint64_t>();
    }

    template <class Field>
    typename eliminator<Field>::row element_row(const free_element& e, int degree,
                                                const Field& f = Field()) const {
        typename eliminator<Field>::row r;
        r.reserve(e.terms().size());
        for (const auto& [w, c] : e.terms()) {
            if (w.degree() != degree) throw std::invalid_argument("element_row: degree mismatch");
            r.emplace_back(word_index(w), f.from_rational(c));
        }
        return r;
    }

    // Positioned relation rows w1 * r * w2 over every split of degree-2
    // relations into degree `deg`, straight into the eliminator, no dedup.
    template <class Field>
    void build_rows(int deg, eliminator<Field>& elim) const {
        checked_word_count(deg);
        const std::uint64_t d = labels_.size();
        std::vector<typename eliminator<Field>::row> rel_rows;
        rel_rows.reserve(relations_.size());
        for (const auto& r : relations_) rel_rows.push_back(element_row(r, 2, elim.field()));

        for (int m = 0; m + 2 <= deg; ++m) {
            std::uint64_t left = 1, right = 1;
            for (int i = 0; i < m; ++i) left *= d;
            for (int i = 0; i < deg - 2 - m; ++i) right *= d;
            for (std::uint64_t i1 = 0; i1 < left; ++i1) {
                for (const auto& rr : rel_rows) {
                    for (std::uint64_t i2 = 0; i2 < right; ++i2) {
                        typename eliminator<Field>::row positioned;
                        positioned.reserve(rr.size());
                        for (const auto& [col2, val] : rr)
                            positioned.emplace_back(
                                static_cast<std::uint32_t>((i1 * d * d + col2) * right + i2), val);
                        elim.insert(std::move(positioned));
                    }
                }
            }
        }
    }

    const eliminator<rational_field>& degree_data(int deg) const {
        if (deg < 2) throw std::logic_error("degree_data: degree below 2");
        std::unique_lock lock(state_->mu);
        auto it = state_->exact.find(deg);
        if (it != state_->exact.end()) return it->second;
        lock.unlock();
        eliminator<rational_field> elim;
        build_rows(deg, elim);
        lock.lock();
        return state_->exact.emplace(deg, std::move(elim)).first->second;
    }

    int n_;
    side side_;
    std::vector<subset_mask> labels_;
    std::vector<free_element> relations_;
    std::string name_;
    std::map<subset_mask, std::uint32_t> label_index_;
    std::shared_ptr<state_t> state_;
};

/// Exact membership of e in the span of the given homogeneous elements.
inline bool in_span(const std::vector<free_element>& vectors, const free_element& e) {
    if (e.is_zero()) return true;
    auto deg = e.homogeneous_degree();
    if (!deg) throw std::invalid_argument("in_span: inhomogeneous element");
    std::map<word, std::uint32_t> columns;
    auto index_terms = [&](const free_element& x) {
        if (x.is_zero()) return;
        auto xd = x.homogeneous_degree();
        if (!xd || *xd != *deg) throw std::invalid_argument("in_span: mixed degrees");
        for (const auto& [w, c] : x.terms()) columns.emplace(w, 0);
    };
    for (const auto& x : vectors) index_terms(x);
    index_terms(e);
    std::uint32_t next = 0;
    for (auto& [w, idx] : columns) idx = next++;

    eliminator<rational_field> elim;
    auto to_row = [&](const free_element& x) {
        eliminator<rational_field>::row r;
        r.reserve(x.terms().size());
        for (const auto& [w, c] : x.terms()) r.emplace_back(columns.at(w), c);
        return r;
    };
    for (const auto& x : vectors)
        if (!x.is_zero()) elim.insert(to_row(x));
    return elim.reduce(to_row(e)).empty();
}

inline quadratic_presentation make_qn(int n) {
    return quadratic_presentation(n, side::primal, nonempty_subsets(n), relations_Q(n).elements, "qn");
}

inline quadratic_presentation make_xn(int n) {
    return quadratic_presentation(n, side::primal, nonempty_subsets(n), relations_X(n).elements, "xn");
}

inline quadratic_presentation make_qn_dual(int n) { return make_qn(n).koszul_dual("qn_dual"); }

inline quadratic_presentation make_gr_dual(int n) {
    if (n == 0) return quadratic_presentation(0, side::dual, {}, {}, "gr_dual");
    return quadratic_presentation(n, side::dual, nonempty_subsets(n), gr_dual_relation_sets(n).all(), "gr_dual");
}

}  // namespace qnalg
