#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "subset.hpp"

namespace qnalg {

// The tensor algebra and its dual carry the same index sets; the side keeps
// v(A) and v*(A) from being mixed accidentally.
enum class side { primal, dual };

inline std::string to_string(side s) { return s == side::primal ? "primal" : "dual"; }

/// A monomial: an ordered product of generators, one subset per factor.
struct word {
    side sd = side::primal;
    std::vector<subset_mask> letters;

    int degree() const { return static_cast<int>(letters.size()); }

    int weight() const {
        int w = 0;
        for (auto l : letters) w += l.size();
        return w;
    }

    void validate() const {
        for (auto l : letters)
            if (l.empty()) throw std::invalid_argument("word: empty-set letter");
    }

    std::string str() const {
        if (letters.empty()) return "1";
        std::string out;
        const char* name = sd == side::primal ? "v" : "v*";
        for (auto l : letters) out += std::string(name) + l.str();
        return out;
    }

    // Degree-major order; within a degree, lexicographic on letter masks.
    friend std::strong_ordering operator<=>(const word& x, const word& y) {
        if (auto c = x.sd <=> y.sd; c != 0) return c;
        if (auto c = x.letters.size() <=> y.letters.size(); c != 0) return c;
        for (std::size_t i = 0; i < x.letters.size(); ++i)
            if (auto c = x.letters[i] <=> y.letters[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const word& x, const word& y) { return (x <=> y) == 0; }
};

/// A finite rational linear combination of words on one side of the pairing.
class free_element {
public:
    explicit free_element(side sd = side::primal) : sd_(sd) {}

    static free_element zero(side sd) { return free_element(sd); }

    static free_element unit(side sd) {
        free_element e(sd);
        e.terms_[word{sd, {}}] = 1;
        return e;
    }

    static free_element generator(side sd, subset_mask a) {
        if (a.empty()) throw std::invalid_argument("generator: empty subset");
        free_element e(sd);
        e.terms_[word{sd, {a}}] = 1;
        return e;
    }

    static free_element from_word(word w, Rational c = Rational(1)) {
        w.validate();
        free_element e(w.sd);
        if (c != 0) e.terms_[std::move(w)] = std::move(c);
        return e;
    }

    side element_side() const { return sd_; }
    const std::map<word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const word& w, const Rational& c) {
        if (w.sd != sd_) throw std::invalid_argument("free_element: word side mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Engaged iff nonzero and supported in a single degree.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        const int d = terms_.begin()->first.degree();
        if (terms_.rbegin()->first.degree() != d) return std::nullopt;
        return d;
    }

    free_element component(int degree) const {
        free_element out(sd_);
        for (const auto& [w, c] : terms_)
            if (w.degree() == degree) out.terms_.emplace(w, c);
        return out;
    }

    free_element& operator+=(const free_element& o) {
        require_side(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    free_element& operator-=(const free_element& o) {
        require_side(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    free_element& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [w, coef] : terms_) coef *= c;
        }
        return *this;
    }

    friend free_element operator+(free_element a, const free_element& b) { return a += b; }
    friend free_element operator-(free_element a, const free_element& b) { return a -= b; }
    friend free_element operator*(free_element a, const Rational& c) { return a *= c; }
    friend free_element operator*(const Rational& c, free_element a) { return a *= c; }
    friend free_element operator-(free_element a) { return a *= Rational(-1); }

    // Concatenation product of the tensor algebra.
    friend free_element operator*(const free_element& a, const free_element& b) {
        if (a.sd_ != b.sd_) throw std::invalid_argument("free_element: cannot multiply across the pairing");
        free_element out(a.sd_);
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                word w{a.sd_, wa.letters};
                w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
                out.add_term(w, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const free_element& a, const free_element& b) {
        return a.sd_ == b.sd_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) out += " + ";
            if (c != 1) out += c.str() + "*";
            out += w.str();
            first = false;
        }
        return out;
    }

private:
    void require_side(const free_element& o) const {
        if (o.sd_ != sd_) throw std::invalid_argument("free_element: side mismatch");
    }

    side sd_;
    std::map<word, Rational> terms_;
};

inline free_element v(subset_mask a) { return free_element::generator(side::primal, a); }
inline free_element vstar(subset_mask a) { return free_element::generator(side::dual, a); }

/// Bilinear pairing with <w, w*> = 1 exactly when the letter sequences agree;
/// words of different degrees pair to zero.
inline Rational pairing(const free_element& p, const free_element& q) {
    if (p.element_side() != side::primal || q.element_side() != side::dual)
        throw std::invalid_argument("pairing: expects (primal, dual)");
    Rational total = 0;
    for (const auto& [w, c] : p.terms()) {
        const Rational qc = q.coefficient(word{side::dual, w.letters});
        if (qc != 0) total += c * qc;
    }
    return total;
}

}  // namespace qnalg
