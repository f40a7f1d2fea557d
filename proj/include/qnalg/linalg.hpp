#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace qnalg {

// Exact coefficient policy, the default everywhere.
struct rational_field {
    using value_type = Rational;
    static constexpr bool exact = true;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational neg(const Rational& a) { return -a; }
    static Rational inv(const Rational& a) {
        if (a.is_zero()) throw std::domain_error("rational_field: division by zero");
        return Rational(1) / a;
    }
    static Rational from_rational(const Rational& r) { return r; }
    static std::string describe() { return "rational"; }
};

// Arithmetic mod a prime below 2^31 (so products fit in 64 bits). Rank over
// GF(p) can only drop relative to the rational rank, which makes this a fast
// probabilistic accelerator, never a substitute for the exact path.
class prime_field {
public:
    using value_type = std::uint64_t;
    static constexpr bool exact = false;

    static constexpr std::uint64_t default_modulus = 2147483647ull;  // 2^31 - 1

    explicit prime_field(std::uint64_t p = default_modulus) : p_(p) {
        if (p < 2 || p >= (1ull << 31))
            throw std::invalid_argument("prime_field: modulus must lie in [2, 2^31)");
    }

    std::uint64_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type a, value_type b) const { return (a + b) % p_; }
    value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
    value_type mul(value_type a, value_type b) const { return a * b % p_; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }

    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("prime_field: division by zero");
        return pow(a, p_ - 2);
    }

    value_type from_rational(const Rational& r) const {
        const value_type num = mod_int(numerator(r));
        const value_type den = mod_int(denominator(r));
        if (den == 0) throw std::domain_error("prime_field: denominator divisible by modulus");
        return mul(num, inv(den));
    }

    std::string describe() const { return "gfp:" + std::to_string(p_); }

private:
    value_type pow(value_type base, std::uint64_t e) const {
        value_type acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    value_type mod_int(const Int& v) const {
        Int m = v % Int(p_);
        if (m < 0) m += Int(p_);
        return m.convert_to<value_type>();
    }

    std::uint64_t p_;
};

/// Incremental sparse Gaussian elimination. Rows are sorted (column, value)
/// vectors; pivots are chosen leftmost and normalized to lead coefficient 1.
/// The pivot column set, and hence the rank, does not depend on insertion
/// order, so ranks and normal forms are deterministic.
template <class Field>
class eliminator {
public:
    using value = typename Field::value_type;
    using entry = std::pair<std::uint32_t, value>;
    using row = std::vector<entry>;

    explicit eliminator(Field f = Field()) : field_(std::move(f)) {}

    const Field& field() const { return field_; }
    std::size_t rank() const { return pivots_.size(); }
    bool is_pivot(std::uint32_t col) const { return pivots_.count(col) != 0; }

    const std::map<std::uint32_t, row>& pivot_rows() const { return pivots_; }

    /// Returns true if the row was independent of the current span.
    bool insert(row r) {
        auto work = to_map(std::move(r));
        while (!work.empty()) {
            auto lead = work.begin();
            if (field_.is_zero(lead->second)) {
                work.erase(lead);
                continue;
            }
            auto p = pivots_.find(lead->first);
            if (p == pivots_.end()) {
                const value scale = field_.inv(lead->second);
                row stored;
                stored.reserve(work.size());
                for (auto& [c, v] : work) {
                    value sv = field_.mul(v, scale);
                    if (!field_.is_zero(sv)) stored.emplace_back(c, std::move(sv));
                }
                pivots_.emplace(lead->first, std::move(stored));
                return true;
            }
            eliminate(work, lead, p->second);
        }
        return false;
    }

    /// Canonical normal form modulo the row space: every pivot column is
    /// eliminated, so the result is supported on free columns only. Since the
    /// row space meets the free-column coordinate subspace trivially, the
    /// result is unique whatever internal form the pivot rows are in.
    row reduce(row r) const {
        auto work = to_map(std::move(r));
        auto it = work.begin();
        while (it != work.end()) {
            if (field_.is_zero(it->second)) {
                it = work.erase(it);
                continue;
            }
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const std::uint32_t col = it->first;
            eliminate(work, it, p->second);
            // Elimination only touches columns right of `col`.
            it = work.upper_bound(col);
        }
        return from_map(work);
    }

    /// Rewrites the stored rows into reduced row echelon form.
    void back_substitute() {
        if (rref_) return;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            row& r = it->second;
            if (r.size() <= 1) continue;
            // Tail columns exceed this pivot, so the rows they hit are final.
            row tail = reduce(row(r.begin() + 1, r.end()));
            r.resize(1);
            r.insert(r.end(), tail.begin(), tail.end());
        }
        rref_ = true;
    }

    /// Basis of { x : M x = 0 } where M's rows are everything inserted so far,
    /// over columns 0..cols-1. One vector per free column, in column order.
    std::vector<row> nullspace(std::uint32_t cols) {
        back_substitute();
        std::vector<row> basis;
        for (std::uint32_t f = 0; f < cols; ++f) {
            if (pivots_.count(f)) continue;
            std::map<std::uint32_t, value> vec;
            vec.emplace(f, field_.one());
            for (const auto& [c, r] : pivots_) {
                auto it = std::lower_bound(r.begin(), r.end(), f,
                                           [](const entry& e, std::uint32_t col) { return e.first < col; });
                if (it != r.end() && it->first == f) vec.emplace(c, field_.neg(it->second));
            }
            basis.push_back(from_map(vec));
        }
        return basis;
    }

private:
    std::map<std::uint32_t, value> to_map(row r) const {
        std::map<std::uint32_t, value> work;
        for (auto& [c, v] : r) {
            auto [it, inserted] = work.try_emplace(c, v);
            if (!inserted) it->second = field_.add(it->second, v);
        }
        return work;
    }

    static row from_map(const std::map<std::uint32_t, value>& work) {
        row out;
        out.reserve(work.size());
        for (const auto& [c, v] : work) out.emplace_back(c, v);
        return out;
    }

    // Removes the entry at `lead` by subtracting factor * pivot row. The pivot
    // row's lead is 1 at lead->first; its tail strictly to the right.
    void eliminate(std::map<std::uint32_t, value>& work,
                   typename std::map<std::uint32_t, value>::iterator lead, const row& pivot) const {
        const value factor = lead->second;
        work.erase(lead);
        for (std::size_t i = 1; i < pivot.size(); ++i) {
            const auto& [c, v] = pivot[i];
            auto [it, inserted] = work.try_emplace(c, field_.zero());
            it->second = field_.sub(it->second, field_.mul(factor, v));
            if (field_.is_zero(it->second)) work.erase(it);
        }
    }

    Field field_;
    std::map<std::uint32_t, row> pivots_;
    bool rref_ = false;
};

}  // namespace qnalg
