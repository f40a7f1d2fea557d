#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "numeric.hpp"

namespace qnalg {

/// Power series with exact rational coefficients, truncated at degree T.
/// Binary operations truncate to the shorter operand.
class truncated_series {
public:
    explicit truncated_series(int trunc, const Rational& constant = Rational(0))
        : c_(check_trunc(trunc) + 1, Rational(0)) {
        c_[0] = constant;
    }

    static truncated_series from_coeffs(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("truncated_series: empty coefficient list");
        truncated_series s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    static truncated_series monomial(int trunc, int power, const Rational& coeff = Rational(1)) {
        truncated_series s(trunc);
        if (power < 0) throw std::invalid_argument("truncated_series: negative power");
        if (power <= trunc) s.c_[power] = coeff;
        return s;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& operator[](int i) const {
        if (i < 0 || i > trunc()) throw std::out_of_range("truncated_series: coefficient index");
        return c_[i];
    }

    void set(int i, const Rational& v) {
        if (i < 0 || i > trunc()) throw std::out_of_range("truncated_series: coefficient index");
        c_[i] = v;
    }

    truncated_series truncated(int t) const {
        truncated_series out(t);
        for (int i = 0; i <= t && i <= trunc(); ++i) out.c_[i] = c_[i];
        return out;
    }

    friend truncated_series operator+(const truncated_series& x, const truncated_series& y) {
        truncated_series out(std::min(x.trunc(), y.trunc()));
        for (int i = 0; i <= out.trunc(); ++i) out.c_[i] = x.c_[i] + y.c_[i];
        return out;
    }

    friend truncated_series operator-(const truncated_series& x, const truncated_series& y) {
        truncated_series out(std::min(x.trunc(), y.trunc()));
        for (int i = 0; i <= out.trunc(); ++i) out.c_[i] = x.c_[i] - y.c_[i];
        return out;
    }

    friend truncated_series operator*(const truncated_series& x, const truncated_series& y) {
        truncated_series out(std::min(x.trunc(), y.trunc()));
        for (int i = 0; i <= out.trunc(); ++i) {
            Rational acc = 0;
            for (int j = 0; j <= i; ++j) acc += x.c_[j] * y.c_[i - j];
            out.c_[i] = acc;
        }
        return out;
    }

    friend truncated_series operator*(const Rational& s, const truncated_series& x) {
        truncated_series out = x;
        for (auto& c : out.c_) c *= s;
        return out;
    }

    friend truncated_series operator-(const truncated_series& x) { return Rational(-1) * x; }

    /// Multiplicative inverse; requires a unit constant term.
    truncated_series invert() const {
        if (c_[0].is_zero()) throw std::invalid_argument("truncated_series: cannot invert, constant term is 0");
        truncated_series out(trunc());
        out.c_[0] = Rational(1) / c_[0];
        for (int i = 1; i <= trunc(); ++i) {
            Rational acc = 0;
            for (int j = 1; j <= i; ++j) acc += c_[j] * out.c_[i - j];
            out.c_[i] = -acc / c_[0];
        }
        return out;
    }

    /// t -> -t.
    truncated_series substitute_neg_t() const {
        truncated_series out = *this;
        for (int i = 1; i <= trunc(); i += 2) out.c_[i] = -out.c_[i];
        return out;
    }

    truncated_series pow(int e) const {
        if (e < 0) throw std::invalid_argument("truncated_series: negative exponent");
        truncated_series acc(trunc(), Rational(1));
        truncated_series base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const truncated_series& x, const truncated_series& y) {
        return x.c_ == y.c_;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (int i = 1; i <= trunc(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i <= trunc(); ++i) {
            if (i) out += ' ';
            out += to_string(c_[i]);
        }
        return out;
    }

private:
    static int check_trunc(int t) {
        if (t < 0) throw std::invalid_argument("truncated_series: negative truncation");
        return t;
    }

    std::vector<Rational> c_;
};

/// (1-t) / (1 - t(2-t)^n): the graded dimension series of the primal algebra.
inline truncated_series theorem1_series(int n, int trunc) {
    if (n < 0) throw std::invalid_argument("theorem1_series: n >= 0 required");
    truncated_series one(trunc, 1);
    truncated_series t = truncated_series::monomial(trunc, 1);
    truncated_series two_minus_t = truncated_series(trunc, 2) - t;
    return (one - t) * (one - t * two_minus_t.pow(n)).invert();
}

/// (1 + t(2+t)^n) / (1+t): the dual dimension series, a degree-n polynomial.
inline truncated_series theorem2_series(int n, int trunc) {
    if (n < 0) throw std::invalid_argument("theorem2_series: n >= 0 required");
    truncated_series one(trunc, 1);
    truncated_series t = truncated_series::monomial(trunc, 1);
    truncated_series two_plus_t = truncated_series(trunc, 2) + t;
    return (one + t * two_plus_t.pow(n)) * (one + t).invert();
}

/// Reciprocal recursion 1/H_n = (2-t)/H_{n-1} - 1 started at 1/H_0 = 1.
inline truncated_series cor49_series(int n, int trunc) {
    if (n < 0) throw std::invalid_argument("cor49_series: n >= 0 required");
    truncated_series r(trunc, 1);
    truncated_series one(trunc, 1);
    truncated_series two_minus_t = truncated_series(trunc, 2) - truncated_series::monomial(trunc, 1);
    for (int i = 0; i < n; ++i) r = two_minus_t * r - one;
    return r.invert();
}

/// Series of a free product: 1/H = 1/H_A + 1/H_B - 1. Both inputs must be
/// series of unital algebras (constant term 1).
inline truncated_series free_product_series(const truncated_series& ha, const truncated_series& hb) {
    if (ha[0] != 1 || hb[0] != 1)
        throw std::invalid_argument("free_product_series: constant terms must be 1");
    const int t = std::min(ha.trunc(), hb.trunc());
    truncated_series one(t, 1);
    return (ha.truncated(t).invert() + hb.truncated(t).invert() - one).invert();
}

/// Series of a tensor algebra on a graded space with H(W,0) = 0: 1/(1 - H(W)).
inline truncated_series tensor_algebra_series(const truncated_series& hw) {
    if (!hw[0].is_zero())
        throw std::invalid_argument("tensor_algebra_series: constant term must be 0");
    truncated_series one(hw.trunc(), 1);
    return (one - hw).invert();
}

/// Exact binomial coefficient by the Pascal recurrence.
inline Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<Int> row(n + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

/// Number of dual basis words of degree i: sum over head sizes u of
/// C(n,u)*C(u-1,i-1), with the convention 1 at i = 0.
inline Int dual_dim_count(int n, int i) {
    if (n < 0 || i < 0) throw std::invalid_argument("dual_dim_count: nonnegative arguments required");
    if (i == 0) return 1;
    if (i > n) return 0;
    Int total = 0;
    for (int u = i; u <= n; ++u) total += binomial(n, u) * binomial(u - 1, i - 1);
    return total;
}

/// Length generating series of a string family, coefficients by exact count.
inline truncated_series family_series(int n, const family_spec& f, int trunc) {
    truncated_series out(trunc);
    for (int l = 0; l <= trunc; ++l) out.set(l, Rational(count_family(n, f, l)));
    return out;
}

}  // namespace qnalg
