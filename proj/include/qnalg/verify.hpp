#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "free_algebra.hpp"
#include "jobs.hpp"
#include "presentations.hpp"
#include "quadratic.hpp"
#include "report.hpp"
#include "series.hpp"

namespace qnalg {

struct verify_options {
    int n = 2;
    int max_degree = 4;
    int trunc = 20;
    std::uint64_t prime = 0;  // 0: exact rationals; otherwise GF(prime) accelerator
    unsigned jobs = 1;
    unsigned seed = 0;
};

namespace detail {

inline std::string field_name(const verify_options& o) {
    return o.prime ? "gfp:" + std::to_string(o.prime) : "rational";
}

inline std::string prob_tag(const verify_options& o) {
    return o.prime ? " [mod p, probabilistic]" : "";
}

inline Int engine_dim(const quadratic_presentation& p, int degree, const verify_options& o) {
    return o.prime ? p.dim_component_mod(degree, o.prime) : p.dim_component(degree);
}

inline std::map<std::string, std::string> base_params(const verify_options& o) {
    return {{"n", std::to_string(o.n)},
            {"max_degree", std::to_string(o.max_degree)},
            {"field", field_name(o)}};
}

template <class Body>
check_report timed_check(std::string name, std::map<std::string, std::string> params, Body&& body) {
    check_report r;
    r.check = std::move(name);
    r.params = std::move(params);
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string count_str(std::size_t violations, const char* what) {
    return std::to_string(violations) + " " + what;
}

// All (A, B) with B inside A and |B| >= 3, in ascending mask order.
inline std::vector<std::pair<subset_mask, subset_mask>> deep_pairs(int n) {
    std::vector<std::pair<subset_mask, subset_mask>> out;
    for (subset_mask a : nonempty_subsets(n))
        for (subset_mask b : nonempty_subsets(n))
            if (b.size() >= 3 && b.subset_of(a)) out.emplace_back(a, b);
    return out;
}

}  // namespace detail

/// Three-oracle agreement for the primal algebra: string counts, engine
/// dimensions and the closed form, degree by degree.
inline check_report check_theorem1(const verify_options& o) {
    return detail::timed_check("theorem1", detail::base_params(o), [&](check_report& r) {
        const auto series = theorem1_series(o.n, o.max_degree);
        const auto qn = make_qn(o.n);
        for (int i = 0; i <= o.max_degree; ++i) {
            const std::string closed = to_string(series[i]);
            r.add("degree " + std::to_string(i) + ": canonical string count matches closed form",
                  closed, to_string(count_family(o.n, family_spec::y(), i)));
            r.add("degree " + std::to_string(i) + ": engine dimension matches closed form" +
                      detail::prob_tag(o),
                  closed, to_string(detail::engine_dim(qn, i, o)));
        }
    });
}

/// Three-oracle agreement for the dual algebra, including vanishing beyond
/// degree n when max_degree reaches past it.
inline check_report check_theorem2(const verify_options& o) {
    return detail::timed_check("theorem2", detail::base_params(o), [&](check_report& r) {
        const auto series = theorem2_series(o.n, o.max_degree);
        const auto dual = make_qn_dual(o.n);
        for (int i = 0; i <= o.max_degree; ++i) {
            const std::string closed = to_string(series[i]);
            r.add("degree " + std::to_string(i) + ": dual word count matches closed form", closed,
                  to_string(dual_dim_count(o.n, i)));
            r.add("degree " + std::to_string(i) + ": dual engine dimension matches closed form" +
                      detail::prob_tag(o),
                  closed, to_string(detail::engine_dim(dual, i, o)));
        }
    });
}

/// The four explicit dual relation sets span exactly the annihilator of the
/// primal relation space: equal dimension plus containment in both directions.
inline check_report check_dual_presentation(const verify_options& o) {
    return detail::timed_check("dual-presentation", detail::base_params(o), [&](check_report& r) {
        if (o.n == 0) {
            r.add("n=0: no generators, dual presentation is vacuous", "vacuous", "vacuous");
            return;
        }
        const auto qn = make_qn(o.n);
        const auto sets = dual_relation_sets(o.n);
        const auto s_all = sets.all();
        quadratic_presentation s_span(o.n, side::dual, nonempty_subsets(o.n), s_all, "s_span");

        const Int expected_rank = qn.free_dim(2) - Int(qn.relation_rank());
        r.add("span of the dual sets has the complementary dimension", to_string(expected_rank),
              std::to_string(s_span.relation_rank()));
        r.add("dual set elements are jointly independent", std::to_string(s_all.size()),
              std::to_string(s_span.relation_rank()));

        std::size_t violations = 0;
        for (const auto& s : s_all)
            for (const auto& q : qn.relations())
                if (pairing(q, s) != 0) ++violations;
        r.add("every dual set element annihilates every primal relation",
              detail::count_str(0, "violations"), detail::count_str(violations, "violations"));

        const auto dual = qn.koszul_dual("qn_dual");
        violations = 0;
        for (const auto& u : dual.relations())
            if (!s_span.in_ideal(u)) ++violations;
        r.add("every annihilator basis element lies in the span of the dual sets",
              detail::count_str(0, "violations"), detail::count_str(violations, "violations"));
    });
}

/// Normal forms in the graded presentation are invariant under the canonical
/// string rewriting: a word and its rewritten image get equal coordinates.
inline check_report check_normal_form(const verify_options& o) {
    return detail::timed_check("normal-form", detail::base_params(o), [&](check_report& r) {
        const auto xn = make_xn(o.n);
        constexpr std::uint64_t sample_cap = 20000;
        for (int i = 0; i <= o.max_degree; ++i) {
            const Int total = xn.free_dim(i);
            std::vector<std::uint64_t> indices;
            std::string scope;
            if (total > Int(sample_cap)) {
                const std::uint64_t span =
                    total > Int(UINT64_MAX) ? UINT64_MAX : total.convert_to<std::uint64_t>();
                std::mt19937_64 rng(o.seed * 1000003ull + static_cast<std::uint64_t>(i));
                std::uniform_int_distribution<std::uint64_t> pick(0, span - 1);
                indices.reserve(sample_cap);
                for (std::uint64_t k = 0; k < sample_cap; ++k) indices.push_back(pick(rng));
                scope = "sampled " + std::to_string(sample_cap) + " of " + to_string(total) + " words";
            } else {
                const std::uint64_t span = total.convert_to<std::uint64_t>();
                indices.reserve(span);
                for (std::uint64_t k = 0; k < span; ++k) indices.push_back(k);
                scope = "all " + to_string(total) + " words";
            }
            std::size_t mismatches = 0;
            for (std::uint64_t idx : indices) {
                const word w = xn.index_word(idx, i);
                const block_string s{o.n, w.letters};
                const block_string sv = vee(s);
                if (sv.blocks == s.blocks) continue;
                const auto lhs = xn.quotient_coordinates(free_element::from_word(w));
                const auto rhs =
                    xn.quotient_coordinates(free_element::from_word(word{side::primal, sv.blocks}));
                if (!(lhs == rhs)) ++mismatches;
            }
            r.add("degree " + std::to_string(i) + ": rewriting fixes normal forms (" + scope + ")",
                  detail::count_str(0, "mismatches"), detail::count_str(mismatches, "mismatches"));
        }
    });
}

/// The chain-family counting identities: the two rank-lowering bijections, the
/// reciprocal relation between the two one-marked series, the per-state and
/// per-tail family series, the two-phase family series, the free-product
/// factorization and the reciprocal recursion.
inline check_report check_section4(const verify_options& o) {
    auto params = detail::base_params(o);
    params["trunc"] = std::to_string(o.trunc);
    return detail::timed_check("section4", std::move(params), [&](check_report& r) {
        if (o.n == 0) {
            r.add("n=0: all marked families are empty, identities vacuous", "vacuous", "vacuous");
            return;
        }
        const int L = o.max_degree;
        const auto b = family_series(o.n, family_spec::y1(), L);
        const auto a = family_series(o.n, family_spec::y_hat1(), L);
        const auto y_prev = family_series(o.n - 1, family_spec::y(), L);

        r.add("families avoiding the marked element count one rank down", y_prev.str(), a.str());
        r.add("families with the marked element in larger blocks count one rank down", y_prev.str(),
              family_series(o.n, family_spec::y1_dagger(), L).str());

        const auto t = truncated_series::monomial(L, 1);
        r.add("reciprocal identity between the marked series", (a.invert() - t).str(),
              b.invert().str());

        const auto one = truncated_series(L, 1);
        const auto one_minus_t = one - t;
        std::size_t bad = 0;
        for (subset_mask A : nonempty_subsets(o.n)) {
            if (!A.contains(1)) continue;
            for (int j = 1; j <= A.size(); ++j) {
                const auto lhs = family_series(o.n, family_spec::u(A, j), L);
                const auto rhs =
                    truncated_series::monomial(L, j) * one_minus_t.pow(o.n - A.size()) * b;
                if (!(lhs == rhs)) ++bad;
            }
        }
        r.add("final-state series factor through the marked series for every state",
              detail::count_str(0, "mismatches"), detail::count_str(bad, "mismatches"));

        bad = 0;
        const subset_mask pool = subset_mask::full(o.n).without(1);
        for (std::uint32_t sub = pool.bits();; sub = (sub - 1) & pool.bits()) {
            const auto lhs = family_series(o.n, family_spec::z(subset_mask(sub)), L);
            if (!(lhs == t * b)) ++bad;
            if (sub == 0) break;
        }
        r.add("final-tail series all equal t times the marked series",
              detail::count_str(0, "mismatches"), detail::count_str(bad, "mismatches"));

        const auto w_series = family_series(o.n, family_spec::w(), L);
        const auto w_expected = (a - one) * (b - one) - t * b * (a - one);
        r.add("two-phase family series matches its product formula", w_expected.str(),
              w_series.str());

        const auto factored = a * tensor_algebra_series(w_series) * b;
        r.add("triple factorization reproduces the closed form", theorem1_series(o.n, L).str(),
              factored.str());

        r.add("reciprocal recursion reproduces the closed form", theorem1_series(o.n, o.trunc).str(),
              cor49_series(o.n, o.trunc).str());
    });
}

/// The alternating chain element annihilates every positioned dual relation
/// subspace, matches its cyclic-sum expression at depth 3, and lies in the
/// relation ideal.
inline check_report check_lemma62(const verify_options& o) {
    return detail::timed_check("lemma62", detail::base_params(o), [&](check_report& r) {
        const auto pairs = detail::deep_pairs(o.n);
        if (pairs.empty()) {
            r.add("no index pairs of depth 3 or more at this n", "vacuous", "vacuous");
            return;
        }
        const auto qn = make_qn(o.n);
        const auto dual = make_qn_dual(o.n);
        const std::uint64_t d = dual.generator_count();
        for (const auto& [A, B] : pairs) {
            const int k = B.size();
            const free_element E = alternating_chain(o.n, A, B);
            const std::string label = "E(" + A.str() + ":" + B.str() + ")";

            std::size_t violations = 0;
            for (int m = 0; m + 3 <= k; ++m) {
                std::uint64_t left = 1, right = 1;
                for (int i = 0; i < m; ++i) left *= d;
                for (int i = 0; i < k - 3 - m; ++i) right *= d;
                for (std::uint64_t i1 = 0; i1 < left; ++i1)
                    for (const auto& u : dual.relations())
                        for (std::uint64_t i2 = 0; i2 < right; ++i2) {
                            const free_element probe =
                                free_element::from_word(dual.index_word(i1, m)) * u *
                                free_element::from_word(dual.index_word(i2, k - 3 - m));
                            if (pairing(E, probe) != 0) ++violations;
                        }
            }
            r.add(label + " annihilates every positioned dual relation",
                  detail::count_str(0, "violations"), detail::count_str(violations, "violations"));

            if (k == 3) {
                auto els = B.elements();  // ascending: b3 < b2 < b1
                const int b3 = els[0], b2 = els[1], b1 = els[2];
                const free_element cyc = make_V_ordered(o.n, A, {b1, b2}) +
                                         make_V_ordered(o.n, A, {b2, b3}) +
                                         make_V_ordered(o.n, A, {b3, b1});
                r.add(label + " equals the cyclic sum of ordered-pair relations", "equal",
                      E == cyc ? "equal" : "different");
            }
            r.add(label + " lies in the relation ideal", "true", qn.in_ideal(E) ? "true" : "false");
        }
    });
}

/// The full alternating relation of depth k lies in every positioned copy of
/// the relation space, hence in their intersection.
inline check_report check_lemma63(const verify_options& o) {
    return detail::timed_check("lemma63", detail::base_params(o), [&](check_report& r) {
        const auto pairs = detail::deep_pairs(o.n);
        if (pairs.empty()) {
            r.add("no index pairs of depth 3 or more at this n", "vacuous", "vacuous");
            return;
        }
        const auto qn = make_qn(o.n);
        const std::uint64_t d = qn.generator_count();
        for (const auto& [A, B] : pairs) {
            const int k = B.size();
            const free_element V = make_V(o.n, A, B);
            std::size_t violations = 0;
            for (int m = 0; m + 2 <= k; ++m) {
                std::uint64_t left = 1, right = 1;
                for (int i = 0; i < m; ++i) left *= d;
                for (int i = 0; i < k - 2 - m; ++i) right *= d;
                std::vector<free_element> span_set;
                span_set.reserve(left * right * qn.relations().size());
                for (std::uint64_t i1 = 0; i1 < left; ++i1)
                    for (const auto& rel : qn.relations())
                        for (std::uint64_t i2 = 0; i2 < right; ++i2)
                            span_set.push_back(free_element::from_word(qn.index_word(i1, m)) * rel *
                                               free_element::from_word(qn.index_word(i2, k - 2 - m)));
                if (!in_span(span_set, V)) ++violations;
            }
            r.add("V(" + A.str() + ":" + B.str() + ") lies in every positioned relation space",
                  detail::count_str(0, "violations"), detail::count_str(violations, "violations"));
        }
    });
}

/// The numerical Koszulity condition: the primal series times the dual series
/// at -t is 1, for the closed forms and for computed dimensions.
inline check_report check_koszul(const verify_options& o) {
    auto params = detail::base_params(o);
    params["trunc"] = std::to_string(o.trunc);
    return detail::timed_check("koszul", std::move(params), [&](check_report& r) {
        const auto prod =
            theorem1_series(o.n, o.trunc) * theorem2_series(o.n, o.trunc).substitute_neg_t();
        r.add("closed-form series product at -t is 1", "1",
              prod.is_one() ? "1" : prod.str());

        std::size_t bad = 0;
        for (int m = 0; m <= 10; ++m)
            if (!(theorem1_series(m, 20) * theorem2_series(m, 20).substitute_neg_t()).is_one())
                ++bad;
        r.add("closed-form series product sweep over ranks 0..10 at T=20",
              detail::count_str(0, "failures"), detail::count_str(bad, "failures"));

        if (o.n <= 3) {
            const auto qn = make_qn(o.n);
            const auto dual = make_qn_dual(o.n);
            std::vector<Int> dq, dd;
            for (int i = 0; i <= o.max_degree; ++i) dq.push_back(detail::engine_dim(qn, i, o));
            for (int i = 0; i <= std::min(o.max_degree, o.n); ++i)
                dd.push_back(detail::engine_dim(dual, i, o));
            bad = 0;
            for (int k = 1; k <= o.max_degree; ++k) {
                Int acc = 0;
                for (int j = 0; j < static_cast<int>(dd.size()) && j <= k; ++j) {
                    const Int term = dd[j] * dq[k - j];
                    acc += (j % 2) ? -term : term;
                }
                if (acc != 0) ++bad;
            }
            r.add("computed dimensions satisfy the product identity" + detail::prob_tag(o),
                  detail::count_str(0, "failures"), detail::count_str(bad, "failures"));
        }
    });
}

/// The canonical string families index actual quotient bases: the fixed-point
/// strings for the primal algebras, the descending chain words for the dual.
inline check_report check_basis(const verify_options& o) {
    return detail::timed_check("basis", detail::base_params(o), [&](check_report& r) {
        const auto qn = make_qn(o.n);
        const auto xn = make_xn(o.n);
        const auto dual = make_qn_dual(o.n);
        for (int i = 0; i <= o.max_degree; ++i) {
            const auto strings = enumerate_family(o.n, family_spec::y(), i);
            std::vector<word> ws;
            ws.reserve(strings.size());
            for (const auto& s : strings) ws.push_back(word{side::primal, s.blocks});
            r.add("degree " + std::to_string(i) + ": fixed-point strings are a quotient basis (qn)",
                  "true", qn.words_are_basis(i, ws) ? "true" : "false");
            r.add("degree " + std::to_string(i) + ": fixed-point strings are a quotient basis (xn)",
                  "true", xn.words_are_basis(i, ws) ? "true" : "false");

            std::vector<word> dws;
            if (i == 0) {
                dws.push_back(word{side::dual, {}});
            } else {
                dws = dual_basis_words_of_degree(o.n, i);
            }
            r.add("degree " + std::to_string(i) +
                      ": descending chain words are a quotient basis (qn_dual)",
                  "true", dual.words_are_basis(i, dws) ? "true" : "false");
        }
    });
}

/// The associated-graded dual presentation has the same graded dimensions as
/// the Koszul dual itself.
inline check_report check_cor65(const verify_options& o) {
    return detail::timed_check("cor65", detail::base_params(o), [&](check_report& r) {
        const auto gr = make_gr_dual(o.n);
        const auto kd = make_qn_dual(o.n);
        for (int i = 0; i <= o.max_degree; ++i)
            r.add("degree " + std::to_string(i) +
                      ": graded dual presentation matches the Koszul dual" + detail::prob_tag(o),
                  to_string(detail::engine_dim(kd, i, o)), to_string(detail::engine_dim(gr, i, o)));
    });
}

inline const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "theorem1", "theorem2", "dual-presentation", "normal-form", "section4",
        "lemma62",  "lemma63",  "koszul",            "basis",       "cor65"};
    return names;
}

inline check_report run_check(const std::string& name, const verify_options& o) {
    if (name == "theorem1") return check_theorem1(o);
    if (name == "theorem2") return check_theorem2(o);
    if (name == "dual-presentation") return check_dual_presentation(o);
    if (name == "normal-form") return check_normal_form(o);
    if (name == "section4") return check_section4(o);
    if (name == "lemma62") return check_lemma62(o);
    if (name == "lemma63") return check_lemma63(o);
    if (name == "koszul") return check_koszul(o);
    if (name == "basis") return check_basis(o);
    if (name == "cor65") return check_cor65(o);
    throw std::invalid_argument("unknown check: " + name);
}

inline std::vector<check_report> run_checks(const std::vector<std::string>& names,
                                            const verify_options& o) {
    for (const auto& name : names) {
        if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
            all_check_names().end())
            throw std::invalid_argument("unknown check: " + name);
    }
    std::vector<check_report> out(names.size());
    run_indexed_jobs(o.jobs, names.size(), [&](std::size_t i) { out[i] = run_check(names[i], o); });
    return out;
}

}  // namespace qnalg
