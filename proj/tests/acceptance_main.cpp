// Acceptance battery: one criterion per line, exact arithmetic throughout.
// Usage: acceptance_tests <path-to-qnverify>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qnalg/qnalg.hpp"

using namespace qnalg;

namespace {

std::string g_tool;

struct outcome {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    template <class A, class B>
    void expect_eq(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == expected)) {
            std::ostringstream os;
            os << what << ": expected " << expected << ", got " << actual;
            problems.push_back(os.str());
        }
    }
};

struct run_result {
    int exit_code = -1;
    std::string out;
};

run_result run_tool(const std::string& args) {
    const std::string cmd = "'" + g_tool + "' " + args + " 2>/dev/null";
    run_result res;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, got);
    const int rc = pclose(p);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

subset_mask S(std::initializer_list<int> xs) { return subset_mask::of(xs); }

void report_check(outcome& oc, const check_report& rep) {
    for (const auto& item : rep.items)
        if (!item.pass)
            oc.problems.push_back(rep.check + ": " + item.desc + ": expected " + item.expected +
                                  ", got " + item.actual);
}

// ---- criteria ----

void c1_primal_three_oracle(outcome& oc) {
    const std::vector<std::vector<long>> anchors = {
        {1},  // n = 0: everything else is 0
        {1, 1, 1, 1, 1, 1, 1},
        {1, 3, 8, 21, 55, 144},
        {1, 7, 44, 274, 1705},
    };
    const int depth[] = {20, 6, 5, 4};
    for (int n = 0; n <= 3; ++n) {
        const int D = depth[n];
        const auto series = theorem1_series(n, D);
        const auto qn = make_qn(n);
        for (int i = 0; i <= D; ++i) {
            const std::string at = "n=" + std::to_string(n) + " degree " + std::to_string(i);
            const Int strings = count_family(n, family_spec::y(), i);
            const Int engine = qn.dim_component(i);
            oc.expect_eq(engine, strings, at + ": engine vs string count");
            oc.expect_eq(Rational(strings), series[i], at + ": string count vs closed form");
            const long anchor =
                i < static_cast<int>(anchors[n].size()) ? anchors[n][static_cast<std::size_t>(i)] : (n == 0 ? 0 : -1);
            if (anchor >= 0) oc.expect_eq(engine, Int(anchor), at + ": engine vs frozen value");
        }
    }
}

void c2_rank_four(outcome& oc) {
    const long strings_row[] = {1, 15, 208, 2872, 39648, 547337};
    const auto series = theorem1_series(4, 5);
    for (int i = 0; i <= 5; ++i) {
        const std::string at = "n=4 degree " + std::to_string(i);
        oc.expect_eq(count_family(4, family_spec::y(), i), Int(strings_row[i]),
                     at + ": string count vs frozen value");
        oc.expect_eq(series[i], Rational(strings_row[i]), at + ": closed form vs frozen value");
    }
    const auto q4 = make_qn(4);
    const long engine_row[] = {1, 15, 208, 2872};
    for (int i = 0; i <= 3; ++i)
        oc.expect_eq(q4.dim_component(i), Int(engine_row[i]),
                     "n=4 degree " + std::to_string(i) + ": engine dimension");
    oc.expect_eq(Int(q4.relation_rank()), Int(17), "n=4 relation rank");
    oc.expect_eq(q4.free_dim(2) - Int(q4.relation_rank()), Int(208),
                 "n=4 degree-2 dimension from the rank");
}

void c3_dual_three_oracle(outcome& oc) {
    const long totals[] = {2, 5, 14, 41};
    for (int n = 1; n <= 4; ++n) {
        const auto dual = make_qn_dual(n);
        const auto series = theorem2_series(n, n + 1);
        Int total = 0;
        for (int i = 0; i <= n; ++i) {
            const std::string at = "n=" + std::to_string(n) + " dual degree " + std::to_string(i);
            const Int words = dual_dim_count(n, i);
            const Int engine = dual.dim_component(i);
            oc.expect_eq(engine, words, at + ": engine vs word count");
            oc.expect_eq(Rational(words), series[i], at + ": word count vs closed form");
            total += engine;
        }
        oc.expect_eq(total, Int(totals[n - 1]),
                     "n=" + std::to_string(n) + ": total dual dimension");
        const std::string above = "n=" + std::to_string(n) + " dual degree " + std::to_string(n + 1);
        oc.expect_eq(dual.dim_component(n + 1), Int(0), above + ": engine dimension vanishes");
        oc.expect_eq(series[n + 1], Rational(0), above + ": closed form vanishes");
        oc.expect_eq(dual_dim_count(n, n + 1), Int(0), above + ": word count vanishes");
    }
}

void c4_dual_presentation(outcome& oc) {
    const long dims[] = {1, 8, 44, 208};
    for (int n = 1; n <= 4; ++n) {
        const std::string at = "n=" + std::to_string(n);
        const auto qn = make_qn(n);
        const auto sets = dual_relation_sets(n);
        const auto s_all = sets.all();
        quadratic_presentation s_span(n, side::dual, nonempty_subsets(n), s_all, "s_span");
        const auto dual = qn.koszul_dual("qn_dual");
        quadratic_presentation kd_span(n, side::dual, nonempty_subsets(n), dual.relations(),
                                       "kd_span");

        oc.expect_eq(Int(s_span.relation_rank()), Int(dims[n - 1]), at + ": dual set span rank");
        oc.expect_eq(qn.free_dim(2) - Int(qn.relation_rank()), Int(dims[n - 1]),
                     at + ": complementary rank");
        oc.expect_eq(Int(s_all.size()), Int(s_span.relation_rank()),
                     at + ": dual set elements are jointly independent");

        std::size_t violations = 0;
        for (const auto& s : s_all)
            for (const auto& q : qn.relations())
                if (pairing(q, s) != 0) ++violations;
        oc.expect_eq(Int(violations), Int(0), at + ": orthogonality violations");

        violations = 0;
        for (const auto& u : dual.relations())
            if (!s_span.in_ideal(u)) ++violations;
        oc.expect_eq(Int(violations), Int(0), at + ": annihilator inside the dual set span");
        violations = 0;
        for (const auto& s : s_all)
            if (!kd_span.in_ideal(s)) ++violations;
        oc.expect_eq(Int(violations), Int(0), at + ": dual sets inside the annihilator");
    }
}

void c5_koszulity(outcome& oc) {
    for (int n = 0; n <= 10; ++n) {
        const auto prod = theorem1_series(n, 20) * theorem2_series(n, 20).substitute_neg_t();
        oc.expect(prod.is_one(), "n=" + std::to_string(n) + ": closed-form product at -t is not 1");
    }
    const int depth[] = {20, 6, 5, 4};
    for (int n = 0; n <= 3; ++n) {
        const int D = depth[n];
        const auto qn = make_qn(n);
        const auto dual = make_qn_dual(n);
        std::vector<Int> dq, dd;
        for (int i = 0; i <= D; ++i) dq.push_back(qn.dim_component(i));
        for (int i = 0; i <= std::min(D, n); ++i) dd.push_back(dual.dim_component(i));
        for (int k = 1; k <= D; ++k) {
            Int acc = 0;
            for (int j = 0; j < static_cast<int>(dd.size()) && j <= k; ++j) {
                const Int term = dd[static_cast<std::size_t>(j)] * dq[static_cast<std::size_t>(k - j)];
                acc += (j % 2) ? -term : term;
            }
            oc.expect_eq(acc, Int(0), "n=" + std::to_string(n) + " degree " + std::to_string(k) +
                                          ": computed alternating convolution");
        }
    }
}

void c6_normal_form(outcome& oc) {
    for (int n = 1; n <= 3; ++n) {
        const auto xn = make_xn(n);
        for (int deg = 0; deg <= 4; ++deg) {
            const std::uint64_t total = xn.free_dim(deg).convert_to<std::uint64_t>();
            std::size_t mismatches = 0;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                const word w = xn.index_word(idx, deg);
                const block_string s{n, w.letters};
                const block_string sv = vee(s);
                if (sv.blocks == s.blocks) continue;
                const auto lhs = xn.quotient_coordinates(free_element::from_word(w));
                const auto rhs = xn.quotient_coordinates(
                    free_element::from_word(word{side::primal, sv.blocks}));
                if (!(lhs == rhs)) ++mismatches;
            }
            oc.expect_eq(Int(mismatches), Int(0),
                         "n=" + std::to_string(n) + " degree " + std::to_string(deg) +
                             ": rewriting changed some normal form");
        }
    }
}

void c7_counting_identities(outcome& oc) {
    for (int n = 2; n <= 3; ++n) {
        verify_options opt;
        opt.n = n;
        opt.max_degree = 6;
        opt.trunc = 20;
        report_check(oc, check_section4(opt));
    }
    const auto w2 = family_series(2, family_spec::w(), 4);
    const long witness[] = {0, 0, 1, 3, 7};
    for (int i = 0; i <= 4; ++i)
        oc.expect_eq(w2[i], Rational(witness[i]),
                     "two-phase witness coefficient at degree " + std::to_string(i));
    for (int n = 0; n <= 10; ++n)
        oc.expect(cor49_series(n, 20) == theorem1_series(n, 20),
                  "n=" + std::to_string(n) + ": reciprocal recursion differs from closed form");
}

void c8_deep_alternating(outcome& oc) {
    const auto A = S({1, 2, 3});
    const auto E = alternating_chain(3, A, A);
    const auto qn = make_qn(3);
    const auto dual = make_qn_dual(3);

    std::size_t violations = 0;
    for (const auto& u : dual.relations())
        if (pairing(E, u) != 0) ++violations;
    oc.expect_eq(Int(violations), Int(0),
                 "alternating element pairs nonzero against the dual relation space");
    oc.expect(qn.in_ideal(E), "alternating element is not in the relation ideal");

    const auto V = make_V(3, A, A);
    std::vector<free_element> right_positioned, left_positioned;
    for (const auto& r : qn.relations())
        for (auto c : nonempty_subsets(3)) {
            right_positioned.push_back(r * v(c));
            left_positioned.push_back(v(c) * r);
        }
    oc.expect(in_span(right_positioned, V), "V is not in (relations) * V1");
    oc.expect(in_span(left_positioned, V), "V is not in V1 * (relations)");

    verify_options opt;
    opt.n = 3;
    opt.max_degree = 4;
    report_check(oc, check_lemma62(opt));
    report_check(oc, check_lemma63(opt));
}

void c9_string_bases(outcome& oc) {
    for (int n = 1; n <= 3; ++n) {
        const auto qn = make_qn(n);
        const auto xn = make_xn(n);
        const auto dual = make_qn_dual(n);
        const auto gr = make_gr_dual(n);
        for (int deg = 0; deg <= 4; ++deg) {
            const std::string at = "n=" + std::to_string(n) + " degree " + std::to_string(deg);
            std::vector<word> ws;
            for (const auto& s : enumerate_family(n, family_spec::y(), deg))
                ws.push_back(word{side::primal, s.blocks});
            oc.expect(qn.words_are_basis(deg, ws), at + ": strings are not a basis (qn)");
            oc.expect(xn.words_are_basis(deg, ws), at + ": strings are not a basis (xn)");

            std::vector<word> dws;
            if (deg == 0) {
                dws.push_back(word{side::dual, {}});
            } else {
                dws = dual_basis_words_of_degree(n, deg);
            }
            oc.expect(dual.words_are_basis(deg, dws), at + ": chain words are not a basis (dual)");
            oc.expect_eq(gr.dim_component(deg), dual.dim_component(deg),
                         at + ": graded dual dimension vs Koszul dual");
        }
    }
}

void c10_reports_and_cache(outcome& oc) {
    const std::string base = "/tmp/qnalg_accept_" + std::to_string(::getpid());
    const std::string verify_args =
        "verify --n 2 --max-degree 4 --checks theorem1,theorem2,koszul,basis --format json";
    const auto first = run_tool(verify_args);
    const auto second = run_tool(verify_args);
    oc.expect_eq(Int(first.exit_code), Int(0), "verify run exit code");
    oc.expect_eq(Int(second.exit_code), Int(0), "repeated verify run exit code");

    try {
        auto ja = nlohmann::json::parse(first.out);
        auto jb = nlohmann::json::parse(second.out);
        for (auto* j : {&ja, &jb})
            for (auto& rep : *j) rep.erase("timings");
        oc.expect(ja.dump() == jb.dump(), "verify reports differ after stripping timings");
        oc.expect(!ja.empty() && ja[0].contains("check") && ja[0].contains("items") &&
                      ja[0].contains("version"),
                  "verify report is missing schema fields");
    } catch (const std::exception& e) {
        oc.problems.push_back(std::string("verify output is not JSON: ") + e.what());
    }

    const std::string cache = base + "_cache.json";
    std::remove(cache.c_str());
    const std::string dims_args =
        "dims --algebra qn --n 2 --max-degree 4 --method engine --format csv --cache " + cache;
    const auto fresh = run_tool(dims_args);
    oc.expect_eq(Int(fresh.exit_code), Int(0), "dims run exit code");
    {
        std::ifstream in(cache);
        oc.expect(in.good(), "cache file was not created");
        nlohmann::json j;
        try {
            in >> j;
            oc.expect(j.contains("entries") && j["entries"].size() == 5,
                      "cache file does not hold the five computed entries");
        } catch (const std::exception&) {
            oc.problems.push_back("cache file is not valid JSON");
        }
    }
    const auto cached = run_tool(dims_args + " --verify-cache");
    oc.expect_eq(Int(cached.exit_code), Int(0), "cached dims run exit code");
    oc.expect(fresh.out == cached.out, "cached dims output differs from the fresh run");

    {
        std::ofstream out(cache, std::ios::trunc);
        out << "garbage";
    }
    const auto recovered = run_tool(dims_args);
    oc.expect_eq(Int(recovered.exit_code), Int(0), "dims run with a corrupt cache exit code");
    oc.expect(recovered.out == fresh.out, "corrupt cache changed the dims output");
    std::remove(cache.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance_tests <path-to-qnverify>\n";
        return 2;
    }
    g_tool = argv[1];

    struct criterion {
        const char* id;
        const char* label;
        std::function<void(outcome&)> body;
    };
    const std::vector<criterion> criteria = {
        {"C1", "primal dimensions by engine, strings and closed form (n <= 3)", c1_primal_three_oracle},
        {"C2", "rank-4 dimensions, strings to degree 5, engine to degree 3", c2_rank_four},
        {"C3", "dual dimensions by three oracles, vanishing past degree n", c3_dual_three_oracle},
        {"C4", "explicit dual relation sets span exactly the annihilator", c4_dual_presentation},
        {"C5", "primal/dual series are inverse at -t, closed-form and computed", c5_koszulity},
        {"C6", "canonical rewriting preserves quotient coordinates", c6_normal_form},
        {"C7", "string-family counting identities and the reciprocal recursion", c7_counting_identities},
        {"C8", "depth-3 alternating elements: orthogonality and positioned spans", c8_deep_alternating},
        {"C9", "string families index bases; graded dual matches the Koszul dual", c9_string_bases},
        {"C10", "byte-stable reports and a durable dimension cache", c10_reports_and_cache},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        outcome oc;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(oc);
        } catch (const std::exception& e) {
            oc.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        if (oc.problems.empty()) {
            std::cout << c.id << " PASS (" << timing << ") " << c.label << "\n";
        } else {
            ++failures;
            std::cout << c.id << " FAIL (" << timing << ") " << c.label << "\n";
            for (const auto& p : oc.problems) std::cout << "    - " << p << "\n";
        }
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}
