#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qnalg/block_string.hpp"
#include "qnalg/families.hpp"
#include "qnalg/quadratic.hpp"

using namespace qnalg;
using Catch::Matchers::ContainsSubstring;

namespace {

subset_mask S(std::initializer_list<int> xs) { return subset_mask::of(xs); }

eliminator<rational_field>::row R(std::initializer_list<std::pair<std::uint32_t, int>> es) {
    eliminator<rational_field>::row r;
    for (auto [c, v] : es) r.emplace_back(c, Rational(v));
    return r;
}

word word_of(side sd, const block_string& s) { return word{sd, s.blocks}; }

}  // namespace

TEST_CASE("sparse elimination: rank, reduction, nullspace") {
    eliminator<rational_field> elim;
    CHECK(elim.insert(R({{0, 1}, {1, 2}})));
    CHECK(!elim.insert(R({{0, 2}, {1, 4}})));
    CHECK(elim.rank() == 1);
    CHECK(elim.insert(R({{1, 1}, {2, 1}})));
    CHECK(elim.rank() == 2);
    CHECK(elim.is_pivot(0));
    CHECK(elim.is_pivot(1));
    CHECK(!elim.is_pivot(2));

    // reduce eliminates every pivot column
    const auto red = elim.reduce(R({{0, 1}, {2, 1}}));
    REQUIRE(red.size() == 1);
    CHECK(red[0].first == 2);
    CHECK(red[0].second == 3);

    // a row in the span reduces to nothing
    CHECK(elim.reduce(R({{0, 1}, {1, 2}})).empty());

    const auto ns = elim.nullspace(3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == R({{0, 2}, {1, -1}, {2, 1}}));
}

TEST_CASE("reduction does not depend on insertion order") {
    const auto r1 = R({{0, 1}, {1, 2}, {2, 3}});
    const auto r2 = R({{1, 1}, {2, 4}});
    const auto r3 = R({{0, 2}, {2, 5}});
    eliminator<rational_field> fwd, rev;
    for (const auto& r : {r1, r2, r3}) fwd.insert(r);
    for (const auto& r : {r3, r2, r1}) rev.insert(r);
    CHECK(fwd.rank() == rev.rank());
    const auto probe = R({{0, 7}, {1, 1}, {2, 2}, {3, 1}});
    CHECK(fwd.reduce(probe) == rev.reduce(probe));
}

TEST_CASE("nullspace of a single dependent pair") {
    eliminator<rational_field> elim;
    elim.insert(R({{0, 1}, {1, 1}}));
    const auto ns = elim.nullspace(2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == R({{0, -1}, {1, 1}}));
    // the empty eliminator has the full space as nullspace
    eliminator<rational_field> empty;
    CHECK(empty.nullspace(3).size() == 3);
}

TEST_CASE("prime field arithmetic") {
    prime_field f(7);
    CHECK(f.from_rational(Rational(1) / 2) == 4);
    CHECK(f.from_rational(Rational(-1)) == 6);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.describe() == "gfp:7");
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.from_rational(Rational(1) / 7), std::domain_error);
    CHECK_THROWS_AS(prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(1ull << 31), std::invalid_argument);
    CHECK(prime_field().modulus() == 2147483647ull);
}

TEST_CASE("presentation construction validates its input") {
    const auto labels = nonempty_subsets(2);
    CHECK_THROWS_AS(quadratic_presentation(2, side::primal, {S({1}), S({1})}, {}, "t"),
                    std::invalid_argument);
    CHECK_THROWS_AS(quadratic_presentation(1, side::primal, {S({1, 2})}, {}, "t"),
                    std::invalid_argument);
    // relation on the wrong side
    CHECK_THROWS_AS(
        quadratic_presentation(2, side::primal, labels, {vstar(S({1})) * vstar(S({1}))}, "t"),
        std::invalid_argument);
    // relation of the wrong degree
    CHECK_THROWS_AS(quadratic_presentation(2, side::primal, labels, {v(S({1}))}, "t"),
                    std::invalid_argument);
    // relation using a label the algebra does not have
    CHECK_THROWS_AS(
        quadratic_presentation(2, side::primal, {S({1}), S({2})},
                               {v(S({1, 2})) * v(S({1}))}, "t"),
        std::invalid_argument);
}

TEST_CASE("one generator and no relations gives the polynomial algebra") {
    quadratic_presentation p(1, side::primal, {S({1})}, {}, "poly");
    for (int i = 0; i <= 6; ++i) CHECK(p.dim_component(i) == 1);
    CHECK(p.relation_rank() == 0);
    CHECK(p.quotient_coordinates(v(S({1})) * v(S({1}))) == v(S({1})) * v(S({1})));
}

TEST_CASE("graded dimensions of the small quotients") {
    auto q2 = make_qn(2);
    CHECK(q2.relation_rank() == 1);
    const Int row2[] = {1, 3, 8, 21, 55};
    for (int i = 0; i <= 4; ++i) CHECK(q2.dim_component(i) == row2[i]);

    auto q3 = make_qn(3);
    CHECK(q3.relation_rank() == 5);
    CHECK(q3.relations().size() == 6);
    CHECK(q3.dim_component(2) == 44);
    CHECK(q3.dim_component(3) == 274);

    auto x2 = make_xn(2);
    for (int i = 0; i <= 4; ++i) CHECK(x2.dim_component(i) == row2[i]);

    auto q0 = make_qn(0);
    CHECK(q0.dim_component(0) == 1);
    CHECK(q0.dim_component(1) == 0);
    CHECK(q0.dim_component(5) == 0);
}

TEST_CASE("modular dimensions agree with the exact ones here") {
    auto q3 = make_qn(3);
    CHECK(q3.dim_component_mod(3, prime_field::default_modulus) == 274);
    auto q2 = make_qn(2);
    CHECK(q2.dim_component_mod(3, 1009) == 21);
    CHECK(q2.dim_component_mod(0, 1009) == 1);
}

TEST_CASE("dual quotient dimensions vanish above the ambient size") {
    auto d3 = make_qn_dual(3);
    const Int row[] = {1, 7, 5, 1, 0, 0};
    for (int i = 0; i <= 5; ++i) CHECK(d3.dim_component(i) == row[i]);

    auto d1 = make_qn_dual(1);
    CHECK(d1.dim_component(0) == 1);
    CHECK(d1.dim_component(1) == 1);
    CHECK(d1.dim_component(2) == 0);

    auto d2 = make_qn_dual(2);
    CHECK(d2.relations().size() == 8);
    CHECK(d2.relation_rank() == 8);
    CHECK(d2.dim_component(2) == 1);
    CHECK(d2.dim_component(3) == 0);
}

TEST_CASE("primal and dual relation ranks are complementary") {
    for (int n = 1; n <= 3; ++n) {
        auto p = make_qn(n);
        auto d = p.koszul_dual("dual");
        const Int dd = Int(p.generator_count());
        CHECK(Int(p.relation_rank()) + Int(d.relation_rank()) == dd * dd);
    }
}

TEST_CASE("the double dual has the same relation span as the original") {
    auto q2 = make_qn(2);
    auto dd = q2.koszul_dual("d").koszul_dual("dd");
    for (const auto& r : q2.relations()) CHECK(in_span(dd.relations(), r));
    for (const auto& r : dd.relations()) CHECK(in_span(q2.relations(), r));
}

TEST_CASE("normal forms are canonical and detect ideal membership") {
    auto x2 = make_xn(2);
    const auto rel = v(S({1, 2})) * (v(S({1})) - v(S({2})));
    CHECK(x2.quotient_coordinates(rel).is_zero());
    CHECK(x2.in_ideal(rel));
    CHECK(x2.quotient_coordinates(v(S({1, 2})) * v(S({1}))) == v(S({1, 2})) * v(S({2})));
    CHECK(x2.quotient_coordinates(free_element::zero(side::primal)).is_zero());
    CHECK(x2.quotient_coordinates(free_element::unit(side::primal)) ==
          free_element::unit(side::primal));

    auto q2 = make_qn(2);
    CHECK(q2.in_ideal(make_V(2, S({1, 2}), S({1, 2}))));
    CHECK(!q2.in_ideal(v(S({1})) * v(S({1}))));
    // reducing twice changes nothing
    const auto once = q2.quotient_coordinates(v(S({1})) * v(S({1})));
    CHECK(q2.quotient_coordinates(once) == once);

    CHECK_THROWS_AS(q2.quotient_coordinates(v(S({1})) + v(S({1})) * v(S({2}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(q2.quotient_coordinates(vstar(S({1}))), std::invalid_argument);
    quadratic_presentation small(2, side::primal, {S({1})}, {}, "small");
    CHECK_THROWS_AS(small.quotient_coordinates(v(S({2}))), std::invalid_argument);
}

TEST_CASE("canonical free words form a basis") {
    auto q2 = make_qn(2);
    for (int deg = 0; deg <= 3; ++deg) {
        const auto ws = q2.free_words(deg);
        CHECK(Int(ws.size()) == q2.dim_component(deg));
        CHECK(q2.words_are_basis(deg, ws));
    }
    // dropping a word breaks spanning, adding a dependent word breaks the count
    auto ws = q2.free_words(2);
    ws.pop_back();
    CHECK(!q2.words_are_basis(2, ws));
}

TEST_CASE("canonical strings give a basis of the quotients") {
    for (int n = 1; n <= 2; ++n) {
        auto q = make_qn(n);
        auto x = make_xn(n);
        for (int deg = 0; deg <= 3; ++deg) {
            std::vector<word> ws;
            for (const auto& s : enumerate_family(n, family_spec::y(), deg))
                ws.push_back(word_of(side::primal, s));
            CHECK(q.words_are_basis(deg, ws));
            CHECK(x.words_are_basis(deg, ws));
        }
    }
}

TEST_CASE("dual monomial words give a basis of the dual quotient") {
    for (int n = 1; n <= 3; ++n) {
        auto d = make_qn_dual(n);
        for (int deg = 1; deg <= n + 1; ++deg)
            CHECK(d.words_are_basis(deg, dual_basis_words_of_degree(n, deg)));
        CHECK(d.words_are_basis(0, {word{side::dual, {}}}));
    }
}

TEST_CASE("the graded dual has the dual quotient's dimensions") {
    for (int n = 1; n <= 3; ++n) {
        auto g = make_gr_dual(n);
        auto d = make_qn_dual(n);
        for (int deg = 0; deg <= 4; ++deg) CHECK(g.dim_component(deg) == d.dim_component(deg));
    }
}

TEST_CASE("quotient coordinates are invariant under canonical rewriting") {
    auto x2 = make_xn(2);
    for (int deg = 0; deg <= 3; ++deg) {
        const std::uint64_t total = [&] {
            std::uint64_t t = 1;
            for (int i = 0; i < deg; ++i) t *= 3;
            return t;
        }();
        for (std::uint64_t i = 0; i < total; ++i) {
            const word w = x2.index_word(i, deg);
            const block_string s{2, w.letters};
            const word rewritten = word_of(side::primal, vee(s));
            CHECK(x2.quotient_coordinates(free_element::from_word(w)) ==
                  x2.quotient_coordinates(free_element::from_word(rewritten)));
        }
    }
}

TEST_CASE("positioned span membership") {
    const auto a123 = S({1, 2, 3});
    const auto V = make_V(3, a123, a123);
    const auto rels = relations_Q(3).elements;

    std::vector<free_element> right_positioned, left_positioned;
    for (const auto& r : rels)
        for (auto c : nonempty_subsets(3)) {
            right_positioned.push_back(r * v(c));
            left_positioned.push_back(v(c) * r);
        }
    CHECK(in_span(right_positioned, V));
    CHECK(in_span(left_positioned, V));

    CHECK(!in_span(relations_Q(2).elements, v(S({1})) * v(S({1}))));
    CHECK(in_span({}, free_element::zero(side::primal)));
    CHECK_THROWS_AS(in_span(rels, v(a123) + v(a123) * v(a123)), std::invalid_argument);
}

TEST_CASE("word space caps produce a resource error, not a wrong answer") {
    auto q3 = make_qn(3);
    CHECK_THROWS_AS(q3.dim_component(8), resource_limit_error);
    CHECK_THROWS_AS(q3.free_words(8), resource_limit_error);
    CHECK_THROWS_WITH(q3.free_words(8), ContainsSubstring("over the cap"));
}

TEST_CASE("word indexing round-trips") {
    auto q3 = make_qn(3);
    for (std::uint64_t i = 0; i < 49; ++i) {
        const word w = q3.index_word(i, 2);
        CHECK(q3.word_index(w) == i);
    }
    CHECK_THROWS_AS(q3.word_index(word{side::primal, {subset_mask::of({1, 2, 3, 4})}}),
                    std::invalid_argument);
}
