#include <doctest.h>

#include <algorithm>

#include "baer/classifier.hpp"
#include "baer/report_io.hpp"
#include "oracles.hpp"

using namespace baer;
using namespace baer::testing;

TEST_CASE("conics over GF(q)") {
    const FieldCtx f = field_for_order(5);
    const ExtElem one = f.embed(f.one()), zero{};
    const Report r = predict(f, make_conic(f, {one, zero, one, zero, zero, f.neg(one)}));
    CHECK(r.kase == Case::DefinedOverFq);
    CHECK(r.predicted == 25);
    CHECK(r.oracle == 25);
    CHECK(r.k == 6);
    CHECK(r.ok());
}

TEST_CASE("example family") {
    const std::size_t expected[] = {7, 17, 31, 49};
    std::size_t i = 0;
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const FieldCtx f = field_for_order(q);
        const Predictor p(f);
        // every a in GF(q)* and a few b outside GF(q)
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b : {q, q + 1, q * q - 1}) {
                const Report r = p.predict(example_family(f, FieldElem{a}, f.ext_elem(b)));
                CHECK(r.kase == Case::IrreducibleSingular);
                CHECK(r.predicted == expected[i]);
                CHECK(r.oracle == expected[i]);
                CHECK(r.S_q == q * q + 3 * q + 1);
                CHECK(r.n0 == 1);
                CHECK(r.violations.empty());
            }
        ++i;
    }
}

TEST_CASE("reducible cone example") {
    const FieldCtx f = field_for_order(3);
    const ExtElem one = f.embed(f.one()), zero{};
    const Report r = predict(f, make_conic(f, general_form({f.epsilon(), one, zero, one, zero})));
    CHECK(r.kase == Case::ReducibleCone);
    CHECK(r.kappa_zero == false);
    CHECK(r.predicted == 7);
    CHECK(r.oracle == 7);
    CHECK(r.ok());
}

TEST_CASE("reducible prediction table") {
    auto rd = [](const FieldCtx& f, std::uint32_t dp, std::uint32_t delta, std::uint32_t kappa) {
        ReducibleDiscriminants d{};
        d.delta_prime = f.elem(dp);
        d.delta = f.elem(delta);
        d.kappa = f.elem(kappa);
        return d;
    };
    const FieldCtx f3 = field_for_order(3);
    CHECK(reducible_predict(f3, rd(f3, 0, 1, 1)) == 7);
    const FieldCtx f5 = field_for_order(5);
    // squares of GF(5): 1, 4
    CHECK(reducible_predict(f5, rd(f5, 0, 2, 0)) == 20);
    CHECK(reducible_predict(f5, rd(f5, 0, 1, 0)) == 15);
    CHECK(reducible_predict(f5, rd(f5, 0, 1, 3)) == 17);
    CHECK(reducible_predict(f5, rd(f5, 4, 1, 2)) == 19);
    CHECK(reducible_predict(f5, rd(f5, 4, 2, 2)) == 14);
    CHECK(reducible_predict(f5, rd(f5, 4, 2, 0)) == 17);
    CHECK(reducible_predict(f5, rd(f5, 2, 1, 2)) == 15);
    CHECK(reducible_predict(f5, rd(f5, 2, 2, 2)) == 20);
    CHECK_THROWS_AS(reducible_predict(f5, rd(f5, 2, 1, 0)), std::logic_error);
}

TEST_CASE("isotropy of the t-form is decided by -delta") {
    // At q = 3, -1 is a non-square, so delta and -delta differ in class.
    const FieldCtx f = field_for_order(3);
    const Predictor p(f);
    std::size_t reducible = 0, corrected = 0, literal = 0;
    for (const auto& c : enumerate_conics_through_base_point(f).conics) {
        if (is_defined_over_fq(f, c)) continue;
        const NormalizedConic nc = normalize(f, c);
        const ComponentCoeffs cc = decompose_conic(nc);
        if (!is_reducible(f, build_surface(f, cc))) continue;
        ++reducible;
        ReducibleDiscriminants rd = reducible_discriminants(f, cc);
        const std::size_t oracle = count_externals_in_subplane(f, c, p.subplane()).externals;
        corrected += reducible_predict(f, rd) != oracle;
        rd.delta = f.neg(rd.delta);
        literal += reducible_predict(f, rd) != oracle;
    }
    CHECK(reducible > 0);
    CHECK(corrected == 0);
    CHECK(literal > 0);
}

TEST_CASE("refusals") {
    const FieldCtx f = field_for_order(3);
    const ExtElem one = f.embed(f.one()), zero{};
    Conic singular{};
    singular.coef = {one, zero, zero, zero, zero, zero};
    singular.matrix = conic_matrix(f, singular.coef);
    CHECK_THROWS_AS(predict(f, singular), Refusal);
    for (std::uint32_t i = 1; i < f.ext_order(); ++i) {
        const Conic c = make_conic(f, {f.ext_elem(i), zero, f.epsilon(), zero, zero, one});
        if (count_externals_in_subplane(f, c).on_conic != 0) continue;
        CHECK_THROWS_AS(predict(f, c), Refusal);
        return;
    }
    FAIL("no conic without subplane points found");
}

TEST_CASE("admissible value sets") {
    CHECK(theorem_value_set(3) == std::set<std::size_t>{3, 4, 5, 6, 7, 8, 9});
    CHECK(theorem_value_set(5) == std::set<std::size_t>{11, 12, 14, 15, 16, 17, 19, 20, 21, 22, 25});
    CHECK(theorem_value_set(7).size() == 13);
    CHECK(theorem_value_set(7).contains(49));
    CHECK(theorem_value_set(9).contains(49));
    for (long a : {-2, -1, 0, 1, 2, 3, 4, 5, 7}) CHECK(in_weil_set(a));
    for (long a : {-3, 6, 8}) CHECK(!in_weil_set(a));
}

TEST_CASE("report serialization") {
    const FieldCtx f = field_for_order(3);
    const Report r = predict(f, example_family(f));
    const auto j = to_json(r);
    for (const char* key : {"q", "conic", "case", "k", "S_q", "n0", "n_inf", "alpha", "singularity",
                            "delta_class", "delta_prime_class", "kappa_zero", "predicted", "oracle",
                            "match", "violations"})
        CHECK(j.contains(key));
    CHECK(j["case"] == "irreducible_singular");
    CHECK(j["singularity"]["beta"] == "0");
    CHECK(csv_header() ==
          "q,case,k,S_q,n0,alpha,beta,delta_class,delta_prime_class,kappa_zero,predicted,oracle,match");
    const std::string row = to_csv_row(r);
    CHECK(std::count(row.begin(), row.end(), ',') == 12);
    CHECK(row == "3,irreducible_singular,2,19,1,3,0,,,,7,7,true");
}
