#include <gtest/gtest.h>

#include <map>
#include <set>

#include <acmgon/gonality.hpp>

using namespace acm;

namespace {

BiliaisonType L(std::initializer_list<Int> v) { return BiliaisonType::from(v); }
HVector H(std::initializer_list<Int> v) { return HVector::parse(v); }

const HVector kFirst = H({1, 2, 3, 4, 5, 6, 7, 4, 3});
const HVector kSecond = H({1, 2, 3, 4, 5, 3, 2});

/// phi(A, B) straight from the Gram matrix phi(D_i, D_j).
Int gram(const PicardModel& m, const std::vector<Int>& a, const std::vector<Int>& b) {
    Int v = 0;
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j) v += a[i] * b[j] * m.phi(i, j);
    return v;
}

/// Wide-box enumeration of the inequality system with no pruning beyond the box.
std::vector<std::pair<Int, std::vector<Int>>> brute_search(const PicardModel& m, Int k, Int box) {
    const std::size_t r = m.rank();
    const std::vector<Int> minus_one(r, -1);
    std::vector<std::pair<Int, std::vector<Int>>> out;
    std::vector<Int> a(r, -box);
    while (true) {
        for (Int c = -m.d; c <= m.d; ++c) {
            const auto A = DivisorClass::make(m, c, a);
            const Int x = A.x, aa = gram(m, a, a), ac = gram(m, a, minus_one);
            if (!(2 * x > -m.d && x < 0)) continue;
            if (x * x < aa) continue;
            if (x * x + m.d * x + k * m.s < aa + ac) continue;
            out.emplace_back(c, a);
        }
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (a[i] < box) {
                ++a[i];
                break;
            }
            a[i] = -box;
        }
        if (i == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(PicardModel, FirstWalkthrough) {
    const auto m = picard_model(kFirst);
    EXPECT_EQ(m.linked, H({1, 2, 3, 4, 2, 2}));
    EXPECT_EQ(m.lambda_gamma, L({1, 2, 5, 6}));
    ASSERT_EQ(m.rank(), 2u);
    EXPECT_EQ(m.components[0].degree, 3);
    EXPECT_EQ(m.components[1].degree, 11);
    EXPECT_EQ(m.components[0].q, 86);
    EXPECT_EQ(m.components[1].q, 86);
    EXPECT_EQ(m.phi(0, 1), -9);
    EXPECT_EQ(m.b(0), 9);
    EXPECT_EQ(m.weight(0), 77);
    EXPECT_EQ(m.c_class(), (std::pair<Int, std::vector<Int>>{7, {-1, -1}}));
}

TEST(PicardModel, SecondWalkthrough) {
    const auto m = picard_model(kSecond);
    EXPECT_EQ(m.linked, H({1, 2, 1, 1}));
    ASSERT_EQ(m.rank(), 2u);
    EXPECT_EQ(m.components[0].lambda, L({1}));
    EXPECT_EQ(m.components[1].lambda, L({4}));
    EXPECT_EQ(m.components[0].degree, 1);
    EXPECT_EQ(m.components[1].degree, 4);
    EXPECT_EQ(m.components[0].q, 16);
    EXPECT_EQ(m.components[1].q, 16);
    EXPECT_EQ(m.phi(0, 1), -1);
}

TEST(PicardModel, Rejections) {
    EXPECT_THROW(picard_model(H({1, 2, 3, 2, 1})), Error);
    try {
        picard_model(H({1, 2, 3}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::STooSmall);
    }
}

TEST(PicardModel, ComplementIsEmptyForCompleteIntersections) {
    const auto m = picard_model(ci_hvector(5, 6));
    EXPECT_EQ(m.rank(), 0u);
    EXPECT_TRUE(m.linked.empty());
}

TEST(Forms, MatchGramMatrix) {
    for (Int s = 4; s <= 6; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 32)) {
            const auto m = picard_model(h);
            const std::size_t r = m.rank();
            const std::vector<Int> minus_one(r, -1);
            EXPECT_EQ(gram(m, minus_one, minus_one), phi_from_dg(m.d, m.g, m.s));
            for (std::size_t i = 0; i < r; ++i) EXPECT_GT(m.components[i].q, 2 * m.b(i));
            std::vector<Int> a(r);
            for (Int seed = 0; seed < 27; ++seed) {
                Int v = seed;
                for (std::size_t i = 0; i < r; ++i, v /= 3) a[i] = v % 3 - 1;
                EXPECT_EQ(phi_AA(m, a), gram(m, a, a));
                EXPECT_EQ(phi_AC(m, a), gram(m, a, minus_one));
                EXPECT_EQ(phi_AAC(m, a), gram(m, a, a) + gram(m, a, minus_one));
                EXPECT_EQ(phi_bilinear(m, a, minus_one), gram(m, a, minus_one));
            }
        }
}

TEST(SecantDegree, CaseA) {
    const auto m = picard_model(kSecond);
    EXPECT_EQ(secant_degree(m, multisecant_case(kSecond)), 7);
    EXPECT_EQ(-m.weight(0), -15); // phi(C, L)
}

TEST(SecantDegree, CaseB) {
    const auto h = H({1, 2, 3, 4, 5, 5, 5, 5, 5, 3, 2, 1});
    const auto sc = multisecant_case(h);
    ASSERT_EQ(sc.tag, SecantTag::CaseB);
    const auto m = picard_model(h);
    EXPECT_EQ(m.components.back().lambda, L({4}));
    EXPECT_EQ(secant_degree(m, sc), 5);
    EXPECT_EQ(secant_degree(m, sc), invariants(h).t_value() - 5 + 1);
}

TEST(SecantDegree, GenericIsACaseMismatch) {
    const auto m = picard_model(kFirst);
    try {
        secant_degree(m, multisecant_case(kFirst));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CaseMismatch);
    }
}

TEST(SecantDegree, LatticeAgreesWithHVectorOnAllCases) {
    for (Int s = 4; s <= 7; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 40)) {
            const auto sc = multisecant_case(h);
            if (sc.tag != SecantTag::CaseA && sc.tag != SecantTag::CaseB) continue;
            EXPECT_EQ(secant_degree(picard_model(h), sc), *sc.l) << format_hvector(h);
        }
}

TEST(Destabilizer, SecondWalkthrough) {
    const auto m = picard_model(kSecond);
    const auto at13 = destabilizer_search(m, 13);
    ASSERT_EQ(at13.size(), 1u);
    EXPECT_EQ(at13[0].cls.c, -1);
    EXPECT_EQ(at13[0].cls.a, (std::vector<Int>{1, 0}));
    EXPECT_EQ(at13[0].cls.x, -4);
    EXPECT_EQ(at13[0].phiAA, 16);
    EXPECT_EQ(at13[0].phiAC, -15);
    EXPECT_EQ(at13[0].kind, DestabilizerKind::LineMinusH);
    EXPECT_EQ(at13[0].component, 0u);
    EXPECT_TRUE(destabilizer_search(m, 12).empty());
}

TEST(Destabilizer, FirstWalkthrough) {
    const auto m = picard_model(kFirst);
    const auto at31 = destabilizer_search(m, 31);
    ASSERT_EQ(at31.size(), 1u);
    EXPECT_EQ(at31[0].cls.c, -1);
    EXPECT_EQ(at31[0].cls.a, (std::vector<Int>{0, 0}));
    EXPECT_EQ(at31[0].cls.x, -7);
    EXPECT_EQ(at31[0].kind, DestabilizerKind::MinusH);
}

TEST(Destabilizer, RefusesWhenDeltaIsNotPositive) {
    const auto m = picard_model(kSecond);
    try {
        destabilizer_search(m, 19); // 74 - 76 < 0
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DeltaNotPositive);
    }
    EXPECT_FALSE(try_destabilizer_search(m, 19).has_value());
    EXPECT_THROW(destabilizer_search(m, 0), Error);
}

TEST(Destabilizer, MatchesWideBoxBruteForce) {
    for (Int s = 4; s <= 6; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 26)) {
            const auto m = picard_model(h);
            if (m.rank() > 3) continue;
            const Int gon = m.d - *multisecant_case(h).l;
            for (Int k : {gon - 1, gon}) {
                const auto fast = try_destabilizer_search(m, k);
                if (!fast) continue;
                std::vector<std::pair<Int, std::vector<Int>>> got;
                for (const auto& c : *fast) got.emplace_back(c.cls.c, c.cls.a);
                std::sort(got.begin(), got.end());
                EXPECT_EQ(got, brute_search(m, k, 4)) << format_hvector(h) << " k=" << k;
            }
        }
}

TEST(Destabilizer, ClassificationSweep) {
    // Frozen from an independent enumeration: decreasing type, 4 <= s <= 7,
    // d <= 30, outside the Delta list at k = d-4, searched at k = gon-1 and gon.
    std::size_t curves = 0;
    std::map<std::pair<DestabilizerKind, bool>, std::size_t> count;
    for (Int s = 4; s <= 7; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 30)) {
            const auto inv = invariants(h);
            if (contains(delta_exceptions_k_d_minus_4(), {s, inv.d, inv.g})) continue;
            ++curves;
            const auto m = picard_model(h);
            const Int gon = inv.d - *multisecant_case(h).l;
            for (Int k : {gon - 1, gon}) {
                const auto list = try_destabilizer_search(m, k);
                ASSERT_TRUE(list.has_value()) << format_hvector(h);
                for (const auto& c : *list) {
                    ++count[{c.kind, k == gon}];
                    EXPECT_GE(c.cls.x, -s - 1) << format_hvector(h);
                    EXPECT_GE(c.phiAAC, 0) << format_hvector(h);
                }
            }
        }
    EXPECT_EQ(curves, 97u);
    EXPECT_EQ((count[{DestabilizerKind::MinusH, true}]), 85u);
    EXPECT_EQ((count[{DestabilizerKind::MinusH, false}]), 54u);
    EXPECT_EQ((count[{DestabilizerKind::LineMinusH, true}]), 13u);
    EXPECT_EQ((count[{DestabilizerKind::LineMinusH, false}]), 0u);
    EXPECT_EQ((count[{DestabilizerKind::EllipticQuarticPencil, true}]), 4u);
    EXPECT_EQ((count[{DestabilizerKind::Other, true}]), 0u);
    EXPECT_EQ((count[{DestabilizerKind::Other, false}]), 0u);
}

TEST(Destabilizer, CaseAAndBPencilsAppearAtGonality) {
    for (Int s = 4; s <= 7; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 36)) {
            const auto inv = invariants(h);
            const auto sc = multisecant_case(h);
            if (sc.tag != SecantTag::CaseA && sc.tag != SecantTag::CaseB) continue;
            if (contains(delta_exceptions_k_d_minus_4(), {s, inv.d, inv.g})) continue;
            const auto list = try_destabilizer_search(picard_model(h), inv.d - *sc.l);
            ASSERT_TRUE(list.has_value());
            EXPECT_TRUE(std::any_of(list->begin(), list->end(),
                                    [](auto& c) { return c.kind == DestabilizerKind::LineMinusH; }))
                << format_hvector(h);
        }
}

TEST(Exceptions, TablesAreConsistent) {
    const auto& a = delta_exceptions_k_d_minus_5();
    const auto& b = delta_exceptions_k_d_minus_4();
    const auto& u = gonality_undecided();
    EXPECT_EQ(a.size(), 9u);
    EXPECT_EQ(b.size(), 16u);
    for (const auto& x : a) EXPECT_TRUE(contains(b, x));
    for (const auto& x : u) EXPECT_TRUE(contains(a, x));
    EXPECT_FALSE(contains(u, {4, 10, 11}));
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
}

TEST(Exceptions, ScanRegeneratesTables) {
    EXPECT_EQ(scan_exceptions(4, 8, 45, 5), delta_exceptions_k_d_minus_5());
    EXPECT_EQ(scan_exceptions(4, 8, 45, 4), delta_exceptions_k_d_minus_4());
    EXPECT_EQ(scan_exceptions(4, 4, 45, 4), (std::vector<SDG>{{4, 10, 11}, {4, 11, 14}, {4, 12, 17}}));
    EXPECT_TRUE(scan_exceptions(9, 9, 60, 4).empty());
    EXPECT_TRUE(scan_exceptions(9, 10, 70, 5).empty());
    EXPECT_THROW(scan_exceptions(4, 8, 45, 3), Error);
    EXPECT_THROW(scan_exceptions(3, 8, 45, 4), Error);
}

TEST(Exceptions, ListedTriplesAreRealized) {
    // Every listed (s,d,g) comes from some decreasing-type h-vector.
    std::set<SDG> realized;
    for (Int s = 4; s <= 8; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 40)) {
            const auto inv = invariants(h);
            realized.insert({s, inv.d, inv.g});
        }
    for (const auto& x : delta_exceptions_k_d_minus_4()) EXPECT_TRUE(realized.count(x)) << x.s << ' ' << x.d;
}

TEST(PredictGonality, SecondWalkthrough) {
    const auto r = predict_gonality(kSecond);
    EXPECT_EQ(r.secant.tag, SecantTag::CaseA);
    EXPECT_EQ(r.secant.l, 7);
    EXPECT_EQ(r.gonality, 13);
    EXPECT_TRUE(r.secant.unique_pencil);
    EXPECT_EQ(r.clifford, 11);
    EXPECT_FALSE(r.flags.thm1_undecided);
    EXPECT_FALSE(r.flags.thm3_undecided);
    ASSERT_TRUE(r.candidates_at_gon.has_value());
    EXPECT_EQ(r.candidates_at_gon->size(), 1u);
    ASSERT_TRUE(r.candidates_below_gon.has_value());
    EXPECT_TRUE(r.candidates_below_gon->empty());
}

TEST(PredictGonality, FirstWalkthrough) {
    const auto r = predict_gonality(kFirst);
    EXPECT_EQ(r.secant.tag, SecantTag::Generic);
    EXPECT_EQ(r.secant.l, 4);
    EXPECT_EQ(r.gonality, 31);
    EXPECT_EQ(r.clifford, 29);
    EXPECT_FALSE(r.secant.unique_pencil);
}

TEST(PredictGonality, UndecidedFlags) {
    const auto h = H({1, 2, 3, 4, 5}); // (s,d,g) = (5,15,26)
    const auto inv = invariants(h);
    ASSERT_EQ((SDG{inv.s, inv.d, inv.g}), (SDG{5, 15, 26}));
    const auto r = predict_gonality(h);
    EXPECT_TRUE(r.flags.thm1_undecided);
    EXPECT_TRUE(r.flags.thm3_undecided);
    EXPECT_FALSE(r.clifford.has_value());
    EXPECT_EQ(r.gonality, 11);

    const auto r4 = predict_gonality(H({1, 2, 3, 4})); // (4,10,11): gonality settled, finiteness not
    EXPECT_FALSE(r4.flags.thm1_undecided);
    EXPECT_TRUE(r4.flags.thm3_undecided);
}

TEST(PredictGonality, EllipticQuarticFlag) {
    std::size_t flagged = 0;
    for (const auto& h : enumerate_decreasing_type(4, 30)) {
        const auto r = predict_gonality(h);
        const bool expect = r.model->rank() == 1 && r.model->components[0].lambda == L({1, 3});
        EXPECT_EQ(r.flags.elliptic_quartic_extra_pencil, expect) << format_hvector(h);
        flagged += expect;
    }
    EXPECT_GT(flagged, 0u);
    for (const auto& h : enumerate_decreasing_type(5, 30)) EXPECT_FALSE(predict_gonality(h).flags.elliptic_quartic_extra_pencil);
}

TEST(PredictGonality, OutOfScope) {
    for (const auto& h : {H({1, 2, 3, 2, 1}), H({1, 2}), H({}), H({1, 2, 3, 4, 2, 2})}) {
        const auto r = predict_gonality(h);
        EXPECT_EQ(r.secant.tag, SecantTag::OutOfScope);
        EXPECT_FALSE(r.gonality.has_value());
        EXPECT_FALSE(r.clifford.has_value());
        EXPECT_FALSE(r.model.has_value());
    }
    EXPECT_FALSE(predict_gonality(H({1, 2, 3, 4, 2, 2})).decreasing_type);
}

TEST(PredictGonality, GonalityAtMostDMinusFour) {
    for (Int s = 4; s <= 7; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 36)) {
            const auto r = predict_gonality(h);
            ASSERT_TRUE(r.gonality.has_value());
            EXPECT_LE(*r.gonality, r.inv.d - 4);
            if (r.clifford) { EXPECT_EQ(*r.clifford, *r.gonality - 2); }
        }
}

TEST(DivisorClass, DegreeIsLinearAndCHasDegreeD) {
    for (Int s = 4; s <= 6; ++s)
        for (const auto& h : enumerate_decreasing_type(s, 32)) {
            const auto m = picard_model(h);
            const std::size_t r = m.rank();
            // C = tH - sum of the linked components
            EXPECT_EQ(DivisorClass::make(m, m.t, std::vector<Int>(r, -1)).x, m.d) << format_hvector(h);
            EXPECT_EQ(DivisorClass::make(m, -1, std::vector<Int>(r, 0)).x, -m.s);
            std::vector<Int> a(r), b(r), ab(r);
            for (Int seed = 0; seed < 9; ++seed) {
                for (std::size_t i = 0; i < r; ++i) {
                    a[i] = (seed + static_cast<Int>(i)) % 3 - 1;
                    b[i] = seed / 3 - static_cast<Int>(i);
                    ab[i] = a[i] + b[i];
                }
                EXPECT_EQ(DivisorClass::make(m, seed, a).x + DivisorClass::make(m, -2, b).x, DivisorClass::make(m, seed - 2, ab).x);
            }
        }
}
