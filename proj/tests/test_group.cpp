#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "addgal/group.hpp"
#include "addgal/rng.hpp"

using namespace addgal;

namespace {

AdditivePoly content_x(const FieldCtx& F) { return AdditivePoly::from_constants(F, F.q(), {1}); }

// all matrices of GL_n(q) by odometer + det filter
std::vector<MatrixGF> all_gl(const FieldCtx& F, std::uint32_t n) {
    std::vector<MatrixGF> out;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n * n; ++i) total *= F.q();
    for (std::uint64_t code = 0; code < total; ++code) {
        MatrixGF m(F, n);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                m(i, j) = elem(c % F.q());
                c /= F.q();
            }
        if (is_invertible(m)) out.push_back(std::move(m));
    }
    return out;
}

} // namespace

TEST_CASE("parameter extraction worked examples") {
    FieldCtx F3(3, 1);
    // a_0 = 2t^2 + t + 2 = 2(t+1)^2
    AdditivePoly f(F3, 3, {Poly(F3, {2, 1, 2}), Poly::one(F3)});
    GroupParams gp = extract_group_params(f);
    CHECK(gp.c == 2);
    CHECK(gp.k == 2);
    REQUIRE(gp.u.has_value());
    CHECK(*gp.u == Poly(F3, {1, 1}));

    // constant a_0
    AdditivePoly f2(F3, 3, {Poly::constant(F3, 2), Poly::one(F3)});
    GroupParams gp2 = extract_group_params(f2);
    CHECK(gp2.c == 2);
    CHECK(gp2.k == 0);
    CHECK(!gp2.u.has_value());

    // a_0 = t
    AdditivePoly f3(F3, 3, {Poly(F3, {0, 1}), Poly::one(F3)});
    GroupParams gp3 = extract_group_params(f3);
    CHECK(gp3.c == 1);
    CHECK(gp3.k == 1);
    CHECK(*gp3.u == Poly(F3, {0, 1}));

    CHECK_THROWS_AS(extract_group_params(AdditivePoly(F3, 3, {Poly::zero(F3), Poly::one(F3)})),
                    std::invalid_argument);
}

TEST_CASE("membership worked examples") {
    FieldCtx F2(2, 1);
    // n=2, h=X^2+X (eta=1, D=[1]), c=1, k=1
    AdditivePoly h = AdditivePoly::from_constants(F2, 2, {1, 1});
    GroupParams gp = make_group_params(2, h, 1, 1, Poly(F2, {0, 1}));
    CHECK(group_contains(gp, MatrixGF::identity(F2, 2)));
    MatrixGF upper(F2, 2);
    upper(0, 0) = 1;
    upper(0, 1) = 1;
    upper(1, 1) = 1;
    CHECK(group_contains(gp, upper));
    MatrixGF lower(F2, 2);
    lower(0, 0) = 1;
    lower(1, 0) = 1;
    lower(1, 1) = 1;
    CHECK(!group_contains(gp, lower));

    // n=2, eta=0, k=0, c=1 over F_3: members have det 1
    FieldCtx F3(3, 1);
    GroupParams sl = make_group_params(2, content_x(F3), 1, 0);
    MatrixGF d21(F3, 2);
    d21(0, 0) = 2;
    d21(1, 1) = 1;
    CHECK(!group_contains(sl, d21));
    CHECK(group_contains(sl, MatrixGF::identity(F3, 2)));
}

TEST_CASE("order worked examples") {
    FieldCtx F3(3, 1);
    // q=3, n=1, eta=0, c=2, k=0: <2> inside F_3^x
    GroupParams g1 = make_group_params(1, content_x(F3), 2, 0);
    CHECK(group_order(g1) == 2);

    FieldCtx F2(2, 1);
    GroupParams g2 = make_group_params(2, content_x(F2), 1, 1, Poly(F2, {0, 1}));
    CHECK(group_order(g2) == 6); // all of GL_2(2)

    AdditivePoly h = AdditivePoly::from_constants(F2, 2, {1, 1});
    GroupParams g3 = make_group_params(2, h, 1, 1, Poly(F2, {0, 1}));
    CHECK(group_order(g3) == 2); // unipotent upper-triangular pairs
}

TEST_CASE("order and charpoly tests agree with exhaustive enumeration") {
    for (std::uint32_t qv : {2u, 3u}) {
        FieldCtx F(qv, 1);
        Poly t_poly(F, {0, 1});
        for (std::uint32_t n = 1; n <= 2; ++n) {
            auto gl = all_gl(F, n);
            for (std::uint32_t eta = 0; eta <= std::min(n, 1u); ++eta) {
                std::vector<AdditivePoly> hs;
                if (eta == 0) {
                    hs.push_back(content_x(F));
                } else {
                    for (elem h0 = 1; h0 < qv; ++h0)
                        hs.push_back(AdditivePoly::from_constants(F, qv, {h0, 1}));
                }
                for (const auto& h : hs) {
                    for (elem c = 1; c < qv; ++c) {
                        for (std::uint32_t k = 0; k <= 2; ++k) {
                            GroupParams gp = make_group_params(
                                n, h, c, k, k ? std::optional<Poly>(t_poly) : std::nullopt);
                            std::uint64_t cnt = 0;
                            std::set<std::vector<elem>> cps;
                            for (const auto& M : gl) {
                                if (group_contains(gp, M)) {
                                    ++cnt;
                                    cps.insert(charpoly(M).coeffs());
                                }
                            }
                            CHECK(group_order(gp) == cnt);
                            // charpoly membership against the enumerated set
                            std::uint64_t total = 1;
                            for (std::uint32_t i = 0; i < n; ++i) total *= qv;
                            for (std::uint64_t code = 0; code < total; ++code) {
                                std::vector<elem> cc(n + 1);
                                std::uint64_t v = code;
                                for (std::uint32_t i = 0; i < n; ++i) {
                                    cc[i] = elem(v % qv);
                                    v /= qv;
                                }
                                cc[n] = 1;
                                Poly p(F, std::move(cc));
                                CHECK(is_group_charpoly(gp, p) == (cps.count(p.coeffs()) != 0));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("accepted matrices are closed under product and inverse") {
    FieldCtx F3(3, 1);
    AdditivePoly h = AdditivePoly::from_constants(F3, 3, {2, 1});
    GroupParams gp = make_group_params(3, h, 2, 1, Poly(F3, {0, 1}));
    auto gl = all_gl(F3, 3);
    std::vector<MatrixGF> members;
    for (const auto& M : gl)
        if (group_contains(gp, M)) members.push_back(M);
    REQUIRE(members.size() == group_order(gp));
    RngStream rng(5, 0);
    for (int t = 0; t < 300; ++t) {
        const MatrixGF& a = members[rng.below(members.size())];
        const MatrixGF& b = members[rng.below(members.size())];
        CHECK(group_contains(gp, mul(a, b)));
        CHECK(group_contains(gp, inverse(a)));
    }
}

TEST_CASE("membership closure at n = 4 from constructed members") {
    // GL_4(3) is too big to enumerate; build members from the block shape
    // and check closure under product and inverse.
    for (std::uint32_t qv : {2u, 3u}) {
        FieldCtx F(qv, 1);
        AdditivePoly h = AdditivePoly::from_constants(F, qv, {qv - 1, 1});
        GroupParams gp = make_group_params(4, h, 1, 1, Poly(F, {0, 1}));
        std::uint64_t L = group_index_period(gp);
        std::uint64_t ordD = matrix_order(gp.D);
        elem detD = det(gp.D);
        RngStream rng(91, qv);
        std::vector<MatrixGF> members;
        while (members.size() < 40) {
            std::uint64_t i = rng.below(L);
            MatrixGF M(F, 4);
            MatrixGF Di = pow(gp.D, i % ordD);
            M(0, 0) = Di.dim() ? Di(0, 0) : 1;
            for (std::uint32_t col = 1; col < 4; ++col) M(0, col) = elem(rng.below(qv));
            MatrixGF B(F, 3);
            for (;;) {
                for (std::uint32_t r = 0; r < 3; ++r)
                    for (std::uint32_t c = 0; c < 3; ++c) B(r, c) = elem(rng.below(qv));
                elem db = det(B);
                if (db != 0 && in_power_coset(F, db, F.div(gp.c, detD), std::int64_t(i), gp.k))
                    break;
            }
            for (std::uint32_t r = 0; r < 3; ++r)
                for (std::uint32_t c = 0; c < 3; ++c) M(r + 1, c + 1) = B(r, c);
            REQUIRE(group_contains(gp, M));
            members.push_back(std::move(M));
        }
        for (int t = 0; t < 200; ++t) {
            const MatrixGF& a = members[rng.below(members.size())];
            const MatrixGF& b = members[rng.below(members.size())];
            CHECK(group_contains(gp, mul(a, b)));
            CHECK(group_contains(gp, inverse(a)));
        }
    }
}

TEST_CASE("charpoly membership worked examples") {
    FieldCtx F2(2, 1);
    GroupParams gl22 = make_group_params(2, content_x(F2), 1, 1, Poly(F2, {0, 1}));
    CHECK(is_group_charpoly(gl22, Poly(F2, {1, 1, 1})));
    CHECK(is_group_charpoly(gl22, Poly(F2, {1, 0, 1})));
    CHECK(!is_group_charpoly(gl22, Poly(F2, {0, 0, 1}))); // X^2 has zero constant term

    FieldCtx F3(3, 1);
    GroupParams sl23 = make_group_params(2, content_x(F3), 1, 0);
    CHECK(is_group_charpoly(sl23, Poly(F3, {1, 0, 1})));  // det 1
    CHECK(!is_group_charpoly(sl23, Poly(F3, {2, 1, 1}))); // det 2
}

TEST_CASE("degenerate eta = n group is the cyclic Frobenius group") {
    FieldCtx F3(3, 1);
    AdditivePoly h = AdditivePoly::from_constants(F3, 3, {1, 1}); // assoc X + 1
    GroupParams gp = make_group_params(1, h, 1, 0);
    CHECK(gp.degenerate());
    CHECK(group_order(gp) == matrix_order(gp.D));
    auto gl = all_gl(F3, 1);
    std::uint64_t cnt = 0;
    for (const auto& M : gl)
        if (group_contains(gp, M)) ++cnt;
    CHECK(cnt == group_order(gp));
    CHECK(is_group_charpoly(gp, Poly(F3, {1, 1}))); // charpoly of D itself
}

TEST_CASE("predicted delta image worked examples") {
    FieldCtx F3(3, 1);
    GroupParams g1 = make_group_params(2, content_x(F3), 1, 1, Poly(F3, {0, 1}));
    DeltaImage d1 = predicted_delta_image(g1);
    CHECK(d1.m == 1);
    CHECK(d1.elems.size() == 2); // Z_1 x F_3^x entirely

    GroupParams g2 = make_group_params(2, content_x(F3), 1, 0);
    DeltaImage d2 = predicted_delta_image(g2);
    CHECK(d2.elems == std::vector<std::pair<std::uint32_t, elem>>{{0, 1}});

    FieldCtx F5(5, 1);
    GroupParams g3 = make_group_params(2, content_x(F5), 1, 2, Poly(F5, {0, 1}));
    DeltaImage d3 = predicted_delta_image(g3);
    CHECK(d3.elems == std::vector<std::pair<std::uint32_t, elem>>{{0, 1}, {0, 4}});
}

TEST_CASE("delta closure is a subgroup") {
    FieldCtx F5(5, 1);
    DeltaImage img = delta_closure(F5, 4, {{1, 2}, {0, 4}});
    for (auto [r1, s1] : img.elems)
        for (auto [r2, s2] : img.elems) {
            CHECK(img.contains(std::uint32_t((r1 + r2) % img.m), F5.mul(s1, s2)));
        }
    CHECK(img.contains(0, 1));
}
