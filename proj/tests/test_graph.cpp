#include "lspace/graph.hpp"

#include "lspace/gluing.hpp"
#include "support.hpp"

#include <doctest.h>

#include <memory>
#include <vector>

using namespace lspace;
using testsupport::Rng;

namespace {

const Rational inf = Rational::infinity();

TreeManifold example1() {
    TreeManifold t;
    t.slopes = {Rational(1, 3), Rational(-2, 5), Rational(3, 2)};
    t.daughters = {LInterval::bracket(Rational(-100), inf),
                   LInterval::bracket(Rational(2, 5), Rational(-20))};
    return t;
}

TreeManifold example2() {
    TreeManifold t;
    t.slopes = {Rational(1, 3)};
    t.daughters = {LInterval::bracket(Rational(-1, 3), Rational(0))};
    return t;
}

TreeManifold example3() {
    TreeManifold t;
    t.slopes = {Rational(1, 3), Rational(-2, 5), Rational(3, 2)};
    t.daughters = {LInterval::bracket(Rational(-100), inf),
                   LInterval::bracket(Rational(-1, 3), Rational(0))};
    return t;
}

TreeManifold with_subtree(TreeManifold root, GluingMatrix m, TreeManifold sub) {
    root.daughters.push_back(Subtree{m, std::make_shared<const TreeManifold>(std::move(sub))});
    return root;
}

}  // namespace

TEST_CASE("daughter_intervals") {
    TreeManifold leafy;
    leafy.daughters = {LInterval::bracket(Rational(-100), inf)};
    CHECK(daughter_intervals(leafy)[0] == LInterval::bracket(Rational(-100), inf));

    TreeManifold t;
    t.slopes = {Rational(5, 7)};
    t = with_subtree(std::move(t), GluingMatrix::identity(), testsupport::nbar_tree());
    CHECK(daughter_intervals(t)[0] == LInterval::bracket(Rational(0), Rational(0)));

    TreeManifold s;
    s = with_subtree(std::move(s), GluingMatrix::translation(1), testsupport::nbar_tree());
    CHECK(daughter_intervals(s)[0] == LInterval::bracket(Rational(1), Rational(1)));
}

TEST_CASE("worked classifications") {
    Classification c1 = classify(example1());
    CHECK(c1.verdict == Verdict::FS3);
    CHECK(c1.i_minus_infinity.empty());
    CHECK(c1.i_plus_infinity == std::vector<size_t>{0});
    CHECK(c1.endpoints->y_minus == inf);
    CHECK(c1.endpoints->y_plus == Rational(96));
    CHECK(c1.endpoints->k_plus == 1);

    Classification c2 = classify(example2());
    CHECK(c2.verdict == Verdict::NFS2);
    CHECK(c2.special_daughter == size_t{0});
    CHECK(c2.endpoints->y_minus == Rational(0));
    CHECK(c2.endpoints->y_plus == Rational(0));
    CHECK(c2.endpoints->k_minus == 1);
    CHECK(c2.endpoints->k_plus == 1);

    CHECK(classify(example3()).verdict == Verdict::Empty);
}

TEST_CASE("worked intervals") {
    CHECK(lspace_interval(example1()) == LInterval::bracket(inf, Rational(96)));
    CHECK(lspace_interval(example2()) == LInterval::point(Rational(0)));
    CHECK(lspace_interval(example3()) == LInterval::empty());
    CHECK(lspace_interval(testsupport::nbar_tree()) ==
          LInterval::bracket(Rational(0), Rational(0)));
    CHECK(lspace_interval(testsupport::solid_torus_tree(Rational(2, 3))) ==
          LInterval::bracket(Rational(-2, 3), Rational(-2, 3)));
}

TEST_CASE("non-orientable base") {
    TreeManifold bare;
    bare.base = Base::NonOrientable;
    bare.slopes = {Rational(1, 2), Rational(1, 3)};
    CHECK(classify(bare).verdict == Verdict::FS0);
    CHECK(lspace_interval(bare) == LInterval::bracket(inf, inf));
    CHECK(rational_longitude(bare) == inf);
    CHECK_FALSE(is_lspace_filling(bare, inf));
    CHECK(is_lspace_filling(bare, Rational(7, 3)));

    // A daughter whose interval misses an inf-interior neighborhood kills it.
    TreeManifold blocked = bare;
    blocked.daughters = {LInterval::bracket(Rational(0), Rational(1))};
    CHECK(classify(blocked).verdict == Verdict::Empty);

    TreeManifold fine = bare;
    fine.daughters = {LInterval::bracket(Rational(1), Rational(0))};
    CHECK(classify(fine).verdict == Verdict::FS0);
}

TEST_CASE("y_endpoints mirrors the worked data") {
    std::vector<std::pair<Rational, Rational>> pairs{{Rational(-100), inf},
                                                     {Rational(2, 5), Rational(-20)}};
    Endpoints e = y_endpoints(example1().slopes, pairs);
    CHECK(e.y_minus == inf);
    CHECK(e.k_minus == 1);
    CHECK(e.y_plus == Rational(96));
    CHECK(e.k_plus == 1);

    std::vector<std::pair<Rational, Rational>> p2{{Rational(-1, 3), Rational(0)}};
    Endpoints e2 = y_endpoints(example2().slopes, p2);
    CHECK(e2.y_minus == Rational(0));
    CHECK(e2.y_plus == Rational(0));

    std::vector<Rational> lonely{Rational(2, 3)};
    CHECK_THROWS_AS(y_endpoints(lonely, {}), std::domain_error);
    std::vector<Rational> bad{inf};
    CHECK_THROWS_AS(y_endpoints(bad, p2), std::domain_error);
}

TEST_CASE("FS1 and FS2 shapes") {
    TreeManifold fs1;
    fs1.slopes = {Rational(4, 7)};
    fs1.daughters = {LInterval::bracket(inf, inf),
                     LInterval::bracket(Rational(3), Rational(-3))};
    Classification c = classify(fs1);
    CHECK(c.verdict == Verdict::FS1);
    CHECK(c.special_daughter == size_t{0});
    CHECK(lspace_interval(fs1) == LInterval::bracket(inf, inf));

    TreeManifold fs2;
    fs2.slopes = {Rational(1, 3)};
    fs2.daughters = {LInterval::bracket(Rational(-1, 3), Rational(1, 2))};
    Classification c2 = classify(fs2);
    CHECK(c2.verdict == Verdict::FS2);
    CHECK(c2.endpoints->y_minus < c2.endpoints->y_plus);
    CHECK(lspace_interval(fs2).is_closed_finite_arc());
}

TEST_CASE("NFS1, NFS3, NFS4 shapes") {
    TreeManifold nfs1;
    nfs1.slopes = {Rational(1, 3), Rational(2)};
    nfs1.daughters = {LInterval::point(Rational(5, 3))};
    Classification c = classify(nfs1);  // 1/3 + 2 + 5/3 = 4 integral
    CHECK(c.verdict == Verdict::NFS1);
    CHECK(lspace_interval(nfs1) == LInterval::point(Rational(-4)));

    TreeManifold nfs1_no = nfs1;
    nfs1_no.daughters = {LInterval::point(Rational(1, 2))};
    CHECK(classify(nfs1_no).verdict == Verdict::Empty);

    TreeManifold nfs1_int;
    nfs1_int.slopes = {Rational(2), Rational(-1)};
    nfs1_int.daughters = {LInterval::point(Rational(5, 7))};
    CHECK(classify(nfs1_int).verdict == Verdict::NFS1);  // all slopes integral
    CHECK(lspace_interval(nfs1_int) == LInterval::point(Rational(-12, 7)));

    TreeManifold nfs3;
    nfs3.slopes = {Rational(9, 4)};
    nfs3.daughters = {LInterval::bracket(inf, Rational(2)),
                      LInterval::bracket(Rational(-5), inf)};
    Classification c3 = classify(nfs3);
    CHECK(c3.verdict == Verdict::NFS3);
    CHECK(lspace_interval(nfs3) == LInterval::point(inf));

    // Two half-infinite daughters on the same side also leave the fiber
    // filling as the only L-space: detaching either daughter leaves a union
    // of interiors with inf on both boundaries.
    TreeManifold same_side;
    same_side.daughters = {LInterval::bracket(inf, Rational(1)),
                           LInterval::bracket(inf, Rational(1))};
    CHECK(classify(same_side).verdict == Verdict::NFS3);
    CHECK(lspace_interval(same_side) == LInterval::point(inf));
    // Cross-check through the two-piece decomposition: filling the root at
    // an integer m turns it into T^2 x I with slope through-map z -> -z - m,
    // and the cover test then decides the closed union.
    for (int m = -4; m <= 4; ++m) {
        LInterval left = mobius_push(LInterval::bracket(inf, Rational(1)),
                                     GluingMatrix{-1, Integer(-m), 0, 1});
        bool closed_lspace = covers_circle(
            interior(left), interior(LInterval::bracket(inf, Rational(1))));
        CHECK(closed_lspace == is_lspace_filling(same_side, Rational(m)));
    }

    TreeManifold nfs4;
    nfs4.slopes = {Rational(9, 4), Rational(-1, 6)};
    nfs4.daughters = {LInterval::point(inf), LInterval::bracket(Rational(1), Rational(-1))};
    Classification c4 = classify(nfs4);
    CHECK(c4.verdict == Verdict::NFS4);
    CHECK(lspace_interval(nfs4) == LInterval::point(inf));

    // An empty daughter forces Empty and is flagged.
    TreeManifold dead;
    dead.slopes = {Rational(1, 2), Rational(1, 3)};
    dead.daughters = {LInterval::empty()};
    Classification cd = classify(dead);
    CHECK(cd.verdict == Verdict::Empty);
    CHECK(!cd.note.empty());
}

TEST_CASE("rational_longitude") {
    CHECK(rational_longitude(testsupport::nbar_tree()) == Rational(0));

    TreeManifold t;
    t.slopes = {Rational(1, 3)};
    t = with_subtree(std::move(t), GluingMatrix::identity(), testsupport::nbar_tree());
    CHECK(rational_longitude(t) == Rational(-1, 3));

    CHECK_THROWS_AS(rational_longitude(example2()), LongitudeUnknown);
}

TEST_CASE("is_lspace_filling") {
    CHECK(is_lspace_filling(example1(), inf));
    CHECK(is_lspace_filling(example1(), Rational(96)));
    CHECK_FALSE(is_lspace_filling(example1(), Rational(97)));
    CHECK(is_lspace_filling(example2(), Rational(0)));
    CHECK_FALSE(is_lspace_filling(example2(), Rational(1)));
    CHECK_FALSE(is_lspace_filling(testsupport::solid_torus_tree(Rational(2, 3)),
                                  Rational(-2, 3)));
}

TEST_CASE("foliation_sets") {
    FoliationReport nbar = foliation_sets(testsupport::nbar_tree());
    CHECK(nbar.foliation_slopes == ClosedSet::arc(Rational(0), Rational(0)));
    CHECK(nbar.infinity_is_lspace);
    CHECK(nbar.infinity_reducible);  // two nontrivial lens summands

    FoliationReport r2 = foliation_sets(example2());
    CHECK(r2.foliation_slopes.is_whole());

    FoliationReport r1 = foliation_sets(example1());
    CHECK(r1.foliation_slopes == ClosedSet::arc(Rational(96), inf));
    CHECK(r1.infinity_is_lspace);
    // Three lens summands (two nontrivial) plus two daughter fillings.
    CHECK(r1.infinity_summands.size() == 5);
}

TEST_CASE("generalized solid torus detection") {
    GstResult nbar = is_generalized_solid_torus(testsupport::nbar_tree());
    CHECK(nbar.is_gst);
    CHECK(*nbar.longitude == Rational(0));
    CHECK(nbar.structural == true);

    CHECK_FALSE(is_generalized_solid_torus(example2()).is_gst);
    CHECK_FALSE(is_generalized_solid_torus(example1()).is_gst);

    GstResult st = is_generalized_solid_torus(testsupport::solid_torus_tree(Rational(2, 3)));
    CHECK(st.is_gst);
    CHECK(*st.longitude == Rational(-2, 3));

    // Interval is a co-point but the longitude is unknowable.
    TreeManifold leafy;
    leafy.slopes = {Rational(1, 2), Rational(1, 2)};
    CHECK(is_generalized_solid_torus(leafy).is_gst);  // co-point at -1 = longitude
    TreeManifold blocked = leafy;
    blocked.daughters = {LInterval::bracket(Rational(1), Rational(-1))};
    LInterval bi = lspace_interval(blocked);
    if (bi.is_copoint())
        CHECK_THROWS_AS(is_generalized_solid_torus(blocked), LongitudeUnknown);
}

TEST_CASE("foliation report stays consistent on random trees") {
    // foliation_sets itself asserts that the connected-sum rule at slope inf
    // matches interval membership; this sweep exercises that assertion and
    // the complement relation between F(Y) and the open interval.
    Rng rng(409);
    for (int i = 0; i < 1500; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        FoliationReport r = foliation_sets(t);
        OpenSet open = interior(r.lspace);
        for (int j = 0; j < 6; ++j) {
            Rational x = testsupport::rand_slope(rng, 12);
            CHECK(r.foliation_slopes.contains(x) == !open.contains(x));
        }
        CHECK(r.infinity_summands.size() == t.slopes.size() + t.daughters.size());
    }
}

TEST_CASE("structural recognizer agrees with the interval test on chains") {
    // Chains of Seifert nodes with subtree daughters keep the longitude
    // computable, so the structural iterated-cable recognizer runs whenever
    // the longitude is finite; is_generalized_solid_torus throws on any
    // disagreement with the interval test.
    Rng rng(408);
    int gst_count = 0, ran = 0;
    for (int i = 0; i < 1500; ++i) {
        TreeManifold current;
        if (rng.chance(50)) current.slopes.push_back(testsupport::rand_noninteger(rng, 6, 6));
        int depth = rng.range(0, 3);
        for (int d = 0; d < depth; ++d) {
            TreeManifold next;
            next.base = rng.chance(10) ? Base::NonOrientable : Base::Orientable;
            for (int s = 0, n = rng.range(0, 2); s < n; ++s)
                next.slopes.push_back(testsupport::rand_finite(rng, 6, 6));
            if (current.is_solid_torus()) {
                current.slopes.push_back(Rational(1, 2));
                current.slopes.push_back(Rational(1, 3));
            }
            next.daughters.push_back(Subtree{
                testsupport::rand_unimodular(rng),
                std::make_shared<const TreeManifold>(std::move(current))});
            current = std::move(next);
        }
        GstResult r = is_generalized_solid_torus(current);  // must not throw
        gst_count += r.is_gst;
        ran += r.structural.has_value();
        if (r.is_gst) CHECK(r.interval == LInterval::bracket(*r.longitude, *r.longitude));
    }
    CHECK(ran > 500);
    CHECK(gst_count > 0);
}

// --- property suites -------------------------------------------------------

TEST_CASE("classifier fires exactly one clause") {
    Rng rng(401);
    int nontrivial = 0;
    for (int i = 0; i < 10000; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 3));
        ClauseFlags f = evaluate_clauses(t);
        Classification c = classify(t);
        if (f.solid_torus) {
            CHECK(c.verdict == Verdict::SolidTorus);
            continue;
        }
        CHECK(f.count_fs_nfs() <= 1);
        switch (c.verdict) {
            case Verdict::FS0: CHECK(f.fs0); break;
            case Verdict::FS1: CHECK(f.fs1); break;
            case Verdict::FS2: CHECK(f.fs2); break;
            case Verdict::FS3: CHECK(f.fs3); break;
            case Verdict::NFS1: CHECK(f.nfs1); break;
            case Verdict::NFS2: CHECK(f.nfs2); break;
            case Verdict::NFS3: CHECK(f.nfs3); break;
            case Verdict::NFS4: CHECK(f.nfs4); break;
            case Verdict::Empty: CHECK(f.count_fs_nfs() == 0); break;
            case Verdict::SolidTorus: CHECK(false); break;
        }
        if (c.verdict != Verdict::Empty) ++nontrivial;
    }
    CHECK(nontrivial > 1000);
}

TEST_CASE("k witnesses are the denominators of finite endpoints") {
    Rng rng(402);
    int applicable = 0;
    for (int i = 0; i < 20000 && applicable < 1200; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        if (t.is_solid_torus()) continue;
        Classification c = classify(t);
        if (!c.endpoints) continue;
        if (c.endpoints->y_minus.is_infinite() || c.endpoints->y_plus.is_infinite()) continue;
        ++applicable;
        CHECK(c.endpoints->k_minus == c.endpoints->y_minus.den());
        CHECK(c.endpoints->k_plus == c.endpoints->y_plus.den());
    }
    CHECK(applicable >= 1000);
}

TEST_CASE("equal finite endpoints force an integer value at k = 1") {
    Rng rng(403);
    int applicable = 0;
    auto check_one = [&](const TreeManifold& t) {
        if (t.is_solid_torus()) return;
        size_t nonint = 0;
        for (const Rational& y : t.slopes) nonint += !y.is_integer();
        size_t integral_ends = 0;
        for (const LInterval& d : daughter_intervals(t)) {
            if (!d.is_bracket() && !d.is_point()) return;
            const Rational& l = d.is_point() ? d.value() : d.left();
            const Rational& r = d.is_point() ? d.value() : d.right();
            integral_ends += !l.is_infinite() && l.is_integer();
            integral_ends += !r.is_infinite() && r.is_integer();
        }
        if (nonint + integral_ends == 0) return;
        Classification c = classify(t);
        if (!c.endpoints) return;
        const Endpoints& e = *c.endpoints;
        if (e.y_minus.is_infinite() || e.y_plus.is_infinite() || e.y_minus != e.y_plus)
            return;
        ++applicable;
        CHECK(e.y_minus.is_integer());
        CHECK(e.k_minus == 1);
        CHECK(e.k_plus == 1);
    };
    // Planted family with an isolated filling: slopes (u), daughter [-u, 0].
    for (int i = 0; i < 700; ++i) {
        Rational u = testsupport::rand_noninteger(rng, 9, 8);
        if (u < Rational(0)) u = -u;
        TreeManifold t;
        t.slopes = {u};
        t.daughters = {LInterval::bracket(-u, Rational(0))};
        check_one(testsupport::reparameterize(rng, t));
    }
    // Planted NFS1 family: integer slopes plus an integer point daughter.
    for (int i = 0; i < 700; ++i) {
        TreeManifold t;
        t.slopes = {Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3))};
        t.daughters = {LInterval::point(Rational(rng.range(-9, 9)))};
        check_one(t);
    }
    for (int i = 0; i < 1500; ++i) check_one(testsupport::rand_tree(rng, rng.range(0, 2)));
    CHECK(applicable >= 1000);
}

TEST_CASE("strict bound on y- against the longitude sums") {
    Rng rng(404);
    int applicable = 0;
    for (int i = 0; i < 20000 && applicable < 1200; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        size_t n_g = t.daughters.size();
        size_t nonint = 0;
        for (const Rational& y : t.slopes) nonint += !y.is_integer();
        if (!(n_g >= 2 || (n_g == 1 && nonint >= 2))) continue;

        std::vector<LInterval> ds = daughter_intervals(t);
        bool finite_data = true;
        Rational plus_sum(0), minus_sum(0);
        for (const LInterval& d : ds) {
            if (d.is_empty()) { finite_data = false; break; }
            const Rational& l = d.is_point() ? d.value() : d.left();
            const Rational& r = d.is_point() ? d.value() : d.right();
            if (l.is_infinite() || r.is_infinite()) { finite_data = false; break; }
            plus_sum = plus_sum + r;
            minus_sum = minus_sum + l;
        }
        if (!finite_data) continue;

        std::vector<std::pair<Rational, Rational>> pairs;
        for (const LInterval& d : ds) {
            if (d.is_point())
                pairs.emplace_back(d.value(), d.value());
            else
                pairs.emplace_back(d.left(), d.right());
        }
        Endpoints e = y_endpoints(t.slopes, pairs);
        Rational slope_sum(0);
        for (const Rational& y : t.slopes) slope_sum = slope_sum + y;
        ++applicable;
        CHECK(e.y_minus > -slope_sum - plus_sum);
        CHECK(e.y_plus < -slope_sum - minus_sum);
    }
    CHECK(applicable >= 1000);
}

TEST_CASE("reparameterization invariance lifts to trees") {
    Rng rng(405);
    for (int i = 0; i < 1200; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        TreeManifold shifted = testsupport::reparameterize(rng, t);
        CHECK(lspace_interval(t) == lspace_interval(shifted));
        CHECK(classify(t).verdict == classify(shifted).verdict);
    }
}

TEST_CASE("orientation duality lifts to trees") {
    Rng rng(406);
    const GluingMatrix neg = GluingMatrix::negation();
    for (int i = 0; i < 1200; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        LInterval expected = mobius_push(lspace_interval(t), neg);
        CHECK(lspace_interval(testsupport::negate_tree(t)) == expected);
    }
}

TEST_CASE("recursion unrolls to the gluing decision on the last daughter") {
    Rng rng(407);
    int checked = 0;
    for (int i = 0; i < 5000 && checked < 1500; ++i) {
        TreeManifold t = testsupport::rand_tree(rng, rng.range(0, 2));
        if (t.daughters.empty()) continue;

        Rational y = rng.chance(50) ? testsupport::rand_finite(rng, 9, 8)
                                    : Rational(rng.range(-6, 6));
        LInterval whole = lspace_interval(t);
        if (rng.chance(25) && whole.is_bracket() && !whole.left().is_infinite())
            y = whole.left();

        TreeManifold hat = testsupport::detach_last_daughter(t, y);
        LInterval last = daughter_intervals(t).back();

        bool expected;
        if (hat.is_solid_torus()) {
            // The union with a solid torus is a Dehn filling at its disk
            // slope, decided by plain membership in the daughter interval.
            Rational disk = rational_longitude(hat);
            expected = last.contains(disk);
        } else {
            expected = covers_circle(interior(last), interior(lspace_interval(hat)));
        }
        CHECK(expected == is_lspace_filling(t, y));
        ++checked;
    }
    CHECK(checked >= 1500);
}
