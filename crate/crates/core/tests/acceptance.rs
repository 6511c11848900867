//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the scope it covered. Randomized checks all derive from fixed ChaCha8
//! seeds so the suite is reproducible bit for bit.

use std::time::Instant;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skein_core::annulus::{
    angled_expansion, angled_on_empty_check, c_constant, hook_eigenvalue_closed, hook_expansion,
    meridian_eigenvalue, project_empty, Hook, Partition,
};
use skein_core::bmw2::{b2, bmw2_mul, f2, f2_checks, p1_plus, BMW2Element};
use skein_core::bracket::{cheb, cheb_log_identity_check, phi_map, BracketElement, ChebKind};
use skein_core::coeff::{beta, brace, brace_plus, delta, LaurentPoly, RatFunc};
use skein_core::sampling;
use skein_core::torus::{
    coefficient_collapse_check, det_pair, relation_rhs, word_normal_form, CertNode, Certificate,
    CurveClass, RewriteStrategy, SkeinElement, Word,
};

fn canonical_classes(bound: i64) -> Vec<CurveClass> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in -bound..=bound {
            if let Ok(x) = CurveClass::new(a, b) {
                if x.pair() == (a, b) {
                    out.push(x);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_01_presentation_relations() {
    let start = Instant::now();
    let classes = canonical_classes(4);
    let mut pairs = 0usize;
    for x in &classes {
        let dx = SkeinElement::generator(*x);
        for y in &classes {
            let dy = SkeinElement::generator(*y);
            assert_eq!(
                dx.commutator(&dy),
                relation_rhs(x, y),
                "commutator vs closed form at {x}, {y}"
            );
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "criterion 1 overran: {elapsed:?}");
    println!(
        "criterion 01 [presentation relations]: PASS ({pairs} canonical pairs, coords in [-4,4], {elapsed:?})"
    );
}

#[test]
fn criterion_02_pbw_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..200 {
        let wa = sampling::word(&mut rng, 3, 3);
        let wb = sampling::word(&mut rng, 3, 3);
        let wc = sampling::word(&mut rng, 3, 3);
        let p = SkeinElement::from_word(wa.clone(), RatFunc::one());
        let q = SkeinElement::from_word(wb.clone(), RatFunc::one());
        let r = SkeinElement::from_word(wc, RatFunc::one());
        assert_eq!(
            p.multiply(&q).multiply(&r),
            p.multiply(&q.multiply(&r)),
            "associativity failed at sample {i}"
        );
        // Strategy independence on the concatenated word.
        let mut gens = wa.gens().to_vec();
        gens.extend_from_slice(wb.gens());
        gens.reverse();
        let l = word_normal_form(gens.clone(), RatFunc::one(), RewriteStrategy::LeftmostFirst);
        let rgt = word_normal_form(gens, RatFunc::one(), RewriteStrategy::RightmostFirst);
        assert_eq!(l, rgt, "rewrite strategies diverged at sample {i}");
    }
    println!("criterion 02 [PBW / normal-form soundness]: PASS (200 seeded triples, zero failures)");
}

#[test]
fn criterion_03_lie_structure() {
    let classes = canonical_classes(2);
    let mut triples = 0usize;
    for x in &classes {
        let dx = SkeinElement::generator(*x);
        for y in &classes {
            let dy = SkeinElement::generator(*y);
            for z in &classes {
                let dz = SkeinElement::generator(*z);
                let jacobi = &(&dx.commutator(&dy).commutator(&dz)
                    + &dy.commutator(&dz).commutator(&dx))
                    + &dz.commutator(&dx).commutator(&dy);
                assert!(jacobi.is_zero(), "Jacobi failed at {x}, {y}, {z}");
                triples += 1;
            }
        }
    }
    // Closure: the bracket of generators lands in the span of generators.
    for x in canonical_classes(4) {
        let dx = SkeinElement::generator(x);
        for y in canonical_classes(4) {
            let c = dx.commutator(&SkeinElement::generator(y));
            assert!(c.max_word_len() <= 1, "bracket left the Lie span at {x}, {y}");
        }
    }
    println!(
        "criterion 03 [Lie structure]: PASS (Jacobi on {triples} triples in [-2,2]; closure on [-4,4] pairs)"
    );
}

/// A split edge: (node |det|, child |det|, node primitive, child primitive,
/// normalized node shape).
type SplitEdge = (i64, i64, bool, bool, (i64, i64, i64));

fn walk_edges(cert: &Certificate, out: &mut Vec<SplitEdge>) {
    if let CertNode::Split { children, .. } = &cert.node {
        let (nx, ny) = cert.normalized_pair();
        let nd = det_pair(nx, ny).abs();
        let node_prim = gcd_of(nx) == 1 || gcd_of(ny) == 1;
        let shape = (nx.0, nx.1, ny.1);
        for child in children {
            let cd = det_pair(child.x, child.y).abs();
            let child_prim = gcd_of(child.x) == 1 || gcd_of(child.y) == 1;
            out.push((nd, cd, node_prim, child_prim, shape));
            walk_edges(child, out);
        }
    }
}

fn gcd_of(x: (i64, i64)) -> i64 {
    num_integer::gcd(x.0, x.1)
}

#[test]
fn criterion_04_induction_replay() {
    let start = Instant::now();
    let mut pairs: Vec<((i64, i64), (i64, i64))> = Vec::new();
    // Every GL2 class with |det| <= 20 has a representative ((p,q),(0,r)).
    for det in 1..=20i64 {
        for r in 1..=det {
            if det % r != 0 {
                continue;
            }
            let p = det / r;
            for q in 0..p {
                pairs.push(((p, q), (0, r)));
            }
        }
    }
    // Raw coordinate sweep.
    for x0 in -5i64..=5 {
        for x1 in -5i64..=5 {
            for y0 in -5i64..=5 {
                for y1 in -5i64..=5 {
                    let (x, y) = ((x0, x1), (y0, y1));
                    if x == (0, 0) || y == (0, 0) {
                        continue;
                    }
                    let d = det_pair(x, y).abs();
                    if d == 0 || d > 20 {
                        continue;
                    }
                    pairs.push((x, y));
                }
            }
        }
    }
    // Large-coordinate GL2 translates of the class representatives.
    let g = [[7, 5], [4, 3]]; // det 1
    for det in 2..=20i64 {
        let x = (det, 1);
        let y = (0, 1);
        let tx = (g[0][0] * x.0 + g[0][1] * x.1, g[1][0] * x.0 + g[1][1] * x.1);
        let ty = (g[0][0] * y.0 + g[0][1] * y.1, g[1][0] * y.0 + g[1][1] * y.1);
        pairs.push((tx, ty));
    }

    let mut edges = Vec::new();
    let mut max_nodes = 0usize;
    for (x, y) in &pairs {
        let cert = Certificate::build(*x, *y)
            .unwrap_or_else(|e| panic!("build failed for {x:?}, {y:?}: {e}"));
        cert.validate()
            .unwrap_or_else(|e| panic!("validation failed for {x:?}, {y:?}: {e}"));
        let d = det_pair(*x, *y).abs();
        assert!(
            cert.depth() <= (2 * d.max(1)) as usize,
            "depth {} exceeds 2|det| for {x:?}, {y:?}",
            cert.depth()
        );
        max_nodes = max_nodes.max(cert.node_count());
        walk_edges(&cert, &mut edges);
    }

    // The well-founded measure of the inductive proof: every split child
    // strictly decreases |det|, or keeps it while moving from a nonprimitive
    // pair to a primitive one (the proof's primitive-case citation). A
    // literal all-six strict decrease is unattainable; see the exhaustive
    // search in the torus::cert tests for the ((2,0),(0,2)) obstruction.
    let mut ties = 0usize;
    for (nd, cd, node_prim, child_prim, shape) in &edges {
        assert!(cd <= nd, "child determinant grew: {cd} > {nd}");
        if cd == nd {
            ties += 1;
            assert!(
                !node_prim && *child_prim,
                "tie not covered by the primitive case at shape {shape:?}"
            );
            let (p, q, r) = *shape;
            let case2 = (p, q, r) == (2, 0, 2);
            let case1c = r == 2 && p >= 4 && q == p - 2;
            assert!(
                case2 || case1c,
                "tie outside the two fallthrough shapes: {shape:?}"
            );
        }
    }
    assert!(ties > 0, "expected the known fallthrough ties in a |det| <= 20 sweep");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "criterion 4 overran: {elapsed:?}");
    println!(
        "criterion 04 [induction replay]: PASS ({} pairs, {} split edges, largest tree {} nodes, {elapsed:?}); \
         NOTE: {} same-|det| edges occur exactly at the proof's primitive-case citations, \
         where strict decrease is provably impossible",
        pairs.len(),
        edges.len(),
        max_nodes,
        ties
    );
}

#[test]
fn criterion_05_coefficient_collapse() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0usize;
    while checked < 100 {
        let a = sampling::nonzero_pair(&mut rng, 4);
        let b = sampling::nonzero_pair(&mut rng, 4);
        let y = sampling::nonzero_pair(&mut rng, 4);
        if (a.0 + b.0, a.1 + b.1) == (0, 0) {
            continue;
        }
        assert!(
            coefficient_collapse_check(a, b, y),
            "collapse identities failed for a={a:?}, b={b:?}, y={y:?}"
        );
        checked += 1;
    }
    println!("criterion 05 [coefficient collapse]: PASS (100 seeded triples, coords in [-4,4])");
}

#[test]
fn criterion_06_annulus_action() {
    for n in 1..=8u32 {
        assert!(
            angled_on_empty_check(n).unwrap(),
            "angled relation on the empty link failed at n = {n}"
        );
        // Both sides match the parity-collapsed expansion exactly.
        let p1n = project_empty((1, n as i64)).unwrap();
        let lhs = &skein_core::annulus::act_meridian(&p1n) - &p1n.scale(&delta());
        assert_eq!(lhs, angled_expansion(n), "expansion mismatch at n = {n}");
        assert_eq!(
            project_empty((0, n as i64)).unwrap(),
            hook_expansion(n).unwrap(),
            "projection of the parallel family disagrees with the hook sum at n = {n}"
        );
    }
    println!("criterion 06 [annulus action]: PASS (angled relation and hook-sum cross-check, n = 1..8)");
}

#[test]
fn criterion_07_hook_eigenvalues() {
    let mut hooks = 0usize;
    for n in 1..=10u32 {
        for arm in 0..n {
            let h = Hook::new(arm, n - 1 - arm);
            assert_eq!(
                meridian_eigenvalue(&Partition::from_hook(h)),
                hook_eigenvalue_closed(h),
                "content sum vs closed form at {h}"
            );
            hooks += 1;
        }
    }
    assert_eq!(meridian_eigenvalue(&Partition::empty()), delta());
    println!("criterion 07 [meridian eigenvalues]: PASS ({hooks} hooks of size <= 10, plus the empty partition)");
}

#[test]
fn criterion_08_bmw2_suite() {
    // Symmetrizer properties.
    assert!(f2_checks(), "f2 defining properties failed");
    // p1+ idempotent.
    let p = p1_plus();
    assert_eq!(bmw2_mul(&p, &p), p);
    // sigma quadratic relation.
    let s = BMW2Element::sigma();
    let si = BMW2Element::sigma_inverse();
    assert_eq!(bmw2_mul(&s, &si), BMW2Element::one());
    let quadratic = &(&s - &si)
        - &(&BMW2Element::scalar(brace(1)) - &BMW2Element::h().scale(&brace(1)));
    assert!(quadratic.is_zero(), "Kauffman quadratic relation failed");
    // Associativity over the whole basis.
    let basis = [BMW2Element::one(), BMW2Element::sigma(), BMW2Element::h()];
    for a in &basis {
        for b in &basis {
            for c in &basis {
                assert_eq!(bmw2_mul(&bmw2_mul(a, b), c), bmw2_mul(a, &bmw2_mul(b, c)));
            }
        }
    }
    // B2 against the power-sum formula: exact once the subtracted scalar is
    // read inside the closure (the annular closure kills p1+ = 1 - delta^-1 h,
    // identifying delta^-1 h with 1).
    let inv = brace_plus(1).inverse().unwrap();
    let v_plus = &RatFunc::v() + &RatFunc::monomial(0, -1);
    let dinv = delta().inverse().unwrap();
    let closure_unit = BMW2Element::h().scale(&dinv);
    let formula = &(&s + &si).scale(&inv) - &closure_unit.scale(&(&v_plus * &inv));
    assert_eq!(b2(), formula, "B2 does not match the angled power-sum formula");
    let naive = &(&s + &si).scale(&inv) - &BMW2Element::scalar((&v_plus * &inv).clone());
    let discrepancy = &naive - &b2();
    assert_eq!(
        discrepancy,
        p1_plus().scale(&-&(&v_plus * &inv)),
        "B2 vs literal display discrepancy is not the closure-kernel multiple"
    );
    // B2 - (2 f2 - 1) is a pure-h multiple.
    let handoff = &(&b2() - &f2().scale(&RatFunc::from_int(2))) + &BMW2Element::one();
    assert!(handoff.is_h_multiple(), "D2 handoff left non-h terms");
    println!(
        "criterion 08 [BMW2 suite]: PASS (f2 and p1+ idempotents, quadratic relation, associativity, \
         B2 formula exact modulo the closure kernel, pure-h handoff)"
    );
}

#[test]
fn criterion_09_bracket_comparison() {
    // Homomorphism check on seeded random pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..100 {
        let p = sampling::skein_element(&mut rng, 2, 2, 3);
        let q = sampling::skein_element(&mut rng, 2, 2, 3);
        let lhs = phi_map(&p.multiply(&q)).unwrap();
        let rhs = phi_map(&p).unwrap().multiply(&phi_map(&q).unwrap());
        assert_eq!(lhs, rhs, "phi failed to be multiplicative at sample {i}");
    }
    // Commutator sweep in the bracket algebra.
    let classes = canonical_classes(3);
    for x in &classes {
        for y in &classes {
            let lhs = BracketElement::generator(*x).commutator(&BracketElement::generator(*y));
            let d = skein_core::torus::det(x, y);
            let mut rhs = BracketElement::zero();
            if let Ok(g) = CurveClass::new(x.a() + y.a(), x.b() + y.b()) {
                rhs = &rhs + &BracketElement::generator(g).scale(&brace(d));
            } else {
                rhs = &rhs + &BracketElement::unit((&brace(d) * &RatFunc::from_int(2)).clone());
            }
            if let Ok(g) = CurveClass::new(x.a() - y.a(), x.b() - y.b()) {
                rhs = &rhs - &BracketElement::generator(g).scale(&brace(d));
            } else {
                rhs = &rhs - &BracketElement::unit((&brace(d) * &RatFunc::from_int(2)).clone());
            }
            assert_eq!(lhs, rhs, "bracket commutator law failed at {x}, {y}");
        }
    }
    // Chebyshev verifications.
    assert!(cheb_log_identity_check(12), "log identity failed at order 12");
    for n in 0..=10i64 {
        let t = cheb(n as u32, ChebKind::T).eval_symmetric();
        assert_eq!(
            t,
            &LaurentPoly::s_pow(n) + &LaurentPoly::s_pow(-n),
            "T functional equation failed at {n}"
        );
        let s = cheb(n as u32, ChebKind::S).eval_symmetric();
        let brace_ratio = brace(n + 1)
            .checked_div(&brace(1))
            .unwrap();
        assert_eq!(
            RatFunc::from_poly(s),
            brace_ratio,
            "S functional equation failed at {n}"
        );
    }
    // Scalar specialization.
    assert_eq!(
        delta().specialize_bracket().unwrap(),
        -&(&RatFunc::monomial(2, 0) + &RatFunc::monomial(-2, 0))
    );
    println!(
        "criterion 09 [bracket comparison]: PASS (100 homomorphism samples, commutator sweep in [-3,3], \
         Chebyshev identities to order 12)"
    );
}

#[test]
fn criterion_10_scalar_identities() {
    let s = RatFunc::s();
    let si = RatFunc::monomial(-1, 0);
    for n in 1..=8 {
        let b = beta(n, false).unwrap();
        let bb = beta(n, true).unwrap();
        let lhs = &s - &(&si * &b);
        assert_eq!(lhs, &si - &(&s * &bb), "first ring identity failed at n = {n}");
        let b1 = beta(n + 1, false).unwrap();
        let bb1 = beta(n + 1, true).unwrap();
        assert_eq!(
            &(&bb1 - &b1) * &lhs,
            -brace(1),
            "second ring identity failed at n = {n}"
        );
    }
    for k in 1..=10u32 {
        let expect = if k % 2 == 0 {
            -RatFunc::one()
        } else {
            RatFunc::zero()
        };
        assert_eq!(c_constant(k).unwrap(), expect, "c_k parity failed at k = {k}");
    }
    // Spot values from the eigenvalue chain.
    assert_eq!(
        delta()
            .eval(
                &BigRational::from_integer(2.into()),
                &BigRational::from_integer(3.into())
            )
            .unwrap(),
        BigRational::new((-7).into(), 9.into())
    );
    println!("criterion 10 [scalar identities]: PASS (ring lemma n = 1..8, c_k parity k = 1..10)");
}

#[test]
fn no_all_strict_split_exists_for_the_det4_class() {
    // Documents why criterion 4 uses the lexicographic measure: for the
    // normalized pair ((2,0),(0,2)) every decomposition x = a + b leaves one
    // of the six child pairs at |det| = 4. Bounds on a are implied by
    // |d(y,a)| = 2|a0| < 4 and |d(a,b)| = 2|a1| < 4, so the scan is complete.
    let x = (2i64, 0i64);
    let y = (0i64, 2i64);
    for a0 in -4i64..=4 {
        for a1 in -4i64..=4 {
            let a = (a0, a1);
            let b = (x.0 - a0, x.1 - a1);
            if a == (0, 0) || b == (0, 0) || det_pair(a, b) == 0 {
                continue;
            }
            let children = skein_core::torus::split_child_pairs(x, y, a, b);
            assert!(
                children.iter().any(|&(u, w)| det_pair(u, w).abs() >= 4),
                "found an all-strict split with a = {a:?}; the certificate measure can be tightened"
            );
        }
    }
    println!("obstruction witness: PASS (no all-strict split of ((2,0),(0,2)) exists)");
}

#[test]
fn acceptance_smoke_word_display() {
    // Keep the acceptance target self-contained: a displayable normal form.
    let x = CurveClass::new(1, 0).unwrap();
    let y = CurveClass::new(0, 1).unwrap();
    let p = SkeinElement::generator(x).multiply(&SkeinElement::generator(y));
    assert_eq!(
        p.coeff(&Word::from_gens(vec![x, y])),
        RatFunc::one()
    );
    assert!(p.to_string().contains("D[0,1]*D[1,0]"));
}
