//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks are exact.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quandle_monodromy::braid::{braid_eq, full_twist, Braid, Cord, LCord};
use quandle_monodromy::catalog::{resolve_finite, standard_names};
use quandle_monodromy::group_quandles::{build_genus2_quotient, build_transposition_quandle, PermutationAugmented};
use quandle_monodromy::homology::{boundary, homology, smith_normal_form, IntMatrix, Theory};
use quandle_monodromy::linear::{homology_dehn_quandle, homology_quandle, slope_to_homology, RingSpec};
use quandle_monodromy::monodromy::{
    coloring_invariant, counting_invariant, permutation_product, twist_product, validate_braid_monodromy,
    validate_lefschetz, Base, BraidMonodromy, CoverMonodromy, LefschetzMonodromy, MonodromyTuple, OrbitOptions,
};
use quandle_monodromy::torus::{
    slope_op, slope_op_inv, slopes_up_to, twist_matrix, SL2Matrix, SignedSlope, Slope, TorusDehnQuandle,
    CONJUGATION_EXPONENT,
};
use quandle_monodromy::{check_axioms, check_axioms_on, find_isomorphism, Permutation, Quandle};

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: quandle_monodromy::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// 1 ---------------------------------------------------------------------

fn axiom_suite() -> Outcome {
    let names = standard_names();
    for name in &names {
        let q = lib(resolve_finite(name))?.quandle;
        ensure(q.len() <= 30, || format!("{name} has {} elements", q.len()))?;
        let report = check_axioms(&q);
        ensure(report.passed, || format!("{name}: {:?}", report.violations.first()))?;
    }

    // (x ▷ y) ▷ z = x + ⟨x,y⟩y + ⟨x,z⟩z + ⟨x,y⟩⟨y,z⟩z over (Z/3)², and the
    // same for (x ▷ z) ▷ (y ▷ z).
    let hq = lib(homology_quandle(1, RingSpec::modulo(3)))?;
    let pair = |a: [i64; 2], b: [i64; 2]| (a[0] * b[1] - a[1] * b[0]).rem_euclid(3);
    let vectors: Vec<[i64; 2]> = (0..9).map(|i| [i / 3, i % 3]).collect();
    let big = |a: [i64; 2]| vec![BigInt::from(a[0]), BigInt::from(a[1])];
    let small = |v: Vec<BigInt>| [v[0].to_i64().unwrap(), v[1].to_i64().unwrap()];
    let mut triples = 0;
    for &x in &vectors {
        for &y in &vectors {
            for &z in &vectors {
                let (xy, xz, yz) = (pair(x, y), pair(x, z), pair(y, z));
                let want: [i64; 2] =
                    std::array::from_fn(|i| (x[i] + xy * y[i] + xz * z[i] + xy * yz * z[i]).rem_euclid(3));
                let lhs = small(hq.rhd(&hq.rhd(&big(x), &big(y)), &big(z)));
                let rhs = small(hq.rhd(&hq.rhd(&big(x), &big(z)), &hq.rhd(&big(y), &big(z))));
                ensure(lhs == want && rhs == want, || format!("x={x:?} y={y:?} z={z:?}"))?;
                triples += 1;
            }
        }
    }
    Ok(format!("{} catalog quandles, {triples} triples over (Z/3)^2", names.len()))
}

// 2 ---------------------------------------------------------------------

/// The printed formula evaluated in machine integers, then normalised.
fn printed_slope_op(p: (i64, i64), q: (i64, i64)) -> (i64, i64) {
    let ((u, v), (x, y)) = (p, q);
    normalise(u + u * x * y - v * x * x, v - v * x * y + u * y * y)
}

fn normalise(x: i64, y: i64) -> (i64, i64) {
    if x < 0 || (x == 0 && y < 0) {
        (-x, -y)
    } else {
        (x, y)
    }
}

fn printed_matrix(x: i64, y: i64) -> [[i64; 2]; 2] {
    [[1 - x * y, x * x], [-y * y, 1 + x * y]]
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

fn mat_inv(a: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

fn small_coords(s: &Slope) -> Option<(i64, i64)> {
    s.coords().map(|(x, y)| (x.to_i64().unwrap(), y.to_i64().unwrap()))
}

fn to_small(m: &SL2Matrix) -> [[i64; 2]; 2] {
    m.rows().map(|r| r.map(|e| e.to_i64().unwrap()))
}

fn torus_dehn() -> Outcome {
    let mut sample = slopes_up_to(8);
    sample.push(Slope::Contractible);
    let report = check_axioms_on(&TorusDehnQuandle, &sample);
    ensure(report.passed, || format!("axioms: {:?}", report.violations.first()))?;

    let eps = CONJUGATION_EXPONENT;
    ensure(eps == 1 || eps == -1, || format!("ε = {eps}"))?;
    let pow = |m: [[i64; 2]; 2], e: i32| if e == 1 { m } else { mat_inv(m) };
    let mut pairs = 0;
    for p in &sample {
        for q in &sample {
            let r = slope_op(p, q);
            ensure(slope_op_inv(&r, q) == *p, || format!("{p} ▷ {q} ⊵ {q}"))?;
            let (mp, mq, mr) = (to_small(&twist_matrix(p)), to_small(&twist_matrix(q)), to_small(&twist_matrix(&r)));
            ensure(mat_mul(mat_mul(pow(mq, eps), mp), pow(mq, -eps)) == mr, || format!("conjugation at {p}, {q}"))?;
            if let (Some(a), Some(b)) = (small_coords(p), small_coords(q)) {
                ensure(Some(printed_slope_op(a, b)) == small_coords(&r), || format!("formula at {p}, {q}"))?;
                ensure(mp == printed_matrix(a.0, a.1), || format!("matrix of {p}"))?;
            }
            pairs += 1;
        }
        let i = Slope::Contractible;
        ensure(slope_op(p, &i) == *p, || format!("{p} ▷ I"))?;
        ensure(slope_op(&i, p) == i, || format!("I ▷ {p}"))?;
        ensure(slope_op_inv(p, &i) == *p && slope_op_inv(&i, p) == i, || format!("⊵ with I at {p}"))?;
    }
    Ok(format!("{} elements, {pairs} pairs, ε = {eps}", sample.len()))
}

// 3 ---------------------------------------------------------------------

fn genus2_quotient() -> Outcome {
    let q = lib(build_genus2_quotient())?.quandle;
    ensure(q.len() == 17, || format!("{} elements", q.len()))?;
    ensure(check_axioms(&q).passed, || "axioms fail".into())?;
    let trivial = q.right_trivial_elements();
    ensure(trivial.len() == 2, || format!("{} right-trivial elements", trivial.len()))?;
    let rest: Vec<usize> = (0..q.len()).filter(|x| !trivial.contains(x)).collect();
    for &a in &rest {
        for &b in &rest {
            ensure(rest.contains(&q.op(a, b)) && rest.contains(&q.op_inv(a, b)), || "15 do not close".into())?;
        }
    }
    let sub = lib(q.restrict(&rest))?;
    let t6 = lib(build_transposition_quandle(6))?.quandle;
    let iso = find_isomorphism(&sub, &t6).ok_or("no isomorphism with T6")?;
    ensure(iso.is_hom(&sub, &t6) && iso.is_bijective(t6.len()), || "bad isomorphism".into())?;
    Ok("17 elements, 2 right-trivial, 15 ≅ T6".into())
}

// 4 ---------------------------------------------------------------------

fn braid_kernel() -> Outcome {
    let mut relations = 0;
    for n in 2..=6 {
        let s = |i: usize| Braid::sigma(n, i).unwrap();
        for i in 1..n {
            ensure(lib(braid_eq(&s(i).mul(&s(i).inverse()), &Braid::identity(n)))?, || "σσ⁻¹".into())?;
            for j in 1..n {
                if i.abs_diff(j) >= 2 {
                    ensure(lib(braid_eq(&s(i).mul(&s(j)), &s(j).mul(&s(i))))?, || format!("far {i},{j} in B{n}"))?;
                    relations += 1;
                }
                if j == i + 1 {
                    let l = s(i).mul(&s(j)).mul(&s(i));
                    let r = s(j).mul(&s(i)).mul(&s(j));
                    ensure(lib(braid_eq(&l, &r))?, || format!("braid relation {i} in B{n}"))?;
                    ensure(!lib(braid_eq(&s(i).mul(&s(j)), &s(j).mul(&s(i))))?, || format!("σ{i}σ{j} commute"))?;
                    relations += 2;
                }
            }
        }
    }
    for n in 2..=5 {
        let d = lib(full_twist(n))?;
        for i in 1..n {
            let s = lib(Braid::sigma(n, i))?;
            ensure(lib(braid_eq(&d.mul(&s), &s.mul(&d)))?, || format!("Δ² not central in B{n}"))?;
        }
    }
    let conic = |k: i64| -> quandle_monodromy::Result<bool> {
        let e = LCord::new(Cord::generator(2, 1)?, 1)?;
        let t = BraidMonodromy { strands: 2, k, projective: true, entries: vec![e.clone(), e] };
        Ok(validate_braid_monodromy(&t)?.valid)
    };
    ensure(lib(conic(1))?, || "conic fails with k = 1".into())?;
    ensure(!lib(conic(0))? && !lib(conic(2))?, || "conic passes with k = 0 or 2".into())?;
    Ok(format!("{relations} relations in B2..B6, Δ² central in B2..B5, conic k=1 only"))
}

// 5 ---------------------------------------------------------------------

fn lefschetz_fixture() -> Outcome {
    let a = Slope::from_ints(1, 0).unwrap();
    let b = Slope::from_ints(0, 1).unwrap();
    let entries: Vec<SignedSlope> =
        (0..12).map(|i| SignedSlope::positive(if i % 2 == 0 { a.clone() } else { b.clone() })).collect();
    let mut product = [[1, 0], [0, 1]];
    for _ in 0..6 {
        product = mat_mul(mat_mul(product, printed_matrix(1, 0)), printed_matrix(0, 1));
    }
    ensure(product == [[1, 0], [0, 1]], || format!("(AB)^6 = {product:?}"))?;
    ensure(twist_product(&entries).is_identity(), || "library product differs".into())?;
    let t = |n: usize| LefschetzMonodromy { base: Base::Sphere, achiral: false, entries: entries[..n].to_vec() };
    ensure(lib(validate_lefschetz(&t(12)))?.valid, || "E(1) invalid".into())?;
    for n in 1..12 {
        let report = lib(validate_lefschetz(&t(n)))?;
        let closure = report.check("sphere-closure").map(|c| c.passed);
        ensure(closure == Some(false), || format!("prefix {n} closes"))?;
    }
    Ok("(AB)^6 = I, prefixes 1..11 fail".into())
}

// 6 ---------------------------------------------------------------------

fn hurwitz_invariance() -> Outcome {
    let targets: Vec<(String, PermutationAugmented)> = standard_names()
        .into_iter()
        .map(|n| (n.clone(), resolve_finite(&n).unwrap()))
        .filter(|(_, p)| p.quandle.len() <= 6)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let opts = OrbitOptions { max_size: 12, cyclic: false };
    let mut visited = 0;
    for _ in 0..200 {
        let d = rng.gen_range(3..=4);
        let carrier = lib(build_transposition_quandle(d))?.augmentation;
        let m = rng.gen_range(1..=5);
        let entries: Vec<Permutation> = (0..m).map(|_| carrier[rng.gen_range(0..carrier.len())].clone()).collect();
        let base = if rng.gen_bool(0.5) { Base::Sphere } else { Base::Disk };
        let cover = CoverMonodromy { degree: d, simple: true, base, connected: rng.gen_bool(0.5), entries };
        let start = MonodromyTuple::Cover(cover.clone());
        let product = permutation_product(d, &cover.entries);
        let verdict = lib(start.validate(false))?.valid;
        let counts: Vec<u64> = targets.iter().map(|(_, t)| counting_invariant(&start, t)).collect();
        let colorings: Vec<u64> =
            targets.iter().map(|(_, t)| coloring_invariant(&cover, &t.quandle).unwrap()).collect();
        for t in lib(start.orbit(&opts, false))?.tuples {
            let MonodromyTuple::Cover(c) = &t else { return Err("mode changed".into()) };
            ensure(permutation_product(d, &c.entries) == product, || format!("product changed: {:?}", c.entries))?;
            ensure(lib(t.validate(false))?.valid == verdict, || "verdict changed".into())?;
            for (i, (name, tgt)) in targets.iter().enumerate() {
                ensure(counting_invariant(&t, tgt) == counts[i], || format!("count into {name} changed"))?;
                ensure(lib(coloring_invariant(c, &tgt.quandle))? == colorings[i], || format!("colorings into {name}"))?;
            }
            visited += 1;
        }
    }
    Ok(format!("200 tuples (seed {SEED:#x}), {visited} orbit members, {} targets", targets.len()))
}

// 7 ---------------------------------------------------------------------

/// Transpositions of `d` letters as image arrays, built directly.
fn oracle_transpositions(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let mut p: Vec<usize> = (0..d).collect();
            p.swap(a, b);
            out.push(p);
        }
    }
    out
}

fn oracle_sphere_count(d: usize, m: usize) -> u64 {
    let ts = oracle_transpositions(d);
    let mut count = 0;
    let mut idx = vec![0usize; m];
    loop {
        let mut acc: Vec<usize> = (0..d).collect();
        for &i in &idx {
            acc = acc.iter().map(|&k| ts[i][k]).collect();
        }
        if acc.iter().enumerate().all(|(i, &k)| i == k) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return count;
            }
            idx[pos] += 1;
            if idx[pos] < ts.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn cover_oracle() -> Outcome {
    let mut cases = 0;
    for d in 2..=4 {
        let target = lib(build_transposition_quandle(d))?;
        let t = &target.augmentation[0];
        for m in 1..=5 {
            let cover = CoverMonodromy {
                degree: d,
                simple: true,
                base: Base::Sphere,
                connected: false,
                entries: vec![t.clone(); m],
            };
            let got = counting_invariant(&MonodromyTuple::Cover(cover), &target);
            let want = oracle_sphere_count(d, m);
            ensure(got == want, || format!("d={d} m={m}: {got} vs {want}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (d, m) cases match"))
}

// 8 ---------------------------------------------------------------------

fn orbit_count(q: &quandle_monodromy::FiniteQuandle) -> usize {
    let n = q.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, q.op(x, y)));
            parent[a] = b;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

fn rank_mod_p(m: &IntMatrix, p: i64) -> usize {
    let mut rows: Vec<Vec<i64>> = m.to_dense().into_iter().map(|r| r.into_iter().map(|e| e.rem_euclid(p)).collect()).collect();
    let cols = m.ncols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = (1..p).find(|&k| rows[rank][c] * k % p == 1).unwrap();
        for e in rows[rank].iter_mut() {
            *e = *e * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                let pivot_row = rows[rank].clone();
                for (e, pv) in rows[r].iter_mut().zip(pivot_row) {
                    *e = (*e - f * pv).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn homology_suite() -> Outcome {
    let small: Vec<String> = standard_names()
        .into_iter()
        .filter(|n| resolve_finite(n).unwrap().quandle.len() <= 4)
        .collect();
    let mut matrices = 0;
    let mut modular = 0;
    for name in &small {
        let q = lib(resolve_finite(name))?.quandle;
        for theory in [Theory::Rack, Theory::Quandle] {
            for n in 2..=4 {
                let outer = lib(boundary(&q, n - 1, theory))?;
                let inner = lib(boundary(&q, n, theory))?;
                ensure(lib(outer.mul(&inner))?.is_zero(), || format!("{name} {theory:?}: ∂∂ ≠ 0 at {n}"))?;
            }
            for n in 1..=4 {
                let d = lib(boundary(&q, n, theory))?;
                let snf = smith_normal_form(&d);
                matrices += 1;
                for p in [2u32, 3, 5] {
                    let divisible = snf.factors.iter().filter(|f| (*f % p).is_zero()).count();
                    let want = snf.rank() - divisible;
                    let got = rank_mod_p(&d, p as i64);
                    ensure(got == want, || format!("{name} {theory:?} ∂{n} mod {p}: {got} vs {want}"))?;
                    modular += 1;
                }
            }
        }
    }
    let mut h1 = Vec::new();
    for name in ["dihedral:3", "dihedral:5", "trivial:1", "trivial:2", "trivial:3", "trivial:4"] {
        let q = lib(resolve_finite(name))?.quandle;
        let orbits = orbit_count(&q);
        for theory in [Theory::Rack, Theory::Quandle] {
            let h = lib(homology(&q, 1, theory))?;
            ensure(h.free_rank == orbits && h.torsion.is_empty(), || format!("{name}: H1 = {h}, {orbits} orbits"))?;
        }
        h1.push(format!("{name}:{orbits}"));
    }
    Ok(format!(
        "{} quandles of size ≤ 4, {matrices} boundaries, {modular} modular ranks; H1 ranks {}",
        small.len(),
        h1.join(" ")
    ))
}

// 9 ---------------------------------------------------------------------

fn slope_homology() -> Outcome {
    let hd = lib(homology_dehn_quandle(1, RingSpec::INTEGERS))?;
    let mut slopes = slopes_up_to(5);
    slopes.push(Slope::Contractible);
    let mut images = HashSet::new();
    for a in &slopes {
        let image = slope_to_homology(a);
        ensure(image.0.iter().all(|c| c.abs() <= BigInt::from(5)), || format!("image of {a}"))?;
        ensure(images.insert(image), || format!("{a} collides"))?;
        for b in &slopes {
            let lhs = slope_to_homology(&slope_op(a, b));
            let rhs = hd.rhd(&slope_to_homology(a), &slope_to_homology(b));
            ensure(lhs == rhs, || format!("not a homomorphism at {a}, {b}"))?;
        }
    }
    Ok(format!("{} elements, {} distinct images", slopes.len(), images.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 axiom suite", axiom_suite),
        ("2 torus Dehn quandle", torus_dehn),
        ("3 genus-2 quotient", genus2_quotient),
        ("4 braid kernel", braid_kernel),
        ("5 Lefschetz fixture", lefschetz_fixture),
        ("6 Hurwitz invariance", hurwitz_invariance),
        ("7 branched-cover oracle", cover_oracle),
        ("8 homology", homology_suite),
        ("9 slopes to homology", slope_homology),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("{} of 9 criteria pass in {:.1}s", 9 - failed, total.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
