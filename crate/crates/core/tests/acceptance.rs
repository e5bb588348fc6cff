//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Expected values are written out here rather
//! than taken from the library.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polypair::characterize::{
    exceptional_pairs4, large_threshold, membership4, membership_high, PairKind, Verdict,
};
use polypair::constructions::{delta_star, r_family};
use polypair::cyclic::{
    cyclic_facet_count, cyclic_g_vector, cyclic_polytope, gale_facets, m_sequence_valid,
    simplicial_facet_count, simplicial_fd_spectrum, GVector,
};
use polypair::hull::{brute_hull_facets, moment_curve_points};
use polypair::io::{parse_bracket_format, seed_database};
use polypair::witness::{
    apply_op, execute_with, region_scan, Op, Recipe, RegionBounds, ScanOptions, Verification,
};
use polypair::{FlagVector, VertexFacetIncidence};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Lattice-verified flag vector; every polytope touched by 1-4 passes
/// through here so criterion 5 can inspect it.
struct Touched(Vec<FlagVector>);

impl Touched {
    fn check(&mut self, p: &VertexFacetIncidence) -> Result<FlagVector, String> {
        let l = p.face_lattice().map_err(|e| e.to_string())?;
        l.verify().map_err(|e| e.to_string())?;
        let fv = l.flag_vector();
        self.0.push(fv.clone());
        Ok(fv)
    }
}

const STORED_ROWS: [(u64, u64); 27] = [
    (7, 35),
    (7, 36),
    (7, 39),
    (7, 42),
    (7, 45),
    (7, 46),
    (7, 49),
    (8, 39),
    (8, 42),
    (8, 43),
    (8, 45),
    (8, 46),
    (8, 49),
    (8, 52),
    (8, 55),
    (8, 59),
    (8, 60),
    (8, 62),
    (8, 63),
    (8, 65),
    (8, 66),
    (8, 68),
    (8, 69),
    (8, 70),
    (8, 72),
    (8, 73),
    (8, 76),
];

/// Listed dual rows: index into the stored lists and the dual pair.
const DUAL_ROWS: [(usize, (u64, u64)); 14] = [
    (1, (8, 35)),
    (2, (8, 36)),
    (3, (9, 39)),
    (4, (10, 42)),
    (5, (11, 45)),
    (6, (11, 46)),
    (7, (12, 49)),
    (9, (9, 42)),
    (10, (9, 43)),
    (11, (10, 45)),
    (12, (10, 46)),
    (13, (11, 49)),
    (14, (12, 52)),
    (15, (13, 55)),
];

fn stored_text() -> HashMap<String, String> {
    include_str!("../data/facet_lists.txt")
        .lines()
        .filter_map(|l| l.split_once(' '))
        .map(|(n, b)| (n.to_string(), b.to_string()))
        .collect()
}

fn criterion1(t: &mut Touched) -> Outcome {
    let text = stored_text();
    for (idx, &pair) in STORED_ROWS.iter().enumerate() {
        let name = format!("P{}", idx + 1);
        let body = text.get(&name).ok_or(format!("{name} missing"))?;
        let p = parse_bracket_format(body).map_err(|e| format!("{name}: {e}"))?;
        let fv = t.check(&p)?;
        ensure!(fv.pair() == pair, "{name}: got {:?}, want {pair:?}", fv.pair());
        let dual = t.check(&p.dualize())?;
        let f3 = fv.get(&[3]);
        ensure!(dual.pair() == (f3, pair.1), "{name}*: got {:?}", dual.pair());
        if let Some((_, want)) = DUAL_ROWS.iter().find(|(i, _)| *i == idx + 1) {
            ensure!(dual.pair() == *want, "{name}*: got {:?}, want {want:?}", dual.pair());
        }
    }
    Ok("27 lists and their duals".into())
}

fn f0f03_oracle(f0: u64, f03: u64) -> Option<bool> {
    const SPORADIC: [(u64, u64); 18] = [
        (6, 24),
        (6, 25),
        (6, 28),
        (7, 28),
        (7, 30),
        (7, 31),
        (7, 33),
        (7, 34),
        (7, 37),
        (7, 40),
        (8, 33),
        (8, 34),
        (8, 37),
        (8, 40),
        (9, 37),
        (9, 40),
        (10, 40),
        (10, 43),
    ];
    if f0 < 5 || f03 < 4 * f0 || f03 > 2 * f0 * (f0 - 3) {
        return None;
    }
    let gap = 2 * f0 * (f0 - 3) - f03;
    let exceptional = SPORADIC.contains(&(f0, f03)) || [1, 2, 3, 5, 6, 9, 13].contains(&gap);
    Some(!exceptional)
}

fn criterion2(t: &mut Touched) -> Outcome {
    let cells = region_scan(
        PairKind::F0F03,
        RegionBounds::f0f03_up_to(80),
        &ScanOptions {
            witnesses: true,
            cache: None,
        },
    )
    .map_err(|e| e.to_string())?;
    let mut expected = BTreeSet::new();
    for f0 in 1..=20 {
        for f03 in 1..=80 {
            if let Some(ok) = f0f03_oracle(f0, f03) {
                expected.insert((f0, f03, ok));
            }
        }
    }
    let found: BTreeSet<_> = cells
        .iter()
        .map(|c| (c.a, c.b, c.status.verdict == Verdict::Polytopal))
        .collect();
    ensure!(found == expected, "scan differs from the predicate oracle");
    let mut exceptional = 0;
    for c in &cells {
        if c.status.verdict != Verdict::Polytopal {
            exceptional += 1;
            ensure!(c.recipe.is_none(), "({},{}) exceptional but has a recipe", c.a, c.b);
            continue;
        }
        let id = c.recipe.as_ref().ok_or(format!("({},{}) has no witness", c.a, c.b))?;
        let r = Recipe::from_id(id, (c.a, c.b)).map_err(|e| e.to_string())?;
        let (p, _) = execute_with(&r, Verification::PairOnly).map_err(|e| format!("{id}: {e}"))?;
        let fv = t.check(&p)?;
        ensure!(fv.pair() == (c.a, c.b), "{id} gives {:?}", fv.pair());
    }
    Ok(format!(
        "{} cells, {} polytopal with witnesses, {exceptional} exceptional",
        cells.len(),
        cells.len() - exceptional
    ))
}

fn expected_delta(op: Op) -> (i64, i64) {
    match op {
        Op::StackSimplexFacet => (1, 12),
        Op::StackSquarePyramidFacet | Op::StackBeyondPair => (1, 16),
        Op::TruncateSimpleVertex => (3, 12),
        Op::SplitBipyramid => (0, 3),
        Op::Dualize => unreachable!(),
    }
}

fn criterion3(t: &mut Touched) -> Outcome {
    const ALLOWED: [(i64, i64); 4] = [(1, 12), (3, 12), (1, 16), (0, 3)];
    let ops = [
        Op::StackSimplexFacet,
        Op::TruncateSimpleVertex,
        Op::StackSquarePyramidFacet,
        Op::SplitBipyramid,
        Op::StackBeyondPair,
    ];
    let seeds = seed_database().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut steps = 0;
    let mut chains = 0;
    while chains < 200 {
        let seed = seeds.choose(&mut rng).unwrap();
        let mut p = seed.incidence.clone();
        let mut before = t.check(&p)?.pair();
        let len = rng.gen_range(1..=4);
        let mut done = 0;
        for _ in 0..len {
            let mut order = ops;
            order.shuffle(&mut rng);
            let Some((op, q)) = order.iter().find_map(|&op| apply_op(&p, op).ok().map(|q| (op, q))) else {
                break;
            };
            let after = t.check(&q)?.pair();
            let d = (after.0 as i64 - before.0 as i64, after.1 as i64 - before.1 as i64);
            ensure!(ALLOWED.contains(&d), "{} then {op}: delta {d:?}", seed.name);
            ensure!(d == expected_delta(op), "{} then {op}: delta {d:?}", seed.name);
            p = q;
            before = after;
            done += 1;
        }
        if done > 0 {
            chains += 1;
            steps += done;
        }
    }
    Ok(format!("200 chains, {steps} steps"))
}

fn criterion4(t: &mut Touched) -> Outcome {
    let mut count = 0;
    for n in 7..=10u64 {
        for i in 1..=n - 3 {
            let p = r_family(i as usize, n as usize).map_err(|e| format!("R_{i}({n}): {e}"))?;
            let fv = t.check(&p)?;
            let want = (n + 1, 2 * n * (n - 3) + 4 * i + 8);
            ensure!(fv.pair() == want, "R_{i}({n}) gives {:?}, want {want:?}", fv.pair());
            count += 1;
        }
    }
    for n in 8..=10u64 {
        for k in 0..=3u64 {
            let top = if k == 3 { n - 3 } else { n - 2 };
            for i in 3..=top {
                let p = delta_star(k as usize, i as usize, n as usize)
                    .map_err(|e| format!("delta*_{k}({i},{n}): {e}"))?;
                let fv = t.check(&p)?;
                let want = (n + 1, 2 * n * (n - 3) + 4 * i - 3 * k);
                ensure!(fv.pair() == want, "delta*_{k}({i},{n}) gives {:?}, want {want:?}", fv.pair());
                count += 1;
            }
        }
    }
    Ok(format!("{count} family members recounted"))
}

/// Linear relations and inequalities of 4-dimensional flag vectors.
fn flag_relations_hold(fv: &FlagVector) -> Result<(), String> {
    let f = |s: &[usize]| fv.get(s) as i64;
    let (f0, f1, f2, f3) = (f(&[0]), f(&[1]), f(&[2]), f(&[3]));
    let (f02, f03) = (f(&[0, 2]), f(&[0, 3]));
    let checks = [
        ("euler", f0 - f1 + f2 - f3 == 0),
        ("f02 from f03", f02 == -2 * f0 + 2 * f1 + f03),
        ("f01", f(&[0, 1]) == 2 * f1),
        ("f12", f(&[1, 2]) == f02),
        ("f13", f(&[1, 3]) == f02),
        ("f23", f(&[2, 3]) == 2 * f2),
        ("f012", f(&[0, 1, 2]) == 2 * f02),
        ("f013", f(&[0, 1, 3]) == 2 * f02),
        ("f023", f(&[0, 2, 3]) == 2 * f02),
        ("f123", f(&[1, 2, 3]) == 2 * f02),
        ("f0123", f(&[0, 1, 2, 3]) == 4 * f02),
        ("f03 >= 3f0 + 3f3 - 10", f03 - 3 * f0 - 3 * f3 + 10 >= 0),
        ("f03 <= 4f1 - 4f0", 4 * f0 - 4 * f1 + f03 <= 0),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} fails on f = ({f0},{f1},{f2},{f3})")),
        None => Ok(()),
    }
}

fn criterion5(t: &Touched) -> Outcome {
    for fv in &t.0 {
        ensure!(fv.dim() == 4, "non-4-dimensional polytope touched");
        flag_relations_hold(fv)?;
    }
    Ok(format!("{} flag vectors", t.0.len()))
}

fn criterion6() -> Outcome {
    let mut cases = 0;
    for d in 3..=6 {
        for n in d + 1..=9 {
            let mut hull = brute_hull_facets(&moment_curve_points(d, n)).map_err(|e| e.to_string())?;
            let mut gale = gale_facets(d, n).map_err(|e| e.to_string())?;
            hull.iter_mut().for_each(|f| f.sort_unstable());
            gale.iter_mut().for_each(|f| f.sort_unstable());
            hull.sort();
            gale.sort();
            ensure!(hull == gale, "C_{d}({n}): hull and Gale facets differ");
            cases += 1;
        }
    }
    for n in 5..=9u64 {
        let p = cyclic_polytope(4, n as usize).map_err(|e| e.to_string())?;
        let fv = p.face_lattice().map_err(|e| e.to_string())?.flag_vector();
        ensure!(fv.get(&[0, 3]) == 2 * n * (n - 3), "f03(C_4({n})) = {}", fv.get(&[0, 3]));
    }
    Ok(format!("{cases} cyclic polytopes, f03(C_4(n)) for n <= 9"))
}

/// `(2c - 1)^2 >= 4x + 9`, smallest `c`, by search.
fn f1f2_ceiling(x: u64) -> u64 {
    (1..).find(|&c: &u64| (2 * c - 1) * (2 * c - 1) >= 4 * x + 9).unwrap()
}

fn f1f2_oracle_in_bounds(x: u64, y: u64) -> bool {
    // 10 <= x/2 + c + 1 <= y, doubled
    let lo = |x: u64| x + 2 * f1f2_ceiling(x) + 2;
    lo(x) >= 20 && lo(x) <= 2 * y && lo(y) >= 20 && lo(y) <= 2 * x
}

fn criterion7() -> Outcome {
    let listed = |kind: PairKind, range| -> BTreeSet<(u64, u64)> {
        exceptional_pairs4(kind, range).into_iter().map(|e| (e.a, e.b)).collect()
    };

    let f0f3 = listed(PairKind::F0F3, 1..=40);
    ensure!(f0f3.is_empty(), "(f0,f3) has exceptions {f0f3:?}");

    let f0f1 = listed(PairKind::F0F1, 1..=40);
    let want: BTreeSet<_> = [(6, 12), (7, 14), (8, 17), (10, 20)].into();
    ensure!(f0f1 == want, "(f0,f1) exceptions {f0f1:?}");

    let mut want: BTreeSet<(u64, u64)> = [
        (6, 12),
        (6, 14),
        (7, 13),
        (7, 15),
        (8, 15),
        (8, 16),
        (9, 16),
        (10, 17),
        (11, 20),
        (13, 21),
    ]
    .into();
    for a in 4..=40u64 {
        let b = a * a - 3 * a - 1;
        let lower = (2 * a + 3) as f64 / 2.0 + ((8 * a + 9) as f64).sqrt() / 2.0;
        if lower >= 10.0 && lower <= b as f64 {
            want.insert((a, b));
        }
    }
    let f0f2 = listed(PairKind::F0F2, 1..=40);
    ensure!(f0f2 == want, "(f0,f2) exceptions differ: {:?}", f0f2.symmetric_difference(&want).collect::<Vec<_>>());

    let mut want: BTreeSet<(u64, u64)> = [
        (12, 12),
        (13, 14),
        (14, 13),
        (14, 14),
        (15, 15),
        (15, 16),
        (16, 15),
        (16, 17),
        (16, 18),
        (17, 16),
        (17, 20),
        (18, 16),
        (18, 18),
        (19, 21),
        (20, 17),
        (20, 23),
        (20, 24),
        (21, 19),
        (21, 26),
        (23, 20),
        (24, 20),
        (26, 21),
    ]
    .into();
    let mut curve = BTreeSet::new();
    // 4 f1 + 13 = s^2 with s odd, then 2 f2 = f1 + s + 4
    for s in (5u64..40).step_by(2) {
        let f1 = (s * s - 13) / 4;
        if (f1 + s + 4) % 2 == 0 {
            let f2 = (f1 + s + 4) / 2;
            curve.insert((f1, f2));
            curve.insert((f2, f1));
        }
    }
    for &(a, b) in &curve {
        if a <= 80 && f1f2_oracle_in_bounds(a, b) {
            want.insert((a, b));
        }
    }
    ensure!(want.contains(&(27, 21)), "oracle lacks (27,21)");
    let f1f2 = listed(PairKind::F1F2, 1..=80);
    ensure!(f1f2 == want, "(f1,f2) exceptions differ: {:?}", f1f2.symmetric_difference(&want).collect::<Vec<_>>());
    Ok(format!(
        "f0f3 none, f0f1 {}, f0f2 {}, f1f2 {} incl. curve pairs",
        f0f1.len(),
        f0f2.len(),
        f1f2.len()
    ))
}

fn criterion8() -> Outcome {
    for d in 2..=8 {
        for n in d + 1..=15 {
            let gale = gale_facets(d, n).map_err(|e| e.to_string())?.len();
            let count = cyclic_facet_count(d, n).map_err(|e| e.to_string())?;
            ensure!(count == BigUint::from(gale), "C_{d}({n}): {count} vs {gale} Gale facets");
            let g = cyclic_g_vector(d, n).map_err(|e| e.to_string())?;
            ensure!(simplicial_facet_count(d, &g) == count, "C_{d}({n}): g-vector count differs");
        }
    }
    let spectrum = simplicial_fd_spectrum(6, 11).map_err(|e| e.to_string())?;
    let want: BTreeSet<BigUint> = [27u64, 30, 31].into_iter().chain(33..=77).map(BigUint::from).collect();
    ensure!(spectrum == want, "spectrum(6,11) = {spectrum:?}");
    let n = 11u64;
    ensure!(
        [5 * n - 28, 5 * n - 25, 5 * n - 24].iter().all(|&x| spectrum.contains(&BigUint::from(x))),
        "5n-28, 5n-25, 5n-24 missing"
    );
    ensure!(large_threshold(6, false) == BigUint::from(969u32), "C(19,3) threshold");
    ensure!(large_threshold(6, true) == BigUint::from(132u32), "refined d=6 threshold");
    ensure!(large_threshold(5, true) == BigUint::from(58u32), "refined d=5 threshold");
    let v = |d, n, m, refined| membership_high(d, n, m, refined).map(|s| s.verdict).map_err(|e| e.to_string());
    ensure!(v(6, 20, 112, true)? == Verdict::Polytopal, "(6,20,112) refined");
    ensure!(v(6, 20, 111, true)? == Verdict::Unknown, "(6,20,111) refined");
    ensure!(v(6, 20, 112, false)? == Verdict::Unknown, "(6,20,112) unrefined");
    ensure!(v(5, 16, 42, true)? == Verdict::Polytopal, "(5,16,42) refined");
    ensure!(v(5, 15, 42, true)? == Verdict::Unknown, "(5,15,42) refined");
    ensure!(v(5, 16, 42, false)? == Verdict::Unknown, "(5,16,42) unrefined");
    Ok("d <= 8, n <= 15; spectrum(6,11); thresholds 969/132/58".into())
}

fn criterion9() -> Outcome {
    let v = |d, n, m| membership_high(d, n, m, true).map(|s| s.verdict).map_err(|e| e.to_string());
    ensure!(v(6, 8, 14)? == Verdict::Exceptional, "(6,8,14)");
    ensure!(v(5, 8, 19)? == Verdict::Exceptional, "(5,8,19)");
    for a in 5..=30 {
        for b in 5..=30 {
            let hi = membership_high(4, a, b, true).map_err(|e| e.to_string())?;
            let lo = membership4(PairKind::F0F3, a, b);
            ensure!(hi.verdict == lo.verdict, "d=4 ({a},{b}): {hi} vs {lo}");
        }
    }
    Ok("(6,8,14), (5,8,19), d=4 on 5..30".into())
}

/// Greedy `i`-binomial expansion and pseudopower, on machine integers.
fn oracle_pseudopower(a: u128, i: u128) -> u128 {
    fn choose(n: u128, k: u128) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }
    let (mut rest, mut t, mut out) = (a, i, 0);
    while rest > 0 && t > 0 {
        let mut m = t;
        while choose(m + 1, t) <= rest {
            m += 1;
        }
        rest -= choose(m, t);
        out += choose(m + 1, t + 1);
        t -= 1;
    }
    out
}

fn oracle_m_sequence(g: &[u128]) -> bool {
    g[0] == 1 && (1..g.len() - 1).all(|i| g[i + 1] <= oracle_pseudopower(g[i], i as u128))
}

fn random_polytope(rng: &mut ChaCha8Rng, seeds: &[polypair::io::SeedEntry]) -> VertexFacetIncidence {
    if rng.gen_bool(0.2) {
        let d = rng.gen_range(3..=6);
        let n = rng.gen_range(d + 1..=d + 5);
        return cyclic_polytope(d, n).unwrap();
    }
    let mut p = seeds.choose(rng).unwrap().incidence.clone();
    for _ in 0..rng.gen_range(0..=3) {
        let op = *Op::ALL.choose(rng).unwrap();
        if let Ok(q) = apply_op(&p, op) {
            p = q;
        }
    }
    p
}

fn criterion10() -> Outcome {
    let seeds = seed_database().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for k in 0..500 {
        let p = random_polytope(&mut rng, seeds);
        let l = p.face_lattice().map_err(|e| format!("instance {k}: {e}"))?;
        l.check_diamond().map_err(|e| format!("instance {k}: {e}"))?;
        let fv = l.flag_vector();
        let dual = p.dualize();
        let dv = dual.face_lattice().map_err(|e| format!("instance {k}: {e}"))?.flag_vector();
        // f*_S = f_{d-1-S}
        let d = fv.dim();
        for mask in 0..1usize << d {
            let flipped = (0..d).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << (d - 1 - i));
            ensure!(dv.by_mask(flipped) == fv.by_mask(mask), "instance {k}: dual flag vector mismatch");
        }
        ensure!(dual.dualize().canonical() == p.canonical(), "instance {k}: double dual differs");

        let dim = rng.gen_range(4..=10usize);
        let len = dim / 2 + 1;
        let mut g = vec![1u128];
        for _ in 1..len {
            g.push(rng.gen_range(0..=12));
        }
        let lib = m_sequence_valid(&GVector::new(dim, g.iter().map(|&x| BigUint::from(x)).collect()));
        ensure!(lib == oracle_m_sequence(&g), "instance {k}: M-sequence verdict for {g:?}");
    }
    for d in 4..=10 {
        for n in d + 1..=d + 12 {
            ensure!(m_sequence_valid(&cyclic_g_vector(d, n).unwrap()), "g(C_{d}({n})) rejected");
        }
    }
    Ok("500 polytopes and 500 g-vectors".into())
}

fn main() {
    let mut touched = Touched(Vec::new());
    let mut failed = 0;
    let mut report = |n: usize, what: &str, start: Instant, r: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS criterion {n}: {what}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {what}: {msg} ({secs:.2}s)")
            }
        }
    };
    let s = Instant::now();
    report(1, "stored facet lists", s, criterion1(&mut touched));
    let s = Instant::now();
    report(2, "(f0,f03) predicate vs witnesses", s, criterion2(&mut touched));
    let s = Instant::now();
    report(3, "increment laws", s, criterion3(&mut touched));
    let s = Instant::now();
    report(4, "family formulas", s, criterion4(&mut touched));
    let s = Instant::now();
    report(5, "flag identities", s, criterion5(&touched));
    let s = Instant::now();
    report(6, "Gale vs hull", s, criterion6());
    let s = Instant::now();
    report(7, "f-vector pair exceptions", s, criterion7());
    let s = Instant::now();
    report(8, "high-dimensional calculators", s, criterion8());
    let s = Instant::now();
    report(9, "high-dimensional verdicts", s, criterion9());
    let s = Instant::now();
    report(10, "invariant properties", s, criterion10());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
