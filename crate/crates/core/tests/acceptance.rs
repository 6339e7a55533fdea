//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria whose literal target is not attainable run unchanged and are
//! reported as FAIL; they are listed in `EXPECTED_FAILURES` with the reason,
//! and only a failure outside that list makes the process exit non-zero.
//!
//! `--slow` (or `EXCEPTIA_SLOW=1`) extends the Leech θ comparison from norm 6
//! to norm 8.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use exceptia::clifford::{
    classify, periodicity_check, spinor_taxonomy, super_ym_dims, CliffordSignature, SpinorKind,
};
use exceptia::exactnum::rat;
use exceptia::hypercomplex::{
    cd_mul, cd_norm, fano_mul, ijk_permute, nonalternative_pair, nonassociative_triple,
    quoted_sedenion_pair, HyperNumber, Parity, PermutationIJK,
};
use exceptia::identities::{
    bbp_pi_hex, cannonball_search, linking_number, square_pyramid, PolyLoop,
};
use exceptia::lattices::{
    build_3e8, build_e8, build_e8_d16plus, default_delta, dual_lattice, ii_member, is_even,
    is_unimodular, leech_from_icosians, leech_from_icosians_with, leech_from_ii26, lll_reduce,
    minkowski_dot, short_vectors, theta_series, weyl_vector, IcosianForm, Lattice,
};
use exceptia::modular::{j_from_lattice, LaurentSeries};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = HyperNumber<BigRational>;
type Outcome = Result<String, String>;

const EXPECTED_FAILURES: &[(u32, &str)] = &[
    (
        1,
        "the quoted sedenion pair multiplies to -2e1 under (a,b)(c,d) = (ac - d*b, da + bc*)",
    ),
    (
        7,
        "the q^2 coefficient of j is 21493760; the stated 21493706 is not reproduced",
    ),
    (
        9,
        "icosian triples under the coordinate form are not Leech at any scale",
    ),
];

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn random_q(rng: &mut ChaCha8Rng, level: u32) -> Q {
    let c = (0..1usize << level)
        .map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
        .collect();
    Q::new(level, c).unwrap()
}

fn mul(x: &Q, y: &Q) -> Q {
    cd_mul(x, y).unwrap()
}

fn c1_division_frontier() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for level in 0..=3 {
        for t in 0..1000 {
            let (x, y) = (random_q(&mut rng, level), random_q(&mut rng, level));
            ensure(
                cd_norm(&mul(&x, &y)) == cd_norm(&x) * cd_norm(&y),
                format!("N(xy) ≠ N(x)N(y) at level {level}, trial {t}"),
            )?;
        }
    }
    let (x, y) = quoted_sedenion_pair();
    let p = mul(&x, &y);
    ensure(
        p.is_zero(),
        format!("norm multiplicative at levels 0-3; (e1,e4)(-1,e5) = {p}, not 0"),
    )?;
    Ok("norm multiplicative at levels 0-3; quoted pair multiplies to 0".into())
}

fn c2_fano() -> Outcome {
    let wrap = |i: usize, f: usize| (i * f - 1) % 7 + 1;
    let shift = |i: usize| i % 7 + 1;
    for i in 1..=7 {
        for j in i + 1..=7 {
            let (k, s) = fano_mul(i, j).map_err(err)?;
            let (k1, s1) = fano_mul(shift(i), shift(j)).map_err(err)?;
            ensure(
                (k1, s1) == (shift(k), s),
                format!("cycling fails at e{i}e{j}"),
            )?;
            let (k2, s2) = fano_mul(wrap(i, 2), wrap(j, 2)).map_err(err)?;
            ensure(
                (k2, s2) == (wrap(k, 2), s),
                format!("doubling fails at e{i}e{j}"),
            )?;
            let (kr, sr) = fano_mul(j, i).map_err(err)?;
            ensure(
                (kr, sr) == (k, -s),
                format!("antisymmetry fails at e{i}e{j}"),
            )?;
        }
    }
    for ((i, j), k) in [((1, 2), 4), ((2, 4), 1), ((5, 2), 3), ((3, 7), 1)] {
        ensure(
            fano_mul(i, j).map_err(err)? == (k, 1),
            format!("e{i}e{j} ≠ e{k}"),
        )?;
    }
    Ok("cycling and doubling on 21 pairs; e1e2=e4, e2e4=e1, e5e2=e3, e3e7=e1".into())
}

fn c3_triality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = BTreeMap::new();
    for p in PermutationIJK::all() {
        *seen.entry(format!("{:?}", p.parity())).or_insert(0) += 1;
        for _ in 0..500 {
            let (q, r) = (random_q(&mut rng, 2), random_q(&mut rng, 2));
            let lhs = ijk_permute(&p, &mul(&q, &r)).map_err(err)?;
            let (pq, pr) = (
                ijk_permute(&p, &q).map_err(err)?,
                ijk_permute(&p, &r).map_err(err)?,
            );
            let rhs = match p.parity() {
                Parity::Even => mul(&pq, &pr),
                Parity::Odd => mul(&pr, &pq),
            };
            ensure(
                lhs == rhs,
                format!("{:?} fails the product rule", p.images()),
            )?;
        }
    }
    ensure(
        seen.values().all(|&c| c == 3),
        "expected 3 even and 3 odd permutations",
    )?;
    Ok("3 even automorphisms, 3 odd anti-automorphisms, 500 pairs each".into())
}

fn class(p: usize, q: usize) -> String {
    classify(CliffordSignature::for_classification(p, q).unwrap()).to_string()
}

fn c4_clifford_tables() -> Outcome {
    let cn = [
        "R",
        "C",
        "H",
        "H+H",
        "H(2)",
        "C(4)",
        "R(8)",
        "R(8)+R(8)",
        "R(16)",
    ];
    for (n, want) in cn.iter().enumerate() {
        ensure(
            class(n, 0) == *want,
            format!("C_{n}: {} ≠ {want}", class(n, 0)),
        )?;
    }
    let minus = [
        "R+R",
        "R(2)",
        "C(2)",
        "H(2)",
        "H(2)+H(2)",
        "H(4)",
        "C(8)",
        "R(16)",
    ];
    let plus = [
        "C",
        "R(2)",
        "R(2)+R(2)",
        "R(4)",
        "C(4)",
        "H(4)",
        "H(4)+H(4)",
        "H(8)",
    ];
    for n in 1..=8 {
        // C_{0,1} heads the first column and C_{1,0} the second
        let (a, b) = if n == 1 {
            (class(0, 1), class(1, 0))
        } else {
            (class(n - 1, 1), class(1, n - 1))
        };
        ensure(
            a == minus[n - 1],
            format!("C_{{{},1}}: {a} ≠ {}", n - 1, minus[n - 1]),
        )?;
        ensure(
            b == plus[n - 1],
            format!("C_{{1,{}}}: {b} ≠ {}", n - 1, plus[n - 1]),
        )?;
    }
    let mut checked = 0;
    for p in 0..=8 {
        for q in 0..=8 - p {
            let sig = CliffordSignature::new(p, q).map_err(err)?;
            ensure(
                periodicity_check(sig).map_err(err)?,
                format!("periodicity fails at {sig}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "9 + 16 table rows; periodicity on {checked} signatures"
    ))
}

fn c5_spinors() -> Outcome {
    let table: [(usize, &str, Option<&str>, Option<&str>, Option<&str>); 8] = [
        (1, "C", Some("R"), None, None),
        (2, "C^2", Some("R^2"), Some("C"), Some("R")),
        (3, "C^2", Some("R^2"), None, None),
        (4, "C^4", Some("R^4"), Some("C^2"), None),
        (5, "C^4", None, None, None),
        (6, "C^8", None, Some("C^4"), None),
        (7, "C^8", None, None, None),
        (8, "C^16", Some("R^16"), Some("C^8"), None),
    ];
    for (n, dirac, maj, weyl, mw) in table {
        let s = spinor_taxonomy(n).map_err(err)?;
        let got = (
            s.space(SpinorKind::Dirac),
            s.space(SpinorKind::Majorana),
            s.space(SpinorKind::Weyl),
            s.space(SpinorKind::MajoranaWeyl),
        );
        let want = (
            Some(dirac.to_string()),
            maj.map(String::from),
            weyl.map(String::from),
            mw.map(String::from),
        );
        ensure(got == want, format!("n={n}: {got:?} ≠ {want:?}"))?;
    }
    let ten = spinor_taxonomy(10).map_err(err)?;
    ensure(
        ten.real_components(SpinorKind::MajoranaWeyl) == Some(16),
        "n=10 Majorana-Weyl is not 16 real",
    )?;
    let dims = super_ym_dims(3, 12).map_err(err)?;
    ensure(
        dims == BTreeSet::from([3, 4, 6, 10]),
        format!("super_ym_dims(3,12) = {dims:?}"),
    )?;
    Ok("8 rows match; super_ym_dims(3,12) = {3,4,6,10}".into())
}

/// Norm-4 vectors of E₈ by sweeping the box |xᵢ| ≤ 2 in ℤ⁸ ∪ (ℤ+½)⁸ and
/// testing membership in the lattice object directly.
fn e8_norm4_brute(e8: &Lattice) -> u64 {
    let mut count = 0;
    // doubled coordinates: integers are even in [-4, 4], half-integers odd in [-3, 3]
    for parity in [0i64, 1] {
        let values: Vec<i64> = (-4..=4)
            .filter(|v: &i64| v.rem_euclid(2) == parity)
            .collect();
        let mut idx = [0usize; 8];
        loop {
            let x: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            if x.iter().map(|v| v * v).sum::<i64>() == 16 {
                let v: Vec<BigRational> = x.iter().map(|&d| rat(d, 2)).collect();
                if e8.contains(&v) {
                    count += 1;
                }
            }
            let mut k = 0;
            while k < 8 {
                idx[k] += 1;
                if idx[k] < values.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == 8 {
                break;
            }
        }
    }
    count
}

fn c6_e8() -> Outcome {
    let e8 = build_e8().map_err(err)?;
    ensure(
        is_even(&e8) && is_unimodular(&e8),
        "E8 is not even unimodular",
    )?;
    let sv = short_vectors(&e8, 2).map_err(err)?;
    ensure(
        sv == BTreeMap::from([(2, 240)]),
        format!("norm-2 counts {sv:?}"),
    )?;
    let t = theta_series(&e8, 2).map_err(err)?;
    let want: Vec<BigInt> = [1, 240, 2160].map(BigInt::from).to_vec();
    ensure(t.counts == want, format!("θ = {:?}", t.counts))?;
    let brute = e8_norm4_brute(&e8);
    ensure(brute == 2160, format!("brute-force norm-4 count {brute}"))?;
    Ok("even unimodular; θ = 1, 240, 2160; brute force 2160".into())
}

fn c7_j() -> Outcome {
    let j3 = j_from_lattice(&build_3e8().map_err(err)?, 2).map_err(err)?;
    let jd = j_from_lattice(&build_e8_d16plus().map_err(err)?, 2).map_err(err)?;
    let diff = j3.sub(&jd);
    let const_only =
        (diff.low()..=diff.order()).all(|e| e == 0 || diff.coeff(e).is_some_and(|c| c.is_zero()));
    ensure(
        const_only,
        format!("E8+D16+ differs beyond the constant: {diff}"),
    )?;
    let want = LaurentSeries::from_i64(-1, &[1, 744, 196884, 21493706]);
    ensure(
        j3 == want,
        format!("j(3E8) = {j3}; expected {want}; E8+D16+ agrees except the constant"),
    )?;
    Ok(format!("j(3E8) = {j3}; E8+D16+ agrees except the constant"))
}

fn c8_lorentzian() -> Outcome {
    let w26 = weyl_vector(26).map_err(err)?;
    ensure(ii_member(&w26.coords()).map_err(err)?, "w26 not in II25,1")?;
    ensure(
        minkowski_dot(&w26, &w26).map_err(err)?.is_zero(),
        "w26 not lightlike",
    )?;
    for d in [10, 18] {
        let w = weyl_vector(d).map_err(err)?;
        ensure(
            ii_member(&w.coords()).map_err(err)?,
            format!("w{d} not a member"),
        )?;
        let n = minkowski_dot(&w, &w).map_err(err)?;
        ensure(!n.is_zero(), format!("w{d} is lightlike"))?;
    }
    ensure(
        square_pyramid(24) == BigUint::from(70u32 * 70),
        "1²+…+24² ≠ 70²",
    )?;
    let s = cannonball_search(100_000);
    ensure(
        s == BTreeSet::from([1, 24]),
        format!("cannonball_search(10^5) = {s:?}"),
    )?;
    Ok("w26 lightlike member; w10, w18 members, not lightlike; 4900 = 70²; {1, 24}".into())
}

fn c9_leech(slow: bool) -> Outcome {
    let max_norm = if slow { 8 } else { 6 };
    let order = max_norm / 2;
    let l = leech_from_ii26().map_err(err)?;
    ensure(
        l.rank() == 24 && is_even(&l) && is_unimodular(&l),
        "II construction is not even unimodular of rank 24",
    )?;
    let first = short_vectors(&l, 4).map_err(err)?;
    let second = short_vectors(&leech_from_ii26().map_err(err)?, 4).map_err(err)?;
    ensure(first == second, "norm-4 count differs between runs")?;
    ensure(
        first == BTreeMap::from([(4, 196_560)]),
        format!("counts to norm 4: {first:?}"),
    )?;
    let t_ii = theta_series(&l, order as usize).map_err(err)?;
    let counts = t_ii
        .counts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let golden = leech_from_icosians_with(IcosianForm::Golden)
        .and_then(|g| theta_series(&g, order as usize))
        .map(|t| if t == t_ii { "agrees" } else { "differs" })
        .unwrap_or("fails");
    let head = format!(
        "II: no norm 2, 196560 at norm 4 (stable); θ to norm {max_norm} = {counts}; golden-form icosian θ {golden}"
    );
    match leech_from_icosians() {
        Ok(ico) => {
            let t_ico = theta_series(&ico, order as usize).map_err(err)?;
            ensure(t_ico == t_ii, format!("{head}; icosian θ differs"))?;
            Ok(format!("{head}; icosian θ agrees"))
        }
        Err(e) => {
            // the error carries the full raw Gram; its headline is enough here
            let e = e.to_string();
            let brief = e.split("; raw Gram").next().unwrap_or(&e);
            Err(format!("{head}; icosian construction: {brief}"))
        }
    }
}

fn c10_bbp() -> Outcome {
    // exact BBP partial sum over n ≤ 40, expanded in base 16
    let mut pi = BigRational::zero();
    let mut p16 = BigInt::from(1);
    for n in 0..=40i64 {
        let t = rat(4, 8 * n + 1) - rat(2, 8 * n + 4) - rat(1, 8 * n + 5) - rat(1, 8 * n + 6);
        pi += t / BigRational::from_integer(p16.clone());
        p16 *= 16;
    }
    let mut x = pi.clone() - BigRational::from_integer(pi.to_integer());
    let mut oracle = String::new();
    for _ in 0..40 {
        x *= BigRational::from_integer(16.into());
        let d = x.to_integer();
        oracle.push(
            std::char::from_digit(d.to_u32().unwrap(), 16)
                .unwrap()
                .to_ascii_uppercase(),
        );
        x -= BigRational::from_integer(d);
    }
    ensure(
        oracle.starts_with("243F6A8885"),
        format!("oracle begins {}", &oracle[..10]),
    )?;
    let ten = bbp_pi_hex(1, 10).map_err(err)?;
    ensure(ten == "243F6A8885", format!("bbp_pi_hex(1,10) = {ten}"))?;
    let forty = bbp_pi_hex(1, 40).map_err(err)?;
    ensure(
        forty == oracle,
        format!("first 40 digits {forty} ≠ oracle {oracle}"),
    )?;
    let prefix = bbp_pi_hex(1, 64).map_err(err)?;
    for k in 1..=64u64 {
        let one = bbp_pi_hex(k, 1).map_err(err)?;
        ensure(
            one == prefix[k as usize - 1..k as usize],
            format!("digit {k} inconsistent"),
        )?;
    }
    Ok("243F6A8885; 40 digits match the exact oracle; 64 positions consistent".into())
}

fn square(cx: i64, z: i64, r: i64) -> PolyLoop {
    PolyLoop::new(vec![
        [cx - r, -r, z],
        [cx + r, -r, z],
        [cx + r, r, z],
        [cx - r, r, z],
    ])
    .unwrap()
}

fn c11_linking() -> Outcome {
    let g = square(0, 0, 2);
    let h = PolyLoop::new(vec![[0, 0, -2], [4, 0, -2], [4, 0, 2], [0, 0, 2]]).unwrap();
    let l = linking_number(&g, &h).map_err(err)?;
    ensure(l.abs() == 1, format!("Hopf L = {l}"))?;
    ensure(
        linking_number(&g, &h.reversed()).map_err(err)? == -l,
        "reversal does not flip the sign",
    )?;
    ensure(
        linking_number(&square(0, 0, 1), &square(10, 5, 1)).map_err(err)? == 0,
        "split loops linked",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs = 0;
    let mut linked = 0;
    while pairs < 50 {
        let mut pick = || loop {
            let n = rng.gen_range(3..7);
            let pts = (0..n)
                .map(|_| {
                    [
                        rng.gen_range(-4..5),
                        rng.gen_range(-4..5),
                        rng.gen_range(-4..5),
                    ]
                })
                .collect();
            if let Ok(p) = PolyLoop::new(pts) {
                break p;
            }
        };
        let (a, b) = (pick(), pick());
        let Ok(ab) = linking_number(&a, &b) else {
            continue;
        };
        ensure(
            linking_number(&b, &a).map_err(err)? == ab,
            "L(g,h) ≠ L(h,g)",
        )?;
        linked += usize::from(ab != 0);
        pairs += 1;
    }
    Ok(format!(
        "Hopf L = {l}, reversed {}; split 0; symmetric on 50 pairs ({linked} linked)",
        -l
    ))
}

fn c12_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let (x, y) = (random_q(&mut rng, 3), random_q(&mut rng, 3));
        ensure(
            mul(&x, &mul(&x, &y)) == mul(&mul(&x, &x), &y),
            "alternativity fails at level 3",
        )?;
    }
    let (x, y) = nonalternative_pair();
    ensure(
        mul(&x, &mul(&x, &y)) != mul(&mul(&x, &x), &y),
        "stored level-4 alternativity witness holds",
    )?;
    let (a, b, c) = nonassociative_triple();
    ensure(
        mul(&mul(&a, &b), &c) != mul(&a, &mul(&b, &c)),
        "stored level-3 associativity witness holds",
    )?;
    let e8 = build_e8().map_err(err)?;
    ensure(
        dual_lattice(&e8).map_err(err)?.same_points(&e8),
        "dual(E8) ≠ E8",
    )?;
    let delta = default_delta();
    for (name, l, bound) in [("E8", e8, 4), ("Leech", leech_from_ii26().map_err(err)?, 4)] {
        let r = lll_reduce(&l, &delta).map_err(err)?;
        ensure(r.det() == l.det(), format!("LLL changes det of {name}"))?;
        let (before, after) = (
            short_vectors(&l, bound).map_err(err)?,
            short_vectors(&r, bound).map_err(err)?,
        );
        ensure(
            before == after,
            format!("LLL changes norm counts of {name}: {before:?} vs {after:?}"),
        )?;
    }
    Ok("alternative at level 3, witnesses at levels 3 and 4; dual(E8) = E8; LLL preserves det and counts".into())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    // libtest flags such as --nocapture may be passed through; only --slow matters
    let slow = args.iter().any(|a| a == "--slow")
        || std::env::var("EXCEPTIA_SLOW").is_ok_and(|v| v == "1");
    let criteria: Vec<(u32, &str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        (
            1,
            "division-algebra frontier",
            Duration::from_secs(1),
            Box::new(c1_division_frontier),
        ),
        (
            2,
            "Fano invariants",
            Duration::from_secs(1),
            Box::new(c2_fano),
        ),
        (3, "triality", Duration::from_secs(1), Box::new(c3_triality)),
        (
            4,
            "Clifford tables",
            Duration::from_secs(1),
            Box::new(c4_clifford_tables),
        ),
        (
            5,
            "spinor taxonomy",
            Duration::from_secs(1),
            Box::new(c5_spinors),
        ),
        (6, "E8", Duration::from_secs(5), Box::new(c6_e8)),
        (7, "j-function", Duration::from_secs(60), Box::new(c7_j)),
        (
            8,
            "Lorentzian",
            Duration::from_secs(10),
            Box::new(c8_lorentzian),
        ),
        (
            9,
            "Leech",
            Duration::from_secs(15 * 60),
            Box::new(move || c9_leech(slow)),
        ),
        (10, "BBP", Duration::from_secs(5), Box::new(c10_bbp)),
        (11, "linking", Duration::from_secs(5), Box::new(c11_linking)),
        (
            12,
            "property suites",
            Duration::from_secs(120),
            Box::new(c12_properties),
        ),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {n:>2} {name} ({took:.2?}): {msg}"),
            Err(msg) => {
                println!("FAIL {n:>2} {name} ({took:.2?}): {msg}");
                match EXPECTED_FAILURES.iter().find(|(k, _)| *k == n) {
                    Some((_, why)) => println!("     expected: {why}"),
                    None => unexpected.push(n),
                }
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
