//! The named identity checks behind `verify all`, each capped at a
//! maximum `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolprod::{
    bivariate_boolean, boolean_product, boolean_q_abstract, boolean_total, check_double_schur_positive,
    check_schur_positive,
};
use crate::chern::{chern_plethysm, chern_roots, pragacz_check, total_chern, BundleExpr, SymFn};
use crate::combinat::{binomial, derangements, partitions_inside, partitions_of, Partition};
use crate::frobmod::{
    coinvariant_grfrob, derangement_qsym_check, hrs_grfrob, positroid_act, positroid_enumerate, positroid_frobenius,
    reiner_webb, superspace_grfrob,
};
use crate::lascoux::{
    asm_count, binomial_det, f_sequence, f_sequence_by_fillings, gv_enumerate, gv_from_filling, gv_to_filling,
    lascoux_sym_expansion, lascoux_wedge_expansion, normalized_lascoux_det, rff_enumerate, sym_product,
    wedge_product, PathFamily, Step,
};
use crate::polyring::{Alphabets, MultiPoly};
use crate::schurbasis::{e_h_product, pieri_e, pieri_h, GradedSchurSeries, SchurVector, Specialize};
use crate::symexpand::{antisymmetrize, schur_expand};

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

pub const CRITERIA: [(usize, &str); 15] = [
    (1, "B_{n,1} = s_(1^n) and B_{n,2} = s_staircase"),
    (2, "B_{n,k} at all ones equals k^C(n,k)"),
    (3, "Schur positivity of B_{n,k} and B_n"),
    (4, "expansion of prod_{i<j<=3}(1+x_i+x_j)"),
    (5, "wedge and sym Lascoux expansions match peeled products"),
    (6, "fillings = binomial det = path families = normalized Lascoux det"),
    (7, "sum of filling counts equals ASM(n)"),
    (8, "f-sequence 3, 16, 147, 2304, 61347"),
    (9, "lattice path bijection round trips"),
    (10, "antisymmetrizer form of prod_{i<j}(1+x_i+x_j)"),
    (11, "positroid Frobenius from characters and braid relations"),
    (12, "superspace graded Frobenius"),
    (13, "Reiner-Webb and derangement identities"),
    (14, "HRS degeneration and positivity"),
    (15, "Chern plethysm layer"),
];

/// Runs every check with each bound capped at `max_n`.
pub fn verify_all(max_n: usize) -> Vec<Check> {
    CRITERIA
        .par_iter()
        .map(|&(id, _)| run_check(id, max_n))
        .collect()
}

/// Runs a single numbered check.
pub fn run_check(id: usize, max_n: usize) -> Check {
    let cap = |b: usize| b.min(max_n);
    let outcome = match id {
        1 => c01(cap(6)),
        2 => c02(cap(6)),
        3 => c03(cap(6), cap(5)),
        4 => c04(max_n),
        5 => c05(cap(5), cap(4)),
        6 => c06(cap(6)),
        7 => c07(cap(6)),
        8 => c08(cap(5)),
        9 => c09(cap(5)),
        10 => c10(cap(5)),
        11 => c11(cap(5)),
        12 => c12(cap(6)),
        13 => c13(cap(7), cap(6)),
        14 => c14(cap(6), cap(5)),
        15 => c15(max_n),
        _ => Err(format!("no check numbered {id}")),
    };
    let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1);
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { id, name, passed, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn num_subsets(n: usize, k: usize) -> u32 {
    binomial(n as i64, k as i64).to_u32().expect("small binomial")
}

fn single(lambda: Partition) -> BTreeMap<Partition, BigInt> {
    BTreeMap::from([(lambda, BigInt::from(1))])
}

fn c01(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let e1 = schur_expand(&boolean_product(n, 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(e1.terms == single(Partition::column(n)), || format!("B_{{{n},1}} = {:?}", e1.terms))?;
        if n >= 2 {
            let e2 = schur_expand(&boolean_product(n, 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(e2.terms == single(Partition::staircase(n - 1)), || format!("B_{{{n},2}} = {:?}", e2.terms))?;
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn c02(max_n: usize) -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    pairs.par_iter().try_for_each(|&(n, k)| {
        let v = boolean_product(n, k).map_err(|e| e.to_string())?.evaluate_all_ones(None);
        let want = Pow::pow(BigInt::from(k), num_subsets(n, k));
        ensure(v == want, || format!("B_{{{n},{k}}}(1) = {v}, expected {want}"))
    })?;
    Ok(format!("{} pairs, n <= {max_n}", pairs.len()))
}

fn c03(max_nk: usize, max_total: usize) -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=max_nk).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    pairs.par_iter().try_for_each(|&(n, k)| {
        let r = check_schur_positive(&boolean_product(n, k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(r.positive, || format!("B_{{{n},{k}}} has coefficient {:?}", r.violation))
    })?;
    (1..=max_total).into_par_iter().try_for_each(|n| {
        let r = check_schur_positive(&boolean_total(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(r.positive, || format!("B_{n} has coefficient {:?}", r.violation))
    })?;
    Ok(format!("B_{{n,k}} for n <= {max_nk}, B_n for n <= {max_total}"))
}

fn vector(items: &[(&[usize], i64)]) -> SchurVector {
    SchurVector::from_terms(items.iter().map(|(l, c)| (Partition::from_parts(l), BigInt::from(*c))))
}

fn c04(max_n: usize) -> Outcome {
    if max_n < 3 {
        return Ok("skipped below n = 3".into());
    }
    let got: SchurVector = schur_expand(&wedge_product(3)).map_err(|e| e.to_string())?.into();
    let want = vector(&[(&[], 1), (&[1], 2), (&[2], 1), (&[1, 1], 2), (&[2, 1], 1)]);
    ensure(got == want, || format!("got {got}"))?;
    Ok(format!("{got}"))
}

fn c05(max_wedge: usize, max_sym: usize) -> Outcome {
    for n in 1..=max_wedge {
        let peeled: SchurVector = schur_expand(&wedge_product(n)).map_err(|e| e.to_string())?.into();
        ensure(peeled == lascoux_wedge_expansion(n), || format!("wedge identity fails at n = {n}"))?;
    }
    for n in 1..=max_sym {
        let peeled: SchurVector = schur_expand(&sym_product(n)).map_err(|e| e.to_string())?.into();
        ensure(peeled == lascoux_sym_expansion(n), || format!("sym identity fails at n = {n}"))?;
    }
    Ok(format!("wedge n <= {max_wedge}, sym n <= {max_sym}"))
}

fn c06(max_n: usize) -> Outcome {
    let mut shapes = 0;
    for n in 1..=max_n {
        let mus = partitions_inside(&Partition::staircase(n - 1));
        shapes += mus.len();
        mus.par_iter().try_for_each(|mu| {
            let r = BigInt::from(rff_enumerate(mu, n).len());
            let b = binomial_det(mu, n);
            let g = BigInt::from(gv_enumerate(mu, n).len());
            let l = normalized_lascoux_det(mu, n).map_err(|e| format!("n={n} mu={mu}: {e}"))?;
            ensure(r == b && b == g && g == l, || format!("n={n} mu={mu}: {r} {b} {g} {l}"))
        })?;
    }
    Ok(format!("{shapes} shapes, n <= {max_n}"))
}

const ASM: [u32; 6] = [1, 2, 7, 42, 429, 7436];

fn c07(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let total: BigInt = lascoux_wedge_expansion(n).terms().values().sum();
        let want = BigInt::from(ASM[n - 1]);
        ensure(total == want && asm_count(n) == want, || {
            format!("n={n}: sum {total}, product formula {}", asm_count(n))
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

const F_SEQ: [u32; 5] = [3, 16, 147, 2304, 61347];

fn c08(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let f = f_sequence(n);
        ensure(f == BigInt::from(F_SEQ[n - 1]), || format!("f({n}) = {f}"))?;
        if n <= 4 {
            let g = f_sequence_by_fillings(n);
            ensure(g == f, || format!("filling sum at n={n} is {g}"))?;
        }
    }
    let shown: Vec<String> = (1..=max_n).map(|n| F_SEQ[n - 1].to_string()).collect();
    Ok(shown.join(", "))
}

fn c09(max_n: usize) -> Outcome {
    let mut families = 0;
    for n in 1..=max_n {
        for mu in partitions_inside(&Partition::staircase(n - 1)) {
            for fam in gv_enumerate(&mu, n) {
                let t = gv_to_filling(&fam);
                ensure(gv_from_filling(&t) == fam && gv_to_filling(&gv_from_filling(&t)) == t, || {
                    format!("round trip fails at n={n} mu={mu}")
                })?;
                families += 1;
            }
        }
    }
    if max_n >= 5 {
        use Step::{East as E, North as N};
        let fam = PathFamily {
            n: 5,
            mu: Partition::from_parts(&[2, 2, 1, 1]),
            paths: vec![vec![E, N, E, N], vec![N, E, N], vec![E, N], vec![N], vec![]],
        };
        ensure(fam.is_valid(), || "drawn family is not a valid family".into())?;
        let rows = gv_to_filling(&fam).rows().to_vec();
        ensure(rows == vec![vec![3, 1], vec![3, 1], vec![1], vec![1]], || format!("drawn family maps to {rows:?}"))?;
    }
    Ok(format!("{families} families, n <= {max_n}"))
}

fn c10(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let a = Alphabets::single(n);
        let f = (1..=n).fold(MultiPoly::one(a), |acc, i| {
            let xi = MultiPoly::x(a, i);
            &acc * &(&xi * &(&MultiPoly::one(a) + &xi)).pow(n - i)
        });
        ensure(antisymmetrize(&f, n) == wedge_product(n), || format!("fails at n = {n}"))?;
    }
    Ok(format!("n <= {max_n}"))
}

fn c11(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let want = (0..=n).fold(SchurVector::zero(), |acc, j| acc.add(&e_h_product(j, n - j)));
        let got = positroid_frobenius(n);
        ensure(got == want, || format!("n={n}: {got} vs {want}"))?;
    }
    for n in 2..=max_n {
        let gens: Vec<_> = (1..n).map(|i| crate::combinat::Permutation::adjacent(n, i)).collect();
        let word = |w: &[usize], v: &crate::frobmod::Positroid| {
            w.iter().rev().fold((v.clone(), 1), |(u, s), &i| {
                let (u2, s2) = positroid_act(&gens[i - 1], &u);
                (u2, s * s2)
            })
        };
        for v in positroid_enumerate(n) {
            for i in 1..n {
                ensure(word(&[i, i], &v) == (v.clone(), 1), || format!("s_{i}^2 fails on {v}"))?;
                if i + 1 < n {
                    ensure(word(&[i, i + 1, i], &v) == word(&[i + 1, i, i + 1], &v), || {
                        format!("braid relation at {i} fails on {v}")
                    })?;
                }
                for j in (i + 2)..n {
                    ensure(word(&[i, j], &v) == word(&[j, i], &v), || format!("s_{i} s_{j} fails on {v}"))?;
                }
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn c12(max_n: usize) -> Outcome {
    if max_n >= 3 {
        let e = SchurVector::e;
        let p = Partition::from_parts;
        let mut want = GradedSchurSeries::zero();
        want.add_vector(3, 0, &e(3));
        want.add_vector(2, 0, &pieri_e(&SchurVector::h(1), 2));
        want.add_vector(1, 0, &pieri_e(&SchurVector::h(2), 1));
        want.add_vector(1, 1, &pieri_e(&e(2), 1));
        want.add_vector(0, 0, &SchurVector::h(3));
        want.add_vector(0, 1, &SchurVector::schur(p(&[2, 1])));
        want.add_vector(0, 2, &SchurVector::schur(p(&[2, 1])));
        want.add_vector(0, 3, &e(3));
        ensure(superspace_grfrob(3) == want, || "n = 3 display not reproduced".into())?;
    }
    for n in 1..=max_n {
        let g = superspace_grfrob(n);
        let t1 = g.specialize(&Specialize::Keep, &Specialize::value(1));
        ensure(t1 == boolean_q_abstract(n).map_err(|e| e.to_string())?, || format!("t = 1 fails at n = {n}"))?;
        let dim: BigInt = (0..=n)
            .map(|j| binomial(n as i64, j as i64) * crate::combinat::factorial(n - j))
            .sum();
        let got = g.evaluate(1, 1).dimension();
        ensure(got == dim, || format!("dimension {got} vs {dim} at n = {n}"))?;
    }
    Ok(format!("n <= {max_n}"))
}

fn c13(max_rw: usize, max_qsym: usize) -> Outcome {
    for n in 2..=max_rw {
        let rw = reiner_webb(n).map_err(|e| e.to_string())?;
        let specialized = boolean_q_abstract(n).map_err(|e| e.to_string())?.evaluate(-1, 1);
        ensure(rw == specialized, || format!("n={n}: {rw} vs {specialized}"))?;
        ensure(rw.is_nonnegative(), || format!("negative coefficient at n={n}"))?;
        let d = BigInt::from(derangements(n).len());
        ensure(rw.dimension() == d, || format!("dimension {} vs |D_{n}| = {d}", rw.dimension()))?;
    }
    for n in 1..=max_qsym {
        ensure(derangement_qsym_check(n), || format!("quasisymmetric identity fails at n = {n}"))?;
    }
    Ok(format!("Reiner-Webb n <= {max_rw}, derangements n <= {max_qsym}"))
}

fn c14(max_deg: usize, max_pos: usize) -> Outcome {
    for n in 1..=max_deg {
        ensure(hrs_grfrob(n, n, n).map_err(|e| e.to_string())? == coinvariant_grfrob(n), || {
            format!("hrs(n,n,n) differs at n = {n}")
        })?;
    }
    for n in 1..=max_pos {
        for k in 0..=n {
            for r in 0..=k {
                let g = hrs_grfrob(n, k, r).map_err(|e| e.to_string())?;
                ensure(g.is_nonnegative(), || format!("negative coefficient at ({n},{k},{r})"))?;
            }
        }
    }
    Ok(format!("degeneration n <= {max_deg}, positivity n <= {max_pos}"))
}

fn random_bundle(rng: &mut ChaCha8Rng, depth: usize) -> BundleExpr {
    let base = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.7) {
            BundleExpr::base("E", 2)
        } else {
            BundleExpr::base("F", 1 + rng.gen_range(0..2))
        }
    };
    if depth == 0 {
        return base(rng);
    }
    match rng.gen_range(0..4) {
        0 => base(rng),
        1 => BundleExpr::oplus(random_bundle(rng, depth - 1), base(rng)),
        2 => BundleExpr::tensor(base(rng), base(rng)),
        _ => BundleExpr::wedge(1 + rng.gen_range(0..2), random_bundle(rng, depth - 1)),
    }
}

fn random_vector(rng: &mut ChaCha8Rng) -> SchurVector {
    let shapes: Vec<Partition> = (0..=3).flat_map(|d| partitions_of(d, 3)).collect();
    let terms = rng.gen_range(1..=3);
    SchurVector::from_terms((0..terms).map(|_| {
        let l = shapes[rng.gen_range(0..shapes.len())].clone();
        let c = rng.gen_range(1i64..=3);
        (l, BigInt::from(if rng.gen_bool(0.5) { c } else { -c }))
    }))
}

fn pleth(f: &SchurVector, e: &BundleExpr) -> std::result::Result<MultiPoly, String> {
    chern_plethysm(&SymFn::Vector(f.clone()), e).map_err(|err| err.to_string())
}

/// Additivity, multiplicativity against `h_r` and `e_r`, the degree law and
/// rank arithmetic on `cases` seeded random instances.
pub fn plethysm_laws(cases: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        // rejecting bundles whose alphabets collide in rank
        let e = loop {
            let e = random_bundle(&mut rng, 2);
            if e.alphabets().is_ok() {
                break e;
            }
        };
        let f = random_vector(&mut rng);
        let g = random_vector(&mut rng);
        let r = rng.gen_range(0..=2);
        let lhs = pleth(&f.add(&g), &e)?;
        ensure(lhs == &pleth(&f, &e)? + &pleth(&g, &e)?, || format!("case {case}: additivity on {e}"))?;
        let pf = pleth(&f, &e)?;
        let hr = chern_plethysm(&SymFn::H(r), &e).map_err(|x| x.to_string())?;
        let er = chern_plethysm(&SymFn::E(r), &e).map_err(|x| x.to_string())?;
        ensure(pleth(&pieri_h(&f, r), &e)? == &pf * &hr, || format!("case {case}: h-product on {e}"))?;
        ensure(pleth(&pieri_e(&f, r), &e)? == &pf * &er, || format!("case {case}: e-product on {e}"))?;
        let lambda = f.terms().keys().next().cloned().unwrap_or_default();
        let s = chern_plethysm(&SymFn::S(lambda.clone()), &e).map_err(|x| x.to_string())?;
        ensure(s.is_zero() || (s.is_homogeneous() && s.degree() == Some(lambda.size())), || {
            format!("case {case}: degree law for s{lambda} on {e}")
        })?;
        let roots = chern_roots(&e).map_err(|x| x.to_string())?;
        ensure(BigInt::from(roots.len()) == e.rank(), || format!("case {case}: rank of {e}"))?;
    }
    Ok(format!("{cases} random cases"))
}

fn c15(max_n: usize) -> Outcome {
    let n_top = max_n.min(5);
    for n in 1..=n_top {
        for k in 1..=n {
            let d = num_subsets(n, k) as usize;
            let got = chern_plethysm(&SymFn::E(d), &BundleExpr::wedge(k, BundleExpr::base("E", n)))
                .map_err(|e| e.to_string())?;
            ensure(got == boolean_product(n, k).map_err(|e| e.to_string())?, || {
                format!("top Chern class of wedge^{k} E:{n}")
            })?;
        }
        let w = total_chern(&BundleExpr::wedge(2, BundleExpr::base("E", n))).map_err(|e| e.to_string())?;
        ensure(w == wedge_product(n), || format!("total Chern class of wedge^2 E:{n}"))?;
        let s = total_chern(&BundleExpr::sym(2, BundleExpr::base("E", n))).map_err(|e| e.to_string())?;
        ensure(s == sym_product(n), || format!("total Chern class of Sym^2 E:{n}"))?;
    }
    plethysm_laws(100, 0x5eed)?;
    let nm = max_n.min(3);
    let mut instances = 0;
    for n in 1..=nm {
        for m in 1..=nm {
            let (en, fm) = (BundleExpr::base("E", n), BundleExpr::base("F", m));
            for lambda in (1..=3).flat_map(|d| partitions_of(d, d)) {
                for e in [BundleExpr::oplus(en.clone(), fm.clone()), BundleExpr::tensor(en.clone(), fm.clone())] {
                    let r = pragacz_check(&lambda, &e).map_err(|x| x.to_string())?;
                    ensure(r.positive, || format!("s{lambda}({e}) is not Schur positive"))?;
                    instances += 1;
                }
            }
            for k in 1..=n {
                for l in 1..=m {
                    let f = bivariate_boolean(n, k, m, l).map_err(|x| x.to_string())?;
                    let r = check_double_schur_positive(&f).map_err(|x| x.to_string())?;
                    ensure(r.positive, || format!("P_{{{k},{l}}}(X_{n}; Y_{m}) has {:?}", r.violation))?;
                    let top = chern_plethysm(
                        &SymFn::E(num_subsets(n, k) as usize * num_subsets(m, l) as usize),
                        &BundleExpr::tensor(BundleExpr::wedge(k, en.clone()), BundleExpr::wedge(l, fm.clone())),
                    )
                    .map_err(|x| x.to_string())?;
                    ensure(top == f, || format!("top Chern class differs for ({n},{k},{m},{l})"))?;
                    instances += 1;
                }
            }
        }
    }
    Ok(format!("top classes n <= {n_top}, 100 random plethysm cases, {instances} two-alphabet instances"))
}
