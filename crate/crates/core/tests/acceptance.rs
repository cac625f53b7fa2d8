//! Acceptance gate: one PASS/FAIL line per criterion, each with its runtime bound.
//! Exact arithmetic throughout, so every comparison is equality.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use bcring::bc::{self, definitions, Sidedness};
use bcring::harness::{self, Mode, Options};
use bcring::perturbation::{jacobson_inverse, jacobson_left, jacobson_right, perturbed_one_sided};
use bcring::product::{mixed_transfer, split_left, split_right, transfer, ProductError};
use bcring::{RingSpec, Side};
use common::Oracle;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zmods(range: std::ops::RangeInclusive<u64>) -> Vec<String> {
    range.map(|n| format!("zmod:{n}")).collect()
}

fn triples(o: &Oracle) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    let n = o.len();
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

fn codes(v: &[bcring::Element]) -> Vec<usize> {
    v.iter().map(|e| e.code() as usize).collect()
}

fn verify_all(claims: &[&str], rings: &[&str], mode: Mode) -> Result<u64, String> {
    let mut cases = 0;
    for ring in rings {
        let spec: RingSpec = ring.parse().map_err(|e| format!("{e}"))?;
        for claim in claims {
            let report = harness::verify(claim, &spec, mode, &Options::default()).map_err(|e| e.to_string())?;
            ensure(report.passed(), || {
                format!("{claim} on {ring}: {} failures, first {:?}", report.failure_count, report.failures.first())
            })?;
            cases += report.cases;
        }
    }
    Ok(cases)
}

// 1. Witness sets for (5, 0, 2) over Z_8.
fn witness_sets_z8() -> Outcome {
    let o = Oracle::new("zmod:8");
    let (a, b, c) = (5, 0, 2);
    let left = o.left_set(a, b, c);
    let right_ann = o.right_ann_set(a, b, c);
    let lib_left = codes(&definitions::left_bc_set(&o.ring, o.e(a), o.e(b), o.e(c)));
    let lib_right_ann = codes(&definitions::right_ann_bc_set(&o.ring, o.e(a), o.e(b), o.e(c)));
    ensure(lib_left == left && lib_right_ann == right_ann, || "library and oracle sets disagree".into())?;
    ensure(left.contains(&4), || format!("left set {left:?} lacks 4"))?;
    ensure(right_ann.contains(&6), || format!("right-annihilator set {right_ann:?} lacks 6"))?;
    ensure(!definitions::is_regular(&o.ring, o.e(2)), || "2 reported regular".into())?;
    ensure(left != right_ann, || {
        format!("left set {left:?} equals right-annihilator set {right_ann:?}; the sets do not differ")
    })?;
    Ok(format!("left {left:?}, right-annihilator {right_ann:?}"))
}

// 2. Criterion-based existence against definitional search.
fn existence_oracle() -> Outcome {
    let mut rings = zmods(2..=10);
    rings.push("mat:2:zmod:2".into());
    let mut checked = 0;
    for spec in &rings {
        let o = Oracle::new(spec);
        for (a, b, c) in triples(&o) {
            let (ea, eb, ec) = (o.e(a), o.e(b), o.e(c));
            let left = !o.left_set(a, b, c).is_empty();
            let right = !o.right_set(a, b, c).is_empty();
            ensure(bc::left_bc_exists(&o.ring, ea, eb, ec) == left, || format!("left {spec} {a},{b},{c}"))?;
            ensure(bc::right_bc_exists(&o.ring, ea, eb, ec) == right, || format!("right {spec} {a},{b},{c}"))?;
            let lw = bc::left_bc(&o.ring, ea, eb, ec);
            let rw = bc::right_bc(&o.ring, ea, eb, ec);
            ensure(lw.as_ref().map_or(!left, |w| w.recheck(&o.ring) && o.left_set(a, b, c).contains(&(w.y.code() as usize))), || {
                format!("left witness {spec} {a},{b},{c}")
            })?;
            ensure(rw.as_ref().map_or(!right, |w| w.recheck(&o.ring) && o.right_set(a, b, c).contains(&(w.y.code() as usize))), || {
                format!("right witness {spec} {a},{b},{c}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} triples, 0 discrepancies"))
}

// 3. Five-way equivalences.
fn five_way() -> Outcome {
    let rings = ["zmod:8", "mat:2:zmod:2"];
    let cases = verify_all(&["five-way-left", "five-way-right"], &rings, Mode::Exhaustive)?;
    // Independent spot of the end conditions: R = Rca + °b and R = abR + c°.
    for spec in rings {
        let o = Oracle::new(spec);
        for (a, b, c) in triples(&o) {
            let left_cover = o.whole(&o.sum(&o.left_mult(o.m(c, a)), &o.left_ann(b)));
            let right_cover = o.whole(&o.sum(&o.right_mult(o.m(a, b)), &o.right_ann(c)));
            ensure(left_cover == !o.left_set(a, b, c).is_empty(), || format!("R=Rca+°b {spec} {a},{b},{c}"))?;
            ensure(right_cover == !o.right_set(a, b, c).is_empty(), || format!("R=abR+c° {spec} {a},{b},{c}"))?;
        }
    }
    Ok(format!("{cases} harness cases, 0 failures"))
}

// 4. Two-sided corollary and uniqueness.
fn two_sided() -> Outcome {
    let mut rings = zmods(2..=10);
    rings.push("mat:2:zmod:2".into());
    let mut nonempty = 0;
    for spec in &rings {
        let o = Oracle::new(spec);
        for (a, b, c) in triples(&o) {
            let set = o.two_sided_set(a, b, c);
            ensure(set.len() <= 1, || format!("{spec} {a},{b},{c}: {} witnesses", set.len()))?;
            let both = !o.left_set(a, b, c).is_empty() && !o.right_set(a, b, c).is_empty();
            ensure(both == !set.is_empty(), || format!("{spec} {a},{b},{c}: corollary"))?;
            let built = bc::two_sided_bc(&o.ring, o.e(a), o.e(b), o.e(c)).map_err(|e| e.to_string())?;
            ensure(built.map(|w| w.y.code() as usize) == set.first().copied(), || {
                format!("{spec} {a},{b},{c}: constructed s·c = b·t differs")
            })?;
            nonempty += usize::from(!set.is_empty());
        }
    }
    Ok(format!("{nonempty} invertible triples, all unique"))
}

// 5. Hybrid characterization.
fn hybrid() -> Outcome {
    let mut nonempty = 0;
    for spec in ["zmod:6", "zmod:8"] {
        let o = Oracle::new(spec);
        for (a, b, c) in triples(&o) {
            let set = o.hybrid_set(a, b, c);
            let right = o.right_set(a, b, c);
            let ann = o.right_ann_set(a, b, c);
            let meet: Vec<usize> = right.into_iter().filter(|y| ann.contains(y)).collect();
            ensure(set == meet, || format!("{spec} {a},{b},{c}: {set:?} vs {meet:?}"))?;
            ensure(set.len() <= 1, || format!("{spec} {a},{b},{c}: not unique"))?;
            let lib = bc::hybrid_bc(&o.ring, o.e(a), o.e(b), o.e(c)).map(|w| w.y.code() as usize);
            ensure(lib == set.first().copied(), || format!("{spec} {a},{b},{c}: hybrid_bc"))?;
            nonempty += usize::from(!set.is_empty());
        }
    }
    Ok(format!("{nonempty} hybrid-invertible triples"))
}

// 6. Star duality under transpose.
fn star_duality() -> Outcome {
    let o = Oracle::new("mat:2:zmod:2");
    for (a, b, c) in triples(&o) {
        let mut mapped: Vec<usize> = o.left_set(a, b, c).into_iter().map(|y| o.s(y)).collect();
        mapped.sort_unstable();
        let dual = o.right_set(o.s(a), o.s(c), o.s(b));
        ensure(mapped == dual, || format!("{a},{b},{c}: {mapped:?} vs {dual:?}"))?;
        let (ea, eb, ec) = (o.e(a), o.e(b), o.e(c));
        let (sa, sb, sc) = (o.ring.star(ea), o.ring.star(eb), o.ring.star(ec));
        ensure(bc::left_bc_exists(&o.ring, ea, eb, ec) == bc::right_bc_exists(&o.ring, sa, sc, sb), || {
            format!("{a},{b},{c}: solver duality")
        })?;
    }
    verify_all(&["star-duality"], &["mat:2:zmod:2"], Mode::Exhaustive)?;
    Ok("4096 triples, 0 failures".into())
}

// 7. Moore-Penrose, {1,3} and {1,4}.
fn penrose_bridges() -> Outcome {
    let mut rings = zmods(2..=10);
    rings.push("mat:2:zmod:3".into());
    let mut mp = 0;
    for spec in &rings {
        let o = Oracle::new(spec);
        for a in 0..o.len() {
            let ea = o.e(a);
            let four = o.penrose_set(a, &[1, 2, 3, 4]);
            let lib = bc::moore_penrose(&o.ring, ea).map_err(|e| e.to_string())?;
            ensure(lib.as_ref().map(|w| w.y.code() as usize) == four.first().copied() && four.len() <= 1, || {
                format!("{spec} a={a}: moore_penrose vs four-equation search {four:?}")
            })?;
            ensure(lib.as_ref().is_none_or(|w| w.recheck(&o.ring)), || format!("{spec} a={a}: certificate"))?;
            // Route through (b,c)-inverses: left (a*,1) and right (1,a*).
            let via_bc = bc::left_bc_exists(&o.ring, ea, o.ring.star(ea), o.ring.one())
                && bc::right_bc_exists(&o.ring, ea, o.ring.one(), o.ring.star(ea));
            ensure(via_bc == !four.is_empty(), || format!("{spec} a={a}: bc route"))?;

            let sa = o.s(a);
            let lemma_13 = o.right_mult(sa) == o.right_mult(o.m(sa, a));
            let lemma_14 = o.right_mult(a) == o.right_mult(o.m(a, sa));
            ensure(lemma_13 == !o.penrose_set(a, &[1, 3]).is_empty(), || format!("{spec} a={a}: {{1,3}}"))?;
            ensure(lemma_14 == !o.penrose_set(a, &[1, 4]).is_empty(), || format!("{spec} a={a}: {{1,4}}"))?;
            for eqs in [[1u8, 3], [1, 4]] {
                let delta = bc::DeltaSet::new(&eqs).map_err(|e| e.to_string())?;
                let lib = codes(&bc::delta_inverses(&o.ring, ea, delta).map_err(|e| e.to_string())?);
                ensure(lib == o.penrose_set(a, &eqs), || format!("{spec} a={a}: delta {eqs:?}"))?;
            }
            mp += usize::from(!four.is_empty());
        }
    }
    Ok(format!("{mp} Moore-Penrose invertible elements"))
}

// 8. Strong π-regularity and Drazin inverses.
fn drazin() -> Outcome {
    let mut rings = zmods(2..=12);
    rings.push("mat:2:zmod:2".into());
    let mut count = 0;
    for spec in &rings {
        let o = Oracle::new(spec);
        for a in 0..o.len() {
            let ea = o.e(a);
            ensure(bc::pi_regular(&o.ring, ea, Side::Left).map_err(|e| e.to_string())?.is_some(), || {
                format!("{spec} a={a}: not left π-regular")
            })?;
            ensure(bc::pi_regular(&o.ring, ea, Side::Right).map_err(|e| e.to_string())?.is_some(), || {
                format!("{spec} a={a}: not right π-regular")
            })?;
            let w = bc::drazin(&o.ring, ea)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{spec} a={a}: no Drazin inverse"))?;
            let (y, k) = (w.y.code() as usize, w.index.ok_or("missing index")?);
            ensure(o.m(y, a) == o.m(a, y) && o.m3(y, a, y) == y && o.m(o.pow(a, k + 1), y) == o.pow(a, k), || {
                format!("{spec} a={a}: Drazin axioms fail for y={y}, k={k}")
            })?;
            let ak = o.ring.pow(ea, k);
            let via = bc::two_sided_bc(&o.ring, ea, ak, ak).map_err(|e| e.to_string())?;
            ensure(via.map(|v| v.y) == Some(w.y), || format!("{spec} a={a}: (a^k,a^k)-inverse differs"))?;
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

fn check_product_tuple(o: &Oracle, t: [usize; 5]) -> Result<(), String> {
    let [p, a, q, b, c] = t;
    let e = |x: usize| o.e(x);
    let code = |x: Option<bcring::Element>| x.map(|v| v.code() as usize);
    let (paq, pa, aq) = (o.m3(p, a, q), o.m(p, a), o.m(a, q));
    let (qb, cp, qc, bp) = (o.m(q, b), o.m(c, p), o.m(q, c), o.m(b, p));
    let tag = || format!("{} {t:?}", o.ring.spec());

    type SetFn = fn(&Oracle, usize, usize, usize) -> Vec<usize>;
    for (split, set) in [
        (split_left as fn(_, _, _, _, _, _) -> _, Oracle::left_set as SetFn),
        (split_right, Oracle::right_set as SetFn),
    ] {
        let s = split(&o.ring, e(p), e(a), e(q), e(b), e(c)).map_err(|err| format!("{}: {err}", tag()))?;
        let whole = set(o, paq, b, c);
        ensure(s.exists == !whole.is_empty(), || format!("{}: split exists", tag()))?;
        ensure(s.exists == (!set(o, pa, qb, c).is_empty() && !set(o, aq, b, cp).is_empty()), || {
            format!("{}: split equivalence", tag())
        })?;
        if s.exists {
            let ok = code(s.y).is_some_and(|y| whole.contains(&y))
                && code(s.x).is_some_and(|x| set(o, pa, qb, c).contains(&x))
                && code(s.z).is_some_and(|z| set(o, aq, b, cp).contains(&z))
                && code(s.y_composed).is_some_and(|y| whole.contains(&y));
            ensure(ok, || format!("{}: split witnesses", tag()))?;
        }
    }

    let has_q_prime = (0..o.len()).any(|x| o.m3(x, q, b) == b);
    let has_p_prime = (0..o.len()).any(|x| o.m3(c, p, x) == c);
    for (side, set, needs) in [
        (Sidedness::Left, Oracle::left_set as SetFn, has_q_prime),
        (Sidedness::Right, Oracle::right_set as SetFn, has_p_prime),
        (Sidedness::Both, Oracle::two_sided_set as SetFn, has_q_prime && has_p_prime),
    ] {
        match transfer(&o.ring, e(p), e(a), e(q), e(b), e(c), side) {
            Err(ProductError::PreconditionUnsatisfied(_)) => {
                ensure(!needs, || format!("{}: transfer {side:?} refused", tag()))?
            }
            Err(err) => return Err(format!("{}: transfer {side:?}: {err}", tag())),
            Ok(tr) => {
                ensure(needs, || format!("{}: transfer {side:?} ran without precondition", tag()))?;
                let whole = !set(o, paq, b, c).is_empty();
                let inner = set(o, a, qb, cp);
                ensure(tr.exists == whole && whole == !inner.is_empty(), || format!("{}: transfer {side:?}", tag()))?;
                ensure(code(tr.w).map_or(!tr.exists, |w| inner.contains(&w)), || {
                    format!("{}: w = q·y·p {side:?}", tag())
                })?;
            }
        }
    }

    let mixed_ok = (0..o.len()).any(|x| o.m3(x, q, c) == c) && (0..o.len()).any(|x| o.m3(b, p, x) == b);
    match mixed_transfer(&o.ring, e(p), e(a), e(q), e(b), e(c)) {
        Err(ProductError::PreconditionUnsatisfied(_)) => ensure(!mixed_ok, || format!("{}: mixed refused", tag()))?,
        Err(err) => return Err(format!("{}: mixed: {err}", tag())),
        Ok(m) => {
            ensure(mixed_ok, || format!("{}: mixed ran without precondition", tag()))?;
            let whole = o.two_sided_set(paq, b, c);
            let parts = !o.right_set(pa, qb, qc).is_empty() && !o.left_set(aq, bp, cp).is_empty();
            ensure(m.exists == !whole.is_empty() && m.exists == parts, || format!("{}: mixed", tag()))?;
            ensure(code(m.y) == whole.first().copied(), || format!("{}: mixed witness", tag()))?;
        }
    }
    Ok(())
}

// 9. Products.
fn products() -> Outcome {
    let claims = [
        "product-split-left",
        "product-split-right",
        "product-transfer-left",
        "product-transfer-right",
        "product-transfer-two-sided",
        "product-mixed",
    ];
    verify_all(&claims, &["zmod:6"], Mode::Exhaustive)?;
    verify_all(&claims, &["mat:2:zmod:2"], Mode::Sample { seed: 7, count: 1000 })?;

    let o = Oracle::new("zmod:6");
    let mut exhaustive = 0;
    for code in 0..6usize.pow(5) {
        let t = std::array::from_fn(|i| code / 6usize.pow(4 - i as u32) % 6);
        check_product_tuple(&o, t)?;
        exhaustive += 1;
    }
    let o = Oracle::new("mat:2:zmod:2");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let t = std::array::from_fn(|_| rng.gen_range(0..o.len()));
        check_product_tuple(&o, t)?;
    }
    Ok(format!("{exhaustive} exhaustive tuples over zmod:6, 1000 samples over mat:2:zmod:2"))
}

// 10. Perturbation and Jacobson's lemma.
fn perturbation() -> Outcome {
    let mut checked = 0;
    for spec in ["zmod:8", "mat:2:zmod:2"] {
        let o = Oracle::new(spec);
        let one = o.one();
        let ring = &o.ring;
        for (a, b, c) in triples(&o) {
            let Some(&y0) = o.two_sided_set(a, b, c).first() else { continue };
            for alpha in 0..o.len() {
                let diff = ring.sub(o.e(alpha), o.e(a)).code() as usize;
                let u = ring.add(o.e(one), o.e(o.m(diff, y0))).code() as usize;
                let v = ring.add(o.e(one), o.e(o.m(y0, diff))).code() as usize;
                for side in [Side::Left, Side::Right] {
                    let r = perturbed_one_sided(ring, o.e(a), o.e(b), o.e(c), o.e(y0), o.e(alpha), side)
                        .map_err(|e| format!("{spec}: {e}"))?;
                    let expect = match side {
                        Side::Left => [
                            !o.left_set(alpha, b, c).is_empty(),
                            !o.right_ann_set(alpha, b, c).is_empty(),
                            o.left_unit(u),
                            o.left_unit(v),
                        ],
                        Side::Right => [
                            !o.right_set(alpha, b, c).is_empty(),
                            !o.left_ann_set(alpha, b, c).is_empty(),
                            o.right_unit(u),
                            o.right_unit(v),
                        ],
                    };
                    ensure(r.conditions == expect, || format!("{spec} {a},{b},{c} α={alpha} {side:?}"))?;
                    checked += 1;
                }
            }
        }
        for a in 0..o.len() {
            for b in 0..o.len() {
                let ab1 = ring.add(o.e(one), o.e(o.m(a, b))).code() as usize;
                let ba1 = ring.add(o.e(one), o.e(o.m(b, a))).code() as usize;
                ensure(o.left_unit(ab1) == o.left_unit(ba1), || format!("{spec} {a},{b}: left units"))?;
                for y in (0..o.len()).filter(|&y| o.m(y, ab1) == one) {
                    let r = jacobson_left(ring, o.e(a), o.e(b), o.e(y)).map_err(|e| e.to_string())?;
                    ensure(o.m(r.code() as usize, ba1) == one, || format!("{spec} {a},{b}: (1 - bya)(1 + ba)"))?;
                }
                for x in (0..o.len()).filter(|&x| o.m(ab1, x) == one) {
                    let r = jacobson_right(ring, o.e(a), o.e(b), o.e(x)).map_err(|e| e.to_string())?;
                    ensure(o.m(ba1, r.code() as usize) == one, || format!("{spec} {a},{b}: (1 + ba)(1 - bxa)"))?;
                    if o.m(x, ab1) == one {
                        let r = jacobson_inverse(ring, o.e(a), o.e(b), o.e(x)).map_err(|e| e.to_string())?;
                        let r = r.code() as usize;
                        ensure(o.m(r, ba1) == one && o.m(ba1, r) == one, || format!("{spec} {a},{b}: inverse"))?;
                    }
                }
            }
        }
    }
    verify_all(
        &["jacobson-i", "jacobson-ii", "jacobson-iii", "perturbation-left-4way", "perturbation-right-4way"],
        &["zmod:8", "mat:2:zmod:2"],
        Mode::Exhaustive,
    )?;
    Ok(format!("{checked} perturbations, 0 failures"))
}

// 11. Implication-only claims.
fn implication_only() -> Outcome {
    let o = Oracle::new("zmod:8");
    let mut with_inverse = 0;
    for (a, b, c) in triples(&o) {
        let exists = !o.right_ann_set(a, b, c).is_empty();
        ensure(bc::right_ann_bc(&o.ring, o.e(a), o.e(b), o.e(c)).is_some() == exists, || {
            format!("{a},{b},{c}: right_ann_bc existence")
        })?;
        if exists {
            ensure(o.right_ann(b) == o.right_ann(o.m3(c, a, b)), || format!("{a},{b},{c}: b° ≠ (cab)°"))?;
            with_inverse += 1;
        }
    }
    let family = RingSpec::parse_family("zmod:2..12").map_err(|e| e.to_string())?;
    let first = harness::hunt("converse-bcirc-equality", &family, &Options::default()).map_err(|e| e.to_string())?;
    let again = harness::hunt("converse-bcirc-equality", &family, &Options { workers: 1, ..Options::default() })
        .map_err(|e| e.to_string())?;
    ensure(first == again, || "converse hunt is not deterministic".into())?;
    let outcome = match &first.tuple {
        Some(t) => format!("found {t:?} on {}", first.ring.as_deref().unwrap_or("?")),
        None => "no counterexample over zmod:2..12".into(),
    };
    Ok(format!("{with_inverse} triples with b° = (cab)°; converse hunt: {outcome}"))
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_bcring")).args(args).output().expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

// 12. Command-line contract.
fn cli_contract() -> Outcome {
    let solve = |ring: &str, kind: &str, extra: &[&str]| {
        let mut args = vec!["solve", "--ring", ring, "--kind", kind];
        args.extend_from_slice(extra);
        cli(&args)
    };
    let (code, v) = solve("zmod:8", "left_bc", &["--a", "5", "--b", "0", "--c", "2", "--all"]);
    ensure(code == 0 && v["exists"] == true && v["all"].as_array().is_some_and(|a| a.contains(&"4".into())), || {
        format!("left_bc over zmod:8: {code} {v}")
    })?;
    let (code, v) = solve("zmod:5", "moore_penrose", &["--a", "2"]);
    ensure(code == 0 && v["witness"] == "3", || format!("moore_penrose over zmod:5: {code} {v}"))?;
    let (code, v) = solve("zmod:6", "left_bc", &["--a", "2", "--b", "3", "--c", "3"]);
    ensure(code == 3 && v["exists"] == false, || format!("left_bc over zmod:6: {code} {v}"))?;
    let (code, _) = solve("zmod:6", "left_bc", &["--a", "2"]);
    ensure(code == 2, || format!("missing --b gives {code}"))?;
    let (code, _) = solve("zmod:6", "left_bc", &["--a", "x", "--b", "1", "--c", "1"]);
    ensure(code == 2, || format!("bad literal gives {code}"))?;

    let (code, v) = cli(&["check", "--claim", "existence-left-bc", "--ring", "zmod:8", "--mode", "exhaustive"]);
    ensure(code == 0 && v["verdict"] == "pass", || format!("check existence-left-bc: {code}"))?;
    let (code, v) = cli(&["check", "--all-claims", "--ring", "zmod:6", "--mode", "exhaustive"]);
    ensure(code == 0 && v.as_array().is_some_and(|a| a.len() == harness::registry().len()), || {
        format!("check --all-claims: {code}")
    })?;
    let (code, _) = cli(&["check", "--claim", "nosuch", "--ring", "zmod:6"]);
    ensure(code == 2, || format!("unknown claim gives {code}"))?;
    let (code, _) = cli(&["check", "--claim", "existence-left-bc", "--ring", "zmod:1"]);
    ensure(code == 2, || format!("bad ring gives {code}"))?;

    let (code, v) = cli(&["hunt", "--claim", "witness-inequality-left-vs-rightann", "--rings", "zmod:8"]);
    ensure(code == 0 && v["found"] == true, || format!("hunt witness-inequality: {code} {v}"))?;
    let ring = bcring::Ring::new("zmod:8".parse().map_err(|e| format!("{e}"))?).map_err(|e| e.to_string())?;
    for lit in v["tuple"].as_array().into_iter().flatten() {
        let text = lit.as_str().ok_or("non-string literal")?;
        let back = ring.format_element(ring.parse_element(text).map_err(|e| e.to_string())?);
        ensure(back == text, || format!("literal {text} reprints as {back}"))?;
    }
    let (code, v) = cli(&["hunt", "--claim", "converse-bcirc-equality", "--rings", "zmod:2..12"]);
    let (code2, v2) = cli(&["hunt", "--claim", "converse-bcirc-equality", "--rings", "zmod:2..12"]);
    ensure((code == 0 || code == 3) && (code, &v) == (code2, &v2), || "converse hunt via CLI".into())?;
    let (code, _) = cli(&["hunt", "--claim", "existence-left-bc", "--rings", "zmod:6"]);
    ensure(code == 2, || format!("hunt on a theorem claim gives {code}"))?;

    // Literal round trip through solve on every carrier shape.
    for (spec, kind) in [("mat:2:zmod:3", "moore_penrose"), ("prod:(zmod:4;zmod:3)", "drazin"), ("zmod:12", "group")] {
        let o = Oracle::new(spec);
        for a in 0..o.len() {
            let lit = o.ring.format_element(o.e(a));
            let (code, v) = solve(spec, kind, &["--a", &lit]);
            let Some(w) = v["witness"].as_str() else {
                ensure(code == 3, || format!("{spec} {lit}: exit {code}"))?;
                continue;
            };
            let y = o.ring.parse_element(w).map_err(|e| e.to_string())?;
            ensure(code == 0 && o.ring.format_element(y) == w, || format!("{spec} {lit}: literal {w}"))?;
            let expect = bc::solve(&o.ring, bc::InverseKind::parse(kind, None).map_err(|e| e.to_string())?, o.e(a), o.e(a), o.e(a))
                .map_err(|e| e.to_string())?;
            ensure(expect.map(|x| x.y) == Some(y), || format!("{spec} {lit}: witness mismatch"))?;
        }
    }
    Ok("exit codes and literal round trips hold".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 witness sets for (5,0,2) over Z_8", 1, witness_sets_z8),
        ("2 existence criterion vs definitional search", 10, existence_oracle),
        ("3 five-way equivalences", 10, five_way),
        ("4 two-sided corollary and uniqueness", 10, two_sided),
        ("5 hybrid characterization", 5, hybrid),
        ("6 star duality", 10, star_duality),
        ("7 Moore-Penrose / {1,3} / {1,4} bridges", 30, penrose_bridges),
        ("8 strong pi-regularity and Drazin", 10, drazin),
        ("9 product suite", 60, products),
        ("10 perturbation suite", 30, perturbation),
        ("11 implication-only claims", 10, implication_only),
        ("12 command-line contract", 60, cli_contract),
    ];
    let mut failed = 0;
    for (name, bound, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(bound);
        let (status, detail) = match (&result, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; exceeded {bound} s")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(status == "FAIL");
        println!("{status} criterion {name} [{:.2} s / {bound} s]: {detail}", elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
