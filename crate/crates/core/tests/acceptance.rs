//! Acceptance criteria, one line each. Runs without the test harness so the lines always print.
//!
//! Exit status is non-zero when a criterion fails unless the failure is a known deviation whose
//! witness matches the recorded analysis exactly; a known deviation that starts passing also
//! fails the run, so the record gets revisited.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use primlat::boolean::full_mask;
use primlat::catalog;
use primlat::dposet::dposet_check;
use primlat::enumerate::{census, enumerate_lattices};
use primlat::iso::is_isomorphic;
use primlat::ortho::{attach_ortho, OrthoLattice};
use primlat::primorial::{is_primorial, MemberKind, PrimorialFlags, PrimorialLattice, Strategy};
use primlat::probability::{from_atom_weights, validate_probability, ProbabilityAxiom};
use primlat::projection::{Method, Projector};
use primlat::reduce::{carrier_difference, difference, inherited_ortho, reduce, reduce_brute_force};
use primlat::seqproc::{analyze, gsp_preset, GspPreset};
use primlat::text::parse_lattice_text;
use primlat::valuation::{check_valuation, height_valuation, LatticeMetric};
use primlat::{Level, Mask, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails exactly as recorded in the decisions log.
    KnownFail(String),
}

fn within(t: Instant, limit: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    if e <= limit {
        Ok(e)
    } else {
        Err(format!("took {e:.2?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1_census() -> Result<String, String> {
    let t = Instant::now();
    let mut got = Vec::new();
    for n in [5, 6] {
        let c = census(&enumerate_lattices(n).map_err(|e| e.to_string())?);
        got.push((c.lattices, c.modular, c.distributive));
    }
    let e = within(t, Duration::from_secs(120))?;
    ensure(got == [(5, 4, 3), (15, 8, 5)], format!("counts {got:?}"))?;
    let l7 = enumerate_lattices(7).map_err(|e| e.to_string())?.len();
    ensure(l7 == 53, format!("l7 = {l7}"))?;
    Ok(format!("l5,m5,d5 = 5,4,3; l6,m6,d6 = 15,8,5; l7 = 53; n<=6 in {e:.2?}"))
}

fn c2_reduction() -> Result<String, String> {
    let counts: Vec<usize> = (2..=4)
        .map(|n| reduce(&Level::powerset(n), false).map(|r| r.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts == [1, 3, 10], format!("counts {counts:?}"))?;
    let c4 = reduce_brute_force(&Level::powerset(4)).map_err(|e| e.to_string())?;
    ensure((c4.candidates, c4.accepted.len()) == (35, 10), "N=4 census")?;
    let t = Instant::now();
    let r5 = reduce(&Level::powerset(5), false).map_err(|e| e.to_string())?;
    let e = within(t, Duration::from_secs(10))?;
    let (tried, oracle) = common::oracle_reduce(5);
    let got: BTreeSet<Vec<Mask>> = r5.iter().map(|l| l.carrier().to_vec()).collect();
    ensure(tried == 6435 && got == oracle, format!("N=5: {} vs oracle {}", got.len(), oracle.len()))?;
    Ok(format!("1, 3, 10; N=4 35 candidates / 10 accepted; N=5 {} = oracle over 6435 in {e:.2?}", got.len()))
}

fn c3_difference() -> Result<String, String> {
    let cube = Level::powerset(3);
    let l2 = reduce(&cube, false).map_err(|e| e.to_string())?.remove(0);
    let d = difference(&cube, &l2).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(d.lattice().poset(), catalog::o6().poset()).is_some(), "not O6")?;
    let perp = d.inherited_ortho().ok_or("not closed under complement")?;
    attach_ortho(d.lattice().clone(), perp).map_err(|e| e.to_string())?;
    let p5 = PrimorialLattice::generate(5, &Strategy::CanonicalFirst, false).map_err(|e| e.to_string())?;
    for (i, dn) in p5.diffs().iter().enumerate() {
        inherited_ortho(dn).map_err(|e| format!("D{}: {e}", i + 2))?;
    }
    Ok("L2^3 minus L2^2 is O6 with inherited ortho; D2..D5 of the 5-atom family pass".into())
}

fn c4_primorial() -> Result<String, String> {
    for n in 3..=5 {
        let p = PrimorialLattice::generate(n, &Strategy::CanonicalFirst, false).map_err(|e| e.to_string())?;
        ensure(is_primorial(p.family()).is_some(), format!("N={n} family rejected"))?;
        let items: Vec<Vec<Mask>> = p.chain().iter().map(|l| l.carrier().to_vec()).collect();
        let full = full_mask(n);
        let subset = |a: &Vec<Mask>, b: &Vec<Mask>| a.iter().all(|m| b.binary_search(m).is_ok());
        let r = dposet_check(&items, subset, |y, x| carrier_difference(y, x, 0, full));
        ensure(r.passed(), format!("N={n} d-poset: {:?}", r.violations))?;
        if n >= 4 {
            let f = PrimorialFlags::of(p.family());
            ensure(f.all(), format!("N={n} flags {f:?}"))?;
        }
    }
    Ok("families for N=3,4,5 primorial; chain difference is a D-poset; N=4,5 flags hold".into())
}

fn c5_sasaki() -> Result<String, String> {
    let l = catalog::o6();
    let o = OrthoLattice::from_pairs(l.clone(), &[("0", "1"), ("p", "p'"), ("q", "q'")]).map_err(|e| e.to_string())?;
    let cases = [("p", "q", "0"), ("p", "p'", "0"), ("p", "q'", "p"), ("q'", "p", "q'"), ("p", "1", "p"), ("p", "0", "0")];
    for (x, y, want) in cases {
        let got = l.label(o.sasaki(l.idx(x), l.idx(y)));
        ensure(got == want, format!("phi_{x}({y}) = {got}, expected {want}"))?;
    }
    Ok("six O6 projections reproduced".into())
}

fn c6_metric() -> Result<String, String> {
    let cube = catalog::powerset(3);
    let d = LatticeMetric::<Rational>::height(&cube).map_err(|e| e.to_string())?;
    let (b, b_comp) = (0b010, 0b101);
    ensure(*d.d(b, b_comp) == Rational::from_integer(3), "d(atom, complement) != 3")?;
    let ball = d.closed_ball(b, &Rational::from_integer(1)).map_err(|e| e.to_string())?;
    ensure(ball.len() == 4, format!("ball has {} elements", ball.len()))?;
    let o6 = catalog::o6();
    let check = check_valuation(&o6, &height_valuation::<Rational>(&o6)).map_err(|e| e.to_string())?;
    let w = check.valuation_witness.ok_or("O6 height accepted as a valuation")?;
    ensure((o6.label(w.0), o6.label(w.1)) == ("p", "q"), format!("witness {w:?}"))?;
    let p5 = PrimorialLattice::generate(5, &Strategy::CanonicalFirst, false).map_err(|e| e.to_string())?;
    for l in p5.chain() {
        let m = LatticeMetric::<Rational>::height(l.lattice()).map_err(|e| e.to_string())?;
        ensure(m.axiom_violation().is_none(), format!("metric axiom fails on {}-element level", l.len()))?;
    }
    Ok("d = 3, |ball| = 4; O6 height rejected at (p, q); axioms hold on L1..L5".into())
}

fn c7_projection() -> Result<String, String> {
    let t = Instant::now();
    let p = PrimorialLattice::generate(5, &Strategy::CanonicalFirst, false).map_err(|e| e.to_string())?;
    let pr = Projector::new(&p);
    let mut pairs = 0;
    for m in p.members() {
        for x in 0..=full_mask(5) {
            pairs += 1;
            let own = m.level.contains(x);
            let (maps, meets) = pr.sasaki_forms(&m.level, x);
            ensure(maps == meets, format!("{} at {x}: Sasaki forms differ", m.kind))?;
            for method in [Method::Zero, Method::Sasaki, Method::Metric] {
                let y = pr.project(&m.level, x, method).map_err(|e| e.to_string())?;
                ensure(!own || y == x, format!("{} {method} moves own element {x}", m.kind))?;
                ensure(own || method != Method::Zero || y == 0, format!("{} zero at {x}", m.kind))?;
            }
        }
    }
    let e = within(t, Duration::from_secs(10))?;
    Ok(format!("{pairs} (level, element) pairs; identity on carriers, zero off-carrier, forms agree, {e:.2?}"))
}

const O6_PROB: &str = "elements 0 p q q' p' 1
covers 0<p 0<q p<q' q<p' q'<1 p'<1
ortho 0:1 p:p' q:q'
prob 0=0 p=1/3 q=1/2 q'=1/2 p'=2/3 1=1
";

fn c8_probability() -> Outcome {
    // Second clause first: it is independent of the O6 deviation.
    let cube = catalog::powerset(3);
    let neg: Vec<usize> = (0..8).map(|m| 7 - m).collect();
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w: Vec<Rational> = (0..3).map(|_| Rational::new(rng.gen_range(1..=50), rng.gen_range(1..=50))).collect();
        let p = from_atom_weights(&cube, &w);
        if let Err(e) = validate_probability(&cube, &neg, p.clone()) {
            return Outcome::Fail(format!("seed {seed}: {e}"));
        }
        let ok = (0..8).all(|x| (0..8).all(|y| p[x | y] == p[x] + p[y] - p[x & y] && p[x | y] <= p[x] + p[y]));
        if !ok {
            return Outcome::Fail(format!("seed {seed}: inclusion-exclusion or Boole fails"));
        }
    }
    let doc = match parse_lattice_text(O6_PROB) {
        Ok(d) => d,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let l = doc.lattice().expect("O6 is a lattice");
    let prob = doc.prob.clone().expect("prob stanza");
    let at = |s: &str| prob[l.idx(s)];
    let traditional = (at("1"), at("p") + at("q"));
    match validate_probability(&l, doc.ortho.as_ref().expect("ortho stanza"), prob.clone()) {
        Ok(_) => Outcome::Fail("O6 assignment validated; the recorded analysis says it cannot".into()),
        Err(e) if e.axiom == ProbabilityAxiom::Additive && e.witness == ["q'", "p'"] => Outcome::KnownFail(format!(
            "100 seeds on L2^3 pass; O6 (p=1/3, q=1/2) rejected: gated pair (q', p') gives {} != {} + {}; \
             traditional witness (p, q) gives {} != {}",
            at("1"),
            at("q'"),
            at("p'"),
            traditional.0,
            traditional.1
        )),
        Err(e) => Outcome::Fail(format!("O6 rejected differently than recorded: {e}")),
    }
}

fn c9_laws() -> Result<String, String> {
    let mut lattices = 0;
    for n in 1..=6 {
        for l in enumerate_lattices(n).map_err(|e| e.to_string())? {
            lattices += 1;
            let mut bad = common::lattice_law_counterexamples(&l);
            bad.extend(common::ortho_law_counterexamples(&l));
            ensure(bad.is_empty(), format!("n={n} {:?}: {bad:?}", l.labels()))?;
        }
    }
    Ok(format!("{lattices} lattices, zero counterexamples"))
}

fn c10_gsp() -> Result<String, String> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2025);
    let tokens: Vec<char> = (0..1000).map(|_| ['A', 'C', 'G', 'T'][rng.gen_range(0..4)]).collect();
    let (a, fam) = gsp_preset(GspPreset::AcgtAtcg);
    let py = analyze(&fam, &a, &tokens, &Method::ALL).map_err(|e| e.to_string())?;
    let coarse = py.row(MemberKind::Boolean(2), Method::Ceiling).ok_or("no coarse row")?;
    let at = a.join_of("AT").map_err(|e| e.to_string())?;
    let direct = tokens.iter().filter(|c| matches!(c, 'A' | 'T')).count();
    let e = within(t, Duration::from_secs(5))?;
    ensure(coarse.count(at) == direct, format!("A|T {} vs {direct}", coarse.count(at)))?;
    Ok(format!("A|T count {direct} matches over 1000 symbols in {e:.2?}"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("lattice census", Box::new(|| c1_census().into())),
        ("reduction counts", Box::new(|| c2_reduction().into())),
        ("difference and orthocomplement", Box::new(|| c3_difference().into())),
        ("primorial structure", Box::new(|| c4_primorial().into())),
        ("Sasaki values", Box::new(|| c5_sasaki().into())),
        ("metric suite", Box::new(|| c6_metric().into())),
        ("projection suite", Box::new(|| c7_projection().into())),
        ("probability", Box::new(c8_probability)),
        ("law suites", Box::new(|| c9_laws().into())),
        ("GSP desk demo", Box::new(|| c10_gsp().into())),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Outcome::Pass(msg) => println!("criterion {:>2} PASS {name}: {msg}", i + 1),
            Outcome::KnownFail(msg) => println!("criterion {:>2} FAIL {name} (recorded deviation): {msg}", i + 1),
            Outcome::Fail(msg) => {
                unexpected += 1;
                println!("criterion {:>2} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

impl From<Result<String, String>> for Outcome {
    fn from(r: Result<String, String>) -> Self {
        match r {
            Ok(m) => Outcome::Pass(m),
            Err(m) => Outcome::Fail(m),
        }
    }
}
