//! Named verification checks shared by the command line and the
//! acceptance suite, plus the PBW aggregate and the differential test.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::budget::Budget;
use crate::coeff::Coeff;
use crate::cy::{self, AgenParams, PElem};
use crate::e6;
use crate::env::{self, Elem, EnvAlgebra, Kind};
use crate::error::{usage, Result};
use crate::heun::{self, HahnParams, RacahParams, Sign};
use crate::oracle::{self, MatrixRep, RealisedMatrices, TensorRep};
use crate::poly::{Polynomial, VarSet};
use crate::report::{expect_zero, Report};
use crate::rewrite::{check_overlaps, reduce, Gen, NCElement, RewriteSystem, Strategy, Word};
use crate::scalar::Scalar;

/// Every check the registry knows, in report order.
pub const CHECK_NAMES: [&str; 17] = [
    "pbw",
    "omega",
    "potential",
    "centraliser",
    "trace-reduction",
    "phi",
    "omega-image",
    "aut0",
    "e6-roots",
    "e6-group",
    "e6-invariants",
    "e6-theorem",
    "e6-invariance",
    "heun-racah",
    "heun-hahn",
    "differential",
    "series",
];

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DIFFERENTIAL_SAMPLES: usize = 50;

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    /// Run the expensive symbolic variants (Ω image, E6 identities).
    pub symbolic: bool,
    pub budget: Option<Budget>,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            symbolic: false,
            budget: None,
            cache_dir: None,
        }
    }
}

/// Runs one named check; some names produce several reports.
pub fn run_check(name: &str, opts: &Options) -> Result<Vec<Report>> {
    Ok(match name {
        "pbw" => vec![verify_pbw()?],
        "omega" => vec![cy::verify_omega_central(&AgenParams::symbolic())?],
        "potential" => {
            let p = AgenParams::symbolic();
            let phi = cy::potential_phi(&p);
            vec![
                cy::verify_potential_relations(&p, &phi),
                cy::check_potential_pbw_identity(&phi.lower_part(13), &p.vars),
            ]
        }
        "centraliser" => vec![env::verify_centraliser(&env::sl3_squared()?)?],
        "trace-reduction" => vec![env::verify_trace_reduction(&env::sl3_squared()?)?],
        "phi" => {
            let e = env::sl3_squared()?;
            e.sys.set_budget(opts.budget.clone());
            let g = env::build_z2_generators(&e)?;
            vec![
                env::verify_generator_properties(&e, &g)?,
                env::verify_phi_relations(&e, &g)?,
            ]
        }
        "omega-image" => vec![verify_omega_image(opts)?],
        "aut0" => vec![cy::verify_aut0()],
        "e6-roots" => vec![e6::verify_root_identification()],
        "e6-group" => {
            if let Some(dir) = &opts.cache_dir {
                e6::init_group_cache(dir)?;
            }
            vec![e6::verify_group()?]
        }
        "e6-invariants" => vec![e6::verify_invariants()],
        "e6-theorem" => vec![e6::verify_theorem(opts.seed, true)?],
        "e6-invariance" => vec![e6::verify_invariance_direct()],
        "heun-racah" => vec![heun::verify_racah_closed_forms()?],
        "heun-hahn" => vec![
            heun::verify_hahn_realisation(Sign::Plus)?,
            heun::verify_hahn_realisation(Sign::Minus)?,
        ],
        "differential" => vec![verify_differential(opts.seed, DIFFERENTIAL_SAMPLES)?],
        "series" => vec![env::series_consistency()],
        _ => return usage(format!("unknown check `{name}`")),
    })
}

/// Oracle mode always; the symbolic identity only when asked for.
pub fn verify_omega_image(opts: &Options) -> Result<Report> {
    let e = env::sl3_squared()?;
    let g = env::build_z2_generators(&e)?;
    let oracle = oracle::verify_omega_oracle(&e, &g);
    if !opts.symbolic {
        return Ok(oracle.with_note("symbolic mode not run"));
    }
    e.sys.set_budget(opts.budget.clone());
    let r = env::omega_image_residual(&e, &g);
    e.sys.set_budget(None);
    let symbolic = match r {
        Ok(res) => expect_zero(res.is_zero(), || e.sys.to_text(&res)),
        Err(err) => Err(format!("not completed: {err}")),
    };
    let mut checks = vec![("oracle representations".to_string(), oracle_result(&oracle))];
    checks.push(("symbolic Omega = a12".to_string(), symbolic));
    Ok(Report::from_checks("omega-image", checks).detail("mode", "symbolic"))
}

fn oracle_result(r: &Report) -> std::result::Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        Err(r.witness.clone().unwrap_or_default())
    }
}

/// The environment algebras covered by the PBW and differential checks.
pub fn env_algebras() -> Result<Vec<EnvAlgebra>> {
    let mut v = Vec::new();
    for kind in [Kind::Gl, Kind::Sl] {
        for n in [2, 3] {
            for l in [1, 2, 3] {
                v.push(EnvAlgebra::new(n, l, kind)?);
            }
        }
    }
    Ok(v)
}

pub fn env_name(e: &EnvAlgebra) -> String {
    let k = match e.kind {
        Kind::Gl => "gl",
        Kind::Sl => "sl",
    };
    format!("U({k}({}))^{}", e.n, e.l)
}

fn overlap_result<C: Coeff>(
    sys: &RewriteSystem<C>,
    max_steps: usize,
) -> Result<(usize, std::result::Result<(), String>)> {
    let r = check_overlaps(sys, Strategy::Leftmost, max_steps)?;
    let res = match &r.failure {
        None => Ok(()),
        Some((w, x, y)) => {
            let word: Vec<&str> = w
                .iter()
                .map(|&g| sys.generators()[g as usize].name.as_str())
                .collect();
            Err(format!("{}: {}", word.join("."), sys.to_text(&x.sub(y))))
        }
    };
    Ok((r.triples_checked, res))
}

/// Overlap resolution for every rewrite system, plus Hilbert counts of the
/// generic algebra.
pub fn verify_pbw() -> Result<Report> {
    let mut checks = Vec::new();
    let mut triples = serde_json::Map::new();
    let agen = cy::build_agen(&AgenParams::symbolic())?;
    let (a, _) = cy::build_a()?;
    let racah = heun::build_racah(&RacahParams::symbolic())?;
    let hahn = heun::build_hahn(&HahnParams::symbolic())?;
    for (name, sys) in [
        ("Agen", &agen),
        ("A", &a),
        ("Racah", &racah),
        ("Hahn", &hahn),
    ] {
        let (n, r) = overlap_result(sys, 100_000)?;
        triples.insert(name.into(), json!(n));
        checks.push((format!("{name} overlaps"), r));
    }
    for e in env_algebras()? {
        let name = env_name(&e);
        let (n, r) = overlap_result(&e.sys, 10_000)?;
        triples.insert(name.clone(), json!(n));
        checks.push((format!("{name} overlaps"), r));
    }
    let hilbert = cy::verify_hilbert(&agen, &a);
    checks.push(("Hilbert series".into(), oracle_result(&hilbert)));
    Ok(Report::from_checks("pbw", checks).detail("triples", serde_json::Value::Object(triples)))
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..gens) as Gen).collect()
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = rng.gen_range(-5..=5);
    if n == 0 {
        n = 1;
    }
    Scalar::new(n, rng.gen_range(1..=3))
}

/// Up to four words of length up to `max_len` with small rational
/// coefficients.
pub fn random_scalar_element(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Elem {
    let terms = rng.gen_range(1..=4);
    NCElement::from_terms((0..terms).map(|_| (random_word(rng, gens, max_len), random_scalar(rng))))
}

/// As above with coefficients that are a rational times at most one
/// parameter.
pub fn random_poly_element(
    rng: &mut ChaCha8Rng,
    gens: usize,
    max_len: usize,
    vars: &VarSet,
) -> PElem {
    let terms = rng.gen_range(1..=4);
    NCElement::from_terms((0..terms).map(|_| {
        let w = random_word(rng, gens, max_len);
        let mut c = Polynomial::constant(random_scalar(rng));
        if !vars.is_empty() && rng.gen_bool(0.5) {
            c = c.mul(&Polynomial::var(rng.gen_range(0..vars.len())));
        }
        (w, c)
    }))
}

struct Tally {
    checks: Vec<(String, std::result::Result<(), String>)>,
    counts: serde_json::Map<String, serde_json::Value>,
}

impl Tally {
    fn record(&mut self, system: &str, results: Vec<std::result::Result<(), String>>) {
        let n = results.len();
        let first = results
            .into_iter()
            .enumerate()
            .find_map(|(i, r)| r.err().map(|e| format!("sample {i}: {e}")));
        self.counts.insert(system.into(), json!(n));
        self.checks
            .push((system.to_string(), first.map_or(Ok(()), Err)));
    }
}

/// Evaluation of the normal form against an independent evaluation of the
/// unreduced element, on `samples` seeded random elements per system.
///
/// Environment algebras: factorised evaluation of the normal form against
/// word-by-word matrices in fundamental, dual and adjoint factors. The
/// specialised algebra: realisation matrices on three tensor
/// representations. Systems with symbolic parameters: the naive reducer in
/// random rule order.
pub fn verify_differential(seed: u64, samples: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally {
        checks: Vec::new(),
        counts: serde_json::Map::new(),
    };
    for e in env_algebras()? {
        let builders: [fn(&EnvAlgebra) -> MatrixRep; 3] =
            [MatrixRep::fundamental, MatrixRep::dual, MatrixRep::adjoint];
        let factors = (0..e.l).map(|a| builders[a % 3](&e)).collect();
        let rep = TensorRep::new(&e, factors)?;
        let gens = e.sys.num_generators();
        let results = (0..samples)
            .map(|_| {
                let x = random_scalar_element(&mut rng, gens, 4);
                let nf = e.sys.try_normal_form(&x)?;
                let d = rep.evaluate(&nf).sub(&rep.evaluate_free(&x));
                Ok(expect_zero(d.is_zero(), || e.sys.to_text(&x)))
            })
            .collect::<Result<Vec<_>>>()?;
        t.record(&format!("{} on {}", env_name(&e), rep.name()), results);
    }

    let (a, p) = cy::build_a()?;
    let sl3 = env::sl3_squared()?;
    let gens = env::build_z2_generators(&sl3)?;
    let reps: Vec<RealisedMatrices> = oracle::omega_oracle_reps(&sl3)
        .iter()
        .map(|r| RealisedMatrices::new(r, &gens))
        .collect();
    let results = (0..samples)
        .map(|i| {
            let x = random_poly_element(&mut rng, 3, 4, &p.vars);
            let nf = a.try_normal_form(&x)?;
            let m = &reps[i % reps.len()];
            let d = m.evaluate(&nf).sub(&m.evaluate(&x));
            Ok(expect_zero(d.is_zero(), || a.to_text(&x)))
        })
        .collect::<Result<Vec<_>>>()?;
    t.record("A on realisation matrices", results);

    let agen = cy::build_agen(&AgenParams::symbolic())?;
    let racah = heun::build_racah(&RacahParams::symbolic())?;
    let hahn = heun::build_hahn(&HahnParams::symbolic())?;
    for (name, sys) in [("Agen", &agen), ("Racah", &racah), ("Hahn", &hahn)] {
        let vars = sys.params().cloned().expect("parametrised system");
        let results = (0..samples)
            .map(|_| {
                let x = random_poly_element(&mut rng, 3, 4, &vars);
                let nf = sys.try_normal_form(&x)?;
                let naive = reduce(sys, &x, Strategy::Random(rng.gen()), 1_000_000)?;
                let d = nf.sub(&naive);
                Ok(expect_zero(d.is_zero(), || sys.to_text(&x)))
            })
            .collect::<Result<Vec<_>>>()?;
        t.record(&format!("{name} against naive reducer"), results);
    }
    Ok(Report::from_checks("differential", t.checks)
        .with_seed(seed)
        .detail("samples", serde_json::Value::Object(t.counts)))
}
