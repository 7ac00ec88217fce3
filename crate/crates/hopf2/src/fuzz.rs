//! Seeded single-entry corruptions of a bundle's structure tensors.
//!
//! Each trial picks one structure tensor and one of its nonzero entries,
//! negates that entry, and runs the bundle verifiers in a fixed order until
//! the first failing check.

use hopf2_core::algebroid::CentralHopfAlgebroidData;
use hopf2_core::hopf::HopfStructure;
use hopf2_core::hopf2::{check_axiom, check_layers, check_lemma54, check_prop42, CoherentHopf2Bundle, AXIOMS};
use hopf2_core::linear::LinearMap;
use hopf2_core::report::Report;
use hopf2_core::Result;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The structure tensors a trial may corrupt.
pub const TENSORS: [&str; 12] = [
    "b.delta",
    "b.counit",
    "b.antipode",
    "hopf.delta",
    "hopf.counit",
    "hopf.antipode",
    "algebroid.s",
    "algebroid.t",
    "algebroid.delta",
    "algebroid.eps",
    "algebroid.antipode",
    "alpha",
];

/// One corruption and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    /// Which tensor was corrupted.
    pub tensor: &'static str,
    /// Row label of the negated entry.
    pub row: String,
    /// Column label of the negated entry.
    pub col: String,
    /// The first failing check, if any.
    pub detected_by: Option<String>,
}

/// The structure tensor called `name`.
pub fn tensor<'a>(bundle: &'a CoherentHopf2Bundle, name: &str) -> Option<&'a LinearMap> {
    let d = &bundle.algebroid;
    Some(match name {
        "b.delta" => bundle.b.delta(),
        "b.counit" => bundle.b.counit(),
        "b.antipode" => bundle.b.antipode(),
        "hopf.delta" => bundle.hopf.delta(),
        "hopf.counit" => bundle.hopf.counit(),
        "hopf.antipode" => bundle.hopf.antipode(),
        "algebroid.s" => &d.s,
        "algebroid.t" => &d.t,
        "algebroid.delta" => &d.delta,
        "algebroid.eps" => &d.eps,
        "algebroid.antipode" => &d.antipode,
        "alpha" => bundle.alpha.as_ref()?,
        _ => return None,
    })
}

fn with_b(bundle: &CoherentHopf2Bundle, b: HopfStructure) -> Result<CoherentHopf2Bundle> {
    let d = &bundle.algebroid;
    let algebroid =
        CentralHopfAlgebroidData::new(d.h.clone(), b.clone(), d.s.clone(), d.t.clone(), d.delta.clone(), d.eps.clone(), d.antipode.clone())?;
    CoherentHopf2Bundle::new(b, bundle.hopf.clone(), algebroid, bundle.alpha.clone())
}

/// A copy of `bundle` with the tensor called `name` replaced by `f`.
pub fn with_tensor(bundle: &CoherentHopf2Bundle, name: &str, f: LinearMap) -> Result<CoherentHopf2Bundle> {
    let d = &bundle.algebroid;
    let rebuild = |s: LinearMap, t: LinearMap| {
        CentralHopfAlgebroidData::new(d.h.clone(), d.b.clone(), s, t, d.delta.clone(), d.eps.clone(), d.antipode.clone())
    };
    match name {
        "b.delta" => with_b(bundle, bundle.b.with_delta(f)?),
        "b.counit" => with_b(bundle, bundle.b.with_counit(f)?),
        "b.antipode" => with_b(bundle, bundle.b.with_antipode(f)?),
        "hopf.delta" => bundle.with_hopf(bundle.hopf.with_delta(f)?),
        "hopf.counit" => bundle.with_hopf(bundle.hopf.with_counit(f)?),
        "hopf.antipode" => bundle.with_hopf(bundle.hopf.with_antipode(f)?),
        "algebroid.s" => bundle.with_algebroid(rebuild(f, d.t.clone())?),
        "algebroid.t" => bundle.with_algebroid(rebuild(d.s.clone(), f)?),
        "algebroid.delta" => bundle.with_algebroid(d.with_delta(f)?),
        "algebroid.eps" => bundle.with_algebroid(d.with_eps(f)?),
        "algebroid.antipode" => bundle.with_algebroid(d.with_antipode(f)?),
        "alpha" => bundle.with_alpha(f),
        other => Err(hopf2_core::Error::InvalidInput(format!("unknown structure tensor {other:?}"))),
    }
}

fn first_failure(prefix: &str, r: &Report) -> Option<String> {
    r.failures().next().map(|c| format!("{prefix}.{}", c.name))
}

/// The first failing check of the full bundle verification, running the
/// layers, axioms (i)–(ix), the antipode properties and the cocommutation
/// relation in that order and stopping at the first failure.
pub fn first_failing_check(bundle: &CoherentHopf2Bundle) -> Option<String> {
    if let Some(f) = first_failure("layers", &check_layers(bundle)) {
        return Some(f);
    }
    for n in AXIOMS {
        if let Some(f) = first_failure(&format!("axiom_{n}"), &check_axiom(bundle, n)) {
            return Some(f);
        }
    }
    if let Some(f) = first_failure("prop42", &check_prop42(bundle)) {
        return Some(f);
    }
    (!check_lemma54(bundle)).then(|| String::from("lemma54"))
}

/// Runs `count` seeded trials against `bundle`.
pub fn fuzz_bundle(bundle: &CoherentHopf2Bundle, seed: u64, count: usize) -> Result<Vec<Trial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<&'static str> = TENSORS.iter().copied().filter(|n| tensor(bundle, n).is_some_and(|t| !t.is_zero())).collect();
    let mut trials = Vec::with_capacity(count);
    for _ in 0..count {
        let name = *names.choose(&mut rng).expect("a bundle has nonzero structure tensors");
        let f = tensor(bundle, name).expect("listed above");
        let entries = f.entries();
        let (row, col, c) = entries.choose(&mut rng).expect("nonzero tensor");
        let corrupted = with_tensor(bundle, name, f.with_entry(row, col, -c.clone())?)?;
        trials.push(Trial {
            tensor: name,
            row: f.codomain().label_of(row),
            col: f.domain().label_of(col),
            detected_by: first_failing_check(&corrupted),
        });
    }
    Ok(trials)
}
