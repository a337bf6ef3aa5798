//! Property batteries shared by `check` and `scan`.

use clap::ValueEnum;
use serde::Serialize;

use blowup_core::graph::{to_graph6, Graph};
use blowup_core::matroid::{
    blowup_support_family_with, is_delta_matroid_with, matroid_prime_with, PrimeKind, Witness,
};
use blowup_core::poly::graph_polynomial;
use blowup_core::stability::{
    line_realroot_check, rayleigh_sample_check, spectrum_correspondence_check, theorem4_report,
    Sampling, StabilityVerdict, Theorem4Report,
};
use blowup_core::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Battery {
    /// Sampled Rayleigh and line tests on p_G.
    Stability,
    /// Coefficients / PSD / multipartite / Lorentzian agreement.
    Theorem4,
    /// Support of p_G is a delta-matroid.
    Matroid,
    /// Both superset-twin families are delta-matroids.
    MatroidPrime,
    /// Univariate polynomial versus the distance spectrum.
    Spectrum,
    /// Stability, theorem4, matroid and spectrum.
    All,
}

impl Battery {
    fn includes(self, other: Battery) -> bool {
        self == other || (self == Battery::All && other != Battery::MatroidPrime)
    }
}

#[derive(Serialize)]
pub struct StabilityPair {
    pub rayleigh: StabilityVerdict,
    pub line: StabilityVerdict,
}

#[derive(Serialize)]
pub struct MatroidResult {
    pub feasible_sets: usize,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct PrimeResult {
    pub kind: PrimeKind,
    pub feasible_sets: usize,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub graph6: Option<String>,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability: Option<StabilityPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem4: Option<Theorem4Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroid: Option<MatroidResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroid_prime: Option<Vec<PrimeResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_identity: Option<bool>,
    pub passed: bool,
}

pub fn run(
    g: &Graph,
    battery: Battery,
    sampling: &Sampling,
    cfg: &Config,
) -> blowup_core::Result<CheckReport> {
    let mut passed = true;
    let mut report = CheckReport {
        graph6: to_graph6(g).ok(),
        k: g.order(),
        seed: sampling.seed,
        samples: sampling.count,
        stability: None,
        theorem4: None,
        matroid: None,
        matroid_prime: None,
        spectrum_identity: None,
        passed: true,
    };
    if battery.includes(Battery::Stability) {
        let p = graph_polynomial(g)?;
        let pair = StabilityPair {
            rayleigh: rayleigh_sample_check(&p, sampling)?,
            line: line_realroot_check(&p, sampling)?,
        };
        passed &= pair.rayleigh.passed && pair.line.passed;
        report.stability = Some(pair);
    }
    if battery.includes(Battery::Theorem4) {
        let r = theorem4_report(g, sampling)?;
        passed &= r.consistent && !r.sampled_contradiction;
        report.theorem4 = Some(r);
    }
    if battery.includes(Battery::Matroid) {
        let f = blowup_support_family_with(g, cfg)?;
        let witness = is_delta_matroid_with(&f, cfg.exec)?;
        passed &= witness.is_none();
        report.matroid = Some(MatroidResult {
            feasible_sets: f.len(),
            witness,
        });
    }
    if battery.includes(Battery::MatroidPrime) {
        let mut results = Vec::new();
        for kind in [PrimeKind::Connected, PrimeKind::Isometric] {
            let f = matroid_prime_with(g, kind, cfg)?;
            let witness = is_delta_matroid_with(&f, cfg.exec)?;
            passed &= witness.is_none();
            results.push(PrimeResult {
                kind,
                feasible_sets: f.len(),
                witness,
            });
        }
        report.matroid_prime = Some(results);
    }
    if battery.includes(Battery::Spectrum) {
        let ok = spectrum_correspondence_check(g)?;
        passed &= ok;
        report.spectrum_identity = Some(ok);
    }
    report.passed = passed;
    Ok(report)
}

fn verdict_line(name: &str, v: &StabilityVerdict) -> String {
    match &v.first_violation {
        None => format!(
            "{name}: pass ({} samples, {} skipped)",
            v.samples_checked, v.skipped
        ),
        Some(w) => format!(
            "{name}: VIOLATION at sample {} pair {:?} point ({}) value {}",
            w.sample,
            w.pair.map(|(i, j)| (i + 1, j + 1)),
            w.point.join(", "),
            w.value
        ),
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => "delta-matroid".into(),
        Some(Witness::Uncovered { element }) => {
            format!("NOT a delta-matroid: vertex {} uncovered", element + 1)
        }
        Some(Witness::Exchange { a, b, x }) => {
            format!("NOT a delta-matroid: A = {a}, B = {b}, x = {x} (0-based) has no exchange")
        }
    }
}

pub fn human(r: &CheckReport) -> String {
    let mut out = vec![format!(
        "graph: k = {}{}; seed {}, {} samples",
        r.k,
        r.graph6
            .as_ref()
            .map(|s| format!(", graph6 {s}"))
            .unwrap_or_default(),
        r.seed,
        r.samples
    )];
    if let Some(s) = &r.stability {
        out.push(verdict_line("rayleigh", &s.rayleigh));
        out.push(verdict_line("line", &s.line));
    }
    if let Some(t) = &r.theorem4 {
        out.push(format!(
            "theorem4: {} (coeffs_nonneg={}, psd={}, multipartite={}, lorentzian={}; sampled: homog_stable={}, strongly_rayleigh={})",
            if t.consistent { "consistent" } else { "INCONSISTENT" },
            t.coeffs_nonneg,
            t.psd,
            t.multipartite,
            t.lorentzian,
            t.homog_stable_sampled,
            t.strongly_rayleigh_sampled
        ));
    }
    if let Some(m) = &r.matroid {
        out.push(format!(
            "support family: {} feasible sets, {}",
            m.feasible_sets,
            witness_text(&m.witness)
        ));
    }
    if let Some(ps) = &r.matroid_prime {
        for p in ps {
            out.push(format!(
                "superset-twin family ({:?}): {} feasible sets, {}",
                p.kind,
                p.feasible_sets,
                witness_text(&p.witness)
            ));
        }
    }
    if let Some(ok) = r.spectrum_identity {
        out.push(format!(
            "spectrum identity: {}",
            if ok { "holds" } else { "FAILS" }
        ));
    }
    out.push(format!(
        "result: {}",
        if r.passed { "pass" } else { "FAIL" }
    ));
    out.join("\n")
}
