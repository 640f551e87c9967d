use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use springer_sing::orbitgraph::GeometryNumbers;
use springer_sing::{render, sing_any, sing_by_graph, Error, LinkPattern, Oracle, SingReport};

use crate::{text, Failure, Format, Method, Output, Subject};

type Emitted = Result<(String, Result<(), Failure>), Failure>;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub(crate) struct Classification {
    pub sigma: LinkPattern,
    pub n: usize,
    pub k: usize,
    pub maximal: bool,
    pub tau_star: Vec<usize>,
    pub rho: Option<usize>,
    /// `None` when the pattern is not maximal and too large for the graph.
    pub smooth: Option<bool>,
    pub dim: usize,
    pub d0: usize,
    pub p_sigma: usize,
    pub tableau: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub(crate) fn classify(subject: &Subject, oracle: &Oracle, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Text, Format::Json], Format::Text)?;
    let sigma = &subject.sigma;
    let g = GeometryNumbers::of(sigma);
    let dim = g.dim(sigma.defect());
    let (rho, smooth, note) = match &subject.tableau {
        Some(t) => (Some(t.rho()), Some(t.is_smooth()), None),
        None => match oracle.is_smooth(sigma) {
            Ok(s) => (None, Some(s), Some("not maximal: rho is undefined, smoothness read off G_sigma".to_string())),
            Err(Error::SizeLimit { n, max }) => (
                None,
                None,
                Some(format!("not maximal, and n = {n} is past the graph limit {max}")),
            ),
            Err(e) => return Err(e.into()),
        },
    };
    let report = Classification {
        sigma: sigma.clone(),
        n: sigma.n(),
        k: sigma.k(),
        maximal: sigma.is_maximal(),
        tau_star: sigma.tau_star(),
        rho,
        smooth,
        dim,
        d0: g.d0,
        p_sigma: dim - g.d0,
        tableau: subject.tableau.as_ref().map(|t| t.to_inline()),
        note,
    };
    let body = match format {
        Format::Json => json(&report),
        _ => text::classification(&report),
    };
    Ok((body, Ok(())))
}

fn direct(sigma: &LinkPattern, oracle: &Oracle) -> Result<SingReport, Failure> {
    if !sigma.is_maximal() {
        return Err(Failure::Scope(format!(
            "{sigma} is not maximal; the direct construction covers maximal patterns only (try --method graph)"
        )));
    }
    // maximal input never reaches the oracle here
    Ok(sing_any(sigma, oracle)?)
}

#[derive(Serialize)]
struct Comparison {
    direct: SingReport,
    graph: SingReport,
    agree: bool,
}

pub(crate) fn sing(subject: &Subject, method: Method, oracle: &Oracle, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Text, Format::Json], Format::Text)?;
    let sigma = &subject.sigma;
    let one = |r: SingReport| match format {
        Format::Json => json(&r),
        _ => text::sing_report(&r),
    };
    match method {
        Method::Direct => Ok((one(direct(sigma, oracle)?), Ok(()))),
        Method::Graph => Ok((one(sing_by_graph(sigma, oracle)?), Ok(()))),
        Method::Both => {
            let d = direct(sigma, oracle)?;
            let g = sing_by_graph(sigma, oracle)?;
            let set = |r: &SingReport| r.patterns().into_iter().collect::<BTreeSet<_>>();
            let agree = d.smooth == g.smooth && set(&d) == set(&g);
            let verdict = if agree {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("direct and graph methods disagree on {sigma}")))
            };
            let body = match format {
                Format::Json => json(&Comparison { direct: d, graph: g, agree }),
                _ => format!(
                    "{}\n{}\nmethods {}\n",
                    text::sing_report(&d),
                    text::sing_report(&g),
                    if agree { "agree" } else { "DISAGREE" }
                ),
            };
            Ok((body, verdict))
        }
    }
}

pub(crate) fn graph(sigma: &LinkPattern, max_codim: Option<usize>, oracle: &Oracle, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Dot, Format::Json, Format::Text], Format::Dot)?;
    let g = oracle.graph(sigma)?;
    let body = match format {
        Format::Json => json(&g.report()),
        Format::Text => g.to_adjacency(),
        _ => g.to_dot(max_codim),
    };
    Ok((body, Ok(())))
}

pub(crate) fn render(sigma: &LinkPattern, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Ascii, Format::Svg, Format::Text], Format::Ascii)?;
    let body = match format {
        Format::Svg => render::svg(sigma),
        _ => render::ascii(sigma),
    };
    Ok((body, Ok(())))
}

pub(crate) fn enumerate(n: usize, k: Option<usize>, maximal_only: bool, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Text, Format::Json], Format::Text)?;
    let ks = match k {
        Some(k) => k..=k,
        None => 0..=n / 2,
    };
    let mut all = Vec::new();
    for k in ks {
        all.extend(LinkPattern::enumerate(n, k, maximal_only)?);
    }
    let body = match format {
        Format::Json => json(&all),
        _ => all.iter().map(|s| format!("{s}\n")).collect(),
    };
    Ok((body, Ok(())))
}

#[derive(Clone, Debug, Default, Serialize)]
pub(crate) struct SweepRow {
    pub n: usize,
    pub k: usize,
    /// maximal patterns checked against the smoothness criterion
    pub maximal: usize,
    pub smooth: usize,
    pub criterion_mismatches: usize,
    /// patterns with rho >= 4, checked against the oracle
    pub singular: usize,
    pub components: usize,
    pub sing_mismatches: usize,
}

#[derive(Serialize)]
pub(crate) struct Sweep {
    pub max_n: usize,
    pub rows: Vec<SweepRow>,
    pub cases: usize,
    pub mismatches: usize,
    pub failures: Vec<String>,
}

enum Check {
    Smooth(bool),
    Singular(usize, bool),
}

pub(crate) fn crosscheck(max_n: usize, oracle: &Oracle, out: &Output) -> Emitted {
    let format = out.pick(&[Format::Text, Format::Json], Format::Text)?;
    oracle.check_size(max_n)?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        for k in 0..=n / 2 {
            let all: Vec<LinkPattern> = LinkPattern::enumerate(n, k, true)?.collect();
            let checks: Vec<(LinkPattern, Check)> = all
                .par_iter()
                .map(|s| -> Result<_, Error> {
                    let rho = s.rho()?;
                    let regular = oracle.is_smooth(s)?;
                    if rho <= 3 {
                        return Ok((s.clone(), Check::Smooth(regular)));
                    }
                    let d: BTreeSet<_> = sing_any(s, oracle)?.patterns().into_iter().collect();
                    let g: BTreeSet<_> = oracle.sing_components(s)?.into_iter().collect();
                    Ok((s.clone(), Check::Singular(d.len(), d == g && !regular)))
                })
                .collect::<Result<_, _>>()?;
            let mut row = SweepRow { n, k, maximal: all.len(), ..SweepRow::default() };
            for (s, c) in checks {
                match c {
                    Check::Smooth(true) => row.smooth += 1,
                    Check::Smooth(false) => {
                        row.criterion_mismatches += 1;
                        failures.push(format!("{s}: rho <= 3 but G_sigma is not regular"));
                    }
                    Check::Singular(count, ok) => {
                        row.singular += 1;
                        row.components += count;
                        if !ok {
                            row.sing_mismatches += 1;
                            failures.push(format!("{s}: direct construction differs from the oracle"));
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    let cases = rows.iter().map(|r| r.maximal).sum();
    let mismatches = rows.iter().map(|r| r.criterion_mismatches + r.sing_mismatches).sum();
    let sweep = Sweep { max_n, rows, cases, mismatches, failures };
    let verdict = if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{mismatches} mismatches for n <= {max_n}")))
    };
    let body = match format {
        Format::Json => json(&sweep),
        _ => text::sweep(&sweep),
    };
    Ok((body, verdict))
}
