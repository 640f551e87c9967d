//! Plain-text layouts for terminal output.

use std::fmt::Write as _;

use springer_sing::SingReport;

use crate::commands::{Classification, Sweep};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub(crate) fn classification(c: &Classification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "link pattern  {}", c.sigma);
    if let Some(t) = &c.tableau {
        let _ = writeln!(s, "tableau       {t}");
    }
    let _ = writeln!(s, "n, k          {}, {}", c.n, c.k);
    let _ = writeln!(s, "maximal       {}", yes_no(c.maximal));
    let _ = writeln!(s, "tau*          {}", list(&c.tau_star));
    if let Some(rho) = c.rho {
        let _ = writeln!(s, "rho           {rho}");
    }
    let status = match c.smooth {
        Some(true) => "smooth",
        Some(false) => "singular",
        None => "unknown",
    };
    let _ = writeln!(s, "status        {status}");
    let _ = writeln!(s, "dim           {}", c.dim);
    let _ = writeln!(s, "d0            {}", c.d0);
    let _ = writeln!(s, "p_sigma       {}", c.p_sigma);
    if let Some(note) = &c.note {
        let _ = writeln!(s, "note          {note}");
    }
    s
}

pub(crate) fn sing_report(r: &SingReport) -> String {
    let mut s = String::new();
    let method = serde_json::to_value(r.method).ok();
    let method = method.as_ref().and_then(|m| m.as_str()).unwrap_or("?");
    let _ = writeln!(s, "sigma   {}", r.sigma);
    match r.rho {
        Some(rho) => {
            let _ = writeln!(s, "rho     {rho}");
        }
        None => {
            let _ = writeln!(s, "rho     - (not maximal)");
        }
    }
    let _ = writeln!(s, "method  {method}");
    let _ = writeln!(s, "smooth  {}", yes_no(r.smooth));
    if let Some(note) = &r.note {
        let _ = writeln!(s, "note    {note}");
    }
    if r.smooth {
        return s;
    }
    let _ = writeln!(s, "components ({}):", r.components.len());
    let width = r.components.iter().map(|c| c.pattern.to_string().len()).max().unwrap_or(0);
    for c in &r.components {
        let _ = write!(
            s,
            "  {:<width$}  codim {:>2}  tangent {:>3}",
            c.pattern.to_string(),
            c.codim,
            c.tangent_dim
        );
        if let Some(pair) = &c.pair {
            let _ = write!(s, "  from {pair}");
        }
        s.push('\n');
    }
    s
}

pub(crate) fn sweep(w: &Sweep) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3} {:>3} {:>8} {:>7} {:>9} {:>9} {:>11} {:>9}",
        "n", "k", "maximal", "smooth", "rho-fail", "singular", "components", "sing-fail"
    );
    for r in &w.rows {
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>8} {:>7} {:>9} {:>9} {:>11} {:>9}",
            r.n, r.k, r.maximal, r.smooth, r.criterion_mismatches, r.singular, r.components, r.sing_mismatches
        );
    }
    for f in &w.failures {
        let _ = writeln!(s, "FAIL {f}");
    }
    let _ = writeln!(
        s,
        "{} maximal patterns for n <= {}, {} mismatches",
        w.cases, w.max_n, w.mismatches
    );
    s
}
