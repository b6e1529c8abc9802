//! Plain-text view of a [`ResultDocument`].

use std::fmt::Write;

use ghw_core::analysis::CheckKind;

use crate::document::{ResultDocument, WeightEntry};

fn weights_line(ws: &[WeightEntry]) -> String {
    ws.iter().map(|w| if w.exact { w.value.to_string() } else { format!("≤{}", w.value) }).collect::<Vec<_>>().join(" ")
}

fn words<T: ToString>(ws: &[T]) -> String {
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[must_use]
pub fn render_text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    if let Some(c) = &doc.code {
        let _ = writeln!(out, "code: [{}, {}]{}", c.n, c.k, if c.nondegenerate { "" } else { " (degenerate)" });
    }
    if let Some(o) = &doc.order {
        let _ = writeln!(out, "order: {o}");
    }
    if let Some(ws) = &doc.weights {
        let label = doc.route.as_deref().map_or(String::new(), |r| format!(" ({r})"));
        let _ = writeln!(out, "ghw{label}: {}", weights_line(ws));
    }
    if let Some(g) = &doc.groebner {
        let _ = writeln!(
            out,
            "reduced Gröbner basis: {} elements ({} binomials + {} quadrics)",
            g.total,
            g.binomials.len(),
            g.quadrics
        );
        for b in &g.rendered {
            let _ = writeln!(out, "  {b}");
        }
    }
    if let Some(ts) = &doc.test_set {
        let _ = writeln!(out, "test set ({}): {}", ts.len(), words(ts));
    }
    if let Some(b) = &doc.betti {
        let _ = writeln!(out, "betti diagram of R/{} ({} generators):", b.ideal, b.generators.len());
        out.push_str(&b.diagram);
        let _ = writeln!(out, "min shifts: {}", words(&b.min_shifts));
        let _ = writeln!(out, "projective dimension: {}", b.projective_dimension);
        let shape = match (b.pure, b.linear) {
            (true, true) => Some("pure and linear"),
            (true, false) => Some("pure"),
            (false, true) => Some("linear"),
            (false, false) => None,
        };
        if let Some(shape) = shape {
            let _ = writeln!(out, "resolution is {shape}");
        }
    }
    if let Some(d) = &doc.decode {
        let _ = writeln!(out, "word:     {}", d.word);
        let _ = writeln!(out, "leader:   {}", d.leader);
        let _ = writeln!(out, "codeword: {}", d.codeword);
        let _ = writeln!(out, "error weight: {}", d.error_weight);
    }
    if let Some(v) = &doc.verification {
        let _ = writeln!(out, "test-set shifts: {} (pd {})", words(&v.minshift_testset), v.pd_testset);
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "witness: m1 = {}, m2 = {}", w.m1, w.m2);
        }
        for c in &v.checks {
            let kind = match c.kind {
                CheckKind::Proven => "proven",
                CheckKind::Open => "open",
            };
            let verdict = if c.passed { "ok" } else { "FAIL" };
            let _ = writeln!(out, "  [{kind:>6}] {:<28} {verdict:<4} {}", c.name, c.detail);
        }
    }
    if let Some(s) = &doc.search {
        let _ = writeln!(
            out,
            "search [{}, {}], {} trials, seed {}: {} codes ({} rank-deficient, {} degenerate skipped)",
            s.n, s.k, s.trials, s.seed, s.codes_examined, s.rejected_rank_deficient, s.skipped_degenerate
        );
        for f in &s.flagged {
            let _ = writeln!(
                out,
                "flagged {} under {}: ghw {} vs shifts {} (pd {}, k {}, first mismatch at i = {})",
                f.source,
                f.order,
                f.ghw,
                words(&f.minshift_testset),
                f.pd_testset,
                f.k,
                f.first_mismatch
            );
            for row in f.generator.rows() {
                let bits: Vec<String> = row.to_string().chars().map(String::from).collect();
                let _ = writeln!(out, "    {}", bits.join(" "));
            }
        }
    }
    for note in &doc.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
