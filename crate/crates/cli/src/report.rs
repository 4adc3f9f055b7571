//! Report rendering: aligned text tables and canonical JSON.
//!
//! Machine reports are `serde_json::Value` trees whose objects are ordered
//! maps, so keys come out sorted and identical inputs give identical bytes.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use strong_atoms::krull::{Bounds, Decision};

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.push(line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n") + "\n"
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn decision(d: Decision) -> Value {
    json!(d.to_string())
}

pub fn bounds(b: &Bounds) -> Value {
    json!({
        "budget": b.budget,
        "n_max": b.n_max,
        "support_bound": b.support_bound,
    })
}

pub fn length_set(lengths: &BTreeSet<usize>) -> String {
    let items: Vec<String> = lengths.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

