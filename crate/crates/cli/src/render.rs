//! Text, JSON and DOT rendering for CLI reports.

use declat_core::decomp::SpecialDecomposition;
use declat_core::ideals::{Ideal, SpectrumReport};
use declat_core::theorems::{TheoremVerdict, VerdictStatus};
use declat_core::Lattice;

/// Ideals print by generator: the zero ideal as `{0}`, the whole lattice
/// as `L`, everything else as `(g]`.
pub fn ideal_name(l: &Lattice, i: &Ideal) -> String {
    if i.generator() == l.bottom() {
        "{0}".to_string()
    } else if i.generator() == l.top() {
        "L".to_string()
    } else {
        format!("({}]", l.label(i.generator()))
    }
}

fn ideal_list(l: &Lattice, ideals: &[Ideal]) -> String {
    if ideals.is_empty() {
        return "(none)".to_string();
    }
    ideals
        .iter()
        .map(|i| ideal_name(l, i))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn validate_text(l: &Lattice, decomposable: Option<(bool, Option<(usize, usize)>)>) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice: {}\n", l.name()));
    out.push_str(&format!(
        "elements: {} (bottom {}, top {})\n",
        l.len(),
        l.label(l.bottom()),
        l.label(l.top())
    ));
    out.push_str(&format!(
        "totally ordered: {}\n",
        if l.is_totally_ordered() { "yes" } else { "no" }
    ));
    match l.distributivity_witness() {
        None => out.push_str("distributive: yes\n"),
        Some((a, b, c)) => out.push_str(&format!(
            "distributive: no (witness: a={}, b={}, c={})\n",
            l.label(a),
            l.label(b),
            l.label(c)
        )),
    }
    match decomposable {
        None => out.push_str("decomposable: n/a (not distributive)\n"),
        Some((true, _)) => out.push_str("decomposable: yes\n"),
        Some((false, pair)) => {
            let (a, b) = pair.expect("failing pair accompanies a negative answer");
            out.push_str(&format!(
                "decomposable: no (failing pair: {}, {})\n",
                l.label(a),
                l.label(b)
            ));
        }
    }
    out
}

pub fn validate_json(
    l: &Lattice,
    decomposable: Option<(bool, Option<(usize, usize)>)>,
) -> serde_json::Value {
    let witness = l
        .distributivity_witness()
        .map(|(a, b, c)| vec![l.label(a), l.label(b), l.label(c)]);
    let (dec, pair) = match decomposable {
        None => (serde_json::Value::Null, None),
        Some((d, p)) => (
            serde_json::Value::Bool(d),
            p.map(|(a, b)| vec![l.label(a), l.label(b)]),
        ),
    };
    serde_json::json!({
        "name": l.name(),
        "elements": l.labels(),
        "bottom": l.label(l.bottom()),
        "top": l.label(l.top()),
        "totally_ordered": l.is_totally_ordered(),
        "distributive": l.is_distributive(),
        "distributivity_witness": witness,
        "decomposable": dec,
        "failing_pair": pair,
    })
}

pub fn spectrum_text(l: &Lattice, r: &SpectrumReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice: {} ({} elements)\n", l.name(), l.len()));
    out.push_str(&format!("ideals: {}\n", ideal_list(l, &r.all_ideals)));
    out.push_str(&format!("primes: {}\n", ideal_list(l, &r.primes)));
    out.push_str(&format!("minimal primes: {}\n", ideal_list(l, &r.min_primes)));
    out.push_str(&format!("values: {}\n", ideal_list(l, &r.values)));
    out.push_str(&format!("specials: {}\n", ideal_list(l, &r.specials)));
    out.push_str(&format!("polar ideals: {}\n", ideal_list(l, &r.polar_ideals)));
    if r.ultrafilters.is_empty() {
        out.push_str("ultrafilters: (none)\n");
    } else {
        let sets: Vec<String> = r
            .ultrafilters
            .iter()
            .map(|f| {
                let members: Vec<&str> = f.carrier().iter().map(|e| l.label(e)).collect();
                format!("{{{}}}", members.join(", "))
            })
            .collect();
        out.push_str(&format!("ultrafilters: {}\n", sets.join(", ")));
    }
    out.push_str("values by element:\n");
    for (x, vals) in r.val_of.iter().enumerate().skip(1) {
        out.push_str(&format!("  {}: {}\n", l.label(x), ideal_list(l, vals)));
    }
    out.push_str("S_P:\n");
    for (p, sp) in &r.s_p {
        out.push_str(&format!(
            "  {}: {}\n",
            ideal_name(l, p),
            ideal_name(l, sp)
        ));
    }
    out
}

pub fn decompose_text(l: &Lattice, d: &SpecialDecomposition) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattice: {}\n", l.name()));
    out.push_str(&format!("element: {}\n", l.label(d.element)));
    let parts: Vec<&str> = d.parts.iter().map(|&p| l.label(p)).collect();
    out.push_str(&format!("parts: {}\n", parts.join(", ")));
    for (part, value) in &d.value_map {
        out.push_str(&format!(
            "  {}: value {}\n",
            l.label(*part),
            ideal_name(l, value)
        ));
    }
    out
}

pub fn decompose_json(l: &Lattice, d: &SpecialDecomposition) -> serde_json::Value {
    serde_json::json!({
        "lattice": l.name(),
        "element": l.label(d.element),
        "parts": d.parts.iter().map(|&p| l.label(p)).collect::<Vec<_>>(),
        "values": d
            .value_map
            .iter()
            .map(|(part, v)| serde_json::json!({
                "part": l.label(*part),
                "value": ideal_name(l, v),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn verdict_line(v: &TheoremVerdict) -> String {
    match &v.status {
        VerdictStatus::Holds => format!("{} on {}: holds", v.theorem_id, v.lattice),
        VerdictStatus::Fails => {
            let mut line = format!("{} on {}: FAILS", v.theorem_id, v.lattice);
            if let Some(ce) = &v.counterexample {
                line.push_str(&format!("\n  counterexample: {}", ce.description));
            }
            line
        }
        VerdictStatus::Inapplicable(reason) => {
            format!("{} on {}: inapplicable ({reason})", v.theorem_id, v.lattice)
        }
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph of the Hasse diagram: one edge per cover, lower to upper,
/// in lexicographic index order. Byte-stable for a fixed input.
pub fn dot(l: &Lattice) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(l.name())));
    out.push_str("  rankdir=BT;\n");
    for i in 0..l.len() {
        out.push_str(&format!("  \"{}\";\n", escape(l.label(i))));
    }
    for &(a, b) in l.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            escape(l.label(a)),
            escape(l.label(b))
        ));
    }
    out.push_str("}\n");
    out
}
