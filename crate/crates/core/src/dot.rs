//! Graphviz export of the specialization order of a spectrum.

use std::fmt::Write;

use crate::spectrum::Spectrum;

/// Hasse diagram of inclusion among the points: an edge `x -> y` for every
/// `x ⊊ y` with no point strictly between. Nodes appear in point order.
pub fn export_dot(spec: &Spectrum<'_>) -> String {
    let pts = spec.points();
    let mut out = String::new();
    let name = format!("{} {}", spec.semiring().id(), spec.class());
    writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, p) in pts.iter().enumerate() {
        writeln!(out, "  p{i} [label=\"{}\"];", p.members()).unwrap();
    }
    let below = |x: usize, y: usize| x != y && pts[x].is_subset(&pts[y]);
    for x in 0..pts.len() {
        for y in 0..pts.len() {
            if below(x, y) && !(0..pts.len()).any(|z| below(x, z) && below(z, y)) {
                writeln!(out, "  p{x} -> p{y};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
