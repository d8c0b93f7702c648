//! Hasse diagram of the quotient semilattice in DOT.

use std::fmt::Write;

use moufang_core::decomp::Decomposition;

/// One node per component, labelled `Ck (size s, min m)`; one edge per
/// covering pair `a < b` of the quotient's natural order (`a ≤ b ⇔ ab = a`),
/// drawn from the lower class to the upper one and sorted by `(lower, upper)`.
///
/// Without a quotient (explorative runs where σ is not a congruence) only the
/// nodes are emitted.
pub fn hasse_dot(d: &Decomposition) -> String {
    let mut out = String::new();
    out.push_str("digraph quotient {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for (k, c) in d.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "  C{k} [label=\"C{k} (size {}, min {})\"];",
            c.members.len(),
            c.members[0]
        );
    }
    if let Some(q) = &d.quotient {
        let k = q.order();
        let leq = |a: usize, b: usize| q.op(a, b) == a;
        for a in 0..k {
            for b in 0..k {
                if a == b || !leq(a, b) {
                    continue;
                }
                let covered = !(0..k).any(|c| c != a && c != b && leq(a, c) && leq(c, b));
                if covered {
                    let _ = writeln!(out, "  C{a} -> C{b};");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use moufang_core::decomp::{decompose, DecomposeOptions};
    use moufang_core::generators::chain_semilattice;
    use moufang_core::Magma;

    #[test]
    fn single_node() {
        let d = decompose(&Magma::new(1, &[0]).unwrap(), DecomposeOptions::default()).unwrap();
        assert_eq!(
            hasse_dot(&d),
            "digraph quotient {\n  rankdir=BT;\n  node [shape=box];\n  C0 [label=\"C0 (size 1, min 0)\"];\n}\n"
        );
    }

    #[test]
    fn chain_edges_are_covers_only() {
        let d = decompose(&chain_semilattice(3).unwrap(), DecomposeOptions::default()).unwrap();
        let dot = hasse_dot(&d);
        assert!(dot.contains("  C0 -> C1;\n  C1 -> C2;\n"));
        assert!(!dot.contains("C0 -> C2"));
    }
}
