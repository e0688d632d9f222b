//! Deterministic DOT export of a chain decomposition: one cluster per
//! chain, edges along the cover relations. Identical input gives
//! byte-identical output.

use std::fmt::Write;

use unimodal::chains::ChainDecomposition;

pub fn export_dot(dec: &ChainDecomposition) -> String {
    let mut out = String::new();
    out.push_str("digraph scd {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for (i, chain) in dec.chains().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").expect("writing to a String");
        writeln!(out, "    label=\"chain {i}\";").expect("writing to a String");
        for s in chain.subsets() {
            writeln!(out, "    s{} [label=\"{}\"];", s.mask(), s).expect("writing to a String");
        }
        out.push_str("  }\n");
    }
    for chain in dec.chains() {
        for pair in chain.subsets().windows(2) {
            writeln!(out, "  s{} -> s{};", pair[0].mask(), pair[1].mask())
                .expect("writing to a String");
        }
    }
    out.push_str("}\n");
    out
}
