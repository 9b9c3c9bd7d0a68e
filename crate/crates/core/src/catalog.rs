//! Built-in corpus of named groups.

use crate::error::Result;
use crate::group::{GroupSpec, Permutation};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Canonical spec text, which doubles as the entry name.
    pub name: String,
    /// Constructor arguments for presets; empty for products.
    pub args: Vec<u64>,
    pub spec: GroupSpec,
    pub notes: &'static str,
}

impl CatalogEntry {
    /// Degree and generators of the permutation realization.
    pub fn realization(&self) -> Result<(usize, Vec<Permutation>)> {
        self.spec.action()
    }
}

const ENTRIES: &[(&str, &str)] = &[
    ("preset:Cyclic(2)", "cyclic"),
    ("preset:Cyclic(4)", "cyclic"),
    ("preset:Cyclic(8)", "cyclic"),
    ("preset:Cyclic(16)", "cyclic"),
    ("preset:Cyclic(32)", "cyclic"),
    ("preset:Cyclic(64)", "cyclic"),
    ("preset:Cyclic(3)", "cyclic"),
    ("preset:Cyclic(9)", "cyclic"),
    ("preset:Cyclic(27)", "cyclic"),
    ("preset:Cyclic(5)", "cyclic"),
    ("preset:Cyclic(25)", "cyclic"),
    ("preset:Cyclic(6)", "cyclic, not a p-group"),
    ("preset:Cyclic(12)", "cyclic, not a p-group"),
    ("preset:ElemAbelian(2,2)", "Klein four group"),
    ("preset:ElemAbelian(2,3)", "elementary abelian"),
    ("preset:ElemAbelian(2,4)", "elementary abelian"),
    ("preset:ElemAbelian(2,5)", "elementary abelian"),
    ("preset:ElemAbelian(2,6)", "elementary abelian"),
    ("preset:ElemAbelian(3,2)", "elementary abelian"),
    ("preset:ElemAbelian(3,3)", "elementary abelian"),
    ("preset:ElemAbelian(3,4)", "elementary abelian"),
    ("preset:ElemAbelian(5,2)", "elementary abelian"),
    ("preset:ElemAbelian(5,3)", "elementary abelian"),
    ("preset:ElemAbelian(7,2)", "elementary abelian"),
    ("preset:Abelian(2,4)", "abelian"),
    ("preset:Abelian(2,8)", "abelian"),
    ("preset:Abelian(4,4)", "abelian"),
    ("preset:Abelian(2,2,4)", "abelian"),
    ("preset:Abelian(2,16)", "abelian"),
    ("preset:Abelian(4,8)", "abelian"),
    ("preset:Abelian(2,2,2,4)", "abelian"),
    ("preset:Abelian(2,32)", "abelian"),
    ("preset:Abelian(8,8)", "abelian"),
    ("preset:Abelian(2,4,8)", "abelian"),
    ("preset:Abelian(4,16)", "abelian"),
    ("preset:Abelian(3,9)", "abelian"),
    ("preset:Abelian(9,9)", "abelian"),
    ("preset:Abelian(3,3,9)", "abelian"),
    ("preset:Abelian(5,25)", "abelian"),
    ("preset:Dihedral(8)", "dihedral"),
    ("preset:Dihedral(16)", "dihedral"),
    ("preset:Dihedral(32)", "dihedral"),
    ("preset:Dihedral(64)", "dihedral"),
    ("preset:Dihedral(128)", "dihedral"),
    ("preset:Dihedral(6)", "symmetric group S3, not nilpotent"),
    ("preset:Dihedral(12)", "not nilpotent"),
    ("preset:GenQuaternion(1)", "quaternion group Q8"),
    (
        "preset:GenQuaternion(2)",
        "generalized quaternion, order 16",
    ),
    (
        "preset:GenQuaternion(3)",
        "generalized quaternion, order 32",
    ),
    (
        "preset:GenQuaternion(4)",
        "generalized quaternion, order 64",
    ),
    (
        "preset:GenQuaternion(5)",
        "generalized quaternion, order 128",
    ),
    ("preset:SemiDihedral(16)", "semidihedral"),
    ("preset:SemiDihedral(32)", "semidihedral"),
    ("preset:SemiDihedral(64)", "semidihedral"),
    ("preset:SemiDihedral(128)", "semidihedral"),
    ("preset:ModularMaximalCyclic(16)", "modular"),
    ("preset:ModularMaximalCyclic(32)", "modular"),
    ("preset:ModularMaximalCyclic(64)", "modular"),
    ("preset:ModularMaximalCyclic(128)", "modular"),
    ("preset:Heisenberg(3)", "extraspecial 3^(1+2), exponent 3"),
    ("preset:Heisenberg(5)", "extraspecial 5^(1+2), exponent 5"),
    (
        "preset:Extraspecial(3,9)",
        "extraspecial 3^(1+2), exponent 9",
    ),
    (
        "preset:Extraspecial(5,25)",
        "extraspecial 5^(1+2), exponent 25",
    ),
    ("preset:Metacyclic(4,4,3)", "C4 x| C4; has a Q8 quotient"),
    ("preset:Metacyclic(9,3,4)", "C9 x| C3"),
    ("preset:Metacyclic(4,8,3)", "C4 x| C8"),
    ("preset:Metacyclic(8,4,3)", "C8 x| C4"),
    ("preset:Metacyclic(8,8,3)", "C8 x| C8"),
    ("preset:Metacyclic(16,4,5)", "C16 x| C4"),
    ("preset:Symmetric(3)", "not nilpotent"),
    ("preset:Symmetric(4)", "not nilpotent"),
    (
        "product:preset:Dihedral(8)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:Cyclic(4)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:ElemAbelian(2,2)",
        "direct product",
    ),
    (
        "product:preset:Dihedral(8)|preset:Cyclic(4)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(2)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:SemiDihedral(16)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:GenQuaternion(1)",
        "direct product",
    ),
    (
        "product:preset:Dihedral(8)|preset:Dihedral(8)",
        "direct product",
    ),
    (
        "product:preset:Dihedral(8)|preset:GenQuaternion(1)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(3)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:Cyclic(8)",
        "direct product",
    ),
    (
        "product:preset:Cyclic(2)|preset:Cyclic(4)|preset:Cyclic(8)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:Dihedral(8)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:GenQuaternion(1)|preset:ElemAbelian(2,2)",
        "direct product",
    ),
    (
        "product:preset:Dihedral(16)|preset:GenQuaternion(2)|preset:Cyclic(2)",
        "direct product",
    ),
    (
        "product:preset:Heisenberg(3)|preset:Cyclic(3)",
        "direct product",
    ),
    (
        "product:preset:Extraspecial(3,9)|preset:Cyclic(3)",
        "direct product",
    ),
    (
        "product:preset:Heisenberg(3)|preset:Cyclic(9)",
        "direct product",
    ),
    (
        "product:preset:Cyclic(2)|preset:Cyclic(6)",
        "nilpotent; Sylow-3 is cyclic",
    ),
    (
        "product:preset:GenQuaternion(1)|preset:Cyclic(3)",
        "nilpotent; Sylow-2 is Q8",
    ),
    (
        "product:preset:Heisenberg(3)|preset:ElemAbelian(5,2)",
        "nilpotent, two Sylow factors",
    ),
    (
        "product:preset:ElemAbelian(2,2)|preset:ElemAbelian(3,2)|preset:ElemAbelian(5,2)",
        "nilpotent, three Sylow factors",
    ),
];

/// Every entry, in listing order.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(text, notes)| {
            let spec = GroupSpec::parse(text).expect("catalog specs parse");
            let args = match &spec {
                GroupSpec::Preset(p) => p.args(),
                _ => Vec::new(),
            };
            CatalogEntry {
                name: spec.to_string(),
                args,
                spec,
                notes,
            }
        })
        .collect()
}
