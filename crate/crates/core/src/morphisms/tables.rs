//! Known automorphism and commensurator data, evaluated at a given rank.
//!
//! `Γ` below is the mapping class group of the `(n+2)`-punctured sphere and
//! `Γ_X` the finite index subgroup identified with `A(X)/Z` (finite types)
//! or `A(X)` (affine types).

use serde::{Deserialize, Serialize};

use crate::presentations::ArtinType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub group: ArtinType,
    /// `Out(A)`.
    pub out: String,
    /// `Out(A/Z)` where it differs from the line above or is recorded.
    pub out_mod_center: Option<String>,
    /// Quotient in `1 → Γ_X → Aut(Γ_X) → Q → 1`.
    pub aut_quotient: Option<String>,
    /// `Comm(Γ_X)`.
    pub comm: Option<String>,
    /// `[Γ : Γ_X]`.
    pub index: Option<u64>,
    /// Whether `1 → Inn(A) → Aut(A) → Out(A) → 1` splits, when known.
    pub inner_sequence_splits: Option<bool>,
    /// `Tv(A)`, the transvection automorphisms.
    pub transvections: String,
    pub notes: Vec<String>,
}

fn row(group: ArtinType, out: &str, transvections: &str) -> ReferenceRow {
    ReferenceRow {
        group,
        out: out.into(),
        out_mod_center: None,
        aut_quotient: None,
        comm: None,
        index: None,
        inner_sequence_splits: None,
        transvections: transvections.into(),
        notes: Vec::new(),
    }
}

/// Rows for the four infinite families at rank `n`.
pub fn family_rows(n: usize) -> Vec<ReferenceRow> {
    let n64 = n as u64;
    let comm = format!("Mod(S_{})", n + 2);
    let index_b = 2 * (n64 + 1) * (n64 + 2);

    let mut a = row(ArtinType::A(n), "C_2", "trivial");
    a.out_mod_center = Some("C_2".into());
    a.aut_quotient = Some("C_2".into());
    a.comm = Some(comm.clone());
    a.index = Some(2 * (n64 + 2));
    a.inner_sequence_splits = Some(true);

    let mut b = row(ArtinType::B(n), "(Z⋊C_2)×C_2", "Z");
    b.out_mod_center = Some("C_2×C_2".into());
    b.aut_quotient = Some("C_2×C_2".into());
    b.comm = Some(comm.clone());
    b.index = Some(index_b);
    b.inner_sequence_splits = Some(true);
    b.notes.push(format!("A(B_{n}) ≅ A(Ã_{}) ⋊ Z", n - 1));
    b.notes.push(format!("Γ_B ≅ A(Ã_{}) ⋊ Z/{n}Z", n - 1));
    b.notes.push("Aut(A) ≅ (Γ_B × Tv(A)) ⋊ (C_2×C_2)".to_string());

    let mut c = row(ArtinType::AffC(n), "Sym(3)×C_2", "trivial (centre is trivial)");
    c.aut_quotient = Some("Sym(3)×C_2".into());
    c.comm = Some(comm.clone());
    c.index = Some(2 * n64 * (n64 + 1) * (n64 + 2));
    let splits = n % 3 != 2;
    c.inner_sequence_splits = Some(splits);
    if !splits {
        c.notes.push(format!(
            "n+2 = {} ≡ 1 mod 3: Aut(A) contains no subgroup isomorphic to Sym(3)",
            n + 2
        ));
    }

    let mut aa = row(
        ArtinType::AffA(n),
        &format!("D_{}×C_2", 2 * n),
        "trivial (centre is trivial)",
    );
    aa.aut_quotient = Some(format!("D_{}×C_2", 2 * n));
    aa.comm = Some(comm);
    aa.index = Some(n64 * index_b);
    aa.inner_sequence_splits = Some(true);
    aa.notes
        .push("D_{2n} realized by the graph automorphisms of the n-cycle".into());

    vec![a, b, c, aa]
}

/// Row for the dihedral type.
pub fn dihedral_row(m: u32) -> ReferenceRow {
    if m % 2 == 1 {
        let mut r = row(ArtinType::I2(m), "C_2", "trivial");
        r.notes.push(format!("A/Z ≅ C_2 ⋆ C_{m}; Out(A/Z) ≅ (Z/{m}Z)^×"));
        r
    } else if m == 4 {
        let mut r = row(ArtinType::I2(m), "D_∞×C_2", "D_∞");
        r.notes
            .push("Tv(A) generated by η² and T_0 = ε∘η∘γ; Tv(A)⋊Aut*(A) = Aut(A)".into());
        r
    } else {
        let mut r = row(ArtinType::I2(m), "D_∞×C_2", "Z");
        r.notes
            .push(format!("Tv(A)⋊Aut*(A) has index {} in Aut(A)", m / 2));
        r
    }
}

pub fn f4_row() -> ReferenceRow {
    let mut r = row(ArtinType::F4, "unknown", "Z");
    r.notes
        .push("index of Tv(A)⋊Aut*(A) in Aut(A) not known; nothing computed".into());
    r
}

/// Every row: the four families for each `n` in `ranks`, the dihedral
/// types for `m` in `dihedral`, then `F4`.
pub fn reference_tables(ranks: &[usize], dihedral: &[u32]) -> Vec<ReferenceRow> {
    let mut rows: Vec<ReferenceRow> = ranks.iter().flat_map(|&n| family_rows(n)).collect();
    rows.extend(dihedral.iter().map(|&m| dihedral_row(m)));
    rows.push(f4_row());
    rows
}
