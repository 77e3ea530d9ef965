//! The verification report: an ordered battery of checks over every module,
//! run at each requested rank, with text and JSON output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::braid::{center_data, full_twist, BraidOracle, DEFAULT_GARSIDE_THRESHOLD};
use crate::error::{ArtinError, Result};
use crate::freegroup::DEFAULT_LETTER_BUDGET;
use crate::morphisms::catalog::{self, CATALOG};
use crate::morphisms::{
    apply, compose, length_class, lift_mod_center, reference_tables,
    shift_by_center, verify_morphism_with, AbImage, GroupRef, LengthClass, Morphism, OracleConfig,
    WordOracle,
};
use crate::presentations::{coxeter_matrix, presentation, ArtinType, Label, Word};
use crate::transvections::{
    comm_compose_check, comm_sequence, is_automorphism, sequence_is_coprime_and_unit, tv_compose,
    tv_morphism, tv_structure, zeta_exponent, Transvection, TvParam, TvStructure,
};

pub const MIN_RANK: usize = 3;
pub const MAX_RANK: usize = 8;
/// Dihedral parameters exercised by every report.
pub const DIHEDRAL_RANGE: std::ops::RangeInclusive<u32> = 3..=8;
pub const COMM_MODULI: [i64; 3] = [6, 12, 24];
pub const AGREEMENT_PAIRS_PER_RANK: usize = 250;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Longest random word drawn.
    pub word_length: usize,
    /// Largest free word the oracles may build.
    pub letter_budget: usize,
    pub garside_threshold: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            word_length: 16,
            letter_budget: DEFAULT_LETTER_BUDGET,
            garside_threshold: DEFAULT_GARSIDE_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub ranks: Vec<usize>,
    pub seed: u64,
    pub budgets: Budgets,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            ranks: vec![3],
            seed: 0,
            budgets: Budgets::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// The claim being checked.
    pub anchor: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// Failing relation or word pair; the reason for a skip.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ReportConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| ArtinError::parse(text.chars().take(40).collect::<String>(), e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let ranks: Vec<String> = self.config.ranks.iter().map(usize::to_string).collect();
        let b = &self.config.budgets;
        let mut out = format!(
            "# artin report {}\n# ranks {} seed {} word_length {} letter_budget {} garside_threshold {}\n",
            self.version,
            ranks.join(","),
            self.config.seed,
            b.word_length,
            b.letter_budget,
            b.garside_threshold
        );
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {} ({})", c.status.tag(), c.id, c.anchor);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "    {w}");
            }
        }
        let s = self.summary;
        let _ = writeln!(out, "# {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        out
    }
}

/// `Ok(None)` is a pass, `Ok(Some(witness))` a failure.
type Verdict = Result<Option<String>>;
type Runner = Box<dyn Fn(&Ctx) -> Verdict + Send + Sync>;

struct Check {
    id: String,
    anchor: String,
    params: Vec<(&'static str, i64)>,
    run: Runner,
}

struct Ctx {
    seed: u64,
    word_length: usize,
    oracle: OracleConfig,
}

impl Ctx {
    /// A generator that depends on the seed and the check, not on run order.
    fn rng(&self, salt: &str) -> StdRng {
        let h = salt
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        StdRng::seed_from_u64(self.seed ^ h)
    }

    fn oracle(&self, g: GroupRef) -> Result<Box<dyn WordOracle>> {
        g.oracle(&self.oracle)
    }

    fn braid(&self, n: usize) -> BraidOracle {
        BraidOracle::new(n)
            .with_budget(self.oracle.letter_budget)
            .with_garside_threshold(self.oracle.garside_threshold)
    }
}

fn check(
    id: impl Into<String>,
    anchor: impl Into<String>,
    params: Vec<(&'static str, i64)>,
    run: impl Fn(&Ctx) -> Verdict + Send + Sync + 'static,
) -> Check {
    Check {
        id: id.into(),
        anchor: anchor.into(),
        params,
        run: Box::new(run),
    }
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
    Ok(if ok { None } else { Some(witness()) })
}

fn random_word(rng: &mut StdRng, rank: usize, max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len.max(1));
    Word::new(
        (0..len)
            .map(|_| {
                let i = rng.random_range(1..=rank as i32);
                if rng.random_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect(),
    )
}

/// `w` with a relator or a cancelling pair spliced in: equal to `w`.
fn disguise(rng: &mut StdRng, rank: usize, w: &Word) -> Result<Word> {
    let rels = presentation(ArtinType::A(rank))?.relations;
    let mut letters = w.letters().to_vec();
    for _ in 0..rng.random_range(1..=2) {
        let insert = if rng.random_bool(0.5) {
            let r = &rels[rng.random_range(0..rels.len())];
            let relator = r.lhs.concat(&r.rhs.inverse());
            if rng.random_bool(0.5) {
                relator.inverse()
            } else {
                relator
            }
        } else {
            let i = rng.random_range(1..=rank as i32);
            Word::new(vec![i, -i])
        };
        let at = rng.random_range(0..=letters.len());
        letters.splice(at..at, insert.into_letters());
    }
    Ok(Word::new(letters))
}

fn images_equal(oracle: &dyn WordOracle, f: &Morphism, expected: &[Word]) -> Verdict {
    for (i, (a, b)) in f.images.iter().zip(expected).enumerate() {
        if !oracle.equal(a, b)? {
            return Ok(Some(format!("generator {}: [{a}] vs [{b}]", i + 1)));
        }
    }
    Ok(None)
}

fn generators(rank: usize) -> Vec<Word> {
    (1..=rank).map(Word::generator).collect()
}

fn verify_check(
    id: impl Into<String>,
    anchor: impl Into<String>,
    params: Vec<(&'static str, i64)>,
    build: impl Fn() -> Result<Morphism> + Send + Sync + 'static,
    class: Option<LengthClass>,
) -> Check {
    check(id, anchor, params, move |ctx| {
        let f = build()?;
        if let Some(c) = class {
            let got = length_class(&f);
            if got != c {
                return Ok(Some(format!("length class {got:?}, expected {c:?}")));
            }
        }
        let r = verify_morphism_with(&f, &ctx.oracle)?;
        ensure(r.ok, || format!("relations {:?} fail (of {})", r.failures, r.checked))
    })
}

fn presentation_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        for t in [ArtinType::A(n), ArtinType::B(n), ArtinType::AffA(n), ArtinType::AffC(n)] {
            out.push(check(
                format!("presentation/{t}"),
                "one alternating relation of length m_ij per pair with finite label",
                vec![("n", n as i64)],
                move |_| presentation_consistent(t, n * (n - 1) / 2),
            ));
        }
    }
    out.push(check(
        "presentation/I2",
        "a single relation of length m between the two generators",
        vec![],
        |_| {
            for m in DIHEDRAL_RANGE {
                if let Some(w) = presentation_consistent(ArtinType::I2(m), 1)? {
                    return Ok(Some(format!("m = {m}: {w}")));
                }
            }
            Ok(None)
        },
    ));
    out.push(check(
        "presentation/F4",
        "F4 has labels 3, 4, 3 along a path",
        vec![],
        |_| presentation_consistent(ArtinType::F4, 6),
    ));
}

fn presentation_consistent(t: ArtinType, expected: usize) -> Verdict {
    let m = coxeter_matrix(t)?;
    let p = presentation(t)?;
    if p.relations.len() != expected {
        return Ok(Some(format!("{} relations, expected {expected}", p.relations.len())));
    }
    for r in &p.relations {
        let (i, j) = (r.lhs.letters()[0] as usize, r.rhs.letters()[0] as usize);
        let label = match m.get(i, j) {
            Label::Finite(k) => k as usize,
            Label::Infinite => return Ok(Some(format!("relation on infinite pair {i},{j}"))),
        };
        if m.get(i, j) != m.get(j, i) || r.lhs.len() != label || r.rhs.len() != label {
            return Ok(Some(format!("[{}] = [{}] does not match m_{i}{j} = {label}", r.lhs, r.rhs)));
        }
    }
    let reparsed: Word = p.relations[0].lhs.to_string().parse()?;
    ensure(reparsed == p.relations[0].lhs, || "word codec does not round-trip".into())
}

fn oracle_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("oracle/relations/A:{n}"),
            "both sides of every braid relation are equal under both procedures",
            vec![("n", n as i64)],
            move |ctx| {
                let b = ctx.braid(n);
                for r in presentation(ArtinType::A(n))?.relations {
                    if !b.equal_by_action(&r.lhs, &r.rhs)? || !b.equal_by_garside(&r.lhs, &r.rhs)? {
                        return Ok(Some(format!("[{}] vs [{}]", r.lhs, r.rhs)));
                    }
                }
                let (u, v) = (Word::new(vec![1, 2]), Word::new(vec![2, 1]));
                ensure(!b.equal(&u, &v)?, || "s1 s2 = s2 s1 reported".into())
            },
        ));
        out.push(check(
            format!("oracle/agreement/A:{n}"),
            "the free group action and the Garside normal form decide the same equalities",
            vec![("n", n as i64), ("pairs", AGREEMENT_PAIRS_PER_RANK as i64)],
            move |ctx| {
                let b = ctx.braid(n);
                let mut rng = ctx.rng(&format!("agreement/{n}"));
                for _ in 0..AGREEMENT_PAIRS_PER_RANK {
                    let u = random_word(&mut rng, n, ctx.word_length);
                    let planted = rng.random_bool(0.5);
                    let v = if planted {
                        disguise(&mut rng, n, &u)?
                    } else {
                        random_word(&mut rng, n, ctx.word_length)
                    };
                    let by_action = b.equal_by_action(&u, &v)?;
                    let by_garside = b.equal_by_garside(&u, &v)?;
                    if by_action != by_garside || (planted && !by_action) {
                        return Ok(Some(format!(
                            "[{u}] vs [{v}]: action {by_action}, garside {by_garside}"
                        )));
                    }
                }
                Ok(None)
            },
        ));
    }
    out.push(check(
        "oracle/I2",
        "the dihedral normal form respects the relation and separates a from b",
        vec![],
        |ctx| {
            for m in DIHEDRAL_RANGE {
                let o = ctx.oracle(GroupRef::Artin(ArtinType::I2(m)))?;
                let r = &presentation(ArtinType::I2(m))?.relations[0];
                if !o.equal(&r.lhs, &r.rhs)? || o.equal(&Word::generator(1), &Word::generator(2))? {
                    return Ok(Some(format!("m = {m}")));
                }
            }
            Ok(None)
        },
    ));
}

fn center_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("center/full_twist/A:{n}"),
            "the full twist (s1...sn)^(n+1) is central of length n(n+1)",
            vec![("n", n as i64)],
            move |ctx| {
                let z = full_twist(n);
                let c = center_data(ArtinType::A(n))?.expect("finite type");
                let len = (n * (n + 1)) as i64;
                ensure(
                    ctx.braid(n).is_central(&z)? && c.d == len && c.zeta == z && c.ab_image == AbImage::Rank1(len),
                    || format!("ζ = [{}], d = {}", c.zeta, c.d),
                )
            },
        ));
        out.push(check(
            format!("center/zeta_central/B:{n}"),
            "δ^n is central in A(B_n), checked through the embedding in the braid group",
            vec![("n", n as i64)],
            move |ctx| {
                let c = center_data(ArtinType::B(n))?.expect("finite type");
                let image = apply(&catalog::embed_b_in_a(n)?, &c.zeta)?;
                ensure(ctx.braid(n).is_central(&image)?, || format!("[{image}] is not central"))
            },
        ));
        out.push(check(
            format!("center/abelian/B:{n}"),
            "ζ = δ^n has abelianized image (n(n-1), n)",
            vec![("n", n as i64)],
            move |_| {
                let c = center_data(ArtinType::B(n))?.expect("finite type");
                let n = n as i64;
                let want = AbImage::Rank2(n * (n - 1), n);
                ensure(c.ab_image == want && c.d == n * n, || format!("{} with d = {}", c.ab_image, c.d))
            },
        ));
    }
    for m in DIHEDRAL_RANGE {
        let anchor = if m % 2 == 0 {
            "(ab)^(m/2) is central with abelianized image (m/2, m/2)".to_string()
        } else {
            "(ab)^m = Δ² is central; for odd m this choice of ζ follows Brieskorn-Saito".to_string()
        };
        out.push(check(format!("center/I2:{m}"), anchor, vec![("m", m as i64)], move |ctx| {
            let t = ArtinType::I2(m);
            let c = center_data(t)?.expect("finite type");
            let o = ctx.oracle(GroupRef::Artin(t))?;
            let h = m as i64 / 2;
            let ab_ok = if m % 2 == 0 {
                c.ab_image == AbImage::Rank2(h, h) && c.d == m as i64
            } else {
                c.ab_image == AbImage::Rank1(2 * m as i64) && c.note.is_some()
            };
            ensure(ab_ok && o.is_central(&c.zeta)?, || format!("ζ = [{}], {}", c.zeta, c.ab_image))
        }));
    }
    out.push(check(
        "center/F4",
        "ζ = (s1 s2 s3 s4)^6 has length 24 and abelianized image (12, 12)",
        vec![],
        |_| {
            let c = center_data(ArtinType::F4)?.expect("finite type");
            ensure(c.d == 24 && c.ab_image == AbImage::Rank2(12, 12), || c.ab_image.to_string())
        },
    ));
}

fn catalog_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        for &(name, _) in CATALOG.iter().filter(|(name, _)| !name.ends_with("_I2")) {
            let class = if name.starts_with("epsilon") {
                Some(LengthClass::Reversing)
            } else if name.starts_with("identity") {
                Some(LengthClass::Preserving)
            } else {
                None
            };
            out.push(verify_check(
                format!("catalog/{name}[{n}]"),
                format!("{name} respects every defining relation"),
                vec![("n", n as i64)],
                move || catalog::catalog(name, n as u32),
                class,
            ));
        }
    }
    for m in DIHEDRAL_RANGE {
        out.push(verify_check(
            format!("catalog/epsilon_I2[{m}]"),
            "inversion of the generators is a length-reversing automorphism",
            vec![("m", m as i64)],
            move || catalog::epsilon(ArtinType::I2(m)),
            Some(LengthClass::Reversing),
        ));
        out.push(verify_check(
            format!("catalog/gamma_I2[{m}]"),
            "swapping a and b is an automorphism",
            vec![("m", m as i64)],
            move || catalog::gamma_i2(m),
            Some(LengthClass::Preserving),
        ));
        if m % 2 == 0 {
            out.push(verify_check(
                format!("catalog/eta_I2[{m}]"),
                "a ↦ aba, b ↦ a⁻¹ is an automorphism for even m",
                vec![("m", m as i64)],
                move || catalog::eta_i2(m),
                None,
            ));
        }
    }
    out.push(verify_check(
        "catalog/T0_I2[4]",
        "a ↦ a, b ↦ (aba)⁻¹ is an automorphism of A(I2(4))",
        vec![("m", 4)],
        || catalog::t0_i2(4),
        None,
    ));
    out.push(check(
        "catalog/T0_identity",
        "T0 = ε∘η∘γ on A(I2(4))",
        vec![("m", 4)],
        |ctx| {
            let t = ArtinType::I2(4);
            let composite = compose(&compose(&catalog::gamma_i2(4)?, &catalog::eta_i2(4)?)?, &catalog::epsilon(t)?)?;
            let o = ctx.oracle(GroupRef::Artin(t))?;
            images_equal(o.as_ref(), &composite, &catalog::t0_i2(4)?.images)
        },
    ));
}

fn tau_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("tau/involution/B:{n}"),
            "τ∘τ is the identity on generators",
            vec![("n", n as i64)],
            move |ctx| {
                let tau = catalog::tau_b(n)?;
                let o = ctx.oracle(GroupRef::Artin(ArtinType::B(n)))?;
                images_equal(o.as_ref(), &compose(&tau, &tau)?, &generators(n))
            },
        ));
    }
}

fn affine_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("affine/rotation/B:{n}"),
            "conjugation by δ sends t_i to t_(i+1), indices mod n",
            vec![("n", n as i64)],
            move |ctx| {
                let f = catalog::affa_in_b(n)?;
                let o = ctx.oracle(GroupRef::Artin(ArtinType::B(n)))?;
                let d = catalog::delta(n);
                for i in 0..n {
                    let conj = d.concat(&f.images[i]).concat(&d.inverse());
                    if !o.equal(&conj, &f.images[(i + 1) % n])? {
                        return Ok(Some(format!("δ t_{} δ⁻¹ ≠ t_{}", i + 1, (i + 1) % n + 1)));
                    }
                }
                Ok(None)
            },
        ));
        out.push(check(
            format!("affine/kernel/B:{n}"),
            "the angular projection kills every t_i and sends δ to 1",
            vec![("n", n as i64)],
            move |_| {
                let p = catalog::angular_projection(n)?;
                let f = catalog::affa_in_b(n)?;
                for (i, t) in f.images.iter().enumerate() {
                    let v = apply(&p, t)?.exponent_sum();
                    if v != 0 {
                        return Ok(Some(format!("p(t_{}) = {v}", i + 1)));
                    }
                }
                let v = apply(&p, &catalog::delta(n))?.exponent_sum();
                ensure(v == 1, || format!("p(δ) = {v}"))
            },
        ));
    }
}

fn zeta_b_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("center/zeta_is_full_twist/B:{n}"),
            "δ^n in A(B_n) maps to the full twist of the braid group",
            vec![("n", n as i64)],
            move |ctx| {
                let image = apply(&catalog::embed_b_in_a(n)?, &catalog::delta(n).pow(n as i64))?;
                ensure(ctx.braid(n).equal(&image, &full_twist(n))?, || format!("[{image}]"))
            },
        ));
    }
}

fn transvection_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("transvection/k/B:{n}"),
            "T_(p,q)(ζ) = ζ^k with k = 1 + (p(n-1) + q)n; automorphism iff k = ±1",
            vec![("n", n as i64)],
            move |_| {
                let b = n as i64;
                for p in -2..=2 {
                    for q in -2..=2 {
                        let t = Transvection::pair(ArtinType::B(n), p, q)?;
                        let k = zeta_exponent(&t)?;
                        if k != 1 + (p * (b - 1) + q) * b || is_automorphism(&t)? != (k.abs() == 1) {
                            return Ok(Some(format!("(p, q) = ({p}, {q}): k = {k}")));
                        }
                    }
                }
                Ok(None)
            },
        ));
        out.push(check(
            format!("transvection/structure/rank{n}"),
            "Tv is infinite cyclic for B_n and trivial for A_n and the affine types",
            vec![("n", n as i64)],
            move |_| {
                let b = tv_structure(ArtinType::B(n))?;
                let want = TvStructure::Cyclic {
                    generator: TvParam::Pair(1, -(n as i64 - 1)),
                };
                let trivial = [ArtinType::A(n), ArtinType::AffA(n), ArtinType::AffC(n)]
                    .into_iter()
                    .map(tv_structure)
                    .collect::<Result<Vec<_>>>()?;
                ensure(b == want && trivial.iter().all(|s| *s == TvStructure::Trivial), || format!("B: {b}, others: {trivial:?}"))
            },
        ));
        out.push(check(
            format!("transvection/generator/B:{n}"),
            "the generating transvection is an automorphism commuting with ε",
            vec![("n", n as i64)],
            move |ctx| {
                let t = Transvection::pair(ArtinType::B(n), 1, -(n as i64 - 1))?;
                let inv = Transvection::pair(ArtinType::B(n), -1, n as i64 - 1)?;
                if tv_compose(&t, &inv)?.param() != TvParam::Pair(0, 0) {
                    return Ok(Some("T∘T⁻¹ is not T_0".into()));
                }
                let f = tv_morphism(&t)?;
                let r = verify_morphism_with(&f, &ctx.oracle)?;
                if !r.ok {
                    return Ok(Some(format!("relations {:?} fail", r.failures)));
                }
                let e = catalog::epsilon(ArtinType::B(n))?;
                let o = ctx.oracle(GroupRef::Artin(ArtinType::B(n)))?;
                images_equal(o.as_ref(), &compose(&f, &e)?, &compose(&e, &f)?.images)
            },
        ));
    }
    out.push(check(
        "transvection/I2",
        "Tv is D_∞ for I2(4), infinite cyclic for even m ≥ 6 with k = 1 + (p+q)m/2, trivial for odd m",
        vec![],
        |ctx| {
            for m in DIHEDRAL_RANGE {
                let t = ArtinType::I2(m);
                let s = tv_structure(t)?;
                let ok = match m {
                    4 => matches!(s, TvStructure::InfiniteDihedral { .. }),
                    _ if m % 2 == 0 => s == TvStructure::Cyclic { generator: TvParam::Pair(1, -1) },
                    _ => s == TvStructure::Trivial,
                };
                if !ok {
                    return Ok(Some(format!("m = {m}: {s}")));
                }
                if m % 2 == 0 {
                    let h = m as i64 / 2;
                    for (p, q) in [(1, -1), (0, -1), (2, 3), (-1, 0)] {
                        let k = zeta_exponent(&Transvection::pair(t, p, q)?)?;
                        if k != 1 + (p + q) * h {
                            return Ok(Some(format!("m = {m}, (p, q) = ({p}, {q}): k = {k}")));
                        }
                    }
                }
            }
            // The reflection (0, -1) of I2(4) is T0 itself.
            let f = tv_morphism(&Transvection::pair(ArtinType::I2(4), 0, -1)?)?;
            let o = ctx.oracle(GroupRef::Artin(ArtinType::I2(4)))?;
            images_equal(o.as_ref(), &f, &catalog::t0_i2(4)?.images)
        },
    ));
    out.push(check(
        "transvection/F4",
        "Tv(F4) is infinite cyclic, generated by (1, -1), with k = 1 + 12(p + q)",
        vec![],
        |_| {
            let s = tv_structure(ArtinType::F4)?;
            for (p, q) in [(1, -1), (1, 0), (-2, 5)] {
                let k = zeta_exponent(&Transvection::pair(ArtinType::F4, p, q)?)?;
                if k != 1 + 12 * (p + q) {
                    return Ok(Some(format!("(p, q) = ({p}, {q}): k = {k}")));
                }
            }
            ensure(s == TvStructure::Cyclic { generator: TvParam::Pair(1, -1) }, || s.to_string())
        },
    ));
}

fn comm_checks(out: &mut Vec<Check>) {
    for d in COMM_MODULI {
        out.push(check(
            format!("comm/sequence/d{d}"),
            "n_1 = 1 + d, n_(i+1) = 1 + d·n_1⋯n_i are ≡ 1 mod d and pairwise coprime",
            vec![("d", d), ("count", 6)],
            move |_| {
                let s = comm_sequence(d, 6)?;
                ensure(s[0] == (1 + d).into() && sequence_is_coprime_and_unit(d, &s), || {
                    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                })
            },
        ));
    }
    out.push(check(
        "comm/composition",
        "T_(md+1)∘T_(kd+1) = T_((md+1)(kd+1)) for m, k in 1..=10",
        vec![],
        |_| {
            for d in COMM_MODULI {
                for m in 1..=10 {
                    for k in 1..=10 {
                        if !comm_compose_check(d, m, k) {
                            return Ok(Some(format!("d = {d}, m = {m}, k = {k}")));
                        }
                    }
                }
            }
            Ok(None)
        },
    ));
}

fn lift_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        for t in [ArtinType::A(n), ArtinType::B(n)] {
            out.push(check(
                format!("lift/{t}"),
                "identity and ε are recovered from images known only modulo the centre",
                vec![("n", n as i64)],
                move |ctx| lift_round_trip(ctx, t),
            ));
        }
    }
}

fn lift_round_trip(ctx: &Ctx, t: ArtinType) -> Verdict {
    let n = t.rank();
    let o = ctx.oracle(GroupRef::Artin(t))?;
    let shifts: Vec<i64> = (0..n as i64).map(|i| i % 3 - 1).collect();
    let gens = generators(n);
    let inverses: Vec<Word> = gens.iter().map(Word::inverse).collect();
    for (sense, base) in [(1, &gens), (-1, &inverses)] {
        let lifted = lift_mod_center(t, &shift_by_center(t, base, &shifts)?, sense)?;
        if let Some(w) = images_equal(o.as_ref(), &lifted, base)? {
            return Ok(Some(format!("sense {sense}: {w}")));
        }
    }
    let mut bad = gens.clone();
    bad[0] = Word::new(vec![1, 2]);
    ensure(
        matches!(lift_mod_center(t, &bad, 1), Err(ArtinError::NotLiftable { index: 1, .. })),
        || "a length-2 image was lifted".into(),
    )
}

fn table_checks(ranks: &[usize], out: &mut Vec<Check>) {
    for &n in ranks {
        out.push(check(
            format!("tables/rank{n}"),
            "indices 2(n+2), 2(n+1)(n+2), 2n(n+1)(n+2); affine C splits unless n ≡ 2 mod 3",
            vec![("n", n as i64)],
            move |_| {
                let rows = reference_tables(&[n], &[]);
                let k = n as u64;
                let want = [2 * (k + 2), 2 * (k + 1) * (k + 2), 2 * k * (k + 1) * (k + 2), 2 * k * (k + 1) * (k + 2)];
                let groups = [ArtinType::A(n), ArtinType::B(n), ArtinType::AffC(n), ArtinType::AffA(n)];
                for (g, w) in groups.iter().zip(want) {
                    let row = rows.iter().find(|r| r.group == *g).expect("family row");
                    if row.index != Some(w) || row.comm.as_deref() != Some(format!("Mod(S_{})", n + 2).as_str()) {
                        return Ok(Some(format!("{g}: index {:?}", row.index)));
                    }
                }
                let c = rows.iter().find(|r| r.group == ArtinType::AffC(n)).expect("family row");
                ensure(c.inner_sequence_splits == Some(n % 3 != 2), || format!("splitting flag {:?}", c.inner_sequence_splits))
            },
        ));
    }
    out.push(check(
        "tables/I2_F4",
        "Out is C_2 for odd m, D_∞×C_2 for even m; the F4 index is left open",
        vec![],
        |_| {
            let ms: Vec<u32> = DIHEDRAL_RANGE.collect();
            let rows = reference_tables(&[], &ms);
            for r in &rows {
                let ok = match r.group {
                    ArtinType::I2(m) if m % 2 == 1 => r.out == "C_2" && r.transvections == "trivial",
                    ArtinType::I2(4) => r.out == "D_∞×C_2" && r.transvections == "D_∞",
                    ArtinType::I2(_) => r.out == "D_∞×C_2" && r.transvections == "Z",
                    ArtinType::F4 => r.out == "unknown" && r.index.is_none(),
                    _ => false,
                };
                if !ok {
                    return Ok(Some(format!("{}: {}", r.group, r.out)));
                }
            }
            Ok(None)
        },
    ));
}

fn plan(ranks: &[usize]) -> Vec<Check> {
    let mut out = Vec::new();
    presentation_checks(ranks, &mut out);
    oracle_checks(ranks, &mut out);
    center_checks(ranks, &mut out);
    catalog_checks(ranks, &mut out);
    tau_checks(ranks, &mut out);
    affine_checks(ranks, &mut out);
    zeta_b_checks(ranks, &mut out);
    transvection_checks(ranks, &mut out);
    lift_checks(ranks, &mut out);
    comm_checks(&mut out);
    table_checks(ranks, &mut out);
    out
}

fn execute(c: &Check, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let (status, witness) = match (c.run)(ctx) {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) if e.is_budget() => (Status::Skipped, Some(format!("budget exceeded: {e}"))),
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
    };
    CheckResult {
        id: c.id.clone(),
        anchor: c.anchor.clone(),
        params: c.params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        status,
        witness,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs every check. Checks run on a thread pool; results keep the declared
/// order.
pub fn run_report(config: &ReportConfig) -> Result<Report> {
    if config.ranks.is_empty() {
        return Err(ArtinError::OutOfRange("no ranks requested".into()));
    }
    if let Some(&n) = config.ranks.iter().find(|&&n| !(MIN_RANK..=MAX_RANK).contains(&n)) {
        return Err(ArtinError::OutOfRange(format!(
            "rank {n} outside {MIN_RANK}..={MAX_RANK}"
        )));
    }
    let ctx = Ctx {
        seed: config.seed,
        word_length: config.budgets.word_length,
        oracle: OracleConfig {
            letter_budget: config.budgets.letter_budget,
            garside_threshold: config.budgets.garside_threshold,
        },
    };
    let checks = plan(&config.ranks);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; checks.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(checks.len());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(c) = checks.get(i) else { break };
                let r = execute(c, &ctx);
                slots.lock().expect("no panics while holding the lock")[i] = Some(r);
            });
        }
    });
    let checks: Vec<CheckResult> = slots
        .into_inner()
        .expect("workers joined")
        .into_iter()
        .map(|r| r.expect("every check ran"))
        .collect();
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        checks,
        summary,
    })
}
