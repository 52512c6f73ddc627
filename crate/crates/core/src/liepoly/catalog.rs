//! The identity catalog: every reordering, expansion, and bracket identity
//! the kernel certifies, as data.
//!
//! Each entry names its parameters with default bounds and supplies one or
//! more *readings* — builders producing both sides as raw elements of the
//! free algebra. A case holds when some reading's sides share an R-normal
//! form; an entry holds when a single reading validates every case in its
//! parameter box. Entries with more than one reading exist where the source
//! formulas admit two plausible transcriptions; the verdict records which
//! one validates instead of silently correcting anything.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use thiserror::Error;

use crate::exactnum::{qbin, qnum, qnum_base, QRat};
use crate::freealg::{Letter, NcPoly, Sign, Word};
use crate::rewrite::CanonicalElement;
use crate::rqalg::{presentation, Presentation};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("missing parameter {0}")]
    MissingParam(&'static str),
    #[error("parameters violate the identity's hypothesis")]
    Hypothesis,
}

/// A named nonnegative integer parameter with inclusive default bounds.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: u32,
    pub hi: u32,
}

/// Parameter valuation for one identity instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<&'static str, u32>);

impl Params {
    pub fn get(&self, name: &str) -> u32 {
        *self
            .0
            .get(name)
            .unwrap_or_else(|| panic!("missing parameter {name}"))
    }

    /// Same value widened for exponent arithmetic.
    pub fn geti(&self, name: &str) -> i64 {
        self.get(name) as i64
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'static str, u32)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }
}

type Builder = fn(&Params) -> (NcPoly<QRat>, NcPoly<QRat>);

/// One transcription of an identity: builders for both raw sides.
#[derive(Clone)]
pub struct Reading {
    pub label: &'static str,
    pub build: Builder,
}

/// A catalog entry.
#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: Vec<ParamSpec>,
    pub hypothesis: Option<fn(&Params) -> bool>,
    pub readings: Vec<Reading>,
}

impl Identity {
    /// Every parameter valuation in the (possibly rescaled) box that
    /// satisfies the hypothesis.
    pub fn instances(&self, scale: f64) -> Vec<Params> {
        let mut out = vec![Params::default()];
        for spec in &self.params {
            let hi = ((spec.hi as f64) * scale).round().max(spec.lo as f64) as u32;
            let mut next = Vec::with_capacity(out.len() * (hi - spec.lo + 1) as usize);
            for base in &out {
                for v in spec.lo..=hi {
                    let mut p = base.clone();
                    p.0.insert(spec.name, v);
                    next.push(p);
                }
            }
            out = next;
        }
        match self.hypothesis {
            Some(h) => out.into_iter().filter(h).collect(),
            None => out,
        }
    }
}

/// Check result for a single instance.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: String,
    pub params: Vec<(&'static str, u32)>,
    pub holds: bool,
    /// Label of the reading that validated, when one did.
    pub reading: Option<&'static str>,
    pub lhs_normal: CanonicalElement<QRat>,
    pub rhs_normal: CanonicalElement<QRat>,
}

/// Aggregate result for one entry over its whole parameter box.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub id: &'static str,
    pub summary: &'static str,
    pub cases: usize,
    pub passed: bool,
    /// The first reading validating every case, when the entry passed.
    pub reading: Option<&'static str>,
    pub reading_index: usize,
    /// Parameter valuations of the first few failing cases.
    pub failures: Vec<String>,
}

fn letter(l: Letter) -> NcPoly<QRat> {
    NcPoly::from_letter(l)
}

fn lw(powers: &[(Letter, u32)]) -> NcPoly<QRat> {
    NcPoly::from_word(Word::from_powers(powers))
}

fn sc(c: QRat) -> NcPoly<QRat> {
    NcPoly::from_scalar(c)
}

fn qp(e: i64) -> QRat {
    QRat::q_pow(e)
}

/// `1 - q^e`.
fn one_minus_qe(e: i64) -> QRat {
    &QRat::from_int(1) - &qp(e)
}

fn one_mq_pow(e: u32) -> QRat {
    QRat::one_minus_q().pow(e)
}

/// Binomial coefficient `C(k, 2)` as a q-exponent.
fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `(-1)^i c`.
fn alt(i: i64, c: QRat) -> QRat {
    if i % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `β(h, n)` built from its defining combination.
fn beta(h: u32, n: u32) -> NcPoly<QRat> {
    let mut p = lw(&[(Letter::Gamma, h), (Letter::C, n + 1)]).scale(&qnum(n as i64 + 1));
    p = &p - &lw(&[(Letter::Gamma, h + 1), (Letter::C, n)]).scale(&qnum(n as i64));
    p
}

fn eq15(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::A, n), (Letter::B, 1)]);
    let mut rhs = lw(&[(Letter::B, 1), (Letter::A, n)]).scale(&qp(n as i64));
    if n >= 1 {
        rhs = &rhs + &lw(&[(Letter::Gamma, 1), (Letter::A, n - 1)]).scale(&qnum(n as i64));
    }
    (lhs, rhs)
}

fn eq16(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::A, 1), (Letter::B, n)]);
    let mut rhs = lw(&[(Letter::B, n), (Letter::A, 1)]).scale(&qp(n as i64));
    if n >= 1 {
        rhs = &rhs + &lw(&[(Letter::Gamma, 1), (Letter::B, n - 1)]).scale(&qnum(n as i64));
    }
    (lhs, rhs)
}

fn eq17(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let mut factor = lw(&[(Letter::B, 1), (Letter::A, 1)]).scale(&qp(n as i64 + 1));
    factor = &factor + &letter(Letter::Gamma).scale(&qnum(n as i64 + 1));
    let lhs = lw(&[(Letter::A, n), (Letter::B, n)]).multiply(&factor);
    let rhs = lw(&[(Letter::A, n + 1), (Letter::B, n + 1)]);
    (lhs, rhs)
}

fn eq18(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let mut factor = lw(&[(Letter::B, 1), (Letter::A, 1)]);
    factor = &factor - &letter(Letter::Gamma).scale(&qnum(n as i64));
    let lhs = lw(&[(Letter::B, n), (Letter::A, n)]).multiply(&factor);
    let rhs = lw(&[(Letter::B, n + 1), (Letter::A, n + 1)]).scale(&qp(n as i64));
    (lhs, rhs)
}

fn eq20(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::A, n), (Letter::B, n)]);
    let mut rhs = NcPoly::one();
    for i in 1..=n as i64 {
        let mut f = lw(&[(Letter::B, 1), (Letter::A, 1)]).scale(&qp(i));
        f = &f + &letter(Letter::Gamma).scale(&qnum(i));
        rhs = rhs.multiply(&f);
    }
    (lhs, rhs)
}

fn eq21(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::B, n), (Letter::A, n)]).scale(&qp(binom2(n as i64)));
    let mut rhs = NcPoly::one();
    for j in 0..n as i64 {
        let mut f = lw(&[(Letter::B, 1), (Letter::A, 1)]);
        f = &f - &letter(Letter::Gamma).scale(&qnum(j));
        rhs = rhs.multiply(&f);
    }
    (lhs, rhs)
}

/// `[A, B]` spelled with raw letters; the presentations must glue it to C.
fn c_raw() -> NcPoly<QRat> {
    letter(Letter::A).lie_bracket(&letter(Letter::B))
}

fn eq23(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let c = c_raw();
    (
        letter(Letter::A).multiply(&c),
        c.multiply(&letter(Letter::A)).scale(&qp(1)),
    )
}

fn eq24(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let c = c_raw();
    (
        c.multiply(&letter(Letter::B)),
        letter(Letter::B).multiply(&c).scale(&qp(1)),
    )
}

fn eq25(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let k = p.get("k");
    let c = c_raw();
    (
        lw(&[(Letter::A, k)]).multiply(&c),
        c.multiply(&lw(&[(Letter::A, k)])).scale(&qp(k as i64)),
    )
}

fn eq26(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let k = p.get("k");
    let c = c_raw();
    (
        c.multiply(&lw(&[(Letter::B, k)])),
        lw(&[(Letter::B, k)]).multiply(&c).scale(&qp(k as i64)),
    )
}

fn eq27(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (k, n) = (p.get("k"), p.get("n"));
    (
        lw(&[(Letter::A, k), (Letter::C, n)]),
        lw(&[(Letter::C, n), (Letter::A, k)]).scale(&qp(k as i64 * n as i64)),
    )
}

fn eq28(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (k, n) = (p.get("k"), p.get("n"));
    (
        lw(&[(Letter::C, n), (Letter::B, k)]),
        lw(&[(Letter::B, k), (Letter::C, n)]).scale(&qp(k as i64 * n as i64)),
    )
}

fn eq29(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    (
        lw(&[(Letter::A, 1), (Letter::B, 1)]),
        &letter(Letter::C) + &lw(&[(Letter::B, 1), (Letter::A, 1)]),
    )
}

fn eq30(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    (
        lw(&[(Letter::B, 1), (Letter::A, 1)]).scale(&QRat::one_minus_q()),
        &letter(Letter::Gamma) - &letter(Letter::C),
    )
}

fn eq31(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::A, n), (Letter::B, n)]).scale(&one_mq_pow(n));
    let mut rhs = NcPoly::one();
    for i in 1..=n as i64 {
        let f = &letter(Letter::Gamma) - &letter(Letter::C).scale(&qp(i));
        rhs = rhs.multiply(&f);
    }
    (lhs, rhs)
}

fn eq32(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::B, n), (Letter::A, n)])
        .scale(&(&qp(binom2(n as i64)) * &one_mq_pow(n)));
    let mut rhs = NcPoly::one();
    for j in 0..n as i64 {
        let f = &letter(Letter::Gamma).scale(&qp(j)) - &letter(Letter::C);
        rhs = rhs.multiply(&f);
    }
    (lhs, rhs)
}

fn eq33(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::A, n), (Letter::B, n)]).scale(&one_mq_pow(n));
    let mut rhs = NcPoly::zero();
    for i in 0..=n {
        let c = alt(
            i as i64,
            &qp(binom2(i as i64 + 1)) * &qbin(n as i64, i as i64),
        );
        rhs = &rhs + &lw(&[(Letter::Gamma, n - i), (Letter::C, i)]).scale(&c);
    }
    (lhs, rhs)
}

fn eq34(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let lhs = lw(&[(Letter::B, n), (Letter::A, n)])
        .scale(&(&qp(binom2(n as i64)) * &one_mq_pow(n)));
    let mut rhs = NcPoly::zero();
    for i in 0..=n {
        let c = alt(
            i as i64,
            &qp(binom2(n as i64 - i as i64)) * &qbin(n as i64, i as i64),
        );
        rhs = &rhs + &lw(&[(Letter::Gamma, n - i), (Letter::C, i)]).scale(&c);
    }
    (lhs, rhs)
}

fn eq56(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    (
        letter(Letter::A).ad_power(Sign::Minus, n, &letter(Letter::C)),
        lw(&[(Letter::C, 1), (Letter::A, n)]).scale(&one_mq_pow(n)),
    )
}

fn eq57(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    (
        letter(Letter::B).ad_power(Sign::Plus, n, &letter(Letter::C)),
        lw(&[(Letter::B, n), (Letter::C, 1)]).scale(&one_mq_pow(n)),
    )
}

fn eq58(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    (
        letter(Letter::C).ad_power(Sign::Minus, n, &letter(Letter::B)),
        lw(&[(Letter::B, 1), (Letter::C, n)]).scale(&one_mq_pow(n)),
    )
}

fn eq59(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    (
        letter(Letter::C).ad_power(Sign::Plus, n, &letter(Letter::A)),
        lw(&[(Letter::C, n), (Letter::A, 1)]).scale(&one_mq_pow(n)),
    )
}

fn eq60(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n) = (p.get("m"), p.get("n"));
    (
        letter(Letter::C).ad_power(Sign::Plus, m, &lw(&[(Letter::C, 1), (Letter::A, n)])),
        lw(&[(Letter::C, m + 1), (Letter::A, n)]).scale(&one_minus_qe(n as i64).pow(m)),
    )
}

fn eq61(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n) = (p.get("m"), p.get("n"));
    (
        letter(Letter::C).ad_power(Sign::Minus, m, &lw(&[(Letter::B, n), (Letter::C, 1)])),
        lw(&[(Letter::B, n), (Letter::C, m + 1)]).scale(&one_minus_qe(n as i64).pow(m)),
    )
}

fn eq63(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let n = p.get("n");
    let inner = letter(Letter::C).ad_power(Sign::Plus, n, &letter(Letter::A));
    let lhs = letter(Letter::B).lie_bracket(&inner).scale(&qp(n as i64));
    let rhs = &lw(&[(Letter::Gamma, 1), (Letter::C, n)])
        .scale(&(&one_mq_pow(n) * &qnum(n as i64)))
        - &lw(&[(Letter::C, n + 1)]).scale(&(&one_mq_pow(n) * &qnum(n as i64 + 1)));
    (lhs, rhs)
}

fn eq5_16(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n) = (p.get("m"), p.get("n"));
    let inner = letter(Letter::C).ad_power(Sign::Plus, n, &letter(Letter::A));
    let mid = letter(Letter::B).lie_bracket(&inner);
    let lhs = letter(Letter::A)
        .ad_power(Sign::Minus, m, &mid)
        .scale(&qp(n as i64));
    let scale = one_mq_pow(n + m);
    let rhs = &lw(&[(Letter::Gamma, 1), (Letter::C, n), (Letter::A, m)])
        .scale(&(&scale * &qnum(n as i64).pow(m + 1)))
        - &lw(&[(Letter::C, n + 1), (Letter::A, m)])
            .scale(&(&scale * &qnum(n as i64 + 1).pow(m + 1)));
    (lhs, rhs)
}

fn eq5_17(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n) = (p.get("m"), p.get("n"));
    let inner = letter(Letter::C).ad_power(Sign::Plus, n, &letter(Letter::A));
    let mid = letter(Letter::B).lie_bracket(&inner);
    let lhs = letter(Letter::B)
        .ad_power(Sign::Minus, m, &mid)
        .scale(&qp(n as i64));
    let scale = one_mq_pow(n + m);
    let rhs = &lw(&[(Letter::B, m), (Letter::C, n + 1)])
        .scale(&(&scale * &qnum(n as i64 + 1).pow(m + 1)))
        - &lw(&[(Letter::Gamma, 1), (Letter::B, m), (Letter::C, n)])
            .scale(&(&scale * &qnum(n as i64).pow(m + 1)));
    (lhs, rhs)
}

fn prop5_8a(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n, m, l) = (p.get("h"), p.get("n"), p.get("m"), p.get("l"));
    let lhs = lw(&[
        (Letter::Gamma, h),
        (Letter::C, n),
        (Letter::A, m),
        (Letter::B, l),
    ])
    .scale(&one_mq_pow(m));
    let mut rhs = NcPoly::zero();
    for i in 0..=m {
        let exp = binom2(i as i64 + 1) + (l as i64 - m as i64) * (n as i64 + i as i64);
        let c = alt(i as i64, &qp(exp) * &qbin(m as i64, i as i64));
        rhs = &rhs
            + &lw(&[
                (Letter::Gamma, h + m - i),
                (Letter::B, l - m),
                (Letter::C, n + i),
            ])
            .scale(&c);
    }
    (lhs, rhs)
}

fn prop5_8b(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n, m, l) = (p.get("h"), p.get("n"), p.get("m"), p.get("l"));
    let lhs = lw(&[
        (Letter::Gamma, h),
        (Letter::C, n),
        (Letter::A, m),
        (Letter::B, l),
    ])
    .scale(&one_mq_pow(l));
    let mut rhs = NcPoly::zero();
    for i in 0..=l {
        let exp = binom2(i as i64 + 1) + i as i64 * (m as i64 - l as i64);
        let c = alt(i as i64, &qp(exp) * &qbin(l as i64, i as i64));
        rhs = &rhs
            + &lw(&[
                (Letter::Gamma, h + l - i),
                (Letter::C, n + i),
                (Letter::A, m - l),
            ])
            .scale(&c);
    }
    (lhs, rhs)
}

/// The common left-hand side of the weight-balanced bracket theorem:
/// `(1-q)^(m-1) q^C(m,2) q^(m(n+h)) [γ^k B^m C^n, γ^j C^h A^m]`.
fn balanced_bracket_lhs(p: &Params) -> NcPoly<QRat> {
    let (m, n, h, j, k) = (
        p.get("m"),
        p.get("n"),
        p.get("h"),
        p.get("j"),
        p.get("k"),
    );
    let left = lw(&[(Letter::Gamma, k), (Letter::B, m), (Letter::C, n)]);
    let right = lw(&[(Letter::Gamma, j), (Letter::C, h), (Letter::A, m)]);
    let scale = &(&one_mq_pow(m - 1) * &qp(binom2(m as i64)))
        * &qp(m as i64 * (n as i64 + h as i64));
    left.lie_bracket(&right).scale(&scale)
}

fn thm5_10(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n, h, j, k) = (
        p.geti("m"),
        p.geti("n"),
        p.geti("h"),
        p.get("j"),
        p.get("k"),
    );
    let lhs = balanced_bracket_lhs(p);
    let mut rhs = NcPoly::zero();
    for i in 0..=m {
        let c = alt(
            i,
            &(&qp(binom2(m - i)) * &qnum(m * n + m * h + i * m)) * &qbin(m, i),
        );
        rhs = &rhs
            + &lw(&[
                (Letter::Gamma, (m - i) as u32 + j + k),
                (Letter::C, (i + h + n) as u32),
            ])
            .scale(&c);
    }
    (lhs, rhs)
}

fn prop5_11(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, r, n, h) = (p.geti("m"), p.geti("r"), p.geti("n"), p.geti("h"));
    let mut sum = QRat::from_int(0);
    for i in 0..=m {
        let c = alt(
            i,
            &(&qp(binom2(m - i)) * &qp((n + h + i) * r)) * &qbin(m, i),
        );
        sum = &sum + &c;
    }
    (sc(sum), NcPoly::zero())
}

/// Theorem statement as printed: `ψ_t` with the fixed `γ^(j+k)` exponent and
/// inner sums starting at `t = 0`.
fn thm5_12_printed(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n, h, j, k) = (
        p.geti("m"),
        p.geti("n"),
        p.geti("h"),
        p.get("j"),
        p.get("k"),
    );
    let lhs = balanced_bracket_lhs(p);
    let psi = |t: i64| -> NcPoly<QRat> {
        let mut p1 = lw(&[(Letter::Gamma, j + k), (Letter::C, (t + h + n) as u32)])
            .scale(&qnum(t + h + n));
        p1 = &p1
            - &lw(&[
                (Letter::Gamma, 1 + j + k),
                (Letter::C, (t + h + n - 1) as u32),
            ])
            .scale(&qnum(t + h + n - 1));
        p1
    };
    let mut rhs = NcPoly::zero();
    for i in 0..=m {
        let mut inner = NcPoly::zero();
        for t in 0..=i {
            inner = &inner + &psi(t);
        }
        let c = alt(
            i,
            &(&qp(binom2(m - i)) * &qnum_base(m, (n + h + i) as u32)) * &qbin(m, i),
        );
        rhs = &rhs + &inner.scale(&c);
    }
    (lhs, rhs)
}

/// Theorem restated the way its proof uses the telescoping ladder: `ψ_t`
/// carries `γ^(m-t+j+k)` and the inner sums start at `t = 1`.
fn thm5_12_proof(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (m, n, h, j, k) = (
        p.geti("m"),
        p.geti("n"),
        p.geti("h"),
        p.geti("j"),
        p.geti("k"),
    );
    let lhs = balanced_bracket_lhs(p);
    let psi = |t: i64| -> NcPoly<QRat> {
        let mut p1 = lw(&[
            (Letter::Gamma, (m - t + j + k) as u32),
            (Letter::C, (t + h + n) as u32),
        ])
        .scale(&qnum(t + h + n));
        p1 = &p1
            - &lw(&[
                (Letter::Gamma, (m - t + j + k + 1) as u32),
                (Letter::C, (t + h + n - 1) as u32),
            ])
            .scale(&qnum(t + h + n - 1));
        p1
    };
    let mut rhs = NcPoly::zero();
    for i in 1..=m {
        let mut inner = NcPoly::zero();
        for t in 1..=i {
            inner = &inner + &psi(t);
        }
        let c = alt(
            i,
            &(&qp(binom2(m - i)) * &qnum_base(m, (n + h + i) as u32)) * &qbin(m, i),
        );
        rhs = &rhs + &inner.scale(&c);
    }
    (lhs, rhs)
}

fn libra1(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, l, n) = (p.get("h"), p.get("l"), p.get("n"));
    let lhs = lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n)])
        .lie_bracket(&letter(Letter::A))
        .scale(&qp(n as i64));
    let rhs = &lw(&[(Letter::Gamma, h + 1), (Letter::B, l - 1), (Letter::C, n)])
        .scale(&qnum(n as i64))
        - &lw(&[(Letter::Gamma, h), (Letter::B, l - 1), (Letter::C, n + 1)])
            .scale(&qnum(n as i64 + l as i64));
    (lhs, rhs)
}

fn libra2(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, l, n) = (p.get("h"), p.get("l"), p.get("n"));
    let lhs = lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n)])
        .lie_bracket(&letter(Letter::B));
    let rhs = lw(&[(Letter::Gamma, h), (Letter::B, l + 1), (Letter::C, n)])
        .scale(&(-&one_minus_qe(n as i64)));
    (lhs, rhs)
}

fn libra3(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, l, n) = (p.get("h"), p.get("l"), p.get("n"));
    let lhs = lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n)])
        .lie_bracket(&letter(Letter::C));
    let rhs = lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n + 1)])
        .scale(&one_minus_qe(l as i64));
    (lhs, rhs)
}

fn libra4(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n, m, j, k, l) = (
        p.get("h"),
        p.get("n"),
        p.get("m"),
        p.get("j"),
        p.get("k"),
        p.get("l"),
    );
    let lhs = lw(&[(Letter::Gamma, h), (Letter::C, n), (Letter::A, m)]).lie_bracket(&lw(&[
        (Letter::Gamma, j),
        (Letter::C, k),
        (Letter::A, l),
    ]));
    let c = &qp(m as i64 * k as i64) - &qp(l as i64 * n as i64);
    let rhs = lw(&[
        (Letter::Gamma, h + j),
        (Letter::C, n + k),
        (Letter::A, m + l),
    ])
    .scale(&c);
    (lhs, rhs)
}

fn libra5_lhs(p: &Params) -> NcPoly<QRat> {
    let (h, l, n, j, m) = (
        p.get("h"),
        p.get("l"),
        p.get("n"),
        p.get("j"),
        p.get("m"),
    );
    // Second factor reuses h as its C exponent, exactly as the table is typeset.
    lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n)]).lie_bracket(&lw(&[
        (Letter::Gamma, j),
        (Letter::B, m),
        (Letter::C, h),
    ]))
}

fn libra5_word(p: &Params) -> NcPoly<QRat> {
    let (h, l, n, j, m) = (
        p.get("h"),
        p.get("l"),
        p.get("n"),
        p.get("j"),
        p.get("m"),
    );
    lw(&[
        (Letter::Gamma, h + j),
        (Letter::B, l + m),
        (Letter::C, h + n),
    ])
}

fn libra5_printed(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let c = &qp(2 * p.geti("m") * p.geti("n")) - &qp(2 * p.geti("l") * p.geti("h"));
    (libra5_lhs(p), libra5_word(p).scale(&c))
}

fn libra5_corrected(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let c = &qp(p.geti("m") * p.geti("n")) - &qp(p.geti("l") * p.geti("h"));
    (libra5_lhs(p), libra5_word(p).scale(&c))
}

fn libra6(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n, m, j, l, k) = (
        p.get("h"),
        p.get("n"),
        p.get("m"),
        p.get("j"),
        p.get("l"),
        p.get("k"),
    );
    let lhs = lw(&[(Letter::Gamma, h), (Letter::C, n), (Letter::A, m)])
        .lie_bracket(&lw(&[(Letter::Gamma, j), (Letter::B, l), (Letter::C, k)]))
        .scale(&qp(l as i64 * (k as i64 + n as i64)));
    let rhs = &lw(&[
        (Letter::Gamma, h + j),
        (Letter::C, n + k),
        (Letter::A, m),
        (Letter::B, l),
    ])
    .scale(&qp(l as i64 * n as i64 + k as i64 * m as i64))
        - &lw(&[
            (Letter::Gamma, h + j),
            (Letter::C, k + n),
            (Letter::B, l),
            (Letter::A, m),
        ]);
    (lhs, rhs)
}

fn libra7(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n) = (p.get("h"), p.get("n"));
    let lhs = beta(h, n).lie_bracket(&letter(Letter::A));
    let rhs = &lw(&[(Letter::Gamma, h), (Letter::C, n + 1), (Letter::A, 1)])
        .scale(&(&one_minus_qe(n as i64 + 1) * &qnum(n as i64 + 1)))
        - &lw(&[(Letter::Gamma, h + 1), (Letter::C, n), (Letter::A, 1)])
            .scale(&(&one_minus_qe(n as i64) * &qnum(n as i64)));
    (lhs, rhs)
}

fn libra8(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n) = (p.get("h"), p.get("n"));
    let lhs = beta(h, n).lie_bracket(&letter(Letter::B));
    let rhs = &lw(&[(Letter::Gamma, h), (Letter::B, 1), (Letter::C, n + 1)])
        .scale(&(-&(&one_minus_qe(n as i64 + 1) * &qnum(n as i64 + 1))))
        - &lw(&[(Letter::Gamma, h + 1), (Letter::B, 1), (Letter::C, n)])
            .scale(&(-&(&one_minus_qe(n as i64) * &qnum(n as i64))));
    (lhs, rhs)
}

fn libra9(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, k, n, m) = (p.get("h"), p.get("k"), p.get("n"), p.get("m"));
    let lhs = lw(&[(Letter::Gamma, h), (Letter::C, n), (Letter::A, m)])
        .lie_bracket(&beta(k, n));
    let rhs = &lw(&[(Letter::Gamma, h + k + 1), (Letter::C, 2 * n), (Letter::A, m)])
        .scale(&(&one_minus_qe(m as i64 * n as i64) * &qnum(n as i64)))
        - &lw(&[
            (Letter::Gamma, h + k),
            (Letter::C, 2 * n + 1),
            (Letter::A, m),
        ])
        .scale(&(&one_minus_qe(m as i64 * (n as i64 + 1)) * &qnum(n as i64 + 1)));
    (lhs, rhs)
}

fn libra10_lhs(p: &Params) -> NcPoly<QRat> {
    let (h, l, n, j, m) = (
        p.get("h"),
        p.get("l"),
        p.get("n"),
        p.get("j"),
        p.get("m"),
    );
    lw(&[(Letter::Gamma, h), (Letter::B, l), (Letter::C, n)]).lie_bracket(&beta(j, m))
}

fn libra10_printed(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, l, n, j, m) = (
        p.get("h"),
        p.get("l"),
        p.get("n"),
        p.get("j"),
        p.get("m"),
    );
    let rhs = &lw(&[
        (Letter::Gamma, j + h),
        (Letter::B, l),
        (Letter::C, n + m + 1),
    ])
    .scale(&(&one_minus_qe(l as i64 * (m as i64 + 1)) * &qnum(m as i64 + 1)))
        - &lw(&[(Letter::Gamma, j + 1 + h), (Letter::B, l), (Letter::C, m + 1)])
            .scale(&(&one_minus_qe(l as i64 * m as i64) * &qnum(m as i64)));
    (libra10_lhs(p), rhs)
}

fn libra10_corrected(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, l, n, j, m) = (
        p.get("h"),
        p.get("l"),
        p.get("n"),
        p.get("j"),
        p.get("m"),
    );
    let rhs = &lw(&[
        (Letter::Gamma, j + h),
        (Letter::B, l),
        (Letter::C, n + m + 1),
    ])
    .scale(&(&one_minus_qe(l as i64 * (m as i64 + 1)) * &qnum(m as i64 + 1)))
        - &lw(&[(Letter::Gamma, j + 1 + h), (Letter::B, l), (Letter::C, n + m)])
            .scale(&(&one_minus_qe(l as i64 * m as i64) * &qnum(m as i64)));
    (libra10_lhs(p), rhs)
}

fn libra11(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (k, n, m) = (p.get("k"), p.get("n"), p.get("m"));
    let lhs = lw(&[(Letter::Gamma, k), (Letter::C, n), (Letter::A, m)])
        .lie_bracket(&letter(Letter::A));
    let rhs = lw(&[(Letter::Gamma, k), (Letter::C, n), (Letter::A, m + 1)])
        .scale(&one_minus_qe(n as i64));
    (lhs, rhs)
}

fn libra12(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (k, n, m) = (p.get("k"), p.get("n"), p.get("m"));
    let lhs = lw(&[(Letter::Gamma, k), (Letter::C, n), (Letter::A, m + 1)])
        .lie_bracket(&letter(Letter::B))
        .scale(&(&QRat::one_minus_q() * &qp(n as i64)));
    let rhs = &lw(&[(Letter::Gamma, k), (Letter::C, n + 1), (Letter::A, m)])
        .scale(&(&QRat::one_minus_q() * &qnum(n as i64 + m as i64 + 1)))
        - &lw(&[(Letter::Gamma, k + 1), (Letter::C, n), (Letter::A, m)])
            .scale(&(&QRat::one_minus_q() * &qnum(n as i64)));
    (lhs, rhs)
}

fn libra13(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (k, n, m) = (p.get("k"), p.get("n"), p.get("m"));
    let lhs = lw(&[(Letter::Gamma, k), (Letter::C, n), (Letter::A, m)])
        .lie_bracket(&letter(Letter::C));
    let rhs = lw(&[(Letter::Gamma, k), (Letter::C, n + 1), (Letter::A, m)])
        .scale(&(-&one_minus_qe(m as i64)));
    (lhs, rhs)
}

fn beta_bridge(p: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let (h, n) = (p.get("h"), p.get("n"));
    let lhs = lw(&[(Letter::Gamma, h), (Letter::C, n), (Letter::A, 1)])
        .lie_bracket(&letter(Letter::B))
        .scale(&qp(n as i64));
    (lhs, beta(h, n))
}

fn central_a(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let mut g = lw(&[(Letter::A, 1), (Letter::B, 1)]);
    g = &g - &lw(&[(Letter::B, 1), (Letter::A, 1)]).scale(&QRat::q());
    (
        letter(Letter::A).multiply(&g),
        g.multiply(&letter(Letter::A)),
    )
}

fn central_b(_: &Params) -> (NcPoly<QRat>, NcPoly<QRat>) {
    let mut g = lw(&[(Letter::A, 1), (Letter::B, 1)]);
    g = &g - &lw(&[(Letter::B, 1), (Letter::A, 1)]).scale(&QRat::q());
    (
        letter(Letter::B).multiply(&g),
        g.multiply(&letter(Letter::B)),
    )
}

fn ps(name: &'static str, lo: u32, hi: u32) -> ParamSpec {
    ParamSpec { name, lo, hi }
}

fn entry(
    id: &'static str,
    summary: &'static str,
    params: Vec<ParamSpec>,
    build: Builder,
) -> Identity {
    Identity {
        id,
        summary,
        params,
        hypothesis: None,
        readings: vec![Reading {
            label: "as printed",
            build,
        }],
    }
}

static CATALOG: LazyLock<Vec<Identity>> = LazyLock::new(|| {
    let mut list = vec![
        entry("central_a", "A gamma = gamma A with gamma spelled AB - qBA", vec![], central_a),
        entry("central_b", "B gamma = gamma B with gamma spelled AB - qBA", vec![], central_b),
        entry("eq15", "A^n B = {n} gamma A^(n-1) + q^n B A^n", vec![ps("n", 0, 30)], eq15),
        entry("eq16", "A B^n = {n} gamma B^(n-1) + q^n B^n A", vec![ps("n", 0, 30)], eq16),
        entry("eq17", "A^n B^n (q^(n+1) BA + {n+1} gamma) = A^(n+1) B^(n+1)", vec![ps("n", 0, 10)], eq17),
        entry("eq18", "B^n A^n (BA - {n} gamma) = q^n B^(n+1) A^(n+1)", vec![ps("n", 0, 10)], eq18),
        entry("eq20", "A^n B^n as a product of (q^i BA + {i} gamma)", vec![ps("n", 0, 10)], eq20),
        entry("eq21", "q^C(n,2) B^n A^n as a product of (BA - {j} gamma)", vec![ps("n", 0, 10)], eq21),
        entry("eq23", "A[A,B] = q[A,B]A", vec![], eq23),
        entry("eq24", "[A,B]B = qB[A,B]", vec![], eq24),
        entry("eq25", "A^k [A,B] = q^k [A,B] A^k", vec![ps("k", 0, 10)], eq25),
        entry("eq26", "[A,B] B^k = q^k B^k [A,B]", vec![ps("k", 0, 10)], eq26),
        entry("eq27", "A^k C^n = q^(kn) C^n A^k", vec![ps("k", 0, 10), ps("n", 0, 10)], eq27),
        entry("eq28", "C^n B^k = q^(kn) B^k C^n", vec![ps("k", 0, 10), ps("n", 0, 10)], eq28),
        entry("eq29", "AB = C + BA", vec![], eq29),
        entry("eq30", "(1-q) BA = gamma - C", vec![], eq30),
        entry("eq31", "(1-q)^n A^n B^n as a product of (gamma - q^i C)", vec![ps("n", 0, 10)], eq31),
        entry("eq32", "q^C(n,2) (1-q)^n B^n A^n as a product of (q^j gamma - C)", vec![ps("n", 0, 10)], eq32),
        entry("eq33", "(1-q)^n A^n B^n as a q-binomial sum over gamma^(n-i) C^i", vec![ps("n", 0, 10)], eq33),
        entry("eq34", "q^C(n,2) (1-q)^n B^n A^n as a q-binomial sum", vec![ps("n", 0, 10)], eq34),
        entry("lemma5.1a", "(-ad A)^n (C) = (1-q)^n C A^n", vec![ps("n", 0, 8)], eq56),
        entry("lemma5.1b", "(ad B)^n (C) = (1-q)^n B^n C", vec![ps("n", 0, 8)], eq57),
        entry("lemma5.1c", "(-ad C)^n (B) = (1-q)^n B C^n", vec![ps("n", 0, 8)], eq58),
        entry("lemma5.1d", "(ad C)^n (A) = (1-q)^n C^n A", vec![ps("n", 0, 8)], eq59),
        entry("prop5.2a", "(ad C)^m (C A^n) = (1-q^n)^m C^(m+1) A^n", vec![ps("m", 0, 6), ps("n", 0, 6)], eq60),
        entry("prop5.2b", "(-ad C)^m (B^n C) = (1-q^n)^m B^n C^(m+1)", vec![ps("m", 0, 6), ps("n", 0, 6)], eq61),
        entry("prop5.3", "q^n (ad B)(ad C)^n (A) = (1-q)^n ({n} gamma C^n - {n+1} C^(n+1))", vec![ps("n", 0, 8)], eq63),
        entry("prop5.5a", "the (-ad A)^m ladder of prop5.3", vec![ps("m", 0, 5), ps("n", 0, 5)], eq5_16),
        entry("prop5.5b", "the (-ad B)^m ladder of prop5.3", vec![ps("m", 0, 5), ps("n", 0, 5)], eq5_17),
        entry(
            "prop5.8a",
            "gamma^h C^n A^m B^l expansion for m < l",
            vec![ps("h", 0, 2), ps("n", 1, 4), ps("m", 1, 4), ps("l", 1, 4)],
            prop5_8a,
        ),
        entry(
            "prop5.8b",
            "gamma^h C^n A^m B^l expansion for m > l",
            vec![ps("h", 0, 2), ps("n", 1, 4), ps("m", 1, 4), ps("l", 1, 4)],
            prop5_8b,
        ),
        entry(
            "thm5.10",
            "balanced bracket [gamma^k B^m C^n, gamma^j C^h A^m] as a q-binomial sum",
            vec![ps("m", 1, 4), ps("n", 1, 4), ps("h", 1, 4), ps("j", 0, 2), ps("k", 0, 2)],
            thm5_10,
        ),
        entry(
            "prop5.11",
            "alternating q-binomial sum vanishes for m > r",
            vec![ps("m", 2, 10), ps("r", 1, 9), ps("n", 1, 5), ps("h", 1, 5)],
            prop5_11,
        ),
        entry("libra1", "q^n [g^h B^l C^n, A]", vec![ps("h", 0, 3), ps("l", 1, 3), ps("n", 0, 3)], libra1),
        entry("libra2", "[g^h B^l C^n, B]", vec![ps("h", 0, 3), ps("l", 0, 3), ps("n", 0, 3)], libra2),
        entry("libra3", "[g^h B^l C^n, C]", vec![ps("h", 0, 3), ps("l", 0, 3), ps("n", 0, 3)], libra3),
        entry(
            "libra4",
            "[g^h C^n A^m, g^j C^k A^l]",
            vec![ps("h", 0, 2), ps("n", 1, 3), ps("m", 1, 3), ps("j", 0, 2), ps("k", 1, 3), ps("l", 1, 3)],
            libra4,
        ),
        entry(
            "libra6",
            "q^(l(k+n)) [g^h C^n A^m, g^j B^l C^k]",
            vec![ps("h", 0, 2), ps("n", 1, 3), ps("m", 1, 3), ps("j", 0, 2), ps("l", 1, 3), ps("k", 1, 3)],
            libra6,
        ),
        entry("libra7", "[beta(h,n), A]", vec![ps("h", 0, 3), ps("n", 1, 3)], libra7),
        entry("libra8", "[beta(h,n), B]", vec![ps("h", 0, 3), ps("n", 1, 3)], libra8),
        entry(
            "libra9",
            "[g^h C^n A^m, beta(k,n)]",
            vec![ps("h", 0, 2), ps("k", 0, 2), ps("n", 1, 3), ps("m", 1, 3)],
            libra9,
        ),
        entry("libra11", "[g^k C^n A^m, A]", vec![ps("k", 0, 3), ps("n", 1, 3), ps("m", 1, 3)], libra11),
        entry(
            "libra12",
            "(1-q) q^n [g^k C^n A^(m+1), B]",
            vec![ps("k", 0, 3), ps("n", 0, 3), ps("m", 0, 3)],
            libra12,
        ),
        entry("libra13", "[g^k C^n A^m, C]", vec![ps("k", 0, 3), ps("n", 1, 3), ps("m", 1, 3)], libra13),
        entry("beta_bridge", "q^n [g^h C^n A, B] = beta(h,n)", vec![ps("h", 0, 5), ps("n", 1, 5)], beta_bridge),
    ];
    // Entries with constrained hypotheses or competing transcriptions.
    for e in &mut list {
        match e.id {
            "prop5.8a" => e.hypothesis = Some(|p| p.get("m") < p.get("l")),
            "prop5.8b" => e.hypothesis = Some(|p| p.get("m") > p.get("l")),
            "prop5.11" => {
                e.hypothesis = Some(|p| p.get("r") < p.get("m") && p.get("n") + p.get("h") <= 6)
            }
            _ => {}
        }
    }
    list.push(Identity {
        id: "thm5.12",
        summary: "telescoped form of thm5.10 via psi sums",
        params: vec![ps("m", 1, 3), ps("n", 1, 3), ps("h", 1, 3), ps("j", 0, 2), ps("k", 0, 2)],
        hypothesis: None,
        readings: vec![
            Reading {
                label: "as printed",
                build: thm5_12_printed,
            },
            Reading {
                label: "proof indexing",
                build: thm5_12_proof,
            },
        ],
    });
    list.push(Identity {
        id: "libra5",
        summary: "[g^h B^l C^n, g^j B^m C^h]",
        params: vec![ps("h", 0, 2), ps("l", 1, 3), ps("n", 1, 3), ps("j", 0, 2), ps("m", 1, 3)],
        hypothesis: None,
        readings: vec![
            Reading {
                label: "as printed",
                build: libra5_printed,
            },
            Reading {
                label: "corrected exponents",
                build: libra5_corrected,
            },
        ],
    });
    list.push(Identity {
        id: "libra10",
        summary: "[g^h B^l C^n, beta(j,m)]",
        params: vec![ps("h", 0, 2), ps("l", 1, 3), ps("n", 1, 3), ps("j", 0, 2), ps("m", 1, 3)],
        hypothesis: None,
        readings: vec![
            Reading {
                label: "as printed",
                build: libra10_printed,
            },
            Reading {
                label: "corrected exponents",
                build: libra10_corrected,
            },
        ],
    });
    list
});

/// The full identity catalog, in suite order.
pub fn catalog() -> &'static [Identity] {
    &CATALOG
}

pub fn find_identity(id: &str) -> Option<&'static Identity> {
    catalog().iter().find(|e| e.id == id)
}

/// Checks one identity at one parameter valuation: builds both sides from
/// raw letters, normalizes under R, compares. For multi-reading entries the
/// readings are tried in order and the first match is reported.
pub fn verify_identity(id: &str, params: &[(&str, u32)]) -> Result<IdentityCheck, CatalogError> {
    let identity =
        find_identity(id).ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))?;
    let mut p = Params::default();
    for spec in &identity.params {
        let value = params
            .iter()
            .find(|(name, _)| *name == spec.name)
            .map(|(_, v)| *v)
            .ok_or(CatalogError::MissingParam(spec.name))?;
        p.0.insert(spec.name, value);
    }
    if let Some(h) = identity.hypothesis {
        if !h(&p) {
            return Err(CatalogError::Hypothesis);
        }
    }
    let r = presentation(Presentation::R);
    let mut first: Option<(CanonicalElement<QRat>, CanonicalElement<QRat>)> = None;
    for reading in &identity.readings {
        let (lhs, rhs) = (reading.build)(&p);
        let lhs_normal = r.normalize(&lhs);
        let rhs_normal = r.normalize(&rhs);
        let holds = lhs_normal.value == rhs_normal.value;
        if holds {
            return Ok(IdentityCheck {
                id: id.to_string(),
                params: p.entries().collect(),
                holds: true,
                reading: Some(reading.label),
                lhs_normal,
                rhs_normal,
            });
        }
        if first.is_none() {
            first = Some((lhs_normal, rhs_normal));
        }
    }
    let (lhs_normal, rhs_normal) = first.expect("identities have at least one reading");
    Ok(IdentityCheck {
        id: id.to_string(),
        params: p.entries().collect(),
        holds: false,
        reading: None,
        lhs_normal,
        rhs_normal,
    })
}

/// Runs one entry over its parameter box: tries each reading against every
/// case and reports the first reading that validates all of them.
pub fn run_identity(identity: &Identity, scale: f64) -> IdentityOutcome {
    let r = presentation(Presentation::R);
    let instances = identity.instances(scale);
    let mut failures = Vec::new();
    for (ri, reading) in identity.readings.iter().enumerate() {
        failures.clear();
        for p in &instances {
            let (lhs, rhs) = (reading.build)(p);
            if r.normalize(&lhs).value != r.normalize(&rhs).value {
                if failures.len() < 4 {
                    failures.push(format!("{:?}", p.entries().collect::<Vec<_>>()));
                }
                if identity.readings.len() == 1 {
                    continue;
                }
                break;
            }
        }
        if failures.is_empty() {
            return IdentityOutcome {
                id: identity.id,
                summary: identity.summary,
                cases: instances.len(),
                passed: true,
                reading: Some(reading.label),
                reading_index: ri,
                failures,
            };
        }
    }
    IdentityOutcome {
        id: identity.id,
        summary: identity.summary,
        cases: instances.len(),
        passed: false,
        reading: None,
        reading_index: 0,
        failures,
    }
}

/// Runs the catalog (optionally a subset) in order.
pub fn run_suite(only: Option<&[String]>, scale: f64) -> Vec<IdentityOutcome> {
    catalog()
        .iter()
        .filter(|e| only.is_none_or(|ids| ids.iter().any(|id| id == e.id)))
        .map(|e| run_identity(e, scale))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_wellformed() {
        let ids: Vec<_> = catalog().iter().map(|e| e.id).collect();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len(), "duplicate identity ids");
        assert!(find_identity("eq15").is_some());
        assert!(find_identity("nope").is_none());
    }

    #[test]
    fn verify_identity_catalog_examples() {
        let check = verify_identity("lemma5.1a", &[("n", 3)]).unwrap();
        assert!(check.holds);
        let check = verify_identity("prop5.11", &[("m", 4), ("r", 2), ("n", 1), ("h", 1)]).unwrap();
        assert!(check.holds);
        assert!(check.lhs_normal.value.is_zero());
        let check = verify_identity("libra2", &[("h", 1), ("l", 2), ("n", 1)]).unwrap();
        assert!(check.holds);
        assert!(matches!(
            verify_identity("nope", &[]),
            Err(CatalogError::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify_identity("eq15", &[]),
            Err(CatalogError::MissingParam("n"))
        ));
        assert!(matches!(
            verify_identity("prop5.8a", &[("h", 0), ("n", 1), ("m", 2), ("l", 1)]),
            Err(CatalogError::Hypothesis)
        ));
    }

    #[test]
    fn spot_identities_hold_at_small_parameters() {
        for (id, params) in [
            ("eq15", vec![("n", 3u32)]),
            ("eq17", vec![("n", 2)]),
            ("eq20", vec![("n", 3)]),
            ("eq33", vec![("n", 3)]),
            ("prop5.2a", vec![("m", 2), ("n", 2)]),
            ("prop5.3", vec![("n", 2)]),
            ("prop5.5a", vec![("m", 2), ("n", 2)]),
            ("prop5.5b", vec![("m", 2), ("n", 2)]),
            ("prop5.8a", vec![("h", 1), ("n", 1), ("m", 1), ("l", 3)]),
            ("prop5.8b", vec![("h", 1), ("n", 1), ("m", 3), ("l", 1)]),
            ("thm5.10", vec![("m", 2), ("n", 1), ("h", 1), ("j", 1), ("k", 1)]),
            ("libra1", vec![("h", 0), ("l", 1), ("n", 1)]),
            ("libra4", vec![("h", 1), ("n", 1), ("m", 2), ("j", 0), ("k", 2), ("l", 1)]),
            ("libra6", vec![("h", 0), ("n", 1), ("m", 1), ("j", 1), ("l", 2), ("k", 1)]),
            ("libra9", vec![("h", 1), ("k", 0), ("n", 2), ("m", 1)]),
            ("libra12", vec![("k", 1), ("n", 2), ("m", 1)]),
            ("beta_bridge", vec![("h", 2), ("n", 3)]),
        ] {
            let check = verify_identity(id, &params).unwrap();
            assert!(
                check.holds,
                "{id} fails at {:?}: lhs {} vs rhs {}",
                params,
                check.lhs_normal.value.pretty(false),
                check.rhs_normal.value.pretty(false)
            );
        }
    }

    #[test]
    fn dual_reading_entries_resolve_to_a_reading() {
        // libra5 as printed fails off the degenerate locus; the corrected
        // exponents validate.
        let check =
            verify_identity("libra5", &[("h", 1), ("l", 1), ("n", 1), ("j", 0), ("m", 2)])
                .unwrap();
        assert!(check.holds);
        assert_eq!(check.reading, Some("corrected exponents"));
        // libra10 as printed only works at n = 1.
        let check =
            verify_identity("libra10", &[("h", 0), ("l", 1), ("n", 2), ("j", 0), ("m", 1)])
                .unwrap();
        assert!(check.holds);
        assert_eq!(check.reading, Some("corrected exponents"));
        // thm5.12: the proof indexing validates.
        let check = verify_identity(
            "thm5.12",
            &[("m", 2), ("n", 1), ("h", 1), ("j", 1), ("k", 0)],
        )
        .unwrap();
        assert!(check.holds);
        assert_eq!(check.reading, Some("proof indexing"));
    }

    #[test]
    fn run_identity_reports_readings() {
        let libra5 = find_identity("libra5").unwrap();
        let outcome = run_identity(libra5, 0.7);
        assert!(outcome.passed);
        assert_eq!(outcome.reading, Some("corrected exponents"));
        assert_eq!(outcome.reading_index, 1);
        let eq29 = find_identity("eq29").unwrap();
        let outcome = run_identity(eq29, 1.0);
        assert!(outcome.passed);
        assert_eq!(outcome.cases, 1);
    }
}
