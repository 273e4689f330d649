//! JSON-driven batch front end.
//!
//! One self-contained document per run:
//!
//! ```json
//! {
//!   "poset": {"n": 3, "covers": [[1, 3]]},
//!   "code": {
//!     "ambient": {"p": 2, "m": 1, "t": 2},
//!     "n": 3,
//!     "linearity": "full",
//!     "generators": [[[1, 0], [1, 0], [0, 0]]]
//!   }
//! }
//! ```
//!
//! Poset elements are 1-based. A code entry is a list of `t` GF(q)
//! coordinates over the basis {1, y, .., y^(t-1)} of GF(q^t); each coordinate
//! is an integer when `m = 1` and a list of `m` coefficients otherwise. When
//! `t = 1` the entry may be given as the bare coordinate. Optional keys:
//! `form` (`symp`, `alt` or `herm`) for `dual`, `search_limit` for
//! `construct-mds` and `verify-t4`, and `size` for `enumerate-ideals`.
//!
//! Exit codes: 0 when the computation finished and every checked property
//! holds, 1 when a checked property fails (the report carries a witness), 2 on
//! input errors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::code::{self, AdditiveCode, Alphabet, Linearity, DEFAULT_CAP};
use crate::error::Error;
use crate::gf::{Elem, Field};
use crate::poset::Poset;
use crate::stabilizer::{self, StabilizerGroup};
use crate::symplectic::{self, Form};
use crate::{qsim, Ideal};

/// Default number of random posets tried by `construct-mds` beyond n = 5.
pub const DEFAULT_SEARCH_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Params,
    Dual,
    MdsCheck,
    PerfectCheck,
    Reduce,
    VerifyT1,
    VerifyT2,
    VerifyT3,
    VerifyT4,
    VerifyT5,
    ConstructMds,
    Simulate,
    EnumerateIdeals,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::Params,
        Command::Dual,
        Command::MdsCheck,
        Command::PerfectCheck,
        Command::Reduce,
        Command::VerifyT1,
        Command::VerifyT2,
        Command::VerifyT3,
        Command::VerifyT4,
        Command::VerifyT5,
        Command::ConstructMds,
        Command::Simulate,
        Command::EnumerateIdeals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Params => "params",
            Command::Dual => "dual",
            Command::MdsCheck => "mds-check",
            Command::PerfectCheck => "perfect-check",
            Command::Reduce => "reduce",
            Command::VerifyT1 => "verify-t1",
            Command::VerifyT2 => "verify-t2",
            Command::VerifyT3 => "verify-t3",
            Command::VerifyT4 => "verify-t4",
            Command::VerifyT5 => "verify-t5",
            Command::ConstructMds => "construct-mds",
            Command::Simulate => "simulate",
            Command::EnumerateIdeals => "enumerate-ideals",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Command, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Command::ALL.iter().map(|c| c.name()).collect();
                format!(
                    "unknown command `{s}`; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// Everything a run depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSpec {
    pub command: Command,
    pub input: PathBuf,
    /// Overrides the document's `poset` key.
    pub poset: Option<PathBuf>,
    /// Enumeration cap in codewords.
    pub cap: Option<u64>,
    pub seed: u64,
    pub json: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    poset: Option<PosetSpec>,
    #[serde(default)]
    code: Option<CodeSpec>,
    #[serde(default)]
    form: Option<FormName>,
    #[serde(default)]
    search_limit: Option<usize>,
    #[serde(default)]
    size: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetSpec {
    n: usize,
    #[serde(default)]
    covers: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AmbientSpec {
    p: u32,
    #[serde(default = "one")]
    m: u32,
    #[serde(default)]
    poly: Option<Vec<u32>>,
    #[serde(default = "one")]
    t: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeSpec {
    ambient: AmbientSpec,
    n: usize,
    linearity: Linearity,
    #[serde(default)]
    generators: Vec<Vec<Value>>,
}

#[derive(Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FormName {
    Symp,
    Alt,
    Herm,
}

/// An input problem: file, line when known, key path and message.
struct InputError {
    file: String,
    line: Option<usize>,
    key: String,
    message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.file)?;
        if let Some(line) = self.line {
            write!(f, ":{line}")?;
        }
        write!(f, ": key `{}`: {}", self.key, self.message)
    }
}

enum Failure {
    Input(InputError),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Compute(e)
    }
}

struct Source {
    path: String,
    text: String,
}

impl Source {
    fn read(path: &Path) -> Result<Source, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::Input(InputError {
                file: path.display().to_string(),
                line: None,
                key: "$".into(),
                message: e.to_string(),
            })
        })?;
        Ok(Source {
            path: path.display().to_string(),
            text,
        })
    }

    fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }

    fn parse<T: for<'de> Deserialize<'de>>(&self) -> Result<T, Failure> {
        let mut de = serde_json::Deserializer::from_str(&self.text);
        serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            Failure::Input(InputError {
                file: self.path.clone(),
                line: Some(inner.line()),
                key: path,
                message: inner.to_string(),
            })
        })
    }

    /// An error about `key`, located at the first line mentioning its last segment.
    fn error(&self, key: &str, message: impl fmt::Display) -> Failure {
        let last = key
            .split(['.', '['])
            .rev()
            .map(|seg| seg.trim_end_matches(']'))
            .find(|seg| !seg.is_empty() && !seg.bytes().all(|b| b.is_ascii_digit()))
            .unwrap_or(key);
        let needle = format!("\"{last}\"");
        let line = self
            .text
            .lines()
            .position(|l| l.contains(&needle))
            .map(|i| i + 1);
        Failure::Input(InputError {
            file: self.path.clone(),
            line,
            key: key.into(),
            message: message.to_string(),
        })
    }
}

/// A parsed code together with how to render its entries.
struct Loaded {
    code: AdditiveCode,
    m: u32,
}

fn build_poset(src: &Source, prefix: &str, spec: &PosetSpec) -> Result<Poset, Failure> {
    let mut covers = Vec::with_capacity(spec.covers.len());
    for (k, &(i, j)) in spec.covers.iter().enumerate() {
        for v in [i, j] {
            if v == 0 || v > spec.n {
                return Err(src.error(
                    &format!("{prefix}covers[{k}]"),
                    format!("element {v} is outside 1..={}", spec.n),
                ));
            }
        }
        covers.push((i - 1, j - 1));
    }
    Poset::from_covers(spec.n, &covers).map_err(|e| {
        let key = if matches!(e, Error::PosetTooLarge(_)) {
            "n"
        } else {
            "covers"
        };
        let debug = format!("{e:?}");
        let kind = debug.split(['(', ' ', '{']).next().unwrap_or_default();
        src.error(&format!("{prefix}{key}"), format!("{e} ({kind})"))
    })
}

fn build_code(src: &Source, spec: &CodeSpec, cap: u64) -> Result<Loaded, Failure> {
    let amb = &spec.ambient;
    let base = match &amb.poly {
        Some(poly) => Field::new(amb.p, amb.m, poly),
        None => Field::gf(amb.p, amb.m),
    }
    .map_err(|e| src.error("code.ambient", e))?;
    let alphabet =
        Alphabet::new(base.clone(), amb.t).map_err(|e| src.error("code.ambient.t", e))?;
    let mut gens = Vec::with_capacity(spec.generators.len());
    for (i, g) in spec.generators.iter().enumerate() {
        if g.len() != spec.n {
            return Err(src.error(
                &format!("code.generators[{i}]"),
                format!("expected {} entries, found {}", spec.n, g.len()),
            ));
        }
        let mut row = Vec::with_capacity(g.len());
        for (j, v) in g.iter().enumerate() {
            let e = parse_entry(&base, amb.t, v)
                .map_err(|msg| src.error(&format!("code.generators[{i}][{j}]"), msg))?;
            row.push(e);
        }
        gens.push(row);
    }
    let code = AdditiveCode::new(alphabet, spec.linearity, spec.n, gens)
        .map_err(|e| src.error("code", e))?;
    Ok(Loaded {
        code: code.with_cap(cap),
        m: amb.m,
    })
}

fn parse_coord(base: &Field, v: &Value) -> Result<u32, String> {
    let m = base.degree() as usize;
    match v {
        Value::Number(_) => {
            let x = v
                .as_u64()
                .filter(|&x| x < base.size() as u64)
                .ok_or_else(|| format!("{v} is not an element of GF({})", base.size()))?;
            Ok(x as u32)
        }
        Value::Array(cs) if cs.len() == m => {
            let coeffs = cs
                .iter()
                .map(|c| {
                    c.as_u64()
                        .filter(|&c| c < base.characteristic() as u64)
                        .map(|c| c as u32)
                })
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| {
                    format!(
                        "{v} is not a coefficient list over GF({})",
                        base.characteristic()
                    )
                })?;
            Ok(base.from_coeffs(&coeffs).map_err(|e| e.to_string())?.0)
        }
        _ => Err(format!(
            "{v} is neither an element index nor {m} coefficients"
        )),
    }
}

fn parse_entry(base: &Field, t: u32, v: &Value) -> Result<Elem, String> {
    let q = base.size();
    if t == 1 {
        return parse_coord(base, v).map(Elem);
    }
    let Value::Array(xs) = v else {
        return Err(format!("{v} should list {t} coordinates"));
    };
    if xs.len() != t as usize {
        return Err(format!("{v} should list {t} coordinates"));
    }
    let mut idx = 0u32;
    for x in xs.iter().rev() {
        idx = idx * q + parse_coord(base, x)?;
    }
    Ok(Elem(idx))
}

fn render_coord(base: &Field, m: u32, x: u32) -> Value {
    if m == 1 {
        json!(x)
    } else {
        json!(base.coeffs(Elem(x)))
    }
}

fn render_entry(c: &AdditiveCode, m: u32, x: Elem) -> Value {
    let a = c.alphabet();
    let base = a.base();
    if a.t() == 1 {
        return render_coord(base, m, x.0);
    }
    let q = a.q();
    let mut v = x.0;
    let coords: Vec<Value> = (0..a.t())
        .map(|_| {
            let d = v % q;
            v /= q;
            render_coord(base, m, d)
        })
        .collect();
    Value::Array(coords)
}

fn render_vectors(c: &AdditiveCode, m: u32, vs: &[Vec<Elem>]) -> Value {
    vs.iter()
        .map(|v| v.iter().map(|&x| render_entry(c, m, x)).collect::<Vec<_>>())
        .collect()
}

fn render_code(c: &AdditiveCode, m: u32) -> Value {
    json!({
        "n": c.len(),
        "linearity": c.linearity(),
        "log_p_size": c.log_p_size(),
        "generators": render_vectors(c, m, c.generators()),
    })
}

fn render_poset(p: &Poset) -> Value {
    let covers: Vec<(usize, usize)> = p.covers().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
    json!({"n": p.len(), "covers": covers})
}

/// What a command produced.
struct Done {
    result: Value,
    /// Human-readable headline lines.
    lines: Vec<String>,
    holds: bool,
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

struct Context<'a> {
    doc: &'a Document,
    src: &'a Source,
    poset: Option<Poset>,
    cap: u64,
    seed: u64,
}

impl Context<'_> {
    fn code(&self) -> Result<Loaded, Failure> {
        let spec = self
            .doc
            .code
            .as_ref()
            .ok_or_else(|| self.src.error("code", "this command needs a code"))?;
        build_code(self.src, spec, self.cap)
    }

    /// The document's poset, or the antichain on `n` points when none is given.
    fn poset_for(&self, n: usize) -> Result<Poset, Failure> {
        match &self.poset {
            Some(p) if p.len() == n => Ok(p.clone()),
            Some(p) => Err(self.src.error(
                "poset.n",
                format!("poset has {} elements but the code needs {n}", p.len()),
            )),
            None => Ok(Poset::antichain(n)),
        }
    }

    /// The stabilizer described by the code: C ⊆ GF(q)^2n when t = 1, or
    /// ψ(D) for D ⊆ GF(q²)^n when t = 2.
    fn stabilizer(&self) -> Result<(StabilizerGroup, Loaded), Failure> {
        let loaded = self.code()?;
        let c = &loaded.code;
        let stab = match c.alphabet().t() {
            1 if c.len() % 2 == 0 => StabilizerGroup::from_code(c.clone()),
            2 => StabilizerGroup::from_additive(c),
            _ => {
                return Err(self.src.error(
                    "code.ambient.t",
                    "a stabilizer needs GF(q)^2n (t = 1) or GF(q²)^n (t = 2)",
                ))
            }
        }
        .map_err(|e| match e {
            Error::NotSelfOrthogonal => self.src.error("code.generators", e),
            other => Failure::Compute(other),
        })?;
        Ok((stab, loaded))
    }

    fn search_limit(&self) -> usize {
        self.doc.search_limit.unwrap_or(DEFAULT_SEARCH_LIMIT)
    }
}

fn params_value(p: &stabilizer::StabCodeParams) -> Value {
    let lqk = p.log_q_k();
    json!({
        "n": p.n,
        "q": p.q(),
        "log_p_K": p.log_p_k,
        "log_q_K": if lqk.is_integer() { json!(lqk.to_integer()) } else { json!(format!("{lqk}")) },
        "d_P": p.d_p,
        "pure": p.pure,
        "k_one_convention": p.k_one_convention,
        "dual_distance": p.dual_distance,
        "display": p.to_string(),
    })
}

fn execute(cmd: Command, cx: &Context<'_>) -> Result<Done, Failure> {
    match cmd {
        Command::EnumerateIdeals => {
            let poset = cx
                .poset
                .clone()
                .ok_or_else(|| cx.src.error("poset", "this command needs a poset"))?;
            let sizes: Vec<usize> = match cx.doc.size {
                Some(k) if k > poset.len() => {
                    return Err(cx
                        .src
                        .error("size", format!("size {k} exceeds n = {}", poset.len())))
                }
                Some(k) => vec![k],
                None => (0..=poset.len()).collect(),
            };
            let mut by_size = serde_json::Map::new();
            let mut lines = Vec::new();
            let mut total = 0;
            for k in sizes {
                let ideals: Vec<Ideal> = poset.ideals_of_size(k).collect();
                total += ideals.len();
                lines.push(format!(
                    "size {k}: {} ideal(s) {}",
                    ideals.len(),
                    ideals
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
                by_size.insert(k.to_string(), json!(ideals));
            }
            lines.insert(0, format!("Ideals: {total}"));
            Ok(Done {
                result: json!({"poset": render_poset(&poset), "total": total, "by_size": by_size}),
                lines,
                holds: true,
            })
        }
        Command::Dual => {
            let loaded = cx.code()?;
            let c = &loaded.code;
            let form = match (cx.doc.form, c.alphabet().t()) {
                (Some(FormName::Symp), _) => Form::Symp,
                (Some(FormName::Alt), _) => Form::Alt,
                (Some(FormName::Herm), _) => Form::Herm,
                (None, 1) => Form::Symp,
                (None, _) => Form::Alt,
            };
            let key = if cx.doc.form.is_some() {
                "form"
            } else {
                "code"
            };
            let d = symplectic::dual(c, form)
                .map_err(|e| cx.src.error(key, e))?
                .detect_linearity();
            let consistent = c.log_p_size() + d.log_p_size() == c.len() as u32 * c.field().degree();
            Ok(Done {
                lines: vec![
                    format!(
                        "Form: {}",
                        serde_json::to_string(&form)
                            .unwrap_or_default()
                            .trim_matches('"')
                    ),
                    format!("Dual: {d}"),
                    format!("Self-orthogonal: {}", yes(c.is_subcode_of(&d))),
                ],
                result: json!({
                    "form": form,
                    "dual": render_code(&d, loaded.m),
                    "self_orthogonal": c.is_subcode_of(&d),
                    "size_identity_holds": consistent,
                }),
                holds: consistent,
            })
        }
        Command::MdsCheck => {
            let loaded = cx.code()?;
            let c = &loaded.code;
            let poset = cx.poset_for(c.len())?;
            let d = code::min_distance(&poset, c)?;
            let mds = code::is_mds(&poset, c)?;
            let deg = c.field().degree() as usize;
            let bound_holds = c.log_p_size() as usize <= deg * (c.len() + 1 - d);
            Ok(Done {
                lines: vec![
                    format!("MDS: {}", yes(mds)),
                    format!("d_P: {d}"),
                    format!("q-dimension: {}", code::q_dimension(c)),
                ],
                result: json!({
                    "poset": render_poset(&poset),
                    "min_distance": d,
                    "q_dimension": code::q_dimension(c).to_string(),
                    "mds": mds,
                    "singleton_bound_holds": bound_holds,
                }),
                holds: bound_holds,
            })
        }
        Command::PerfectCheck => {
            let loaded = cx.code()?;
            let c = &loaded.code;
            let poset = cx.poset_for(c.len())?;
            let report = code::mds_iff_perfect_verify(&poset, c)?;
            let (lines, holds) = match &report {
                None => (vec!["Skipped: the zero code".to_string()], true),
                Some(r) => {
                    let mut l = vec![
                        format!("MDS: {}", yes(r.is_mds)),
                        format!("All ideals perfect: {}", yes(r.all_perfect)),
                        format!("Agree: {}", yes(r.agree)),
                    ];
                    if let Some(w) = r.witness {
                        l.push(format!("Not perfect on ideal {w}"));
                    }
                    (l, r.agree)
                }
            };
            Ok(Done {
                result: json!({"poset": render_poset(&poset), "report": report}),
                lines,
                holds,
            })
        }
        Command::Reduce => {
            let loaded = cx.code()?;
            let c = &loaded.code;
            let r = code::reduce_generator(c).map_err(|e| cx.src.error("code", e))?;
            let props = r.properties(c.alphabet());
            let ok = props.iter().all(|&b| b);
            Ok(Done {
                lines: vec![
                    format!("Row reduction numbers: {:?}", r.rrn),
                    format!("k = {}, s = {}", r.k(), r.s(c.alphabet().t())),
                    format!("Reduced form properties hold: {}", yes(ok)),
                ],
                result: json!({
                    "rrn": r.rrn,
                    "k": r.k(),
                    "s": r.s(c.alphabet().t()),
                    "rows": render_vectors(c, loaded.m, &r.rows),
                    "properties": {
                        "bounded": props[0], "last_nonzero": props[1], "conserved": props[2],
                        "independent_blocks": props[3], "zeros_below": props[4],
                    },
                }),
                holds: ok,
            })
        }
        Command::Params => {
            let (stab, _) = cx.stabilizer()?;
            let poset = cx.poset_for(stab.n())?;
            let p = stabilizer::params(&poset, &stab)?;
            Ok(Done {
                lines: vec![format!("Parameters: {p}"), format!("Pure: {}", yes(p.pure))],
                result: json!({"poset": render_poset(&poset), "params": params_value(&p)}),
                holds: true,
            })
        }
        Command::VerifyT1 => {
            let (stab, _) = cx.stabilizer()?;
            let poset = cx.poset_for(stab.n())?;
            let p = stabilizer::params(&poset, &stab)?;
            let holds = stabilizer::singleton_q_check(&p).map_err(|e| cx.src.error("code", e))?;
            let equality = stabilizer::is_mds_stabilizer(&p)?;
            let weak = stabilizer::singleton_dual_check(&p)?;
            let mut lines = vec![
                format!("Parameters: {p}"),
                format!("Bound holds: {}", yes(holds)),
                format!("Equality (MDS): {}", yes(equality)),
            ];
            if !holds {
                lines.push(format!(
                    "Violated by a {} code; bound with the distance of C^⊥s holds: {}",
                    if p.pure { "pure" } else { "non-pure" },
                    yes(weak)
                ));
            }
            Ok(Done {
                result: json!({
                    "poset": render_poset(&poset),
                    "params": params_value(&p),
                    "bound_holds": holds,
                    "equality": equality,
                    "dual_distance_bound_holds": weak,
                }),
                lines,
                holds,
            })
        }
        Command::VerifyT2 | Command::Simulate => {
            let (stab, _) = cx.stabilizer()?;
            let poset = cx.poset_for(stab.n())?;
            let p = stabilizer::params(&poset, &stab)?;
            let sim = qsim::simulate(&poset, &stab)?;
            let k = (p.p as u64).pow(p.log_p_k);
            let agree = sim.min_undetected_weight == (p.k_above_one().then_some(p.d_p))
                && sim.dim_q as u64 == k;
            Ok(Done {
                lines: vec![
                    format!("dim Q: {} (K = {k})", sim.dim_q),
                    format!(
                        "Min undetected weight: {}",
                        sim.min_undetected_weight
                            .map_or("none".into(), |w| w.to_string())
                    ),
                    format!("d_P: {}", p.d_p),
                    format!("Agree: {}", yes(agree)),
                ],
                result: json!({
                    "poset": render_poset(&poset),
                    "dimQ": sim.dim_q,
                    "minUndetectedWeight": sim.min_undetected_weight,
                    "witness": sim.witness,
                    "params": params_value(&p),
                    "agree": agree,
                }),
                holds: agree,
            })
        }
        Command::VerifyT3 => {
            let (stab, _) = cx.stabilizer()?;
            let poset = cx.poset_for(stab.n())?;
            let r = stabilizer::theorem3_verify(&poset, &stab).map_err(|e| precondition(cx, e))?;
            Ok(Done {
                lines: vec![
                    format!("Parameters: {}", r.params),
                    format!(
                        "MDS stabilizer: {}, dual MDS: {}",
                        yes(r.mds_stabilizer),
                        yes(r.dual_is_mds)
                    ),
                    format!("Part (1) holds: {}", yes(r.part1_holds)),
                    format!(
                        "Part (2) applies: {}, holds: {}",
                        yes(r.part2_applies),
                        yes(r.part2_holds)
                    ),
                ],
                holds: r.holds(),
                result: json!({"poset": render_poset(&poset), "report": r}),
            })
        }
        Command::VerifyT5 => {
            let (stab, _) = cx.stabilizer()?;
            let poset = cx.poset_for(stab.n())?;
            let r = stabilizer::theorem5_verify(&poset, &stab).map_err(|e| precondition(cx, e))?;
            let mut lines = vec![
                format!("Parameters: {}", r.params),
                format!("MDS stabilizer: {}", yes(r.mds_stabilizer)),
                format!(
                    "Perfect on every ideal of size {}: {}",
                    r.ideal_size.map_or("-".into(), |s| s.to_string()),
                    yes(r.all_perfect)
                ),
                format!("Agree: {}", yes(r.agree)),
            ];
            if let Some(w) = r.witness {
                lines.push(format!("Not perfect on ideal {w}"));
            }
            Ok(Done {
                holds: r.agree,
                result: json!({"poset": render_poset(&poset), "report": r}),
                lines,
            })
        }
        Command::ConstructMds | Command::VerifyT4 => {
            let loaded = cx.code()?;
            let e = &loaded.code;
            let limit = cx.search_limit();
            match stabilizer::construct_mds(e, limit, cx.seed) {
                Ok(found) => {
                    let k_prime = e.log_p_size() / e.field().degree();
                    let p = &found.params;
                    let expected = p.pure
                        && stabilizer::is_mds_stabilizer(p)?
                        && p.d_p == k_prime as usize + 1
                        && p.log_q_k()
                            == num_rational::Ratio::from_integer(e.len() as u32 - 2 * k_prime);
                    let holds = cmd == Command::ConstructMds || expected;
                    Ok(Done {
                        lines: vec![
                            format!("Poset: {}", found.poset),
                            format!("Parameters: {p}"),
                            format!("Pure MDS with d_P = k'+1: {}", yes(expected)),
                            format!("Posets tried: {}", found.posets_tried),
                        ],
                        result: json!({
                            "poset": render_poset(&found.poset),
                            "params": params_value(p),
                            "k_prime": k_prime,
                            "expected_parameters": expected,
                            "posets_tried": found.posets_tried,
                        }),
                        holds,
                    })
                }
                Err(Error::SearchExhausted { tried }) => Ok(Done {
                    lines: vec![format!("No poset found after {tried} candidates")],
                    result: json!({"search_exhausted": true, "posets_tried": tried}),
                    holds: false,
                }),
                Err(e) => Err(precondition(cx, e)),
            }
        }
    }
}

/// Precondition failures on the input code are input errors.
fn precondition(cx: &Context<'_>, e: Error) -> Failure {
    match e {
        Error::NotPure
        | Error::KNotAboveOne
        | Error::NotSelfOrthogonal
        | Error::LinearityMismatch(_) => cx.src.error("code", e),
        other => Failure::Compute(other),
    }
}

/// Runs one command and renders its report.
pub fn run(spec: &RunSpec) -> Outcome {
    let cap = spec.cap.unwrap_or(DEFAULT_CAP);
    let mut inputs = serde_json::Map::new();
    let mut caps = json!({
        "enumeration": cap,
        "search_limit": null,
        "seed": spec.seed,
        "qsim_max_dim": qsim::MAX_DIM,
        "qsim_max_scan_dim": qsim::MAX_SCAN_DIM,
    });
    let outcome = (|| -> Result<Done, Failure> {
        let src = Source::read(&spec.input)?;
        inputs.insert(
            "input".into(),
            json!({"path": src.path, "sha256": src.sha256()}),
        );
        let doc: Document = src.parse()?;
        caps["search_limit"] = json!(doc.search_limit.unwrap_or(DEFAULT_SEARCH_LIMIT));
        let poset = match &spec.poset {
            Some(path) => {
                let psrc = Source::read(path)?;
                inputs.insert(
                    "poset".into(),
                    json!({"path": psrc.path, "sha256": psrc.sha256()}),
                );
                let pspec: PosetSpec = psrc.parse()?;
                Some(build_poset(&psrc, "", &pspec)?)
            }
            None => doc
                .poset
                .as_ref()
                .map(|p| build_poset(&src, "poset.", p))
                .transpose()?,
        };
        let cx = Context {
            doc: &doc,
            src: &src,
            poset,
            cap,
            seed: spec.seed,
        };
        execute(spec.command, &cx)
    })();

    let (exit_code, status, body, lines) = match outcome {
        Ok(done) => {
            let code = if done.holds { 0 } else { 1 };
            (
                code,
                if done.holds { "ok" } else { "failed" },
                json!({"result": done.result}),
                done.lines,
            )
        }
        Err(Failure::Input(e)) => (
            2,
            "input-error",
            json!({"error": e.to_string()}),
            vec![format!("error: {e}")],
        ),
        Err(Failure::Compute(e)) => (
            2,
            "input-error",
            json!({"error": e.to_string()}),
            vec![format!("error: {e}")],
        ),
    };
    let mut report = json!({
        "command": spec.command.name(),
        "status": status,
        "exit_code": exit_code,
        "inputs": inputs,
        "caps": caps,
    });
    for (k, v) in body.as_object().expect("object").clone() {
        report[k] = v;
    }
    let text = if spec.json {
        serde_json::to_string_pretty(&report).expect("serializable")
    } else {
        let mut out = vec![format!("{}: {status}", spec.command)];
        out.extend(lines);
        for (name, meta) in report["inputs"].as_object().into_iter().flatten() {
            out.push(format!(
                "{name} sha256: {}",
                meta["sha256"].as_str().unwrap_or("")
            ));
        }
        out.push(format!(
            "caps: enumeration={} search_limit={} seed={}",
            report["caps"]["enumeration"], report["caps"]["search_limit"], report["caps"]["seed"]
        ));
        out.join("\n")
    };
    Outcome {
        exit_code,
        report: text + "\n",
    }
}

/// Shared alphabet helper for callers that build fields from JSON-like parts.
pub fn alphabet(p: u32, m: u32, t: u32) -> crate::error::Result<Alphabet> {
    let base: Arc<Field> = Field::gf(p, m)?;
    Alphabet::new(base, t)
}
