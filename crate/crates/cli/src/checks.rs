//! Named checks on workspace entries and comparison with expected results.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use toml::Value;
use trimat::algebra::{indec_injectives, is_frobenius, is_selfinjective};
use trimat::bimtri::{
    exchangeable_iso, flat_to_triple, hom_a_m, is_left_projective, is_right_projective, satisfies_ip, tensor_over_b,
    Bimodule, TriangularAlgebra, TripleModule,
};
use trimat::monocat::{
    cotilting_t, factor_through, in_f, in_perp, in_s, mimo, mimo_with_extension, s_is_frobenius, Approximation, MonoError,
};
use trimat::repmod::{
    enumerate_indecomposables, ext_dim, hom_basis, injective_envelope, is_indecomposable, is_injective, is_isomorphic,
    is_projective, Module,
};
use trimat::rss::{
    end_iso_check, exchangeable_t, hom_into_t, rss_functor, rss_obstructions, verify_rss_property, DualHomFunctor,
    RssError, TwoSidedT,
};
use trimat::stablerec::{verify_recollement, Corpus, StableError};
use trimat::{Field, Matrix};

use crate::workspace::{Entry, Kind, Object, Workspace};
use crate::CliError;

/// Largest enumeration bound accepted, the ceiling of the core enumerator.
pub const MAX_BOUND: usize = trimat::repmod::DEFAULT_CEILING;
const DEFAULT_BOUND: usize = 3;

pub fn known_checks(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Algebra => &["dim", "vertices", "frobenius", "selfinjective"],
        Kind::Bimodule => &["dim", "left-projective", "right-projective", "ip", "exchangeable"],
        Kind::Lambda => &[
            "dim",
            "left-projective",
            "right-projective",
            "ip",
            "exchangeable",
            "enumerate.total",
            "enumerate.s",
            "enumerate.f",
            "frobenius-s",
            "cotilting",
            "perp-equals-s",
            "ext-identities",
            "mimo",
            "recollement",
            "stable-counts",
            "end-iso",
            "rss",
            "nakayama-rss",
            "appendix-identities",
            "hom-obstructions",
        ],
        Kind::Module => &["dim", "indecomposable", "projective", "injective"],
        Kind::Triple => &["dim", "indecomposable", "in-s", "in-f", "rss-image"],
        Kind::Hom => &["dim", "rank"],
    }
}

/// The outcome of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Actual {
    Bool(bool),
    Int(usize),
    Text(String),
    List(Vec<usize>),
    /// A precondition of the check does not hold.
    Refused(String),
}

impl fmt::Display for Actual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Actual::Bool(b) => write!(f, "{b}"),
            Actual::Int(n) => write!(f, "{n}"),
            Actual::Text(s) => write!(f, "{s}"),
            Actual::List(v) => write!(f, "[{}]", v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")),
            Actual::Refused(_) => write!(f, "refused"),
        }
    }
}

pub fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(value_text).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

pub fn matches(expected: &Value, actual: &Actual) -> bool {
    match (expected, actual) {
        (Value::Boolean(e), Actual::Bool(a)) => e == a,
        (Value::Integer(e), Actual::Int(a)) => *e >= 0 && *e as usize == *a,
        (Value::String(e), Actual::Text(a)) => e == a,
        (Value::String(e), Actual::Refused(_)) => e == "refused",
        (Value::Array(_), Actual::List(_)) => value_text(expected) == actual.to_string(),
        _ => false,
    }
}

type Eval = Result<Actual, CliError>;

fn fail(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn mono_refusal(e: MonoError) -> Eval {
    match e {
        MonoError::NotRightProjective | MonoError::NotLeftProjective => Ok(Actual::Refused(e.to_string())),
        other => Err(fail(other)),
    }
}

fn stable_refusal(e: StableError) -> Eval {
    match e {
        StableError::NotIp => Ok(Actual::Refused(e.to_string())),
        StableError::Mono(m) => mono_refusal(m),
        other => Err(fail(other)),
    }
}

fn rss_refusal(e: RssError) -> Eval {
    match e {
        RssError::NotExchangeable | RssError::NotInS => Ok(Actual::Refused(e.to_string())),
        RssError::Mono(m) => mono_refusal(m),
        other => Err(fail(other)),
    }
}

/// Evaluates checks, caching per-`Λ` enumerations, corpora and `T`.
pub struct Evaluator<'a, F> {
    pub ws: &'a Workspace<F>,
    pub bound_flag: Option<usize>,
    enumerations: RefCell<HashMap<String, Arc<Vec<TripleModule<F>>>>>,
    corpora: RefCell<HashMap<String, Arc<Corpus<F>>>>,
    cotilting: RefCell<HashMap<String, Result<Arc<TwoSidedT<F>>, RssError>>>,
}

impl<'a, F: Field> Evaluator<'a, F> {
    pub fn new(ws: &'a Workspace<F>, bound_flag: Option<usize>) -> Self {
        Evaluator {
            ws,
            bound_flag,
            enumerations: RefCell::default(),
            corpora: RefCell::default(),
            cotilting: RefCell::default(),
        }
    }

    /// `--bound`, then the entry's `bound`, then the manifest's.
    pub fn bound(&self, entry: &Entry<F>) -> Result<usize, CliError> {
        let own = entry.settings.get("bound").and_then(Value::as_integer).map(|n| n.max(0) as usize);
        let b = self.bound_flag.or(own).or(self.ws.bound).unwrap_or(DEFAULT_BOUND);
        if b > MAX_BOUND {
            return Err(CliError::Input(format!("bound {b} exceeds the ceiling {MAX_BOUND}")));
        }
        Ok(b)
    }

    fn lambda_entry(&self, id: &str) -> Result<(&'a Entry<F>, &'a Arc<TriangularAlgebra<F>>), CliError> {
        let e = self.ws.entry(id).map_err(CliError::Input)?;
        match &e.object {
            Object::Lambda(l) => Ok((e, l)),
            _ => Err(CliError::Input(format!("{id:?} is not a lambda"))),
        }
    }

    /// Indecomposable `Λ`-modules up to the bound, as triples.
    pub fn enumeration(&self, id: &str) -> Result<Arc<Vec<TripleModule<F>>>, CliError> {
        if let Some(e) = self.enumerations.borrow().get(id) {
            return Ok(e.clone());
        }
        let (entry, lam) = self.lambda_entry(id)?;
        let bound = self.bound(entry)?;
        let triples = enumerate_indecomposables(&lam.flat, bound)
            .map_err(fail)?
            .iter()
            .map(|n| flat_to_triple(lam, n).map(|t| t.0))
            .collect::<Result<Vec<_>, _>>()
            .map_err(fail)?;
        let triples = Arc::new(triples);
        self.enumerations.borrow_mut().insert(id.to_string(), triples.clone());
        Ok(triples)
    }

    /// The corpus of a `Λ`: enumerated up to the bound, or with `corpus =
    /// "listed"` the triple entries over it together with `A`- and
    /// `B`-modules up to `side_bound`.
    pub fn corpus(&self, id: &str) -> Result<Arc<Corpus<F>>, CliError> {
        if let Some(c) = self.corpora.borrow().get(id) {
            return Ok(c.clone());
        }
        let (entry, lam) = self.lambda_entry(id)?;
        let corpus = match entry.settings.get("corpus").and_then(Value::as_str).unwrap_or("enumerate") {
            "enumerate" => Corpus::indecomposables(lam, self.bound(entry)?).map_err(fail)?,
            "listed" => {
                let side = entry.settings.get("side_bound").and_then(Value::as_integer).map(|n| n.max(0) as usize);
                let side = match side {
                    Some(s) => s,
                    None => self.bound(entry)?,
                };
                let named = |prefix: &str, xs: Vec<Module<F>>| -> Vec<(String, Module<F>)> {
                    xs.into_iter().enumerate().map(|(i, x)| (format!("{prefix}{i}"), x)).collect()
                };
                let a = named("a", enumerate_indecomposables(&lam.a, side).map_err(fail)?);
                let b = named("b", enumerate_indecomposables(&lam.b, side).map_err(fail)?);
                let (mut s, mut f) = (Vec::new(), Vec::new());
                for (tid, t) in self.ws.triples_over(id) {
                    if in_s(t) {
                        s.push((tid.to_string(), t.clone()));
                    }
                    if in_f(t).map_err(fail)? {
                        f.push((tid.to_string(), t.clone()));
                    }
                }
                Corpus { a, b, s, f }
            }
            other => return Err(CliError::Input(format!("unknown corpus mode {other:?}"))),
        };
        let corpus = Arc::new(corpus);
        self.corpora.borrow_mut().insert(id.to_string(), corpus.clone());
        Ok(corpus)
    }

    pub fn two_sided_t(&self, id: &str) -> Result<Result<Arc<TwoSidedT<F>>, RssError>, CliError> {
        if let Some(t) = self.cotilting.borrow().get(id) {
            return Ok(t.clone());
        }
        let (_, lam) = self.lambda_entry(id)?;
        let t = exchangeable_t(lam).map(Arc::new);
        self.cotilting.borrow_mut().insert(id.to_string(), t.clone());
        Ok(t)
    }

    pub fn evaluate(&self, entry: &Entry<F>, check: &str) -> Eval {
        if !known_checks(entry.kind).contains(&check) {
            return Err(CliError::Input(format!("unknown check {check:?} for a {}", entry.kind.name())));
        }
        match &entry.object {
            Object::Algebra(a) => Ok(match check {
                "dim" => Actual::Int(a.dim()),
                "vertices" => Actual::Int(a.vertex_count()),
                "frobenius" => Actual::Bool(is_frobenius(a).map_err(fail)?),
                _ => Actual::Bool(is_selfinjective(a).map_err(fail)?),
            }),
            Object::Bimodule(m) => bimodule_check(m, check),
            Object::Lambda(lam) => self.lambda_check(&entry.id, lam, check),
            Object::Module(m) => module_check(m, check),
            Object::Triple { lambda, triple } => self.triple_check(lambda, triple, check),
            Object::Hom { space_dim, matrix, .. } => Ok(match (check, matrix) {
                ("dim", _) => Actual::Int(*space_dim),
                (_, Some(m)) => Actual::Int(m.rank()),
                (_, None) => Actual::Refused("the entry gives no matrix".into()),
            }),
        }
    }

    fn lambda_check(&self, id: &str, lam: &Arc<TriangularAlgebra<F>>, check: &str) -> Eval {
        Ok(match check {
            "dim" => Actual::Int(lam.flat.dim()),
            "left-projective" | "right-projective" | "ip" | "exchangeable" => return bimodule_check(&lam.m, check),
            "enumerate.total" => Actual::Int(self.enumeration(id)?.len()),
            "enumerate.s" => Actual::Int(self.enumeration(id)?.iter().filter(|t| in_s(t)).count()),
            "enumerate.f" => {
                let mut n = 0;
                for t in self.enumeration(id)?.iter() {
                    n += usize::from(in_f(t).map_err(fail)?);
                }
                Actual::Int(n)
            }
            "frobenius-s" => match s_is_frobenius(lam) {
                Ok(b) => Actual::Bool(b),
                Err(e) => return mono_refusal(e),
            },
            "cotilting" => match cotilting_t(lam) {
                Ok(_) => Actual::Bool(true),
                Err(MonoError::Invariant(_)) => Actual::Bool(false),
                Err(e) => return mono_refusal(e),
            },
            "perp-equals-s" => {
                let t = match cotilting_t(lam) {
                    Ok(t) => t,
                    Err(e) => return mono_refusal(e),
                };
                let mut ok = true;
                for x in self.enumeration(id)?.iter() {
                    ok &= in_perp(&x.to_flat(), &t).map_err(fail)? == in_s(x);
                }
                Actual::Bool(ok)
            }
            "ext-identities" => Actual::Bool(ext_identities_hold(lam, &*self.corpus(id)?)?),
            "mimo" => Actual::Bool(self.mimo_holds(id)?),
            "recollement" => match verify_recollement(lam, &*self.corpus(id)?) {
                Ok(r) => Actual::Bool(r.all_passed()),
                Err(e) => return stable_refusal(e),
            },
            "stable-counts" => match verify_recollement(lam, &*self.corpus(id)?) {
                Ok(r) => Actual::List(vec![r.counts.a, r.counts.s, r.counts.b]),
                Err(e) => return stable_refusal(e),
            },
            "end-iso" => match self.two_sided_t(id)? {
                Ok(t) => match end_iso_check(&t) {
                    Ok(_) => Actual::Bool(true),
                    Err(RssError::Certificate(_)) => Actual::Bool(false),
                    Err(e) => return rss_refusal(e),
                },
                Err(e) => return rss_refusal(e),
            },
            "rss" => match self.two_sided_t(id)? {
                Ok(t) => Actual::Bool(verify_rss_property(&t.functor(), &*self.corpus(id)?).map_err(fail)?.all_passed()),
                Err(e) => return rss_refusal(e),
            },
            "nakayama-rss" => {
                let report = verify_rss_property(&DualHomFunctor::nakayama(lam), &*self.corpus(id)?).map_err(fail)?;
                Actual::Bool(report.all_passed())
            }
            "appendix-identities" => match self.two_sided_t(id)? {
                Ok(t) => Actual::Bool(appendix_identities_hold(&t, &*self.corpus(id)?)?),
                Err(e) => return rss_refusal(e),
            },
            _ => Actual::Int(rss_obstructions(lam, &*self.corpus(id)?).map_err(fail)?.len()),
        })
    }

    /// `mimo(t)` lies in `S`, is right minimal, does not depend on the
    /// extension chosen, and every map from a corpus object of `S` to `t`
    /// factors through it.
    fn mimo_holds(&self, id: &str) -> Result<bool, CliError> {
        let corpus = self.corpus(id)?;
        for t in self.enumeration(id)?.iter() {
            let ap = mimo(t).map_err(fail)?;
            if !in_s(&ap.object) || !ap.minimal {
                return Ok(false);
            }
            if let Some((ik, e)) = other_extension(t, &ap)? {
                let other = mimo_with_extension(t, &ik, &e).map_err(fail)?;
                if is_isomorphic(&ap.object.to_flat(), &other.object.to_flat()).map_err(fail)?.is_none() {
                    return Ok(false);
                }
            }
            let (target, through, p) = (t.to_flat(), ap.object.to_flat(), ap.map.to_flat());
            for (_, s) in &corpus.s {
                let sf = s.to_flat();
                for f in hom_basis(&sf, &target).map_err(fail)? {
                    if factor_through(&sf, &through, &p, &f).map_err(fail)?.is_none() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn triple_check(&self, lambda: &str, t: &TripleModule<F>, check: &str) -> Eval {
        Ok(match check {
            "dim" => Actual::Int(t.dim()),
            "indecomposable" => Actual::Bool(is_indecomposable(&t.to_flat()).map_err(fail)?),
            "in-s" => Actual::Bool(in_s(t)),
            "in-f" => Actual::Bool(in_f(t).map_err(fail)?),
            _ => {
                let tb = match self.two_sided_t(lambda)? {
                    Ok(tb) => tb,
                    Err(e) => return rss_refusal(e),
                };
                let image = match rss_functor(&tb, t) {
                    Ok(i) => i.to_flat(),
                    Err(e) => return rss_refusal(e),
                };
                for (tid, other) in self.ws.triples_over(lambda) {
                    if in_f(other).map_err(fail)? && is_isomorphic(&image, &other.to_flat()).map_err(fail)?.is_some() {
                        return Ok(Actual::Text(tid.to_string()));
                    }
                }
                Actual::Text("none".into())
            }
        })
    }
}

/// A second extension `e′ ≠ e` for building `Mimo(φ)`: `e + h` with `h`
/// vanishing on `Ker φ`, or else `g·e` for an automorphism `g ≠ 1` of the
/// envelope. `None` when the envelope is zero or no other choice exists.
pub fn other_extension<F: Field>(
    t: &TripleModule<F>,
    ap: &Approximation<F>,
) -> Result<Option<(Module<F>, Matrix<F>)>, CliError> {
    let (k, incl) = t.tensor.submodule(&t.phi.kernel());
    let (ik, _) = injective_envelope(&k).map_err(fail)?;
    if ik.is_zero() {
        return Ok(None);
    }
    let e = &ap.extension;
    for h in hom_basis(&t.tensor, &ik).map_err(fail)? {
        if h.mul(&incl).is_zero() && !h.is_zero() {
            return Ok(Some((ik, e.add(&h))));
        }
    }
    let one = Matrix::identity(ik.dim());
    for b in hom_basis(&ik, &ik).map_err(fail)? {
        let g = one.add(&b);
        if g != one && g.inverse().is_some() {
            let e2 = g.mul(e);
            return Ok(Some((ik, e2)));
        }
    }
    Ok(None)
}

fn bimodule_check<F: Field>(m: &Bimodule<F>, check: &str) -> Eval {
    Ok(match check {
        "dim" => Actual::Int(m.dim()),
        "left-projective" => Actual::Bool(is_left_projective(m).map_err(fail)?),
        "right-projective" => Actual::Bool(is_right_projective(m).map_err(fail)?),
        "ip" => Actual::Bool(satisfies_ip(m).map_err(fail)?),
        _ => Actual::Bool(exchangeable_iso(m).map_err(fail)?.is_some()),
    })
}

fn module_check<F: Field>(m: &Module<F>, check: &str) -> Eval {
    Ok(match check {
        "dim" => Actual::Int(m.dim()),
        "indecomposable" => Actual::Bool(is_indecomposable(m).map_err(fail)?),
        "projective" => Actual::Bool(is_projective(m).map_err(fail)?),
        _ => Actual::Bool(is_injective(m).map_err(fail)?),
    })
}

fn x_only<F: Field>(lam: &Arc<TriangularAlgebra<F>>, x: &Module<F>) -> Result<Module<F>, CliError> {
    let t = TripleModule::new(lam, x.clone(), Module::zero(&lam.b), Matrix::zeros(x.dim(), 0)).map_err(fail)?;
    Ok(t.to_flat())
}

fn y_only<F: Field>(lam: &Arc<TriangularAlgebra<F>>, y: &Module<F>) -> Result<Module<F>, CliError> {
    let t = TripleModule::new(lam, Module::zero(&lam.a), y.clone(), Matrix::zeros(0, 0)).map_err(fail)?;
    Ok(t.to_flat())
}

/// `Ext¹_Λ([0;Y], [X;0]) ≅ Hom_A(M ⊗_B Y, X)` for corpus `X`, `Y`, and
/// `Ext^{i+1}_Λ([0;Y], [I;0]) ≅ Ext^i_B(Y, Hom_A(M, I))` for indecomposable
/// injective `I` and `i = 0, 1`.
pub fn ext_identities_hold<F: Field>(lam: &Arc<TriangularAlgebra<F>>, corpus: &Corpus<F>) -> Result<bool, CliError> {
    for (_, y) in &corpus.b {
        let zy = y_only(lam, y)?;
        let (my, _) = tensor_over_b(&lam.m, y).map_err(fail)?;
        for (_, x) in &corpus.a {
            if ext_dim(1, &zy, &x_only(lam, x)?).map_err(fail)? != hom_basis(&my, x).map_err(fail)?.len() {
                return Ok(false);
            }
        }
        for i in indec_injectives(&lam.a).map_err(fail)? {
            let hom = hom_a_m(&lam.m, &i).map_err(fail)?.module;
            let ix = x_only(lam, &i)?;
            for k in 0..2 {
                let rhs = if k == 0 { hom_basis(y, &hom).map_err(fail)?.len() } else { ext_dim(k, y, &hom).map_err(fail)? };
                if ext_dim(k + 1, &zy, &ix).map_err(fail)? != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Hom_Λ([X;0], T) ≅ (DX, D Hom_A(M, X))` and `Hom_Λ([M ⊗ Y; Y]_Id, T) ≅ (0, DY)`
/// as right `Λ`-modules for corpus `X`, `Y`.
pub fn appendix_identities_hold<F: Field>(t: &TwoSidedT<F>, corpus: &Corpus<F>) -> Result<bool, CliError> {
    let lam = &t.lam;
    let lam_r = trimat::monocat::right_lambda(lam).map_err(fail)?;
    let iso = |s: &TripleModule<F>, f: &TripleModule<F>| -> Result<bool, CliError> {
        let lhs = hom_into_t(t, s).map_err(fail)?;
        let rhs = trimat::monocat::duality_f_to_sr(&lam_r, f).map_err(fail)?;
        Ok(is_isomorphic(&lhs.to_flat(), &rhs.to_flat()).map_err(fail)?.is_some())
    };
    for (_, x) in &corpus.a {
        let s = TripleModule::new(lam, x.clone(), Module::zero(&lam.b), Matrix::zeros(x.dim(), 0)).map_err(fail)?;
        if !iso(&s, &TripleModule::coinduced_from_a(lam, x.clone()).map_err(fail)?)? {
            return Ok(false);
        }
    }
    for (_, y) in &corpus.b {
        let s = TripleModule::induced_from_b(lam, y.clone()).map_err(fail)?;
        let f = TripleModule::new(lam, Module::zero(&lam.a), y.clone(), Matrix::zeros(0, 0)).map_err(fail)?;
        if !iso(&s, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}
