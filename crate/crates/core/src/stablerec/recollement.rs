use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::indec_injectives;
use crate::bimtri::{flat_to_triple, satisfies_ip, TriangularAlgebra, TripleModule};
use crate::exactla::{Field, Matrix};
use crate::monocat::{in_f, in_s, s_is_frobenius};
use crate::repmod::{enumerate_indecomposables, hom_basis, is_injective, Module};

use super::{
    functor_i_lower_star, functor_i_upper_star, functor_j_lower_shriek, functor_j_lower_star, induced_map,
    j_lower_shriek_map, lift_to_j_lower_star, module_cosyzygy, stable_hom, stably_isomorphic_modules, StableError,
    StableHomSpace, StableMode, StableS,
};

type Res<T> = Result<T, StableError>;

/// Named objects of `A-mod`, `B-mod`, `S(A, M, B)` and `F(A, M, B)` to check against.
#[derive(Clone, Debug)]
pub struct Corpus<F> {
    pub a: Vec<(String, Module<F>)>,
    pub b: Vec<(String, Module<F>)>,
    pub s: Vec<(String, TripleModule<F>)>,
    pub f: Vec<(String, TripleModule<F>)>,
}

fn label(prefix: &str, i: usize, x: &Module<impl Field>) -> Res<String> {
    let dv: Vec<String> = x.dim_vector()?.iter().map(usize::to_string).collect();
    Ok(format!("{prefix}{i}({})", dv.join(",")))
}

impl<F: Field> Corpus<F> {
    /// All indecomposables of dimension at most `bound`, those of `Λ` sorted
    /// into `S` and `F`.
    pub fn indecomposables(lam: &Arc<TriangularAlgebra<F>>, bound: usize) -> Res<Self> {
        let named = |prefix: &str, xs: Vec<Module<F>>| -> Res<Vec<(String, Module<F>)>> {
            xs.into_iter().enumerate().map(|(i, x)| Ok((label(prefix, i, &x)?, x))).collect()
        };
        let a = named("a", enumerate_indecomposables(&lam.a, bound)?)?;
        let b = named("b", enumerate_indecomposables(&lam.b, bound)?)?;
        let (mut s, mut f) = (Vec::new(), Vec::new());
        for n in enumerate_indecomposables(&lam.flat, bound)? {
            let t = flat_to_triple(lam, &n)?.0;
            if in_f(&t)? {
                f.push((label("f", f.len(), &n)?, t.clone()));
            }
            if in_s(&t) {
                s.push((label("s", s.len(), &n)?, t));
            }
        }
        Ok(Corpus { a, b, s, f })
    }
}

/// One row of the report.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    /// The first object or pair on which the check failed.
    pub witness: Option<String>,
    /// How much was checked, e.g. the number of pairs and the stable dimensions seen.
    pub ledger: String,
}

/// Corpus objects that are nonzero in each stable category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StableCounts {
    pub a: usize,
    pub s: usize,
    pub b: usize,
}

#[derive(Clone, Debug)]
pub struct RecollementReport {
    pub checks: Vec<AxiomCheck>,
    pub counts: StableCounts,
}

impl RecollementReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for RecollementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.axiom.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{:width$}  {status}  {}", c.axiom, c.ledger)?;
            if let Some(w) = &c.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "stable indecomposables: A-mod {}, S {}, B-mod {}",
            self.counts.a, self.counts.s, self.counts.b
        )
    }
}

struct Tally {
    axiom: String,
    checked: usize,
    squares: usize,
    dims: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(axiom: &str) -> Self {
        Tally { axiom: axiom.to_string(), checked: 0, squares: 0, dims: 0, witness: None }
    }

    fn fail(&mut self, w: String) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    fn finish(self, what: &str) -> AxiomCheck {
        let mut ledger = format!("{} {what}, total stable dim {}", self.checked, self.dims);
        if self.squares > 0 {
            ledger.push_str(&format!(", {} naturality squares", self.squares));
        }
        AxiomCheck { axiom: self.axiom, passed: self.witness.is_none(), witness: self.witness, ledger }
    }
}

/// Stable spaces for all pairs, computed in parallel over the first index.
fn table<F: Field>(
    nx: usize,
    ny: usize,
    space: &(impl Fn(usize, usize) -> Res<StableHomSpace<F>> + Sync),
) -> Res<Vec<Vec<StableHomSpace<F>>>> {
    (0..nx).into_par_iter().map(|x| (0..ny).map(|y| space(x, y)).collect()).collect()
}

/// An adjoint pair `(F, G)` with `θ: Hom(Fx, y) → Hom(x, Gy)`: `θ` must
/// induce bijections of stable Hom spaces, natural in `y` along
/// `second(y, y')`, which lists maps `v: y → y'` paired with `G(v)`.
#[allow(clippy::too_many_arguments)]
fn check_adjunction<F: Field>(
    axiom: &str,
    xs: &[String],
    ys: &[String],
    src: impl Fn(usize, usize) -> Res<StableHomSpace<F>> + Sync,
    tgt: impl Fn(usize, usize) -> Res<StableHomSpace<F>> + Sync,
    theta: impl Fn(usize, usize, &Matrix<F>) -> Res<Matrix<F>> + Sync,
    second: impl Fn(usize, usize) -> Res<Vec<(Matrix<F>, Matrix<F>)>> + Sync,
) -> Res<AxiomCheck> {
    let (nx, ny) = (xs.len(), ys.len());
    let src_t = table(nx, ny, &src)?;
    let tgt_t = table(nx, ny, &tgt)?;
    let mut tally = Tally::new(axiom);
    for x in 0..nx {
        for y in 0..ny {
            let (s, t) = (&src_t[x][y], &tgt_t[x][y]);
            tally.checked += 1;
            tally.dims += s.quotient_dim;
            if s.quotient_dim != t.quotient_dim || !induced_map(s, t, |g| theta(x, y, g))?.is_bijection() {
                tally.fail(format!("({}, {}): stable dims {} vs {}", xs[x], ys[y], s.quotient_dim, t.quotient_dim));
            }
        }
    }
    let squares: Vec<Res<(usize, Option<String>)>> = (0..ny)
        .into_par_iter()
        .map(|y| {
            let mut count = 0;
            for y2 in 0..ny {
                let maps = second(y, y2)?;
                for x in 0..nx {
                    for (v, gv) in &maps {
                        for g in &src_t[x][y].plain_hom {
                            count += 1;
                            let lhs = theta(x, y2, &v.mul(g))?;
                            let rhs = gv.mul(&theta(x, y, g)?);
                            if !tgt_t[x][y2].is_stably_zero(&lhs.sub(&rhs)) {
                                return Ok((count, Some(format!("{} with {} → {}", xs[x], ys[y], ys[y2]))));
                            }
                        }
                    }
                }
            }
            Ok((count, None))
        })
        .collect();
    for r in squares {
        let (count, w) = r?;
        tally.squares += count;
        if let Some(w) = w {
            tally.fail(format!("naturality at {w}"));
        }
    }
    Ok(tally.finish("pairs"))
}

/// A functor must induce bijections `Hom(x, x') → Hom(Fx, Fx')` on stable
/// Hom spaces.
fn check_fully_faithful<F: Field>(
    axiom: &str,
    xs: &[String],
    src: impl Fn(usize, usize) -> Res<StableHomSpace<F>> + Sync,
    tgt: impl Fn(usize, usize) -> Res<StableHomSpace<F>> + Sync,
    on_maps: impl Fn(usize, usize, &Matrix<F>) -> Res<Matrix<F>> + Sync,
) -> Res<AxiomCheck> {
    let n = xs.len();
    let src_t = table(n, n, &src)?;
    let tgt_t = table(n, n, &tgt)?;
    let mut tally = Tally::new(axiom);
    for x in 0..n {
        for y in 0..n {
            tally.checked += 1;
            tally.dims += src_t[x][y].quotient_dim;
            if !induced_map(&src_t[x][y], &tgt_t[x][y], |h| on_maps(x, y, h))?.is_bijection() {
                tally.fail(format!("({}, {})", xs[x], xs[y]));
            }
        }
    }
    Ok(tally.finish("pairs"))
}

fn names<T>(xs: &[(String, T)]) -> Vec<String> {
    xs.iter().map(|(n, _)| n.clone()).collect()
}

fn flat_block_hom<F: Field>(s: &TripleModule<F>, t: &TripleModule<F>) -> Res<Vec<Matrix<F>>> {
    Ok(hom_basis(&s.to_flat(), &t.to_flat())?)
}

/// Checks the recollement of stable categories on every pair of corpus
/// objects: the four adjunctions with naturality in the second variable,
/// full faithfulness of `i_*`, `j_!`, `j_*`, and `Im i_* = Ker j^*`; also
/// that the functors preserve injective objects and commute with cosyzygies.
pub fn verify_recollement<F: Field>(lam: &Arc<TriangularAlgebra<F>>, corpus: &Corpus<F>) -> Res<RecollementReport> {
    if !satisfies_ip(&lam.m)? {
        return Err(StableError::NotIp);
    }
    let ctx = StableS::new(lam)?;
    let a: Vec<Module<F>> = corpus.a.iter().map(|(_, x)| x.retag(&lam.a)).collect::<Result<_, _>>()?;
    let b: Vec<Module<F>> = corpus.b.iter().map(|(_, y)| y.retag(&lam.b)).collect::<Result<_, _>>()?;
    let s: Vec<&TripleModule<F>> = corpus.s.iter().map(|(_, t)| t).collect();
    let (an, bn, sn) = (names(&corpus.a), names(&corpus.b), names(&corpus.s));

    let i_low: Vec<TripleModule<F>> = a.iter().map(|x| functor_i_lower_star(lam, x)).collect::<Res<_>>()?;
    let j_shriek: Vec<TripleModule<F>> = b.iter().map(|y| functor_j_lower_shriek(lam, y)).collect::<Res<_>>()?;
    let j_star: Vec<TripleModule<F>> = b.iter().map(|y| functor_j_lower_star(lam, y)).collect::<Res<_>>()?;
    let coker: Vec<(Module<F>, Matrix<F>)> = s.iter().map(|t| super::cokernel(t)).collect();
    let inj = StableMode::ModInjectives;

    let mut checks = Vec::new();
    checks.push(check_adjunction(
        "R1 (i^*, i_*)",
        &sn,
        &an,
        |t, w| stable_hom(&coker[t].0, &a[w], inj),
        |t, w| ctx.stable_hom(s[t], &i_low[w]),
        |t, _, g| Ok(Matrix::hstack(&[&g.mul(&coker[t].1), &Matrix::zeros(g.nrows(), s[t].y.dim())])),
        |w, w2| Ok(hom_basis(&a[w], &a[w2])?.into_iter().map(|v| (v.clone(), v)).collect()),
    )?);
    checks.push(check_adjunction(
        "R1 (i_*, i^!)",
        &an,
        &sn,
        |w, t| ctx.stable_hom(&i_low[w], s[t]),
        |w, t| stable_hom(&a[w], &s[t].x, inj),
        |w, t, g| Ok(g.block(0, 0, s[t].x.dim(), a[w].dim())),
        |t, t2| {
            let (dx, dx2) = (s[t].x.dim(), s[t2].x.dim());
            Ok(flat_block_hom(s[t], s[t2])?.into_iter().map(|v| (v.clone(), v.block(0, 0, dx2, dx))).collect())
        },
    )?);
    checks.push(check_adjunction(
        "R1 (j_!, j^*)",
        &bn,
        &sn,
        |v, t| ctx.stable_hom(&j_shriek[v], s[t]),
        |v, t| stable_hom(&b[v], &s[t].y, inj),
        |v, t, g| Ok(g.block(s[t].x.dim(), j_shriek[v].x.dim(), s[t].y.dim(), b[v].dim())),
        |t, t2| {
            let (s1, s2) = (s[t], s[t2]);
            Ok(flat_block_hom(s1, s2)?
                .into_iter()
                .map(|v| {
                    let f2 = v.block(s2.x.dim(), s1.x.dim(), s2.y.dim(), s1.y.dim());
                    (v, f2)
                })
                .collect())
        },
    )?);
    checks.push(check_adjunction(
        "R1 (j^*, j_*)",
        &sn,
        &bn,
        |t, y| stable_hom(&s[t].y, &b[y], inj),
        |t, y| ctx.stable_hom(s[t], &j_star[y]),
        |t, y, h| lift_to_j_lower_star(s[t], &j_star[y], h),
        |y, y2| {
            hom_basis(&b[y], &b[y2])?
                .into_iter()
                .map(|v| {
                    let jv = lift_to_j_lower_star(&j_star[y], &j_star[y2], &v)?;
                    Ok((v, jv))
                })
                .collect()
        },
    )?);

    checks.push(check_fully_faithful(
        "R2 i_* fully faithful",
        &an,
        |x, y| stable_hom(&a[x], &a[y], inj),
        |x, y| ctx.stable_hom(&i_low[x], &i_low[y]),
        |_, _, f| Ok(f.clone()),
    )?);
    checks.push(check_fully_faithful(
        "R2 j_! fully faithful",
        &bn,
        |x, y| stable_hom(&b[x], &b[y], inj),
        |x, y| ctx.stable_hom(&j_shriek[x], &j_shriek[y]),
        |x, y, h| Ok(j_lower_shriek_map(&j_shriek[x], &j_shriek[y], h)),
    )?);
    checks.push(check_fully_faithful(
        "R2 j_* fully faithful",
        &bn,
        |x, y| stable_hom(&b[x], &b[y], inj),
        |x, y| ctx.stable_hom(&j_star[x], &j_star[y]),
        |x, y, h| lift_to_j_lower_star(&j_star[x], &j_star[y], h),
    )?);

    let mut r3 = Tally::new("R3 Im i_* = Ker j^*");
    for (k, t) in s.iter().enumerate() {
        if is_injective(&t.y)? {
            r3.checked += 1;
            let image = functor_i_lower_star(lam, &functor_i_upper_star(t))?;
            if !ctx.stably_isomorphic(t, &image)? {
                r3.fail(format!("{} has injective j^* but is not stably [Coker φ; 0]", sn[k]));
            }
        }
    }
    for (k, t) in i_low.iter().enumerate() {
        r3.checked += 1;
        if !t.y.is_zero() {
            r3.fail(format!("j^* i_* {} is nonzero", an[k]));
        }
    }
    checks.push(r3.finish("objects"));

    checks.push(check_injectives_preserved(lam, &ctx)?);

    let mut cos = Tally::new("cosyzygies commute with i_*, j^*");
    for (k, x) in a.iter().enumerate() {
        cos.checked += 1;
        let lhs = ctx.cosyzygy(&i_low[k])?;
        let rhs = functor_i_lower_star(lam, &module_cosyzygy(x)?)?;
        if !ctx.stably_isomorphic(&lhs, &rhs)? {
            cos.fail(format!("i_* at {}", an[k]));
        }
    }
    for (k, t) in s.iter().enumerate() {
        cos.checked += 1;
        let lhs = ctx.cosyzygy(t)?.y;
        if !stably_isomorphic_modules(&lhs, &module_cosyzygy(&t.y)?)? {
            cos.fail(format!("j^* at {}", sn[k]));
        }
    }
    checks.push(cos.finish("objects"));

    if s_is_frobenius(lam)? {
        let mut fr = Tally::new("Frobenius: cosyzygies stay in S");
        for (k, t) in s.iter().enumerate() {
            if !ctx.is_injective_object(t)? {
                fr.checked += 1;
                if !in_s(&ctx.cosyzygy(t)?) {
                    fr.fail(sn[k].clone());
                }
            }
        }
        checks.push(fr.finish("objects"));
    }

    let mut counts = StableCounts { a: 0, s: 0, b: 0 };
    for x in &a {
        counts.a += usize::from(!x.is_zero() && !is_injective(x)?);
    }
    for y in &b {
        counts.b += usize::from(!y.is_zero() && !is_injective(y)?);
    }
    for t in &s {
        counts.s += usize::from(t.dim() > 0 && !ctx.is_injective_object(t)?);
    }
    Ok(RecollementReport { checks, counts })
}

/// `i^*`, `i^!`, `j^*` send injective objects of `S` to injective modules;
/// `i_*`, `j_!`, `j_*` send injective modules to injective objects of `S`.
fn check_injectives_preserved<F: Field>(lam: &Arc<TriangularAlgebra<F>>, ctx: &StableS<F>) -> Res<AxiomCheck> {
    let mut tally = Tally::new("injectives preserved");
    for (k, t) in ctx.injectives.iter().enumerate() {
        tally.checked += 1;
        if !is_injective(&functor_i_upper_star(t))? || !is_injective(&t.x)? || !is_injective(&t.y)? {
            tally.fail(format!("injective object {k} of S"));
        }
    }
    for (k, i) in indec_injectives(&lam.a)?.iter().enumerate() {
        tally.checked += 1;
        if !ctx.is_injective_object(&functor_i_lower_star(lam, i)?)? {
            tally.fail(format!("i_* of injective {k}"));
        }
    }
    for (k, j) in indec_injectives(&lam.b)?.iter().enumerate() {
        tally.checked += 2;
        if !ctx.is_injective_object(&functor_j_lower_shriek(lam, j)?)? {
            tally.fail(format!("j_! of injective {k}"));
        }
        if !ctx.is_injective_object(&functor_j_lower_star(lam, j)?)? {
            tally.fail(format!("j_* of injective {k}"));
        }
    }
    Ok(tally.finish("objects"))
}
