//! Acceptance criteria over the example corpus, one line per criterion.
//!
//! Run with `cargo test -p trimat-cli --test acceptance -- --nocapture` to see
//! the lines.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use trimat::algebra::is_selfinjective;
use trimat::bimtri::{flat_to_triple, is_left_projective, is_right_projective, TriangularAlgebra, TripleModule};
use trimat::monocat::{cotilting_t, factor_through, in_f, in_perp, in_s, mimo, mimo_with_extension, s_is_frobenius};
use trimat::repmod::{
    decompose, enumerate_indecomposables, ext_dim, hom_basis, injective_envelope, is_indecomposable, is_injective,
    is_isomorphic, Module,
};
use trimat::rss::{
    end_iso_check, exchangeable_t, rss_functor, rss_obstructions, verify_rss_property, DualHomFunctor,
};
use trimat::stablerec::{functor_i_lower_star, verify_recollement, Corpus, StableS};
use trimat::F2;
use trimat_cli::checks::{appendix_identities_hold, ext_identities_hold, other_extension, Evaluator};
use trimat_cli::workspace::{Manifest, Object, Workspace};

type Outcome = Result<String, String>;

const MANIFESTS: [&str; 5] = ["example-1.5", "example-5.4", "example-5.5", "example-5.6-1", "example-5.6-2"];

fn load(name: &str) -> Workspace<F2> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("{name}.toml"));
    let manifest = Manifest::load(&path).expect("manifest loads");
    Workspace::build(&manifest).expect("manifest builds")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iso(x: &TripleModule<F2>, y: &TripleModule<F2>) -> Result<bool, String> {
    Ok(is_isomorphic(&x.to_flat(), &y.to_flat()).map_err(err)?.is_some())
}

fn triple<'a>(ws: &'a Workspace<F2>, id: &str) -> Result<&'a TripleModule<F2>, String> {
    Ok(ws.triple(id)?.1)
}

/// Every `lambda` entry of every manifest, with its corpus.
struct CorpusLambda {
    label: String,
    lam: Arc<TriangularAlgebra<F2>>,
    corpus: Arc<Corpus<F2>>,
}

fn corpus_lambdas() -> Result<Vec<CorpusLambda>, String> {
    let mut out = Vec::new();
    for name in MANIFESTS {
        let ws = load(name);
        let ev = Evaluator::new(&ws, None);
        for e in &ws.entries {
            if let Object::Lambda(lam) = &e.object {
                let corpus = ev.corpus(&e.id).map_err(err)?;
                out.push(CorpusLambda { label: format!("{name}/{}", e.id), lam: lam.clone(), corpus });
            }
        }
    }
    Ok(out)
}

/// Corpus triples of `S` and `F` together with pairwise direct sums of the
/// first few, so that every `Λ` has modules outside `S` as well.
fn test_modules(c: &CorpusLambda) -> Result<Vec<TripleModule<F2>>, String> {
    let mut base: Vec<TripleModule<F2>> = Vec::new();
    for (_, t) in c.corpus.s.iter().chain(&c.corpus.f) {
        let mut seen = false;
        for b in &base {
            seen |= iso(b, t)?;
        }
        if !seen {
            base.push(t.clone());
        }
    }
    let few = &base[..base.len().min(6)];
    let mut sums = Vec::new();
    for (i, x) in few.iter().enumerate() {
        for y in &few[i..] {
            let (fx, fy) = (x.to_flat(), y.to_flat());
            let sum = Module::direct_sum(&[&fx, &fy]).map_err(err)?;
            sums.push(flat_to_triple(&c.lam, &sum).map_err(err)?.0);
        }
    }
    base.extend(sums);
    Ok(base)
}

/// Names `ab/c` of the dimension vectors `(V1, V2, V3)` used for the two
/// three-vertex algebras: `a = dim V2`, `b = dim V1`, `c = dim V3`.
fn three_vertex_name(t: &TripleModule<F2>) -> Result<String, String> {
    let d = t.to_flat().dim_vector().map_err(err)?;
    Ok(format!("{}{}/{}", d[1], d[0], d[2]))
}

fn counts_on_the_path_algebra_with_a_sink() -> Outcome {
    let ws = load("example-5.6-1");
    let ev = Evaluator::new(&ws, Some(3));
    let all = ev.enumeration("lambda").map_err(err)?;
    let mut s = BTreeSet::new();
    let mut f = BTreeSet::new();
    for t in all.iter() {
        if in_s(t) {
            s.insert(three_vertex_name(t)?);
        }
        if in_f(t).map_err(err)? {
            f.insert(three_vertex_name(t)?);
        }
    }
    ensure(all.len() == 6, || format!("{} indecomposables, expected 6", all.len()))?;
    let want_s: BTreeSet<String> = ["01/0", "11/0", "01/1", "11/1", "10/0"].map(String::from).into();
    let want_f: BTreeSet<String> = ["01/1", "11/1", "00/1", "10/0"].map(String::from).into();
    ensure(s == want_s, || format!("S objects {s:?}"))?;
    ensure(f == want_f, || format!("F objects {f:?}"))?;
    Ok("6 indecomposables, 5 in S and 4 in F with the listed dimension vectors".into())
}

fn hom_obstruction_without_exchangeability() -> Outcome {
    let ws = load("example-5.6-2");
    let p2 = triple(&ws, "11/0")?.to_flat();
    let to_mixed = hom_basis(&p2, &triple(&ws, "10/1")?.to_flat()).map_err(err)?.len();
    let to_simple = hom_basis(&p2, &triple(&ws, "00/1")?.to_flat()).map_err(err)?.len();
    ensure(to_mixed >= 1 && to_simple == 0, || format!("dim Hom = {to_mixed} and {to_simple}"))?;
    let ev = Evaluator::new(&ws, None);
    let lam = ws.lambda("lambda")?;
    let obstructions = rss_obstructions(lam, &*ev.corpus("lambda").map_err(err)?).map_err(err)?;
    ensure(!obstructions.is_empty(), || "no obstruction found over the corpus".into())?;
    Ok(format!("dim Hom(11/0, 10/1) = {to_mixed}, dim Hom(11/0, 00/1) = 0; {}", obstructions[0]))
}

fn dual_numbers_equivalence() -> Outcome {
    let ws = load("example-5.5");
    let ev = Evaluator::new(&ws, Some(4));
    let lam = ws.lambda("lambda")?;
    let all = ev.enumeration("lambda").map_err(err)?;
    let n_s = all.iter().filter(|t| in_s(t)).count();
    let mut n_f = 0;
    for t in all.iter() {
        n_f += usize::from(in_f(t).map_err(err)?);
    }
    ensure((n_s, n_f) == (3, 3), || format!("S count {n_s}, F count {n_f}"))?;
    let corpus = ev.corpus("lambda").map_err(err)?;
    let nakayama = verify_rss_property(&DualHomFunctor::nakayama(lam), &corpus).map_err(err)?;
    ensure(nakayama.all_passed(), || format!("Nakayama functor:\n{nakayama}"))?;
    let t = exchangeable_t(lam).map_err(err)?;
    let report = verify_rss_property(&t.functor(), &corpus).map_err(err)?;
    ensure(report.all_passed(), || format!("D Hom(-, T):\n{report}"))?;
    // 1 ↦ 2/1, 1/1 ↦ the middle module, 2/1/1 ↦ 2
    for (s, f) in [("s-1", "f-2-1"), ("s-1-1", "f-212-1"), ("s-2-1-1", "f-2")] {
        let image = rss_functor(&t, triple(&ws, s)?).map_err(err)?;
        ensure(iso(&image, triple(&ws, f)?)?, || format!("{s} is not sent to {f}"))?;
    }
    Ok("3 objects in S and in F; both functors are RSS equivalences; object map as listed".into())
}

fn diagonal_product_pairing() -> Outcome {
    let ws = load("example-5.4");
    let lam = ws.lambda("lambda")?;
    let t = exchangeable_t(lam).map_err(err)?;
    let mut images = BTreeSet::new();
    let mut pairs = 0;
    for e in &ws.entries {
        let Object::Triple { triple: tr, .. } = &e.object else { continue };
        ensure(is_indecomposable(&tr.to_flat()).map_err(err)?, || format!("{} decomposes", e.id))?;
        if e.id.starts_with("s:") {
            ensure(in_s(tr), || format!("{} is not in S", e.id))?;
            let target = e.expected.get("rss-image").and_then(|v| v.as_str()).ok_or("missing pairing")?;
            let image = rss_functor(&t, tr).map_err(err)?;
            ensure(iso(&image, triple(&ws, target)?)?, || format!("{} is not sent to {target}", e.id))?;
            images.insert(target.to_string());
            pairs += 1;
        } else {
            ensure(in_f(tr).map_err(err)?, || format!("{} is not in F", e.id))?;
        }
    }
    ensure(pairs == 12 && images.len() == 12, || format!("{pairs} pairs onto {} images", images.len()))?;
    let ev = Evaluator::new(&ws, None);
    let nakayama = verify_rss_property(&DualHomFunctor::nakayama(lam), &*ev.corpus("lambda").map_err(err)?).map_err(err)?;
    ensure(!nakayama.all_passed(), || "the Nakayama functor passed".into())?;
    Ok("12 S-objects sent bijectively onto the 12 F-objects in matching positions; Nakayama functor fails".into())
}

fn cotilting_perpendicular_category() -> Outcome {
    let mut detail = Vec::new();
    for c in corpus_lambdas()? {
        if !is_right_projective(&c.lam.m).map_err(err)? {
            continue;
        }
        let t = cotilting_t(&c.lam).map_err(err)?;
        // the invariants, recomputed here rather than trusted
        let m = &t.module;
        ensure(ext_dim(1, m, m).map_err(err)? == 0, || format!("{}: Ext¹(T, T) ≠ 0", c.label))?;
        let (e, iota) = injective_envelope(m).map_err(err)?;
        let cosyzygy = e.quotient(&iota.matrix.image()).0;
        ensure(is_injective(&cosyzygy).map_err(err)?, || format!("{}: inj.dim T > 1", c.label))?;
        let classes = decompose(m).map_err(err)?.classes.len();
        ensure(classes == c.lam.flat.vertex_count(), || format!("{}: {classes} summand classes", c.label))?;
        let (mut members, mut others) = (0, 0);
        for l in test_modules(&c)? {
            let member = in_s(&l);
            ensure(member == in_perp(&l.to_flat(), &t).map_err(err)?, || format!("{}: disagreement", c.label))?;
            if member {
                members += 1;
            } else {
                others += 1;
            }
        }
        ensure(others >= 3, || format!("{}: only {others} modules outside S", c.label))?;
        detail.push(format!("{} {members}+{others}", c.label));
    }
    Ok(format!("S = ⊥T on {}", detail.join(", ")))
}

fn ext_dimension_identities() -> Outcome {
    let mut n = 0;
    for c in corpus_lambdas()? {
        ensure(ext_identities_hold(&c.lam, &c.corpus).map_err(err)?, || format!("{} fails", c.label))?;
        n += 1;
    }
    Ok(format!("both identities hold on {n} algebras"))
}

fn frobenius_criterion() -> Outcome {
    let mut rows = Vec::new();
    for c in corpus_lambdas()? {
        let predicate = s_is_frobenius(&c.lam).map_err(err)?;
        let conditions = is_selfinjective(&c.lam.a).map_err(err)?
            && is_selfinjective(&c.lam.b).map_err(err)?
            && is_left_projective(&c.lam.m).map_err(err)?;
        ensure(predicate == conditions, || format!("{}: {predicate} vs {conditions}", c.label))?;
        rows.push(format!("{} {predicate}", c.label));
    }
    Ok(rows.join(", "))
}

fn recollement_on_dual_numbers() -> Outcome {
    let ws = load("example-5.5");
    let ev = Evaluator::new(&ws, Some(4));
    let lam = ws.lambda("lambda")?;
    let corpus = ev.corpus("lambda").map_err(err)?;
    let report = verify_recollement(lam, &corpus).map_err(err)?;
    ensure(report.all_passed(), || report.to_string())?;
    let c = &report.counts;
    ensure((c.a, c.s, c.b) == (1, 1, 0), || format!("stable counts {:?}", (c.a, c.s, c.b)))?;
    // i_* sends the stable A-object onto the unique stable S-object
    let stable = StableS::new(lam).map_err(err)?;
    let mut nonzero = Vec::new();
    for (_, t) in &corpus.s {
        if !stable.is_injective_object(t).map_err(err)? {
            nonzero.push(t.clone());
        }
    }
    let (_, simple) = corpus.a.iter().find(|(_, x)| x.dim() == 1).ok_or("no simple A-module")?;
    let pushed = functor_i_lower_star(lam, simple).map_err(err)?;
    ensure(nonzero.len() == 1, || format!("{} stable S-objects", nonzero.len()))?;
    ensure(stable.stably_isomorphic(&pushed, &nonzero[0]).map_err(err)?, || "i_* misses the S-object".into())?;
    Ok(format!("{} checks pass; stable counts A 1, S 1, B 0; i_* hits the S-object", report.checks.len()))
}

fn appendix_identities() -> Outcome {
    let mut n = 0;
    for c in corpus_lambdas()? {
        let Ok(t) = exchangeable_t(&c.lam) else { continue };
        ensure(appendix_identities_hold(&t, &c.corpus).map_err(err)?, || format!("{} fails", c.label))?;
        n += 1;
    }
    ensure(n >= 4, || format!("only {n} exchangeable algebras"))?;
    Ok(format!("both identities hold on {n} exchangeable algebras"))
}

fn endomorphism_certificate() -> Outcome {
    let mut rows = Vec::new();
    for c in corpus_lambdas()? {
        let Ok(t) = exchangeable_t(&c.lam) else { continue };
        let cert = end_iso_check(&t).map_err(err)?;
        ensure(cert.end_dim == c.lam.flat.dim() && cert.lambda_dim == c.lam.flat.dim(), || {
            format!("{}: dim End(T) = {}", c.label, cert.end_dim)
        })?;
        rows.push(format!("{} {}", c.label, cert.end_dim));
    }
    ensure(!rows.is_empty(), || "no exchangeable algebra".into())?;
    Ok(format!("dim End(T) = dim Λ: {}", rows.join(", ")))
}

fn mimo_properties() -> Outcome {
    let (mut objects, mut alternatives) = (0, 0);
    for c in corpus_lambdas()? {
        let bound = 3.min(c.lam.flat.dim());
        let mut triples: Vec<TripleModule<F2>> = c.corpus.s.iter().chain(&c.corpus.f).map(|(_, t)| t.clone()).collect();
        if c.corpus.s.is_empty() {
            for n in enumerate_indecomposables(&c.lam.flat, bound).map_err(err)? {
                triples.push(flat_to_triple(&c.lam, &n).map_err(err)?.0);
            }
        }
        for t in &triples {
            let ap = mimo(t).map_err(err)?;
            ensure(in_s(&ap.object) && ap.minimal, || format!("{}: Mimo not minimal in S", c.label))?;
            let (target, through, p) = (t.to_flat(), ap.object.to_flat(), ap.map.to_flat());
            for (name, s) in &c.corpus.s {
                let sf = s.to_flat();
                for f in hom_basis(&sf, &target).map_err(err)? {
                    let lifted = factor_through(&sf, &through, &p, &f).map_err(err)?;
                    ensure(lifted.is_some(), || format!("{}: a map from {name} does not factor", c.label))?;
                }
            }
            if let Some((ik, e)) = other_extension(t, &ap).map_err(err)? {
                ensure(e != ap.extension, || "the second extension equals the first".into())?;
                let other = mimo_with_extension(t, &ik, &e).map_err(err)?;
                ensure(iso(&ap.object, &other.object)?, || format!("{}: the two choices differ", c.label))?;
                alternatives += 1;
            }
            objects += 1;
        }
    }
    ensure(alternatives > 0, || "no triple admits a second extension".into())?;
    Ok(format!("{objects} triples; {alternatives} rebuilt with a second extension, isomorphic"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "counts on 2 -> 1 <- 3", budget: secs(5), run: counts_on_the_path_algebra_with_a_sink },
        Criterion { name: "Hom obstruction for M = S(2)", budget: secs(1), run: hom_obstruction_without_exchangeability },
        Criterion { name: "dual numbers over k", budget: secs(10), run: dual_numbers_equivalence },
        Criterion { name: "diagonal product pairing", budget: secs(30), run: diagonal_product_pairing },
        Criterion { name: "cotilting T and S = ⊥T", budget: secs(30), run: cotilting_perpendicular_category },
        Criterion { name: "Ext dimension identities", budget: secs(10), run: ext_dimension_identities },
        Criterion { name: "Frobenius criterion for S", budget: secs(10), run: frobenius_criterion },
        Criterion { name: "recollement of stable categories", budget: secs(10), run: recollement_on_dual_numbers },
        Criterion { name: "Hom into T identities", budget: secs(10), run: appendix_identities },
        Criterion { name: "End(T) certificate", budget: secs(10), run: endomorphism_certificate },
        Criterion { name: "Mimo approximations", budget: secs(20), run: mimo_properties },
    ];
    let mut failed = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match &outcome {
            Ok(d) if elapsed <= c.budget => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("over the {:?} budget: {d}", c.budget)),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("criterion {:>2} {status} {} [{} ms] {detail}", i + 1, c.name, elapsed.as_millis());
        if status == "FAIL" {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
