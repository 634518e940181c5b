use std::collections::HashMap;

use crate::exactla::{Field, Matrix, Subspace};

use super::{AlgebraError, Algebra, BasicData};

/// One arrow `label: source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverArrow {
    pub label: String,
    pub source: String,
    pub target: String,
}

/// A term `coeff · path`, the path written as arrow labels in composition
/// order: `["alpha", "beta"]` is `αβ`, i.e. first `β`, then `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<Vec<RelationTerm>>,
}

/// Paths are stored as arrow indices in composition order (leftmost applied last).
type Path = Vec<usize>;

const MAX_PATHS_PER_LENGTH: usize = 20_000;
/// Quotients larger than this are reported as infinite-dimensional.
const MAX_DIM: usize = 2_000;

struct Quiver {
    sources: Vec<usize>,
    targets: Vec<usize>,
    labels: Vec<String>,
    nv: usize,
}

impl Quiver {
    fn source(&self, p: &Path) -> usize {
        self.sources[*p.last().expect("nonempty path")]
    }

    fn target(&self, p: &Path) -> usize {
        self.targets[p[0]]
    }

    fn composable(&self, p: &Path) -> bool {
        p.windows(2).all(|w| self.sources[w[0]] == self.targets[w[1]])
    }

    fn label(&self, p: &Path) -> String {
        p.iter().map(|&a| self.labels[a].as_str()).collect::<Vec<_>>().join("*")
    }

    /// All composable paths of length `len`, sorted by arrow labels.
    fn paths(&self, len: usize, shorter: &[Path]) -> Vec<Path> {
        let mut out = Vec::new();
        for p in shorter {
            for a in 0..self.labels.len() {
                if self.targets[a] == self.source(p) {
                    let mut q = p.clone();
                    q.push(a);
                    out.push(q);
                }
            }
        }
        debug_assert!(out.iter().all(|p| p.len() == len));
        self.sort_paths(&mut out);
        out
    }

    fn sort_paths(&self, paths: &mut [Path]) {
        paths.sort_by(|a, b| {
            let la: Vec<&str> = a.iter().map(|&i| self.labels[i].as_str()).collect();
            let lb: Vec<&str> = b.iter().map(|&i| self.labels[i].as_str()).collect();
            la.cmp(&lb)
        });
    }
}

/// Relations of one length, as coefficient vectors over the paths of that length.
struct GradedIdeal<F> {
    /// `paths[d]`: all paths of length d (d ≥ 1), in canonical order.
    paths: Vec<Vec<Path>>,
    index: Vec<HashMap<Path, usize>>,
    /// `ideal[d]`: the degree-d part of the ideal, over reversed column order.
    ideal: Vec<Subspace<F>>,
}

impl<F: Field> GradedIdeal<F> {
    fn column(&self, d: usize, p: &Path) -> usize {
        // reversed so that echelon pivots land on the lexicographically largest paths
        self.paths[d].len() - 1 - self.index[d][p]
    }
}

/// Builds `kQ/I` for an admissible ideal `I` generated by homogeneous relations.
pub fn path_algebra_quotient<F: Field>(q: &QuiverPresentation) -> Result<Algebra<F>, AlgebraError> {
    let vidx: HashMap<&str, usize> = q.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    if vidx.len() != q.vertices.len() {
        return Err(AlgebraError::Presentation("duplicate vertex label".into()));
    }
    let mut sources = Vec::new();
    let mut targets = Vec::new();
    let mut labels = Vec::new();
    for a in &q.arrows {
        let s = *vidx.get(a.source.as_str()).ok_or_else(|| {
            AlgebraError::Presentation(format!("arrow {} has unknown source {}", a.label, a.source))
        })?;
        let t = *vidx.get(a.target.as_str()).ok_or_else(|| {
            AlgebraError::Presentation(format!("arrow {} has unknown target {}", a.label, a.target))
        })?;
        if labels.contains(&a.label) || vidx.contains_key(a.label.as_str()) {
            return Err(AlgebraError::Presentation(format!("duplicate label {}", a.label)));
        }
        sources.push(s);
        targets.push(t);
        labels.push(a.label.clone());
    }
    let quiver = Quiver { sources, targets, labels, nv: q.vertices.len() };
    let aidx: HashMap<&str, usize> = quiver.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();

    // parse relations into (length, [(coeff, path)])
    let mut relations: Vec<(usize, Vec<(i64, Path)>)> = Vec::new();
    for (ri, rel) in q.relations.iter().enumerate() {
        let mut terms = Vec::new();
        for t in rel {
            let path: Path = t
                .path
                .iter()
                .map(|l| {
                    aidx.get(l.as_str())
                        .copied()
                        .ok_or_else(|| AlgebraError::Presentation(format!("relation {ri}: unknown arrow {l}")))
                })
                .collect::<Result<_, _>>()?;
            if path.len() < 2 {
                return Err(AlgebraError::NotAdmissible(format!(
                    "relation {ri} has a path of length {} (must be at least 2)",
                    path.len()
                )));
            }
            if !quiver.composable(&path) {
                return Err(AlgebraError::Presentation(format!("relation {ri}: path {} is not composable", t.path.join("*"))));
            }
            terms.push((t.coeff, path));
        }
        let Some(first) = terms.first() else { continue };
        let (len, s, tg) = (first.1.len(), quiver.source(&first.1), quiver.target(&first.1));
        for (_, p) in &terms {
            if p.len() != len {
                return Err(AlgebraError::NotAdmissible(format!("relation {ri} is not homogeneous in path length")));
            }
            if quiver.source(p) != s || quiver.target(p) != tg {
                return Err(AlgebraError::Presentation(format!("relation {ri} mixes paths with different endpoints")));
            }
        }
        relations.push((len, terms));
    }

    // degree-by-degree computation of the ideal until every path of some length lies in it
    let mut graded = GradedIdeal::<F> { paths: vec![Vec::new()], index: vec![HashMap::new()], ideal: vec![Subspace::zero(0)] };
    let mut len1: Vec<Path> = (0..quiver.labels.len()).map(|a| vec![a]).collect();
    quiver.sort_paths(&mut len1);
    let mut d = 1;
    let mut current = len1;
    let mut quotient_dim = quiver.nv;
    let nilpotency = loop {
        if current.is_empty() {
            break d;
        }
        if current.len() > MAX_PATHS_PER_LENGTH || quotient_dim > MAX_DIM {
            return Err(AlgebraError::InfiniteDimensional);
        }
        let index: HashMap<Path, usize> = current.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        graded.paths.push(current.clone());
        graded.index.push(index);
        let n = current.len();
        let mut gens: Vec<Vec<F>> = Vec::new();
        for (rlen, terms) in &relations {
            if *rlen > d {
                continue;
            }
            let extra = d - rlen;
            // u · ρ · v with len(u) + len(v) = extra
            for ulen in 0..=extra {
                let vlen = extra - ulen;
                let us = paths_or_vertices(&graded, &quiver, ulen);
                let vs = paths_or_vertices(&graded, &quiver, vlen);
                let (rs, rt) = (quiver.source(&terms[0].1), quiver.target(&terms[0].1));
                for u in &us {
                    if u.src(&quiver) != rt {
                        continue;
                    }
                    for v in &vs {
                        if v.tgt(&quiver) != rs {
                            continue;
                        }
                        let mut vec = vec![F::zero(); n];
                        for (c, p) in terms {
                            let mut full = u.path().to_vec();
                            full.extend_from_slice(p);
                            full.extend_from_slice(v.path());
                            let col = graded.column(d, &full);
                            vec[col] += F::from_i64(*c);
                        }
                        gens.push(vec);
                    }
                }
            }
        }
        let ideal = Subspace::from_vectors(n, gens);
        let full = ideal.is_full();
        quotient_dim += n - ideal.dim();
        graded.ideal.push(ideal);
        if full {
            break d;
        }
        d += 1;
        current = quiver.paths(d, &graded.paths[d - 1]);
    };

    // basis: vertices, then standard paths (non-pivot columns) by length
    let mut basis_paths: Vec<(usize, Option<Path>)> = (0..quiver.nv).map(|v| (v, None)).collect();
    for len in 1..nilpotency {
        let ideal = &graded.ideal[len];
        let n = graded.paths[len].len();
        for p in &graded.paths[len] {
            let col = n - 1 - graded.index[len][p];
            if !ideal.pivots().contains(&col) {
                basis_paths.push((0, Some(p.clone())));
            }
        }
    }
    let dim = basis_paths.len();
    let mut pos: HashMap<Path, usize> = HashMap::new();
    for (i, (_, p)) in basis_paths.iter().enumerate() {
        if let Some(p) = p {
            pos.insert(p.clone(), i);
        }
    }

    // express an arbitrary path in the basis
    let reduce_path = |p: &Path| -> Vec<F> {
        let mut out = vec![F::zero(); dim];
        let len = p.len();
        if len >= nilpotency {
            return out;
        }
        let n = graded.paths[len].len();
        let mut v = vec![F::zero(); n];
        v[graded.column(len, p)] = F::one();
        let r = graded.ideal[len].reduce(&v);
        for (col, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let path = &graded.paths[len][n - 1 - col];
            out[pos[path]] += c.clone();
        }
        out
    };

    let src_of = |b: &(usize, Option<Path>)| match &b.1 {
        None => b.0,
        Some(p) => quiver.source(p),
    };
    let tgt_of = |b: &(usize, Option<Path>)| match &b.1 {
        None => b.0,
        Some(p) => quiver.target(p),
    };

    let mut left = Vec::with_capacity(dim);
    for bi in &basis_paths {
        let mut m = Matrix::zeros(dim, dim);
        for (j, bj) in basis_paths.iter().enumerate() {
            if src_of(bi) != tgt_of(bj) {
                continue;
            }
            let prod: Vec<F> = match (&bi.1, &bj.1) {
                (None, _) => {
                    let mut e = vec![F::zero(); dim];
                    e[j] = F::one();
                    e
                }
                (Some(_), None) => {
                    let mut e = vec![F::zero(); dim];
                    e[basis_paths.iter().position(|b| b == bi).expect("basis element")] = F::one();
                    e
                }
                (Some(p), Some(q)) => {
                    let mut full = p.clone();
                    full.extend_from_slice(q);
                    reduce_path(&full)
                }
            };
            for (k, c) in prod.into_iter().enumerate() {
                m[(k, j)] = c;
            }
        }
        left.push(m);
    }

    let mut unit = vec![F::zero(); dim];
    for u in unit.iter_mut().take(quiver.nv) {
        *u = F::one();
    }
    let labels: Vec<String> = basis_paths
        .iter()
        .map(|b| match &b.1 {
            None => format!("e_{}", q.vertices[b.0]),
            Some(p) => quiver.label(p),
        })
        .collect();

    let idempotents = (0..quiver.nv)
        .map(|v| {
            let mut e = vec![F::zero(); dim];
            e[v] = F::one();
            e
        })
        .collect();
    let radical = Subspace::from_vectors(
        dim,
        (quiver.nv..dim)
            .map(|i| {
                let mut e = vec![F::zero(); dim];
                e[i] = F::one();
                e
            })
            .collect(),
    );
    let basic = BasicData { idempotents, vertex_labels: q.vertices.clone(), radical };
    let mut alg = Algebra::from_left_multiplication(labels, left, unit)?;
    alg.basic = Some(basic);
    alg.presentation = Some(q.clone());
    Ok(alg)
}

/// A path of given length, or a trivial path at a vertex when the length is 0.
enum PathOrVertex<'a> {
    Vertex(usize),
    Path(&'a Path),
}

impl PathOrVertex<'_> {
    fn src(&self, q: &Quiver) -> usize {
        match self {
            PathOrVertex::Vertex(v) => *v,
            PathOrVertex::Path(p) => q.source(p),
        }
    }

    fn tgt(&self, q: &Quiver) -> usize {
        match self {
            PathOrVertex::Vertex(v) => *v,
            PathOrVertex::Path(p) => q.target(p),
        }
    }

    fn path(&self) -> &[usize] {
        match self {
            PathOrVertex::Vertex(_) => &[],
            PathOrVertex::Path(p) => p,
        }
    }
}

fn paths_or_vertices<'a, F>(g: &'a GradedIdeal<F>, q: &Quiver, len: usize) -> Vec<PathOrVertex<'a>> {
    if len == 0 {
        (0..q.nv).map(PathOrVertex::Vertex).collect()
    } else {
        g.paths[len].iter().map(PathOrVertex::Path).collect()
    }
}
