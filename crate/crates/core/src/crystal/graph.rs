use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::Crystal;
use crate::rootdata::{CartanDatum, Weight};
use crate::{Error, Result, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// A truncation of `B(∞)`. An element whose scaled height
    /// `Σ height_scale_j · drop_j` plus `height_scale_i` is at most `depth`
    /// must carry an outgoing `i`-edge.
    Infinity { depth: usize, height_scale: Vec<i64> },
    /// A complete normal crystal `B(λ)`: `ε` and `φ` are string lengths.
    HighestWeight { lambda: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub wt: Weight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

/// `f̃_node(src) = dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub node: usize,
    pub dst: usize,
}

/// A finite crystal graph with its `wt`, `ε`, `φ` tables.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    cartan: CartanDatum,
    kind: GraphKind,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    highest: usize,
    index: HashMap<String, usize>,
    out: Vec<Vec<Option<usize>>>,
    inc: Vec<Vec<Option<usize>>>,
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
            && self.kind == other.kind
            && self.vertices == other.vertices
            && self.edges == other.edges
            && (self.vertices.is_empty() || self.highest == other.highest)
    }
}

impl CrystalGraph {
    /// Validates shapes and builds adjacency. Each element has at most one
    /// outgoing and one incoming edge per node.
    pub fn new(
        cartan: CartanDatum,
        kind: GraphKind,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        highest: usize,
    ) -> Result<Self> {
        let n = cartan.rank();
        let len = vertices.len();
        if len > 0 && highest >= len {
            return Err(Error::Shape(format!("highest index {highest} out of range")));
        }
        let mut index = HashMap::with_capacity(len);
        for (k, v) in vertices.iter().enumerate() {
            if v.wt.rank() != n || v.wt.base.len() != n || v.eps.len() != n || v.phi.len() != n {
                return Err(Error::Shape(format!("vertex {} has tables of the wrong rank", v.id)));
            }
            if index.insert(v.id.clone(), k).is_some() {
                return Err(Error::Shape(format!("duplicate vertex id {}", v.id)));
            }
        }
        let mut out = vec![vec![None; n]; len];
        let mut inc = vec![vec![None; n]; len];
        for e in &edges {
            if e.src >= len || e.dst >= len || e.node >= n {
                return Err(Error::Shape(format!("edge {e:?} out of range")));
            }
            if out[e.src][e.node].replace(e.dst).is_some() || inc[e.dst][e.node].replace(e.src).is_some() {
                return Err(Error::Shape(format!("edge {e:?} duplicates an f̃-edge")));
            }
        }
        Ok(CrystalGraph { cartan, kind, vertices, edges, highest, index, out, inc })
    }

    pub fn empty(cartan: CartanDatum, kind: GraphKind) -> Self {
        CrystalGraph::new(cartan, kind, Vec::new(), Vec::new(), 0).expect("empty graph")
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, b: usize) -> &Vertex {
        &self.vertices[b]
    }

    /// Mutable access to the tables (adjacency is fixed).
    pub fn vertex_mut(&mut self, b: usize) -> &mut Vertex {
        &mut self.vertices[b]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn highest(&self) -> usize {
        assert!(!self.is_empty(), "empty graph has no highest element");
        self.highest
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn f_edge(&self, b: usize, i: usize) -> Option<usize> {
        self.out[b][i]
    }

    pub fn e_edge(&self, b: usize, i: usize) -> Option<usize> {
        self.inc[b][i]
    }

    /// Elements with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.inc[b].iter().all(Option::is_none)).collect()
    }

    fn scaled_height(&self, b: usize, scale: &[i64]) -> i64 {
        self.vertices[b].wt.drop.iter().zip(scale).map(|(d, s)| d * s).sum()
    }

    /// Checks the crystal axioms on every element and edge. Violations are
    /// keyed by (element, node); edge rules are charged to the target.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.cartan.rank();
        let mut found: BTreeMap<(usize, Option<usize>), Vec<Rule>> = BTreeMap::new();
        let mut flag = |b: usize, i: Option<usize>, r: Rule| {
            let rules = found.entry((b, i)).or_default();
            if !rules.contains(&r) {
                rules.push(r);
            }
        };
        for (b, v) in self.vertices.iter().enumerate() {
            for i in 0..n {
                if v.phi[i] != v.eps[i] + self.cartan.pairing(i, &v.wt) {
                    flag(b, Some(i), Rule::PhiIdentity);
                }
                let mut up = 0i64;
                let mut cur = b;
                while let Some(p) = self.inc[cur][i] {
                    up += 1;
                    cur = p;
                    if up > self.len() as i64 {
                        break;
                    }
                }
                if v.eps[i] != up {
                    flag(b, Some(i), Rule::EpsilonString);
                }
                match &self.kind {
                    GraphKind::HighestWeight { .. } => {
                        let mut down = 0i64;
                        let mut cur = b;
                        while let Some(p) = self.out[cur][i] {
                            down += 1;
                            cur = p;
                            if down > self.len() as i64 {
                                break;
                            }
                        }
                        if v.phi[i] != down {
                            flag(b, Some(i), Rule::PhiString);
                        }
                    }
                    GraphKind::Infinity { depth, height_scale } => {
                        if self.out[b][i].is_none()
                            && self.scaled_height(b, height_scale) + height_scale[i] <= *depth as i64
                        {
                            flag(b, Some(i), Rule::MissingEdge);
                        }
                    }
                }
            }
        }
        for e in &self.edges {
            let (s, d) = (&self.vertices[e.src], &self.vertices[e.dst]);
            if d.wt != s.wt.minus_simple(e.node) {
                flag(e.dst, Some(e.node), Rule::EdgeWeight);
            }
            if d.eps[e.node] != s.eps[e.node] + 1 {
                flag(e.dst, Some(e.node), Rule::EdgeEpsilon);
            }
        }
        if !self.is_empty() {
            // every element is reachable from the highest one
            let mut seen = vec![false; self.len()];
            let mut queue = VecDeque::from([self.highest]);
            seen[self.highest] = true;
            while let Some(b) = queue.pop_front() {
                for i in 0..n {
                    if let Some(c) = self.out[b][i] {
                        if !std::mem::replace(&mut seen[c], true) {
                            queue.push_back(c);
                        }
                    }
                }
            }
            for (b, s) in seen.iter().enumerate() {
                if !s {
                    flag(b, None, Rule::Unreachable);
                }
            }
        }
        let violations = found
            .into_iter()
            .map(|((b, i), rules)| Violation {
                element: self.vertices[b].id.clone(),
                node: i.map(|i| self.cartan.nodes()[i].clone()),
                rules,
            })
            .collect();
        AxiomReport { violations }
    }

    pub fn to_json_string(&self, folding: Option<&FoldingBlock>) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json(folding)).expect("graph serializes");
        s.push('\n');
        s
    }

    fn to_json(&self, folding: Option<&FoldingBlock>) -> GraphJson {
        let nodes = self.cartan.nodes();
        let table = |t: &[i64]| -> IndexMap<String, i64> { nodes.iter().cloned().zip(t.iter().copied()).collect() };
        let (lambda, depth, height_scale) = match &self.kind {
            GraphKind::HighestWeight { lambda } => (Some(lambda.clone()), None, None),
            GraphKind::Infinity { depth, height_scale } => (None, Some(*depth), Some(height_scale.clone())),
        };
        GraphJson {
            schema: SCHEMA.to_string(),
            cartan: self.cartan.clone(),
            highest: (!self.is_empty()).then(|| self.vertices[self.highest].id.clone()),
            lambda,
            depth,
            height_scale,
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson { id: v.id.clone(), wt: v.wt.clone(), eps: table(&v.eps), phi: table(&v.phi) })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    src: self.vertices[e.src].id.clone(),
                    node: nodes[e.node].clone(),
                    dst: self.vertices[e.dst].id.clone(),
                })
                .collect(),
            folding: folding.cloned(),
        }
    }

    /// Parses the JSON document; returns the graph and its folding block.
    pub fn from_json(text: &str) -> Result<(Self, Option<FoldingBlock>)> {
        let raw: GraphJson = serde_json::from_str(text)?;
        if raw.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {:?}", raw.schema)));
        }
        let cartan = raw.cartan;
        let n = cartan.rank();
        let table = |m: &IndexMap<String, i64>| -> Result<Vec<i64>> {
            let mut t = vec![0; n];
            if m.len() != n {
                return Err(Error::Shape("ε/φ table does not cover every node".into()));
            }
            for (k, v) in m {
                t[cartan.node_index(k)?] = *v;
            }
            Ok(t)
        };
        let vertices = raw
            .vertices
            .iter()
            .map(|v| Ok(Vertex { id: v.id.clone(), wt: v.wt.clone(), eps: table(&v.eps)?, phi: table(&v.phi)? }))
            .collect::<Result<Vec<_>>>()?;
        let ids: HashMap<&str, usize> = vertices.iter().enumerate().map(|(k, v)| (v.id.as_str(), k)).collect();
        let lookup = |id: &str| ids.get(id).copied().ok_or_else(|| Error::Parse(format!("unknown vertex {id:?}")));
        let edges = raw
            .edges
            .iter()
            .map(|e| Ok(Edge { src: lookup(&e.src)?, node: cartan.node_index(&e.node)?, dst: lookup(&e.dst)? }))
            .collect::<Result<Vec<_>>>()?;
        let highest = match &raw.highest {
            Some(id) => lookup(id)?,
            None => 0,
        };
        let kind = match (raw.lambda, raw.depth) {
            (Some(lambda), None) => GraphKind::HighestWeight { lambda },
            (None, Some(depth)) => {
                GraphKind::Infinity { depth, height_scale: raw.height_scale.unwrap_or_else(|| vec![1; n]) }
            }
            _ => return Err(Error::Parse("exactly one of lambda/depth must be present".into())),
        };
        Ok((CrystalGraph::new(cartan, kind, vertices, edges, highest)?, raw.folding))
    }

    /// Graphviz rendering: vertices labelled by `(base;drop)`, edges by node.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{}\"];", v.wt);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.src, e.dst, self.cartan.nodes()[e.node]);
        }
        s.push_str("}\n");
        s
    }

    /// One line per element: id, weight, ε and φ tables.
    pub fn to_table(&self) -> String {
        let join = |t: &[i64]| t.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "{}\t{}\teps=({})\tphi=({})", v.id, v.wt, join(&v.eps), join(&v.phi));
        }
        s
    }
}

impl Crystal for CrystalGraph {
    type Elem = usize;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn highest(&self) -> usize {
        CrystalGraph::highest(self)
    }

    fn f(&self, b: &usize, i: usize) -> Option<usize> {
        self.out[*b][i]
    }

    fn e(&self, b: &usize, i: usize) -> Option<usize> {
        self.inc[*b][i]
    }

    fn epsilon(&self, b: &usize, i: usize) -> i64 {
        self.vertices[*b].eps[i]
    }

    fn phi(&self, b: &usize, i: usize) -> i64 {
        self.vertices[*b].phi[i]
    }

    fn wt(&self, b: &usize) -> Weight {
        self.vertices[*b].wt.clone()
    }

    fn id(&self, b: &usize) -> String {
        self.vertices[*b].id.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// `φ_i = ε_i + ⟨h_i, wt⟩`
    PhiIdentity,
    /// `wt(f̃_i b) = wt(b) − α_i`
    EdgeWeight,
    /// `ε_i(f̃_i b) = ε_i(b) + 1`
    EdgeEpsilon,
    /// `ε_i` is the `ẽ_i`-string length
    EpsilonString,
    /// `φ_i` is the `f̃_i`-string length (complete graphs)
    PhiString,
    /// `f̃_i` missing below the truncation depth of `B(∞)`
    MissingEdge,
    Unreachable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub element: String,
    pub node: Option<String>,
    pub rules: Vec<Rule>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Extra block attached to folded crystals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingBlock {
    pub orbits: Vec<Vec<String>>,
    pub source_graph_ref: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<IndexMap<String, String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    schema: String,
    cartan: CartanDatum,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    highest: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    height_scale: Option<Vec<i64>>,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    folding: Option<FoldingBlock>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    wt: Weight,
    eps: IndexMap<String, i64>,
    phi: IndexMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    src: String,
    node: String,
    dst: String,
}

/// Number of elements of each weight.
pub fn character(g: &CrystalGraph) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for v in g.vertices() {
        *out.entry(v.wt.clone()).or_insert(0) += 1;
    }
    out
}

/// The unique bijection `g1 → g2` sending highest to highest and
/// commuting with every `f̃_i` while preserving `wt`, `ε` and `φ`, if any.
/// Both graphs must have exactly one element without incoming edges.
/// Node labels are compared by index; the Cartan matrices must agree.
pub fn isomorphic(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<Option<Vec<usize>>> {
    for g in [g1, g2] {
        let s = g.sources();
        if s.len() != 1 {
            return Err(Error::HighestNotUnique(s.len()));
        }
    }
    if g1.cartan().matrix() != g2.cartan().matrix() || g1.len() != g2.len() || g1.edges().len() != g2.edges().len() {
        return Ok(None);
    }
    let n = g1.cartan().rank();
    let (h1, h2) = (g1.sources()[0], g2.sources()[0]);
    let mut map: Vec<Option<usize>> = vec![None; g1.len()];
    let mut used = vec![false; g2.len()];
    map[h1] = Some(h2);
    used[h2] = true;
    let mut queue = VecDeque::from([h1]);
    while let Some(b) = queue.pop_front() {
        let c = map[b].expect("queued elements are mapped");
        let (vb, vc) = (g1.vertex(b), g2.vertex(c));
        if vb.wt != vc.wt || vb.eps != vc.eps || vb.phi != vc.phi {
            return Ok(None);
        }
        for i in 0..n {
            match (g1.f_edge(b, i), g2.f_edge(c, i)) {
                (None, None) => {}
                (Some(b2), Some(c2)) => match map[b2] {
                    Some(x) if x != c2 => return Ok(None),
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut used[c2], true) {
                            return Ok(None);
                        }
                        map[b2] = Some(c2);
                        queue.push_back(b2);
                    }
                },
                _ => return Ok(None),
            }
        }
    }
    Ok(map.into_iter().collect())
}
