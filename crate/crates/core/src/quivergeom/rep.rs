use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::linalg::{QMatrix, Rational};
use crate::rootdata::Quiver;
use crate::{Error, Result, SCHEMA};

/// Vector spaces `V_i = ℚ^{dims[i]}` and, for every oriented edge `h`,
/// a matrix `x_h : V_{out h} → V_{inc h}` (shape `dims[inc] × dims[out]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<QMatrix>,
}

impl QuiverRep {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<QMatrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrow_count() {
            return Err(Error::Shape("dimension vector or map list does not match the quiver".into()));
        }
        for (h, m) in maps.iter().enumerate() {
            let want = (dims[quiver.inc(h)], dims[quiver.out(h)]);
            if m.shape() != want {
                return Err(Error::Shape(format!("x_{h} is {:?}, expected {want:?}", m.shape())));
            }
        }
        Ok(QuiverRep { quiver, dims, maps })
    }

    pub fn zero(quiver: Quiver, dims: Vec<usize>) -> Self {
        let maps = (0..quiver.arrow_count()).map(|h| QMatrix::zeros(dims[quiver.inc(h)], dims[quiver.out(h)])).collect();
        QuiverRep::new(quiver, dims, maps).expect("zero maps have the right shape")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, h: usize) -> &QMatrix {
        &self.maps[h]
    }

    pub fn set_map(&mut self, h: usize, m: QMatrix) -> Result<()> {
        let want = (self.dims[self.quiver.inc(h)], self.dims[self.quiver.out(h)]);
        if m.shape() != want {
            return Err(Error::Shape(format!("x_{h} is {:?}, expected {want:?}", m.shape())));
        }
        self.maps[h] = m;
        Ok(())
    }
}

/// A point `(x, t)` with framing `W_i = ℚ^{wdims[i]}` and `t_i : V_i → W_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakajimaPoint {
    rep: QuiverRep,
    wdims: Vec<usize>,
    t: Vec<QMatrix>,
}

impl NakajimaPoint {
    pub fn new(rep: QuiverRep, wdims: Vec<usize>, t: Vec<QMatrix>) -> Result<Self> {
        let n = rep.quiver.vertex_count();
        if wdims.len() != n || t.len() != n {
            return Err(Error::Shape("framing does not match the quiver".into()));
        }
        for i in 0..n {
            if t[i].shape() != (wdims[i], rep.dims[i]) {
                return Err(Error::Shape(format!("t_{i} is {:?}, expected {:?}", t[i].shape(), (wdims[i], rep.dims[i]))));
            }
        }
        Ok(NakajimaPoint { rep, wdims, t })
    }

    pub fn rep(&self) -> &QuiverRep {
        &self.rep
    }

    pub fn wdims(&self) -> &[usize] {
        &self.wdims
    }

    pub fn t(&self, i: usize) -> &QMatrix {
        &self.t[i]
    }

    pub fn to_json_string(&self) -> String {
        let q = &self.rep.quiver;
        let name = |i: usize| q.name(i).to_string();
        let raw = PointJson {
            schema: SCHEMA.to_string(),
            quiver: q.to_json(),
            dims: (0..q.vertex_count()).map(|i| (name(i), self.rep.dims[i])).collect(),
            wdims: (0..q.vertex_count()).map(|i| (name(i), self.wdims[i])).collect(),
            maps: (0..q.arrow_count())
                .map(|h| MapJson { edge: [name(q.out(h)), name(q.inc(h))], matrix: to_strings(&self.rep.maps[h]) })
                .collect(),
            t: (0..q.vertex_count()).map(|i| (name(i), to_strings(&self.t[i]))).collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("point serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PointJson = serde_json::from_str(text)?;
        if raw.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {:?}", raw.schema)));
        }
        let q = Quiver::from_json(&raw.quiver.to_string())?;
        let n = q.vertex_count();
        let table = |m: &IndexMap<String, usize>| -> Result<Vec<usize>> {
            let mut out = vec![0; n];
            for (k, &v) in m {
                out[q.index_of(k)?] = v;
            }
            Ok(out)
        };
        let dims = table(&raw.dims)?;
        let wdims = table(&raw.wdims)?;
        let mut maps: Vec<Option<QMatrix>> = vec![None; q.arrow_count()];
        for m in &raw.maps {
            let (u, v) = (q.index_of(&m.edge[0])?, q.index_of(&m.edge[1])?);
            let h = (0..q.arrow_count())
                .find(|&h| maps[h].is_none() && q.out(h) == u && q.inc(h) == v)
                .ok_or_else(|| Error::Parse(format!("no free arrow {} → {}", m.edge[0], m.edge[1])))?;
            maps[h] = Some(from_strings(&m.matrix, dims[v], dims[u])?);
        }
        let maps = (0..q.arrow_count())
            .map(|h| maps[h].take().unwrap_or_else(|| QMatrix::zeros(dims[q.inc(h)], dims[q.out(h)])))
            .collect();
        let mut t: Vec<QMatrix> = (0..n).map(|i| QMatrix::zeros(wdims[i], dims[i])).collect();
        for (k, rows) in &raw.t {
            let i = q.index_of(k)?;
            t[i] = from_strings(rows, wdims[i], dims[i])?;
        }
        NakajimaPoint::new(QuiverRep::new(q, dims, maps)?, wdims, t)
    }
}

fn to_strings(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect()
}

fn from_strings(rows: &[Vec<String>], r: usize, c: usize) -> Result<QMatrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Shape(format!("expected a {r}×{c} matrix")));
    }
    let data = rows
        .iter()
        .flatten()
        .map(|s| s.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("bad rational {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_rows(r, c, data))
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    schema: String,
    quiver: serde_json::Value,
    dims: IndexMap<String, usize>,
    wdims: IndexMap<String, usize>,
    maps: Vec<MapJson>,
    #[serde(default)]
    t: IndexMap<String, Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    edge: [String; 2],
    matrix: Vec<Vec<String>>,
}
