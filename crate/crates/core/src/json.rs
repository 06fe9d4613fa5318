//! JSON forms of the exchange types.
//!
//! Letters use the signed-integer syntax everywhere. The formats:
//!
//! * tableau: `{"type":"c","shape":[2,2],"rows":[[-2,1],[-1,2]]}`
//! * column: a one-column tableau
//! * biword: `{"type":"c","rows":[[1],[-1],[1],[-1]]}`, with an optional
//!   `"labels"` array when the y-labels are not `1..k`
//! * column sequence: `{"type":"d","columns":[[1],[-1]]}`, same label rule
//! * recording tableau: `{"shape":[2,2],"rows":[[1,2],[3,4]]}`
//! * symbol pair: `{"P": <tableau>, "Q": <recording>}`
//!
//! Serialization is deterministic: maps are emitted with fixed key order.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::letters::{Letter, LieType, Word};
use crate::partition::Partition;
use crate::rs::{Biword, ColumnSeq, RecordingTableau};
use crate::tableau::{Column, Tableau};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn ty_of(v: &Value) -> Result<LieType> {
    v.get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"type\""))?
        .parse()
}

fn letter_rows(v: &Value, field: &str) -> Result<Vec<Vec<Letter>>> {
    let rows = v
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| bad(format!("missing \"{field}\" array")))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad(format!("\"{field}\" must hold arrays")))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .map(|v| Letter::new(v as i32))
                        .ok_or_else(|| bad("letters must be integers"))
                })
                .collect()
        })
        .collect()
}

fn shape_field(v: &Value) -> Result<Option<Partition>> {
    match v.get("shape") {
        None => Ok(None),
        Some(s) => {
            let parts = s
                .as_array()
                .ok_or_else(|| bad("\"shape\" must be an array"))?
                .iter()
                .map(|p| {
                    p.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| bad("bad shape part"))
                })
                .collect::<Result<Vec<u32>>>()?;
            Partition::new(parts).map(Some)
        }
    }
}

pub fn tableau_to_json(t: &Tableau) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), json!(t.ty().to_string()));
    m.insert(
        "shape".into(),
        json!(t.rows().iter().map(|r| r.len()).collect::<Vec<_>>()),
    );
    m.insert(
        "rows".into(),
        json!(t
            .rows()
            .iter()
            .map(|r| r.iter().map(|l| l.value()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    );
    Value::Object(m)
}

pub fn tableau_from_json(v: &Value) -> Result<Tableau> {
    let ty = ty_of(v)?;
    let rows = letter_rows(v, "rows")?;
    let t = Tableau::new(rows, ty)?;
    if let Some(shape) = shape_field(v)? {
        if t.shape()? != shape {
            return Err(bad("declared shape does not match the rows"));
        }
    }
    Ok(t)
}

pub fn column_from_json(v: &Value) -> Result<Column> {
    let t = tableau_from_json(v)?;
    let cells: Vec<Letter> = t.rows().iter().map(|r| r[0]).collect();
    if t.rows().iter().any(|r| r.len() != 1) {
        return Err(bad("a column is a one-column tableau"));
    }
    Column::new(cells, t.ty())
}

pub fn biword_to_json(b: &Biword) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), json!(b.ty().to_string()));
    m.insert(
        "rows".into(),
        json!(b
            .rows()
            .iter()
            .map(|r| r.iter().map(|l| l.value()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    );
    let canonical = b
        .labels()
        .iter()
        .enumerate()
        .all(|(k, &l)| l == k as u32 + 1);
    if !canonical {
        m.insert("labels".into(), json!(b.labels()));
    }
    Value::Object(m)
}

pub fn biword_from_json(v: &Value) -> Result<Biword> {
    let ty = ty_of(v)?;
    let rows = letter_rows(v, "rows")?;
    match v.get("labels") {
        None => Biword::new(rows, ty),
        Some(ls) => {
            let labels = ls
                .as_array()
                .ok_or_else(|| bad("\"labels\" must be an array"))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32).ok_or_else(|| bad("bad label")))
                .collect::<Result<Vec<u32>>>()?;
            Biword::with_labels(rows, labels, ty)
        }
    }
}

pub fn column_seq_to_json(b: &ColumnSeq) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), json!(b.ty().to_string()));
    m.insert(
        "columns".into(),
        json!(b
            .columns()
            .iter()
            .map(|c| c.cells().iter().map(|l| l.value()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    );
    let canonical = b
        .labels()
        .iter()
        .enumerate()
        .all(|(k, &l)| l == k as u32 + 1);
    if !canonical {
        m.insert("labels".into(), json!(b.labels()));
    }
    Value::Object(m)
}

pub fn column_seq_from_json(v: &Value) -> Result<ColumnSeq> {
    let ty = ty_of(v)?;
    let cols = letter_rows(v, "columns")?
        .into_iter()
        .map(|cells| Column::new(cells, ty))
        .collect::<Result<Vec<Column>>>()?;
    match v.get("labels") {
        None => ColumnSeq::new(cols, ty),
        Some(ls) => {
            let labels = ls
                .as_array()
                .ok_or_else(|| bad("\"labels\" must be an array"))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32).ok_or_else(|| bad("bad label")))
                .collect::<Result<Vec<u32>>>()?;
            ColumnSeq::with_labels(cols, labels, ty)
        }
    }
}

pub fn recording_to_json(t: &RecordingTableau) -> Value {
    let mut m = Map::new();
    m.insert(
        "shape".into(),
        json!(t.rows().iter().map(|r| r.len()).collect::<Vec<_>>()),
    );
    m.insert("rows".into(), json!(t.rows()));
    Value::Object(m)
}

pub fn recording_from_json(v: &Value) -> Result<RecordingTableau> {
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"rows\" array"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("\"rows\" must hold arrays"))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32).ok_or_else(|| bad("bad entry")))
                .collect()
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    RecordingTableau::new(rows)
}

pub fn pair_to_json(p: &Tableau, q: &RecordingTableau) -> Value {
    let mut m = Map::new();
    m.insert("P".into(), tableau_to_json(p));
    m.insert("Q".into(), recording_to_json(q));
    Value::Object(m)
}

pub fn word_to_json(w: &Word) -> Value {
    json!(w.letters().iter().map(|l| l.value()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_roundtrip() {
        let v: Value =
            serde_json::from_str(r#"{"type":"c","shape":[2,2],"rows":[[-2,1],[-1,2]]}"#).unwrap();
        let t = tableau_from_json(&v).unwrap();
        assert_eq!(t.ty(), LieType::C);
        let back = tableau_to_json(&t);
        assert_eq!(tableau_from_json(&back).unwrap(), t);
        // shape mismatch is rejected
        let v: Value =
            serde_json::from_str(r#"{"type":"c","shape":[2],"rows":[[-2,1],[-1,2]]}"#).unwrap();
        assert!(tableau_from_json(&v).is_err());
    }

    #[test]
    fn biword_roundtrip() {
        let v: Value = serde_json::from_str(r#"{"type":"c","rows":[[1],[-1],[1],[-1]]}"#).unwrap();
        let b = biword_from_json(&v).unwrap();
        assert_eq!(b.labels(), &[1, 2, 3, 4]);
        assert_eq!(biword_from_json(&biword_to_json(&b)).unwrap(), b);
        let v: Value =
            serde_json::from_str(r#"{"type":"c","rows":[[1],[-1]],"labels":[2,5]}"#).unwrap();
        let b = biword_from_json(&v).unwrap();
        assert_eq!(b.labels(), &[2, 5]);
        let j = biword_to_json(&b);
        assert!(j.get("labels").is_some());
        assert_eq!(biword_from_json(&j).unwrap(), b);
    }

    #[test]
    fn column_as_one_column_tableau() {
        let v: Value =
            serde_json::from_str(r#"{"type":"b","rows":[[-3],[-1],[0],[1],[2]]}"#).unwrap();
        let c = column_from_json(&v).unwrap();
        assert_eq!(c.height(), 5);
        assert!(c.is_column());
        let wide: Value = serde_json::from_str(r#"{"type":"b","rows":[[-3,-1]]}"#).unwrap();
        assert!(column_from_json(&wide).is_err());
    }

    #[test]
    fn recording_roundtrip() {
        let v: Value = serde_json::from_str(r#"{"rows":[[1,2],[3,4]]}"#).unwrap();
        let t = recording_from_json(&v).unwrap();
        assert_eq!(recording_from_json(&recording_to_json(&t)).unwrap(), t);
        let bad: Value = serde_json::from_str(r#"{"rows":[[2,1]]}"#).unwrap();
        assert!(recording_from_json(&bad).is_err());
    }
}
